// Copyright 2026 The trillt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace trillt {

// Error categories; numeric values double as CLI exit codes.
enum class ErrorCode : int {
  param = 2,
  numeric = 3,
  underpowered = 4,
  io = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_param(const std::string& what) {
  throw Error(ErrorCode::param, what);
}
[[noreturn]] inline void throw_numeric(const std::string& what) {
  throw Error(ErrorCode::numeric, what);
}
[[noreturn]] inline void throw_underpowered(const std::string& what) {
  throw Error(ErrorCode::underpowered, what);
}
[[noreturn]] inline void throw_io(const std::string& what) {
  throw Error(ErrorCode::io, what);
}

}  // namespace trillt
