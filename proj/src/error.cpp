// Copyright 2026 The lazyheur Authors.
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

#include "lazyheur/error.hpp"

namespace lazyheur {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "E_SYNTAX";
    case ErrorCode::Unsupported: return "E_UNSUPPORTED";
    case ErrorCode::UnsupportedBounds: return "E_UNSUPPORTED_BOUNDS";
    case ErrorCode::Unsafe: return "E_UNSAFE";
    case ErrorCode::Eval: return "E_EVAL";
    case ErrorCode::TooLarge: return "E_TOO_LARGE";
    case ErrorCode::Args: return "E_ARGS";
    case ErrorCode::Io: return "E_IO";
  }
  return "E_UNKNOWN";
}

}  // namespace lazyheur
