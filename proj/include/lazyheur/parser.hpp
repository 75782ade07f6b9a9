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

#pragma once

#include <string_view>

#include "lazyheur/ast.hpp"

namespace lazyheur {

struct ParseOptions {
  /// Accept identifiers with the reserved `_` prefix (complement and other
  /// internal predicates); used when re-reading normalized output.
  bool allow_internal = false;
};

/// Parses ASP-lite source into an un-normalized Program.
///
/// Accepts `:-` or `←` as rule arrow, `%` line comments, the Unicode
/// comparison glyphs `≤ ≥ ≠`, and `−` as a sign. Throws Error with
/// E_SYNTAX (message prefixed with `line:col:`), E_UNSUPPORTED_BOUNDS for
/// bounded choice heads and upper-bounded aggregates, and E_UNSUPPORTED for
/// function symbols and features outside the language.
Program parse(std::string_view text, const ParseOptions& opts = {});

}  // namespace lazyheur
