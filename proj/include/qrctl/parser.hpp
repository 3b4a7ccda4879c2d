/*
 * Copyright 2026 The qrctl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QRCTL_PARSER_HPP
#define QRCTL_PARSER_HPP

#include "qrctl/formula.hpp"

#include <string_view>

namespace qrctl {

/// Parses a QRCTL* state formula.
///
/// Precedence from tightest: unary (!, X, F, G), then U and W (right
/// associative), then &, then |, then -> (right associative). A quantifier
/// scopes over one U/W-level path, so "Eas q U r" reads as "Eas (q U r)".
/// ATL aliases: <1> = Esure, <1,p> = Eex, <p> = Aex, <0> = Asure.
StateFormula parse(std::string_view text);

/// Parses a path formula (the operand of a quantifier).
PathFormula parse_path(std::string_view text);

}  // namespace qrctl

#endif
