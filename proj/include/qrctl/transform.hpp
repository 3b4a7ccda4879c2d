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

#ifndef QRCTL_TRANSFORM_HPP
#define QRCTL_TRANSFORM_HPP

#include "qrctl/formula.hpp"

#include <string>
#include <vector>

namespace qrctl {

enum class Fragment { qrctl, qrctl_star, pos, sure, next_only };

std::string_view to_string(Fragment f);

/// Fragment membership. Tags overlap: every formula is QRCTL*, and the pos,
/// sure and next-only tags are only given to QRCTL formulas.
struct Fragments {
    bool qrctl = false;
    bool qrctl_star = true;
    bool pos = false;
    bool sure = false;
    bool next_only = false;

    bool contains(Fragment f) const;
    std::vector<Fragment> tags() const;
};

Fragments classify(const StateFormula& f);

/// True when the path is a single temporal operator over state formulas,
/// possibly under negations, or a plain state formula.
bool is_simple_path(const PathFormula& p);

/// Rewrites every universal quantifier into a negated existential one and
/// pushes path negations through X, U and W. Shared subformulas stay shared.
StateFormula dualize(const StateFormula& f);

}  // namespace qrctl

#endif
