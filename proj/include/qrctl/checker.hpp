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

#ifndef QRCTL_CHECKER_HPP
#define QRCTL_CHECKER_HPP

#include "qrctl/formula.hpp"
#include "qrctl/mdp.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace qrctl {

StateSet ex_next(Mode mode, const Mdp& m, const StateSet& q);
StateSet ex_until(Mode mode, const Mdp& m, const StateSet& q, const StateSet& r);
/// Weak until: q holds up to a position where q and r both hold, or forever.
StateSet ex_wait(Mode mode, const Mdp& m, const StateSet& q, const StateSet& r);

struct TraceEntry {
    std::string formula;
    StateSet states;
};

/// Bottom-up QRCTL evaluator bound to one model.
///
/// Extra pseudo-atoms can be bound to arbitrary state sets; they shadow model
/// propositions of the same name.
class Checker {
public:
    explicit Checker(const Mdp& m) : m_(m) {}

    void bind(std::string name, StateSet states);

    /// Throws NotQrctl when a quantifier scopes over more than one temporal operator.
    StateSet check(const StateFormula& f);

    /// Subformula results of the dualized formulas, innermost first.
    const std::vector<TraceEntry>& trace() const noexcept { return trace_; }

private:
    const Mdp& m_;
    std::map<std::string, StateSet, std::less<>> bound_;
    std::unordered_map<const StateNode*, StateSet> memo_;
    std::vector<StateFormula> keep_;
    std::vector<TraceEntry> trace_;

    const StateSet& eval(const StateFormula& f);
    StateSet eval_quantified(Quantifier q, const PathFormula& path);
    StateSet operand(const PathFormula& p);
};

StateSet check(const Mdp& m, const StateFormula& f);

/// Same as check; ATL aliases are already resolved by the parser.
StateSet check_atl(const Mdp& m, const StateFormula& f);

/// Evaluates (<1> X (phi & psi)) | (<0> X phi & <p> X psi) with phi, psi bound to the given sets.
/// Throws NotAlternating unless the model is an alternating MDP.
StateSet eval_F_apre(const Mdp& m, const StateSet& phi, const StateSet& psi);

/// The same formula without the alternation precondition.
StateSet eval_F_apre_unchecked(const Mdp& m, const StateSet& phi, const StateSet& psi);

}  // namespace qrctl

#endif
