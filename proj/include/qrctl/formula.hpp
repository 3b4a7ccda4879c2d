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

#ifndef QRCTL_FORMULA_HPP
#define QRCTL_FORMULA_HPP

#include <memory>
#include <string>
#include <string_view>

namespace qrctl {

enum class Mode { sure, almost, pos, nullo };
enum class Polarity { exists, forall };

struct Quantifier {
    Polarity polarity;
    Mode mode;
    friend bool operator==(const Quantifier&, const Quantifier&) = default;
};

inline constexpr Quantifier kAllQuantifiers[] = {
    {Polarity::exists, Mode::sure},  {Polarity::forall, Mode::sure},  {Polarity::exists, Mode::almost},
    {Polarity::forall, Mode::almost}, {Polarity::exists, Mode::pos},   {Polarity::forall, Mode::pos},
    {Polarity::exists, Mode::nullo}, {Polarity::forall, Mode::nullo},
};

/// Concrete token: Esure, Asure, Eas, Aas, Epos, Apos, Eex, Aex.
std::string_view to_string(Quantifier q);
std::string_view to_string(Mode m);

/// The existential mode whose negation expresses the universal one: Asure = !Eex!, Aas = !Epos!, ...
Mode dual(Mode m);

struct StateNode;
struct PathNode;
using StateFormula = std::shared_ptr<const StateNode>;
using PathFormula = std::shared_ptr<const PathNode>;

struct StateNode {
    enum class Kind { True, Atom, Not, Or, Quant };
    Kind kind;
    std::string atom;
    StateFormula lhs;
    StateFormula rhs;
    Quantifier quantifier{};
    PathFormula path;
};

struct PathNode {
    enum class Kind { State, Not, Or, Next, Until, WaitFor };
    Kind kind;
    StateFormula state;
    PathFormula lhs;
    PathFormula rhs;
};

// State-formula constructors. Conjunction and implication are sugar over ! and |.
StateFormula truth();
StateFormula falsity();
StateFormula atom(std::string name);
StateFormula negate(StateFormula f);
StateFormula disjoin(StateFormula a, StateFormula b);
StateFormula conjoin(StateFormula a, StateFormula b);
StateFormula implies(StateFormula a, StateFormula b);
StateFormula quantify(Quantifier q, PathFormula path);

// Path-formula constructors. A path built only from state formulas and boolean
// connectives collapses into a single embedded state formula, so temporal-free
// subtrees are always represented by one State node.
PathFormula embed(StateFormula f);
PathFormula negate(PathFormula f);
PathFormula disjoin(PathFormula a, PathFormula b);
PathFormula conjoin(PathFormula a, PathFormula b);
PathFormula next(PathFormula f);
PathFormula until(PathFormula a, PathFormula b);
PathFormula wait_for(PathFormula a, PathFormula b);
PathFormula eventually(PathFormula f);  // true U f
PathFormula always(PathFormula f);      // f W !true

bool equal(const StateFormula& a, const StateFormula& b);
bool equal(const PathFormula& a, const PathFormula& b);

/// Canonical concrete syntax; parse(to_string(f)) is structurally equal to f.
std::string to_string(const StateFormula& f);
std::string to_string(const PathFormula& f);

bool is_temporal(const PathFormula& f);

}  // namespace qrctl

#endif
