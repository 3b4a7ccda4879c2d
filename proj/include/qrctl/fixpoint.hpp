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

#ifndef QRCTL_FIXPOINT_HPP
#define QRCTL_FIXPOINT_HPP

#include "qrctl/error.hpp"
#include "qrctl/mdp.hpp"

#include <cstddef>
#include <utility>

namespace qrctl {

/// States with some action that can reach X in one step.
StateSet pre(const Mdp& m, const StateSet& x);

/// States with some action whose every successor is in X.
StateSet cpre(const Mdp& m, const StateSet& x);

/// States with some action whose successors all lie in Y and at least one lies in X.
StateSet apre(const Mdp& m, const StateSet& y, const StateSet& x);

namespace detail {

template <class F>
StateSet iterate(StateSet x, F& f, bool increasing) {
    const std::size_t n = x.size();
    // A monotone operator stabilizes after at most n strict steps plus one confirming step.
    for (std::size_t k = 0; k <= n + 1; ++k) {
        StateSet y = f(static_cast<const StateSet&>(x));
        if (y.size() != n) throw NonConvergence("operator changed the universe size");
        if (y == x) return x;
        if (increasing ? !x.is_subset_of(y) : !y.is_subset_of(x))
            throw NonConvergence("operator is not monotone on the iteration chain");
        x = std::move(y);
    }
    throw NonConvergence("no fixpoint after |S|+1 iterations");
}

}  // namespace detail

/// Least fixpoint by Kleene iteration from the empty set.
template <class F>
StateSet lfp(std::size_t n, F&& f) {
    return detail::iterate(empty_set(n), f, true);
}

/// Greatest fixpoint by Kleene iteration from the full set.
template <class F>
StateSet gfp(std::size_t n, F&& f) {
    return detail::iterate(full_set(n), f, false);
}

}  // namespace qrctl

#endif
