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

#ifndef QRCTL_STATE_SET_HPP
#define QRCTL_STATE_SET_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace qrctl {

using StateId = std::uint32_t;

/// A subset of the states of one model, indexed densely.
using StateSet = boost::dynamic_bitset<std::uint64_t>;

inline StateSet empty_set(std::size_t n) { return StateSet(n); }

inline StateSet full_set(std::size_t n) {
    StateSet s(n);
    s.set();
    return s;
}

inline StateSet make_set(std::size_t n, std::initializer_list<StateId> members) {
    StateSet s(n);
    for (StateId m : members) s.set(m);
    return s;
}

inline StateSet make_set(std::size_t n, const std::vector<StateId>& members) {
    StateSet s(n);
    for (StateId m : members) s.set(m);
    return s;
}

inline std::vector<StateId> members(const StateSet& s) {
    std::vector<StateId> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != StateSet::npos; i = s.find_next(i)) out.push_back(static_cast<StateId>(i));
    return out;
}

/// Applies `fn(StateId)` to every member in increasing order.
template <typename Fn>
void for_each_member(const StateSet& s, Fn&& fn) {
    for (auto i = s.find_first(); i != StateSet::npos; i = s.find_next(i)) fn(static_cast<StateId>(i));
}

}  // namespace qrctl

#endif
