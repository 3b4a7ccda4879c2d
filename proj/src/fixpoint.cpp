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

#include "qrctl/fixpoint.hpp"

namespace qrctl {

StateSet pre(const Mdp& m, const StateSet& x) {
    StateSet out = empty_set(m.num_states());
    for (std::size_t c = 0; c < m.num_choices(); ++c) {
        const StateId s = m.choice_source(c);
        if (out.test(s)) continue;
        for (StateId t : m.support(c))
            if (x.test(t)) {
                out.set(s);
                break;
            }
    }
    return out;
}

StateSet cpre(const Mdp& m, const StateSet& x) {
    StateSet out = empty_set(m.num_states());
    for (std::size_t c = 0; c < m.num_choices(); ++c) {
        const StateId s = m.choice_source(c);
        if (out.test(s)) continue;
        bool all = true;
        for (StateId t : m.support(c))
            if (!x.test(t)) {
                all = false;
                break;
            }
        if (all) out.set(s);
    }
    return out;
}

StateSet apre(const Mdp& m, const StateSet& y, const StateSet& x) {
    StateSet out = empty_set(m.num_states());
    for (std::size_t c = 0; c < m.num_choices(); ++c) {
        const StateId s = m.choice_source(c);
        if (out.test(s)) continue;
        bool inside = true, hit = false;
        for (StateId t : m.support(c)) {
            if (!y.test(t)) {
                inside = false;
                break;
            }
            hit = hit || x.test(t);
        }
        if (inside && hit) out.set(s);
    }
    return out;
}

}  // namespace qrctl
