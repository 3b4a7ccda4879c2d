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

#ifndef QRCTL_REFERENCE_MODELS_HPP
#define QRCTL_REFERENCE_MODELS_HPP

#include "qrctl/mdp.hpp"

namespace qrctl::reference {

/// s (q) moves to s or t with probability 1/2 each; t (r) loops.
Mdp two_state_chain();

/// s and s' (unlabeled) both pick between u (q) and v (r); s' can also flip a coin between them.
Mdp convex_combination_mdp();

/// s and t (unlabeled) are related by every next-step operator, yet only s can
/// reach the q-sink g with probability 1. d is an r-sink.
Mdp almost_sure_separation_mdp();

/// s1..s4 (unlabeled), an r-sink g and a q-sink d. s2, s3 and s4 have
/// isomorphic one-step futures, but only s2 can reach g almost surely (via s1).
Mdp one_neighbourhood_family();


}  // namespace qrctl::reference

#endif
