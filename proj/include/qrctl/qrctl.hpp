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

#ifndef QRCTL_QRCTL_HPP
#define QRCTL_QRCTL_HPP

#include "qrctl/checker.hpp"
#include "qrctl/equivalence.hpp"
#include "qrctl/error.hpp"
#include "qrctl/fixpoint.hpp"
#include "qrctl/formula.hpp"
#include "qrctl/mdp.hpp"
#include "qrctl/model_io.hpp"
#include "qrctl/oracle.hpp"
#include "qrctl/parser.hpp"
#include "qrctl/rabin.hpp"
#include "qrctl/reference_models.hpp"
#include "qrctl/transform.hpp"

#endif
