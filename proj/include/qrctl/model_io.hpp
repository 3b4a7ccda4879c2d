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

#ifndef QRCTL_MODEL_IO_HPP
#define QRCTL_MODEL_IO_HPP

#include "qrctl/mdp.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace qrctl {

// JSON model format:
//   { "propositions": [..],
//     "states": [ { "name": .., "labels": [..],
//                   "actions": { "a": { "succ": 0.5 | "1/2", .. }, .. } }, .. ] }
// Key order inside "actions" and each distribution is preserved.

RawModel parse_model_json(std::string_view text);
Mdp read_model(const std::filesystem::path& path);

/// Deterministic, pretty-printed; exact probabilities are written as "p/q" strings.
std::string model_to_json(const Mdp& m);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace qrctl

#endif
