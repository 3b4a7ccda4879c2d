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

#include "qrctl/error.hpp"

#include <sstream>

namespace qrctl {

BadDistribution::BadDistribution(std::string state, std::string action, double sum, const std::string& detail)
    : ModelError([&] {
          std::ostringstream os;
          os << "distribution of action '" << action << "' at state '" << state << "' ";
          if (detail.empty())
              os << "sums to " << sum << ", expected 1";
          else
              os << detail;
          return os.str();
      }()),
      state_(std::move(state)), action_(std::move(action)), sum_(sum) {}

SyntaxError::SyntaxError(std::size_t position, std::string expected, const std::string& found)
    : Error("syntax error at position " + std::to_string(position) + ": expected " + expected + ", found " +
            found),
      position_(position), expected_(std::move(expected)) {}

NotDeterministic::NotDeterministic(std::vector<std::string> violations)
    : Error([&] {
          std::string msg = "automaton is not deterministic";
          for (const auto& v : violations) msg += "\n  " + v;
          return msg;
      }()),
      violations_(std::move(violations)) {}

}  // namespace qrctl
