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

#ifndef QRCTL_PROBABILITY_HPP
#define QRCTL_PROBABILITY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace qrctl {

using Rational = boost::multiprecision::cpp_rational;

/// A transition probability, kept exact when the input gave a fraction or an integer.
///
/// Qualitative algorithms only look at supports, so the floating value is there for
/// the oracle's numeric iteration and for serialization of inexact inputs.
class Probability {
public:
    Probability() = default;
    explicit Probability(double value) : value_(value) {}
    explicit Probability(const Rational& exact) : value_(exact.convert_to<double>()), exact_(exact) {}

    /// Parses "p/q" or a decimal/integer literal. Throws FormatError on garbage.
    static Probability parse(std::string_view text);

    double value() const noexcept { return value_; }
    bool is_exact() const noexcept { return exact_.has_value(); }
    const std::optional<Rational>& exact() const noexcept { return exact_; }

    /// "p/q" for exact non-integers, "1" for exact one, shortest round-trip decimal otherwise.
    std::string to_string() const;

    friend Probability operator+(const Probability& a, const Probability& b);
    friend bool operator==(const Probability& a, const Probability& b);

private:
    double value_ = 0.0;
    std::optional<Rational> exact_;
};

}  // namespace qrctl

#endif
