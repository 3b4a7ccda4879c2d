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

#include "qrctl/probability.hpp"

#include "qrctl/error.hpp"

#include <charconv>
#include <cstdio>

namespace qrctl {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Probability Probability::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw FormatError("malformed fraction '" + std::string(text) + "'");
        boost::multiprecision::cpp_int n{std::string(num)}, d{std::string(den)};
        if (d == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
        return Probability(Rational(n, d));
    }
    if (all_digits(text)) return Probability(Rational(boost::multiprecision::cpp_int{std::string(text)}));
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw FormatError("malformed probability '" + std::string(text) + "'");
    return Probability(v);
}

std::string Probability::to_string() const {
    if (exact_) {
        const auto& r = *exact_;
        if (denominator(r) == 1) return numerator(r).str();
        return numerator(r).str() + "/" + denominator(r).str();
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value_);
    return buf;
}

Probability operator+(const Probability& a, const Probability& b) {
    if (a.exact_ && b.exact_) return Probability(*a.exact_ + *b.exact_);
    return Probability(a.value_ + b.value_);
}

bool operator==(const Probability& a, const Probability& b) {
    if (a.exact_.has_value() != b.exact_.has_value()) return false;
    if (a.exact_) return *a.exact_ == *b.exact_;
    return a.value_ == b.value_;
}

}  // namespace qrctl
