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

#include "qrctl/parser.hpp"

#include "qrctl/error.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <utility>

namespace qrctl {
namespace {

enum class Tok { End, LParen, RParen, Not, And, Or, Implies, Ident, Quant };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
    Quantifier quantifier{};
};

std::optional<Quantifier> quantifier_token(std::string_view s) {
    using P = Polarity;
    using M = Mode;
    static const std::pair<std::string_view, Quantifier> table[] = {
        {"Esure", {P::exists, M::sure}},    {"Asure", {P::forall, M::sure}},
        {"Eas", {P::exists, M::almost}},    {"Aas", {P::forall, M::almost}},
        {"Ealmost", {P::exists, M::almost}}, {"Aalmost", {P::forall, M::almost}},
        {"Epos", {P::exists, M::pos}},      {"Apos", {P::forall, M::pos}},
        {"Eex", {P::exists, M::nullo}},     {"Aex", {P::forall, M::nullo}},
        {"Enullo", {P::exists, M::nullo}},  {"Anullo", {P::forall, M::nullo}},
        {"<1>", {P::exists, M::sure}},      {"<1,p>", {P::exists, M::nullo}},
        {"<p>", {P::forall, M::nullo}},     {"<0>", {P::forall, M::sure}},
    };
    for (const auto& [name, q] : table)
        if (name == s) return q;
    return std::nullopt;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) { advance(); }

    PathFormula whole() {
        PathFormula f = implication();
        if (tok_.kind != Tok::End) fail("end of input");
        return f;
    }

private:
    std::string_view text_;
    std::size_t at_ = 0;
    Token tok_{Tok::End, 0, {}};

    [[noreturn]] void fail(const std::string& expected) const {
        std::string found = tok_.kind == Tok::End ? "end of input" : "'" + tok_.text + "'";
        throw SyntaxError(tok_.pos, expected, found);
    }

    void advance() {
        while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_]))) ++at_;
        const std::size_t start = at_;
        if (at_ >= text_.size()) {
            tok_ = {Tok::End, start, {}};
            return;
        }
        const char c = text_[at_];
        auto single = [&](Tok k, std::size_t len) {
            tok_ = {k, start, std::string(text_.substr(start, len))};
            at_ += len;
        };
        auto starts = [&](std::string_view s) { return text_.substr(at_, s.size()) == s; };
        if (c == '(') return single(Tok::LParen, 1);
        if (c == ')') return single(Tok::RParen, 1);
        if (c == '!') return single(Tok::Not, 1);
        if (starts("->")) return single(Tok::Implies, 2);
        if (starts("&&")) return single(Tok::And, 2);
        if (starts("||")) return single(Tok::Or, 2);
        if (c == '&') return single(Tok::And, 1);
        if (c == '|') return single(Tok::Or, 1);
        if (c == '<') {
            const std::size_t close = text_.find('>', at_);
            std::string raw(text_.substr(at_, close == std::string_view::npos ? 1 : close - at_ + 1));
            std::string squeezed;
            for (char ch : raw)
                if (!std::isspace(static_cast<unsigned char>(ch))) squeezed += ch;
            auto q = quantifier_token(squeezed);
            if (!q) throw UnknownQuantifier(start, raw);
            tok_ = {Tok::Quant, start, raw, *q};
            at_ += raw.size();
            return;
        }
        if (ident_start(c)) {
            std::size_t end = at_;
            while (end < text_.size() && ident_char(text_[end])) ++end;
            std::string word(text_.substr(at_, end - at_));
            at_ = end;
            if (auto q = quantifier_token(word)) {
                tok_ = {Tok::Quant, start, word, *q};
                return;
            }
            tok_ = {Tok::Ident, start, word};
            return;
        }
        throw SyntaxError(start, "formula", "'" + std::string(1, c) + "'");
    }

    bool is_word(std::string_view w) const { return tok_.kind == Tok::Ident && tok_.text == w; }

    PathFormula implication() {
        PathFormula lhs = disjunction();
        if (tok_.kind != Tok::Implies) return lhs;
        advance();
        PathFormula rhs = implication();
        return disjoin(negate(std::move(lhs)), std::move(rhs));
    }

    PathFormula disjunction() {
        PathFormula f = conjunction();
        while (tok_.kind == Tok::Or) {
            advance();
            f = disjoin(std::move(f), conjunction());
        }
        return f;
    }

    PathFormula conjunction() {
        PathFormula f = binary_temporal();
        while (tok_.kind == Tok::And) {
            advance();
            f = conjoin(std::move(f), binary_temporal());
        }
        return f;
    }

    PathFormula binary_temporal() {
        PathFormula lhs = unary();
        if (is_word("U")) {
            advance();
            return until(std::move(lhs), binary_temporal());
        }
        if (is_word("W")) {
            advance();
            return wait_for(std::move(lhs), binary_temporal());
        }
        return lhs;
    }

    PathFormula unary() {
        if (tok_.kind == Tok::Not) {
            advance();
            return negate(unary());
        }
        if (tok_.kind == Tok::Quant) {
            const Quantifier q = tok_.quantifier;
            advance();
            return embed(quantify(q, binary_temporal()));
        }
        if (is_word("X")) {
            advance();
            return next(unary());
        }
        if (is_word("F")) {
            advance();
            return eventually(unary());
        }
        if (is_word("G")) {
            advance();
            return always(unary());
        }
        return primary();
    }

    PathFormula primary() {
        if (tok_.kind == Tok::LParen) {
            advance();
            PathFormula f = implication();
            if (tok_.kind != Tok::RParen) fail("')'");
            advance();
            return f;
        }
        if (tok_.kind == Tok::Ident) {
            if (tok_.text == "U" || tok_.text == "W") fail("formula");
            Token t = tok_;
            advance();
            if (t.text == "true") return embed(truth());
            if (t.text == "false") return embed(falsity());
            if (tok_.kind == Tok::LParen && (t.text[0] == 'E' || t.text[0] == 'A'))
                throw UnknownQuantifier(t.pos, t.text);
            return embed(atom(t.text));
        }
        fail("formula");
    }
};

}  // namespace

PathFormula parse_path(std::string_view text) { return Parser(text).whole(); }

StateFormula parse(std::string_view text) {
    PathFormula f = parse_path(text);
    if (f->kind != PathNode::Kind::State)
        throw SyntaxError(0, "state formula", "temporal operator outside a path quantifier");
    return f->state;
}

}  // namespace qrctl
