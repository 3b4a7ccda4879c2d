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

#ifndef QRCTL_ERROR_HPP
#define QRCTL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrctl {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed JSON or a missing/mistyped field in a model or automaton file.
class FormatError : public Error {
public:
    using Error::Error;
};

/// A model that parsed but violates the MDP definition.
class ModelError : public Error {
public:
    using Error::Error;
};

class EmptyMoveSet : public ModelError {
public:
    explicit EmptyMoveSet(std::string state)
        : ModelError("state '" + state + "' has no actions"), state_(std::move(state)) {}
    const std::string& state() const noexcept { return state_; }

private:
    std::string state_;
};

class BadDistribution : public ModelError {
public:
    BadDistribution(std::string state, std::string action, double sum, const std::string& detail = {});
    const std::string& state() const noexcept { return state_; }
    const std::string& action() const noexcept { return action_; }
    double sum() const noexcept { return sum_; }

private:
    std::string state_;
    std::string action_;
    double sum_;
};

class DuplicateState : public ModelError {
public:
    explicit DuplicateState(std::string name)
        : ModelError("duplicate state name '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class UnknownState : public ModelError {
public:
    explicit UnknownState(std::string name)
        : ModelError("unknown state '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class NameCollision : public ModelError {
public:
    explicit NameCollision(const std::string& name)
        : ModelError("synthesized state name '" + name + "' collides with an existing state") {}
};

/// Raised both by model validation and by the checker for formulas over unknown atoms.
class UndeclaredProposition : public Error {
public:
    explicit UndeclaredProposition(std::string prop)
        : Error("undeclared proposition '" + prop + "'"), prop_(std::move(prop)) {}
    const std::string& proposition() const noexcept { return prop_; }

private:
    std::string prop_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, std::string expected, const std::string& found);
    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

class UnknownQuantifier : public Error {
public:
    UnknownQuantifier(std::size_t position, const std::string& token)
        : Error("unknown path quantifier '" + token + "' at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// The formula needs the automaton-based route (nested temporal operators).
class NotQrctl : public Error {
public:
    using Error::Error;
};

class NotAlternating : public Error {
public:
    using Error::Error;
};

/// A fixpoint iteration failed to stabilize; the operator was not monotone.
class NonConvergence : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::size_t blocks, std::size_t budget)
        : Error("partition has " + std::to_string(blocks) + " blocks, above the union-enumeration budget of " +
                std::to_string(budget)),
          blocks_(blocks) {}
    std::size_t blocks() const noexcept { return blocks_; }

private:
    std::size_t blocks_;
};

class NotDeterministic : public Error {
public:
    explicit NotDeterministic(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

class MissingComplement : public Error {
public:
    using Error::Error;
};

/// The brute-force oracle refuses models above its size bound.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace qrctl

#endif
