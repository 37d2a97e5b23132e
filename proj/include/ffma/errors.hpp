/**************************************************************************
 * errors.hpp
 *
 * Copyright 2026 The ffma Authors
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
 **************************************************************************/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ffmac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic misuse: inverse of zero, mixed fields, non-prime modulus.
class FieldError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// A constructor rejected its input (e.g. rank-deficient generator).
class ConstructionError : public Error {
public:
    ConstructionError(const std::string& what, std::size_t rank = 0)
        : Error(what), rank_(rank) {}
    std::size_t rank() const noexcept { return rank_; }

private:
    std::size_t rank_;
};

/// Exhaustive enumeration would exceed the configured block budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// Received block has no preimage in the decoding table.
class DecodeError : public Error {
public:
    using Error::Error;
};

/// Malformed JSON input; `pointer` is a JSON pointer to the offending field.
class SpecError : public Error {
public:
    SpecError(const std::string& what, std::string pointer)
        : Error(what), pointer_(std::move(pointer)) {}
    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

/// Input violates a precondition (power constraint, empty grid, bad range).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Root finder or solver failed to bracket / converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

} // namespace ffmac
