/**************************************************************************
 * ffcore.hpp
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

// Exact arithmetic over GF(p), vectors and matrices over GF(p).
// Elements are stored as residues in [0, p) next to the field they belong to;
// every binary operation checks that both operands share one field.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ffma/errors.hpp"

namespace ffmac {

bool is_prime(std::uint64_t n);

class PrimeField {
public:
    /// Throws FieldError unless p is prime (checked by trial division).
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    std::uint32_t reduce(std::int64_t v) const noexcept
    {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    /// Throws FieldError on zero.
    std::uint32_t inv(std::uint32_t a) const;

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

class FieldScalar {
public:
    FieldScalar(PrimeField field, std::int64_t value)
        : field_(field), value_(field.reduce(value)) {}

    const PrimeField& field() const noexcept { return field_; }
    std::uint32_t value() const noexcept { return value_; }

    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    FieldScalar operator-() const { return {field_, field_.neg(value_)}; }
    FieldScalar inv() const;

    bool operator==(const FieldScalar& o) const noexcept
    {
        return field_ == o.field_ && value_ == o.value_;
    }

private:
    void same_field(const FieldScalar& o) const;

    PrimeField field_;
    std::uint32_t value_;
};

/// Symmetric residue of a in (-p/2, p/2].
std::int64_t symmetric_lift(std::uint32_t value, std::uint32_t p);
inline std::int64_t symmetric_lift(const FieldScalar& a)
{
    return symmetric_lift(a.value(), a.field().p());
}

class FieldVector {
public:
    FieldVector(PrimeField field, std::size_t length)
        : field_(field), coords_(length, 0) {}
    FieldVector(PrimeField field, std::vector<std::uint32_t> coords);
    FieldVector(PrimeField field, std::initializer_list<std::int64_t> coords);

    /// Parses a digit string such as "0011121" (one digit per coordinate, p <= 10).
    static FieldVector from_string(PrimeField field, const std::string& digits);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return coords_.size(); }
    std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
    void set(std::size_t i, std::int64_t v) { coords_.at(i) = field_.reduce(v); }
    std::span<const std::uint32_t> coords() const noexcept { return coords_; }

    bool is_zero() const noexcept;

    FieldVector operator+(const FieldVector& o) const;
    FieldVector operator-(const FieldVector& o) const;
    FieldVector& operator+=(const FieldVector& o);
    FieldVector scaled(std::uint32_t s) const;

    /// Same coordinates reinterpreted (reduced) over another prime field.
    FieldVector over(PrimeField other) const;

    /// Concatenated digits; coordinates >= 10 are comma-separated instead.
    std::string to_string() const;

    bool operator==(const FieldVector& o) const noexcept
    {
        return field_ == o.field_ && coords_ == o.coords_;
    }
    bool operator<(const FieldVector& o) const noexcept { return coords_ < o.coords_; }

private:
    PrimeField field_;
    std::vector<std::uint32_t> coords_;
};

class FieldMatrix {
public:
    FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    FieldMatrix(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static FieldMatrix from_rows(PrimeField field, const std::vector<FieldVector>& rows,
                                 std::size_t cols = 0);
    static FieldMatrix identity(PrimeField field, std::size_t n);
    static FieldMatrix vstack(const std::vector<FieldMatrix>& blocks);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = field_.reduce(v); }
    std::span<const std::uint32_t> row_span(std::size_t r) const
    {
        return {data_.data() + r * cols_, cols_};
    }
    FieldVector row(std::size_t r) const;

    FieldMatrix scaled(std::uint32_t s) const;
    FieldMatrix transpose() const;
    FieldMatrix over(PrimeField other) const;
    bool is_zero() const noexcept;

    std::vector<std::vector<std::uint32_t>> to_nested() const;

    bool operator==(const FieldMatrix& o) const noexcept
    {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

/// Row vector times matrix; throws DimensionError / FieldError on mismatch.
FieldVector operator*(const FieldVector& v, const FieldMatrix& m);
FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);

/// Row rank by Gaussian elimination over GF(p).
std::size_t rank(const FieldMatrix& m);

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct RowEchelon {
    FieldMatrix reduced;
    std::vector<std::size_t> pivots;
};
RowEchelon row_reduce(const FieldMatrix& m);

} // namespace ffmac
