// Copyright 2026 The agcss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AGCSS_LINALG_H
#define AGCSS_LINALG_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "agcss/gf2t.h"

namespace agcss {

/// Default cap on the number of codewords an exact search may visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 28;

/// Dense row-major matrix over GF(2^t), entries stored as raw element values.
class MatQ {
   public:
    MatQ(const FieldSpec &spec, std::size_t rows, std::size_t cols);
    MatQ(const FieldSpec &spec, std::size_t rows, std::size_t cols, std::vector<std::uint8_t> raw);
    static MatQ identity(const FieldSpec &spec, std::size_t n);
    static MatQ from_rows(const FieldSpec &spec, std::size_t cols, const std::vector<std::vector<FieldElement>> &rows);

    const FieldSpec &spec() const noexcept { return *spec_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement at(std::size_t r, std::size_t c) const { return FieldElement(*spec_, raw(r, c)); }
    void set(std::size_t r, std::size_t c, const FieldElement &v);
    std::uint8_t raw(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
    std::uint8_t &raw(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
    std::span<const std::uint8_t> row(std::size_t r) const {
        return std::span<const std::uint8_t>(entries_).subspan(r * cols_, cols_);
    }

    /// This matrix with `below` appended underneath.
    MatQ stacked(const MatQ &below) const;
    void append_row(std::span<const std::uint8_t> raw_row);

    bool operator==(const MatQ &other) const {
        return *spec_ == *other.spec_ && rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

   private:
    const FieldSpec *spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> entries_;
};

struct RrefQ {
    MatQ matrix;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivots are taken in the leftmost available
/// column from the topmost candidate row; zero rows sink to the bottom.
RrefQ rref(const MatQ &m);
std::size_t rank(const MatQ &m);
/// Basis of {v : m v^T = 0}, one vector per free column.
MatQ kernel(const MatQ &m);
/// a * b^T.
MatQ multiply_transpose(const MatQ &a, const MatQ &b);

/// A linear [n, k] code over GF(2^t) given by a full-rank generator matrix.
/// Equality is equality of row spaces.
class LinearCodeQ {
   public:
    /// Throws UsageError if gen does not have full row rank.
    explicit LinearCodeQ(MatQ gen);
    /// Row space of an arbitrary spanning set, stored in RREF.
    static LinearCodeQ from_spanning(const MatQ &rows);
    static LinearCodeQ zero(const FieldSpec &spec, std::size_t n);

    const FieldSpec &spec() const noexcept { return gen_.spec(); }
    std::size_t length() const noexcept { return gen_.cols(); }
    std::size_t dimension() const noexcept { return gen_.rows(); }
    const MatQ &generator() const noexcept { return gen_; }
    MatQ canonical_generator() const { return rref(gen_).matrix; }

    /// message * gen, raw values.
    std::vector<std::uint8_t> encode(std::span<const std::uint8_t> message) const;
    bool contains(std::span<const std::uint8_t> word) const;

    bool operator==(const LinearCodeQ &other) const;

   private:
    MatQ gen_;
};

LinearCodeQ dual_code(const LinearCodeQ &c);
/// True iff the row space of a lies inside the row space of b.
bool is_subcode(const LinearCodeQ &a, const LinearCodeQ &b);

/// Exact minimum Hamming weight by Gray-code walk of the message space.
/// Throws CapacityError if q^k exceeds the budget and UsageError for k = 0.
/// `threads` = 0 picks the hardware concurrency; the result never depends
/// on it.
int min_distance_exact(const LinearCodeQ &c, std::uint64_t budget = kDefaultEnumerationBudget, unsigned threads = 0);
/// Minimum weight over `trials` random nonzero codewords: an upper bound on
/// the distance, deterministic per seed. When trials reach q^k - 1 the
/// whole message space is walked instead, so the result is exact.
int min_weight_upper(const LinearCodeQ &c, std::uint64_t trials, std::uint64_t seed);

/// Bit-packed matrix over GF(2).
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    static BitMatrix from_rows(std::size_t cols, const std::vector<BitVector> &rows);
    static BitMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool get(std::size_t r, std::size_t c) const noexcept { return (data_[r * words_ + c / 64] >> (c % 64)) & 1u; }
    void set(std::size_t r, std::size_t c, bool v) noexcept {
        auto &w = data_[r * words_ + c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        w = v ? (w | bit) : (w & ~bit);
    }
    std::span<std::uint64_t> row_words(std::size_t r) noexcept { return {data_.data() + r * words_, words_}; }
    std::span<const std::uint64_t> row_words(std::size_t r) const noexcept {
        return {data_.data() + r * words_, words_};
    }
    BitVector row_bits(std::size_t r) const;
    std::size_t row_weight(std::size_t r) const;
    void xor_row(std::size_t src, std::size_t dst) noexcept;
    void swap_rows(std::size_t a, std::size_t b) noexcept;
    void append_row(std::span<const std::uint64_t> words);
    void truncate_rows(std::size_t rows);
    BitMatrix stacked(const BitMatrix &below) const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

/// In-place RREF with the same pivot rule as the GF(2^t) version; returns the rank.
std::size_t rref_in_place(BitMatrix &m, std::vector<std::size_t> *pivots = nullptr);
std::size_t rank(const BitMatrix &m);
BitMatrix kernel(const BitMatrix &m);
/// Index pair (i, j) of the first rows with <a_i, b_j> = 1, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_nonorthogonal(const BitMatrix &a, const BitMatrix &b);

/// A binary [n, k] code, generator stored in RREF so equal codes compare equal.
class BinaryCode {
   public:
    /// Throws UsageError if gen does not have full row rank.
    explicit BinaryCode(BitMatrix gen);
    static BinaryCode from_spanning(BitMatrix rows);
    static BinaryCode zero(std::size_t n);
    static BinaryCode full_space(std::size_t n);

    std::size_t length() const noexcept { return gen_.cols(); }
    std::size_t dimension() const noexcept { return gen_.rows(); }
    const BitMatrix &generator() const noexcept { return gen_; }
    bool contains(std::span<const std::uint64_t> word) const;

    bool operator==(const BinaryCode &other) const { return gen_ == other.gen_; }

   private:
    BinaryCode() = default;
    BitMatrix gen_;
    std::vector<std::size_t> pivots_;
};

BinaryCode dual_code(const BinaryCode &c);
bool is_subcode(const BinaryCode &a, const BinaryCode &b);
int min_distance_exact(const BinaryCode &c, std::uint64_t budget = kDefaultEnumerationBudget, unsigned threads = 0);
int min_weight_upper(const BinaryCode &c, std::uint64_t trials, std::uint64_t seed);
/// Minimum weight over codewords v of `code` with checks * v^T != 0, or
/// nullopt when every codeword passes all checks.
std::optional<int> min_weight_failing_checks(const BinaryCode &code, const BitMatrix &checks,
                                             std::uint64_t budget = kDefaultEnumerationBudget, unsigned threads = 0);

}  // namespace agcss

#endif  // AGCSS_LINALG_H
