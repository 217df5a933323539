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

#include "agcss/linalg.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <random>
#include <string>
#include <thread>

#include "agcss/errors.h"

namespace agcss {

// ---------------------------------------------------------------------------
// MatQ

MatQ::MatQ(const FieldSpec &spec, std::size_t rows, std::size_t cols)
    : spec_(&spec), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

MatQ::MatQ(const FieldSpec &spec, std::size_t rows, std::size_t cols, std::vector<std::uint8_t> raw)
    : spec_(&spec), rows_(rows), cols_(cols), entries_(std::move(raw)) {
    if (entries_.size() != rows * cols) throw UsageError("MatQ: entry count does not match rows x cols");
    for (auto v : entries_) {
        if (v >= spec.order()) throw UsageError("MatQ: entry out of range for " + spec.describe());
    }
}

MatQ MatQ::identity(const FieldSpec &spec, std::size_t n) {
    MatQ m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = 1;
    return m;
}

MatQ MatQ::from_rows(const FieldSpec &spec, std::size_t cols, const std::vector<std::vector<FieldElement>> &rows) {
    MatQ m(spec, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw UsageError("MatQ::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

void MatQ::set(std::size_t r, std::size_t c, const FieldElement &v) {
    require_same_field(v.spec(), *spec_);
    raw(r, c) = v.value();
}

MatQ MatQ::stacked(const MatQ &below) const {
    require_same_field(*spec_, below.spec());
    if (below.cols_ != cols_) throw UsageError("MatQ::stacked: column count mismatch");
    MatQ out = *this;
    out.entries_.insert(out.entries_.end(), below.entries_.begin(), below.entries_.end());
    out.rows_ += below.rows_;
    return out;
}

void MatQ::append_row(std::span<const std::uint8_t> raw_row) {
    if (raw_row.size() != cols_) throw UsageError("MatQ::append_row: column count mismatch");
    entries_.insert(entries_.end(), raw_row.begin(), raw_row.end());
    ++rows_;
}

RrefQ rref(const MatQ &m) {
    const FieldSpec &f = m.spec();
    MatQ a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a.raw(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.raw(p, j), a.raw(r, j));
        }
        const std::uint8_t scale = f.inv(a.raw(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a.raw(r, j) = f.mul(a.raw(r, j), scale);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const std::uint8_t factor = a.raw(i, c);
            if (i == r || factor == 0) continue;
            for (std::size_t j = c; j < a.cols(); ++j) a.raw(i, j) ^= f.mul(factor, a.raw(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

std::size_t rank(const MatQ &m) { return rref(m).rank; }

MatQ kernel(const MatQ &m) {
    const auto red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;
    MatQ out(m.spec(), 0, m.cols());
    std::vector<std::uint8_t> v(m.cols());
    for (std::size_t freec = 0; freec < m.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[freec] = 1;
        // Characteristic 2: -R[i][f] = R[i][f].
        for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = red.matrix.raw(i, freec);
        out.append_row(v);
    }
    return out;
}

MatQ multiply_transpose(const MatQ &a, const MatQ &b) {
    require_same_field(a.spec(), b.spec());
    if (a.cols() != b.cols()) throw UsageError("multiply_transpose: column count mismatch");
    const FieldSpec &f = a.spec();
    MatQ out(f, a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            std::uint8_t acc = 0;
            for (std::size_t c = 0; c < a.cols(); ++c) acc ^= f.mul(a.raw(i, c), b.raw(j, c));
            out.raw(i, j) = acc;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// LinearCodeQ

LinearCodeQ::LinearCodeQ(MatQ gen) : gen_(std::move(gen)) {
    if (rank(gen_) != gen_.rows()) throw UsageError("generator matrix does not have full row rank");
}

LinearCodeQ LinearCodeQ::from_spanning(const MatQ &rows) {
    auto red = rref(rows);
    std::vector<std::uint8_t> raw;
    for (std::size_t i = 0; i < red.rank; ++i) {
        auto r = red.matrix.row(i);
        raw.insert(raw.end(), r.begin(), r.end());
    }
    return LinearCodeQ(MatQ(rows.spec(), red.rank, rows.cols(), std::move(raw)));
}

LinearCodeQ LinearCodeQ::zero(const FieldSpec &spec, std::size_t n) { return LinearCodeQ(MatQ(spec, 0, n)); }

std::vector<std::uint8_t> LinearCodeQ::encode(std::span<const std::uint8_t> message) const {
    if (message.size() != dimension()) throw UsageError("encode: message length must equal the code dimension");
    const FieldSpec &f = spec();
    std::vector<std::uint8_t> out(length(), 0);
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i] == 0) continue;
        for (std::size_t c = 0; c < length(); ++c) out[c] ^= f.mul(message[i], gen_.raw(i, c));
    }
    return out;
}

bool LinearCodeQ::contains(std::span<const std::uint8_t> word) const {
    if (word.size() != length()) throw UsageError("contains: word length mismatch");
    MatQ w(spec(), 1, length(), std::vector<std::uint8_t>(word.begin(), word.end()));
    return rank(gen_.stacked(w)) == dimension();
}

bool LinearCodeQ::operator==(const LinearCodeQ &other) const {
    return spec() == other.spec() && length() == other.length() && dimension() == other.dimension() &&
           canonical_generator() == other.canonical_generator();
}

LinearCodeQ dual_code(const LinearCodeQ &c) { return LinearCodeQ(kernel(c.generator())); }

bool is_subcode(const LinearCodeQ &a, const LinearCodeQ &b) {
    require_same_field(a.spec(), b.spec());
    if (a.length() != b.length()) throw UsageError("is_subcode: length mismatch");
    return rank(b.generator().stacked(a.generator())) == b.dimension();
}

// ---------------------------------------------------------------------------
// Gray-code enumeration shared by the q-ary and binary distance searches.
//
// A codeword over GF(2^t) is held as t bit-planes; since addition is XOR a
// GF(2)-basis of the code can be walked in Gray order with one XOR per step.

namespace {

struct PlaneGens {
    std::size_t count = 0;      // GF(2)-dimension of the code
    std::size_t planes = 1;     // bits per symbol
    std::size_t words = 0;      // 64-bit words per plane
    std::size_t tag_words = 0;  // syndrome words; 0 = no filter
    std::vector<std::uint64_t> gens;
    std::vector<std::uint64_t> tags;

    std::size_t stride() const { return planes * words; }
};

int symbol_weight(const PlaneGens &g, const std::uint64_t *acc) {
    int w = 0;
    for (std::size_t k = 0; k < g.words; ++k) {
        std::uint64_t nz = 0;
        for (std::size_t p = 0; p < g.planes; ++p) nz |= acc[p * g.words + k];
        w += std::popcount(nz);
    }
    return w;
}

bool tag_nonzero(const PlaneGens &g, const std::uint64_t *tag) {
    if (g.tag_words == 0) return true;
    for (std::size_t k = 0; k < g.tag_words; ++k) {
        if (tag[k] != 0) return true;
    }
    return false;
}

void xor_into(std::uint64_t *dst, const std::uint64_t *src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

// Minimum weight over Gray indices [lo, hi), skipping index 0.
int walk_chunk(const PlaneGens &g, std::uint64_t lo, std::uint64_t hi, const std::atomic<int> &global_best) {
    std::vector<std::uint64_t> acc(g.stride(), 0);
    std::vector<std::uint64_t> tag(g.tag_words, 0);
    const std::uint64_t start_code = lo ^ (lo >> 1);
    for (std::size_t b = 0; b < g.count; ++b) {
        if ((start_code >> b) & 1u) {
            xor_into(acc.data(), &g.gens[b * g.stride()], g.stride());
            xor_into(tag.data(), g.tags.data() + b * g.tag_words, g.tag_words);
        }
    }
    int best = INT_MAX;
    auto consider = [&] {
        if (tag_nonzero(g, tag.data())) best = std::min(best, symbol_weight(g, acc.data()));
    };
    if (lo != 0) consider();
    for (std::uint64_t idx = lo + 1; idx < hi; ++idx) {
        const auto b = static_cast<std::size_t>(std::countr_zero(idx));
        xor_into(acc.data(), &g.gens[b * g.stride()], g.stride());
        xor_into(tag.data(), g.tags.data() + b * g.tag_words, g.tag_words);
        consider();
        // Weight 1 cannot be beaten; stop everyone early.
        if ((idx & 0xFFFF) == 0 && global_best.load(std::memory_order_relaxed) <= 1) break;
        if (best <= 1) break;
    }
    return best;
}

int gray_min_weight(const PlaneGens &g, std::uint64_t budget, unsigned threads) {
    if (g.count >= 63 || (std::uint64_t{1} << g.count) > budget) {
        throw CapacityError("exact search needs 2^" + std::to_string(g.count) +
                            " codewords, over the enumeration budget of " + std::to_string(budget) +
                            "; use min_weight_upper for an upper bound");
    }
    const std::uint64_t total = std::uint64_t{1} << g.count;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    constexpr std::uint64_t kMinChunk = std::uint64_t{1} << 14;
    const std::uint64_t chunks = std::clamp<std::uint64_t>(total / kMinChunk, 1, threads);
    std::atomic<int> best{INT_MAX};
    auto run = [&](std::uint64_t c) {
        const std::uint64_t lo = total / chunks * c;
        const std::uint64_t hi = c + 1 == chunks ? total : total / chunks * (c + 1);
        const int w = walk_chunk(g, lo, hi, best);
        int cur = best.load();
        while (w < cur && !best.compare_exchange_weak(cur, w)) {
        }
    };
    if (chunks == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::uint64_t c = 0; c < chunks; ++c) pool.emplace_back(run, c);
    }
    return best.load();
}

PlaneGens planes_of(const LinearCodeQ &c) {
    const FieldSpec &f = c.spec();
    const MatQ gen = c.canonical_generator();
    PlaneGens g;
    g.planes = f.degree();
    g.words = (c.length() + 63) / 64;
    g.count = c.dimension() * f.degree();
    g.gens.assign(g.count * g.stride(), 0);
    for (std::size_t r = 0; r < gen.rows(); ++r) {
        for (unsigned j = 0; j < f.degree(); ++j) {
            const std::uint8_t scale = static_cast<std::uint8_t>(1u << j);
            std::uint64_t *dst = &g.gens[(r * f.degree() + j) * g.stride()];
            for (std::size_t col = 0; col < c.length(); ++col) {
                const std::uint8_t v = f.mul(scale, gen.raw(r, col));
                for (unsigned p = 0; p < f.degree(); ++p) {
                    if ((v >> p) & 1u) dst[p * g.words + col / 64] |= std::uint64_t{1} << (col % 64);
                }
            }
        }
    }
    return g;
}

PlaneGens planes_of(const BinaryCode &c) {
    PlaneGens g;
    g.planes = 1;
    g.words = c.generator().words_per_row();
    g.count = c.dimension();
    g.gens.reserve(g.count * g.words);
    for (std::size_t r = 0; r < c.dimension(); ++r) {
        auto w = c.generator().row_words(r);
        g.gens.insert(g.gens.end(), w.begin(), w.end());
    }
    return g;
}

int sample_min_weight(const PlaneGens &g, std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw UsageError("min_weight_upper: trials must be >= 1");
    if (g.count == 0) throw UsageError("min_weight_upper: the zero code has no nonzero codewords");
    if (g.count < 63 && trials >= (std::uint64_t{1} << g.count) - 1) {
        return gray_min_weight(g, std::uint64_t{1} << g.count, 1);
    }
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> acc(g.stride());
    std::vector<std::uint64_t> message((g.count + 63) / 64);
    int best = INT_MAX;
    for (std::uint64_t t = 0; t < trials; ++t) {
        bool nonzero = false;
        while (!nonzero) {
            for (auto &w : message) w = rng();
            if (g.count % 64 != 0) message.back() &= (std::uint64_t{1} << (g.count % 64)) - 1;
            nonzero = std::any_of(message.begin(), message.end(), [](std::uint64_t w) { return w != 0; });
        }
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t b = 0; b < g.count; ++b) {
            if ((message[b / 64] >> (b % 64)) & 1u) xor_into(acc.data(), &g.gens[b * g.stride()], g.stride());
        }
        best = std::min(best, symbol_weight(g, acc.data()));
    }
    return best;
}

}  // namespace

int min_distance_exact(const LinearCodeQ &c, std::uint64_t budget, unsigned threads) {
    if (c.dimension() == 0) throw UsageError("min_distance_exact: the zero code has no nonzero codewords");
    return gray_min_weight(planes_of(c), budget, threads);
}

int min_weight_upper(const LinearCodeQ &c, std::uint64_t trials, std::uint64_t seed) {
    return sample_min_weight(planes_of(c), trials, seed);
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

BitMatrix BitMatrix::from_rows(std::size_t cols, const std::vector<BitVector> &rows) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw UsageError("BitMatrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] > 1) throw UsageError("BitMatrix::from_rows: entries must be 0 or 1");
            m.set(r, c, rows[r][c] != 0);
        }
    }
    return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitVector BitMatrix::row_bits(std::size_t r) const {
    BitVector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = get(r, c);
    return out;
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (auto word : row_words(r)) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

void BitMatrix::xor_row(std::size_t src, std::size_t dst) noexcept {
    xor_into(&data_[dst * words_], &data_[src * words_], words_);
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * words_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * words_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * words_));
}

void BitMatrix::append_row(std::span<const std::uint64_t> words) {
    if (words.size() != words_) throw UsageError("BitMatrix::append_row: width mismatch");
    data_.insert(data_.end(), words.begin(), words.end());
    ++rows_;
}

void BitMatrix::truncate_rows(std::size_t rows) {
    if (rows > rows_) throw UsageError("BitMatrix::truncate_rows: cannot grow");
    rows_ = rows;
    data_.resize(rows * words_);
}

BitMatrix BitMatrix::stacked(const BitMatrix &below) const {
    if (below.cols_ != cols_) throw UsageError("BitMatrix::stacked: column count mismatch");
    BitMatrix out = *this;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    out.rows_ += below.rows_;
    return out;
}

std::size_t rref_in_place(BitMatrix &m, std::vector<std::size_t> *pivots) {
    if (pivots) pivots->clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        if (p != r) m.swap_rows(p, r);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && m.get(i, c)) m.xor_row(r, i);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

std::size_t rank(const BitMatrix &m) {
    BitMatrix copy = m;
    return rref_in_place(copy);
}

BitMatrix kernel(const BitMatrix &m) {
    BitMatrix red = m;
    std::vector<std::size_t> pivots;
    const std::size_t r = rref_in_place(red, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    BitMatrix out(0, m.cols());
    BitMatrix row(1, m.cols());
    for (std::size_t freec = 0; freec < m.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        row = BitMatrix(1, m.cols());
        row.set(0, freec, true);
        for (std::size_t i = 0; i < r; ++i) row.set(0, pivots[i], red.get(i, freec));
        out.append_row(row.row_words(0));
    }
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_nonorthogonal(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.cols()) throw UsageError("first_nonorthogonal: column count mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ai = a.row_words(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            auto bj = b.row_words(j);
            unsigned parity = 0;
            for (std::size_t k = 0; k < ai.size(); ++k) parity ^= std::popcount(ai[k] & bj[k]) & 1u;
            if (parity) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// BinaryCode

BinaryCode::BinaryCode(BitMatrix gen) {
    const std::size_t k = gen.rows();
    if (rref_in_place(gen, &pivots_) != k) throw UsageError("generator matrix does not have full row rank");
    gen_ = std::move(gen);
}

BinaryCode BinaryCode::from_spanning(BitMatrix rows) {
    BinaryCode out;
    const std::size_t r = rref_in_place(rows, &out.pivots_);
    rows.truncate_rows(r);
    out.gen_ = std::move(rows);
    return out;
}

BinaryCode BinaryCode::zero(std::size_t n) { return BinaryCode(BitMatrix(0, n)); }
BinaryCode BinaryCode::full_space(std::size_t n) { return BinaryCode(BitMatrix::identity(n)); }

bool BinaryCode::contains(std::span<const std::uint64_t> word) const {
    if (word.size() != gen_.words_per_row()) throw UsageError("BinaryCode::contains: width mismatch");
    std::vector<std::uint64_t> w(word.begin(), word.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if ((w[p / 64] >> (p % 64)) & 1u) xor_into(w.data(), gen_.row_words(i).data(), w.size());
    }
    return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
}

BinaryCode dual_code(const BinaryCode &c) { return BinaryCode(kernel(c.generator())); }

bool is_subcode(const BinaryCode &a, const BinaryCode &b) {
    if (a.length() != b.length()) throw UsageError("is_subcode: length mismatch");
    for (std::size_t r = 0; r < a.dimension(); ++r) {
        if (!b.contains(a.generator().row_words(r))) return false;
    }
    return true;
}

int min_distance_exact(const BinaryCode &c, std::uint64_t budget, unsigned threads) {
    if (c.dimension() == 0) throw UsageError("min_distance_exact: the zero code has no nonzero codewords");
    return gray_min_weight(planes_of(c), budget, threads);
}

int min_weight_upper(const BinaryCode &c, std::uint64_t trials, std::uint64_t seed) {
    return sample_min_weight(planes_of(c), trials, seed);
}

std::optional<int> min_weight_failing_checks(const BinaryCode &code, const BitMatrix &checks, std::uint64_t budget,
                                             unsigned threads) {
    if (checks.cols() != code.length()) throw UsageError("min_weight_failing_checks: length mismatch");
    PlaneGens g = planes_of(code);
    g.tag_words = (checks.rows() + 63) / 64;
    if (g.tag_words == 0) {
        return std::nullopt;
    }
    g.tags.assign(g.count * g.tag_words, 0);
    for (std::size_t b = 0; b < g.count; ++b) {
        auto row = code.generator().row_words(b);
        for (std::size_t j = 0; j < checks.rows(); ++j) {
            auto chk = checks.row_words(j);
            unsigned parity = 0;
            for (std::size_t k = 0; k < row.size(); ++k) parity ^= std::popcount(row[k] & chk[k]) & 1u;
            if (parity) g.tags[b * g.tag_words + j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
    const int w = gray_min_weight(g, budget, threads);
    if (w == INT_MAX) return std::nullopt;
    return w;
}

}  // namespace agcss
