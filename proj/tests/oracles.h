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

#ifndef AGCSS_TESTS_ORACLES_H
#define AGCSS_TESTS_ORACLES_H

// Brute-force reference computations, deliberately sharing no code with the
// library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "agcss/linalg.h"

namespace agcss::oracle {

/// Carry-less product reduced modulo `modulus` (degree t).
inline unsigned poly_mul(unsigned a, unsigned b, unsigned modulus, unsigned t) {
    unsigned acc = 0;
    for (unsigned i = 0; i < t; ++i) {
        if ((b >> i) & 1u) acc ^= a << i;
    }
    for (int d = 2 * static_cast<int>(t) - 2; d >= static_cast<int>(t); --d) {
        if ((acc >> d) & 1u) acc ^= modulus << (d - t);
    }
    return acc;
}

inline unsigned poly_pow(unsigned a, unsigned long long e, unsigned modulus, unsigned t) {
    unsigned r = 1;
    for (unsigned long long i = 0; i < e; ++i) r = poly_mul(r, a, modulus, t);
    return r;
}

/// Tr(a) = a + a^2 + ... + a^(2^(t-1)), by repeated squaring in the polynomial model.
inline unsigned poly_trace(unsigned a, unsigned modulus, unsigned t) {
    unsigned acc = 0;
    unsigned cur = a;
    for (unsigned i = 0; i < t; ++i) {
        acc ^= cur;
        cur = poly_mul(cur, cur, modulus, t);
    }
    return acc;
}

/// Every codeword of the row space of `gen` over GF(2^t), raw symbols.
inline std::vector<std::vector<std::uint8_t>> all_codewords(const MatQ &gen) {
    const FieldSpec &f = gen.spec();
    const unsigned q = f.order();
    std::vector<std::vector<std::uint8_t>> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < gen.rows(); ++i) total *= q;
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint8_t> word(gen.cols(), 0);
        std::size_t rest = idx;
        for (std::size_t r = 0; r < gen.rows(); ++r) {
            const unsigned c = rest % q;
            rest /= q;
            for (std::size_t col = 0; col < gen.cols(); ++col) {
                word[col] ^= poly_mul(c, gen.raw(r, col), f.modulus(), f.degree());
            }
        }
        out.push_back(std::move(word));
    }
    return out;
}

inline int hamming_weight(const std::vector<std::uint8_t> &w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](std::uint8_t v) { return v != 0; }));
}

inline int brute_min_distance(const MatQ &gen) {
    int best = std::numeric_limits<int>::max();
    for (const auto &w : all_codewords(gen)) {
        const int wt = hamming_weight(w);
        if (wt > 0) best = std::min(best, wt);
    }
    return best;
}

/// Every codeword of a binary generator matrix, as bit vectors.
inline std::vector<std::vector<std::uint8_t>> all_binary_codewords(const BitMatrix &gen) {
    std::vector<std::vector<std::uint8_t>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gen.rows()); ++mask) {
        std::vector<std::uint8_t> w(gen.cols(), 0);
        for (std::size_t r = 0; r < gen.rows(); ++r) {
            if ((mask >> r) & 1u) {
                for (std::size_t c = 0; c < gen.cols(); ++c) w[c] ^= gen.get(r, c);
            }
        }
        out.push_back(std::move(w));
    }
    return out;
}

inline int brute_binary_min_distance(const BitMatrix &gen) {
    int best = std::numeric_limits<int>::max();
    for (const auto &w : all_binary_codewords(gen)) {
        const int wt = hamming_weight(w);
        if (wt > 0) best = std::min(best, wt);
    }
    return best;
}

inline bool binary_orthogonal(const std::vector<std::uint8_t> &a, const std::vector<std::uint8_t> &b) {
    unsigned acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc ^= a[i] & b[i];
    return acc == 0;
}

/// Brute-force CSS distance: weight of the lightest word in C1 outside dual(C2),
/// or in C2 outside dual(C1). `dual1`/`dual2` are generators of the duals.
inline int brute_css_distance(const BitMatrix &c1, const BitMatrix &c2) {
    const auto w1 = all_binary_codewords(c1);
    const auto w2 = all_binary_codewords(c2);
    auto in_dual_of = [](const std::vector<std::uint8_t> &w, const std::vector<std::vector<std::uint8_t>> &code) {
        for (const auto &c : code) {
            if (!binary_orthogonal(w, c)) return false;
        }
        return true;
    };
    int best = std::numeric_limits<int>::max();
    for (const auto &w : w1) {
        const int wt = hamming_weight(w);
        if (wt > 0 && wt < best && !in_dual_of(w, w2)) best = wt;
    }
    for (const auto &w : w2) {
        const int wt = hamming_weight(w);
        if (wt > 0 && wt < best && !in_dual_of(w, w1)) best = wt;
    }
    return best;
}

}  // namespace agcss::oracle

#endif  // AGCSS_TESTS_ORACLES_H
