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

#include <gtest/gtest.h>

#include <random>

#include "agcss/curves.h"
#include "agcss/errors.h"
#include "oracles.h"

using namespace agcss;

namespace {

const FieldSpec &gf(unsigned t) { return FieldSpec::canonical(t); }

MatQ random_matrix(const FieldSpec &f, std::size_t r, std::size_t c, std::mt19937_64 &rng) {
    std::vector<std::uint8_t> raw(r * c);
    for (auto &v : raw) v = static_cast<std::uint8_t>(rng() % f.order());
    return MatQ(f, r, c, raw);
}

BitMatrix random_bits(std::size_t r, std::size_t c, std::mt19937_64 &rng) {
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1u);
    }
    return m;
}

BitMatrix hamming74() {
    return BitMatrix::from_rows(7, {{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}});
}

}  // namespace

TEST(linalg, rref_identity_and_zero) {
    const auto id = MatQ::identity(gf(2), 4);
    const auto r = rref(id);
    EXPECT_EQ(r.matrix, id);
    EXPECT_EQ(r.rank, 4u);
    const MatQ z(gf(2), 3, 5);
    EXPECT_EQ(rank(z), 0u);
    EXPECT_EQ(rref(z).matrix, z);
}

TEST(linalg, rank_by_determinant) {
    const auto w = gf(2).element(2);
    const auto w2 = gf(2).element(3);
    const auto m = MatQ::from_rows(gf(2), 2, {{w, gf(2).one()}, {w2, w}});
    const auto det = w * w + gf(2).one() * w2;
    EXPECT_TRUE(det.is_zero());
    EXPECT_EQ(rank(m), 1u);
}

TEST(linalg, rref_is_reduced) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = random_matrix(gf(3), 4, 7, rng);
        const auto r = rref(m);
        ASSERT_EQ(r.pivots.size(), r.rank);
        for (std::size_t i = 0; i < r.rank; ++i) {
            for (std::size_t j = 0; j < r.matrix.rows(); ++j) {
                EXPECT_EQ(r.matrix.raw(j, r.pivots[i]), j == i ? 1 : 0);
            }
        }
        for (std::size_t i = r.rank; i < r.matrix.rows(); ++i) {
            for (std::size_t c = 0; c < m.cols(); ++c) EXPECT_EQ(r.matrix.raw(i, c), 0);
        }
        // Row spaces agree.
        EXPECT_EQ(LinearCodeQ::from_spanning(m), LinearCodeQ::from_spanning(r.matrix));
    }
}

TEST(linalg, kernel_examples) {
    EXPECT_EQ(kernel(MatQ::identity(gf(3), 3)).rows(), 0u);
    const auto parity = MatQ::from_rows(gf(1), 2, {{gf(1).one(), gf(1).one()}});
    const auto k = kernel(parity);
    ASSERT_EQ(k.rows(), 1u);
    EXPECT_EQ(k.raw(0, 0), 1);
    EXPECT_EQ(k.raw(0, 1), 1);
}

TEST(linalg, kernel_random) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = random_matrix(gf(2), 3, 6, rng);
        const auto k = kernel(m);
        EXPECT_EQ(k.rows(), 6 - rank(m));
        EXPECT_EQ(rank(k), k.rows());
        const auto prod = multiply_transpose(m, k);
        for (std::size_t i = 0; i < prod.rows(); ++i) {
            for (std::size_t j = 0; j < prod.cols(); ++j) ASSERT_EQ(prod.raw(i, j), 0);
        }
    }
}

TEST(linalg, dual_code_examples) {
    const auto rep = BinaryCode(BitMatrix::from_rows(3, {{1, 1, 1}}));
    const auto even = dual_code(rep);
    EXPECT_EQ(even.dimension(), 2u);
    for (const auto &w : oracle::all_binary_codewords(even.generator())) EXPECT_EQ(oracle::hamming_weight(w) % 2, 0);
    EXPECT_EQ(dual_code(BinaryCode::full_space(5)).dimension(), 0u);
    EXPECT_EQ(dual_code(BinaryCode::zero(5)).dimension(), 5u);
    const auto rep_q = LinearCodeQ(MatQ::from_rows(gf(1), 3, {{gf(1).one(), gf(1).one(), gf(1).one()}}));
    EXPECT_EQ(dual_code(rep_q).dimension(), 2u);
}

TEST(linalg, dual_code_of_functional_code) {
    const auto curve = CurveModel::hermitian(1);
    const auto cl = functional_code(curve, DivisorSpec{4, 0, std::nullopt});
    const auto d = dual_code(cl);
    EXPECT_EQ(cl.dimension(), 4u);
    EXPECT_EQ(d.dimension(), 3u);
    EXPECT_EQ(d, residue_code(curve, DivisorSpec{4, 0, std::nullopt}));
}

TEST(linalg, dual_is_involution_and_orthogonal) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = LinearCodeQ::from_spanning(random_matrix(gf(2 + trial % 3), 3, 7, rng));
        const auto d = dual_code(c);
        EXPECT_EQ(c.dimension() + d.dimension(), 7u);
        EXPECT_EQ(dual_code(d), c);
        const auto prod = multiply_transpose(c.generator(), d.generator());
        for (std::size_t i = 0; i < prod.rows(); ++i) {
            for (std::size_t j = 0; j < prod.cols(); ++j) ASSERT_EQ(prod.raw(i, j), 0);
        }
        const auto b = BinaryCode::from_spanning(random_bits(4, 70, rng));
        const auto bd = dual_code(b);
        EXPECT_EQ(b.dimension() + bd.dimension(), 70u);
        EXPECT_EQ(dual_code(bd), b);
        EXPECT_FALSE(first_nonorthogonal(b.generator(), bd.generator()).has_value());
    }
}

TEST(linalg, subcode) {
    const auto h = BinaryCode(hamming74());
    EXPECT_TRUE(is_subcode(h, h));
    EXPECT_TRUE(is_subcode(BinaryCode::zero(7), h));
    EXPECT_TRUE(is_subcode(dual_code(h), h));
    EXPECT_FALSE(is_subcode(h, dual_code(h)));
    EXPECT_TRUE(is_subcode(h, BinaryCode::full_space(7)));
    const auto curve = CurveModel::hermitian(1);
    const auto c1 = functional_code(curve, DivisorSpec{4, 0, std::nullopt});
    EXPECT_TRUE(is_subcode(LinearCodeQ::zero(gf(2), 7), c1));
    // T1 = C_L(mP - m'Q) inside T2 = C_L(mP).
    const auto t1 = functional_code(curve, DivisorSpec{4, 1, std::nullopt});
    EXPECT_TRUE(is_subcode(t1, c1));
    EXPECT_TRUE(is_subcode(dual_code(c1), dual_code(t1)));
}

TEST(linalg, min_distance_examples) {
    EXPECT_EQ(min_distance_exact(BinaryCode(BitMatrix::from_rows(3, {{1, 1, 1}}))), 3);
    EXPECT_EQ(min_distance_exact(BinaryCode(BitMatrix::from_rows(3, {{1, 0, 1}}))), 2);
    EXPECT_EQ(min_distance_exact(BinaryCode(hamming74())), 3);
    const auto rs = functional_code(CurveModel::projective_line(2), DivisorSpec{1, 0, std::nullopt});
    EXPECT_EQ(rs.length(), 3u);
    const auto rs4 = [] {
        // [4,2] Reed-Solomon over GF(4): evaluations of 1 and x at the four field elements.
        const FieldSpec &f = gf(2);
        std::vector<std::vector<FieldElement>> rows(2);
        for (const auto &a : f.elements()) {
            rows[0].push_back(f.one());
            rows[1].push_back(a);
        }
        return LinearCodeQ(MatQ::from_rows(f, 4, rows));
    }();
    EXPECT_EQ(min_distance_exact(rs4), 3);
    EXPECT_EQ(oracle::brute_min_distance(rs4.generator()), 3);
    EXPECT_THROW(min_distance_exact(BinaryCode::zero(4)), UsageError);
}

TEST(linalg, min_distance_matches_brute_force) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const auto c = LinearCodeQ::from_spanning(random_matrix(gf(1 + trial % 3), 1 + trial % 4, 8, rng));
        if (c.dimension() == 0) continue;
        ASSERT_EQ(min_distance_exact(c), oracle::brute_min_distance(c.generator())) << "trial " << trial;
        const auto b = BinaryCode::from_spanning(random_bits(1 + trial % 9, 13 + trial % 60, rng));
        if (b.dimension() == 0) continue;
        ASSERT_EQ(min_distance_exact(b), oracle::brute_binary_min_distance(b.generator())) << "trial " << trial;
    }
}

TEST(linalg, min_distance_independent_of_threads) {
    std::mt19937_64 rng(9);
    const auto b = BinaryCode::from_spanning(random_bits(16, 90, rng));
    const int d1 = min_distance_exact(b, kDefaultEnumerationBudget, 1);
    for (unsigned th : {2u, 3u, 8u}) EXPECT_EQ(min_distance_exact(b, kDefaultEnumerationBudget, th), d1);
}

TEST(linalg, min_distance_budget) {
    std::mt19937_64 rng(13);
    const auto b = BinaryCode::from_spanning(random_bits(12, 40, rng));
    EXPECT_THROW(min_distance_exact(b, 100), CapacityError);
    EXPECT_NO_THROW(min_distance_exact(b, 1u << 12));
}

TEST(linalg, min_weight_upper) {
    const auto rep = BinaryCode(BitMatrix::from_rows(3, {{1, 1, 1}}));
    for (std::uint64_t seed : {1u, 2u, 99u}) EXPECT_EQ(min_weight_upper(rep, 10, seed), 3);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto b = BinaryCode::from_spanning(random_bits(8, 30, rng));
        const int exact = min_distance_exact(b);
        EXPECT_EQ(min_weight_upper(b, 1u << 8, trial), exact);
        EXPECT_GE(min_weight_upper(b, 5, trial), exact);
        EXPECT_EQ(min_weight_upper(b, 50, 4), min_weight_upper(b, 50, 4));
        const auto q = LinearCodeQ::from_spanning(random_matrix(gf(2), 3, 7, rng));
        EXPECT_EQ(min_weight_upper(q, 64, trial), min_distance_exact(q));
        EXPECT_GE(min_weight_upper(q, 3, trial), min_distance_exact(q));
    }
}

TEST(linalg, failing_checks_filter) {
    // Words of the Hamming code that are not in its dual: the Steane logicals, weight 3.
    const auto h = BinaryCode(hamming74());
    const auto hd = dual_code(h);
    EXPECT_EQ(min_weight_failing_checks(h, h.generator()), 3);
    // Every word of the dual is orthogonal to the Hamming code.
    EXPECT_EQ(min_weight_failing_checks(hd, h.generator()), std::nullopt);
}

TEST(linalg, bitmatrix_basics) {
    BitMatrix m(3, 130);
    m.set(0, 129, true);
    m.set(1, 0, true);
    m.set(2, 64, true);
    EXPECT_TRUE(m.get(0, 129));
    EXPECT_EQ(m.row_weight(0), 1u);
    m.xor_row(0, 1);
    EXPECT_EQ(m.row_weight(1), 2u);
    m.swap_rows(0, 2);
    EXPECT_TRUE(m.get(0, 64));
    EXPECT_EQ(rank(m), 3u);
    const auto s = m.stacked(m);
    EXPECT_EQ(s.rows(), 6u);
    EXPECT_EQ(rank(s), 3u);
    EXPECT_EQ(kernel(s).rows(), 127u);
    EXPECT_THROW(BinaryCode{s}, UsageError);
    EXPECT_THROW(LinearCodeQ{MatQ(gf(2), 2, 3)}, UsageError);
}
