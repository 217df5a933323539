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

#include "agcss/curves.h"

#include <gtest/gtest.h>

#include <set>

#include "agcss/errors.h"
#include "oracles.h"

using namespace agcss;

namespace {

/// Counts affine solutions of y^q + y = x^(q+1) over GF(q^2) by brute force.
std::size_t brute_hermitian_affine(unsigned t) {
    const unsigned deg = 2 * t;
    const unsigned mod = FieldSpec::default_modulus(deg);
    const unsigned q = 1u << t;
    std::size_t count = 0;
    for (unsigned x = 0; x < (1u << deg); ++x) {
        const unsigned rhs = oracle::poly_pow(x, q + 1, mod, deg);
        for (unsigned y = 0; y < (1u << deg); ++y) {
            if ((oracle::poly_pow(y, q, mod, deg) ^ y) == rhs) ++count;
        }
    }
    return count;
}

/// Span equality of two function lists over a common monomial support.
bool same_span(const CurveModel &curve, const std::vector<FunctionRep> &a, const std::vector<FunctionRep> &b) {
    std::set<Monomial> support;
    for (const auto *list : {&a, &b}) {
        for (const auto &f : *list) {
            for (const auto &[mono, c] : f.terms()) support.insert(mono);
        }
    }
    const std::vector<Monomial> cols(support.begin(), support.end());
    auto to_mat = [&](const std::vector<FunctionRep> &fs) {
        MatQ m(curve.field(), fs.size(), cols.size());
        for (std::size_t r = 0; r < fs.size(); ++r) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                auto it = fs[r].terms().find(cols[c]);
                if (it != fs[r].terms().end()) m.set(r, c, it->second);
            }
        }
        return m;
    };
    if (cols.empty()) return a.size() == b.size();
    const auto ma = to_mat(a);
    const auto mb = to_mat(b);
    return rank(ma) == rank(mb) && rank(ma.stacked(mb)) == rank(ma);
}

std::vector<FunctionRep> monomials(const CurveModel &curve, std::vector<Monomial> ms) {
    std::vector<FunctionRep> out;
    for (auto m : ms) out.push_back(FunctionRep::monomial(curve, m));
    return out;
}

/// Multiplicity of the root a of a univariate polynomial, by synthetic division.
int root_multiplicity(const FunctionRep &f, const FieldElement &a) {
    int deg = 0;
    for (const auto &[mono, c] : f.terms()) deg = std::max(deg, mono.i);
    std::vector<FieldElement> coeffs(deg + 1, a.spec().zero());
    for (const auto &[mono, c] : f.terms()) coeffs[mono.i] = c;
    int mult = 0;
    while (coeffs.size() > 1) {
        // Divide by (x - a): Horner from the top.
        std::vector<FieldElement> quot(coeffs.size() - 1, a.spec().zero());
        FieldElement carry = a.spec().zero();
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            const FieldElement v = coeffs[k] + carry * a;
            if (k == 0) {
                if (!v.is_zero()) return mult;
            } else {
                quot[k - 1] = v;
            }
            carry = v;
        }
        coeffs = quot;
        ++mult;
    }
    return mult;
}

}  // namespace

TEST(curves, point_counts) {
    EXPECT_EQ(CurveModel::hermitian(1).num_points(), 9u);
    EXPECT_EQ(CurveModel::hermitian(1).genus(), 1);
    EXPECT_EQ(CurveModel::projective_line(2).num_points(), 5u);
    EXPECT_EQ(CurveModel::projective_line(2).genus(), 0);
    for (unsigned t = 1; t <= 3; ++t) {
        const auto c = CurveModel::hermitian(t);
        const std::size_t affine = brute_hermitian_affine(t);
        EXPECT_EQ(affine + 1, c.num_points()) << "t=" << t;
        EXPECT_EQ(c.num_points(), (std::size_t{1} << (3 * t)) + 1);
        EXPECT_EQ(rational_points(c).size(), c.num_points());
        EXPECT_EQ(affine_points(c).size(), affine);
        EXPECT_EQ(c.genus(), static_cast<int>((1u << (t - 1)) * ((1u << t) - 1)));
    }
    EXPECT_EQ(CurveModel::hermitian(2).num_points(), 65u);
    for (unsigned t = 1; t <= 8; ++t) EXPECT_EQ(CurveModel::projective_line(t).num_points(), (1u << t) + 1);
}

TEST(curves, points_lie_on_curve) {
    for (unsigned t = 1; t <= 2; ++t) {
        const auto c = CurveModel::hermitian(t);
        const FieldSpec &f = c.field();
        const unsigned q = 1u << t;
        std::set<std::pair<unsigned, unsigned>> seen;
        for (const auto &p : affine_points(c)) {
            ASSERT_TRUE(p.y.has_value());
            EXPECT_TRUE(on_curve(c, p));
            EXPECT_EQ(oracle::poly_pow(p.y->value(), q, f.modulus(), f.degree()) ^ p.y->value(),
                      oracle::poly_pow(p.x.value(), q + 1, f.modulus(), f.degree()));
            seen.insert({p.x.value(), p.y->value()});
        }
        EXPECT_EQ(seen.size(), affine_points(c).size());
        EXPECT_FALSE(on_curve(c, AffinePoint{f.one(), f.zero()}));
    }
    EXPECT_THROW(CurveModel::hermitian(5), UsageError);
    EXPECT_THROW(CurveModel::from_descriptor("elliptic", 1), UsageError);
}

TEST(curves, evaluation_set_excludes_q) {
    const auto c = CurveModel::hermitian(1);
    const auto q = default_q_point(c);
    const auto d = evaluation_set(c, q);
    EXPECT_EQ(d.size(), 7u);
    for (const auto &p : d) EXPECT_NE(p, q);
    EXPECT_EQ(evaluation_set(CurveModel::projective_line(3), default_q_point(CurveModel::projective_line(3))).size(), 7u);
}

TEST(curves, one_point_basis_examples) {
    const auto c = CurveModel::hermitian(1);
    const auto b = one_point_basis(c, 4);
    ASSERT_EQ(b.size(), 4u);
    EXPECT_TRUE(same_span(c, b, monomials(c, {{0, 0}, {1, 0}, {0, 1}, {2, 0}})));
    std::multiset<int> poles;
    for (const auto &f : b) poles.insert(f.pole_order());
    EXPECT_EQ(poles, (std::multiset<int>{0, 2, 3, 4}));
    EXPECT_EQ(one_point_basis(c, 1).size(), 1u);
    EXPECT_EQ(one_point_basis(CurveModel::projective_line(2), 0).size(), 1u);
}

TEST(curves, one_point_dimension_matches_nongaps) {
    for (unsigned t = 1; t <= 3; ++t) {
        const auto c = CurveModel::hermitian(t);
        const int q = 1 << t;
        for (int m = 0; m <= 3 * c.genus() + 4; ++m) {
            // Non-gaps are a*q + b*(q+1) with a, b >= 0.
            int nongaps = 0;
            for (int v = 0; v <= m; ++v) {
                bool hit = false;
                for (int bb = 0; bb * (q + 1) <= v && !hit; ++bb) hit = (v - bb * (q + 1)) % q == 0;
                nongaps += hit;
            }
            ASSERT_EQ(static_cast<int>(one_point_monomials(c, m).size()), nongaps) << "t=" << t << " m=" << m;
            if (m >= 2 * c.genus() - 1) {
                ASSERT_EQ(nongaps, m - c.genus() + 1);
            }
        }
    }
}

TEST(curves, reduction_uses_curve_equation) {
    const auto c = CurveModel::hermitian(1);
    FunctionRep f(c);
    f.add_term({0, 2}, c.field().one());
    // y^2 = y + x^3.
    FunctionRep g(c);
    g.add_term({0, 1}, c.field().one());
    g.add_term({3, 0}, c.field().one());
    EXPECT_EQ(f, g);
    for (const auto &p : affine_points(c)) EXPECT_EQ(f.evaluate(p), p.y->pow(2));
    EXPECT_EQ(g.pole_order(), 6);
    EXPECT_EQ(FunctionRep(c).pole_order(), -1);
}

TEST(curves, local_y_series_example) {
    const auto c = CurveModel::hermitian(1);
    const FieldSpec &f = c.field();
    const AffinePoint q{f.zero(), f.zero()};
    const auto y = local_y_series(c, q, 7);
    const std::vector<std::uint8_t> expect{0, 0, 0, 1, 0, 0, 1};
    EXPECT_EQ(y.raw(), expect);
    // Squaring the truncation: y^2 + y = s^3 to precision 7.
    const auto s = TruncatedSeries::shifted_parameter(f.zero(), 7);
    EXPECT_EQ(y.pow(2) + y, s.pow(3));
}

TEST(curves, local_y_series_satisfies_equation_everywhere) {
    for (unsigned t = 1; t <= 2; ++t) {
        const auto c = CurveModel::hermitian(t);
        const unsigned q = 1u << t;
        for (const auto &p : affine_points(c)) {
            const auto y = local_y_series(c, p, 20);
            const auto x = TruncatedSeries::shifted_parameter(p.x, 20);
            ASSERT_EQ(y.coeff(0), *p.y);
            ASSERT_TRUE((y.pow(q) + y + x.pow(q + 1)).is_zero());
        }
    }
}

TEST(curves, local_expand_examples) {
    const auto c = CurveModel::hermitian(1);
    const FieldSpec &f = c.field();
    for (const auto &p : affine_points(c)) {
        const auto one = local_expand(FunctionRep::monomial(c, {0, 0}), p, 5);
        EXPECT_EQ(one.raw(), (std::vector<std::uint8_t>{1, 0, 0, 0, 0}));
        auto xa = FunctionRep::monomial(c, {1, 0});
        xa.add_term({0, 0}, p.x);
        EXPECT_EQ(local_expand(xa, p, 5).raw(), (std::vector<std::uint8_t>{0, 1, 0, 0, 0}));
    }
    const AffinePoint origin{f.zero(), f.zero()};
    EXPECT_EQ(vanishing_order(FunctionRep::monomial(c, {0, 1}), origin, 10), 3);
    EXPECT_EQ(vanishing_order(FunctionRep::monomial(c, {0, 0}), origin, 10), 0);
    EXPECT_EQ(vanishing_order(FunctionRep::monomial(c, {1, 0}), origin, 10), 1);
    EXPECT_THROW(vanishing_order(FunctionRep(c), origin, 10), DomainError);
}

TEST(curves, local_expansion_agrees_with_values) {
    // The constant term of the expansion is the value at the point.
    const auto c = CurveModel::hermitian(2);
    const auto basis = one_point_basis(c, 14);
    for (const auto &p : affine_points(c)) {
        for (const auto &fn : basis) ASSERT_EQ(local_expand(fn, p, 3).coeff(0), fn.evaluate(p));
    }
}

TEST(curves, riemann_roch_examples) {
    const auto c = CurveModel::hermitian(1);
    const FieldSpec &f = c.field();
    const AffinePoint origin{f.zero(), f.zero()};
    const auto b = riemann_roch_basis(c, DivisorSpec{4, 1, origin});
    EXPECT_EQ(b.size(), 3u);
    EXPECT_TRUE(same_span(c, b, monomials(c, {{1, 0}, {0, 1}, {2, 0}})));
    for (int m = 0; m <= 8; ++m) {
        EXPECT_TRUE(same_span(c, riemann_roch_basis(c, DivisorSpec{m, 0, origin}), one_point_basis(c, m)));
    }
    const auto p1 = CurveModel::projective_line(2);
    const AffinePoint zero{p1.field().zero(), std::nullopt};
    const auto pb = riemann_roch_basis(p1, DivisorSpec{3, 2, zero});
    EXPECT_EQ(pb.size(), 2u);
    EXPECT_TRUE(same_span(p1, pb, monomials(p1, {{2, 0}, {3, 0}})));
    EXPECT_TRUE(riemann_roch_basis(c, DivisorSpec{3, 4, origin}).empty());
    EXPECT_THROW(riemann_roch_basis(c, DivisorSpec{-1, 0, origin}), UsageError);
}

TEST(curves, riemann_roch_projective_line_oracle) {
    // Q = 0: L(mP - m'Q) = span{x^m', ..., x^m}. Other Q: multiplicity at Q checked by division.
    for (unsigned t = 1; t <= 3; ++t) {
        const auto c = CurveModel::projective_line(t);
        const AffinePoint zero{c.field().zero(), std::nullopt};
        for (int m = 0; m <= 9; ++m) {
            for (int mp = 0; mp <= m; ++mp) {
                std::vector<Monomial> expect;
                for (int i = mp; i <= m; ++i) expect.push_back({i, 0});
                ASSERT_TRUE(same_span(c, riemann_roch_basis(c, DivisorSpec{m, mp, zero}), monomials(c, expect)));
                for (const auto &q : affine_points(c)) {
                    const auto b = riemann_roch_basis(c, DivisorSpec{m, mp, q});
                    ASSERT_EQ(static_cast<int>(b.size()), m - mp + 1);
                    for (const auto &fn : b) {
                        ASSERT_LE(fn.pole_order(), m);
                        ASSERT_GE(root_multiplicity(fn, q.x), mp);
                    }
                }
            }
        }
    }
}

TEST(curves, riemann_roch_dimension_grid) {
    std::size_t cases = 0;
    for (unsigned t = 1; t <= 2; ++t) {
        const auto c = CurveModel::hermitian(t);
        const int g = c.genus();
        const auto pts = affine_points(c);
        for (std::size_t pi = 0; pi < pts.size(); pi += t == 1 ? 1 : 9) {
            for (int m = 0; m <= 2 * g + 6; ++m) {
                for (int mp = 0; mp <= m; ++mp) {
                    const auto b = riemann_roch_basis(c, DivisorSpec{m, mp, pts[pi]});
                    if (m - mp > 2 * g - 2) {
                        ASSERT_EQ(static_cast<int>(b.size()), m - mp - g + 1) << "m=" << m << " m'=" << mp;
                        ++cases;
                    }
                    for (const auto &fn : b) {
                        ASSERT_LE(fn.pole_order(), m);
                        ASSERT_GE(vanishing_order(fn, pts[pi], mp + 1), mp);
                    }
                    // Values at Q are zero whenever m' >= 1.
                    if (mp >= 1) {
                        for (const auto &fn : b) ASSERT_TRUE(fn.evaluate(pts[pi]).is_zero());
                    }
                }
            }
        }
    }
    EXPECT_GE(cases, 100u);
}

TEST(curves, functional_code_examples) {
    const auto c = CurveModel::hermitian(1);
    const auto cl = functional_code(c, DivisorSpec{4, 0, std::nullopt});
    EXPECT_EQ(cl.length(), 7u);
    EXPECT_EQ(cl.dimension(), 4u);
    EXPECT_GE(oracle::brute_min_distance(cl.generator()), 3);
    const auto p1 = functional_code(CurveModel::projective_line(2), DivisorSpec{1, 0, std::nullopt});
    EXPECT_EQ(p1.length(), 3u);
    EXPECT_EQ(p1.dimension(), 2u);
    EXPECT_EQ(oracle::brute_min_distance(p1.generator()), 2);
    EXPECT_THROW(functional_code(c, DivisorSpec{0, 0, std::nullopt}), ParameterError);
    EXPECT_THROW(functional_code(c, DivisorSpec{7, 0, std::nullopt}), ParameterError);
}

TEST(curves, residue_code_examples) {
    const auto c = CurveModel::hermitian(1);
    const auto co = residue_code(c, DivisorSpec{4, 0, std::nullopt});
    EXPECT_EQ(co.dimension(), 3u);
    EXPECT_GE(oracle::brute_min_distance(co.generator()), 4);
    const auto p1 = residue_code(CurveModel::projective_line(2), DivisorSpec{1, 0, std::nullopt});
    EXPECT_EQ(p1.dimension(), 1u);
    EXPECT_EQ(oracle::brute_min_distance(p1.generator()), 3);
}

TEST(curves, code_parameter_laws) {
    for (const auto &c : {CurveModel::projective_line(2), CurveModel::projective_line(3), CurveModel::hermitian(1)}) {
        const int n = static_cast<int>(c.num_points()) - 2;
        const int g = c.genus();
        for (int m = 0; m < static_cast<int>(c.num_points()); ++m) {
            for (int mp = 0; mp <= m; ++mp) {
                const int deg = m - mp;
                if (!(2 * g - 2 < deg && deg < n)) continue;
                for (const auto &q : {affine_points(c).front(), affine_points(c).back()}) {
                    const auto cl = functional_code(c, DivisorSpec{m, mp, q});
                    const auto co = residue_code(c, DivisorSpec{m, mp, q});
                    ASSERT_EQ(static_cast<int>(cl.dimension()), deg - g + 1);
                    ASSERT_EQ(cl.dimension() + co.dimension(), static_cast<std::size_t>(n));
                    const int d = oracle::brute_min_distance(cl.generator());
                    ASSERT_GE(d, n - deg);
                    if (g == 0) {
                        ASSERT_EQ(d, n - deg);
                    }
                    ASSERT_GE(oracle::brute_min_distance(co.generator()), deg - 2 * g + 2);
                }
            }
        }
    }
}

TEST(curves, functional_codes_nest) {
    const auto c = CurveModel::hermitian(1);
    for (int m = 1; m <= 6; ++m) {
        for (int mp = 0; mp + 1 <= m - 1; ++mp) {
            const auto a = functional_code(c, DivisorSpec{m, mp + 1, std::nullopt});
            const auto b = functional_code(c, DivisorSpec{m, mp, std::nullopt});
            ASSERT_TRUE(is_subcode(a, b));
        }
    }
}
