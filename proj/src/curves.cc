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

#include <algorithm>
#include <sstream>

#include "agcss/errors.h"

namespace agcss {

CurveModel CurveModel::projective_line(unsigned t) {
    if (t < 1 || t > FieldSpec::kMaxDegree) {
        throw UsageError("projective line needs 1 <= t <= 8, got t = " + std::to_string(t));
    }
    return CurveModel(ProjectiveLine{t}, t, FieldSpec::canonical(t), 1);
}

CurveModel CurveModel::hermitian(unsigned t) {
    if (t < 1 || 2 * t > FieldSpec::kMaxDegree) {
        throw UsageError("Hermitian curve needs 1 <= t <= 4, got t = " + std::to_string(t));
    }
    return CurveModel(HermitianFamily{t}, t, FieldSpec::canonical(2 * t), 1u << t);
}

CurveModel CurveModel::from_descriptor(const std::string &family, unsigned t) {
    if (family == "p1") return projective_line(t);
    if (family == "hermitian") return hermitian(t);
    throw UsageError("unknown curve family '" + family + "' (expected p1 or hermitian)");
}

std::size_t CurveModel::num_points() const {
    if (is_projective_line()) return (std::size_t{1} << t_) + 1;
    return (std::size_t{1} << (3 * t_)) + 1;
}

int CurveModel::genus() const {
    if (is_projective_line()) return 0;
    return static_cast<int>((1u << (t_ - 1)) * ((1u << t_) - 1));
}

int CurveModel::pole_order(int i, int j) const noexcept {
    if (is_projective_line()) return i;
    const int q = static_cast<int>(q0_);
    return i * q + j * (q + 1);
}

bool on_curve(const CurveModel &curve, const AffinePoint &p) {
    if (p.x.spec() != curve.field()) return false;
    if (curve.is_projective_line()) return !p.y.has_value();
    if (!p.y || p.y->spec() != curve.field()) return false;
    const unsigned q = curve.q0();
    return p.y->pow(q) + *p.y == p.x.pow(q + 1);
}

std::string to_string(const RationalPoint &p) {
    if (std::holds_alternative<PointAtInfinity>(p)) return "inf";
    const auto &a = std::get<AffinePoint>(p);
    std::string s = "(" + a.x.to_string();
    if (a.y) s += "," + a.y->to_string();
    return s + ")";
}

FunctionRep FunctionRep::monomial(const CurveModel &curve, Monomial mono) {
    FunctionRep f(curve);
    f.add_term(mono, curve.field().one());
    return f;
}

void FunctionRep::add_term(Monomial mono, const FieldElement &c) {
    require_same_field(c.spec(), curve_.field());
    if (mono.i < 0 || mono.j < 0) throw UsageError("monomial exponents must be nonnegative");
    if (curve_.is_projective_line() && mono.j != 0) throw UsageError("the projective line has no y coordinate");
    if (c.is_zero()) return;
    const int q = static_cast<int>(curve_.q0());
    if (!curve_.is_projective_line() && mono.j >= q) {
        // y^q0 = y + x^(q0+1)
        add_term({mono.i, mono.j - q + 1}, c);
        add_term({mono.i + q + 1, mono.j - q}, c);
        return;
    }
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FunctionRep FunctionRep::operator+(const FunctionRep &b) const {
    if (!(curve_ == b.curve_)) throw UsageError("functions live on different curves");
    FunctionRep out = *this;
    for (const auto &[mono, c] : b.terms_) out.add_term(mono, c);
    return out;
}

FunctionRep FunctionRep::scaled(const FieldElement &c) const {
    FunctionRep out(curve_);
    for (const auto &[mono, v] : terms_) out.add_term(mono, v * c);
    return out;
}

int FunctionRep::pole_order() const {
    int best = -1;
    for (const auto &[mono, c] : terms_) best = std::max(best, curve_.pole_order(mono.i, mono.j));
    return best;
}

FieldElement FunctionRep::evaluate(const AffinePoint &p) const {
    require_same_field(p.x.spec(), curve_.field());
    FieldElement acc = curve_.field().zero();
    for (const auto &[mono, c] : terms_) {
        FieldElement term = c * p.x.pow(static_cast<std::uint64_t>(mono.i));
        if (mono.j > 0) {
            if (!p.y) throw UsageError("evaluating a y-term at a point without y");
            term *= p.y->pow(static_cast<std::uint64_t>(mono.j));
        }
        acc += term;
    }
    return acc;
}

std::string FunctionRep::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[mono, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool unit = c.value() == 1;
        if (!unit || (mono.i == 0 && mono.j == 0)) os << c.to_string();
        if (mono.i > 0) os << (unit ? "" : "*") << "x" << (mono.i > 1 ? "^" + std::to_string(mono.i) : "");
        if (mono.j > 0) {
            os << ((!unit || mono.i > 0) ? "*" : "") << "y" << (mono.j > 1 ? "^" + std::to_string(mono.j) : "");
        }
    }
    return os.str();
}

std::vector<AffinePoint> affine_points(const CurveModel &curve) {
    std::vector<AffinePoint> out;
    const FieldSpec &f = curve.field();
    if (curve.is_projective_line()) {
        for (const auto &x : f.elements()) out.push_back({x, std::nullopt});
    } else {
        const unsigned q = curve.q0();
        for (const auto &x : f.elements()) {
            const FieldElement rhs = x.pow(q + 1);
            for (const auto &y : f.elements()) {
                if (y.pow(q) + y == rhs) out.push_back({x, y});
            }
        }
    }
    if (out.size() + 1 != curve.num_points()) throw DefectError("rational point count disagrees with N");
    return out;
}

std::vector<RationalPoint> rational_points(const CurveModel &curve) {
    std::vector<RationalPoint> out{PointAtInfinity{}};
    for (auto &p : affine_points(curve)) out.emplace_back(std::move(p));
    return out;
}

AffinePoint default_q_point(const CurveModel &curve) { return affine_points(curve).front(); }

std::vector<AffinePoint> evaluation_set(const CurveModel &curve, const AffinePoint &q_point) {
    auto pts = affine_points(curve);
    auto it = std::find(pts.begin(), pts.end(), q_point);
    if (it == pts.end()) throw UsageError("Q " + to_string(RationalPoint{q_point}) + " is not on the curve");
    pts.erase(it);
    return pts;
}

std::vector<Monomial> one_point_monomials(const CurveModel &curve, int m) {
    std::vector<Monomial> out;
    if (m < 0) return out;
    const int jmax = static_cast<int>(curve.q0()) - 1;
    for (int j = 0; j <= jmax; ++j) {
        for (int i = 0; curve.pole_order(i, j) <= m; ++i) out.push_back({i, j});
    }
    std::sort(out.begin(), out.end(), [&](const Monomial &a, const Monomial &b) {
        const int pa = curve.pole_order(a.i, a.j);
        const int pb = curve.pole_order(b.i, b.j);
        return pa != pb ? pa < pb : a.j < b.j;
    });
    return out;
}

std::vector<FunctionRep> one_point_basis(const CurveModel &curve, int m) {
    std::vector<FunctionRep> out;
    for (const auto &mono : one_point_monomials(curve, m)) out.push_back(FunctionRep::monomial(curve, mono));
    return out;
}

namespace {

void require_on_curve(const CurveModel &curve, const AffinePoint &q) {
    if (!on_curve(curve, q)) throw UsageError("point " + to_string(RationalPoint{q}) + " is not on the curve");
}

}  // namespace

TruncatedSeries local_y_series(const CurveModel &curve, const AffinePoint &q_point, std::size_t precision) {
    require_on_curve(curve, q_point);
    if (curve.is_projective_line()) throw UsageError("the projective line has no y coordinate");
    const unsigned q = curve.q0();
    const TruncatedSeries rhs = TruncatedSeries::shifted_parameter(q_point.x, precision).pow(q + 1);
    TruncatedSeries y = TruncatedSeries::constant(*q_point.y, precision);
    // F(y) = y^q + y + rhs has F' = 1, so y <- y + F(y) multiplies the
    // s-adic order of the error by q each step.
    for (int step = 0; step < 64; ++step) {
        const TruncatedSeries residual = y.pow(q) + y + rhs;
        if (residual.is_zero()) return y;
        y = y + residual;
    }
    throw DefectError("Artin-Schreier lifting did not converge");
}

TruncatedSeries local_expand(const FunctionRep &f, const AffinePoint &q_point, std::size_t precision) {
    const CurveModel &curve = f.curve();
    require_on_curve(curve, q_point);
    const FieldSpec &field = curve.field();
    int max_i = 0;
    int max_j = 0;
    for (const auto &[mono, c] : f.terms()) {
        max_i = std::max(max_i, mono.i);
        max_j = std::max(max_j, mono.j);
    }
    const TruncatedSeries one = TruncatedSeries::constant(field.one(), precision);
    std::vector<TruncatedSeries> xpow{one};
    const TruncatedSeries xs = TruncatedSeries::shifted_parameter(q_point.x, precision);
    for (int i = 1; i <= max_i; ++i) xpow.push_back(xpow.back() * xs);
    std::vector<TruncatedSeries> ypow{one};
    if (max_j > 0) {
        const TruncatedSeries ys = local_y_series(curve, q_point, precision);
        for (int j = 1; j <= max_j; ++j) ypow.push_back(ypow.back() * ys);
    }
    TruncatedSeries acc(field, precision);
    for (const auto &[mono, c] : f.terms()) acc = acc + (xpow[mono.i] * ypow[mono.j]).scaled(c);
    return acc;
}

int vanishing_order(const FunctionRep &f, const AffinePoint &q_point, int cap) {
    if (f.is_zero()) throw DomainError("the zero function vanishes to infinite order");
    if (cap < 0) throw UsageError("vanishing_order: cap must be >= 0");
    const auto series = local_expand(f, q_point, static_cast<std::size_t>(cap) + 1);
    const auto v = series.valuation();
    return v ? std::min(static_cast<int>(*v), cap) : cap;
}

std::vector<FunctionRep> riemann_roch_basis(const CurveModel &curve, const DivisorSpec &div) {
    if (div.m < 0 || div.mprime < 0) throw UsageError("divisor needs m >= 0 and m' >= 0");
    const AffinePoint q = div.q_point ? *div.q_point : default_q_point(curve);
    require_on_curve(curve, q);
    const auto monos = one_point_monomials(curve, div.m);
    const FieldSpec &field = curve.field();
    MatQ coords(field, 0, monos.size());
    if (div.mprime == 0) {
        coords = MatQ::identity(field, monos.size());
    } else {
        // Column c holds the first m' local coefficients of monomial c.
        const auto prec = static_cast<std::size_t>(div.mprime);
        MatQ constraints(field, prec, monos.size());
        for (std::size_t c = 0; c < monos.size(); ++c) {
            const auto series = local_expand(FunctionRep::monomial(curve, monos[c]), q, prec);
            for (std::size_t r = 0; r < prec; ++r) constraints.raw(r, c) = series.raw()[r];
        }
        coords = kernel(constraints);
    }
    const auto red = rref(coords);
    std::vector<FunctionRep> out;
    for (std::size_t r = 0; r < red.rank; ++r) {
        FunctionRep f(curve);
        for (std::size_t c = 0; c < monos.size(); ++c) {
            if (red.matrix.raw(r, c) != 0) f.add_term(monos[c], red.matrix.at(r, c));
        }
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

void check_code_degree(const CurveModel &curve, const DivisorSpec &div) {
    if (div.m < 0 || div.mprime < 0) throw ParameterError("m >= 0 and m' >= 0 violated");
    const int g = curve.genus();
    const int n = static_cast<int>(curve.num_points()) - 2;
    const int deg = div.degree();
    if (!(2 * g - 2 < deg)) {
        throw ParameterError("2g-2 < deg G violated (deg G = " + std::to_string(deg) +
                             ", 2g-2 = " + std::to_string(2 * g - 2) + ")");
    }
    if (!(deg < n)) {
        throw ParameterError("deg G < n violated (deg G = " + std::to_string(deg) + ", n = " + std::to_string(n) +
                             ")");
    }
}

}  // namespace

LinearCodeQ functional_code(const CurveModel &curve, const DivisorSpec &div) {
    check_code_degree(curve, div);
    const AffinePoint q = div.q_point ? *div.q_point : default_q_point(curve);
    const auto points = evaluation_set(curve, q);
    DivisorSpec resolved = div;
    resolved.q_point = q;
    const auto basis = riemann_roch_basis(curve, resolved);
    MatQ gen(curve.field(), basis.size(), points.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        for (std::size_t c = 0; c < points.size(); ++c) gen.set(r, c, basis[r].evaluate(points[c]));
    }
    if (rank(gen) != basis.size()) throw DefectError("evaluation map is not injective below deg G < n");
    const int expected = div.degree() - curve.genus() + 1;
    if (static_cast<int>(basis.size()) != expected) {
        throw DefectError("functional code dimension " + std::to_string(basis.size()) + " != deg G - g + 1 = " +
                          std::to_string(expected));
    }
    return LinearCodeQ(std::move(gen));
}

LinearCodeQ residue_code(const CurveModel &curve, const DivisorSpec &div) {
    return dual_code(functional_code(curve, div));
}

}  // namespace agcss
