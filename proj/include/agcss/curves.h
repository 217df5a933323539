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

#ifndef AGCSS_CURVES_H
#define AGCSS_CURVES_H

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "agcss/gf2t.h"
#include "agcss/linalg.h"
#include "agcss/series.h"

namespace agcss {

/// The projective line over GF(2^t).
struct ProjectiveLine {
    unsigned t;
};

/// y^q0 + y = x^(q0+1) over GF(q0^2), q0 = 2^t. t = 1 is the maximal
/// elliptic curve y^2 + y = x^3 over GF(4).
struct HermitianFamily {
    unsigned t;
};

class CurveModel {
   public:
    static CurveModel projective_line(unsigned t);
    static CurveModel hermitian(unsigned t);
    /// family is "p1" or "hermitian".
    static CurveModel from_descriptor(const std::string &family, unsigned t);

    bool is_projective_line() const noexcept { return std::holds_alternative<ProjectiveLine>(model_); }
    const std::variant<ProjectiveLine, HermitianFamily> &model() const noexcept { return model_; }
    std::string family() const { return is_projective_line() ? "p1" : "hermitian"; }
    unsigned t() const noexcept { return t_; }

    /// Field of definition, GF(2^t) or GF(2^(2t)).
    const FieldSpec &field() const noexcept { return *field_; }
    /// Degree of the field of definition over GF(2): the binary expansion factor.
    unsigned expansion_degree() const noexcept { return field_->degree(); }
    /// y-degree bound of reduced functions; 1 on the projective line.
    unsigned q0() const noexcept { return q0_; }
    /// Number of rational points N.
    std::size_t num_points() const;
    int genus() const;
    /// Pole order of x^i y^j at infinity.
    int pole_order(int i, int j) const noexcept;

    bool operator==(const CurveModel &other) const noexcept {
        return is_projective_line() == other.is_projective_line() && t_ == other.t_;
    }

   private:
    CurveModel(std::variant<ProjectiveLine, HermitianFamily> model, unsigned t, const FieldSpec &field, unsigned q0)
        : model_(model), t_(t), field_(&field), q0_(q0) {}

    std::variant<ProjectiveLine, HermitianFamily> model_;
    unsigned t_;
    const FieldSpec *field_;
    unsigned q0_;
};

struct PointAtInfinity {
    bool operator==(const PointAtInfinity &) const = default;
};

/// y is empty on the projective line.
struct AffinePoint {
    FieldElement x;
    std::optional<FieldElement> y;

    bool operator==(const AffinePoint &) const = default;
    std::strong_ordering operator<=>(const AffinePoint &o) const noexcept {
        if (auto c = x <=> o.x; c != 0) return c;
        if (y && o.y) return *y <=> *o.y;
        return y.has_value() <=> o.y.has_value();
    }
};

using RationalPoint = std::variant<PointAtInfinity, AffinePoint>;

bool on_curve(const CurveModel &curve, const AffinePoint &p);
std::string to_string(const RationalPoint &p);

/// Exponents of x^i y^j.
struct Monomial {
    int i;
    int j;
    auto operator<=>(const Monomial &) const = default;
};

/// A function regular away from infinity, as a reduced polynomial in x, y
/// (y-degree < q0).
class FunctionRep {
   public:
    explicit FunctionRep(CurveModel curve) : curve_(curve) {}
    static FunctionRep monomial(const CurveModel &curve, Monomial mono);

    const CurveModel &curve() const noexcept { return curve_; }
    const std::map<Monomial, FieldElement> &terms() const noexcept { return terms_; }

    /// Adds c x^i y^j, rewriting y^q0 = y + x^(q0+1) until reduced.
    void add_term(Monomial mono, const FieldElement &c);
    FunctionRep operator+(const FunctionRep &b) const;
    FunctionRep scaled(const FieldElement &c) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    /// Pole order at infinity; -1 for the zero function.
    int pole_order() const;
    FieldElement evaluate(const AffinePoint &p) const;
    std::string to_string() const;

    bool operator==(const FunctionRep &b) const { return curve_ == b.curve_ && terms_ == b.terms_; }

   private:
    CurveModel curve_;
    std::map<Monomial, FieldElement> terms_;
};

/// G = m P_inf - m' Q. mprime = 0 gives the one-point divisor m P_inf.
struct DivisorSpec {
    int m = 0;
    int mprime = 0;
    /// Defaults to the first affine point when empty.
    std::optional<AffinePoint> q_point;

    int degree() const noexcept { return m - mprime; }
};

/// Infinity first, then affine points in (x, y) order.
std::vector<RationalPoint> rational_points(const CurveModel &curve);
std::vector<AffinePoint> affine_points(const CurveModel &curve);
AffinePoint default_q_point(const CurveModel &curve);
/// Rational points minus infinity and minus Q, in point order.
std::vector<AffinePoint> evaluation_set(const CurveModel &curve, const AffinePoint &q_point);

/// Monomials x^i y^j with pole order <= m, sorted by pole order.
std::vector<FunctionRep> one_point_basis(const CurveModel &curve, int m);
std::vector<Monomial> one_point_monomials(const CurveModel &curve, int m);

/// The series y(s) with y(0) = b solving the curve equation at x = a + s.
TruncatedSeries local_y_series(const CurveModel &curve, const AffinePoint &q_point, std::size_t precision);
/// Expansion of f in the local parameter s = x - a at Q = (a, b).
TruncatedSeries local_expand(const FunctionRep &f, const AffinePoint &q_point, std::size_t precision);
/// Order of vanishing of f at Q, capped. Throws DomainError for f = 0.
int vanishing_order(const FunctionRep &f, const AffinePoint &q_point, int cap);

/// Basis of L(m P_inf - m' Q), RREF over the one-point monomial coordinates.
std::vector<FunctionRep> riemann_roch_basis(const CurveModel &curve, const DivisorSpec &div);

/// C_L(G, D): evaluations of the Riemann-Roch basis at D. Requires
/// 2g - 2 < deg G < n = N - 2.
LinearCodeQ functional_code(const CurveModel &curve, const DivisorSpec &div);
/// C_Omega(G, D), the dual of the functional code.
LinearCodeQ residue_code(const CurveModel &curve, const DivisorSpec &div);

}  // namespace agcss

#endif  // AGCSS_CURVES_H
