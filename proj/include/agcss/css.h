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

#ifndef AGCSS_CSS_H
#define AGCSS_CSS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agcss/curves.h"
#include "agcss/gf2t.h"
#include "agcss/linalg.h"

namespace agcss {

/// Where a parameter triple or code came from.
struct Provenance {
    /// "3.1", "c32", "c33", "c34" or "2.1".
    std::string theorem;
    std::optional<CurveModel> curve;
    /// Binary expansion degree (the t of GF(2^t)).
    long long t = 0;
    long long m = 0;
    long long mprime = 0;
    /// Point count and genus of the underlying curve.
    long long N = 0;
    long long g = 0;
};

struct QuantumParams {
    long long n_q = 0;
    long long k_q = 0;
    long long d_designed = 0;
    Provenance source;

    bool same_triple(const QuantumParams &o) const noexcept {
        return n_q == o.n_q && k_q == o.k_q && d_designed == o.d_designed;
    }
    std::string bracket() const;
};

/// CSS code with Z-type stabilizers spanning dual(C1) and X-type spanning
/// dual(C2). h_x * h_z^T = 0 always holds.
struct CssCode {
    long long n_q = 0;
    long long k_q = 0;
    long long d_designed = 0;
    std::optional<long long> d_exact;
    BitMatrix h_x;
    BitMatrix h_z;
    Provenance source;

    std::string bracket() const;
};

/// Componentwise expansion of c in the given basis; length t*n, dimension t*k.
BinaryCode binary_expand(const LinearCodeQ &c, const Basis &basis);
/// Whether dual(B(c)) == B(dual(c)). Always true for a self-dual basis.
bool verify_dual_expansion(const LinearCodeQ &c, const Basis &basis);

/// Requires dual(c1) inside c2; throws ConstructionError naming the first
/// row of dual(c1) outside c2, and ParameterError if min(d1, d2) < 1.
CssCode css_construct(const BinaryCode &c1, const BinaryCode &c2, long long d1, long long d2);

/// min weight over (c1 \ dual(c2)) and (c2 \ dual(c1)). For k_q = 0 the
/// minimum nonzero weight of c1 and c2 is returned instead.
long long css_exact_distance(const BinaryCode &c1, const BinaryCode &c2,
                             std::uint64_t budget = kDefaultEnumerationBudget);
/// Same, recovering c1 = dual(rowspace h_z) and c2 = dual(rowspace h_x).
long long css_exact_distance(const CssCode &code, std::uint64_t budget = kDefaultEnumerationBudget);
/// The classical pair (c1, c2) behind a CSS code.
std::pair<BinaryCode, BinaryCode> css_classical_codes(const CssCode &code);

struct PipelineOptions {
    /// Defaults to find_self_dual_basis of the curve's field.
    std::optional<Basis> basis;
    /// Defaults to the first affine point.
    std::optional<AffinePoint> q_point;
};

/// T1 = C_L(m P, D), T2 = C_Omega(m P - m' Q, D), both expanded to binary and
/// fed to the CSS construction. d_exact is left empty.
CssCode theorem31_pipeline(const CurveModel &curve, long long m, long long mprime, const PipelineOptions &opts = {});

/// [[t(N-2), t m', min{N-2-m, m-m'-2g+2}]] under 2g-2 < m < N and
/// 0 <= m' < m-2g+2; throws ParameterError naming the violated inequality.
QuantumParams theorem31_params(long long N, long long g, long long t, long long m, long long mprime);

/// Inclusive integer range.
struct IntRange {
    long long lo;
    long long hi;
};

/// Every valid (m, m') for theorem31_params inside the ranges (default:
/// 1 <= m < N and 0 <= m' < m-2g+2), keeping the largest designed distance
/// per (n, k), ties to the smallest (m, m'). Sorted by k.
std::vector<QuantumParams> theorem31_table(long long N, long long g, long long t, std::optional<IntRange> m = {},
                                           std::optional<IntRange> mprime = {});

enum class CorollaryFamily { c32, c33, c34 };
CorollaryFamily parse_corollary_family(const std::string &name);
std::string to_string(CorollaryFamily family);
/// (N, g) and expansion degree of a closed-form family: c32 the projective
/// line over GF(2^t), c33 a maximal elliptic curve over GF(4^t), c34 the
/// Hermitian curve over GF(4^t).
struct CorollaryCurve {
    long long N;
    long long g;
    long long expansion;
};
CorollaryCurve corollary_curve(CorollaryFamily family, long long t);
/// Parameters from each family's own closed form, independent of
/// theorem31_params.
QuantumParams corollary_params(CorollaryFamily family, long long t, long long m, long long mprime);

enum class StabilizerFormat { plain, json };
StabilizerFormat parse_stabilizer_format(const std::string &name);
/// (r_x + r_z) x 2n block matrix, X rows [h_x | 0] then Z rows [0 | h_z].
std::string emit_stabilizers(const CssCode &code, StabilizerFormat format);
/// Inverse of emit_stabilizers: returns (h_x, h_z).
std::pair<BitMatrix, BitMatrix> parse_stabilizers(const std::string &text, StabilizerFormat format);

}  // namespace agcss

#endif  // AGCSS_CSS_H
