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

#include "agcss/css.h"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "agcss/errors.h"

namespace agcss {

namespace {

long long checked_mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw ParameterError("parameters overflow 64-bit arithmetic");
    return out;
}

long long pow2(long long e) {
    if (e < 0 || e > 62) throw ParameterError("2^" + std::to_string(e) + " overflows 64-bit arithmetic");
    return 1LL << e;
}

std::string bracket_of(long long n, long long k, long long d) {
    std::ostringstream os;
    os << "[[" << n << ", " << k << ", " << d << "]]";
    return os.str();
}

void require(bool ok, const std::string &inequality, const std::string &detail = {}) {
    if (!ok) throw ParameterError(inequality + " violated" + (detail.empty() ? "" : " (" + detail + ")"));
}

}  // namespace

std::string QuantumParams::bracket() const { return bracket_of(n_q, k_q, d_designed); }
std::string CssCode::bracket() const { return bracket_of(n_q, k_q, d_designed); }

BinaryCode binary_expand(const LinearCodeQ &c, const Basis &basis) {
    require_same_field(c.spec(), basis.spec());
    const FieldSpec &f = c.spec();
    const std::size_t t = basis.size();
    const std::size_t n = c.length();
    BitMatrix span(c.dimension() * t, n * t);
    for (std::size_t r = 0; r < c.dimension(); ++r) {
        for (std::size_t i = 0; i < t; ++i) {
            const std::size_t row = r * t + i;
            for (std::size_t col = 0; col < n; ++col) {
                const std::uint32_t bits = basis.packed_coordinates(f.mul(basis[i].value(), c.generator().raw(r, col)));
                for (std::size_t b = 0; b < t; ++b) {
                    if ((bits >> b) & 1u) span.set(row, col * t + b, true);
                }
            }
        }
    }
    BinaryCode out = BinaryCode::from_spanning(std::move(span));
    if (out.dimension() != c.dimension() * t) throw DefectError("binary expansion lost dimension");
    return out;
}

bool verify_dual_expansion(const LinearCodeQ &c, const Basis &basis) {
    return dual_code(binary_expand(c, basis)) == binary_expand(dual_code(c), basis);
}

CssCode css_construct(const BinaryCode &c1, const BinaryCode &c2, long long d1, long long d2) {
    if (c1.length() != c2.length()) throw UsageError("css_construct: C1 and C2 have different lengths");
    const long long designed = std::min(d1, d2);
    require(designed >= 1, "designed distance min{d1,d2} >= 1", "d1 = " + std::to_string(d1) + ", d2 = " + std::to_string(d2));
    BinaryCode dual1 = dual_code(c1);
    for (std::size_t r = 0; r < dual1.dimension(); ++r) {
        if (!c2.contains(dual1.generator().row_words(r))) {
            std::ostringstream os;
            os << "CSS containment dual(C1) in C2 fails: row " << r << " of dual(C1) = ";
            for (auto bit : dual1.generator().row_bits(r)) os << static_cast<int>(bit);
            os << " is not in C2";
            throw ConstructionError(os.str());
        }
    }
    BinaryCode dual2 = dual_code(c2);
    CssCode code;
    code.n_q = static_cast<long long>(c1.length());
    code.h_z = dual1.generator();
    code.h_x = dual2.generator();
    if (auto bad = first_nonorthogonal(code.h_x, code.h_z)) {
        throw DefectError("h_x row " + std::to_string(bad->first) + " anticommutes with h_z row " +
                          std::to_string(bad->second));
    }
    code.k_q = code.n_q - static_cast<long long>(code.h_x.rows()) - static_cast<long long>(code.h_z.rows());
    const long long textbook = static_cast<long long>(c1.dimension() + c2.dimension()) - code.n_q;
    if (code.k_q != textbook) throw DefectError("k_q disagrees with k1 + k2 - n");
    code.d_designed = designed;
    return code;
}

long long css_exact_distance(const BinaryCode &c1, const BinaryCode &c2, std::uint64_t budget) {
    if (c1.length() != c2.length()) throw UsageError("css_exact_distance: length mismatch");
    const long long k_q = static_cast<long long>(c1.dimension() + c2.dimension()) - static_cast<long long>(c1.length());
    if (k_q == 0) {
        long long best = -1;
        for (const BinaryCode *c : {&c1, &c2}) {
            if (c->dimension() == 0) continue;
            const long long w = min_distance_exact(*c, budget);
            best = best < 0 ? w : std::min(best, w);
        }
        if (best < 0) throw UsageError("css_exact_distance: both codes are zero");
        return best;
    }
    // Logical X: c1 minus dual(c2), i.e. codewords of c1 with a nonzero
    // syndrome against the generators of c2. Symmetric for Z.
    const auto wx = min_weight_failing_checks(c1, c2.generator(), budget);
    const auto wz = min_weight_failing_checks(c2, c1.generator(), budget);
    if (!wx || !wz) throw DefectError("a CSS code with k_q > 0 has no logical operator");
    return std::min(*wx, *wz);
}

std::pair<BinaryCode, BinaryCode> css_classical_codes(const CssCode &code) {
    return {dual_code(BinaryCode::from_spanning(code.h_z)), dual_code(BinaryCode::from_spanning(code.h_x))};
}

long long css_exact_distance(const CssCode &code, std::uint64_t budget) {
    const auto [c1, c2] = css_classical_codes(code);
    return css_exact_distance(c1, c2, budget);
}

QuantumParams theorem31_params(long long N, long long g, long long t, long long m, long long mprime) {
    require(t >= 1, "t >= 1");
    require(g >= 0, "g >= 0");
    require(N >= 3, "N >= 3");
    require(m >= 1, "m >= 1");
    require(2 * g - 2 < m, "2g-2 < m", "m = " + std::to_string(m) + ", 2g-2 = " + std::to_string(2 * g - 2));
    require(m < N, "m < N", "m = " + std::to_string(m) + ", N = " + std::to_string(N));
    require(mprime >= 0, "0 <= m'");
    require(mprime < m - 2 * g + 2, "m' < m-2g+2",
            "m' = " + std::to_string(mprime) + ", m-2g+2 = " + std::to_string(m - 2 * g + 2));
    const long long d1 = N - 2 - m;
    const long long d2 = m - mprime - 2 * g + 2;
    require(d1 >= 1, "designed distance N-2-m >= 1", "N-2-m = " + std::to_string(d1));
    QuantumParams p;
    p.n_q = checked_mul(t, N - 2);
    p.k_q = checked_mul(t, mprime);
    p.d_designed = std::min(d1, d2);
    p.source = Provenance{"3.1", std::nullopt, t, m, mprime, N, g};
    return p;
}

std::vector<QuantumParams> theorem31_table(long long N, long long g, long long t, std::optional<IntRange> m,
                                           std::optional<IntRange> mprime) {
    const IntRange mr = m.value_or(IntRange{1, N - 1});
    std::map<long long, QuantumParams> best;  // keyed by k; n is fixed by (N, t)
    for (long long mm = mr.lo; mm <= mr.hi; ++mm) {
        const IntRange pr = mprime.value_or(IntRange{0, mm - 2 * g + 1});
        for (long long mp = pr.lo; mp <= pr.hi; ++mp) {
            QuantumParams p;
            try {
                p = theorem31_params(N, g, t, mm, mp);
            } catch (const ParameterError &) {
                continue;
            }
            auto it = best.find(p.k_q);
            if (it == best.end()) {
                best.emplace(p.k_q, p);
            } else if (p.d_designed > it->second.d_designed) {
                it->second = p;
            }
        }
    }
    std::vector<QuantumParams> out;
    for (auto &[k, p] : best) out.push_back(p);
    return out;
}

CorollaryFamily parse_corollary_family(const std::string &name) {
    if (name == "c32") return CorollaryFamily::c32;
    if (name == "c33") return CorollaryFamily::c33;
    if (name == "c34") return CorollaryFamily::c34;
    throw UsageError("unknown corollary family '" + name + "' (expected c32, c33 or c34)");
}

std::string to_string(CorollaryFamily family) {
    switch (family) {
        case CorollaryFamily::c32:
            return "c32";
        case CorollaryFamily::c33:
            return "c33";
        case CorollaryFamily::c34:
            return "c34";
    }
    return "?";
}

CorollaryCurve corollary_curve(CorollaryFamily family, long long t) {
    require(t >= 1, "t >= 1");
    switch (family) {
        case CorollaryFamily::c32:
            // Projective line over GF(2^t).
            return {pow2(t) + 1, 0, t};
        case CorollaryFamily::c33:
            // Maximal elliptic curve over GF(2^(2t)).
            return {pow2(2 * t) + pow2(t + 1) + 1, 1, 2 * t};
        case CorollaryFamily::c34:
            // Hermitian curve over GF(2^(2t)).
            return {pow2(3 * t) + 1, checked_mul(pow2(t) - 1, pow2(t - 1)), 2 * t};
    }
    throw UsageError("unknown corollary family");
}

QuantumParams corollary_params(CorollaryFamily family, long long t, long long m, long long mprime) {
    require(t >= 1, "t >= 1");
    require(m >= 1, "m >= 1");
    require(mprime >= 0, "0 <= m'");
    QuantumParams p;
    const CorollaryCurve curve = corollary_curve(family, t);
    switch (family) {
        case CorollaryFamily::c32: {
            // [[t(2^t-1), tm', min{2^t-1-m, m-m'+2}]] over genus 0: m' < m+2 and 2^t-1-m >= 1.
            const long long q = pow2(t);
            require(m < q - 1, "m < 2^t-1");
            require(mprime < m + 2, "m' < m+2");
            p.n_q = checked_mul(t, q - 1);
            p.k_q = checked_mul(t, mprime);
            p.d_designed = std::min(q - 1 - m, m - mprime + 2);
            break;
        }
        case CorollaryFamily::c33: {
            // [[2t(4^t+2^(t+1)-1), 2tm', min{4^t+2^(t+1)-1-m, m-m'}]], m' < m < 4^t+2^(t+1)-1.
            const long long len = pow2(2 * t) + pow2(t + 1) - 1;
            require(mprime < m, "m' < m");
            require(m < len, "m < 4^t+2^(t+1)-1");
            p.n_q = checked_mul(2 * t, len);
            p.k_q = checked_mul(2 * t, mprime);
            p.d_designed = std::min(len - m, m - mprime);
            break;
        }
        case CorollaryFamily::c34: {
            // [[2t(8^t-1), 2tm', min{8^t-1-m, m-m'-2^t(2^t-1)+2}]],
            // 2^t(2^t-1)-2 < m < 8^t-1 and m' < m-2^t(2^t-1)+2.
            const long long len = pow2(3 * t) - 1;
            const long long twice_genus = checked_mul(pow2(t), pow2(t) - 1);
            require(twice_genus - 2 < m, "2^t(2^t-1)-2 < m");
            require(m < len, "m < 8^t-1");
            require(mprime < m - twice_genus + 2, "m' < m-2^t(2^t-1)+2");
            p.n_q = checked_mul(2 * t, len);
            p.k_q = checked_mul(2 * t, mprime);
            p.d_designed = std::min(len - m, m - mprime - twice_genus + 2);
            break;
        }
    }
    p.source = Provenance{to_string(family), std::nullopt, curve.expansion, m, mprime, curve.N, curve.g};
    return p;
}

CssCode theorem31_pipeline(const CurveModel &curve, long long m, long long mprime, const PipelineOptions &opts) {
    const long long N = static_cast<long long>(curve.num_points());
    const long long g = curve.genus();
    const long long t = curve.expansion_degree();
    const QuantumParams params = theorem31_params(N, g, t, m, mprime);

    const AffinePoint q = opts.q_point ? *opts.q_point : default_q_point(curve);
    const Basis basis = opts.basis ? *opts.basis : find_self_dual_basis(curve.field()).basis();
    const LinearCodeQ t1 = functional_code(curve, DivisorSpec{static_cast<int>(m), 0, q});
    const LinearCodeQ t2 = residue_code(curve, DivisorSpec{static_cast<int>(m), static_cast<int>(mprime), q});
    if (!is_subcode(dual_code(t1), t2)) throw DefectError("dual(T1) is not contained in T2");

    const BinaryCode c1 = binary_expand(t1, basis);
    const BinaryCode c2 = binary_expand(t2, basis);
    const long long d1 = N - 2 - m;
    const long long d2 = m - mprime - 2 * g + 2;
    CssCode code;
    try {
        code = css_construct(c1, c2, d1, d2);
    } catch (const ConstructionError &e) {
        if (basis.is_self_dual()) throw DefectError(std::string("self-dual expansion broke containment: ") + e.what());
        throw;
    }
    if (code.n_q != params.n_q || code.k_q != params.k_q) {
        throw DefectError("constructed " + code.bracket() + " disagrees with formula " + params.bracket());
    }
    code.source = params.source;
    code.source.curve = curve;
    return code;
}

StabilizerFormat parse_stabilizer_format(const std::string &name) {
    if (name == "plain" || name == "text") return StabilizerFormat::plain;
    if (name == "json") return StabilizerFormat::json;
    throw UsageError("unknown stabilizer format '" + name + "' (expected plain or json)");
}

namespace {

std::vector<std::vector<int>> block_rows(const CssCode &code) {
    const std::size_t n = static_cast<std::size_t>(code.n_q);
    std::vector<std::vector<int>> rows;
    for (std::size_t r = 0; r < code.h_x.rows(); ++r) {
        std::vector<int> row(2 * n, 0);
        for (std::size_t c = 0; c < n; ++c) row[c] = code.h_x.get(r, c);
        rows.push_back(std::move(row));
    }
    for (std::size_t r = 0; r < code.h_z.rows(); ++r) {
        std::vector<int> row(2 * n, 0);
        for (std::size_t c = 0; c < n; ++c) row[n + c] = code.h_z.get(r, c);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::pair<BitMatrix, BitMatrix> split_rows(std::size_t n, std::size_t rx, std::size_t rz,
                                           const std::vector<std::vector<int>> &rows) {
    if (rows.size() != rx + rz) throw UsageError("stabilizer row count does not match the header");
    BitMatrix hx(rx, n);
    BitMatrix hz(rz, n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != 2 * n) throw UsageError("stabilizer row has the wrong width");
        for (std::size_t c = 0; c < 2 * n; ++c) {
            const int bit = rows[r][c];
            if (bit != 0 && bit != 1) throw UsageError("stabilizer entries must be 0 or 1");
            const bool in_x = c < n;
            if (r < rx ? !in_x : in_x) {
                if (bit) throw UsageError("stabilizer row is not in CSS block form");
                continue;
            }
            if (r < rx) {
                hx.set(r, c, bit);
            } else {
                hz.set(r - rx, c - n, bit);
            }
        }
    }
    return {std::move(hx), std::move(hz)};
}

}  // namespace

std::string emit_stabilizers(const CssCode &code, StabilizerFormat format) {
    const auto rows = block_rows(code);
    if (format == StabilizerFormat::json) {
        nlohmann::json j;
        j["n"] = code.n_q;
        j["x_rows"] = code.h_x.rows();
        j["z_rows"] = code.h_z.rows();
        j["rows"] = rows;
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "n " << code.n_q << " x_rows " << code.h_x.rows() << " z_rows " << code.h_z.rows() << "\n";
    for (const auto &row : rows) {
        for (int bit : row) os << bit;
        os << "\n";
    }
    return os.str();
}

std::pair<BitMatrix, BitMatrix> parse_stabilizers(const std::string &text, StabilizerFormat format) {
    if (format == StabilizerFormat::json) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception &e) {
            throw UsageError(std::string("malformed stabilizer JSON: ") + e.what());
        }
        return split_rows(j.at("n").get<std::size_t>(), j.at("x_rows").get<std::size_t>(),
                          j.at("z_rows").get<std::size_t>(), j.at("rows").get<std::vector<std::vector<int>>>());
    }
    std::istringstream is(text);
    std::string kw_n, kw_x, kw_z;
    std::size_t n = 0, rx = 0, rz = 0;
    if (!(is >> kw_n >> n >> kw_x >> rx >> kw_z >> rz) || kw_n != "n" || kw_x != "x_rows" || kw_z != "z_rows") {
        throw UsageError("malformed stabilizer header");
    }
    std::vector<std::vector<int>> rows;
    std::string line;
    while (is >> line) {
        std::vector<int> row;
        for (char ch : line) {
            if (ch != '0' && ch != '1') throw UsageError("stabilizer rows must contain only 0 and 1");
            row.push_back(ch - '0');
        }
        rows.push_back(std::move(row));
    }
    return split_rows(n, rx, rz, rows);
}

}  // namespace agcss
