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

#include "agcss/cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "agcss/css.h"
#include "agcss/curves.h"
#include "agcss/errors.h"
#include "agcss/records.h"
#include "agcss/tower.h"

namespace agcss::cli {

namespace {

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command { construct, table, verify, tower };

struct RunConfig {
    Command command = Command::verify;
    std::string curve;
    std::optional<unsigned> t;
    std::optional<long long> m;
    std::optional<long long> mprime;
    std::string m_range;
    std::string mprime_range;
    std::optional<long long> N;
    std::optional<long long> g;
    std::string family;
    std::optional<unsigned> q;
    std::optional<unsigned> levels;
    std::string h_range;
    std::string format = "text";
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultEnumerationBudget;
    std::string out_path;
    bool require_exact = false;
    std::size_t cases = 200;
    std::string basis = "self-dual";
};

IntRange parse_range(const std::string &text, const char *flag) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const long long v = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {v, v};
        }
        const long long lo = std::stoll(text.substr(0, dots), &used);
        if (used != dots) throw std::invalid_argument(text);
        const std::string rest = text.substr(dots + 2);
        const long long hi = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error &) {
        throw UsageError(std::string("--") + flag + " expects N or LO..HI, got '" + text + "'");
    }
}

bool is_json(const RunConfig &cfg) {
    if (cfg.format == "json") return true;
    if (cfg.format == "text") return false;
    throw UsageError("--format must be text or json");
}

CurveModel require_curve(const RunConfig &cfg) {
    if (cfg.curve.empty()) throw UsageError("--curve is required (p1 or hermitian)");
    if (!cfg.t) throw UsageError("--t is required");
    return CurveModel::from_descriptor(cfg.curve, *cfg.t);
}

// ---------------------------------------------------------------------------
// construct

int cmd_construct(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    const CurveModel curve = require_curve(cfg);
    if (!cfg.m || !cfg.mprime) throw UsageError("--m and --mprime are required");
    CssCode code = theorem31_pipeline(curve, *cfg.m, *cfg.mprime);
    try {
        code.d_exact = css_exact_distance(code, cfg.budget);
    } catch (const CapacityError &e) {
        if (cfg.require_exact) throw;
        err << "d_exact unavailable: " << e.what() << "\n";
    }
    if (is_json(cfg)) {
        out << code_record(code).dump() << "\n";
        return kSuccess;
    }
    out << code.bracket() << " from " << curve.family() << " t=" << curve.t() << " m=" << *cfg.m
        << " mprime=" << *cfg.mprime << " d_exact=" << (code.d_exact ? std::to_string(*code.d_exact) : "null")
        << "\n";
    out << emit_stabilizers(code, StabilizerFormat::plain);
    return kSuccess;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    long long N = 0;
    long long g = 0;
    long long t = 0;
    std::optional<CurveModel> curve;
    std::string label = "3.1";
    if (!cfg.curve.empty()) {
        curve = require_curve(cfg);
        N = static_cast<long long>(curve->num_points());
        g = curve->genus();
        t = curve->expansion_degree();
    } else if (!cfg.family.empty()) {
        if (!cfg.t) throw UsageError("--t is required with --family");
        const auto fam = parse_corollary_family(cfg.family);
        const auto cc = corollary_curve(fam, *cfg.t);
        N = cc.N;
        g = cc.g;
        t = cc.expansion;
        label = cfg.family;
    } else {
        if (!cfg.N || !cfg.g || !cfg.t) throw UsageError("table needs --curve and --t, --family and --t, or --N --g --t");
        N = *cfg.N;
        g = *cfg.g;
        t = *cfg.t;
    }
    std::optional<IntRange> mr;
    std::optional<IntRange> pr;
    if (!cfg.m_range.empty()) mr = parse_range(cfg.m_range, "m");
    if (!cfg.mprime_range.empty()) pr = parse_range(cfg.mprime_range, "mprime");
    auto rows = theorem31_table(N, g, t, mr, pr);
    for (auto &r : rows) {
        r.source.theorem = label;
        r.source.curve = curve;
    }
    if (rows.empty()) err << "warning: no valid (m, m') in range; table is empty\n";
    if (is_json(cfg)) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &r : rows) arr.push_back(params_record(r));
        out << arr.dump() << "\n";
        return kSuccess;
    }
    out << "# N=" << N << " g=" << g << " t=" << t << "\n";
    for (const auto &r : rows) out << r.bracket() << "  m=" << r.source.m << " mprime=" << r.source.mprime << "\n";
    return kSuccess;
}

// ---------------------------------------------------------------------------
// verify

struct PropertyResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::string witness;
};

class Verifier {
   public:
    Verifier(const RunConfig &cfg, std::ostream &out) : cfg_(cfg), out_(out) {}

    void report(const PropertyResult &r) {
        const bool ok = r.passed == r.total && r.witness.empty();
        out_ << (ok ? "PASS " : "FAIL ") << r.name << " " << r.passed << "/" << r.total;
        if (!ok) out_ << "  witness: " << r.witness;
        out_ << "\n";
        if (!ok && first_failure_.empty()) first_failure_ = r.name + ": " + r.witness;
    }

    const std::string &first_failure() const { return first_failure_; }

    PropertyResult dual_expansion() {
        PropertyResult r{"dual_expansion", 0, 0, {}};
        std::mt19937_64 rng(cfg_.seed);
        const unsigned degrees[] = {2, 3, 4};
        for (std::size_t i = 0; i < cfg_.cases; ++i) {
            const FieldSpec &f = FieldSpec::canonical(degrees[i % 3]);
            const std::size_t n = 2 + rng() % 7;
            const std::size_t k = 1 + rng() % (n - 1);
            std::vector<std::uint8_t> raw(k * n);
            for (auto &v : raw) v = static_cast<std::uint8_t>(rng() % f.order());
            const LinearCodeQ c = LinearCodeQ::from_spanning(MatQ(f, k, n, raw));
            const Basis basis = cfg_.basis == "polynomial" ? Basis::polynomial(f) : find_self_dual_basis(f).basis();
            ++r.total;
            if (verify_dual_expansion(c, basis)) {
                ++r.passed;
            } else if (r.witness.empty()) {
                std::ostringstream os;
                os << "case " << i << " over GF(2^" << f.degree() << ") [" << n << "," << c.dimension()
                   << "] generator";
                for (std::size_t row = 0; row < c.dimension(); ++row) {
                    os << " (";
                    for (std::size_t col = 0; col < n; ++col) os << (col ? "," : "") << int(c.generator().raw(row, col));
                    os << ")";
                }
                os << " breaks dual(B(C)) = B(dual C)";
                r.witness = os.str();
            }
        }
        return r;
    }

    PropertyResult riemann_roch() {
        PropertyResult r{"riemann_roch_dimension", 0, 0, {}};
        std::vector<CurveModel> curves{CurveModel::hermitian(1)};
        for (unsigned t = 1; t <= 3; ++t) curves.push_back(CurveModel::projective_line(t));
        for (const auto &curve : curves) {
            const int g = curve.genus();
            for (const auto &q : affine_points(curve)) {
                for (int m = 0; m <= 10; ++m) {
                    for (int mp = 0; mp <= m; ++mp) {
                        if (m - mp <= 2 * g - 2) continue;
                        const auto basis = riemann_roch_basis(curve, DivisorSpec{m, mp, q});
                        ++r.total;
                        bool ok = static_cast<int>(basis.size()) == m - mp - g + 1;
                        for (const auto &f : basis) ok = ok && vanishing_order(f, q, mp) >= mp;
                        if (ok) {
                            ++r.passed;
                        } else if (r.witness.empty()) {
                            r.witness = curve.family() + " t=" + std::to_string(curve.t()) + " m=" +
                                        std::to_string(m) + " m'=" + std::to_string(mp) + " Q=" +
                                        to_string(RationalPoint{q}) + " dim=" + std::to_string(basis.size());
                        }
                    }
                }
            }
        }
        return r;
    }

    PropertyResult ag_code_laws() {
        PropertyResult r{"ag_code_parameters", 0, 0, {}};
        const CurveModel curves[] = {CurveModel::projective_line(2), CurveModel::projective_line(3),
                                     CurveModel::hermitian(1)};
        for (const auto &curve : curves) {
            const int g = curve.genus();
            const int n = static_cast<int>(curve.num_points()) - 2;
            for (int m = 0; m < static_cast<int>(curve.num_points()); ++m) {
                for (int mp = 0; mp <= m; ++mp) {
                    const int deg = m - mp;
                    if (!(2 * g - 2 < deg && deg < n)) continue;
                    const DivisorSpec div{m, mp, std::nullopt};
                    const auto cl = functional_code(curve, div);
                    const auto co = residue_code(curve, div);
                    ++r.total;
                    bool ok = static_cast<int>(cl.dimension()) == deg - g + 1 &&
                              static_cast<int>(co.dimension()) == n - deg + g - 1;
                    if (ok && cl.dimension() > 0) {
                        const int d = min_distance_exact(cl, cfg_.budget);
                        ok = d >= n - deg && (g != 0 || d == n - deg);
                    }
                    if (ok && co.dimension() > 0) ok = min_distance_exact(co, cfg_.budget) >= deg - 2 * g + 2;
                    if (ok) {
                        ++r.passed;
                    } else if (r.witness.empty()) {
                        r.witness = curve.family() + " t=" + std::to_string(curve.t()) + " m=" + std::to_string(m) +
                                    " m'=" + std::to_string(mp);
                    }
                }
            }
        }
        return r;
    }

    PropertyResult css_codes() {
        PropertyResult r{"css_orthogonality_and_distance", 0, 0, {}};
        const CurveModel curves[] = {CurveModel::hermitian(1), CurveModel::projective_line(2),
                                     CurveModel::projective_line(3)};
        for (const auto &curve : curves) {
            const auto rows = theorem31_table(static_cast<long long>(curve.num_points()), curve.genus(),
                                              curve.expansion_degree());
            for (const auto &p : rows) {
                ++r.total;
                const CssCode code = theorem31_pipeline(curve, p.source.m, p.source.mprime);
                const long long d = css_exact_distance(code, cfg_.budget);
                const bool ok = !first_nonorthogonal(code.h_x, code.h_z) && code.k_q == p.k_q &&
                                code.n_q == p.n_q && d >= code.d_designed;
                if (ok) {
                    ++r.passed;
                } else if (r.witness.empty()) {
                    r.witness = curve.family() + " " + code.bracket() + " exact d=" + std::to_string(d);
                }
            }
        }
        return r;
    }

    PropertyResult tower_counts() {
        PropertyResult r{"tower_counts", 0, 0, {}};
        const std::pair<unsigned, unsigned> cases[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {4, 1}, {4, 2}, {8, 1}, {8, 2}};
        for (auto [q, level] : cases) {
            ++r.total;
            const auto lvl = tower_points(q, level);
            std::size_t expected = q - 1;
            for (unsigned i = 0; i < level; ++i) expected *= q;
            if (lvl.count() == expected) {
                ++r.passed;
            } else if (r.witness.empty()) {
                r.witness = "q=" + std::to_string(q) + " level=" + std::to_string(level);
            }
        }
        return r;
    }

   private:
    const RunConfig &cfg_;
    std::ostream &out_;
    std::string first_failure_;
};

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.basis != "self-dual" && cfg.basis != "polynomial") {
        throw UsageError("--basis must be self-dual or polynomial");
    }
    if (cfg.cases == 0) throw UsageError("--cases must be >= 1");
    Verifier v(cfg, out);
    v.report(v.dual_expansion());
    v.report(v.riemann_roch());
    v.report(v.ag_code_laws());
    v.report(v.css_codes());
    v.report(v.tower_counts());
    if (!v.first_failure().empty()) {
        err << "verification failed: " << v.first_failure() << "\n";
        return kVerificationFailure;
    }
    return kSuccess;
}

// ---------------------------------------------------------------------------
// tower

int cmd_tower(const RunConfig &cfg, std::ostream &out, std::ostream & /*err*/) {
    const bool json = is_json(cfg);
    const bool family_mode = cfg.m.has_value() || !cfg.h_range.empty();
    if (!cfg.q && !family_mode) throw UsageError("tower needs --q [--levels] or --t --m --h");
    nlohmann::json records = nlohmann::json::array();
    std::ostringstream text;

    if (cfg.q) {
        if (cfg.t && (1u << *cfg.t) != *cfg.q && !family_mode) throw UsageError("--q and --t disagree");
        const unsigned levels = cfg.levels.value_or(1);
        if (levels < 1) throw ParameterError("--levels >= 1 violated");
        // Validate q and the budget before printing anything.
        const auto top = tower_points(*cfg.q, levels, cfg.budget == kDefaultEnumerationBudget ? kDefaultTowerBudget : cfg.budget);
        text << "# tower over GF(" << (*cfg.q) * (*cfg.q) << "), q=" << *cfg.q << "\n";
        text << "level  count  (q-1)q^i  genus\n";
        for (unsigned level = 1; level <= levels; ++level) {
            const std::size_t count = level == levels ? top.count() : tower_points(*cfg.q, level).count();
            std::size_t expected = *cfg.q - 1;
            for (unsigned i = 0; i < level; ++i) expected *= *cfg.q;
            std::optional<long long> genus;
            if (level >= 2) genus = tower_genus(*cfg.q, level);
            text << std::setw(5) << level << "  " << std::setw(5) << count << "  " << std::setw(8) << expected << "  "
                 << (genus ? std::to_string(*genus) : "-") << "\n";
            records.push_back({{"q", *cfg.q},
                               {"level", level},
                               {"count", count},
                               {"genus", genus ? nlohmann::json(*genus) : nlohmann::json(nullptr)},
                               {"family", nullptr}});
        }
    }

    if (family_mode) {
        if (!cfg.t || !cfg.m) throw UsageError("family parameters need --t and --m (and --h)");
        const IntRange hr = parse_range(cfg.h_range.empty() ? "1" : cfg.h_range, "h");
        const auto sweep = family_sweep(*cfg.t, *cfg.m, hr.lo, hr.hi);
        const long long q = 1LL << *cfg.t;
        const Rational threshold{1, 12};
        text << "# family t=" << *cfg.t << " m=" << *cfg.m << " over GF(" << q * q << ")\n";
        text << "h  n  k  d_21  d_exact_genus  R  delta  R+delta  >=1/12\n";
        for (const auto &p : sweep) {
            std::optional<long long> genus;
            if (p.h >= 2) genus = tower_genus(q, p.h);
            text << p.h << "  " << p.n << "  " << p.k << "  " << p.d << "  " << p.d_exact_genus << "  "
                 << std::setprecision(9) << p.R.value() << "  " << p.delta.value() << "  " << p.sum.value() << "  "
                 << (p.sum >= threshold ? "yes" : "NO") << "\n";
            long long count = q - 1;
            for (long long i = 0; i < p.h; ++i) count *= q;
            records.push_back({{"q", q},
                               {"level", p.h},
                               {"count", count},
                               {"genus", genus ? nlohmann::json(*genus) : nlohmann::json(nullptr)},
                               {"family", family_record(p)}});
        }
    }
    if (json) {
        out << records.dump() << "\n";
    } else {
        out << text.str();
    }
    return kSuccess;
}

void add_common(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--format", cfg.format, "text or json");
    sub->add_option("--seed", cfg.seed, "seed for all randomness");
    sub->add_option("--budget", cfg.budget, "enumeration cap");
    sub->add_option("--out", cfg.out_path, "write output to this path");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"CSS quantum codes from algebraic-geometry codes in characteristic 2", "agcss"};
    app.set_help_flag("--help", "print this help");
    app.require_subcommand(1);

    auto *construct = app.add_subcommand("construct", "build a CSS code from a curve");
    construct->add_option("--curve", cfg.curve, "p1 or hermitian");
    construct->add_option("--t", cfg.t, "curve degree parameter");
    construct->add_option("--m", cfg.m, "pole order at infinity");
    construct->add_option("--mprime", cfg.mprime, "vanishing order at Q");
    construct->add_flag("--require-exact", cfg.require_exact, "fail with exit 3 if d_exact is over budget");
    add_common(construct, cfg);

    auto *table = app.add_subcommand("table", "sweep (m, m') and list the best [[n,k,d]] per k");
    table->add_option("--curve", cfg.curve, "p1 or hermitian");
    table->add_option("--t", cfg.t, "curve parameter, or expansion degree with --N/--g");
    table->add_option("--N", cfg.N, "rational point count");
    table->add_option("--g", cfg.g, "genus");
    table->add_option("--family", cfg.family, "c32, c33 or c34");
    table->add_option("--m", cfg.m_range, "m range LO..HI");
    table->add_option("--mprime", cfg.mprime_range, "m' range LO..HI");
    add_common(table, cfg);

    auto *verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--cases", cfg.cases, "random codes in the dual-expansion batch");
    verify->add_option("--basis", cfg.basis, "self-dual or polynomial (negative control)");
    add_common(verify, cfg);

    auto *tower = app.add_subcommand("tower", "explore the recursive tower and its code family");
    tower->add_option("--q", cfg.q, "2, 4 or 8");
    tower->add_option("--levels", cfg.levels, "enumerate levels 1..L");
    tower->add_option("--t", cfg.t, "q = 2^t for the family");
    tower->add_option("--m", cfg.m, "family parameter m");
    tower->add_option("--h", cfg.h_range, "levels LO..HI");
    add_common(tower, cfg);

    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kParameterError;
    }

    std::ofstream file;
    std::ostream *sink = &out;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path);
        if (!file) {
            err << "error: cannot open " << cfg.out_path << "\n";
            return kParameterError;
        }
        sink = &file;
    }
    try {
        if (construct->parsed()) return cmd_construct(cfg, *sink, err);
        if (table->parsed()) return cmd_table(cfg, *sink, err);
        if (verify->parsed()) return cmd_verify(cfg, *sink, err);
        return cmd_tower(cfg, *sink, err);
    } catch (const ParameterError &e) {
        err << "parameter error: " << e.what() << "\n";
        return kParameterError;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kParameterError;
    } catch (const CapacityError &e) {
        err << "capacity error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kVerificationFailure;
    }
}

}  // namespace agcss::cli
