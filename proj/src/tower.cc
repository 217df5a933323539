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

#include "agcss/tower.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "agcss/errors.h"

namespace agcss {

TowerLevel::TowerLevel(unsigned q, unsigned level, const FieldSpec &field, std::vector<FieldElement> omega,
                       std::vector<std::uint8_t> chains, std::optional<long long> genus)
    : q_(q), level_(level), field_(&field), omega_(std::move(omega)), chains_(std::move(chains)), genus_(genus) {}

namespace {

unsigned log2_of(unsigned q) {
    if (q != 2 && q != 4 && q != 8) throw ParameterError("unsupported q = " + std::to_string(q) + " (expected 2, 4 or 8)");
    return static_cast<unsigned>(std::countr_zero(q));
}

long long checked_mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw ParameterError("tower parameters overflow 64-bit arithmetic");
    return out;
}

long long checked_pow(long long base, long long e) {
    long long out = 1;
    for (long long i = 0; i < e; ++i) out = checked_mul(out, base);
    return out;
}

Rational reduced(long long num, long long den) {
    const long long g = std::gcd(num, den);
    return {num / g, den / g};
}

}  // namespace

FieldElement tower_rhs(const FieldElement &x, unsigned q) {
    const FieldElement denom = x.pow(q - 1) + x.spec().one();
    if (denom.is_zero() || x.pow(q) + x == x.spec().zero()) {
        throw DomainError("tower_rhs: x = " + x.to_string() + " lies in Omega");
    }
    return x.pow(q) / denom;
}

TowerLevel tower_points(unsigned q, unsigned level, std::uint64_t budget) {
    const unsigned s = log2_of(q);
    if (level < 1) throw ParameterError("level >= 1 violated");
    long double expected = (q - 1);
    for (unsigned i = 0; i < level; ++i) expected *= q;
    if (expected > static_cast<long double>(budget)) {
        throw CapacityError("tower level " + std::to_string(level) + " over q = " + std::to_string(q) + " has " +
                            std::to_string(static_cast<unsigned long long>(expected)) +
                            " chains, over the budget of " + std::to_string(budget));
    }
    const FieldSpec &field = FieldSpec::canonical(2 * s);
    const auto elements = field.elements();

    std::vector<FieldElement> omega;
    std::vector<bool> in_omega(field.order(), false);
    for (const auto &y : elements) {
        if ((y.pow(q) + y).is_zero()) {
            omega.push_back(y);
            in_omega[y.value()] = true;
        }
    }
    if (omega.size() != q) throw DefectError("|Omega| != q");

    // Exhaustive trace-equation table: solutions[c] = {x : x^q + x = c}.
    std::vector<std::vector<std::uint8_t>> solutions(field.order());
    for (const auto &x : elements) solutions[(x.pow(q) + x).value()].push_back(x.value());

    std::vector<std::uint8_t> chains;
    for (const auto &x : elements) {
        if (!in_omega[x.value()]) chains.push_back(x.value());
    }
    if (chains.size() != static_cast<std::size_t>((q - 1) * q)) throw DefectError("level-1 count != (q-1)q");

    for (unsigned k = 1; k < level; ++k) {
        std::vector<std::uint8_t> next;
        next.reserve(chains.size() * q / k * (k + 1));
        const std::size_t count = chains.size() / k;
        for (std::size_t c = 0; c < count; ++c) {
            const FieldElement last(field, chains[c * k + k - 1]);
            const FieldElement rhs = tower_rhs(last, q);
            if (rhs.is_zero() || !(rhs.pow(q) == rhs)) {
                throw DefectError("x^q/(x^(q-1)+1) left GF(q)\\{0} at x = " + last.to_string());
            }
            const auto &sols = solutions[rhs.value()];
            if (sols.size() != q) throw DefectError("trace equation does not have exactly q solutions");
            for (std::uint8_t x_next : sols) {
                if (in_omega[x_next]) throw DefectError("chain extension landed in Omega");
                next.insert(next.end(), chains.begin() + static_cast<std::ptrdiff_t>(c * k),
                            chains.begin() + static_cast<std::ptrdiff_t>((c + 1) * k));
                next.push_back(x_next);
            }
        }
        chains = std::move(next);
    }
    const std::size_t count = chains.size() / level;
    if (static_cast<long double>(count) != expected) throw DefectError("chain count != (q-1)q^level");
    std::optional<long long> genus;
    if (level >= 2) genus = tower_genus(q, level);
    return TowerLevel(q, level, field, std::move(omega), std::move(chains), genus);
}

long long tower_genus(long long q, long long h) {
    if (h < 2) throw ParameterError("h >= 2 violated (genus formulas start at level 2)");
    if (q < 2) throw ParameterError("q >= 2 violated");
    const long long i = h / 2;
    if (h % 2 == 0) {
        const long long a = checked_pow(q, i) - 1;
        return checked_mul(a, a);
    }
    return checked_mul(checked_pow(q, i + 1) - 1, checked_pow(q, i - 1) - 1);
}

AsymptoticFamilyParams family_params(long long t, long long m, long long h) {
    if (t < 3) throw ParameterError("t >= 3 violated");
    const long long q = checked_pow(2, t);
    if (!(2 < m)) throw ParameterError("2 < m violated");
    if (!(m < q - 1)) throw ParameterError("m < 2^t-1 violated");
    if (h < 1) throw ParameterError("h >= 1 violated");
    const long long qh = checked_pow(q, h);

    AsymptoticFamilyParams p;
    p.t = t;
    p.m = m;
    p.h = h;
    p.n = checked_mul(2 * t, checked_mul(q - 1, qh) - 2);
    p.k = checked_mul(2 * t, qh);
    const long long d_functional = checked_mul(q - 1 - m, qh) - 2;
    p.d = std::min(d_functional, checked_mul(m - 3, qh));
    // Level 1 is the rational function field F_{q^2}(x_1).
    p.genus_used = h == 1 ? 0 : tower_genus(q, h);
    p.d_exact_genus = std::min(d_functional, checked_mul(m - 1, qh) - 2 * p.genus_used + 2);
    p.R = reduced(p.k, p.n);
    p.delta = reduced(p.d, p.n);
    p.sum = reduced(p.k + p.d, p.n);
    return p;
}

std::vector<AsymptoticFamilyParams> family_sweep(long long t, long long m, long long h_min, long long h_max) {
    if (h_min > h_max) throw ParameterError("h range is empty");
    std::vector<AsymptoticFamilyParams> out;
    for (long long h = h_min; h <= h_max; ++h) out.push_back(family_params(t, m, h));
    return out;
}

AsymptoticSummary asymptotics(long long t, long long m, long long h_max) {
    const auto p = family_params(t, m, h_max);
    return {p.R, p.delta, p.sum};
}

}  // namespace agcss
