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

#ifndef AGCSS_TOWER_H
#define AGCSS_TOWER_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "agcss/gf2t.h"

namespace agcss {

/// Chains (x_1, ..., x_i) over GF(q^2) with x_1 outside Omega and
/// x_{k+1}^q + x_{k+1} = x_k^q / (x_k^(q-1) + 1).
class TowerLevel {
   public:
    TowerLevel(unsigned q, unsigned level, const FieldSpec &field, std::vector<FieldElement> omega,
               std::vector<std::uint8_t> chains, std::optional<long long> genus);

    unsigned q() const noexcept { return q_; }
    unsigned level() const noexcept { return level_; }
    /// GF(q^2).
    const FieldSpec &field() const noexcept { return *field_; }
    /// Roots of y^q + y = 0.
    const std::vector<FieldElement> &omega() const noexcept { return omega_; }
    std::size_t count() const noexcept { return chains_.size() / level_; }
    /// Raw values of the i-th chain.
    std::span<const std::uint8_t> chain(std::size_t i) const {
        return std::span<const std::uint8_t>(chains_).subspan(i * level_, level_);
    }
    /// Genus by formula; empty at level 1, where the formulas do not apply.
    std::optional<long long> genus() const noexcept { return genus_; }

   private:
    unsigned q_;
    unsigned level_;
    const FieldSpec *field_;
    std::vector<FieldElement> omega_;
    std::vector<std::uint8_t> chains_;
    std::optional<long long> genus_;
};

inline constexpr std::uint64_t kDefaultTowerBudget = 1'000'000;

/// x^q / (x^(q-1) + 1) for x in GF(q^2) outside Omega. Throws DomainError on Omega.
FieldElement tower_rhs(const FieldElement &x, unsigned q);

/// Enumerates all chains of the given length. q must be 2, 4 or 8 and
/// (q-1) q^level must fit the budget. The point-count, RHS-range and
/// chain-extension laws are checked while extending; a violation is a
/// DefectError.
TowerLevel tower_points(unsigned q, unsigned level, std::uint64_t budget = kDefaultTowerBudget);

/// g(2i) = (q^i - 1)^2, g(2i+1) = (q^(i+1) - 1)(q^(i-1) - 1), h >= 2.
long long tower_genus(long long q, long long h);

/// Exact fraction with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator<(const Rational &a, const Rational &b) noexcept {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator==(const Rational &a, const Rational &b) noexcept {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>=(const Rational &a, const Rational &b) noexcept { return !(a < b); }
};

struct AsymptoticFamilyParams {
    long long t = 0;
    long long m = 0;
    long long h = 0;
    long long n = 0;
    long long k = 0;
    /// Distance from the simplified formula using g(h) <= q^h.
    long long d = 0;
    /// Distance using the genus formula (genus 0 at h = 1, the rational field).
    long long d_exact_genus = 0;
    long long genus_used = 0;
    Rational R;
    Rational delta;
    /// R + delta = (k + d) / n.
    Rational sum;
};

/// n_h = 2t((2^t-1)2^(th)-2), k_h = 2t 2^(th),
/// d_h = min{(2^t-1-m)2^(th)-2, (m-3)2^(th)}. Needs t >= 3, 2 < m < 2^t - 1, h >= 1.
AsymptoticFamilyParams family_params(long long t, long long m, long long h);
/// family_params at h = 1..h_max.
std::vector<AsymptoticFamilyParams> family_sweep(long long t, long long m, long long h_min, long long h_max);

struct AsymptoticSummary {
    Rational R;
    Rational delta;
    Rational sum;
};
/// R, delta and R + delta at h = h_max.
AsymptoticSummary asymptotics(long long t, long long m, long long h_max);

}  // namespace agcss

#endif  // AGCSS_TOWER_H
