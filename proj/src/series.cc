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

#include "agcss/series.h"

#include <algorithm>

#include "agcss/errors.h"

namespace agcss {

TruncatedSeries::TruncatedSeries(const FieldSpec &spec, std::size_t precision)
    : spec_(&spec), coeffs_(precision, 0) {
    if (precision == 0) throw UsageError("series precision must be >= 1");
}

TruncatedSeries::TruncatedSeries(const FieldSpec &spec, std::size_t precision, std::vector<std::uint8_t> raw)
    : TruncatedSeries(spec, precision) {
    if (raw.size() > precision) throw UsageError("more coefficients than the series precision");
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] >= spec.order()) throw UsageError("series coefficient out of range");
        coeffs_[i] = raw[i];
    }
}

TruncatedSeries TruncatedSeries::constant(const FieldElement &c, std::size_t precision) {
    return TruncatedSeries(c.spec(), precision, {c.value()});
}

TruncatedSeries TruncatedSeries::shifted_parameter(const FieldElement &a, std::size_t precision) {
    std::vector<std::uint8_t> raw{a.value(), 1};
    raw.resize(std::min<std::size_t>(2, precision));
    return TruncatedSeries(a.spec(), precision, std::move(raw));
}

void TruncatedSeries::check_compatible(const TruncatedSeries &b) const {
    require_same_field(*spec_, *b.spec_);
    if (precision() != b.precision()) throw UsageError("series precision mismatch");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries &b) const {
    check_compatible(b);
    TruncatedSeries out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] ^= b.coeffs_[i];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries &b) const {
    check_compatible(b);
    const std::size_t n = precision();
    TruncatedSeries out(*spec_, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] ^= spec_->mul(coeffs_[i], b.coeffs_[j]);
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const FieldElement &c) const {
    require_same_field(*spec_, c.spec());
    TruncatedSeries out = *this;
    for (auto &v : out.coeffs_) v = spec_->mul(v, c.value());
    return out;
}

TruncatedSeries TruncatedSeries::pow(std::uint64_t e) const {
    TruncatedSeries result = constant(spec_->one(), precision());
    TruncatedSeries base = *this;
    while (e != 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

bool TruncatedSeries::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint8_t v) { return v == 0; });
}

std::optional<std::size_t> TruncatedSeries::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return i;
    }
    return std::nullopt;
}

}  // namespace agcss
