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

#ifndef AGCSS_SERIES_H
#define AGCSS_SERIES_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "agcss/gf2t.h"

namespace agcss {

/// Power series c_0 + c_1 s + ... + c_{prec-1} s^{prec-1} over GF(2^t), exact
/// modulo s^prec.
class TruncatedSeries {
   public:
    TruncatedSeries(const FieldSpec &spec, std::size_t precision);
    /// Throws UsageError if `raw` is longer than the precision.
    TruncatedSeries(const FieldSpec &spec, std::size_t precision, std::vector<std::uint8_t> raw);
    static TruncatedSeries constant(const FieldElement &c, std::size_t precision);
    /// a + s.
    static TruncatedSeries shifted_parameter(const FieldElement &a, std::size_t precision);

    const FieldSpec &spec() const noexcept { return *spec_; }
    std::size_t precision() const noexcept { return coeffs_.size(); }
    FieldElement coeff(std::size_t i) const { return FieldElement(*spec_, coeffs_.at(i)); }
    const std::vector<std::uint8_t> &raw() const noexcept { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries &b) const;
    TruncatedSeries operator*(const TruncatedSeries &b) const;
    TruncatedSeries scaled(const FieldElement &c) const;
    TruncatedSeries pow(std::uint64_t e) const;

    bool is_zero() const noexcept;
    /// Index of the first nonzero coefficient.
    std::optional<std::size_t> valuation() const noexcept;

    bool operator==(const TruncatedSeries &b) const { return *spec_ == *b.spec_ && coeffs_ == b.coeffs_; }

   private:
    void check_compatible(const TruncatedSeries &b) const;

    const FieldSpec *spec_;
    std::vector<std::uint8_t> coeffs_;
};

}  // namespace agcss

#endif  // AGCSS_SERIES_H
