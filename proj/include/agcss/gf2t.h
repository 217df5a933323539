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

#ifndef AGCSS_GF2T_H
#define AGCSS_GF2T_H

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace agcss {

/// Coordinates over GF(2), one byte (0 or 1) per coordinate.
using BitVector = std::vector<std::uint8_t>;

class FieldElement;

/// GF(2^t) for 1 <= t <= 8 in the polynomial basis of GF(2)[x]/(modulus).
///
/// Elements are identified with the integer whose bit i is the coefficient of
/// x^i; that integer order is the canonical element order used everywhere.
/// Arithmetic runs through log/antilog tables built from the least primitive
/// element. Instances are immutable and not copyable, since elements refer
/// back to their field by address.
class FieldSpec {
   public:
    static constexpr unsigned kMaxDegree = 8;

    /// Throws UsageError if t is out of range or the modulus is not an
    /// irreducible polynomial of degree t.
    FieldSpec(unsigned degree, std::uint32_t modulus);
    FieldSpec(const FieldSpec &) = delete;
    FieldSpec &operator=(const FieldSpec &) = delete;

    /// Process-wide field with the fixed modulus for this degree.
    static const FieldSpec &canonical(unsigned degree);
    /// x+1, x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, x^6+x+1, x^7+x+1,
    /// x^8+x^4+x^3+x+1.
    static std::uint32_t default_modulus(unsigned degree);

    unsigned degree() const noexcept { return degree_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    unsigned order() const noexcept { return order_; }

    bool operator==(const FieldSpec &other) const noexcept {
        return degree_ == other.degree_ && modulus_ == other.modulus_;
    }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(unsigned value) const;
    /// Least primitive element in the canonical order.
    FieldElement generator() const;
    /// All elements in canonical order.
    std::vector<FieldElement> elements() const;

    // Raw-value arithmetic. Inputs must be < order().
    static std::uint8_t add(std::uint8_t a, std::uint8_t b) noexcept { return a ^ b; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    std::uint8_t inv(std::uint8_t a) const;
    std::uint8_t pow(std::uint8_t a, std::uint64_t e) const noexcept;
    unsigned trace(std::uint8_t a) const noexcept { return trace_[a]; }
    std::string describe() const;

   private:
    unsigned degree_;
    std::uint32_t modulus_;
    unsigned order_;
    std::uint8_t generator_ = 1;
    std::vector<std::uint8_t> exp_;
    std::vector<unsigned> log_;
    std::vector<std::uint8_t> trace_;
};

/// Shares the FieldSpec's lifetime.
class FieldElement {
   public:
    FieldElement(const FieldSpec &spec, unsigned value);

    const FieldSpec &spec() const noexcept { return *spec_; }
    std::uint8_t value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }
    /// t coefficients in the polynomial basis, lowest degree first.
    BitVector coords() const;

    FieldElement operator+(const FieldElement &b) const;
    FieldElement operator-(const FieldElement &b) const { return *this + b; }
    FieldElement operator*(const FieldElement &b) const;
    FieldElement operator/(const FieldElement &b) const;
    FieldElement &operator+=(const FieldElement &b) { return *this = *this + b; }
    FieldElement &operator*=(const FieldElement &b) { return *this = *this * b; }

    /// Throws DomainError for zero.
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement &b) const noexcept {
        return value_ == b.value_ && (spec_ == b.spec_ || *spec_ == *b.spec_);
    }
    std::strong_ordering operator<=>(const FieldElement &b) const noexcept { return value_ <=> b.value_; }

    std::string to_string() const { return std::to_string(value_); }

   private:
    const FieldSpec *spec_;
    std::uint8_t value_;
};

/// Throws UsageError when a and b live in different fields.
void require_same_field(const FieldSpec &a, const FieldSpec &b);

FieldElement add(const FieldElement &a, const FieldElement &b);
FieldElement mul(const FieldElement &a, const FieldElement &b);
FieldElement inv(const FieldElement &a);

/// Absolute trace a + a^2 + ... + a^(2^(t-1)), as 0 or 1.
unsigned trace_abs(const FieldElement &a);

/// a^q + a for a in GF(q^2), returned as an element of the canonical GF(q).
/// Throws UsageError unless a's field has order q^2.
FieldElement trace_rel(const FieldElement &a, unsigned q);

/// GF(2^s) inside GF(2^t), s | t. The image of x is the least root of the
/// subfield's modulus in the ambient field.
class SubfieldEmbedding {
   public:
    SubfieldEmbedding(const FieldSpec &sub, const FieldSpec &ambient);

    const FieldSpec &sub() const noexcept { return *sub_; }
    const FieldSpec &ambient() const noexcept { return *ambient_; }
    FieldElement embed(const FieldElement &a) const;
    bool contains(const FieldElement &a) const;
    /// Throws DomainError if a is outside the image.
    FieldElement restrict(const FieldElement &a) const;

   private:
    const FieldSpec *sub_;
    const FieldSpec *ambient_;
    std::vector<std::uint8_t> forward_;
    std::vector<int> backward_;
};

/// Cached embedding between two long-lived fields.
const SubfieldEmbedding &subfield_embedding(const FieldSpec &sub, const FieldSpec &ambient);

/// An ordered GF(2)-basis of GF(2^t).
class Basis {
   public:
    /// Throws UsageError unless the elements are t linearly independent
    /// elements of spec.
    Basis(const FieldSpec &spec, std::vector<FieldElement> elements);
    /// {1, x, ..., x^(t-1)}. Not self-dual for t >= 2.
    static Basis polynomial(const FieldSpec &spec);

    const FieldSpec &spec() const noexcept { return *spec_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<FieldElement> &elements() const noexcept { return elements_; }
    const FieldElement &operator[](std::size_t i) const { return elements_[i]; }

    /// Gram matrix of the trace form, Tr(b_i b_j).
    std::vector<std::vector<unsigned>> gram() const;
    bool is_self_dual() const;

    /// Coordinates packed into an integer, bit i = coefficient of b_i.
    std::uint32_t packed_coordinates(std::uint8_t raw) const { return coords_[raw]; }

   private:
    const FieldSpec *spec_;
    std::vector<FieldElement> elements_;
    std::vector<std::uint32_t> coords_;
};

/// A basis whose trace Gram matrix is the identity.
class SelfDualBasis {
   public:
    /// Throws UsageError if the Gram matrix is not the identity.
    explicit SelfDualBasis(Basis basis);

    const Basis &basis() const noexcept { return basis_; }
    operator const Basis &() const noexcept { return basis_; }
    const FieldSpec &spec() const noexcept { return basis_.spec(); }
    std::size_t size() const noexcept { return basis_.size(); }
    const std::vector<FieldElement> &elements() const noexcept { return basis_.elements(); }
    const FieldElement &operator[](std::size_t i) const { return basis_[i]; }

   private:
    Basis basis_;
};

/// The lexicographically least self-dual basis (it is sorted ascending).
SelfDualBasis find_self_dual_basis(const FieldSpec &spec);

/// Coordinates of a in the basis. For a self-dual basis c_i = Tr(a b_i).
BitVector expand(const FieldElement &a, const Basis &basis);
/// Inverse of expand. Throws UsageError on a length mismatch.
FieldElement contract(std::span<const std::uint8_t> bits, const Basis &basis);

}  // namespace agcss

#endif  // AGCSS_GF2T_H
