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

#include "agcss/gf2t.h"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "agcss/errors.h"

namespace agcss {

namespace {

int poly_degree(std::uint32_t p) {
    int d = -1;
    while (p != 0) {
        ++d;
        p >>= 1;
    }
    return d;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
        a ^= m << (da - dm);
    }
    return a;
}

bool is_irreducible(std::uint32_t p) {
    const int d = poly_degree(p);
    if (d < 1) return false;
    for (std::uint32_t f = 2; poly_degree(f) <= d / 2; ++f) {
        if (poly_mod(p, f) == 0) return false;
    }
    return true;
}

std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
    std::uint32_t r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
    }
    return poly_mod(r, m);
}

}  // namespace

FieldSpec::FieldSpec(unsigned degree, std::uint32_t modulus) : degree_(degree), modulus_(modulus), order_(1u << degree) {
    if (degree < 1 || degree > kMaxDegree) {
        throw UsageError("field degree must be in [1, 8], got " + std::to_string(degree));
    }
    if (poly_degree(modulus) != static_cast<int>(degree) || !is_irreducible(modulus)) {
        throw UsageError("modulus " + std::to_string(modulus) + " is not irreducible of degree " +
                         std::to_string(degree));
    }
    const unsigned group = order_ - 1;
    // Least primitive element: the first value whose powers cover the group.
    for (unsigned g = 1; g < order_; ++g) {
        unsigned x = 1;
        unsigned ord = 0;
        do {
            x = slow_mul(x, g, modulus_);
            ++ord;
        } while (x != 1);
        if (ord == group) {
            generator_ = static_cast<std::uint8_t>(g);
            break;
        }
    }
    exp_.assign(2 * group, 0);
    log_.assign(order_, 0);
    unsigned x = 1;
    for (unsigned i = 0; i < group; ++i) {
        exp_[i] = exp_[i + group] = static_cast<std::uint8_t>(x);
        log_[x] = i;
        x = slow_mul(x, generator_, modulus_);
    }
    trace_.assign(order_, 0);
    for (unsigned a = 0; a < order_; ++a) {
        unsigned acc = 0;
        unsigned p = a;
        for (unsigned i = 0; i < degree_; ++i) {
            acc ^= p;
            p = mul(static_cast<std::uint8_t>(p), static_cast<std::uint8_t>(p));
        }
        if (acc > 1) throw DefectError("trace left the prime field");
        trace_[a] = static_cast<std::uint8_t>(acc);
    }
}

std::uint32_t FieldSpec::default_modulus(unsigned degree) {
    static constexpr std::array<std::uint32_t, 9> kModuli = {0, 0b11, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011,
                                                             0b10000011, 0b100011011};
    if (degree < 1 || degree > kMaxDegree) {
        throw UsageError("field degree must be in [1, 8], got " + std::to_string(degree));
    }
    return kModuli[degree];
}

const FieldSpec &FieldSpec::canonical(unsigned degree) {
    static const std::array<std::unique_ptr<FieldSpec>, kMaxDegree + 1> fields = [] {
        std::array<std::unique_ptr<FieldSpec>, kMaxDegree + 1> out;
        for (unsigned t = 1; t <= kMaxDegree; ++t) out[t] = std::make_unique<FieldSpec>(t, default_modulus(t));
        return out;
    }();
    if (degree < 1 || degree > kMaxDegree) {
        throw UsageError("field degree must be in [1, 8], got " + std::to_string(degree));
    }
    return *fields[degree];
}

FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }
FieldElement FieldSpec::element(unsigned value) const { return FieldElement(*this, value); }
FieldElement FieldSpec::generator() const { return FieldElement(*this, generator_); }

std::vector<FieldElement> FieldSpec::elements() const {
    std::vector<FieldElement> out;
    out.reserve(order_);
    for (unsigned v = 0; v < order_; ++v) out.emplace_back(*this, v);
    return out;
}

std::uint8_t FieldSpec::inv(std::uint8_t a) const {
    if (a == 0) throw DomainError("zero has no multiplicative inverse");
    const unsigned group = order_ - 1;
    return exp_[(group - log_[a]) % group];
}

std::uint8_t FieldSpec::pow(std::uint8_t a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t group = order_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % group)) % group];
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    os << "GF(2^" << degree_ << ") mod " << modulus_;
    return os.str();
}

FieldElement::FieldElement(const FieldSpec &spec, unsigned value) : spec_(&spec), value_(static_cast<std::uint8_t>(value)) {
    if (value >= spec.order()) {
        throw UsageError("value " + std::to_string(value) + " out of range for " + spec.describe());
    }
}

BitVector FieldElement::coords() const {
    BitVector out(spec_->degree());
    for (unsigned i = 0; i < out.size(); ++i) out[i] = (value_ >> i) & 1u;
    return out;
}

FieldElement FieldElement::operator+(const FieldElement &b) const {
    require_same_field(*spec_, *b.spec_);
    return FieldElement(*spec_, value_ ^ b.value_);
}

FieldElement FieldElement::operator*(const FieldElement &b) const {
    require_same_field(*spec_, *b.spec_);
    return FieldElement(*spec_, spec_->mul(value_, b.value_));
}

FieldElement FieldElement::operator/(const FieldElement &b) const { return *this * b.inverse(); }

FieldElement FieldElement::inverse() const { return FieldElement(*spec_, spec_->inv(value_)); }

FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(*spec_, spec_->pow(value_, e)); }

void require_same_field(const FieldSpec &a, const FieldSpec &b) {
    if (&a != &b && !(a == b)) {
        throw UsageError("field mismatch: " + a.describe() + " vs " + b.describe());
    }
}

FieldElement add(const FieldElement &a, const FieldElement &b) { return a + b; }
FieldElement mul(const FieldElement &a, const FieldElement &b) { return a * b; }
FieldElement inv(const FieldElement &a) { return a.inverse(); }

unsigned trace_abs(const FieldElement &a) { return a.spec().trace(a.value()); }

FieldElement trace_rel(const FieldElement &a, unsigned q) {
    const FieldSpec &big = a.spec();
    if (big.degree() % 2 != 0 || q != (1u << (big.degree() / 2))) {
        throw UsageError("trace_rel: " + big.describe() + " is not GF(q^2) for q = " + std::to_string(q));
    }
    const FieldSpec &small = FieldSpec::canonical(big.degree() / 2);
    return subfield_embedding(small, big).restrict(a.pow(q) + a);
}

SubfieldEmbedding::SubfieldEmbedding(const FieldSpec &sub, const FieldSpec &ambient) : sub_(&sub), ambient_(&ambient) {
    if (ambient.degree() % sub.degree() != 0) {
        throw UsageError(sub.describe() + " is not a subfield of " + ambient.describe());
    }
    // Image of x: least root of the subfield modulus in the ambient field.
    int root = -1;
    for (unsigned b = 0; b < ambient.order() && root < 0; ++b) {
        std::uint8_t acc = 0;
        std::uint8_t power = 1;
        for (unsigned i = 0; i <= sub.degree(); ++i) {
            if ((sub.modulus() >> i) & 1u) acc ^= power;
            power = ambient.mul(power, static_cast<std::uint8_t>(b));
        }
        if (acc == 0) root = static_cast<int>(b);
    }
    if (root < 0) throw DefectError("subfield modulus has no root in the ambient field");
    forward_.assign(sub.order(), 0);
    backward_.assign(ambient.order(), -1);
    for (unsigned v = 0; v < sub.order(); ++v) {
        std::uint8_t acc = 0;
        std::uint8_t power = 1;
        for (unsigned i = 0; i < sub.degree(); ++i) {
            if ((v >> i) & 1u) acc ^= power;
            power = ambient.mul(power, static_cast<std::uint8_t>(root));
        }
        if (backward_[acc] != -1) throw DefectError("subfield embedding is not injective");
        forward_[v] = acc;
        backward_[acc] = static_cast<int>(v);
    }
}

FieldElement SubfieldEmbedding::embed(const FieldElement &a) const {
    require_same_field(a.spec(), *sub_);
    return FieldElement(*ambient_, forward_[a.value()]);
}

bool SubfieldEmbedding::contains(const FieldElement &a) const {
    require_same_field(a.spec(), *ambient_);
    return backward_[a.value()] >= 0;
}

FieldElement SubfieldEmbedding::restrict(const FieldElement &a) const {
    if (!contains(a)) {
        throw DomainError("element " + a.to_string() + " is not in " + sub_->describe());
    }
    return FieldElement(*sub_, static_cast<unsigned>(backward_[a.value()]));
}

const SubfieldEmbedding &subfield_embedding(const FieldSpec &sub, const FieldSpec &ambient) {
    static std::mutex mu;
    static std::map<std::pair<const FieldSpec *, const FieldSpec *>, std::unique_ptr<SubfieldEmbedding>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[{&sub, &ambient}];
    if (!slot) slot = std::make_unique<SubfieldEmbedding>(sub, ambient);
    return *slot;
}

Basis::Basis(const FieldSpec &spec, std::vector<FieldElement> elements) : spec_(&spec), elements_(std::move(elements)) {
    if (elements_.size() != spec.degree()) {
        throw UsageError("a basis of " + spec.describe() + " needs " + std::to_string(spec.degree()) + " elements");
    }
    for (const auto &e : elements_) require_same_field(e.spec(), spec);
    constexpr std::uint32_t kUnset = ~0u;
    coords_.assign(spec.order(), kUnset);
    for (std::uint32_t mask = 0; mask < spec.order(); ++mask) {
        std::uint8_t v = 0;
        for (unsigned i = 0; i < elements_.size(); ++i) {
            if ((mask >> i) & 1u) v ^= elements_[i].value();
        }
        if (coords_[v] != kUnset) throw UsageError("basis elements are linearly dependent over GF(2)");
        coords_[v] = mask;
    }
}

Basis Basis::polynomial(const FieldSpec &spec) {
    std::vector<FieldElement> elems;
    for (unsigned i = 0; i < spec.degree(); ++i) elems.push_back(spec.element(1u << i));
    return Basis(spec, std::move(elems));
}

std::vector<std::vector<unsigned>> Basis::gram() const {
    std::vector<std::vector<unsigned>> g(size(), std::vector<unsigned>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) g[i][j] = trace_abs(elements_[i] * elements_[j]);
    }
    return g;
}

bool Basis::is_self_dual() const {
    const auto g = gram();
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            if (g[i][j] != (i == j ? 1u : 0u)) return false;
        }
    }
    return true;
}

SelfDualBasis::SelfDualBasis(Basis basis) : basis_(std::move(basis)) {
    if (!basis_.is_self_dual()) throw UsageError("basis is not self-dual: trace Gram matrix is not the identity");
}

namespace {

bool extend_orthonormal(const FieldSpec &spec, const std::vector<std::uint8_t> &candidates, std::size_t start,
                        std::vector<std::uint8_t> &chosen) {
    if (chosen.size() == spec.degree()) return true;
    for (std::size_t c = start; c < candidates.size(); ++c) {
        const std::uint8_t v = candidates[c];
        bool orthogonal = true;
        for (std::uint8_t b : chosen) {
            if (spec.trace(spec.mul(v, b)) != 0) {
                orthogonal = false;
                break;
            }
        }
        if (!orthogonal) continue;
        chosen.push_back(v);
        if (extend_orthonormal(spec, candidates, c + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

SelfDualBasis find_self_dual_basis(const FieldSpec &spec) {
    // Tr(b^2) = Tr(b), so unit-norm elements are exactly the trace-one ones.
    std::vector<std::uint8_t> candidates;
    for (unsigned v = 1; v < spec.order(); ++v) {
        if (spec.trace(static_cast<std::uint8_t>(v)) == 1) candidates.push_back(static_cast<std::uint8_t>(v));
    }
    std::vector<std::uint8_t> chosen;
    if (!extend_orthonormal(spec, candidates, 0, chosen)) {
        throw DefectError("self-dual basis search exhausted for " + spec.describe());
    }
    std::vector<FieldElement> elems;
    for (std::uint8_t v : chosen) elems.push_back(spec.element(v));
    return SelfDualBasis(Basis(spec, std::move(elems)));
}

BitVector expand(const FieldElement &a, const Basis &basis) {
    require_same_field(a.spec(), basis.spec());
    const std::uint32_t mask = basis.packed_coordinates(a.value());
    BitVector out(basis.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (mask >> i) & 1u;
    return out;
}

FieldElement contract(std::span<const std::uint8_t> bits, const Basis &basis) {
    if (bits.size() != basis.size()) {
        throw UsageError("contract: expected " + std::to_string(basis.size()) + " bits, got " +
                         std::to_string(bits.size()));
    }
    FieldElement acc = basis.spec().zero();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) throw UsageError("contract: bit values must be 0 or 1");
        if (bits[i]) acc += basis[i];
    }
    return acc;
}

}  // namespace agcss
