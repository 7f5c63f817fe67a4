// Copyright 2026 The qbecc Authors
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

#ifndef QBECC_STABILIZER_H
#define QBECC_STABILIZER_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qbecc/bit_vector.h"
#include "qbecc/classical_code.h"
#include "qbecc/galois_field.h"

namespace qbecc {

/// A vector (a|b) in GF(2)^{2n}: X(a) Z(b) up to phase.
struct SymplecticVector {
    BitVec a;
    BitVec b;

    SymplecticVector() = default;
    explicit SymplecticVector(size_t n) : a(n), b(n) {
    }

    size_t n() const {
        return a.size();
    }
    /// Number of non-identity coordinates.
    size_t weight() const {
        return (a | b).popcount();
    }
    BitVec support() const {
        return a | b;
    }
    /// Single-qubit symbol at position i as a GF(4) code (X=1, Z=w, Y=w^2).
    F4 symbol(size_t i) const {
        return F4(static_cast<uint8_t>(a.get(i) | (b.get(i) << 1)));
    }
    void set_symbol(size_t i, F4 s) {
        a.set(i, s.v & 1);
        b.set(i, s.v & 2);
    }
    bool is_zero() const {
        return !a.any() && !b.any();
    }

    /// The 2n-bit vector [a | b].
    BitVec packed() const;
    static SymplecticVector from_packed(const BitVec &v);

    /// Pauli string such as "XIZY".
    std::string to_string() const;
    static SymplecticVector from_string(std::string_view paulis);

    SymplecticVector &operator^=(const SymplecticVector &o) {
        a ^= o.a;
        b ^= o.b;
        return *this;
    }
    SymplecticVector operator^(const SymplecticVector &o) const {
        SymplecticVector out = *this;
        out ^= o;
        return out;
    }
    bool operator==(const SymplecticVector &) const = default;
    bool operator<(const SymplecticVector &o) const {
        return a == o.a ? b < o.b : a < o.a;
    }
};

/// i^phase X(a) Z(b). Code-level predicates ignore the phase.
struct PauliError {
    int phase = 0;
    SymplecticVector sym;
};

using F4Vector = std::vector<F4>;

/// a.b' + a'.b over GF(2).
bool symplectic_ip(const SymplecticVector &u, const SymplecticVector &v);
/// sum_i (u_i v_i^2 + u_i^2 v_i), which always lands in GF(2).
bool trace_ip(const F4Vector &u, const F4Vector &v);

/// Coordinatewise X<->1, Z<->w, Y<->w^2.
SymplecticVector f4_to_symplectic(const F4Vector &v);
F4Vector symplectic_to_f4(const SymplecticVector &v);

/// Span from the first to the last non-identity coordinate; 0 for the identity.
size_t burst_length(const SymplecticVector &v);
size_t burst_length(const F4Vector &v);

/// Stabilizer (additive self-orthogonal) code C with its symplectic dual data.
///
/// The basis is kept in reduced echelon form over the packed [a|b] layout.
/// Logical operators are 2k vectors completing the basis of C to a basis of
/// C^{perp_s}; an element e of C^{perp_s} lies in C iff it commutes with all
/// of them.
class StabilizerCode {
   public:
    size_t n() const {
        return n_;
    }
    size_t r() const {
        return basis_.size();
    }
    size_t k() const {
        return n_ - basis_.size();
    }
    const std::vector<SymplecticVector> &basis() const {
        return basis_;
    }
    const std::vector<SymplecticVector> &logicals() const {
        return logicals_;
    }

    /// r-bit vector of symplectic products with the basis.
    BitVec syndrome(const SymplecticVector &e) const;
    /// 2k-bit vector of symplectic products with the logical operators.
    BitVec logical_syndrome(const SymplecticVector &e) const;
    bool in_stabilizer(const SymplecticVector &e) const;
    bool in_normalizer(const SymplecticVector &e) const {
        return !syndrome(e).any();
    }

    friend StabilizerCode additive_code(size_t n, const std::vector<SymplecticVector> &rows);

   private:
    size_t n_ = 0;
    std::vector<SymplecticVector> basis_;
    std::vector<SymplecticVector> logicals_;
    Gf2Basis span_{0};
};

/// Row-reduces the generators and checks they pairwise commute. Throws
/// CommutationError naming the first anticommuting input pair.
StabilizerCode additive_code(size_t n, const std::vector<SymplecticVector> &rows);

/// Stabilizer from a Hermitian dual-containing GF(4) code C: the additive span
/// of {g, w g} over the rows g of C^{perp_h}. Gives [[n, 2k - n]].
StabilizerCode hermitian_construct(const LinearCode &code);

/// CSS stabilizer {(h|0) : h in H(C1)} + {(0|h) : h in H(C2)}, requiring
/// C2^perp subset of C1. Gives [[n, k1 + k2 - n]].
StabilizerCode css_construct(const LinearCode &c1, const LinearCode &c2);

struct DistanceResult {
    /// min weight over C^{perp_s} \ C (0 when k = 0).
    size_t distance = 0;
    /// min weight over C^{perp_s} \ {0}, the nondegenerate convention.
    size_t distance_nonzero = 0;
    uint64_t enumerated = 0;
};

/// Exhaustive over the 2^(n+k) elements of C^{perp_s}; refuses with a
/// ResourceLimitError when n + k exceeds max_log2.
DistanceResult min_distance(const StabilizerCode &code, size_t max_log2 = 28);

}  // namespace qbecc

#endif
