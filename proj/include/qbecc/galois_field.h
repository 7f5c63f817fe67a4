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

#ifndef QBECC_GALOIS_FIELD_H
#define QBECC_GALOIS_FIELD_H

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qbecc {

/// Element of GF(4) in the 2-bit code used throughout: 0, 1, 2 = w, 3 = w^2.
///
/// Bit 0 is the coefficient of 1 and bit 1 the coefficient of w (w^2 = w + 1),
/// so addition is XOR of the codes.
struct F4 {
    uint8_t v = 0;

    constexpr F4() = default;
    constexpr explicit F4(uint8_t code) : v(code & 3) {
    }

    static constexpr F4 zero() {
        return F4(0);
    }
    static constexpr F4 one() {
        return F4(1);
    }
    static constexpr F4 omega() {
        return F4(2);
    }
    static constexpr F4 omega2() {
        return F4(3);
    }

    constexpr bool operator==(const F4 &) const = default;
    constexpr explicit operator bool() const {
        return v != 0;
    }
};

constexpr F4 f4_add(F4 x, F4 y) {
    return F4(static_cast<uint8_t>(x.v ^ y.v));
}

constexpr F4 f4_mul(F4 x, F4 y) {
    constexpr uint8_t table[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return F4(table[x.v][y.v]);
}

/// Frobenius x -> x^2; swaps w and w^2.
constexpr F4 f4_conj(F4 x) {
    constexpr uint8_t table[4] = {0, 1, 3, 2};
    return F4(table[x.v]);
}

constexpr F4 f4_inv(F4 x) {
    return f4_conj(x);  // x^-1 = x^2 for nonzero x
}

constexpr F4 operator+(F4 x, F4 y) {
    return f4_add(x, y);
}
constexpr F4 operator*(F4 x, F4 y) {
    return f4_mul(x, y);
}

/// Finite field GF(2) or GF(4^m), m >= 1.
///
/// Elements of GF(4^m) are integers whose base-4 digit i is the GF(4) code of
/// the coefficient of a^i, where a is a root of the field's monic modulus.
/// Addition is XOR; multiplication goes through log/antilog tables. The modulus
/// is primitive, so a itself generates the multiplicative group. GF(2) is kept
/// as its own two-element field so binary codes never pick up GF(4) scalars.
class GaloisField {
   public:
    using Elem = uint32_t;

    static constexpr int kMaxDegree = 8;

    static std::shared_ptr<const GaloisField> binary();
    static std::shared_ptr<const GaloisField> quaternary();
    /// GF(4^m) with the default modulus for m; cached.
    static std::shared_ptr<const GaloisField> extension(int m);
    /// Default primitive modulus of degree m over GF(4), coefficients low to high.
    static const std::vector<F4> &default_modulus(int m);

    uint32_t size() const {
        return size_;
    }
    /// Degree over GF(4); 0 for GF(2).
    int degree() const {
        return degree_;
    }
    bool is_binary() const {
        return degree_ == 0;
    }
    bool is_quaternary() const {
        return degree_ == 1;
    }
    int bits_per_symbol() const {
        return is_binary() ? 1 : 2 * degree_;
    }
    const std::vector<F4> &modulus() const {
        return modulus_;
    }
    std::string name() const;

    Elem add(Elem a, Elem b) const {
        return a ^ b;
    }
    Elem sub(Elem a, Elem b) const {
        return a ^ b;
    }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) {
            return 0;
        }
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const {
        return mul(a, inv(b));
    }
    Elem pow(Elem a, uint64_t e) const;
    /// The primitive element a (the class of x modulo the modulus).
    Elem generator() const {
        return is_binary() || size_ == 2 ? 1 : exp_[1];
    }
    uint32_t multiplicative_order(Elem a) const;

    /// Embeds a GF(4) scalar; for GF(2) only 0 and 1 are accepted.
    Elem from_f4(F4 x) const;
    /// The GF(4) scalar this element equals, if it lies in the prime-ish subfield.
    std::optional<F4> to_f4(Elem a) const;

    /// Coordinates of an element over GF(4) in the basis 1, a, ..., a^(m-1).
    std::vector<F4> coordinates(Elem a) const;
    Elem from_coordinates(const std::vector<F4> &coords) const;
    /// m x m matrix over GF(4) (row-major) of x -> h*x in the coordinate basis.
    std::vector<F4> multiplication_matrix(Elem h) const;

    bool operator==(const GaloisField &other) const {
        return degree_ == other.degree_ && modulus_ == other.modulus_;
    }

    GaloisField(int degree, std::vector<F4> modulus);

   private:
    int degree_;
    uint32_t size_;
    std::vector<F4> modulus_;
    std::vector<Elem> exp_;      // doubled so exp_[log a + log b] needs no modulo
    std::vector<uint32_t> log_;  // log_[0] unused
};

using FieldPtr = std::shared_ptr<const GaloisField>;

}  // namespace qbecc

#endif
