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

#ifndef QBECC_POLYNOMIAL_H
#define QBECC_POLYNOMIAL_H

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbecc/galois_field.h"

namespace qbecc {

/// Univariate polynomial over a GaloisField, coefficients lowest degree first.
///
/// Always normalized: no trailing zero coefficients, so the zero polynomial has
/// an empty coefficient list and degree -1.
class Poly {
   public:
    using Elem = GaloisField::Elem;

    explicit Poly(FieldPtr field) : field_(std::move(field)) {
    }
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly monomial(FieldPtr field, Elem coeff, size_t exponent);
    /// x^n - 1 (= x^n + 1 in characteristic 2).
    static Poly x_pow_minus_one(FieldPtr field, size_t n);

    const FieldPtr &field() const {
        return field_;
    }
    const std::vector<Elem> &coeffs() const {
        return c_;
    }
    int degree() const {
        return static_cast<int>(c_.size()) - 1;
    }
    bool is_zero() const {
        return c_.empty();
    }
    Elem coeff(size_t i) const {
        return i < c_.size() ? c_[i] : 0;
    }
    Elem leading() const {
        return c_.empty() ? 0 : c_.back();
    }
    bool is_monic() const {
        return !c_.empty() && c_.back() == 1;
    }
    Poly monic() const;
    Elem eval(Elem x) const;

    Poly operator+(const Poly &other) const;
    Poly operator-(const Poly &other) const {
        return *this + other;
    }
    Poly operator*(const Poly &other) const;
    Poly scaled(Elem s) const;
    bool operator==(const Poly &other) const;

    /// Writes the polynomial in the C^E grammar (GF(2)/GF(4) only).
    std::string to_string() const;

   private:
    void normalize();

    FieldPtr field_;
    std::vector<Elem> c_;
};

/// Quotient and remainder with a = q*b + r, deg r < deg b.
std::pair<Poly, Poly> poly_divmod(const Poly &a, const Poly &b);
Poly poly_mod(const Poly &a, const Poly &b);
Poly poly_gcd(Poly a, Poly b);

/// Monic irreducible factors of a squarefree polynomial over GF(2) or GF(4),
/// sorted by (degree, coefficients). Uses Berlekamp's algorithm.
std::vector<Poly> factor_squarefree(const Poly &f);

/// One term C^E of the polynomial grammar.
struct PolyTerm {
    int coeff;      // GF(4) code 1..3
    size_t exponent;

    bool operator==(const PolyTerm &) const = default;
};

/// Parses whitespace-separated `C^E` tokens. Terms come back sorted by
/// decreasing exponent. Throws ParseError on malformed tokens or duplicate
/// exponents.
std::vector<PolyTerm> parse_poly_terms(std::string_view text);
std::string format_poly_terms(const std::vector<PolyTerm> &terms);
Poly poly_from_terms(const FieldPtr &field, const std::vector<PolyTerm> &terms);

}  // namespace qbecc

#endif
