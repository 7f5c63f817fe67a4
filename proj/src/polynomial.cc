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

#include "qbecc/polynomial.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "qbecc/errors.h"
#include "qbecc/field_matrix.h"

namespace qbecc {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (Elem e : c_) {
        if (e >= field_->size()) {
            throw PreconditionError("coefficient outside " + field_->name());
        }
    }
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

Poly Poly::monomial(FieldPtr field, Elem coeff, size_t exponent) {
    std::vector<Elem> c(exponent + 1, 0);
    c[exponent] = coeff;
    return Poly(std::move(field), std::move(c));
}

Poly Poly::x_pow_minus_one(FieldPtr field, size_t n) {
    std::vector<Elem> c(n + 1, 0);
    c[0] = 1;
    c[n] ^= 1;
    return Poly(std::move(field), std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) {
        return *this;
    }
    return scaled(field_->inv(leading()));
}

Poly::Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = field_->add(field_->mul(acc, x), c_[i]);
    }
    return acc;
}

Poly Poly::operator+(const Poly &other) const {
    std::vector<Elem> out(std::max(c_.size(), other.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); i++) {
        out[i] = c_[i];
    }
    for (size_t i = 0; i < other.c_.size(); i++) {
        out[i] ^= other.c_[i];
    }
    return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly &other) const {
    if (is_zero() || other.is_zero()) {
        return Poly(field_);
    }
    std::vector<Elem> out(c_.size() + other.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); i++) {
        if (c_[i] == 0) {
            continue;
        }
        for (size_t j = 0; j < other.c_.size(); j++) {
            out[i + j] ^= field_->mul(c_[i], other.c_[j]);
        }
    }
    return Poly(field_, std::move(out));
}

Poly Poly::scaled(Elem s) const {
    std::vector<Elem> out(c_.size());
    for (size_t i = 0; i < c_.size(); i++) {
        out[i] = field_->mul(c_[i], s);
    }
    return Poly(field_, std::move(out));
}

bool Poly::operator==(const Poly &other) const {
    return *field_ == *other.field_ && c_ == other.c_;
}

std::string Poly::to_string() const {
    if (!field_->is_binary() && !field_->is_quaternary()) {
        throw PreconditionError("C^E grammar only covers GF(2) and GF(4) coefficients");
    }
    std::vector<PolyTerm> terms;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] != 0) {
            terms.push_back({static_cast<int>(c_[i]), i});
        }
    }
    return format_poly_terms(terms);
}

std::pair<Poly, Poly> poly_divmod(const Poly &a, const Poly &b) {
    if (b.is_zero()) {
        throw PreconditionError("polynomial division by zero");
    }
    const auto &f = a.field();
    if (a.degree() < b.degree()) {
        return {Poly(f), a};
    }
    std::vector<Poly::Elem> rem = a.coeffs();
    std::vector<Poly::Elem> quo(a.degree() - b.degree() + 1, 0);
    Poly::Elem lead_inv = f->inv(b.leading());
    int db = b.degree();
    for (int i = a.degree(); i >= db; i--) {
        Poly::Elem c = rem[i];
        if (c == 0) {
            continue;
        }
        Poly::Elem q = f->mul(c, lead_inv);
        quo[i - db] = q;
        for (int j = 0; j <= db; j++) {
            rem[i - db + j] ^= f->mul(q, b.coeffs()[j]);
        }
    }
    rem.resize(db);
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly poly_mod(const Poly &a, const Poly &b) {
    return poly_divmod(a, b).second;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

bool poly_less(const Poly &a, const Poly &b) {
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    for (size_t i = a.coeffs().size(); i-- > 0;) {
        if (a.coeffs()[i] != b.coeffs()[i]) {
            return a.coeffs()[i] < b.coeffs()[i];
        }
    }
    return false;
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly &f_in) {
    const auto &field = f_in.field();
    if (!field->is_binary() && !field->is_quaternary()) {
        throw PreconditionError("factorization is only supported over GF(2) and GF(4)");
    }
    if (f_in.is_zero()) {
        throw PreconditionError("cannot factor the zero polynomial");
    }
    Poly f = f_in.monic();
    if (f.degree() <= 1) {
        return f.degree() == 1 ? std::vector<Poly>{f} : std::vector<Poly>{};
    }
    size_t d = f.degree();
    uint32_t q = field->size();

    // Berlekamp matrix: row i holds x^(q*i) mod f; kernel of (Q - I) spans the
    // polynomials v with v^q = v mod f.
    FieldMatrix qm(field, d, d);
    Poly xq = poly_mod(Poly::monomial(field, 1, q), f);
    Poly row(field, {1});
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            qm.at(i, j) = row.coeff(j);
        }
        qm.at(i, i) ^= 1;
        row = poly_mod(row * xq, f);
    }
    // v (as coefficient row vector) satisfies v * (Q - I) = 0.
    FieldMatrix kernel = qm.transposed().nullspace();
    size_t expected = kernel.rows();

    std::vector<Poly> factors = {f};
    for (size_t b = 0; b < kernel.rows() && factors.size() < expected; b++) {
        std::vector<GaloisField::Elem> coeffs(d);
        for (size_t j = 0; j < d; j++) {
            coeffs[j] = kernel.at(b, j);
        }
        Poly v(field, coeffs);
        if (v.degree() <= 0) {
            continue;
        }
        std::vector<Poly> next;
        for (const Poly &g : factors) {
            if (g.degree() <= 1) {
                next.push_back(g);
                continue;
            }
            Poly rest = g;
            for (uint32_t s = 0; s < q && rest.degree() > 0; s++) {
                Poly shifted = v + Poly(field, {s});
                Poly h = poly_gcd(rest, shifted);
                if (h.degree() > 0 && h.degree() < rest.degree()) {
                    next.push_back(h);
                    rest = poly_divmod(rest, h).first.monic();
                } else if (h.degree() == rest.degree()) {
                    break;
                }
            }
            if (rest.degree() > 0) {
                next.push_back(rest);
            }
        }
        factors = std::move(next);
    }
    std::sort(factors.begin(), factors.end(), poly_less);
    return factors;
}

std::vector<PolyTerm> parse_poly_terms(std::string_view text) {
    std::vector<PolyTerm> terms;
    std::set<size_t> seen;
    size_t i = 0;
    auto fail = [&](const std::string &why) {
        throw ParseError("bad polynomial '" + std::string(text) + "': " + why);
    };
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            i++;
            continue;
        }
        size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
            i++;
        }
        std::string_view tok = text.substr(start, i - start);
        if (tok.size() < 3 || tok[1] != '^' || tok[0] < '1' || tok[0] > '3') {
            fail("malformed token '" + std::string(tok) + "'");
        }
        size_t exponent = 0;
        for (size_t j = 2; j < tok.size(); j++) {
            if (!std::isdigit(static_cast<unsigned char>(tok[j]))) {
                fail("malformed exponent in '" + std::string(tok) + "'");
            }
            exponent = exponent * 10 + static_cast<size_t>(tok[j] - '0');
            if (exponent > 1000000) {
                fail("exponent too large");
            }
        }
        if (!seen.insert(exponent).second) {
            fail("duplicate exponent " + std::to_string(exponent));
        }
        terms.push_back({tok[0] - '0', exponent});
    }
    if (terms.empty()) {
        fail("no terms");
    }
    std::sort(terms.begin(), terms.end(), [](const PolyTerm &a, const PolyTerm &b) {
        return a.exponent > b.exponent;
    });
    return terms;
}

std::string format_poly_terms(const std::vector<PolyTerm> &terms) {
    std::string out;
    for (const auto &t : terms) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(t.coeff) + "^" + std::to_string(t.exponent);
    }
    return out;
}

Poly poly_from_terms(const FieldPtr &field, const std::vector<PolyTerm> &terms) {
    size_t top = 0;
    for (const auto &t : terms) {
        top = std::max(top, t.exponent);
    }
    std::vector<GaloisField::Elem> c(top + 1, 0);
    for (const auto &t : terms) {
        c[t.exponent] = field->from_f4(F4(static_cast<uint8_t>(t.coeff)));
    }
    return Poly(field, std::move(c));
}

}  // namespace qbecc
