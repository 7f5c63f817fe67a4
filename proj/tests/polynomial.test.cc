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

#include <random>

#include "gtest/gtest.h"

#include "qbecc/code_search.h"
#include "qbecc/errors.h"

using namespace qbecc;

namespace {

Poly random_poly(const FieldPtr &f, size_t max_degree, std::mt19937_64 &rng) {
    std::vector<GaloisField::Elem> c(rng() % (max_degree + 1) + 1);
    for (auto &x : c) {
        x = static_cast<GaloisField::Elem>(rng() % f->size());
    }
    return Poly(f, c);
}

// Brute-force irreducibility: no monic divisor of degree 1..deg/2.
bool irreducible_by_trial(const Poly &p) {
    const FieldPtr &f = p.field();
    size_t half = static_cast<size_t>(p.degree()) / 2;
    for (size_t d = 1; d <= half; d++) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; i++) {
            count *= f->size();
        }
        for (uint64_t code = 0; code < count; code++) {
            std::vector<GaloisField::Elem> c(d + 1);
            uint64_t v = code;
            for (size_t i = 0; i < d; i++) {
                c[i] = static_cast<GaloisField::Elem>(v % f->size());
                v /= f->size();
            }
            c[d] = 1;
            if (poly_mod(p, Poly(f, c)).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST(Poly, normalizes) {
    auto f = GaloisField::quaternary();
    Poly p(f, {1, 2, 0, 0});
    EXPECT_EQ(p.degree(), 1);
    EXPECT_TRUE(Poly(f, {0, 0}).is_zero());
    EXPECT_EQ(Poly(f).degree(), -1);
    EXPECT_THROW(Poly(f, {4}), PreconditionError);
}

TEST(Poly, divmod_round_trip) {
    std::mt19937_64 rng(11);
    for (auto f : {GaloisField::binary(), GaloisField::quaternary(), GaloisField::extension(2)}) {
        for (int i = 0; i < 1000; i++) {
            Poly a = random_poly(f, 12, rng);
            Poly b = random_poly(f, 6, rng);
            if (b.is_zero()) {
                continue;
            }
            auto [q, r] = poly_divmod(a, b);
            EXPECT_EQ(q * b + r, a);
            EXPECT_LT(r.degree(), b.degree());
        }
    }
}

TEST(Poly, known_divisor) {
    auto f = GaloisField::quaternary();
    Poly g = parse_genpoly("1^6 2^3 1^0", 15).to_poly(f);
    EXPECT_TRUE(poly_mod(Poly::x_pow_minus_one(f, 15), g).is_zero());
    EXPECT_EQ(g.to_string(), "1^6 2^3 1^0");
}

TEST(Poly, gcd) {
    auto f = GaloisField::quaternary();
    Poly a = Poly(f, {1, 1}) * Poly(f, {2, 1});
    Poly b = Poly(f, {1, 1}) * Poly(f, {2, 1, 1});
    EXPECT_EQ(poly_gcd(a, b).monic(), Poly(f, {1, 1}));
}

TEST(Poly, factor_counts) {
    auto f2 = GaloisField::binary();
    auto f4 = GaloisField::quaternary();
    EXPECT_EQ(factor_squarefree(Poly::x_pow_minus_one(f2, 3)).size(), 2u);
    EXPECT_EQ(factor_squarefree(Poly::x_pow_minus_one(f4, 5)).size(), 3u);
    EXPECT_EQ(factor_squarefree(Poly::x_pow_minus_one(f2, 7)).size(), 3u);
    EXPECT_EQ(factor_squarefree(Poly::x_pow_minus_one(f4, 3)).size(), 3u);
}

TEST(Poly, factors_are_irreducible_and_multiply_back) {
    for (auto f : {GaloisField::binary(), GaloisField::quaternary()}) {
        for (size_t n : {3u, 5u, 7u, 9u, 11u, 13u, 15u, 17u, 21u}) {
            Poly target = Poly::x_pow_minus_one(f, n);
            auto factors = factor_squarefree(target);
            Poly prod(f, {1});
            for (const Poly &g : factors) {
                EXPECT_TRUE(g.is_monic());
                if (g.degree() <= 6) {
                    EXPECT_TRUE(irreducible_by_trial(g)) << g.to_string();
                }
                prod = prod * g;
            }
            EXPECT_EQ(prod, target) << f->name() << " n=" << n;
        }
    }
}

TEST(PolyTerms, parse_and_format) {
    auto terms = parse_poly_terms("1^0 2^3 1^6");
    ASSERT_EQ(terms.size(), 3u);
    EXPECT_EQ(terms[0], (PolyTerm{1, 6}));
    EXPECT_EQ(terms[2], (PolyTerm{1, 0}));
    EXPECT_EQ(format_poly_terms(terms), "1^6 2^3 1^0");
    EXPECT_EQ(format_poly_terms(parse_poly_terms("  3^12\t1^0 ")), "3^12 1^0");
}

TEST(PolyTerms, grammar_errors) {
    for (const char *bad : {"", "   ", "4^1", "0^2", "1^", "1^x", "1_2", "12", "1^2 3^2", "w^1", "1^-1"}) {
        EXPECT_THROW(parse_poly_terms(bad), ParseError) << bad;
    }
}

TEST(PolyTerms, binary_rejects_omega) {
    EXPECT_THROW(poly_from_terms(GaloisField::binary(), parse_poly_terms("2^1 1^0")), PreconditionError);
}
