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

#include "qbecc/stabilizer.h"

#include <random>

#include "gtest/gtest.h"

#include "oracles.h"
#include "qbecc/code_search.h"
#include "qbecc/errors.h"
#include "qbecc/registry.h"

using namespace qbecc;

namespace {

StabilizerCode five_qubit() {
    std::vector<SymplecticVector> rows;
    for (const char *s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) {
        rows.push_back(SymplecticVector::from_string(s));
    }
    return additive_code(5, rows);
}

// Minimum weight over N(C) \ C by enumerating all 4^n Paulis.
size_t ref_distance(const StabilizerCode &code) {
    auto gens = qbecc_test::generator_masks(code);
    auto stab = qbecc_test::span_of(gens);
    size_t n = code.n();
    size_t best = n + 1;
    for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
        for (uint64_t z = 0; z < (uint64_t{1} << n); z++) {
            qbecc_test::Mask m{static_cast<uint32_t>(x), static_cast<uint32_t>(z)};
            bool commutes = true;
            for (const auto &g : gens) {
                commutes = commutes && !qbecc_test::anticommute(m, g);
            }
            if (commutes && !stab.contains(m)) {
                best = std::min<size_t>(best, std::popcount(static_cast<uint32_t>(x | z)));
            }
        }
    }
    return best;
}

}  // namespace

TEST(SymplecticVector, string_round_trip) {
    auto v = SymplecticVector::from_string("IXZYI");
    EXPECT_EQ(v.to_string(), "IXZYI");
    EXPECT_EQ(v.weight(), 3u);
    EXPECT_EQ(v.symbol(1), F4::one());
    EXPECT_EQ(v.symbol(2), F4::omega());
    EXPECT_EQ(v.symbol(3), F4::omega2());
    EXPECT_EQ(burst_length(v), 3u);
    EXPECT_EQ(burst_length(SymplecticVector(4)), 0u);
    EXPECT_EQ(SymplecticVector::from_packed(v.packed()), v);
    EXPECT_THROW(SymplecticVector::from_string("XQ"), ParseError);
}

TEST(SymplecticVector, trace_form_matches_symplectic_form) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 10000; i++) {
        size_t n = 1 + rng() % 20;
        F4Vector u(n), v(n);
        for (size_t j = 0; j < n; j++) {
            u[j] = F4(static_cast<uint8_t>(rng() & 3));
            v[j] = F4(static_cast<uint8_t>(rng() & 3));
        }
        SymplecticVector su = f4_to_symplectic(u);
        ASSERT_EQ(symplectic_to_f4(su), u);
        ASSERT_EQ(trace_ip(u, v), symplectic_ip(su, f4_to_symplectic(v)));
        ASSERT_EQ(burst_length(u), burst_length(su));
    }
}

TEST(StabilizerCode, five_qubit_code) {
    StabilizerCode code = five_qubit();
    EXPECT_EQ(code.r(), 4u);
    EXPECT_EQ(code.k(), 1u);
    EXPECT_EQ(code.logicals().size(), 2u);
    DistanceResult d = min_distance(code);
    EXPECT_EQ(d.distance, 3u);
    EXPECT_EQ(d.distance, ref_distance(code));
    EXPECT_TRUE(code.in_stabilizer(SymplecticVector::from_string("XZZXI")));
    EXPECT_FALSE(code.in_stabilizer(SymplecticVector::from_string("XXXXX")));
    EXPECT_TRUE(code.in_normalizer(SymplecticVector::from_string("XXXXX")));
    EXPECT_TRUE(code.syndrome(SymplecticVector::from_string("XIIII")).any());
}

TEST(StabilizerCode, logicals_complete_the_normalizer) {
    StabilizerCode code = five_qubit();
    const auto &l = code.logicals();
    for (const auto &g : l) {
        EXPECT_TRUE(code.in_normalizer(g));
        EXPECT_FALSE(code.in_stabilizer(g));
    }
    EXPECT_TRUE(symplectic_ip(l[0], l[1]));
}

TEST(StabilizerCode, commutation_error_names_pair) {
    std::vector<SymplecticVector> rows{SymplecticVector::from_string("ZI"), SymplecticVector::from_string("IX"),
                                       SymplecticVector::from_string("XI")};
    try {
        additive_code(2, rows);
        FAIL() << "expected CommutationError";
    } catch (const CommutationError &e) {
        EXPECT_EQ(e.first, 0u);
        EXPECT_EQ(e.second, 2u);
    }
}

TEST(StabilizerCode, dependent_rows_are_reduced) {
    std::vector<SymplecticVector> rows{SymplecticVector::from_string("ZZI"), SymplecticVector::from_string("IZZ"),
                                       SymplecticVector::from_string("ZIZ")};
    StabilizerCode code = additive_code(3, rows);
    EXPECT_EQ(code.r(), 2u);
    EXPECT_EQ(code.k(), 1u);
}

TEST(StabilizerCode, random_codes_distance_matches_reference) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 3 + rng() % 5;
        size_t k = 1 + rng() % (n - 1);
        auto rows = qbecc_test::random_stabilizer_rows(n, k, rng, trial % 3 == 0);
        std::vector<SymplecticVector> vs;
        for (const auto &m : rows) {
            vs.push_back(qbecc_test::from_mask(m, n));
        }
        StabilizerCode code = additive_code(n, vs);
        ASSERT_EQ(code.k(), k);
        EXPECT_EQ(min_distance(code).distance, ref_distance(code));
    }
}

TEST(Constructions, hermitian_parameters) {
    LinearCode c = cyclic_from_poly(parse_genpoly("1^6 2^3 1^0", 15).to_poly(GaloisField::quaternary()), 15).code;
    StabilizerCode q = hermitian_construct(c);
    EXPECT_EQ(q.n(), 15u);
    EXPECT_EQ(q.k(), 2 * c.k - 15);
    LinearCode rep = cyclic_from_poly(parse_genpoly("1^2 1^1 1^0", 3).to_poly(GaloisField::quaternary()), 3).code;
    EXPECT_THROW(hermitian_construct(rep), PreconditionError);
}

TEST(Constructions, steane_from_css) {
    auto f2 = GaloisField::binary();
    LinearCode hamming = cyclic_from_poly(parse_genpoly("1^3 1^1 1^0", 7).to_poly(f2), 7).code;
    StabilizerCode steane = css_construct(hamming, hamming);
    EXPECT_EQ(steane.k(), 1u);
    EXPECT_EQ(min_distance(steane).distance, 3u);
    LinearCode simplex = cyclic_from_poly(parse_genpoly("1^4 1^3 1^2 1^0", 7).to_poly(f2), 7).code;
    EXPECT_THROW(css_construct(simplex, simplex), PreconditionError);
}

TEST(Constructions, catalogue_distances) {
    EXPECT_EQ(min_distance(build_code(13, Construction::kHermitian, registry_lookup("13_1").genpolys)).distance, 5u);
    size_t best17 = 0;
    for (const char *id : {"17_1", "17_1d"}) {
        const auto &e = registry_lookup(id);
        best17 = std::max(best17, min_distance(build_code(e.n, e.construction, e.genpolys)).distance);
    }
    EXPECT_EQ(best17, 7u);
}

TEST(Constructions, distance_refuses_large_codes) {
    const auto &big = registry_lookup("35_19");
    StabilizerCode code = build_code(big.n, big.construction, big.genpolys);
    EXPECT_THROW(min_distance(code, 28), ResourceLimitError);
}
