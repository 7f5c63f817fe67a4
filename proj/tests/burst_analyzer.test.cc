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

#include "qbecc/burst_analyzer.h"

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "oracles.h"
#include "qbecc/code_search.h"
#include "qbecc/errors.h"
#include "qbecc/registry.h"

using namespace qbecc;
using qbecc_test::Mask;

namespace {

StabilizerCode from_masks(size_t n, const std::vector<Mask> &rows) {
    std::vector<SymplecticVector> vs;
    for (const auto &m : rows) {
        vs.push_back(qbecc_test::from_mask(m, n));
    }
    return additive_code(n, vs);
}

StabilizerCode catalogue_code(const char *id) {
    const auto &e = registry_lookup(id);
    return build_code(e.n, e.construction, e.genpolys);
}

void expect_valid_witness(const StabilizerCode &code, const BurstAnalysis &a) {
    ASSERT_TRUE(a.witness.has_value());
    const auto &[e1, e2] = *a.witness;
    EXPECT_NE(e1, e2);
    EXPECT_LE(burst_length(e1), a.l + 1);
    EXPECT_LE(burst_length(e2), a.l + 1);
    EXPECT_EQ(code.syndrome(e1), code.syndrome(e2));
    auto d = qbecc_test::to_mask(e1 ^ e2);
    EXPECT_FALSE(qbecc_test::span_of(qbecc_test::generator_masks(code)).contains(d));
}

}  // namespace

TEST(BurstIterator, counts_and_uniqueness) {
    EXPECT_EQ(burst_count(3, 1), 9u);
    EXPECT_EQ(burst_count(3, 2), 27u);
    EXPECT_EQ(burst_count(3, 3), 63u);
    EXPECT_EQ(burst_count(5, 0), 0u);
    for (size_t n = 1; n <= 6; n++) {
        for (size_t l = 0; l <= n; l++) {
            std::set<std::pair<std::string, std::string>> seen;
            auto it = enumerate_bursts(n, l);
            SymplecticVector v;
            bool first = true;
            while (it.next(v)) {
                if (first) {
                    EXPECT_TRUE(v.is_zero());
                    first = false;
                }
                EXPECT_LE(burst_length(v), l);
                EXPECT_TRUE(seen.insert({v.a.to_string(), v.b.to_string()}).second);
            }
            EXPECT_EQ(seen.size(), burst_count(n, l) + 1);
        }
    }
    EXPECT_THROW(enumerate_bursts(3, 4), PreconditionError);
}

TEST(BurstAnalyzer, five_qubit_code) {
    std::vector<SymplecticVector> rows;
    for (const char *s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) {
        rows.push_back(SymplecticVector::from_string(s));
    }
    StabilizerCode code = additive_code(5, rows);
    BurstAnalysis a = quantum_burst_capability(code);
    EXPECT_EQ(a.l, 1u);
    EXPECT_EQ(a.ceiling, 1u);
    EXPECT_FALSE(a.degenerate);
    EXPECT_FALSE(located_burst_check(code, 0, 4));
    auto w = located_burst_witness(code, 0, 4);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(code.in_normalizer(*w));
    EXPECT_FALSE(code.in_stabilizer(*w));
    EXPECT_LE(w->support().last_set(), 3u);
    EXPECT_TRUE(located_burst_check(code, 0, 2));
}

TEST(BurstAnalyzer, agrees_with_brute_force_small) {
    std::mt19937_64 rng(20240611);
    int degenerate_seen = 0;
    int nonzero_l_seen = 0;
    for (int trial = 0; trial < 240; trial++) {
        size_t n = 2 + rng() % 7;
        size_t k = 1 + rng() % (n - 1);
        auto rows = qbecc_test::random_stabilizer_rows(n, k, rng, trial % 2 == 0);
        StabilizerCode code = from_masks(n, rows);
        auto want = qbecc_test::brute_force_burst(n, rows);
        BurstAnalysis got = quantum_burst_capability(code);
        ASSERT_EQ(got.l, want.l) << "trial " << trial;
        ASSERT_EQ(got.degenerate, want.degenerate) << "trial " << trial;
        if (got.l < got.ceiling) {
            expect_valid_witness(code, got);
        }
        degenerate_seen += got.degenerate;
        nonzero_l_seen += got.l > 0;
    }
    EXPECT_GT(degenerate_seen, 0);
    EXPECT_GT(nonzero_l_seen, 0);
}

TEST(BurstAnalyzer, agrees_with_brute_force_medium) {
    std::mt19937_64 rng(77);
    std::set<size_t> ls;
    for (int trial = 0; trial < 60; trial++) {
        size_t n = 9 + rng() % 6;
        size_t k = 1 + rng() % 2;
        auto rows = qbecc_test::random_stabilizer_rows(n, k, rng, trial % 3 == 0);
        StabilizerCode code = from_masks(n, rows);
        auto want = qbecc_test::brute_force_burst(n, rows);
        BurstAnalysis got = quantum_burst_capability(code);
        ASSERT_EQ(got.l, want.l) << "trial " << trial;
        ASSERT_EQ(got.degenerate, want.degenerate) << "trial " << trial;
        ls.insert(got.l);
    }
    EXPECT_GE(ls.size(), 2u);
}

TEST(BurstAnalyzer, catalogue_codes_against_brute_force) {
    for (const char *id : {"13_1", "15_3", "17_1", "17_1d"}) {
        StabilizerCode code = catalogue_code(id);
        auto want = qbecc_test::brute_force_burst(code.n(), qbecc_test::generator_masks(code));
        BurstAnalysis got = quantum_burst_capability(code);
        EXPECT_EQ(got.l, want.l) << id;
        EXPECT_EQ(got.degenerate, want.degenerate) << id;
        EXPECT_EQ(got.l, registry_lookup(id).l) << id;
        EXPECT_EQ(got.degenerate, registry_lookup(id).degenerate) << id;
    }
}

TEST(BurstAnalyzer, independent_of_workers_and_passes) {
    StabilizerCode code = catalogue_code("17_1d");
    BurstAnalysis base = quantum_burst_capability(code);
    AnalyzerOptions opts;
    opts.workers = 3;
    opts.entries_per_pass = 1000;
    BurstAnalysis other = quantum_burst_capability(code, opts);
    EXPECT_EQ(other.l, base.l);
    EXPECT_EQ(other.degenerate, base.degenerate);
    EXPECT_EQ(other.witness, base.witness);
}

TEST(BurstAnalyzer, max_l_caps_and_witness) {
    StabilizerCode code = catalogue_code("21_9");
    BurstAnalysis a = quantum_burst_capability(code);
    EXPECT_EQ(a.l, 2u);
    EXPECT_EQ(a.ceiling, 3u);
    expect_valid_witness(code, a);
    AnalyzerOptions opts;
    opts.max_l = 1;
    BurstAnalysis capped = quantum_burst_capability(code, opts);
    EXPECT_EQ(capped.l, 1u);
    EXPECT_EQ(capped.ceiling, 1u);
}

TEST(BurstAnalyzer, resource_limit) {
    AnalyzerOptions opts;
    opts.max_bursts = 1000;
    EXPECT_THROW(quantum_burst_capability(catalogue_code("17_1"), opts), ResourceLimitError);
}

TEST(BurstAnalyzer, located_check_matches_brute_force) {
    StabilizerCode code = catalogue_code("13_1");
    auto gens = qbecc_test::generator_masks(code);
    auto stab = qbecc_test::span_of(gens);
    for (size_t span = 1; span <= 7; span++) {
        for (size_t start = 0; start + span <= code.n(); start++) {
            bool bad = false;
            for (uint32_t x = 0; x < (1u << span) && !bad; x++) {
                for (uint32_t z = 0; z < (1u << span) && !bad; z++) {
                    Mask m{x << start, z << start};
                    if (m.zero()) {
                        continue;
                    }
                    bool commutes = true;
                    for (const auto &g : gens) {
                        commutes = commutes && !qbecc_test::anticommute(m, g);
                    }
                    bad = commutes && !stab.contains(m);
                }
            }
            EXPECT_EQ(located_burst_check(code, start, span), !bad) << start << "+" << span;
        }
    }
    for (size_t start = 0; start + 6 <= 13; start++) {
        EXPECT_TRUE(located_burst_check(code, start, 6));
    }
    EXPECT_THROW(located_burst_check(code, 10, 6), PreconditionError);
}

TEST(Bounds, examples) {
    EXPECT_EQ(qrb(13, 1), 3u);
    EXPECT_EQ(qrb(35, 25), 2u);
    EXPECT_EQ(qrb(41, 1), 10u);
    EXPECT_THROW(qrb(3, 4), PreconditionError);
    EXPECT_TRUE(no_cloning_check(13, 3));
    EXPECT_FALSE(no_cloning_check(12, 3));
    BurstAnalysis a;
    a.l = 3;
    EXPECT_TRUE(check_qrb(13, 1, a).ok);
    EXPECT_TRUE(check_qrb(13, 1, a).saturating);
    EXPECT_FALSE(check_qrb(15, 5, a).ok);
}

TEST(Bounds, hold_on_random_codes) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 2 + rng() % 11;
        size_t k = 1 + rng() % (n - 1);
        StabilizerCode code = from_masks(n, qbecc_test::random_stabilizer_rows(n, k, rng, false));
        BurstAnalysis a = quantum_burst_capability(code);
        EXPECT_LE(4 * a.l, n - k);
        EXPECT_TRUE(no_cloning_check(n, a.l));
    }
}
