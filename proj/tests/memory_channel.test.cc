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

#include "qbecc/memory_channel.h"

#include <cmath>
#include <random>
#include <set>

#include "gtest/gtest.h"

#include "oracles.h"
#include "qbecc/burst_analyzer.h"
#include "qbecc/code_search.h"
#include "qbecc/errors.h"
#include "qbecc/registry.h"

using namespace qbecc;
using qbecc_test::Mask;

namespace {

StabilizerCode catalogue_code(const char *id) {
    const auto &e = registry_lookup(id);
    return build_code(e.n, e.construction, e.genpolys);
}

std::vector<int> symbols_of(uint64_t code, size_t n) {
    std::vector<int> s(n);
    for (size_t i = 0; i < n; i++) {
        s[i] = static_cast<int>((code >> (2 * i)) & 3);
    }
    return s;
}

SymplecticVector vector_of(const std::vector<int> &s) {
    SymplecticVector v(s.size());
    for (size_t i = 0; i < s.size(); i++) {
        v.set_symbol(i, F4(static_cast<uint8_t>(s[i])));
    }
    return v;
}

StabilizerCode random_code(size_t n, size_t k, std::mt19937_64 &rng) {
    std::vector<SymplecticVector> rows;
    for (const auto &m : qbecc_test::random_stabilizer_rows(n, k, rng, false)) {
        rows.push_back(qbecc_test::from_mask(m, n));
    }
    return additive_code(n, rows);
}

}  // namespace

TEST(Channel, cond_prob_examples) {
    ChannelModel ch(0.3, 0.5);
    EXPECT_DOUBLE_EQ(cond_prob(0, 0, ch), 0.5 * 0.7 + 0.5);
    EXPECT_DOUBLE_EQ(cond_prob(1, 0, ch), 0.5 * 0.1);
    EXPECT_DOUBLE_EQ(cond_prob(2, 2, ch), 0.5 * 0.1 + 0.5);
    for (int k = 0; k < 4; k++) {
        double total = 0;
        for (int l = 0; l < 4; l++) {
            total += cond_prob(l, k, ch);
        }
        EXPECT_NEAR(total, 1.0, 1e-15);
    }
    ChannelModel frozen(0.3, 1.0);
    EXPECT_EQ(cond_prob(3, 3, frozen), 1.0);
    EXPECT_EQ(cond_prob(1, 3, frozen), 0.0);
    EXPECT_THROW(ChannelModel(-0.1, 0), PreconditionError);
    EXPECT_THROW(ChannelModel(0.1, 1.5), PreconditionError);
    EXPECT_THROW(cond_prob(4, 0, ch), PreconditionError);
}

TEST(Channel, normalization_small_n) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int trial = 0; trial < 24; trial++) {
        size_t n = 1 + trial % 8;
        ChannelModel ch(unit(rng), unit(rng));
        long double total = 0;
        for (uint64_t code = 0; code < (uint64_t{1} << (2 * n)); code++) {
            auto s = symbols_of(code, n);
            double p = error_prob(vector_of(s), ch);
            ASSERT_NEAR(p, qbecc_test::markov_prob(s, ch.p, ch.mu), 1e-15);
            total += p;
        }
        EXPECT_NEAR(static_cast<double>(total), 1.0, 1e-12) << "n=" << n << " p=" << ch.p << " mu=" << ch.mu;
    }
}

TEST(Channel, memoryless_product_form) {
    for (size_t n = 1; n <= 6; n++) {
        for (double p : {0.0, 0.01, 0.2, 0.75, 1.0}) {
            ChannelModel ch(p, 0);
            for (uint64_t code = 0; code < (uint64_t{1} << (2 * n)); code++) {
                auto s = symbols_of(code, n);
                double prod = 1;
                for (int x : s) {
                    prod *= x == 0 ? 1 - p : p / 3;
                }
                ASSERT_NEAR(error_prob(vector_of(s), ch), prod, 1e-15 * std::max(prod, 1e-300) + 1e-300);
            }
        }
    }
}

TEST(Decoder, random_mode_table_for_13_1) {
    StabilizerCode code = catalogue_code("13_1");
    DecoderTable table = build_decoder(code, {DecoderMode::kRandom, 2, 0});
    auto gens = qbecc_test::generator_masks(code);
    std::set<uint64_t> syndromes;
    for (size_t i = 0; i < 13; i++) {
        for (size_t j = i; j < 13; j++) {
            for (int a = 1; a < 4; a++) {
                for (int b = 1; b < 4; b++) {
                    Mask m{uint32_t(a & 1) << i, uint32_t(a >> 1) << i};
                    if (j > i) {
                        m = m ^ Mask{uint32_t(b & 1) << j, uint32_t(b >> 1) << j};
                    }
                    uint64_t s = 0;
                    for (size_t g = 0; g < gens.size(); g++) {
                        s |= uint64_t{qbecc_test::anticommute(m, gens[g])} << g;
                    }
                    syndromes.insert(s);
                    EXPECT_TRUE(decode_succeeds(table, qbecc_test::from_mask(m, 13)));
                }
            }
        }
    }
    syndromes.insert(0);
    EXPECT_EQ(table.size(), syndromes.size());
    EXPECT_EQ(table.size(), 1u + 39u + 702u);
}

TEST(Decoder, recoveries_are_sound) {
    StabilizerCode code = catalogue_code("13_1");
    for (DecoderMode mode : {DecoderMode::kRandom, DecoderMode::kBurst, DecoderMode::kCombined}) {
        DecoderTable table = build_decoder(code, {mode, 2, 3});
        std::set<uint64_t> seen;
        for (size_t i = 0; i < table.size(); i++) {
            const auto &rec = table.recoveries()[i];
            uint64_t s = packed_syndrome(code, rec);
            EXPECT_TRUE(seen.insert(s).second);
            EXPECT_EQ(table.slot(s), static_cast<int64_t>(i));
            EXPECT_EQ(table.recovery_class(i), packed_class(code, rec));
            EXPECT_EQ(table.recovery(code.syndrome(rec)), rec);
            if (mode == DecoderMode::kRandom) {
                EXPECT_LE(rec.weight(), 2u);
            } else if (mode == DecoderMode::kBurst) {
                EXPECT_LE(burst_length(rec), 3u);
            } else {
                EXPECT_TRUE(rec.weight() <= 2 || burst_length(rec) <= 3);
            }
        }
    }
}

TEST(Decoder, burst_mode_corrects_all_bursts_up_to_l) {
    for (const char *id : {"13_1", "15_3", "17_1"}) {
        StabilizerCode code = catalogue_code(id);
        size_t l = registry_lookup(id).l;
        DecoderTable table = build_decoder(code, {DecoderMode::kBurst, 0, l});
        auto it = enumerate_bursts(code.n(), l);
        SymplecticVector e;
        while (it.next(e)) {
            ASSERT_TRUE(decode_succeeds(table, e)) << id << " " << e.to_string();
        }
    }
}

TEST(Decoder, combined_extends_random) {
    StabilizerCode code = catalogue_code("13_1");
    DecoderTable random = build_decoder(code, {DecoderMode::kRandom, 2, 0});
    DecoderTable combined = build_decoder(code, {DecoderMode::kCombined, 2, 3});
    ASSERT_GE(combined.size(), random.size());
    for (size_t i = 0; i < random.size(); i++) {
        EXPECT_EQ(combined.recoveries()[i], random.recoveries()[i]);
    }
}

TEST(Decoder, limits) {
    StabilizerCode code = catalogue_code("17_1");
    EXPECT_THROW(build_decoder(code, {DecoderMode::kRandom, 1, 0}, 1000), ResourceLimitError);
    EXPECT_THROW(parse_decoder_mode("ml"), ParseError);
    EXPECT_EQ(parse_decoder_mode("burst"), DecoderMode::kBurst);
}

TEST(Fidelity, exact_matches_transfer_matrix_13_1) {
    StabilizerCode code = catalogue_code("13_1");
    for (DecoderMode mode : {DecoderMode::kRandom, DecoderMode::kCombined, DecoderMode::kBurst}) {
        DecoderTable table = build_decoder(code, {mode, 2, 3});
        for (auto [p, mu] : {std::pair{0.03, 0.5}, {0.01, 0.0}, {0.1, 0.9}, {0.2, 0.3}}) {
            EfResult r = entanglement_fidelity(table, ChannelModel(p, mu));
            EXPECT_TRUE(r.exact);
            EXPECT_LT(r.residual, 1e-12);
            EXPECT_NEAR(r.ef_lower, static_cast<double>(qbecc_test::dp_fidelity(table, p, mu)), 1e-12)
                << decoder_mode_name(mode) << " p=" << p << " mu=" << mu;
        }
    }
}

TEST(Fidelity, exact_matches_transfer_matrix_random_codes) {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 2 + rng() % 7;
        size_t k = 1 + rng() % (n - 1);
        StabilizerCode code = random_code(n, k, rng);
        DecoderTable table = build_decoder(code, {DecoderMode::kCombined, 1, 2});
        double p = 0.5 * unit(rng);
        double mu = unit(rng);
        EfResult r = entanglement_fidelity(table, ChannelModel(p, mu));
        EXPECT_NEAR(r.ef_lower, static_cast<double>(qbecc_test::dp_fidelity(table, p, mu)), 1e-12);
        EXPECT_EQ(r.errors_enumerated, uint64_t{1} << (2 * n));
    }
}

TEST(Fidelity, worker_count_does_not_change_results) {
    DecoderTable table = build_decoder(catalogue_code("13_1"), {DecoderMode::kCombined, 2, 3});
    EfOptions one;
    EfOptions many;
    many.workers = 4;
    ChannelModel ch(0.05, 0.4);
    EXPECT_EQ(entanglement_fidelity(table, ch, one).ef_lower, entanglement_fidelity(table, ch, many).ef_lower);
    one.strategy = many.strategy = EfStrategy::kTruncated;
    EfResult a = entanglement_fidelity(table, ch, one);
    EfResult b = entanglement_fidelity(table, ch, many);
    EXPECT_EQ(a.ef_lower, b.ef_lower);
    EXPECT_EQ(a.residual, b.residual);
}

TEST(Fidelity, truncated_bracket_contains_exact) {
    DecoderTable table = build_decoder(catalogue_code("13_1"), {DecoderMode::kCombined, 2, 3});
    for (double expand : {1e-12, 1e-6, 2.0}) {
        EfOptions opts;
        opts.strategy = EfStrategy::kTruncated;
        opts.expand_above = expand;
        for (auto [p, mu] : {std::pair{0.03, 0.5}, {0.001, 0.0}, {0.1, 0.95}, {0.03, 1.0}}) {
            ChannelModel ch(p, mu);
            double exact = entanglement_fidelity(table, ch).ef_lower;
            EfResult t = entanglement_fidelity(table, ch, opts);
            EXPECT_FALSE(t.exact);
            EXPECT_LE(t.ef_lower, exact + 1e-12);
            EXPECT_GE(t.ef_lower + t.residual, exact - 1e-12);
        }
    }
}

TEST(Fidelity, bracket_against_transfer_matrix_17_1) {
    DecoderTable table = build_decoder(catalogue_code("17_1"), {DecoderMode::kRandom, 3, 0});
    EfOptions opts;
    opts.strategy = EfStrategy::kTruncated;
    opts.expand_above = 1e-9;
    double p = 0.03, mu = 0.5;
    EfResult t = entanglement_fidelity(table, ChannelModel(p, mu), opts);
    double dp = static_cast<double>(qbecc_test::dp_fidelity(table, p, mu));
    EXPECT_LE(t.ef_lower, dp + 1e-12);
    EXPECT_GE(t.ef_lower + t.residual, dp - 1e-12);
}

TEST(Fidelity, combined_never_below_random) {
    StabilizerCode code = catalogue_code("13_1");
    DecoderTable random = build_decoder(code, {DecoderMode::kRandom, 2, 0});
    DecoderTable combined = build_decoder(code, {DecoderMode::kCombined, 2, 3});
    for (double p : {1e-2, 0.2}) {
        for (double mu : {0.0, 0.8}) {
            ChannelModel ch(p, mu);
            EXPECT_GE(entanglement_fidelity(combined, ch).ef_lower, entanglement_fidelity(random, ch).ef_lower);
        }
    }
}

TEST(Fidelity, exact_refuses_long_codes) {
    DecoderTable table = build_decoder(catalogue_code("17_1"), {DecoderMode::kRandom, 1, 0});
    EXPECT_THROW(entanglement_fidelity(table, ChannelModel(0.01, 0)), ResourceLimitError);
}

TEST(Grid, parse) {
    EXPECT_EQ(parse_grid("0.5"), (std::vector<double>{0.5}));
    EXPECT_EQ(parse_grid("0:0.25:1"), (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
    auto mus = parse_grid("0:0.05:1");
    ASSERT_EQ(mus.size(), 21u);
    EXPECT_EQ(mus[3], 0.15);
    EXPECT_EQ(mus.back(), 1.0);
    auto ps = parse_grid("1e-5:log:1e-1");
    ASSERT_EQ(ps.size(), 17u);
    EXPECT_EQ(ps.front(), 1e-5);
    EXPECT_EQ(ps.back(), 0.1);
    EXPECT_EQ(parse_grid("1e-3:log:1e-1:1"), (std::vector<double>{1e-3, 1e-2, 1e-1}));
    EXPECT_EQ(parse_grid("0.1,0.2:0.1:0.3"), (std::vector<double>{0.1, 0.2, 0.3}));
    for (const char *bad : {"", "x", "1:0:2", "2:1:1", "0:log:1", "1:log:0.1", "1:2", "1:log:10:0", "1,,2"}) {
        EXPECT_THROW(parse_grid(bad), ParseError) << bad;
    }
}

TEST(Sweep, rows_and_csv) {
    DecoderTable table = build_decoder(catalogue_code("13_1"), {DecoderMode::kCombined, 2, 3});
    auto rows = sweep("13_1", table, {0.01, 0.02}, {0.0, 0.5, 1.0});
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[1].p, 0.01);
    EXPECT_EQ(rows[1].mu, 0.5);
    EXPECT_EQ(rows[3].p, 0.02);
    std::string line = sweep_csv_row(rows[0]);
    EXPECT_EQ(line.rfind("13_1,combined,exact,0.01,0,", 0), 0u);
    EXPECT_EQ(sweep_csv_header(), "code,decoder,strategy,p,mu,ef_lower,ef_residual,exact");
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(1.0 / 3), "0.333333333333");
}
