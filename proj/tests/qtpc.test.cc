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

#include "qbecc/qtpc.h"

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "qbecc/code_search.h"
#include "qbecc/errors.h"

using namespace qbecc;
using Elem = GaloisField::Elem;

namespace {

LinearCode example_c1() {
    return cyclic_from_poly(parse_genpoly("1^6 2^3 1^0", 15).to_poly(GaloisField::quaternary()), 15).code;
}

LinearCode example_c2() {
    return rs_mds(6, 2, GaloisField::extension(6));
}

// A word of the tensor product code is an n1 x n2 array whose column
// syndromes, read as elements of the extension field, satisfy H2.
std::vector<Elem> column_syndrome_check(const LinearCode &c1, const LinearCode &c2, const std::vector<Elem> &word) {
    const auto &f = *c1.field;
    const auto &ext = *c2.field;
    size_t rho1 = c1.n - c1.k;
    std::vector<Elem> col_syn(c2.n);
    for (size_t j = 0; j < c2.n; j++) {
        std::vector<F4> coords(rho1, F4::zero());
        for (size_t a = 0; a < rho1; a++) {
            Elem acc = 0;
            for (size_t c = 0; c < c1.n; c++) {
                acc = f.add(acc, f.mul(c1.check_matrix.at(a, c), word[j * c1.n + c]));
            }
            coords[a] = F4(static_cast<uint8_t>(acc));
        }
        col_syn[j] = ext.from_coordinates(coords);
    }
    std::vector<Elem> out;
    for (size_t i = 0; i < c2.check_matrix.rows(); i++) {
        Elem acc = 0;
        for (size_t j = 0; j < c2.n; j++) {
            acc = ext.add(acc, ext.mul(c2.check_matrix.at(i, j), col_syn[j]));
        }
        for (F4 x : ext.coordinates(acc)) {
            out.push_back(x.v);
        }
    }
    return out;
}

}  // namespace

TEST(TensorCheck, all_ones_outer_check_repeats_inner) {
    LinearCode c1 = example_c1();
    auto ext = GaloisField::extension(6);
    FieldMatrix h2(ext, 1, 4);
    for (size_t j = 0; j < 4; j++) {
        h2.at(0, j) = 1;
    }
    LinearCode c2 = LinearCode::from_check(h2);
    FieldMatrix h = tensor_check_matrix(c1, c2);
    ASSERT_EQ(h.rows(), 6u);
    ASSERT_EQ(h.cols(), 60u);
    for (size_t r = 0; r < 6; r++) {
        for (size_t c = 0; c < 60; c++) {
            EXPECT_EQ(h.at(r, c), c1.check_matrix.at(r, c % 15));
        }
    }
}

TEST(TensorCheck, matches_column_syndrome_definition) {
    LinearCode c1 = example_c1();
    LinearCode c2 = example_c2();
    FieldMatrix h = tensor_check_matrix(c1, c2);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; trial++) {
        std::vector<Elem> word(90);
        for (auto &x : word) {
            x = static_cast<Elem>(rng() & 3);
        }
        std::vector<Elem> direct(h.rows(), 0);
        for (size_t r = 0; r < h.rows(); r++) {
            for (size_t c = 0; c < h.cols(); c++) {
                direct[r] ^= f4_mul(F4(static_cast<uint8_t>(h.at(r, c))), F4(static_cast<uint8_t>(word[c]))).v;
            }
        }
        ASSERT_EQ(direct, column_syndrome_check(c1, c2, word));
    }
}

TEST(Qtpc, example_instance) {
    QtpcResult q = qtpc_construct(example_c1(), example_c2());
    EXPECT_EQ(q.spec.expanded_check.rows(), 24u);
    EXPECT_EQ(q.spec.expanded_check.cols(), 90u);
    EXPECT_EQ(q.rank, 24u);
    EXPECT_TRUE(q.self_orthogonal);
    EXPECT_EQ(q.spec.big_n, 90u);
    EXPECT_EQ(q.spec.big_k, 42u);
    EXPECT_EQ(q.code.n(), 90u);
    EXPECT_EQ(q.code.k(), 42u);
    EXPECT_EQ(q.spec.rho1, 6u);
    EXPECT_EQ(q.spec.rho2, 4u);
}

TEST(Qtpc, binary_branch) {
    auto f2 = GaloisField::binary();
    // [7,4] Hamming code contains its dual; rho1 = 3 is odd.
    LinearCode hamming = cyclic_from_poly(parse_genpoly("1^3 1^1 1^0", 7).to_poly(f2), 7).code;
    EXPECT_THROW(qtpc_construct(hamming, rs_mds(3, 1, GaloisField::extension(1))), PreconditionError);
    // [15,11] Hamming code, rho1 = 4 = 2 * 2: C2 over GF(16).
    LinearCode h15 = cyclic_from_poly(parse_genpoly("1^4 1^1 1^0", 15).to_poly(f2), 15).code;
    ASSERT_TRUE(binary_dual_containing(h15, h15));
    QtpcResult q = qtpc_construct(h15, rs_mds(3, 1, GaloisField::extension(2)));
    EXPECT_EQ(q.rank, 8u);
    EXPECT_TRUE(q.self_orthogonal);
    EXPECT_EQ(q.code.n(), 45u);
    EXPECT_EQ(q.code.k(), 45u - 16u);
}

TEST(Qtpc, rejects_wrong_field) {
    EXPECT_THROW(qtpc_construct(example_c1(), rs_mds(6, 2, GaloisField::extension(3))), PreconditionError);
}

TEST(Interleaver, examples) {
    InterleaverMap m(15, 6, 3);
    EXPECT_EQ(m.groups(), 5u);
    EXPECT_EQ(m.interleave(0, 0), 0u);
    EXPECT_EQ(m.interleave(1, 0), 1u);
    EXPECT_EQ(m.interleave(2, 0), 2u);
    EXPECT_EQ(m.interleave(0, 1), 3u);
    EXPECT_EQ(m.interleave(2, 5), 17u);
    EXPECT_EQ(m.interleave(3, 0), 18u);
    EXPECT_EQ(m.interleave(14, 5), 89u);
    EXPECT_EQ(m.deinterleave(20), (std::pair<size_t, size_t>{5, 0}));
    EXPECT_THROW(InterleaverMap(15, 6, 4), PreconditionError);
    EXPECT_THROW(m.interleave(15, 0), PreconditionError);
    EXPECT_THROW(m.deinterleave(90), PreconditionError);
}

TEST(Interleaver, exhaustive_bijection) {
    for (size_t n1 = 1; n1 <= 16; n1++) {
        for (size_t n2 = 1; n2 <= 7; n2++) {
            for (size_t l1 = 1; l1 <= n1; l1++) {
                if (n1 % l1) {
                    continue;
                }
                InterleaverMap m(n1, n2, l1);
                std::set<size_t> seen;
                for (size_t r = 0; r < n1; r++) {
                    for (size_t c = 0; c < n2; c++) {
                        size_t t = m.interleave(r, c);
                        ASSERT_LT(t, n1 * n2);
                        ASSERT_TRUE(seen.insert(t).second);
                        ASSERT_EQ(m.deinterleave(t), (std::pair<size_t, size_t>{r, c}));
                    }
                }
            }
        }
    }
}

TEST(Dispersal, aligned_example) {
    InterleaverMap m(15, 6, 3);
    DispersalReport rep = dispersal_report(m, 6, true);
    EXPECT_LE(rep.max_affected_subblocks, 2u);
    EXPECT_LE(rep.max_inner_burst, 3u);
    EXPECT_TRUE(rep.cyclically_consecutive);
    EXPECT_EQ(rep.windows, 29u);
    DispersalReport one = dispersal_report(m, 1, false);
    EXPECT_EQ(one.max_affected_subblocks, 1u);
    EXPECT_EQ(one.max_inner_burst, 1u);
    EXPECT_EQ(one.windows, 90u);
}

TEST(Dispersal, unaligned_is_measured) {
    InterleaverMap m(15, 6, 3);
    // L = l1 (l2 - 1) + 1 with l2 = 2.
    DispersalReport rep = dispersal_report(m, 4, false);
    EXPECT_EQ(rep.windows, 87u);
    EXPECT_EQ(rep.max_affected_subblocks, 2u);
    EXPECT_LE(rep.max_inner_burst, 3u);
    EXPECT_THROW(dispersal_report(m, 0, false), PreconditionError);
}

TEST(Interleaver, interleaved_code_is_a_permutation) {
    QtpcResult q = qtpc_construct(example_c1(), example_c2());
    InterleaverMap m(15, 6, 3);
    StabilizerCode inter = interleaved_code(q.code, m);
    EXPECT_EQ(inter.k(), q.code.k());
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; trial++) {
        SymplecticVector e(90);
        SymplecticVector moved(90);
        for (size_t i = 0; i < 90; i++) {
            F4 s(rng() % 5 == 0 ? static_cast<uint8_t>(rng() & 3) : 0);
            e.set_symbol(i, s);
            moved.set_symbol(m.interleave(i % 15, i / 15), s);
        }
        if (trial % 2 == 0) {
            // Bias toward normalizer elements.
            e = q.code.basis()[trial % q.code.r()];
            moved = SymplecticVector(90);
            for (size_t i = 0; i < 90; i++) {
                moved.set_symbol(m.interleave(i % 15, i / 15), e.symbol(i));
            }
        }
        EXPECT_EQ(q.code.in_normalizer(e), inter.in_normalizer(moved));
        EXPECT_EQ(q.code.in_stabilizer(e), inter.in_stabilizer(moved));
    }
}
