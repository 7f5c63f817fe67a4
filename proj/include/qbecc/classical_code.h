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

#ifndef QBECC_CLASSICAL_CODE_H
#define QBECC_CLASSICAL_CODE_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qbecc/field_matrix.h"
#include "qbecc/polynomial.h"

namespace qbecc {

/// Linear [n, k] code with full-rank generator and parity-check matrices.
struct LinearCode {
    FieldPtr field;
    size_t n = 0;
    size_t k = 0;
    FieldMatrix gen_matrix;    // k x n
    FieldMatrix check_matrix;  // (n - k) x n

    static LinearCode from_generator(const FieldMatrix &generator);
    static LinearCode from_check(const FieldMatrix &check);
    static LinearCode full_space(const FieldPtr &field, size_t n);

    bool contains(const std::vector<GaloisField::Elem> &word) const;
};

struct CyclicCode {
    LinearCode code;
    Poly gen_poly;
};

/// Cyclic code of length n generated by g; throws PreconditionError unless
/// g divides x^n - 1.
CyclicCode cyclic_from_poly(const Poly &g, size_t n);

/// A classical error pattern confined to a burst.
struct ClassicalBurst {
    size_t start = 0;
    std::vector<GaloisField::Elem> symbols;  // symbols[j] sits at (start + j) mod n

    std::vector<GaloisField::Elem> dense(size_t n) const;
};

struct BurstCapability {
    size_t l = 0;
    bool end_around = false;
    /// Two distinct bursts of length <= l + 1 with equal syndromes.
    std::optional<std::pair<ClassicalBurst, ClassicalBurst>> witness;
    uint64_t patterns_checked = 0;
};

/// Burst length of a dense word: span of its support, cyclic if requested.
size_t classical_burst_length(const std::vector<GaloisField::Elem> &word, bool end_around);

/// Largest l such that all distinct patterns of burst length <= l have
/// distinct syndromes. Enumerates bursts up to one past the classical Reiger
/// bound floor((n-k)/2) so a witness for l+1 is always produced.
BurstCapability classical_burst_capability(const LinearCode &code, bool end_around,
                                           uint64_t max_patterns = uint64_t{1} << 26);

/// [n2, n2 - 2*l2, 2*l2 + 1] Reed-Solomon code over `field`, evaluated at the
/// powers of the primitive element, then 0, then infinity (n2 <= |F| + 1).
LinearCode rs_mds(size_t n2, size_t l2, const FieldPtr &field);

/// C^{perp_h} subset of C for a GF(4) code, i.e. H * conj(H)^T = 0.
bool hermitian_dual_containing(const LinearCode &code);
/// C2^perp subset of C1 for binary codes of equal length.
bool binary_dual_containing(const LinearCode &c2, const LinearCode &c1);

/// Minimum Hamming distance by enumerating all q^k codewords.
size_t min_distance_exhaustive(const LinearCode &code, uint64_t max_codewords = uint64_t{1} << 20);

}  // namespace qbecc

#endif
