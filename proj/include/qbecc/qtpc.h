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

#ifndef QBECC_QTPC_H
#define QBECC_QTPC_H

#include <cstdint>
#include <utility>
#include <vector>

#include "qbecc/classical_code.h"
#include "qbecc/stabilizer.h"

namespace qbecc {

/// Check matrix of the tensor product of C1 = [n1, k1] over GF(4) (or GF(2))
/// and C2 = [n2, k2] over GF(4^rho1), rho1 = n1 - k1.
///
/// Block (i, j) is M(H2[i][j]) * H1, where M(h) is the matrix of x -> h x on
/// C1 syndromes read as coordinates of GF(4^rho1) in the basis 1, a, ...,
/// a^(rho1-1). Coordinate j * n1 + c is row c of column j of the n1 x n2 code
/// array. Over GF(2) each GF(4) entry of M is further expanded in the basis
/// 1, w, so a binary C1 needs even rho1.
FieldMatrix tensor_check_matrix(const LinearCode &c1, const LinearCode &c2);

struct QtpcSpec {
    size_t n1 = 0;
    size_t k1 = 0;
    size_t n2 = 0;
    size_t k2 = 0;
    size_t rho1 = 0;
    size_t rho2 = 0;
    FieldMatrix expanded_check;
    /// [[n1 n2, n1 n2 - 2 rho1 rho2]].
    size_t big_n = 0;
    size_t big_k = 0;
};

struct QtpcResult {
    StabilizerCode code;
    QtpcSpec spec;
    size_t rank = 0;
    bool self_orthogonal = false;
};

/// Hermitian route for GF(4) C1 with C1^{perp_h} in C1; CSS route (the
/// tensor code twice) for binary C1 with C1^perp in C1.
QtpcResult qtpc_construct(const LinearCode &c1, const LinearCode &c2);

/// Block interleaver for an n1 x n2 code array split into s = n1 / l1 row
/// groups; each group is sent column by column, l1 qubits per column.
class InterleaverMap {
   public:
    InterleaverMap(size_t n1, size_t n2, size_t l1);

    size_t n1() const {
        return n1_;
    }
    size_t n2() const {
        return n2_;
    }
    size_t l1() const {
        return l1_;
    }
    size_t groups() const {
        return n1_ / l1_;
    }
    size_t size() const {
        return n1_ * n2_;
    }

    /// Stream position of array cell (row, col).
    size_t interleave(size_t row, size_t col) const;
    /// Array cell (row, col) sent at stream position t.
    std::pair<size_t, size_t> deinterleave(size_t t) const;

   private:
    size_t n1_;
    size_t n2_;
    size_t l1_;
};

struct DispersalReport {
    size_t burst_len = 0;
    bool aligned_only = false;
    size_t max_affected_subblocks = 0;
    size_t max_inner_burst = 0;
    /// First stream offset whose window touches max_affected_subblocks columns.
    size_t worst_start = 0;
    /// Every window's touched columns form a cyclic run in Z_{n2}.
    bool cyclically_consecutive = true;
    uint64_t windows = 0;
};

/// Deinterleaves every stream window of length L (offsets that are multiples
/// of l1 only, if aligned_only) and measures how many columns it touches and
/// the longest row span inside one column.
DispersalReport dispersal_report(const InterleaverMap &map, size_t burst_len, bool aligned_only = false);

/// The code with qubit at array coordinate col * n1 + row moved to its stream
/// position, so stream bursts are ordinary bursts of the returned code.
StabilizerCode interleaved_code(const StabilizerCode &code, const InterleaverMap &map);

}  // namespace qbecc

#endif
