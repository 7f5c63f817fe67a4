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

#ifndef QBECC_BURST_ANALYZER_H
#define QBECC_BURST_ANALYZER_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qbecc/stabilizer.h"

namespace qbecc {

/// Every Pauli vector of length n with burst length <= l, each exactly once.
///
/// The zero vector comes first. Nonzero vectors are grouped by the position of
/// their first non-identity symbol (ascending); within a start position the
/// window of min(l, n - start) symbols runs through its patterns in
/// lexicographic order of the symbol codes.
class BurstIterator {
   public:
    BurstIterator(size_t n, size_t l);

    size_t n() const {
        return n_;
    }
    size_t l() const {
        return l_;
    }
    /// Writes the next vector into out; false once exhausted.
    bool next(SymplecticVector &out);

   private:
    size_t n_;
    size_t l_;
    bool started_ = false;
    size_t start_ = 0;
    std::vector<uint8_t> digits_;
};

BurstIterator enumerate_bursts(size_t n, size_t l);

/// Number of nonzero vectors of length n with burst length in [1, l].
uint64_t burst_count(size_t n, size_t l);

enum class AnalysisMethod { kSyndromeHash, kOracle };

struct AnalyzerOptions {
    /// Caps the enumeration ceiling below the quantum Reiger bound.
    std::optional<size_t> max_l;
    size_t workers = 1;
    /// Refuse (ResourceLimitError) when one enumeration would exceed this.
    uint64_t max_bursts = uint64_t{1} << 28;
    /// Sorted entries held in memory at once; more bursts means more passes.
    uint64_t entries_per_pass = uint64_t{1} << 24;
};

struct BurstAnalysis {
    size_t l = 0;
    bool degenerate = false;
    /// Two bursts of length <= l + 1 with equal syndromes whose sum is a
    /// nontrivial logical operator. Present whenever l < ceiling.
    std::optional<std::pair<SymplecticVector, SymplecticVector>> witness;
    uint64_t checked_pairs = 0;
    uint64_t bursts_enumerated = 0;
    /// min(qrb, max_l): the largest length the analysis could certify.
    size_t ceiling = 0;
    AnalysisMethod method = AnalysisMethod::kSyndromeHash;
};

/// Largest l such that no two distinct errors of burst length <= l differ by
/// an element of C^{perp_s} \ C, and whether two such errors differ by a
/// nonzero element of C.
///
/// Each burst is keyed by its syndrome; bursts sharing a key are compared by
/// their products with the logical operators. Bursts are non-cyclic.
BurstAnalysis quantum_burst_capability(const StabilizerCode &code, const AnalyzerOptions &options = {});

/// floor((n - k) / 4).
size_t qrb(size_t n, size_t k);

struct QrbCheck {
    bool ok = false;
    bool saturating = false;
};
QrbCheck check_qrb(size_t n, size_t k, const BurstAnalysis &analysis);

/// n > 4l.
bool no_cloning_check(size_t n, size_t l);

/// True iff no nonzero error supported in [start, start + span) lies in
/// C^{perp_s} \ C, i.e. every error confined to the window is correctable once
/// its location is known.
bool located_burst_check(const StabilizerCode &code, size_t start, size_t span);
/// A nonzero error inside the window that is a nontrivial logical operator.
std::optional<SymplecticVector> located_burst_witness(const StabilizerCode &code, size_t start, size_t span);

}  // namespace qbecc

#endif
