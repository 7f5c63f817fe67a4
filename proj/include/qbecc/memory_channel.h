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

#ifndef QBECC_MEMORY_CHANNEL_H
#define QBECC_MEMORY_CHANNEL_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qbecc/stabilizer.h"

namespace qbecc {

/// Depolarizing memory channel with Markov correlations along the qubit order.
///
/// The first qubit sees I, X, Z, Y with probabilities 1 - p, p/3, p/3, p/3;
/// each later qubit repeats the previous symbol with extra weight mu:
/// P(l | k) = (1 - mu) p_l + mu [l == k].
struct ChannelModel {
    double p = 0;
    double mu = 0;

    ChannelModel() = default;
    ChannelModel(double p, double mu);

    double marginal(int symbol) const {
        return symbol == 0 ? 1 - p : p / 3;
    }
};

/// P(l | k) for symbol codes l, k in 0..3 (0 = I, 1 = X, 2 = Z, 3 = Y).
double cond_prob(int l, int k, const ChannelModel &ch);
/// Probability of the Pauli pattern; phases are irrelevant.
double error_prob(const SymplecticVector &e, const ChannelModel &ch);
double error_prob(const PauliError &e, const ChannelModel &ch);

enum class DecoderMode { kRandom, kBurst, kCombined };

std::string decoder_mode_name(DecoderMode mode);
DecoderMode parse_decoder_mode(std::string_view name);

struct DecoderSpec {
    DecoderMode mode = DecoderMode::kCombined;
    size_t t = 0;  // random-error weight
    size_t l = 0;  // burst span
};

/// Syndrome table decoder.
///
/// Syndromes are claimed in priority order and never overwritten. The weight
/// pass files errors of weight 0, 1, ..., t (positions ascending, then symbols
/// X, Z, Y); the burst pass files bursts of span 2, ..., l (start ascending,
/// then symbol patterns in lexicographic order with nonzero end symbols).
/// Random mode runs the weight pass only, combined mode runs both, and burst
/// mode runs the weight pass up to weight 1 followed by the burst pass.
class DecoderTable {
   public:
    const StabilizerCode &code() const {
        return code_;
    }
    const DecoderSpec &spec() const {
        return spec_;
    }
    /// Number of syndromes with a recovery.
    size_t size() const {
        return recoveries_.size();
    }
    const std::vector<SymplecticVector> &recoveries() const {
        return recoveries_;
    }

    /// Recovery filed under the syndrome, if any.
    std::optional<SymplecticVector> recovery(const BitVec &syndrome) const;
    /// Index into recoveries() for a packed syndrome, or -1.
    int64_t slot(uint64_t syndrome) const;
    /// Packed logical class of recoveries()[slot].
    uint64_t recovery_class(size_t slot) const {
        return classes_[slot];
    }

    friend DecoderTable build_decoder(const StabilizerCode &code, const DecoderSpec &spec, uint64_t max_syndromes);

   private:
    StabilizerCode code_;
    DecoderSpec spec_;
    std::vector<SymplecticVector> recoveries_;
    std::vector<uint64_t> classes_;
    std::vector<int32_t> dense_;
    std::unordered_map<uint64_t, uint32_t> sparse_;
    bool use_dense_ = true;
};

/// Needs r <= 64 and 2k <= 64. ResourceLimitError when 2^r exceeds
/// max_syndromes.
DecoderTable build_decoder(const StabilizerCode &code, const DecoderSpec &spec,
                           uint64_t max_syndromes = uint64_t{1} << 32);

/// Packed syndrome and logical class of e (bit j = product with row j).
uint64_t packed_syndrome(const StabilizerCode &code, const SymplecticVector &e);
uint64_t packed_class(const StabilizerCode &code, const SymplecticVector &e);

/// Decoding succeeds iff e and its recovery differ by a stabilizer element.
bool decode_succeeds(const DecoderTable &table, const SymplecticVector &e);

enum class EfStrategy { kExact, kTruncated };
std::string ef_strategy_name(EfStrategy s);

struct EfOptions {
    EfStrategy strategy = EfStrategy::kExact;
    /// Exact enumeration refuses codes longer than this.
    size_t max_exact_n = 13;
    /// Truncated: every error of weight <= w_max or burst span <= burst_span
    /// is enumerated; other subtrees are cut and their mass goes to the
    /// residual unless it is at least expand_above.
    size_t w_max = 4;
    std::optional<size_t> burst_span;
    double expand_above = 1e-12;
    uint64_t max_leaves = uint64_t{1} << 32;
    size_t workers = 1;
};

struct EfResult {
    double ef_lower = 0;
    double residual = 0;
    bool exact = false;
    uint64_t errors_enumerated = 0;
};

/// Probability that decoding succeeds, from exhaustive or truncated
/// enumeration of error patterns. Partial sums are accumulated in extended
/// precision per prefix partition and merged in a fixed order, so results do
/// not depend on the worker count.
EfResult entanglement_fidelity(const DecoderTable &table, const ChannelModel &ch, const EfOptions &options = {});

struct SweepRow {
    std::string code;
    DecoderMode decoder = DecoderMode::kCombined;
    EfStrategy strategy = EfStrategy::kExact;
    double p = 0;
    double mu = 0;
    EfResult ef;
};

/// One row per (p, mu), p outer, in grid order.
std::vector<SweepRow> sweep(const std::string &code_id, const DecoderTable &table, const std::vector<double> &ps,
                            const std::vector<double> &mus, const EfOptions &options = {});

/// Values of `start:step:end`, `start:log:end[:per_decade]` or a single number;
/// comma-separated pieces are concatenated.
std::vector<double> parse_grid(std::string_view text);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow &row);
/// %.12g.
std::string format_double(double v);

}  // namespace qbecc

#endif
