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

#ifndef QBECC_COMMANDS_H
#define QBECC_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qbecc {

/// Process exit codes of the qbecc tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitUsage = 2,
    kExitResource = 3,
    kExitInternal = 4,
};

struct AnalyzeArgs {
    size_t n = 0;
    std::string poly;
    std::optional<std::string> poly2;
    std::string construction = "hermitian";
    std::optional<size_t> max_l;
    /// Distance is reported when 2^(n + k) stays within this.
    size_t distance_log2_limit = 28;
    size_t workers = 1;
};

struct SearchArgs {
    std::optional<size_t> min_n;
    std::optional<size_t> max_n;
    bool odd_only = true;
    bool reproduce_table1 = false;
    /// "all", "hermitian" or "css".
    std::string constructions = "all";
    uint64_t max_bursts = uint64_t{1} << 22;
    size_t workers = 1;
};

struct TensorArgs {
    std::string c1_poly;
    size_t c1_n = 0;
    /// "n2,l2".
    std::string rs;
    std::optional<size_t> l1;
    std::optional<size_t> dispersal;
    bool unaligned = false;
    /// Analyze the interleaved code's burst capability up to this length.
    std::optional<size_t> interleaved_max_l;
    size_t workers = 1;
};

struct SimulateArgs {
    std::string code;
    std::string decoder = "combined";
    std::string p;
    std::string mu;
    /// "auto", "exact" or "truncated".
    std::string strategy = "auto";
    std::optional<size_t> t;
    std::optional<size_t> l;
    size_t w_max = 4;
    std::optional<size_t> burst_span;
    double expand_above = 1e-12;
    size_t workers = 1;
};

struct BoundsArgs {
    size_t n = 0;
    size_t k = 0;
    size_t l = 0;
};

int cmd_analyze(const AnalyzeArgs &args, std::ostream &out, std::ostream &err);
int cmd_search(const SearchArgs &args, std::ostream &out, std::ostream &err);
int cmd_tensor(const TensorArgs &args, std::ostream &out, std::ostream &err);
int cmd_simulate(const SimulateArgs &args, std::ostream &out, std::ostream &err);
int cmd_bounds(const BoundsArgs &args, std::ostream &out, std::ostream &err);

/// Parses argv and dispatches to a command. Errors produce a one-line JSON
/// object {"error": {"kind": ..., "message": ...}} on err.
int run_cli(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err);

}  // namespace qbecc

#endif
