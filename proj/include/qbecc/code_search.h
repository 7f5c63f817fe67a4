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

#ifndef QBECC_CODE_SEARCH_H
#define QBECC_CODE_SEARCH_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbecc/burst_analyzer.h"
#include "qbecc/polynomial.h"
#include "qbecc/registry.h"
#include "qbecc/stabilizer.h"

namespace qbecc {

/// A generator polynomial written in the C^E grammar for a code of length n.
struct GenPolySpec {
    std::vector<PolyTerm> terms;  // strictly decreasing exponents
    size_t n = 0;

    std::string to_string() const {
        return format_poly_terms(terms);
    }
    Poly to_poly(const FieldPtr &field) const {
        return poly_from_terms(field, terms);
    }
};

/// ParseError on malformed tokens, duplicate exponents or an exponent >= n.
GenPolySpec parse_genpoly(std::string_view text, size_t n);

/// Stabilizer code of length n from generator polynomial text. Hermitian takes
/// one GF(4) generator; CSS takes two binary generators (X checks from the
/// first code, Z checks from the second).
StabilizerCode build_code(size_t n, Construction construction, const std::vector<std::string> &genpolys);

/// Every monic divisor of x^n - 1 over GF(2) or GF(4), as products of subsets
/// of the irreducible factors, sorted by (degree, coefficients).
std::vector<Poly> enumerate_cyclic_generators(size_t n, const FieldPtr &field);

struct SearchPlan {
    size_t min_n = 0;
    size_t max_n = 0;
    /// Even lengths in the range are skipped; otherwise they are an error.
    bool odd_only = true;
    bool hermitian = true;
    bool css = true;
    /// Candidates whose analysis would exceed this many bursts are skipped
    /// and the result is flagged incomplete.
    uint64_t max_bursts_per_candidate = uint64_t{1} << 22;
    size_t workers = 1;
};

struct SearchRecord {
    size_t n = 0;
    size_t k = 0;
    size_t l = 0;
    size_t qrb = 0;
    bool saturates = false;
    bool degenerate = false;
    Construction construction = Construction::kHermitian;
    std::vector<std::string> genpolys;
};

struct SearchResult {
    std::vector<SearchRecord> records;
    uint64_t candidates = 0;
    uint64_t skipped = 0;
    bool incomplete = false;
};

/// Analyzes every dual-containing cyclic candidate with 1 <= k < n in the plan.
/// Records are sorted by (n, -k, -l, construction, genpolys).
SearchResult search(const SearchPlan &plan);

std::string search_csv_header();
std::string search_csv_row(const SearchRecord &r);
std::string search_csv(const std::vector<SearchRecord> &records);

SearchRecord analyze_record(size_t n, Construction construction, const std::vector<std::string> &genpolys,
                            const AnalyzerOptions &options = {});

/// Monic divisors of x^n - 1 of the same degree as `genpoly` that differ from
/// it in the fewest coefficients (Hermitian: dual-containing ones only).
std::vector<std::string> nearest_valid_generators(size_t n, Construction construction, const std::string &genpoly);

struct Table1Row {
    RegistryEntry expected;
    std::optional<SearchRecord> actual;
    bool match = false;
    std::string error;
    /// Filled when a generator is not a divisor of x^n - 1.
    std::vector<std::string> nearest_valid;
    double seconds = 0;
};

/// Rebuilds and re-analyzes every registry entry, comparing (n, k, l,
/// degenerate, qrb).
std::vector<Table1Row> reproduce_table1(const std::vector<RegistryEntry> &registry, const AnalyzerOptions &options = {},
                                        const std::function<void(const Table1Row &)> &progress = {});

}  // namespace qbecc

#endif
