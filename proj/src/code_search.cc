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

#include "qbecc/code_search.h"

#include <algorithm>
#include <chrono>
#include <limits>
#include <mutex>
#include <sstream>

#include "qbecc/classical_code.h"
#include "qbecc/errors.h"
#include "qbecc/parallel.h"

namespace qbecc {

GenPolySpec parse_genpoly(std::string_view text, size_t n) {
    GenPolySpec spec;
    spec.n = n;
    spec.terms = parse_poly_terms(text);
    for (const auto &t : spec.terms) {
        if (t.exponent >= n) {
            throw ParseError("exponent " + std::to_string(t.exponent) + " in '" + std::string(text) +
                             "' is not below the code length " + std::to_string(n));
        }
    }
    return spec;
}

namespace {

CyclicCode cyclic_from_text(const std::string &text, size_t n, const FieldPtr &field) {
    GenPolySpec spec = parse_genpoly(text, n);
    if (field->is_binary()) {
        for (const auto &t : spec.terms) {
            if (t.coeff != 1) {
                throw ParseError("binary generator '" + text + "' has a coefficient other than 1");
            }
        }
    }
    return cyclic_from_poly(spec.to_poly(field), n);
}

bool record_less(const SearchRecord &a, const SearchRecord &b) {
    if (a.n != b.n) {
        return a.n < b.n;
    }
    if (a.k != b.k) {
        return a.k > b.k;
    }
    if (a.l != b.l) {
        return a.l > b.l;
    }
    if (a.construction != b.construction) {
        return a.construction < b.construction;
    }
    return a.genpolys < b.genpolys;
}

}  // namespace

StabilizerCode build_code(size_t n, Construction construction, const std::vector<std::string> &genpolys) {
    if (n == 0) {
        throw PreconditionError("code length must be positive");
    }
    if (construction == Construction::kHermitian) {
        if (genpolys.size() != 1) {
            throw PreconditionError("the Hermitian construction takes exactly one generator polynomial");
        }
        CyclicCode c = cyclic_from_text(genpolys[0], n, GaloisField::quaternary());
        return hermitian_construct(c.code);
    }
    if (genpolys.size() != 2) {
        throw PreconditionError("the CSS construction takes exactly two generator polynomials");
    }
    CyclicCode c1 = cyclic_from_text(genpolys[0], n, GaloisField::binary());
    CyclicCode c2 = cyclic_from_text(genpolys[1], n, GaloisField::binary());
    return css_construct(c1.code, c2.code);
}

std::vector<Poly> enumerate_cyclic_generators(size_t n, const FieldPtr &field) {
    if (n == 0) {
        throw PreconditionError("code length must be positive");
    }
    if (n % 2 == 0) {
        throw PreconditionError("x^" + std::to_string(n) + " - 1 is not squarefree in characteristic 2; use odd n");
    }
    if (n > 63) {
        throw PreconditionError("cyclic generator enumeration supports n <= 63");
    }
    std::vector<Poly> factors = factor_squarefree(Poly::x_pow_minus_one(field, n));
    if (factors.size() > 20) {
        throw ResourceLimitError("x^" + std::to_string(n) + " - 1 has " + std::to_string(factors.size()) +
                                 " irreducible factors; too many divisors to enumerate");
    }
    std::vector<Poly> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << factors.size()); mask++) {
        Poly g(field, {1});
        for (size_t i = 0; i < factors.size(); i++) {
            if ((mask >> i) & 1) {
                g = g * factors[i];
            }
        }
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const Poly &a, const Poly &b) {
        if (a.degree() != b.degree()) {
            return a.degree() < b.degree();
        }
        return a.coeffs() < b.coeffs();
    });
    return out;
}

SearchRecord analyze_record(size_t n, Construction construction, const std::vector<std::string> &genpolys,
                            const AnalyzerOptions &options) {
    StabilizerCode code = build_code(n, construction, genpolys);
    BurstAnalysis a = quantum_burst_capability(code, options);
    SearchRecord r;
    r.n = n;
    r.k = code.k();
    r.l = a.l;
    r.qrb = qrb(n, code.k());
    r.saturates = check_qrb(n, code.k(), a).saturating;
    r.degenerate = a.degenerate;
    r.construction = construction;
    for (const auto &g : genpolys) {
        r.genpolys.push_back(parse_genpoly(g, n).to_string());
    }
    return r;
}

SearchResult search(const SearchPlan &plan) {
    struct Candidate {
        size_t n;
        Construction construction;
        std::vector<std::string> genpolys;
    };
    std::vector<Candidate> candidates;
    size_t first = std::max<size_t>(plan.min_n, 1);
    if (plan.max_n < first) {
        throw PreconditionError("empty length range");
    }
    if (plan.odd_only && first == plan.max_n && first % 2 == 0) {
        throw PreconditionError("even length " + std::to_string(first) +
                                " requested; the search covers odd lengths only");
    }
    for (size_t n = first; n <= plan.max_n; n++) {
        if (n % 2 == 0) {
            if (plan.odd_only) {
                continue;
            }
            throw PreconditionError("x^" + std::to_string(n) +
                                    " - 1 has repeated roots in characteristic 2; even lengths are not supported");
        }
        if (plan.hermitian) {
            auto f4 = GaloisField::quaternary();
            for (const Poly &g : enumerate_cyclic_generators(n, f4)) {
                size_t deg = static_cast<size_t>(g.degree());
                if (deg == 0 || 2 * deg >= n) {
                    continue;
                }
                if (hermitian_dual_containing(cyclic_from_poly(g, n).code)) {
                    candidates.push_back({n, Construction::kHermitian, {g.to_string()}});
                }
            }
        }
        if (plan.css) {
            auto f2 = GaloisField::binary();
            std::vector<Poly> gens = enumerate_cyclic_generators(n, f2);
            std::vector<LinearCode> codes;
            for (const Poly &g : gens) {
                codes.push_back(cyclic_from_poly(g, n).code);
            }
            for (size_t i = 0; i < gens.size(); i++) {
                for (size_t j = 0; j < gens.size(); j++) {
                    if (codes[i].k + codes[j].k <= n || codes[i].k + codes[j].k == 2 * n) {
                        continue;
                    }
                    if (binary_dual_containing(codes[j], codes[i])) {
                        candidates.push_back({n, Construction::kCss, {gens[i].to_string(), gens[j].to_string()}});
                    }
                }
            }
        }
    }

    SearchResult result;
    result.candidates = candidates.size();
    std::vector<std::optional<SearchRecord>> slots(candidates.size());
    AnalyzerOptions options;
    options.max_bursts = plan.max_bursts_per_candidate;
    parallel_for(candidates.size(), plan.workers, [&](size_t i, size_t) {
        try {
            slots[i] = analyze_record(candidates[i].n, candidates[i].construction, candidates[i].genpolys, options);
        } catch (const ResourceLimitError &) {
        }
    });
    for (auto &s : slots) {
        if (s) {
            result.records.push_back(std::move(*s));
        } else {
            result.skipped++;
        }
    }
    result.incomplete = result.skipped > 0;
    std::sort(result.records.begin(), result.records.end(), record_less);
    return result;
}

std::string search_csv_header() {
    return "n,k,l,qrb,saturates,degenerate,construction,genpoly1,genpoly2";
}

std::string search_csv_row(const SearchRecord &r) {
    std::ostringstream out;
    out << r.n << ',' << r.k << ',' << r.l << ',' << r.qrb << ',' << (r.saturates ? "true" : "false") << ','
        << (r.degenerate ? "true" : "false") << ',' << construction_name(r.construction) << ','
        << (r.genpolys.size() > 0 ? r.genpolys[0] : "") << ',' << (r.genpolys.size() > 1 ? r.genpolys[1] : "");
    return out.str();
}

std::string search_csv(const std::vector<SearchRecord> &records) {
    std::string out = search_csv_header() + "\n";
    for (const auto &r : records) {
        out += search_csv_row(r) + "\n";
    }
    return out;
}

std::vector<std::string> nearest_valid_generators(size_t n, Construction construction, const std::string &genpoly) {
    FieldPtr field = construction == Construction::kCss ? GaloisField::binary() : GaloisField::quaternary();
    Poly target = parse_genpoly(genpoly, n).to_poly(field);
    size_t best = std::numeric_limits<size_t>::max();
    std::vector<std::string> out;
    for (const Poly &g : enumerate_cyclic_generators(n, field)) {
        if (g.degree() != target.degree()) {
            continue;
        }
        if (construction == Construction::kHermitian && !hermitian_dual_containing(cyclic_from_poly(g, n).code)) {
            continue;
        }
        size_t diff = 0;
        for (size_t i = 0; i <= static_cast<size_t>(g.degree()); i++) {
            diff += g.coeff(i) != target.coeff(i);
        }
        if (diff < best) {
            best = diff;
            out.clear();
        }
        if (diff == best) {
            out.push_back(g.to_string());
        }
    }
    return out;
}

std::vector<Table1Row> reproduce_table1(const std::vector<RegistryEntry> &registry, const AnalyzerOptions &options,
                                        const std::function<void(const Table1Row &)> &progress) {
    std::vector<Table1Row> rows;
    for (const auto &e : registry) {
        Table1Row row;
        row.expected = e;
        auto t0 = std::chrono::steady_clock::now();
        try {
            row.actual = analyze_record(e.n, e.construction, e.genpolys, options);
            const SearchRecord &a = *row.actual;
            row.match = a.n == e.n && a.k == e.k && a.l == e.l && a.degenerate == e.degenerate && a.qrb == e.qrb;
        } catch (const std::exception &ex) {
            row.error = ex.what();
            auto f = e.construction == Construction::kCss ? GaloisField::binary() : GaloisField::quaternary();
            for (const auto &g : e.genpolys) {
                try {
                    if (poly_mod(Poly::x_pow_minus_one(f, e.n), parse_genpoly(g, e.n).to_poly(f)).is_zero()) {
                        continue;
                    }
                    for (auto &s : nearest_valid_generators(e.n, e.construction, g)) {
                        row.nearest_valid.push_back(std::move(s));
                    }
                } catch (const std::exception &) {
                }
            }
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (progress) {
            progress(row);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace qbecc
