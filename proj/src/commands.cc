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

#include "qbecc/commands.h"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbecc/burst_analyzer.h"
#include "qbecc/classical_code.h"
#include "qbecc/code_search.h"
#include "qbecc/errors.h"
#include "qbecc/memory_channel.h"
#include "qbecc/qtpc.h"
#include "qbecc/registry.h"

namespace qbecc {

using nlohmann::ordered_json;

namespace {

void report_error(std::ostream &err, const char *kind, const std::string &message) {
    ordered_json j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    err << j.dump() << "\n";
}

template <typename Fn>
int guarded(std::ostream &err, Fn &&fn) {
    try {
        return fn();
    } catch (const ParseError &e) {
        report_error(err, "parse_error", e.what());
        return kExitUsage;
    } catch (const PreconditionError &e) {
        report_error(err, "precondition_error", e.what());
        return kExitUsage;
    } catch (const ResourceLimitError &e) {
        report_error(err, "resource_limit", e.what());
        return kExitResource;
    } catch (const std::exception &e) {
        report_error(err, "internal_error", e.what());
        return kExitInternal;
    }
}

std::pair<size_t, size_t> parse_pair(const std::string &text, const char *what) {
    size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw ParseError(std::string(what) + " must look like A,B; got '" + text + "'");
    }
    auto num = [&](const std::string &s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError(std::string(what) + " must look like A,B with nonnegative integers; got '" + text + "'");
        }
        return static_cast<size_t>(std::stoull(s));
    };
    return {num(text.substr(0, comma)), num(text.substr(comma + 1))};
}

}  // namespace

int cmd_analyze(const AnalyzeArgs &args, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        Construction c = parse_construction(args.construction);
        std::vector<std::string> polys{args.poly};
        if (c == Construction::kCss) {
            if (!args.poly2) {
                throw PreconditionError("the CSS construction needs --poly2");
            }
            polys.push_back(*args.poly2);
        } else if (args.poly2) {
            throw PreconditionError("--poly2 only applies to the CSS construction");
        }
        StabilizerCode code = build_code(args.n, c, polys);
        AnalyzerOptions options;
        options.max_l = args.max_l;
        options.workers = args.workers;
        BurstAnalysis a = quantum_burst_capability(code, options);
        ordered_json j;
        j["n"] = code.n();
        j["k"] = code.k();
        j["l"] = a.l;
        j["qrb"] = qrb(code.n(), code.k());
        j["saturates"] = check_qrb(code.n(), code.k(), a).saturating;
        j["degenerate"] = a.degenerate;
        if (code.n() + code.k() <= args.distance_log2_limit) {
            j["distance"] = min_distance(code, args.distance_log2_limit).distance;
        }
        out << j.dump() << "\n";
        return kExitOk;
    });
}

int cmd_search(const SearchArgs &args, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (args.reproduce_table1) {
            AnalyzerOptions options;
            options.workers = args.workers;
            auto rows = reproduce_table1(builtin_registry(), options);
            out << "id,n,k,l,qrb,degenerate,expected_k,expected_l,expected_qrb,expected_degenerate,match,seconds\n";
            size_t matches = 0;
            for (const auto &row : rows) {
                const auto &e = row.expected;
                out << e.id << ',' << e.n << ',';
                if (row.actual) {
                    const auto &a = *row.actual;
                    out << a.k << ',' << a.l << ',' << a.qrb << ',' << (a.degenerate ? "true" : "false");
                } else {
                    out << ",,,";
                }
                out << ',' << e.k << ',' << e.l << ',' << e.qrb << ',' << (e.degenerate ? "true" : "false") << ','
                    << (row.match ? "true" : "false") << ',' << format_double(row.seconds) << "\n";
                if (!row.error.empty()) {
                    std::string msg = e.id + ": " + row.error;
                    if (!row.nearest_valid.empty()) {
                        msg += "; nearest valid generators:";
                        for (const auto &g : row.nearest_valid) {
                            msg += " [" + g + "]";
                        }
                    }
                    report_error(err, "row_error", msg);
                }
                matches += row.match;
            }
            err << matches << "/" << rows.size() << " rows match\n";
            return matches == rows.size() ? kExitOk : kExitMismatch;
        }
        if (!args.min_n || !args.max_n) {
            throw PreconditionError("search needs --min-n and --max-n (or --reproduce-table1)");
        }
        SearchPlan plan;
        plan.min_n = *args.min_n;
        plan.max_n = *args.max_n;
        plan.odd_only = args.odd_only;
        plan.workers = args.workers;
        plan.max_bursts_per_candidate = args.max_bursts;
        if (args.constructions == "hermitian") {
            plan.css = false;
        } else if (args.constructions == "css") {
            plan.hermitian = false;
        } else if (args.constructions != "all") {
            throw ParseError("--constructions must be all, hermitian or css");
        }
        SearchResult result = search(plan);
        out << search_csv(result.records);
        if (result.incomplete) {
            err << "search incomplete: " << result.skipped << " of " << result.candidates
                << " candidates exceeded the burst budget\n";
        }
        return kExitOk;
    });
}

int cmd_tensor(const TensorArgs &args, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        auto [n2, l2] = parse_pair(args.rs, "--rs");
        CyclicCode c1 = cyclic_from_poly(parse_genpoly(args.c1_poly, args.c1_n).to_poly(GaloisField::quaternary()),
                                         args.c1_n);
        size_t rho1 = c1.code.n - c1.code.k;
        if (rho1 < 1 || rho1 > static_cast<size_t>(GaloisField::kMaxDegree)) {
            throw PreconditionError("rho1 = " + std::to_string(rho1) + " needs GF(4^rho1) with 1 <= rho1 <= " +
                                    std::to_string(GaloisField::kMaxDegree));
        }
        LinearCode c2 = rs_mds(n2, l2, GaloisField::extension(static_cast<int>(rho1)));
        QtpcResult q = qtpc_construct(c1.code, c2);
        ordered_json j;
        j["n1"] = q.spec.n1;
        j["k1"] = q.spec.k1;
        j["n2"] = q.spec.n2;
        j["k2"] = q.spec.k2;
        j["rho1"] = q.spec.rho1;
        j["rho2"] = q.spec.rho2;
        j["params"] = {q.code.n(), q.code.k()};
        j["rank"] = q.rank;
        j["self_orthogonal"] = q.self_orthogonal;
        if (args.dispersal || args.interleaved_max_l) {
            size_t l1 = args.l1 ? *args.l1 : classical_burst_capability(c1.code, true).l;
            InterleaverMap map(q.spec.n1, q.spec.n2, l1);
            j["l1"] = l1;
            if (args.dispersal) {
                DispersalReport rep = dispersal_report(map, *args.dispersal, !args.unaligned);
                j["dispersal"] = {{"L", rep.burst_len},
                                  {"aligned", rep.aligned_only},
                                  {"max_subblocks", rep.max_affected_subblocks},
                                  {"max_inner_burst", rep.max_inner_burst},
                                  {"worst_start", rep.worst_start},
                                  {"cyclically_consecutive", rep.cyclically_consecutive}};
            }
            if (args.interleaved_max_l) {
                AnalyzerOptions options;
                options.max_l = args.interleaved_max_l;
                options.workers = args.workers;
                BurstAnalysis a = quantum_burst_capability(interleaved_code(q.code, map), options);
                j["interleaved_burst"] = {{"max_l", *args.interleaved_max_l}, {"l", a.l}};
            }
        }
        out << j.dump() << "\n";
        return kExitOk;
    });
}

int cmd_simulate(const SimulateArgs &args, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const RegistryEntry &entry = registry_lookup(args.code);
        std::vector<double> ps = parse_grid(args.p);
        std::vector<double> mus = parse_grid(args.mu);
        StabilizerCode code = build_code(entry.n, entry.construction, entry.genpolys);
        DecoderSpec spec;
        spec.mode = parse_decoder_mode(args.decoder);
        if (args.t) {
            spec.t = *args.t;
        } else {
            size_t d = min_distance(code).distance;
            spec.t = d > 0 ? (d - 1) / 2 : 0;
        }
        spec.l = args.l.value_or(entry.l);
        EfOptions options;
        if (args.strategy == "auto") {
            options.strategy = code.n() <= options.max_exact_n ? EfStrategy::kExact : EfStrategy::kTruncated;
        } else if (args.strategy == "exact") {
            options.strategy = EfStrategy::kExact;
        } else if (args.strategy == "truncated") {
            options.strategy = EfStrategy::kTruncated;
        } else {
            throw ParseError("--strategy must be auto, exact or truncated");
        }
        options.w_max = args.w_max;
        options.burst_span = args.burst_span;
        options.expand_above = args.expand_above;
        options.workers = args.workers;
        DecoderTable table = build_decoder(code, spec);
        out << sweep_csv_header() << "\n";
        for (double p : ps) {
            for (double mu : mus) {
                SweepRow row;
                row.code = entry.id;
                row.decoder = spec.mode;
                row.strategy = options.strategy;
                row.p = p;
                row.mu = mu;
                row.ef = entanglement_fidelity(table, ChannelModel(p, mu), options);
                out << sweep_csv_row(row) << "\n";
            }
        }
        return kExitOk;
    });
}

int cmd_bounds(const BoundsArgs &args, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (args.k >= args.n) {
            throw PreconditionError("bounds need n > k");
        }
        ordered_json j;
        j["qrb"] = qrb(args.n, args.k);
        j["qrb_ok"] = args.l <= qrb(args.n, args.k);
        j["no_cloning_ok"] = args.k == 0 || no_cloning_check(args.n, args.l);
        out << j.dump() << "\n";
        return kExitOk;
    });
}

int run_cli(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum burst-error-correcting code toolkit", "qbecc"};
    app.require_subcommand(1);
    app.fallthrough();
    size_t workers = 1;
    app.add_option("--workers", workers, "Worker threads (0 = all cores)");

    AnalyzeArgs analyze;
    auto *a = app.add_subcommand("analyze", "Burst capability of a cyclic-code stabilizer code");
    a->add_option("--n", analyze.n, "Code length")->required();
    a->add_option("--poly", analyze.poly, "Generator polynomial, e.g. \"1^6 2^3 1^0\"")->required();
    a->add_option("--poly2", analyze.poly2, "Second generator (CSS)");
    a->add_option("--construction", analyze.construction, "hermitian or css");
    a->add_option("--max-l", analyze.max_l, "Cap on the analyzed burst length");

    SearchArgs search_args;
    bool all_lengths = false;
    auto *s = app.add_subcommand("search", "Search cyclic constructions or re-check the catalogue");
    s->add_option("--min-n", search_args.min_n);
    s->add_option("--max-n", search_args.max_n);
    s->add_flag("--odd-only", search_args.odd_only, "Only odd lengths; even lengths in the range are skipped (default)");
    s->add_flag("--all-lengths", all_lengths, "Include even lengths (rejected: x^n - 1 has repeated roots)");
    s->add_flag("--reproduce-table1", search_args.reproduce_table1, "Re-analyze every catalogued code");
    s->add_option("--constructions", search_args.constructions, "all, hermitian or css");
    s->add_option("--max-bursts", search_args.max_bursts, "Per-candidate burst budget");

    TensorArgs tensor;
    auto *t = app.add_subcommand("tensor", "Quantum tensor product code with a Reed-Solomon outer code");
    t->add_option("--c1-poly", tensor.c1_poly, "Generator of the GF(4) cyclic code C1")->required();
    t->add_option("--c1-n", tensor.c1_n, "Length of C1")->required();
    t->add_option("--rs", tensor.rs, "n2,l2 of the Reed-Solomon code C2")->required();
    t->add_option("--l1", tensor.l1, "Interleaver depth (default: end-around burst capability of C1)");
    t->add_option("--dispersal", tensor.dispersal, "Stream burst length to disperse");
    t->add_flag("--unaligned", tensor.unaligned, "Check every stream offset, not just multiples of l1");
    t->add_option("--interleaved-max-l", tensor.interleaved_max_l, "Analyze the interleaved code up to this length");

    SimulateArgs sim;
    auto *m = app.add_subcommand("simulate", "Entanglement fidelity over the Markov memory channel");
    m->add_option("--code", sim.code, "Catalogue id, e.g. 13_1")->required();
    m->add_option("--decoder", sim.decoder, "combined, random or burst");
    m->add_option("--p", sim.p, "Value or range of p")->required();
    m->add_option("--mu", sim.mu, "Value or range of mu")->required();
    m->add_option("--strategy", sim.strategy, "auto, exact or truncated");
    m->add_option("--t", sim.t, "Random-error weight (default floor((d-1)/2))");
    m->add_option("--l", sim.l, "Burst span (default: catalogued l)");
    m->add_option("--w-max", sim.w_max, "Truncation weight");
    m->add_option("--burst-span", sim.burst_span, "Truncation burst span (default: decoder l)");
    m->add_option("--expand-above", sim.expand_above, "Keep expanding cut subtrees with at least this mass");

    BoundsArgs bounds;
    auto *b = app.add_subcommand("bounds", "Quantum Reiger and no-cloning bounds");
    b->add_option("n", bounds.n)->required();
    b->add_option("k", bounds.k)->required();
    b->add_option("l", bounds.l)->required();

    std::vector<const char *> cargv;
    for (const auto &arg : argv) {
        cargv.push_back(arg.c_str());
    }
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        report_error(err, "usage_error", e.what());
        return kExitUsage;
    }

    if (*a) {
        analyze.workers = workers;
        return cmd_analyze(analyze, out, err);
    }
    if (*s) {
        search_args.workers = workers;
        if (all_lengths) {
            search_args.odd_only = false;
        }
        return cmd_search(search_args, out, err);
    }
    if (*t) {
        tensor.workers = workers;
        return cmd_tensor(tensor, out, err);
    }
    if (*m) {
        sim.workers = workers;
        return cmd_simulate(sim, out, err);
    }
    return cmd_bounds(bounds, out, err);
}

}  // namespace qbecc
