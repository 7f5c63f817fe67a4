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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qbecc/burst_analyzer.h"
#include "qbecc/classical_code.h"
#include "qbecc/code_search.h"
#include "qbecc/commands.h"
#include "qbecc/errors.h"
#include "qbecc/memory_channel.h"
#include "qbecc/qtpc.h"
#include "qbecc/registry.h"
#include "qbecc/stabilizer.h"

namespace py = pybind11;
using namespace qbecc;

namespace {

std::vector<int> bits_of(const BitVec &v) {
    std::vector<int> out(v.size());
    for (size_t i = 0; i < v.size(); i++) {
        out[i] = v.get(i);
    }
    return out;
}

std::vector<std::string> pauli_strings(const std::vector<SymplecticVector> &rows) {
    std::vector<std::string> out;
    for (const auto &r : rows) {
        out.push_back(r.to_string());
    }
    return out;
}

SymplecticVector pauli_for(const StabilizerCode &code, const std::string &s) {
    SymplecticVector v = SymplecticVector::from_string(s);
    if (v.n() != code.n()) {
        throw PreconditionError("Pauli string has length " + std::to_string(v.n()) + ", code has n = " +
                                std::to_string(code.n()));
    }
    return v;
}

py::dict record_dict(const SearchRecord &r) {
    py::dict d;
    d["n"] = r.n;
    d["k"] = r.k;
    d["l"] = r.l;
    d["qrb"] = r.qrb;
    d["saturates"] = r.saturates;
    d["degenerate"] = r.degenerate;
    d["construction"] = construction_name(r.construction);
    d["genpolys"] = r.genpolys;
    return d;
}

py::dict entry_dict(const RegistryEntry &e) {
    py::dict d;
    d["id"] = e.id;
    d["n"] = e.n;
    d["k"] = e.k;
    d["l"] = e.l;
    d["qrb"] = e.qrb;
    d["degenerate"] = e.degenerate;
    d["construction"] = construction_name(e.construction);
    d["genpolys"] = e.genpolys;
    return d;
}

EfStrategy parse_strategy(const std::string &s) {
    if (s == "exact") {
        return EfStrategy::kExact;
    }
    if (s == "truncated") {
        return EfStrategy::kTruncated;
    }
    throw PreconditionError("unknown strategy '" + s + "' (expected exact or truncated)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum burst-error-correcting stabilizer codes.";

    auto base = py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CommutationError>(m, "CommutationError", base.ptr());
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

    py::class_<StabilizerCode>(m, "StabilizerCode")
        .def_property_readonly("n", &StabilizerCode::n)
        .def_property_readonly("k", &StabilizerCode::k)
        .def_property_readonly("r", &StabilizerCode::r)
        .def_property_readonly("generators", [](const StabilizerCode &c) { return pauli_strings(c.basis()); })
        .def_property_readonly("logicals", [](const StabilizerCode &c) { return pauli_strings(c.logicals()); })
        .def("syndrome", [](const StabilizerCode &c, const std::string &e) { return bits_of(c.syndrome(pauli_for(c, e))); })
        .def("in_stabilizer", [](const StabilizerCode &c, const std::string &e) { return c.in_stabilizer(pauli_for(c, e)); })
        .def("in_normalizer", [](const StabilizerCode &c, const std::string &e) { return c.in_normalizer(pauli_for(c, e)); })
        .def("__repr__", [](const StabilizerCode &c) {
            return "qbecc.StabilizerCode([[" + std::to_string(c.n()) + ", " + std::to_string(c.k()) + "]])";
        });

    m.def(
        "additive_code",
        [](size_t n, const std::vector<std::string> &rows) {
            std::vector<SymplecticVector> vs;
            for (const auto &r : rows) {
                vs.push_back(SymplecticVector::from_string(r));
            }
            return additive_code(n, vs);
        },
        py::arg("n"), py::arg("generators"));
    m.def(
        "build_code",
        [](size_t n, const std::string &construction, const std::vector<std::string> &genpolys) {
            return build_code(n, parse_construction(construction), genpolys);
        },
        py::arg("n"), py::arg("construction"), py::arg("genpolys"),
        "Cyclic stabilizer code from generator polynomials such as '1^4 2^3 1^0'.");

    m.def(
        "analyze",
        [](const StabilizerCode &code, std::optional<size_t> max_l, size_t workers, uint64_t max_bursts) {
            AnalyzerOptions options;
            options.max_l = max_l;
            options.workers = workers;
            options.max_bursts = max_bursts;
            BurstAnalysis a;
            {
                py::gil_scoped_release release;
                a = quantum_burst_capability(code, options);
            }
            py::dict d;
            d["l"] = a.l;
            d["degenerate"] = a.degenerate;
            d["ceiling"] = a.ceiling;
            d["bursts_enumerated"] = a.bursts_enumerated;
            if (a.witness) {
                d["witness"] = py::make_tuple(a.witness->first.to_string(), a.witness->second.to_string());
            } else {
                d["witness"] = py::none();
            }
            return d;
        },
        py::arg("code"), py::arg("max_l") = py::none(), py::arg("workers") = 1,
        py::arg("max_bursts") = uint64_t{1} << 28);
    m.def(
        "min_distance",
        [](const StabilizerCode &code, size_t max_log2) { return min_distance(code, max_log2).distance; },
        py::arg("code"), py::arg("max_log2") = 28);
    m.def("qrb", &qrb, py::arg("n"), py::arg("k"));
    m.def("no_cloning_check", &no_cloning_check, py::arg("n"), py::arg("l"));
    m.def("located_burst_check", &located_burst_check, py::arg("code"), py::arg("start"), py::arg("span"));

    m.def(
        "search",
        [](size_t min_n, size_t max_n, bool odd_only, const std::string &constructions, uint64_t max_bursts,
           size_t workers) {
            SearchPlan plan;
            plan.min_n = min_n;
            plan.max_n = max_n;
            plan.odd_only = odd_only;
            plan.hermitian = constructions == "all" || constructions == "hermitian";
            plan.css = constructions == "all" || constructions == "css";
            if (!plan.hermitian && !plan.css) {
                throw PreconditionError("unknown constructions '" + constructions + "'");
            }
            plan.max_bursts_per_candidate = max_bursts;
            plan.workers = workers;
            SearchResult res;
            {
                py::gil_scoped_release release;
                res = search(plan);
            }
            py::list records;
            for (const auto &r : res.records) {
                records.append(record_dict(r));
            }
            py::dict d;
            d["records"] = records;
            d["candidates"] = res.candidates;
            d["skipped"] = res.skipped;
            d["incomplete"] = res.incomplete;
            d["csv"] = search_csv(res.records);
            return d;
        },
        py::arg("min_n"), py::arg("max_n"), py::arg("odd_only") = true, py::arg("constructions") = "all",
        py::arg("max_bursts") = uint64_t{1} << 22, py::arg("workers") = 1);

    m.def(
        "qtpc",
        [](const std::string &c1_poly, size_t c1_n, size_t n2, size_t l2) {
            CyclicCode c1 = cyclic_from_poly(parse_genpoly(c1_poly, c1_n).to_poly(GaloisField::quaternary()), c1_n);
            size_t rho1 = c1.code.n - c1.code.k;
            if (rho1 < 1 || rho1 > static_cast<size_t>(GaloisField::kMaxDegree)) {
                throw PreconditionError("rho1 = " + std::to_string(rho1) + " is outside the supported fields");
            }
            QtpcResult q = qtpc_construct(c1.code, rs_mds(n2, l2, GaloisField::extension(static_cast<int>(rho1))));
            py::dict d;
            d["code"] = q.code;
            d["n1"] = q.spec.n1;
            d["k1"] = q.spec.k1;
            d["n2"] = q.spec.n2;
            d["k2"] = q.spec.k2;
            d["rank"] = q.rank;
            d["self_orthogonal"] = q.self_orthogonal;
            d["l1"] = classical_burst_capability(c1.code, true).l;
            return d;
        },
        py::arg("c1_poly"), py::arg("c1_n"), py::arg("n2"), py::arg("l2"),
        "Tensor product code from a GF(4) cyclic C1 and a Reed-Solomon C2 over GF(4^rho1).");

    py::class_<InterleaverMap>(m, "Interleaver")
        .def(py::init<size_t, size_t, size_t>(), py::arg("n1"), py::arg("n2"), py::arg("l1"))
        .def_property_readonly("size", &InterleaverMap::size)
        .def("interleave", &InterleaverMap::interleave, py::arg("row"), py::arg("col"))
        .def("deinterleave", &InterleaverMap::deinterleave, py::arg("t"))
        .def(
            "dispersal",
            [](const InterleaverMap &map, size_t burst_len, bool aligned_only) {
                DispersalReport r = dispersal_report(map, burst_len, aligned_only);
                py::dict d;
                d["max_subblocks"] = r.max_affected_subblocks;
                d["max_inner_burst"] = r.max_inner_burst;
                d["worst_start"] = r.worst_start;
                d["cyclically_consecutive"] = r.cyclically_consecutive;
                d["windows"] = r.windows;
                return d;
            },
            py::arg("burst_len"), py::arg("aligned_only") = true);
    m.def("interleaved_code", &interleaved_code, py::arg("code"), py::arg("interleaver"));

    py::class_<DecoderTable>(m, "DecoderTable")
        .def_property_readonly("size", &DecoderTable::size)
        .def_property_readonly("code", &DecoderTable::code)
        .def(
            "recover",
            [](const DecoderTable &t, const std::string &e) -> std::optional<std::string> {
                auto rec = t.recovery(t.code().syndrome(pauli_for(t.code(), e)));
                if (!rec) {
                    return std::nullopt;
                }
                return rec->to_string();
            },
            py::arg("error"), "Recovery the table files under the error's syndrome, or None.")
        .def(
            "corrects",
            [](const DecoderTable &t, const std::string &e) { return decode_succeeds(t, pauli_for(t.code(), e)); },
            py::arg("error"));
    m.def(
        "build_decoder",
        [](const StabilizerCode &code, const std::string &mode, size_t t, size_t l) {
            DecoderSpec spec;
            spec.mode = parse_decoder_mode(mode);
            spec.t = t;
            spec.l = l;
            return build_decoder(code, spec);
        },
        py::arg("code"), py::arg("mode") = "combined", py::arg("t") = 0, py::arg("l") = 0);
    m.def("error_prob",
          [](const std::string &e, double p, double mu) {
              return error_prob(SymplecticVector::from_string(e), ChannelModel(p, mu));
          },
          py::arg("error"), py::arg("p"), py::arg("mu"));
    m.def(
        "entanglement_fidelity",
        [](const DecoderTable &table, double p, double mu, const std::string &strategy, size_t w_max,
           std::optional<size_t> burst_span, double expand_above, size_t workers) {
            EfOptions options;
            options.strategy = parse_strategy(strategy);
            options.w_max = w_max;
            options.burst_span = burst_span;
            options.expand_above = expand_above;
            options.workers = workers;
            ChannelModel ch(p, mu);
            EfResult r;
            {
                py::gil_scoped_release release;
                r = entanglement_fidelity(table, ch, options);
            }
            py::dict d;
            d["ef_lower"] = r.ef_lower;
            d["residual"] = r.residual;
            d["exact"] = r.exact;
            d["errors_enumerated"] = r.errors_enumerated;
            return d;
        },
        py::arg("table"), py::arg("p"), py::arg("mu"), py::arg("strategy") = "exact", py::arg("w_max") = 4,
        py::arg("burst_span") = py::none(), py::arg("expand_above") = 1e-12, py::arg("workers") = 1);
    m.def("parse_grid", [](const std::string &s) { return parse_grid(s); }, py::arg("text"));

    m.def("registry", [] {
        py::list out;
        for (const auto &e : builtin_registry()) {
            out.append(entry_dict(e));
        }
        return out;
    });
    m.def(
        "registry_code",
        [](const std::string &id) {
            const RegistryEntry &e = registry_lookup(id);
            return build_code(e.n, e.construction, e.genpolys);
        },
        py::arg("id"));

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::vector<std::string> argv{"qbecc"};
            argv.insert(argv.end(), args.begin(), args.end());
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_cli(argv, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool; returns (exit_code, stdout, stderr).");

#ifdef VERSION_INFO
#define QBECC_STR(x) #x
#define QBECC_XSTR(x) QBECC_STR(x)
    m.attr("__version__") = QBECC_XSTR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
