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

#include "qbecc/registry.h"

#include "json.hpp"

#include "qbecc/errors.h"
#include "qbecc/polynomial.h"

namespace qbecc {

using nlohmann::ordered_json;

std::string construction_name(Construction c) {
    return c == Construction::kCss ? "css" : "hermitian";
}

Construction parse_construction(std::string_view name) {
    if (name == "hermitian") {
        return Construction::kHermitian;
    }
    if (name == "css") {
        return Construction::kCss;
    }
    throw ParseError("unknown construction '" + std::string(name) + "' (expected hermitian or css)");
}

namespace {

template <typename T>
T field_of(const ordered_json &obj, const char *key, size_t index) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError("registry entry " + std::to_string(index) + " lacks \"" + key + "\"");
    }
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception &) {
        throw ParseError("registry entry " + std::to_string(index) + ": bad type for \"" + key + "\"");
    }
}

}  // namespace

std::vector<RegistryEntry> parse_registry(std::string_view json) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("registry is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError("registry must be a JSON array");
    }
    std::vector<RegistryEntry> out;
    for (size_t i = 0; i < doc.size(); i++) {
        const auto &obj = doc[i];
        if (!obj.is_object()) {
            throw ParseError("registry entry " + std::to_string(i) + " is not an object");
        }
        RegistryEntry e;
        e.id = field_of<std::string>(obj, "id", i);
        e.n = field_of<size_t>(obj, "n", i);
        e.k = field_of<size_t>(obj, "k", i);
        e.l = field_of<size_t>(obj, "l", i);
        e.qrb = field_of<size_t>(obj, "qrb", i);
        e.degenerate = field_of<bool>(obj, "degenerate", i);
        e.construction = parse_construction(field_of<std::string>(obj, "construction", i));
        e.genpolys = field_of<std::vector<std::string>>(obj, "genpolys", i);
        size_t want = e.construction == Construction::kCss ? 2 : 1;
        if (e.genpolys.size() != want) {
            throw ParseError("registry entry " + e.id + " needs " + std::to_string(want) + " generator polynomial(s)");
        }
        for (const auto &prev : out) {
            if (prev.id == e.id) {
                throw ParseError("duplicate registry id " + e.id);
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::string registry_to_json(const std::vector<RegistryEntry> &entries) {
    ordered_json doc = ordered_json::array();
    for (const auto &e : entries) {
        ordered_json obj;
        obj["id"] = e.id;
        obj["n"] = e.n;
        obj["k"] = e.k;
        obj["l"] = e.l;
        obj["qrb"] = e.qrb;
        obj["degenerate"] = e.degenerate;
        obj["construction"] = construction_name(e.construction);
        obj["genpolys"] = e.genpolys;
        doc.push_back(std::move(obj));
    }
    return doc.dump(2);
}

const std::vector<RegistryEntry> &builtin_registry() {
    static const std::vector<RegistryEntry> entries = parse_registry(embedded_registry_json());
    return entries;
}

const RegistryEntry &registry_lookup(std::string_view id) {
    for (const auto &e : builtin_registry()) {
        if (e.id == id) {
            return e;
        }
    }
    std::string known;
    for (const auto &e : builtin_registry()) {
        known += (known.empty() ? "" : ", ") + e.id;
    }
    throw PreconditionError("unknown code id '" + std::string(id) + "' (known: " + known + ")");
}

std::vector<FieldModulus> parse_field_moduli(std::string_view json) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("field moduli are not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError("field moduli must be a JSON array");
    }
    std::vector<FieldModulus> out;
    for (size_t i = 0; i < doc.size(); i++) {
        FieldModulus fm;
        fm.m = field_of<int>(doc[i], "m", i);
        auto terms = parse_poly_terms(field_of<std::string>(doc[i], "modulus", i));
        if (terms.empty() || terms.front().exponent != static_cast<size_t>(fm.m) || terms.front().coeff != 1) {
            throw ParseError("modulus for m = " + std::to_string(fm.m) + " is not monic of degree m");
        }
        fm.coeffs.assign(fm.m + 1, F4::zero());
        for (const auto &t : terms) {
            fm.coeffs[t.exponent] = F4(static_cast<uint8_t>(t.coeff));
        }
        out.push_back(std::move(fm));
    }
    return out;
}

}  // namespace qbecc
