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

#ifndef QBECC_REGISTRY_H
#define QBECC_REGISTRY_H

#include <string>
#include <string_view>
#include <vector>

#include "qbecc/galois_field.h"

namespace qbecc {

enum class Construction { kHermitian, kCss };

std::string construction_name(Construction c);
/// "hermitian" or "css"; ParseError otherwise.
Construction parse_construction(std::string_view name);

/// One catalogued code: its generator polynomial(s) and the parameters it is
/// expected to reproduce.
struct RegistryEntry {
    std::string id;
    size_t n = 0;
    size_t k = 0;
    size_t l = 0;
    size_t qrb = 0;
    bool degenerate = false;
    Construction construction = Construction::kHermitian;
    std::vector<std::string> genpolys;
};

/// Parses a JSON array of entries; ParseError on schema violations.
std::vector<RegistryEntry> parse_registry(std::string_view json);
std::string registry_to_json(const std::vector<RegistryEntry> &entries);

/// The catalogue compiled into the library.
const std::vector<RegistryEntry> &builtin_registry();
/// Entry with the given id from the built-in catalogue; PreconditionError if absent.
const RegistryEntry &registry_lookup(std::string_view id);

struct FieldModulus {
    int m = 0;
    std::vector<F4> coeffs;  // low to high, monic
};
std::vector<FieldModulus> parse_field_moduli(std::string_view json);

std::string_view embedded_registry_json();
std::string_view embedded_field_moduli_json();

}  // namespace qbecc

#endif
