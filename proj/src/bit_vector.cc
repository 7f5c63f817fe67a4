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

#include "qbecc/bit_vector.h"

#include "qbecc/errors.h"

namespace qbecc {

size_t BitVec::first_set() const {
    for (size_t i = 0; i < w_.size(); i++) {
        if (w_[i]) {
            return i * 64 + std::countr_zero(w_[i]);
        }
    }
    return n_;
}

size_t BitVec::last_set() const {
    for (size_t i = w_.size(); i-- > 0;) {
        if (w_[i]) {
            return i * 64 + 63 - std::countl_zero(w_[i]);
        }
    }
    return n_;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitVec Gf2Basis::reduce(BitVec v) const {
    if (v.size() != width_) {
        throw PreconditionError("vector width mismatch in GF(2) basis");
    }
    for (size_t i = 0; i < rows_.size(); i++) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
        }
    }
    return v;
}

bool Gf2Basis::add(const BitVec &v) {
    BitVec r = reduce(v);
    size_t p = r.first_set();
    if (p == r.size()) {
        return false;
    }
    for (auto &row : rows_) {
        if (row.get(p)) {
            row ^= r;
        }
    }
    // Keep rows ordered by pivot so reduce() stays a single pass.
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) {
        pos++;
    }
    rows_.insert(rows_.begin() + pos, r);
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

}  // namespace qbecc
