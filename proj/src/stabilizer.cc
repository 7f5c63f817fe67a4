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

#include "qbecc/stabilizer.h"

#include <algorithm>
#include <bit>

#include "qbecc/errors.h"

namespace qbecc {

BitVec SymplecticVector::packed() const {
    size_t n = this->n();
    BitVec out(2 * n);
    for (size_t i = 0; i < n; i++) {
        if (a.get(i)) {
            out.set(i);
        }
        if (b.get(i)) {
            out.set(n + i);
        }
    }
    return out;
}

SymplecticVector SymplecticVector::from_packed(const BitVec &v) {
    size_t n = v.size() / 2;
    SymplecticVector out(n);
    for (size_t i = 0; i < n; i++) {
        out.a.set(i, v.get(i));
        out.b.set(i, v.get(n + i));
    }
    return out;
}

std::string SymplecticVector::to_string() const {
    static constexpr char kNames[4] = {'I', 'X', 'Z', 'Y'};
    std::string s(n(), 'I');
    for (size_t i = 0; i < n(); i++) {
        s[i] = kNames[symbol(i).v];
    }
    return s;
}

SymplecticVector SymplecticVector::from_string(std::string_view paulis) {
    SymplecticVector out(paulis.size());
    for (size_t i = 0; i < paulis.size(); i++) {
        switch (paulis[i]) {
            case 'I':
            case '_':
                break;
            case 'X':
                out.set_symbol(i, F4::one());
                break;
            case 'Z':
                out.set_symbol(i, F4::omega());
                break;
            case 'Y':
                out.set_symbol(i, F4::omega2());
                break;
            default:
                throw ParseError("bad Pauli character '" + std::string(1, paulis[i]) + "'");
        }
    }
    return out;
}

bool symplectic_ip(const SymplecticVector &u, const SymplecticVector &v) {
    if (u.n() != v.n()) {
        throw PreconditionError("symplectic inner product of vectors with different lengths");
    }
    return u.a.dot(v.b) ^ v.a.dot(u.b);
}

bool trace_ip(const F4Vector &u, const F4Vector &v) {
    if (u.size() != v.size()) {
        throw PreconditionError("trace inner product of vectors with different lengths");
    }
    F4 acc;
    for (size_t i = 0; i < u.size(); i++) {
        acc = acc + u[i] * f4_conj(v[i]) + f4_conj(u[i]) * v[i];
    }
    if (acc.v > 1) {
        throw std::logic_error("trace inner product left GF(2)");
    }
    return acc.v == 1;
}

SymplecticVector f4_to_symplectic(const F4Vector &v) {
    SymplecticVector out(v.size());
    for (size_t i = 0; i < v.size(); i++) {
        out.set_symbol(i, v[i]);
    }
    return out;
}

F4Vector symplectic_to_f4(const SymplecticVector &v) {
    F4Vector out(v.n());
    for (size_t i = 0; i < v.n(); i++) {
        out[i] = v.symbol(i);
    }
    return out;
}

size_t burst_length(const SymplecticVector &v) {
    BitVec s = v.support();
    size_t first = s.first_set();
    if (first == s.size()) {
        return 0;
    }
    return s.last_set() - first + 1;
}

size_t burst_length(const F4Vector &v) {
    size_t first = v.size();
    size_t last = 0;
    for (size_t i = 0; i < v.size(); i++) {
        if (v[i]) {
            first = std::min(first, i);
            last = i;
        }
    }
    return first == v.size() ? 0 : last - first + 1;
}

BitVec StabilizerCode::syndrome(const SymplecticVector &e) const {
    BitVec s(basis_.size());
    for (size_t i = 0; i < basis_.size(); i++) {
        if (symplectic_ip(e, basis_[i])) {
            s.set(i);
        }
    }
    return s;
}

BitVec StabilizerCode::logical_syndrome(const SymplecticVector &e) const {
    BitVec s(logicals_.size());
    for (size_t i = 0; i < logicals_.size(); i++) {
        if (symplectic_ip(e, logicals_[i])) {
            s.set(i);
        }
    }
    return s;
}

bool StabilizerCode::in_stabilizer(const SymplecticVector &e) const {
    return span_.contains(e.packed());
}

namespace {

// Basis (as packed rows) of {x : (x, s)_s = 0 for all rows s}.
std::vector<BitVec> symplectic_dual_basis(size_t n, const std::vector<SymplecticVector> &rows) {
    auto f2 = GaloisField::binary();
    FieldMatrix m(f2, rows.size(), 2 * n);
    for (size_t r = 0; r < rows.size(); r++) {
        for (size_t i = 0; i < n; i++) {
            m.at(r, i) = rows[r].b.get(i);
            m.at(r, n + i) = rows[r].a.get(i);
        }
    }
    FieldMatrix ns = m.nullspace();
    std::vector<BitVec> out;
    for (size_t r = 0; r < ns.rows(); r++) {
        BitVec v(2 * n);
        for (size_t c = 0; c < 2 * n; c++) {
            if (ns.at(r, c)) {
                v.set(c);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

StabilizerCode additive_code(size_t n, const std::vector<SymplecticVector> &rows) {
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].n() != n) {
            throw PreconditionError("generator " + std::to_string(i) + " has length " + std::to_string(rows[i].n()) +
                                    ", expected " + std::to_string(n));
        }
    }
    for (size_t i = 0; i < rows.size(); i++) {
        for (size_t j = i + 1; j < rows.size(); j++) {
            if (symplectic_ip(rows[i], rows[j])) {
                throw CommutationError(i, j,
                                       "generators " + std::to_string(i) + " (" + rows[i].to_string() + ") and " +
                                           std::to_string(j) + " (" + rows[j].to_string() + ") anticommute");
            }
        }
    }
    StabilizerCode code;
    code.n_ = n;
    code.span_ = Gf2Basis(2 * n);
    for (const auto &row : rows) {
        code.span_.add(row.packed());
    }
    for (const auto &row : code.span_.rows()) {
        code.basis_.push_back(SymplecticVector::from_packed(row));
    }
    Gf2Basis extended = code.span_;
    for (const auto &v : symplectic_dual_basis(n, code.basis_)) {
        if (extended.add(v)) {
            code.logicals_.push_back(SymplecticVector::from_packed(v));
        }
    }
    if (code.logicals_.size() != 2 * code.k()) {
        throw std::logic_error("logical operator count does not match 2k");
    }
    return code;
}

StabilizerCode hermitian_construct(const LinearCode &code) {
    if (!hermitian_dual_containing(code)) {
        throw PreconditionError("code is not Hermitian dual containing");
    }
    FieldMatrix dual = code.check_matrix.conjugated();
    std::vector<SymplecticVector> rows;
    for (size_t r = 0; r < dual.rows(); r++) {
        F4Vector g(code.n);
        F4Vector wg(code.n);
        for (size_t c = 0; c < code.n; c++) {
            g[c] = F4(static_cast<uint8_t>(dual.at(r, c)));
            wg[c] = F4::omega() * g[c];
        }
        rows.push_back(f4_to_symplectic(g));
        rows.push_back(f4_to_symplectic(wg));
    }
    StabilizerCode out = additive_code(code.n, rows);
    if (out.k() != 2 * code.k - code.n) {
        throw std::logic_error("Hermitian construction produced unexpected dimension");
    }
    return out;
}

StabilizerCode css_construct(const LinearCode &c1, const LinearCode &c2) {
    if (!binary_dual_containing(c2, c1)) {
        throw PreconditionError("CSS construction requires C2^perp to be contained in C1");
    }
    size_t n = c1.n;
    std::vector<SymplecticVector> rows;
    for (size_t r = 0; r < c1.check_matrix.rows(); r++) {
        SymplecticVector v(n);
        for (size_t c = 0; c < n; c++) {
            v.a.set(c, c1.check_matrix.at(r, c) != 0);
        }
        rows.push_back(std::move(v));
    }
    for (size_t r = 0; r < c2.check_matrix.rows(); r++) {
        SymplecticVector v(n);
        for (size_t c = 0; c < n; c++) {
            v.b.set(c, c2.check_matrix.at(r, c) != 0);
        }
        rows.push_back(std::move(v));
    }
    StabilizerCode out = additive_code(n, rows);
    if (out.k() + n != c1.k + c2.k) {
        throw std::logic_error("CSS construction produced unexpected dimension");
    }
    return out;
}

DistanceResult min_distance(const StabilizerCode &code, size_t max_log2) {
    size_t n = code.n();
    size_t dim = n + code.k();
    if (dim > max_log2 || dim > 62) {
        throw ResourceLimitError("distance enumeration needs 2^" + std::to_string(dim) + " elements (limit 2^" +
                                 std::to_string(max_log2) + ")");
    }
    // dim <= 62 forces n <= 62 and 2k <= 62, so single words suffice.
    std::vector<uint64_t> xa;
    std::vector<uint64_t> xb;
    std::vector<uint64_t> cls;
    auto add_generator = [&](const SymplecticVector &v) {
        xa.push_back(v.a.word(0));
        xb.push_back(v.b.word(0));
        uint64_t c = 0;
        BitVec ls = code.logical_syndrome(v);
        for (size_t i = 0; i < ls.size(); i++) {
            if (ls.get(i)) {
                c |= uint64_t{1} << i;
            }
        }
        cls.push_back(c);
    };
    for (const auto &v : code.basis()) {
        add_generator(v);
    }
    for (const auto &v : code.logicals()) {
        add_generator(v);
    }
    DistanceResult out;
    out.distance = code.k() == 0 ? 0 : n + 1;
    out.distance_nonzero = n + 1;
    uint64_t a = 0;
    uint64_t b = 0;
    uint64_t c = 0;
    uint64_t total = uint64_t{1} << dim;
    for (uint64_t i = 1; i < total; i++) {
        size_t flip = static_cast<size_t>(std::countr_zero(i));
        a ^= xa[flip];
        b ^= xb[flip];
        c ^= cls[flip];
        size_t w = static_cast<size_t>(std::popcount(a | b));
        out.distance_nonzero = std::min(out.distance_nonzero, w);
        if (c != 0 && w < out.distance) {
            out.distance = w;
        }
    }
    out.enumerated = total;
    return out;
}

}  // namespace qbecc
