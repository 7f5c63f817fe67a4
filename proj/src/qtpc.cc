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

#include "qbecc/qtpc.h"

#include <algorithm>

#include "qbecc/errors.h"

namespace qbecc {

using Elem = GaloisField::Elem;

namespace {

// rho1 x rho1 matrix over C1's field of multiplication by h on syndromes.
std::vector<Elem> expansion_matrix(const GaloisField &ext, Elem h, bool binary) {
    size_t m = static_cast<size_t>(ext.degree());
    if (!binary) {
        std::vector<F4> mm = ext.multiplication_matrix(h);
        std::vector<Elem> out(m * m);
        for (size_t i = 0; i < m * m; i++) {
            out[i] = mm[i].v;
        }
        return out;
    }
    // A binary syndrome of length 2m is read as the element whose integer
    // encoding has those bits.
    size_t w = 2 * m;
    std::vector<Elem> out(w * w);
    for (size_t c = 0; c < w; c++) {
        Elem col = ext.mul(h, Elem{1} << c);
        for (size_t r = 0; r < w; r++) {
            out[r * w + c] = (col >> r) & 1;
        }
    }
    return out;
}

}  // namespace

FieldMatrix tensor_check_matrix(const LinearCode &c1, const LinearCode &c2) {
    bool binary = c1.field->is_binary();
    if (!binary && !c1.field->is_quaternary()) {
        throw PreconditionError("C1 must be over GF(2) or GF(4), got " + c1.field->name());
    }
    size_t rho1 = c1.n - c1.k;
    size_t want = binary ? rho1 / 2 : rho1;
    if ((binary && rho1 % 2 != 0) || c2.field->is_binary() || static_cast<size_t>(c2.field->degree()) != want) {
        throw PreconditionError("C2 must be over GF(4^" + std::to_string(want) + ") to match rho1 = " +
                                std::to_string(rho1) + (binary && rho1 % 2 ? " (binary C1 needs even rho1)" : "") +
                                ", got " + c2.field->name());
    }
    const FieldMatrix &h1 = c1.check_matrix;
    const FieldMatrix &h2 = c2.check_matrix;
    size_t n1 = c1.n;
    FieldMatrix out(c1.field, h2.rows() * rho1, h2.cols() * n1);
    for (size_t i = 0; i < h2.rows(); i++) {
        for (size_t j = 0; j < h2.cols(); j++) {
            Elem h = h2.at(i, j);
            if (h == 0) {
                continue;
            }
            std::vector<Elem> m = expansion_matrix(*c2.field, h, binary);
            for (size_t a = 0; a < rho1; a++) {
                for (size_t b = 0; b < rho1; b++) {
                    Elem coef = m[a * rho1 + b];
                    if (coef == 0) {
                        continue;
                    }
                    for (size_t c = 0; c < n1; c++) {
                        out.at(i * rho1 + a, j * n1 + c) ^= c1.field->mul(coef, h1.at(b, c));
                    }
                }
            }
        }
    }
    return out;
}

QtpcResult qtpc_construct(const LinearCode &c1, const LinearCode &c2) {
    bool binary = c1.field->is_binary();
    if (binary ? !binary_dual_containing(c1, c1) : !hermitian_dual_containing(c1)) {
        throw PreconditionError(binary ? "binary C1 must contain its dual" : "C1 must contain its Hermitian dual");
    }
    QtpcResult out;
    QtpcSpec &s = out.spec;
    s.n1 = c1.n;
    s.k1 = c1.k;
    s.n2 = c2.n;
    s.k2 = c2.k;
    s.rho1 = c1.n - c1.k;
    s.rho2 = c2.n - c2.k;
    s.expanded_check = tensor_check_matrix(c1, c2);
    s.big_n = s.n1 * s.n2;
    s.big_k = s.big_n - 2 * s.rho1 * s.rho2;
    out.rank = s.expanded_check.rank();
    LinearCode tpc = LinearCode::from_check(s.expanded_check);
    if (binary) {
        out.self_orthogonal = binary_dual_containing(tpc, tpc);
        out.code = css_construct(tpc, tpc);
    } else {
        out.self_orthogonal = hermitian_dual_containing(tpc);
        out.code = hermitian_construct(tpc);
    }
    return out;
}

InterleaverMap::InterleaverMap(size_t n1, size_t n2, size_t l1) : n1_(n1), n2_(n2), l1_(l1) {
    if (n1 == 0 || n2 == 0 || l1 == 0) {
        throw PreconditionError("interleaver dimensions must be positive");
    }
    if (n1 % l1 != 0) {
        throw PreconditionError("l1 = " + std::to_string(l1) + " does not divide n1 = " + std::to_string(n1));
    }
}

size_t InterleaverMap::interleave(size_t row, size_t col) const {
    if (row >= n1_ || col >= n2_) {
        throw PreconditionError("array cell outside the n1 x n2 array");
    }
    size_t b = row / l1_;
    size_t j = row % l1_;
    return b * (l1_ * n2_) + col * l1_ + j;
}

std::pair<size_t, size_t> InterleaverMap::deinterleave(size_t t) const {
    if (t >= size()) {
        throw PreconditionError("stream position outside the array");
    }
    size_t b = t / (l1_ * n2_);
    size_t rest = t % (l1_ * n2_);
    size_t col = rest / l1_;
    size_t j = rest % l1_;
    return {b * l1_ + j, col};
}

DispersalReport dispersal_report(const InterleaverMap &map, size_t burst_len, bool aligned_only) {
    size_t total = map.size();
    if (burst_len < 1 || burst_len > total) {
        throw PreconditionError("burst length must lie in 1..n1*n2");
    }
    DispersalReport rep;
    rep.burst_len = burst_len;
    rep.aligned_only = aligned_only;
    size_t n2 = map.n2();
    std::vector<size_t> lo(n2);
    std::vector<size_t> hi(n2);
    std::vector<bool> hit(n2);
    for (size_t t0 = 0; t0 + burst_len <= total; t0++) {
        if (aligned_only && t0 % map.l1() != 0) {
            continue;
        }
        rep.windows++;
        std::fill(hit.begin(), hit.end(), false);
        for (size_t t = t0; t < t0 + burst_len; t++) {
            auto [row, col] = map.deinterleave(t);
            if (!hit[col]) {
                hit[col] = true;
                lo[col] = hi[col] = row;
            } else {
                lo[col] = std::min(lo[col], row);
                hi[col] = std::max(hi[col], row);
            }
        }
        size_t count = 0;
        for (size_t c = 0; c < n2; c++) {
            if (hit[c]) {
                count++;
                rep.max_inner_burst = std::max(rep.max_inner_burst, hi[c] - lo[c] + 1);
            }
        }
        if (count > rep.max_affected_subblocks) {
            rep.max_affected_subblocks = count;
            rep.worst_start = t0;
        }
        // A cyclic run has exactly one hit column whose predecessor is unhit.
        if (count < n2) {
            size_t run_starts = 0;
            for (size_t c = 0; c < n2; c++) {
                if (hit[c] && !hit[(c + n2 - 1) % n2]) {
                    run_starts++;
                }
            }
            if (run_starts != 1) {
                rep.cyclically_consecutive = false;
            }
        }
    }
    return rep;
}

StabilizerCode interleaved_code(const StabilizerCode &code, const InterleaverMap &map) {
    if (code.n() != map.size()) {
        throw PreconditionError("code length does not match the interleaver array");
    }
    std::vector<SymplecticVector> rows;
    for (const auto &g : code.basis()) {
        SymplecticVector v(code.n());
        for (size_t q = 0; q < code.n(); q++) {
            size_t t = map.interleave(q % map.n1(), q / map.n1());
            v.set_symbol(t, g.symbol(q));
        }
        rows.push_back(std::move(v));
    }
    return additive_code(code.n(), rows);
}

}  // namespace qbecc
