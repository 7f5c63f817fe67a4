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

#include "qbecc/field_matrix.h"

#include <sstream>

#include "qbecc/errors.h"

namespace qbecc {

void FieldMatrix::append_row(const std::vector<Elem> &row) {
    if (row.size() != cols_) {
        throw PreconditionError("row length mismatch");
    }
    data_.insert(data_.end(), row.begin(), row.end());
    rows_++;
}

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix out(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.at(c, r) = at(r, c);
        }
    }
    return out;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix &other) const {
    if (cols_ != other.rows_) {
        throw PreconditionError("matrix dimension mismatch");
    }
    FieldMatrix out(field_, rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            Elem a = at(r, k);
            if (a == 0) {
                continue;
            }
            for (size_t c = 0; c < other.cols_; c++) {
                out.at(r, c) ^= field_->mul(a, other.at(k, c));
            }
        }
    }
    return out;
}

bool FieldMatrix::is_zero() const {
    for (Elem e : data_) {
        if (e != 0) {
            return false;
        }
    }
    return true;
}

FieldMatrix FieldMatrix::conjugated() const {
    FieldMatrix out = *this;
    for (Elem &e : out.data_) {
        e = field_->mul(e, e);
    }
    return out;
}

FieldMatrix FieldMatrix::rref(std::vector<size_t> *pivots) const {
    FieldMatrix m = *this;
    std::vector<size_t> piv;
    size_t lead = 0;
    for (size_t c = 0; c < cols_ && lead < rows_; c++) {
        size_t sel = lead;
        while (sel < rows_ && m.at(sel, c) == 0) {
            sel++;
        }
        if (sel == rows_) {
            continue;
        }
        if (sel != lead) {
            for (size_t j = 0; j < cols_; j++) {
                std::swap(m.at(sel, j), m.at(lead, j));
            }
        }
        Elem inv = field_->inv(m.at(lead, c));
        for (size_t j = 0; j < cols_; j++) {
            m.at(lead, j) = field_->mul(m.at(lead, j), inv);
        }
        for (size_t r = 0; r < rows_; r++) {
            Elem f = m.at(r, c);
            if (r == lead || f == 0) {
                continue;
            }
            for (size_t j = 0; j < cols_; j++) {
                m.at(r, j) ^= field_->mul(f, m.at(lead, j));
            }
        }
        piv.push_back(c);
        lead++;
    }
    m.data_.resize(lead * cols_);
    m.rows_ = lead;
    if (pivots != nullptr) {
        *pivots = std::move(piv);
    }
    return m;
}

size_t FieldMatrix::rank() const {
    return rref().rows();
}

FieldMatrix FieldMatrix::nullspace() const {
    std::vector<size_t> piv;
    FieldMatrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : piv) {
        is_pivot[p] = true;
    }
    FieldMatrix out(field_, 0, cols_);
    for (size_t free = 0; free < cols_; free++) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Elem> v(cols_, 0);
        v[free] = 1;
        // Characteristic 2: x_pivot = -sum(...) = sum(...).
        for (size_t i = 0; i < piv.size(); i++) {
            v[piv[i]] = r.at(i, free);
        }
        out.append_row(v);
    }
    return out;
}

bool FieldMatrix::row_space_contains(const std::vector<Elem> &v) const {
    if (v.size() != cols_) {
        throw PreconditionError("vector length mismatch");
    }
    FieldMatrix ext = *this;
    ext.append_row(v);
    return ext.rank() == rank();
}

std::string FieldMatrix::to_string() const {
    std::ostringstream out;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out << (c ? " " : "") << at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qbecc
