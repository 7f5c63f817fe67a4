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

#ifndef QBECC_FIELD_MATRIX_H
#define QBECC_FIELD_MATRIX_H

#include <cstddef>
#include <string>
#include <vector>

#include "qbecc/galois_field.h"

namespace qbecc {

/// Dense row-major matrix over a GaloisField.
class FieldMatrix {
   public:
    using Elem = GaloisField::Elem;

    FieldMatrix() = default;
    FieldMatrix(FieldPtr field, size_t rows, size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    }

    const FieldPtr &field() const {
        return field_;
    }
    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    Elem &at(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    Elem at(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    std::vector<Elem> row(size_t r) const {
        return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
    }
    void append_row(const std::vector<Elem> &row);

    FieldMatrix transposed() const;
    FieldMatrix operator*(const FieldMatrix &other) const;
    bool is_zero() const;
    /// Entrywise x -> x^2 (the GF(4) conjugation; identity over GF(2)).
    FieldMatrix conjugated() const;

    /// Reduced row echelon form with zero rows dropped; pivots receive the
    /// pivot column of each remaining row.
    FieldMatrix rref(std::vector<size_t> *pivots = nullptr) const;
    size_t rank() const;
    /// Basis (as rows) of {x : M x^T = 0}.
    FieldMatrix nullspace() const;
    /// Whether vector v lies in the row space.
    bool row_space_contains(const std::vector<Elem> &v) const;

    std::string to_string() const;

    bool operator==(const FieldMatrix &other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

   private:
    FieldPtr field_;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Elem> data_;
};

}  // namespace qbecc

#endif
