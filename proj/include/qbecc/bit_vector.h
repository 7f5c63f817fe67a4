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

#ifndef QBECC_BIT_VECTOR_H
#define QBECC_BIT_VECTOR_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qbecc {

/// Fixed-length bit vector packed into 64-bit words; bits past size() stay zero.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), w_((n + 63) / 64, 0) {
    }

    size_t size() const {
        return n_;
    }
    size_t num_words() const {
        return w_.size();
    }
    uint64_t word(size_t i) const {
        return w_[i];
    }
    uint64_t &word(size_t i) {
        return w_[i];
    }
    const std::vector<uint64_t> &words() const {
        return w_;
    }

    bool get(size_t i) const {
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool v = true) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (v) {
            w_[i >> 6] |= m;
        } else {
            w_[i >> 6] &= ~m;
        }
    }
    void flip(size_t i) {
        w_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    BitVec &operator^=(const BitVec &other) {
        for (size_t i = 0; i < w_.size(); i++) {
            w_[i] ^= other.w_[i];
        }
        return *this;
    }
    BitVec operator^(const BitVec &other) const {
        BitVec out = *this;
        out ^= other;
        return out;
    }
    BitVec operator|(const BitVec &other) const {
        BitVec out = *this;
        for (size_t i = 0; i < w_.size(); i++) {
            out.w_[i] |= other.w_[i];
        }
        return out;
    }

    bool any() const {
        for (uint64_t x : w_) {
            if (x) {
                return true;
            }
        }
        return false;
    }
    size_t popcount() const {
        size_t c = 0;
        for (uint64_t x : w_) {
            c += std::popcount(x);
        }
        return c;
    }
    /// Index of the lowest set bit, or size() when zero.
    size_t first_set() const;
    /// Index of the highest set bit, or size() when zero.
    size_t last_set() const;

    /// Parity of the bitwise AND.
    bool dot(const BitVec &other) const {
        uint64_t acc = 0;
        for (size_t i = 0; i < w_.size(); i++) {
            acc ^= w_[i] & other.w_[i];
        }
        return std::popcount(acc) & 1;
    }

    std::string to_string() const;

    bool operator==(const BitVec &other) const = default;
    bool operator<(const BitVec &other) const {
        return w_ < other.w_;
    }

   private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

/// Incrementally built GF(2) row space kept in reduced echelon form.
class Gf2Basis {
   public:
    explicit Gf2Basis(size_t width) : width_(width) {
    }

    size_t width() const {
        return width_;
    }
    size_t rank() const {
        return rows_.size();
    }
    const std::vector<BitVec> &rows() const {
        return rows_;
    }
    const std::vector<size_t> &pivots() const {
        return pivots_;
    }

    /// Reduces v against the basis; the result is zero iff v is in the span.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec &v) const {
        return !reduce(v).any();
    }
    /// Adds v; returns false if it was already in the span.
    bool add(const BitVec &v);

   private:
    size_t width_;
    std::vector<BitVec> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace qbecc

#endif
