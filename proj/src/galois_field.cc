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

#include "qbecc/galois_field.h"

#include <mutex>
#include <sstream>

#include "qbecc/errors.h"

namespace qbecc {

namespace {

// Lexicographically first primitive monic polynomials over GF(4), low to high.
// Mirrored in data/field_moduli.json.
const std::vector<std::vector<F4>> &modulus_table() {
    static const std::vector<std::vector<F4>> table = [] {
        std::vector<std::vector<uint8_t>> codes = {
            {2, 1},
            {2, 1, 1},
            {2, 1, 1, 1},
            {3, 2, 1, 0, 1},
            {2, 1, 0, 0, 0, 1},
            {2, 1, 1, 0, 0, 0, 1},
            {3, 2, 1, 0, 0, 0, 0, 1},
            {2, 1, 0, 1, 0, 0, 0, 0, 1},
        };
        std::vector<std::vector<F4>> out;
        for (const auto &row : codes) {
            std::vector<F4> poly;
            for (uint8_t c : row) {
                poly.emplace_back(c);
            }
            out.push_back(std::move(poly));
        }
        return out;
    }();
    return table;
}

// Multiplies an element by the root a and reduces by the monic modulus.
uint32_t times_root(uint32_t v, const std::vector<F4> &modulus, int m) {
    F4 top(static_cast<uint8_t>(v >> (2 * (m - 1))));
    uint32_t mask = m >= 16 ? ~0u : ((1u << (2 * m)) - 1);
    uint32_t shifted = (v << 2) & mask;
    if (top) {
        // a^m = sum_{i<m} modulus[i] a^i in characteristic 2.
        for (int i = 0; i < m; i++) {
            F4 c = top * modulus[i];
            shifted ^= static_cast<uint32_t>(c.v) << (2 * i);
        }
    }
    return shifted;
}

}  // namespace

GaloisField::GaloisField(int degree, std::vector<F4> modulus) : degree_(degree), modulus_(std::move(modulus)) {
    if (degree_ == 0) {
        size_ = 2;
        exp_ = {1, 1};
        log_ = {0, 0};
        return;
    }
    if (degree_ < 1 || degree_ > kMaxDegree) {
        throw PreconditionError("unsupported extension degree " + std::to_string(degree_));
    }
    if (modulus_.size() != static_cast<size_t>(degree_) + 1 || modulus_.back() != F4::one()) {
        throw PreconditionError("modulus must be monic of degree " + std::to_string(degree_));
    }
    size_ = 1u << (2 * degree_);
    uint32_t order = size_ - 1;
    exp_.assign(2 * static_cast<size_t>(order), 0);
    log_.assign(size_, 0);
    // For m = 1 the "root" of x + c is c itself, not the shifted digit.
    uint32_t root = degree_ == 1 ? modulus_[0].v : 2;
    uint32_t v = 1;
    for (uint32_t i = 0; i < order; i++) {
        if (i > 0 && v == 1) {
            throw PreconditionError("modulus is not primitive");
        }
        exp_[i] = v;
        log_[v] = i;
        if (degree_ == 1) {
            v = f4_mul(F4(static_cast<uint8_t>(v)), F4(static_cast<uint8_t>(root))).v;
        } else {
            v = times_root(v, modulus_, degree_);
        }
    }
    if (v != 1) {
        throw PreconditionError("modulus is not primitive");
    }
    for (uint32_t i = 0; i < order; i++) {
        exp_[order + i] = exp_[i];
    }
}

std::shared_ptr<const GaloisField> GaloisField::binary() {
    static const auto field = std::make_shared<const GaloisField>(0, std::vector<F4>{});
    return field;
}

std::shared_ptr<const GaloisField> GaloisField::quaternary() {
    return extension(1);
}

const std::vector<F4> &GaloisField::default_modulus(int m) {
    if (m < 1 || m > kMaxDegree) {
        throw PreconditionError("unsupported extension degree " + std::to_string(m) + " (supported: 1.." +
                                std::to_string(kMaxDegree) + ")");
    }
    return modulus_table()[m - 1];
}

std::shared_ptr<const GaloisField> GaloisField::extension(int m) {
    static std::mutex mu;
    static std::vector<std::shared_ptr<const GaloisField>> cache(kMaxDegree + 1);
    const auto &modulus = default_modulus(m);
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[m]) {
        cache[m] = std::make_shared<const GaloisField>(m, modulus);
    }
    return cache[m];
}

std::string GaloisField::name() const {
    if (is_binary()) {
        return "GF(2)";
    }
    if (is_quaternary()) {
        return "GF(4)";
    }
    return "GF(4^" + std::to_string(degree_) + ")";
}

GaloisField::Elem GaloisField::inv(Elem a) const {
    if (a == 0) {
        throw PreconditionError("inverse of zero in " + name());
    }
    uint32_t order = size_ - 1;
    return exp_[(order - log_[a]) % order];
}

GaloisField::Elem GaloisField::pow(Elem a, uint64_t e) const {
    if (e == 0) {
        return 1;
    }
    if (a == 0) {
        return 0;
    }
    uint64_t order = size_ - 1;
    return exp_[static_cast<uint32_t>((static_cast<uint64_t>(log_[a]) * (e % order)) % order)];
}

uint32_t GaloisField::multiplicative_order(Elem a) const {
    if (a == 0) {
        throw PreconditionError("zero has no multiplicative order");
    }
    uint32_t order = size_ - 1;
    uint32_t best = order;
    // Order is the smallest divisor d of |G| with a^d = 1.
    for (uint32_t d = 1; d * d <= order; d++) {
        if (order % d != 0) {
            continue;
        }
        if (pow(a, d) == 1) {
            return d;
        }
        uint32_t other = order / d;
        if (other < best && pow(a, other) == 1) {
            best = other;
        }
    }
    return best;
}

GaloisField::Elem GaloisField::from_f4(F4 x) const {
    if (is_binary() && x.v > 1) {
        throw PreconditionError("GF(4) scalar outside GF(2)");
    }
    return x.v;
}

std::optional<F4> GaloisField::to_f4(Elem a) const {
    if (a < (is_binary() ? 2u : 4u)) {
        return F4(static_cast<uint8_t>(a));
    }
    return std::nullopt;
}

std::vector<F4> GaloisField::coordinates(Elem a) const {
    if (is_binary()) {
        return {F4(static_cast<uint8_t>(a))};
    }
    std::vector<F4> out(degree_);
    for (int i = 0; i < degree_; i++) {
        out[i] = F4(static_cast<uint8_t>(a >> (2 * i)));
    }
    return out;
}

GaloisField::Elem GaloisField::from_coordinates(const std::vector<F4> &coords) const {
    if (coords.size() != static_cast<size_t>(is_binary() ? 1 : degree_)) {
        throw PreconditionError("coordinate vector has wrong length for " + name());
    }
    Elem out = 0;
    for (size_t i = 0; i < coords.size(); i++) {
        out |= static_cast<Elem>(coords[i].v) << (2 * i);
    }
    return out;
}

std::vector<F4> GaloisField::multiplication_matrix(Elem h) const {
    if (is_binary()) {
        return {F4(static_cast<uint8_t>(h))};
    }
    size_t m = degree_;
    std::vector<F4> out(m * m);
    // Column j holds the coordinates of h * a^j.
    for (size_t j = 0; j < m; j++) {
        Elem basis = static_cast<Elem>(1) << (2 * j);
        auto col = coordinates(mul(h, basis));
        for (size_t i = 0; i < m; i++) {
            out[i * m + j] = col[i];
        }
    }
    return out;
}

}  // namespace qbecc
