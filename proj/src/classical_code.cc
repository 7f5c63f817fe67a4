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

#include "qbecc/classical_code.h"

#include <algorithm>
#include <array>
#include <limits>

#include "qbecc/errors.h"

namespace qbecc {

using Elem = GaloisField::Elem;

LinearCode LinearCode::from_generator(const FieldMatrix &generator) {
    LinearCode c;
    c.field = generator.field();
    c.n = generator.cols();
    c.gen_matrix = generator.rref();
    c.k = c.gen_matrix.rows();
    c.check_matrix = c.gen_matrix.nullspace();
    return c;
}

LinearCode LinearCode::from_check(const FieldMatrix &check) {
    LinearCode c;
    c.field = check.field();
    c.n = check.cols();
    c.check_matrix = check.rref();
    c.gen_matrix = c.check_matrix.nullspace();
    c.k = c.gen_matrix.rows();
    return c;
}

LinearCode LinearCode::full_space(const FieldPtr &field, size_t n) {
    return from_check(FieldMatrix(field, 0, n));
}

bool LinearCode::contains(const std::vector<Elem> &word) const {
    if (word.size() != n) {
        throw PreconditionError("word length mismatch");
    }
    for (size_t r = 0; r < check_matrix.rows(); r++) {
        Elem acc = 0;
        for (size_t c = 0; c < n; c++) {
            acc ^= field->mul(check_matrix.at(r, c), word[c]);
        }
        if (acc != 0) {
            return false;
        }
    }
    return true;
}

CyclicCode cyclic_from_poly(const Poly &g, size_t n) {
    if (g.is_zero() || g.degree() > static_cast<int>(n)) {
        throw PreconditionError("invalid generator polynomial for length " + std::to_string(n));
    }
    const auto &field = g.field();
    auto [quot, rem] = poly_divmod(Poly::x_pow_minus_one(field, n), g);
    if (!rem.is_zero()) {
        throw PreconditionError("invalid generator: " + g.to_string() + " does not divide x^" + std::to_string(n) +
                                " - 1");
    }
    size_t k = n - static_cast<size_t>(g.degree());
    FieldMatrix gen(field, k, n);
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < g.coeffs().size(); j++) {
            gen.at(i, i + j) = g.coeffs()[j];
        }
    }
    CyclicCode out{LinearCode::from_generator(gen), g};
    if (out.code.k != k) {
        throw PreconditionError("generator matrix of cyclic code is rank deficient");
    }
    return out;
}

std::vector<Elem> ClassicalBurst::dense(size_t n) const {
    std::vector<Elem> out(n, 0);
    for (size_t j = 0; j < symbols.size(); j++) {
        out[(start + j) % n] = symbols[j];
    }
    return out;
}

namespace {

// Start of the minimal cyclic window holding the support: the position right
// after the longest cyclic run of zeros, ties to the smallest index.
std::pair<size_t, size_t> cyclic_window(const std::vector<Elem> &word) {
    size_t n = word.size();
    std::vector<size_t> support;
    for (size_t i = 0; i < n; i++) {
        if (word[i] != 0) {
            support.push_back(i);
        }
    }
    if (support.empty()) {
        return {0, 0};
    }
    size_t best_gap = 0;
    size_t best_start = n;
    for (size_t j = 0; j < support.size(); j++) {
        size_t cur = support[j];
        size_t prev = support[(j + support.size() - 1) % support.size()];
        size_t gap = support.size() == 1 ? n - 1 : (cur + n - prev - 1) % n;
        if (gap > best_gap || (gap == best_gap && cur < best_start)) {
            best_gap = gap;
            best_start = cur;
        }
    }
    return {best_start, n - best_gap};
}

using Key = std::array<uint64_t, 2>;

struct Entry {
    Key key;
    uint32_t bl;
    uint32_t start;
    uint64_t pattern;

    bool operator<(const Entry &o) const {
        if (key != o.key) {
            return key < o.key;
        }
        if (bl != o.bl) {
            return bl < o.bl;
        }
        if (start != o.start) {
            return start < o.start;
        }
        return pattern < o.pattern;
    }
};

}  // namespace

size_t classical_burst_length(const std::vector<Elem> &word, bool end_around) {
    if (end_around) {
        return cyclic_window(word).second;
    }
    size_t first = word.size();
    size_t last = 0;
    for (size_t i = 0; i < word.size(); i++) {
        if (word[i] != 0) {
            first = std::min(first, i);
            last = i;
        }
    }
    return first == word.size() ? 0 : last - first + 1;
}

BurstCapability classical_burst_capability(const LinearCode &code, bool end_around, uint64_t max_patterns) {
    const auto &field = *code.field;
    size_t n = code.n;
    size_t r = code.n - code.k;
    size_t bits = static_cast<size_t>(field.bits_per_symbol());
    if (r * bits > 128) {
        throw PreconditionError("syndrome wider than 128 bits is not supported");
    }
    size_t reiger = r / 2;
    size_t len = std::min(reiger + 1, n);
    if (len * bits > 64) {
        throw ResourceLimitError("burst pattern does not fit in 64 bits");
    }

    uint64_t q = field.size();
    uint64_t estimate = 0;
    for (size_t s = 0; s < n; s++) {
        size_t w = end_around ? len : std::min(len, n - s);
        long double count = (q - 1);
        for (size_t j = 1; j < w; j++) {
            count *= q;
        }
        if (count + estimate > static_cast<long double>(max_patterns)) {
            throw ResourceLimitError("classical burst enumeration needs more than " + std::to_string(max_patterns) +
                                     " patterns");
        }
        estimate += static_cast<uint64_t>(count);
    }

    // Syndrome contribution of symbol value s at position j: s * H[:, j].
    auto column_key = [&](size_t j, Elem s) {
        Key key{0, 0};
        for (size_t i = 0; i < r; i++) {
            uint64_t v = field.mul(s, code.check_matrix.at(i, j));
            size_t off = i * bits;
            key[off / 64] ^= v << (off % 64);
            if (off % 64 + bits > 64) {
                key[off / 64 + 1] ^= v >> (64 - off % 64);
            }
        }
        return key;
    };

    std::vector<Entry> entries;
    entries.reserve(static_cast<size_t>(estimate) + 1);
    entries.push_back({Key{0, 0}, 0, 0, 0});
    std::vector<Elem> word(n, 0);
    for (size_t s = 0; s < n; s++) {
        size_t w = end_around ? len : std::min(len, n - s);
        std::vector<Elem> digits(w, 0);
        digits[0] = 1;
        while (true) {
            Key key{0, 0};
            uint64_t pattern = 0;
            std::fill(word.begin(), word.end(), 0);
            for (size_t j = 0; j < w; j++) {
                size_t pos = (s + j) % n;
                word[pos] = digits[j];
                if (digits[j] != 0) {
                    Key c = column_key(pos, digits[j]);
                    key[0] ^= c[0];
                    key[1] ^= c[1];
                }
                pattern |= static_cast<uint64_t>(digits[j]) << (j * bits);
            }
            bool keep = true;
            size_t bl;
            if (end_around) {
                auto [canon, length] = cyclic_window(word);
                keep = canon == s;
                bl = length;
            } else {
                bl = classical_burst_length(word, false);
            }
            if (keep) {
                entries.push_back({key, static_cast<uint32_t>(bl), static_cast<uint32_t>(s), pattern});
            }
            // Odometer over digits, first digit restricted to nonzero values.
            size_t j = w;
            while (j-- > 0) {
                digits[j]++;
                if (digits[j] < q) {
                    break;
                }
                digits[j] = j == 0 ? 1 : 0;
            }
            if (j == static_cast<size_t>(-1)) {
                break;
            }
        }
    }
    std::sort(entries.begin(), entries.end());

    BurstCapability out;
    out.end_around = end_around;
    out.patterns_checked = entries.size();
    size_t best = std::numeric_limits<size_t>::max();
    const Entry *wa = nullptr;
    const Entry *wb = nullptr;
    for (size_t i = 0; i + 1 < entries.size();) {
        size_t j = i + 1;
        while (j < entries.size() && entries[j].key == entries[i].key) {
            j++;
        }
        if (j - i >= 2 && entries[i + 1].bl < best) {
            best = entries[i + 1].bl;
            wa = &entries[i];
            wb = &entries[i + 1];
        }
        i = j;
    }
    out.l = best == std::numeric_limits<size_t>::max() ? reiger : std::min(reiger, best - 1);
    if (wa != nullptr) {
        auto unpack = [&](const Entry &e) {
            ClassicalBurst b;
            b.start = e.start;
            size_t w = end_around ? len : std::min(len, n - e.start);
            for (size_t j = 0; j < w; j++) {
                b.symbols.push_back(static_cast<Elem>((e.pattern >> (j * bits)) & ((uint64_t{1} << bits) - 1)));
            }
            return b;
        };
        out.witness = std::make_pair(unpack(*wa), unpack(*wb));
    }
    if (out.l > reiger) {
        throw std::logic_error("classical burst capability exceeds the Reiger bound");
    }
    return out;
}

LinearCode rs_mds(size_t n2, size_t l2, const FieldPtr &field) {
    if (field->is_binary()) {
        throw PreconditionError("Reed-Solomon codes need a field larger than GF(2)");
    }
    uint64_t q = field->size();
    if (n2 < 1 || n2 > q + 1) {
        throw PreconditionError("Reed-Solomon length " + std::to_string(n2) + " outside 1.." + std::to_string(q + 1) +
                                " for " + field->name());
    }
    if (l2 > 0 && (n2 < 2 || 2 * l2 > n2 - 1)) {
        throw PreconditionError("burst target l2 = " + std::to_string(l2) + " outside 1..floor((n2-1)/2)");
    }
    size_t rows = 2 * l2;
    FieldMatrix h(field, rows, n2);
    for (size_t j = 0; j < n2; j++) {
        if (j == q) {
            // Point at infinity: (0, ..., 0, 1).
            h.at(rows - 1, j) = 1;
            continue;
        }
        Elem x = j < q - 1 ? field->pow(field->generator(), j) : 0;
        Elem v = 1;
        for (size_t i = 0; i < rows; i++) {
            h.at(i, j) = v;
            v = field->mul(v, x);
        }
    }
    return LinearCode::from_check(h);
}

bool hermitian_dual_containing(const LinearCode &code) {
    if (!code.field->is_quaternary()) {
        throw PreconditionError("Hermitian dual containment is defined for GF(4) codes, got " + code.field->name());
    }
    const auto &h = code.check_matrix;
    return (h * h.conjugated().transposed()).is_zero();
}

bool binary_dual_containing(const LinearCode &c2, const LinearCode &c1) {
    if (!c1.field->is_binary() || !c2.field->is_binary()) {
        throw PreconditionError("binary dual containment needs two binary codes");
    }
    if (c1.n != c2.n) {
        throw PreconditionError("code lengths differ");
    }
    return (c1.check_matrix * c2.check_matrix.transposed()).is_zero();
}

size_t min_distance_exhaustive(const LinearCode &code, uint64_t max_codewords) {
    uint64_t q = code.field->size();
    long double total = 1;
    for (size_t i = 0; i < code.k; i++) {
        total *= q;
    }
    if (total > static_cast<long double>(max_codewords)) {
        throw ResourceLimitError("codebook larger than enumeration limit");
    }
    size_t best = code.n + 1;
    std::vector<Elem> msg(code.k, 0);
    std::vector<Elem> word(code.n);
    while (true) {
        size_t j = code.k;
        while (j-- > 0) {
            msg[j]++;
            if (msg[j] < q) {
                break;
            }
            msg[j] = 0;
        }
        if (j == static_cast<size_t>(-1)) {
            break;
        }
        std::fill(word.begin(), word.end(), 0);
        for (size_t i = 0; i < code.k; i++) {
            if (msg[i] == 0) {
                continue;
            }
            for (size_t c = 0; c < code.n; c++) {
                word[c] ^= code.field->mul(msg[i], code.gen_matrix.at(i, c));
            }
        }
        size_t w = 0;
        for (Elem e : word) {
            w += e != 0;
        }
        best = std::min(best, w);
    }
    return best;
}

}  // namespace qbecc
