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

#include "qbecc/burst_analyzer.h"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "qbecc/errors.h"
#include "qbecc/parallel.h"

namespace qbecc {

BurstIterator::BurstIterator(size_t n, size_t l) : n_(n), l_(l) {
    if (l > n) {
        throw PreconditionError("burst length " + std::to_string(l) + " exceeds code length " + std::to_string(n));
    }
}

bool BurstIterator::next(SymplecticVector &out) {
    auto load = [&](size_t start) {
        start_ = start;
        digits_.assign(std::min(l_, n_ - start), 0);
        digits_[0] = 1;
    };
    if (!started_) {
        started_ = true;
        out = SymplecticVector(n_);
        if (l_ > 0) {
            load(0);
        }
        return true;
    }
    if (digits_.empty()) {
        return false;
    }
    out = SymplecticVector(n_);
    for (size_t j = 0; j < digits_.size(); j++) {
        out.set_symbol(start_ + j, F4(digits_[j]));
    }
    size_t j = digits_.size();
    while (j-- > 0) {
        if (++digits_[j] < 4) {
            return true;
        }
        digits_[j] = 0;
    }
    if (start_ + 1 < n_) {
        load(start_ + 1);
    } else {
        digits_.clear();
    }
    return true;
}

BurstIterator enumerate_bursts(size_t n, size_t l) {
    return BurstIterator(n, l);
}

uint64_t burst_count(size_t n, size_t l) {
    if (l > n) {
        throw PreconditionError("burst length exceeds code length");
    }
    long double total = 0;
    for (size_t s = 0; s < n && l > 0; s++) {
        size_t w = std::min(l, n - s);
        long double c = 3;
        for (size_t j = 1; j < w; j++) {
            c *= 4;
        }
        total += c;
    }
    if (total > static_cast<long double>(std::numeric_limits<uint64_t>::max() / 2)) {
        return std::numeric_limits<uint64_t>::max() / 2;
    }
    return static_cast<uint64_t>(total);
}

size_t qrb(size_t n, size_t k) {
    if (k > n) {
        throw PreconditionError("k exceeds n");
    }
    return (n - k) / 4;
}

QrbCheck check_qrb(size_t n, size_t k, const BurstAnalysis &analysis) {
    size_t bound = qrb(n, k);
    return QrbCheck{analysis.l <= bound, analysis.l == bound};
}

bool no_cloning_check(size_t n, size_t l) {
    return n > 4 * l;
}

namespace {

using Key = std::array<uint64_t, 2>;

void key_set(Key &k, size_t bit) {
    k[bit >> 6] |= uint64_t{1} << (bit & 63);
}

Key key_xor(const Key &x, const Key &y) {
    return Key{x[0] ^ y[0], x[1] ^ y[1]};
}

// Syndrome and logical-class masks of every single-qubit Pauli, indexed
// 4 * position + symbol.
struct PauliMasks {
    std::vector<Key> syn;
    std::vector<Key> cls;

    explicit PauliMasks(const StabilizerCode &code) {
        size_t n = code.n();
        if (code.r() > 128 || code.logicals().size() > 128) {
            throw PreconditionError("burst analysis supports at most 128 stabilizer and 128 logical rows");
        }
        syn.assign(4 * n, Key{0, 0});
        cls.assign(4 * n, Key{0, 0});
        auto fill = [&](const std::vector<SymplecticVector> &rows, std::vector<Key> &dst) {
            for (size_t j = 0; j < rows.size(); j++) {
                for (size_t i = 0; i < n; i++) {
                    // X_i anticommutes with rows having Z on i, Z_i with rows having X.
                    if (rows[j].b.get(i)) {
                        key_set(dst[4 * i + 1], j);
                    }
                    if (rows[j].a.get(i)) {
                        key_set(dst[4 * i + 2], j);
                    }
                }
            }
            for (size_t i = 0; i < n; i++) {
                dst[4 * i + 3] = key_xor(dst[4 * i + 1], dst[4 * i + 2]);
            }
        };
        fill(code.basis(), syn);
        fill(code.logicals(), cls);
    }
};

constexpr size_t kMaxWindow = 28;

// start in the low 8 bits, then 2 bits per window offset.
SymplecticVector unpack_id(uint64_t id, size_t n) {
    SymplecticVector v(n);
    size_t start = id & 0xff;
    uint64_t pattern = id >> 8;
    for (size_t j = 0; pattern != 0; j++, pattern >>= 2) {
        v.set_symbol(start + j, F4(static_cast<uint8_t>(pattern & 3)));
    }
    return v;
}

Key class_of(uint64_t id, const PauliMasks &masks) {
    Key c{0, 0};
    size_t start = id & 0xff;
    uint64_t pattern = id >> 8;
    for (size_t j = 0; pattern != 0; j++, pattern >>= 2) {
        if (pattern & 3) {
            c = key_xor(c, masks.cls[4 * (start + j) + (pattern & 3)]);
        }
    }
    return c;
}

struct Entry {
    Key syn;
    uint64_t id;
    uint8_t bl;

    bool operator<(const Entry &o) const {
        if (syn != o.syn) {
            return syn < o.syn;
        }
        if (bl != o.bl) {
            return bl < o.bl;
        }
        return id < o.id;
    }
};

uint64_t key_hash(const Key &k) {
    uint64_t h = k[0] * 0x9e3779b97f4a7c15ULL ^ (k[1] + 0x632be59bd9b4e019ULL) * 0xbf58476d1ce4e5b9ULL;
    return h ^ (h >> 31);
}

struct LevelResult {
    size_t min_bad = std::numeric_limits<size_t>::max();
    Key bad_syn{0, 0};
    uint64_t bad_first = 0;
    uint64_t bad_other = 0;
    size_t min_second = std::numeric_limits<size_t>::max();
    uint64_t checked_pairs = 0;
    uint64_t bursts = 0;
};

// Emits every nonzero burst whose first symbol sits at `start` with window w.
template <typename Sink>
void emit_bursts(size_t start, size_t w, const PauliMasks &masks, Sink &&sink) {
    struct Frame {
        Key syn;
        uint64_t pattern;
        size_t bl;
    };
    auto rec = [&](auto &&self, size_t j, const Frame &f) -> void {
        if (j == w) {
            sink(f.syn, static_cast<uint64_t>(start) | (f.pattern << 8), f.bl);
            return;
        }
        if (j > 0) {
            self(self, j + 1, f);
        }
        for (uint64_t s = 1; s < 4; s++) {
            Frame g{key_xor(f.syn, masks.syn[4 * (start + j) + s]), f.pattern | (s << (2 * j)), j + 1};
            self(self, j + 1, g);
        }
    };
    rec(rec, 0, Frame{Key{0, 0}, 0, 0});
}

LevelResult analyze_level(const StabilizerCode &code, const PauliMasks &masks, size_t L,
                          const AnalyzerOptions &options) {
    size_t n = code.n();
    LevelResult res;
    uint64_t total = burst_count(n, L) + 1;
    uint64_t passes = std::max<uint64_t>(1, (total + options.entries_per_pass - 1) / options.entries_per_pass);
    size_t workers = resolve_workers(options.workers);

    for (uint64_t pass = 0; pass < passes; pass++) {
        std::vector<std::vector<Entry>> per_start(n);
        parallel_for(L == 0 ? 0 : n, workers, [&](size_t start, size_t) {
            size_t w = std::min(L, n - start);
            auto &out = per_start[start];
            emit_bursts(start, w, masks, [&](const Key &syn, uint64_t id, size_t bl) {
                if (passes == 1 || key_hash(syn) % passes == pass) {
                    out.push_back(Entry{syn, id, static_cast<uint8_t>(bl)});
                }
            });
        });
        std::vector<Entry> entries;
        if (passes == 1 || key_hash(Key{0, 0}) % passes == pass) {
            entries.push_back(Entry{Key{0, 0}, 0, 0});
        }
        size_t size = entries.size();
        for (const auto &v : per_start) {
            size += v.size();
        }
        entries.reserve(size);
        for (auto &v : per_start) {
            entries.insert(entries.end(), v.begin(), v.end());
            std::vector<Entry>().swap(v);
        }
        std::sort(entries.begin(), entries.end());

        for (size_t i = 0; i < entries.size();) {
            size_t j = i + 1;
            while (j < entries.size() && entries[j].syn == entries[i].syn) {
                j++;
            }
            if (j - i >= 2) {
                res.min_second = std::min<size_t>(res.min_second, entries[i + 1].bl);
                Key c0 = class_of(entries[i].id, masks);
                for (size_t m = i + 1; m < j; m++) {
                    if (entries[m].bl > res.min_bad) {
                        break;
                    }
                    res.checked_pairs++;
                    if (class_of(entries[m].id, masks) != c0) {
                        bool better = entries[m].bl < res.min_bad ||
                                      (entries[m].bl == res.min_bad && entries[i].syn < res.bad_syn);
                        if (better) {
                            res.min_bad = entries[m].bl;
                            res.bad_syn = entries[i].syn;
                            res.bad_first = entries[i].id;
                            res.bad_other = entries[m].id;
                        }
                        break;
                    }
                }
            }
            i = j;
        }
        res.bursts += entries.size();
    }
    return res;
}

}  // namespace

BurstAnalysis quantum_burst_capability(const StabilizerCode &code, const AnalyzerOptions &options) {
    size_t n = code.n();
    if (n > 255) {
        throw PreconditionError("burst analysis supports n <= 255");
    }
    if (options.entries_per_pass == 0) {
        throw PreconditionError("entries_per_pass must be positive");
    }
    PauliMasks masks(code);
    BurstAnalysis out;
    out.ceiling = qrb(n, code.k());
    if (options.max_l) {
        out.ceiling = std::min(out.ceiling, *options.max_l);
    }
    if (out.ceiling > kMaxWindow) {
        throw ResourceLimitError("burst ceiling " + std::to_string(out.ceiling) + " exceeds supported window " +
                                 std::to_string(kMaxWindow));
    }
    uint64_t full = burst_count(n, out.ceiling);
    if (full > options.max_bursts) {
        throw ResourceLimitError("burst analysis at l = " + std::to_string(out.ceiling) + " needs " +
                                 std::to_string(full) + " bursts (limit " + std::to_string(options.max_bursts) + ")");
    }

    // Cheap shallow levels first: a failure there settles l without touching
    // the far larger enumeration at the ceiling.
    std::vector<size_t> levels;
    for (size_t L = 1; L < out.ceiling && burst_count(n, L) * 8 <= full; L++) {
        levels.push_back(L);
    }
    levels.push_back(out.ceiling);

    for (size_t L : levels) {
        LevelResult res = analyze_level(code, masks, L, options);
        out.checked_pairs += res.checked_pairs;
        out.bursts_enumerated += res.bursts;
        if (res.min_bad <= L || L == out.ceiling) {
            out.l = res.min_bad <= L ? std::min(L, res.min_bad - 1) : L;
            out.degenerate = res.min_second <= out.l;
            if (res.min_bad <= L) {
                out.witness = std::make_pair(unpack_id(res.bad_first, n), unpack_id(res.bad_other, n));
            }
            break;
        }
    }

    if (out.l > qrb(n, code.k())) {
        throw std::logic_error("analyzer result exceeds the quantum Reiger bound");
    }
    if (code.k() >= 1 && !no_cloning_check(n, out.l)) {
        throw std::logic_error("analyzer result violates the no-cloning bound");
    }
    return out;
}

std::optional<SymplecticVector> located_burst_witness(const StabilizerCode &code, size_t start, size_t span) {
    size_t n = code.n();
    if (start + span > n) {
        throw PreconditionError("window [" + std::to_string(start) + ", " + std::to_string(start + span) +
                                ") exceeds code length " + std::to_string(n));
    }
    if (span > 14) {
        throw ResourceLimitError("located burst check enumerates 4^span errors; span " + std::to_string(span) +
                                 " exceeds 14");
    }
    PauliMasks masks(code);
    // Gray code over the 2 * span bits (X and Z parts) of the window.
    std::vector<Key> syn;
    std::vector<Key> cls;
    for (size_t i = start; i < start + span; i++) {
        syn.push_back(masks.syn[4 * i + 1]);
        cls.push_back(masks.cls[4 * i + 1]);
        syn.push_back(masks.syn[4 * i + 2]);
        cls.push_back(masks.cls[4 * i + 2]);
    }
    Key s{0, 0};
    Key c{0, 0};
    uint64_t total = uint64_t{1} << (2 * span);
    for (uint64_t g = 1; g < total; g++) {
        size_t flip = static_cast<size_t>(std::countr_zero(g));
        s = key_xor(s, syn[flip]);
        c = key_xor(c, cls[flip]);
        if (s == Key{0, 0} && c != Key{0, 0}) {
            uint64_t bits = g ^ (g >> 1);
            SymplecticVector v(n);
            for (size_t b = 0; b < 2 * span; b++) {
                if ((bits >> b) & 1) {
                    if (b % 2 == 0) {
                        v.a.flip(start + b / 2);
                    } else {
                        v.b.flip(start + b / 2);
                    }
                }
            }
            return v;
        }
    }
    return std::nullopt;
}

bool located_burst_check(const StabilizerCode &code, size_t start, size_t span) {
    return !located_burst_witness(code, start, span).has_value();
}

}  // namespace qbecc
