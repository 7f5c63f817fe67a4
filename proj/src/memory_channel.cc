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

#include "qbecc/memory_channel.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "qbecc/errors.h"
#include "qbecc/parallel.h"

namespace qbecc {

ChannelModel::ChannelModel(double p, double mu) : p(p), mu(mu) {
    if (!(p >= 0 && p <= 1)) {
        throw PreconditionError("p must lie in [0, 1]");
    }
    if (!(mu >= 0 && mu <= 1)) {
        throw PreconditionError("mu must lie in [0, 1]");
    }
}

double cond_prob(int l, int k, const ChannelModel &ch) {
    if (l < 0 || l > 3 || k < 0 || k > 3) {
        throw PreconditionError("symbol codes must lie in 0..3");
    }
    return (1 - ch.mu) * ch.marginal(l) + (l == k ? ch.mu : 0.0);
}

double error_prob(const SymplecticVector &e, const ChannelModel &ch) {
    size_t n = e.n();
    if (n == 0) {
        return 1;
    }
    int prev = e.symbol(0).v;
    long double prob = ch.marginal(prev);
    for (size_t i = 1; i < n; i++) {
        int cur = e.symbol(i).v;
        prob *= cond_prob(cur, prev, ch);
        prev = cur;
    }
    return static_cast<double>(prob);
}

double error_prob(const PauliError &e, const ChannelModel &ch) {
    return error_prob(e.sym, ch);
}

std::string decoder_mode_name(DecoderMode mode) {
    switch (mode) {
        case DecoderMode::kRandom:
            return "random";
        case DecoderMode::kBurst:
            return "burst";
        case DecoderMode::kCombined:
            return "combined";
    }
    return "?";
}

DecoderMode parse_decoder_mode(std::string_view name) {
    if (name == "random") {
        return DecoderMode::kRandom;
    }
    if (name == "burst") {
        return DecoderMode::kBurst;
    }
    if (name == "combined") {
        return DecoderMode::kCombined;
    }
    throw ParseError("unknown decoder '" + std::string(name) + "' (expected combined, random or burst)");
}

std::string ef_strategy_name(EfStrategy s) {
    return s == EfStrategy::kExact ? "exact" : "truncated";
}

namespace {

// Packed syndrome / class contributions of single-qubit Paulis, indexed
// 4 * position + symbol.
struct Masks64 {
    std::vector<uint64_t> syn;
    std::vector<uint64_t> cls;

    explicit Masks64(const StabilizerCode &code) {
        size_t n = code.n();
        if (code.r() > 64 || code.logicals().size() > 64) {
            throw PreconditionError("decoding supports at most 64 stabilizer and 64 logical rows");
        }
        syn.assign(4 * n, 0);
        cls.assign(4 * n, 0);
        auto fill = [&](const std::vector<SymplecticVector> &rows, std::vector<uint64_t> &dst) {
            for (size_t j = 0; j < rows.size(); j++) {
                for (size_t i = 0; i < n; i++) {
                    if (rows[j].b.get(i)) {
                        dst[4 * i + 1] |= uint64_t{1} << j;
                    }
                    if (rows[j].a.get(i)) {
                        dst[4 * i + 2] |= uint64_t{1} << j;
                    }
                }
            }
            for (size_t i = 0; i < n; i++) {
                dst[4 * i + 3] = dst[4 * i + 1] ^ dst[4 * i + 2];
            }
        };
        fill(code.basis(), syn);
        fill(code.logicals(), cls);
    }

    std::pair<uint64_t, uint64_t> of(const SymplecticVector &e) const {
        uint64_t s = 0;
        uint64_t c = 0;
        for (size_t i = 0; i < e.n(); i++) {
            uint8_t v = e.symbol(i).v;
            s ^= syn[4 * i + v];
            c ^= cls[4 * i + v];
        }
        return {s, c};
    }
};

}  // namespace

uint64_t packed_syndrome(const StabilizerCode &code, const SymplecticVector &e) {
    return Masks64(code).of(e).first;
}

uint64_t packed_class(const StabilizerCode &code, const SymplecticVector &e) {
    return Masks64(code).of(e).second;
}

std::optional<SymplecticVector> DecoderTable::recovery(const BitVec &syndrome) const {
    if (syndrome.size() != code_.r()) {
        throw PreconditionError("syndrome length does not match the code");
    }
    int64_t s = slot(syndrome.num_words() ? syndrome.word(0) : 0);
    if (s < 0) {
        return std::nullopt;
    }
    return recoveries_[s];
}

int64_t DecoderTable::slot(uint64_t syndrome) const {
    if (use_dense_) {
        return syndrome < dense_.size() ? dense_[syndrome] : -1;
    }
    auto it = sparse_.find(syndrome);
    return it == sparse_.end() ? -1 : static_cast<int64_t>(it->second);
}

DecoderTable build_decoder(const StabilizerCode &code, const DecoderSpec &spec, uint64_t max_syndromes) {
    size_t n = code.n();
    size_t r = code.r();
    if (r >= 64 || (uint64_t{1} << r) > max_syndromes) {
        throw ResourceLimitError("syndrome space 2^" + std::to_string(r) + " exceeds the decoder limit");
    }
    Masks64 masks(code);
    DecoderTable table;
    table.code_ = code;
    table.spec_ = spec;
    table.use_dense_ = r <= 26;
    if (table.use_dense_) {
        table.dense_.assign(size_t{1} << r, -1);
    }
    uint64_t capacity = uint64_t{1} << r;

    auto offer = [&](const std::vector<size_t> &pos, const std::vector<uint8_t> &sym) {
        uint64_t s = 0;
        uint64_t c = 0;
        for (size_t i = 0; i < pos.size(); i++) {
            s ^= masks.syn[4 * pos[i] + sym[i]];
            c ^= masks.cls[4 * pos[i] + sym[i]];
        }
        if (table.slot(s) >= 0) {
            return;
        }
        SymplecticVector e(n);
        for (size_t i = 0; i < pos.size(); i++) {
            e.set_symbol(pos[i], F4(sym[i]));
        }
        uint32_t idx = static_cast<uint32_t>(table.recoveries_.size());
        table.recoveries_.push_back(std::move(e));
        table.classes_.push_back(c);
        if (table.use_dense_) {
            table.dense_[s] = static_cast<int32_t>(idx);
        } else {
            table.sparse_.emplace(s, idx);
        }
    };
    auto full = [&] { return table.recoveries_.size() == capacity; };

    size_t max_weight = spec.mode == DecoderMode::kBurst ? 1 : spec.t;
    for (size_t w = 0; w <= std::min(max_weight, n) && !full(); w++) {
        std::vector<size_t> pos(w);
        for (size_t i = 0; i < w; i++) {
            pos[i] = i;
        }
        while (true) {
            std::vector<uint8_t> sym(w, 1);
            while (true) {
                offer(pos, sym);
                size_t j = w;
                while (j-- > 0) {
                    if (++sym[j] <= 3) {
                        break;
                    }
                    sym[j] = 1;
                }
                if (j == static_cast<size_t>(-1)) {
                    break;
                }
            }
            // Next combination in lexicographic order.
            size_t i = w;
            while (i-- > 0) {
                if (pos[i] < n - w + i) {
                    break;
                }
            }
            if (i == static_cast<size_t>(-1)) {
                break;
            }
            pos[i]++;
            for (size_t j = i + 1; j < w; j++) {
                pos[j] = pos[j - 1] + 1;
            }
        }
    }

    if (spec.mode != DecoderMode::kRandom) {
        for (size_t span = 2; span <= std::min(spec.l, n) && !full(); span++) {
            for (size_t start = 0; start + span <= n; start++) {
                std::vector<uint8_t> digits(span, 0);
                digits[0] = 1;
                digits[span - 1] = 1;
                while (true) {
                    std::vector<size_t> p;
                    std::vector<uint8_t> s;
                    for (size_t j = 0; j < span; j++) {
                        if (digits[j]) {
                            p.push_back(start + j);
                            s.push_back(digits[j]);
                        }
                    }
                    offer(p, s);
                    size_t j = span;
                    while (j-- > 0) {
                        if (++digits[j] <= 3) {
                            break;
                        }
                        digits[j] = (j == 0 || j == span - 1) ? 1 : 0;
                    }
                    if (j == static_cast<size_t>(-1)) {
                        break;
                    }
                }
            }
        }
    }
    return table;
}

bool decode_succeeds(const DecoderTable &table, const SymplecticVector &e) {
    Masks64 masks(table.code());
    auto [s, c] = masks.of(e);
    int64_t idx = table.slot(s);
    return idx >= 0 && table.recovery_class(static_cast<size_t>(idx)) == c;
}

namespace {

struct Accum {
    long double success = 0;
    long double enumerated = 0;
    long double pruned = 0;
    uint64_t leaves = 0;
};

struct EfWalker {
    const DecoderTable &table;
    const Masks64 &masks;
    size_t n;
    double marg[4];
    double cond[4][4];  // cond[prev][cur]
    bool truncated;
    size_t w_max;
    size_t span_max;
    double expand_above;
    uint64_t max_leaves;

    void leaf(double prob, uint64_t s, uint64_t c, Accum &acc) const {
        acc.enumerated += prob;
        int64_t idx = table.slot(s);
        if (idx >= 0 && table.recovery_class(static_cast<size_t>(idx)) == c) {
            acc.success += prob;
        }
        if (++acc.leaves > max_leaves) {
            throw ResourceLimitError("fidelity enumeration exceeded " + std::to_string(max_leaves) + " error patterns");
        }
    }

    // Prefix [0, pos) fixed with last symbol prev.
    void exact(size_t pos, int prev, double prob, uint64_t s, uint64_t c, Accum &acc) const {
        if (pos == n) {
            leaf(prob, s, c, acc);
            return;
        }
        for (int sym = 0; sym < 4; sym++) {
            exact(pos + 1, sym, prob * cond[prev][sym], s ^ masks.syn[4 * pos + sym], c ^ masks.cls[4 * pos + sym],
                  acc);
        }
    }

    bool outside(size_t weight, size_t first, size_t last) const {
        return weight > w_max && last - first + 1 > span_max;
    }

    void trunc(size_t pos, int prev, double prob, uint64_t s, uint64_t c, size_t weight, size_t first, size_t last,
               Accum &acc) const {
        if (pos == n) {
            leaf(prob, s, c, acc);
            return;
        }
        for (int sym = 0; sym < 4; sym++) {
            double q = prob * cond[prev][sym];
            size_t w = weight;
            size_t f = first;
            size_t l = last;
            if (sym != 0) {
                w++;
                f = weight == 0 ? pos : first;
                l = pos;
            }
            if (w > 0 && outside(w, f, l) && q < expand_above) {
                acc.pruned += q;
                continue;
            }
            trunc(pos + 1, sym, q, s ^ masks.syn[4 * pos + sym], c ^ masks.cls[4 * pos + sym], w, f, l, acc);
        }
    }
};

}  // namespace

EfResult entanglement_fidelity(const DecoderTable &table, const ChannelModel &ch, const EfOptions &options) {
    const StabilizerCode &code = table.code();
    size_t n = code.n();
    if (n == 0) {
        throw PreconditionError("empty code");
    }
    bool truncated = options.strategy == EfStrategy::kTruncated;
    if (!truncated && n > options.max_exact_n) {
        throw ResourceLimitError("exact fidelity enumerates 4^" + std::to_string(n) + " errors; limit is n <= " +
                                 std::to_string(options.max_exact_n));
    }
    Masks64 masks(code);
    EfWalker walker{table, masks, n, {}, {}, truncated, options.w_max,
                    options.burst_span.value_or(table.spec().l), options.expand_above, options.max_leaves};
    for (int a = 0; a < 4; a++) {
        walker.marg[a] = ch.marginal(a);
        for (int b = 0; b < 4; b++) {
            walker.cond[a][b] = cond_prob(b, a, ch);
        }
    }

    // Partition on a fixed-length prefix; each part sums independently and the
    // parts are merged in index order.
    size_t prefix = truncated ? 1 : std::min<size_t>(3, n);
    size_t parts = size_t{1} << (2 * prefix);
    std::vector<Accum> acc(parts);
    parallel_for(parts, options.workers, [&](size_t part, size_t) {
        std::vector<int> sym(prefix);
        for (size_t i = 0; i < prefix; i++) {
            sym[i] = static_cast<int>((part >> (2 * (prefix - 1 - i))) & 3);
        }
        double prob = walker.marg[sym[0]];
        uint64_t s = masks.syn[sym[0]];
        uint64_t c = masks.cls[sym[0]];
        for (size_t i = 1; i < prefix; i++) {
            prob *= walker.cond[sym[i - 1]][sym[i]];
            s ^= masks.syn[4 * i + sym[i]];
            c ^= masks.cls[4 * i + sym[i]];
        }
        if (!truncated) {
            walker.exact(prefix, sym[prefix - 1], prob, s, c, acc[part]);
            return;
        }
        size_t weight = sym[0] != 0;
        if (weight > 0 && walker.outside(weight, 0, 0) && prob < walker.expand_above) {
            acc[part].pruned += prob;
            return;
        }
        walker.trunc(1, sym[0], prob, s, c, weight, 0, 0, acc[part]);
    });

    Accum total;
    for (const auto &a : acc) {
        total.success += a.success;
        total.enumerated += a.enumerated;
        total.pruned += a.pruned;
        total.leaves += a.leaves;
    }
    EfResult out;
    out.exact = !truncated;
    out.ef_lower = static_cast<double>(total.success);
    long double slack = std::fabs(1.0L - (total.enumerated + total.pruned));
    out.residual = static_cast<double>(total.pruned + slack);
    out.errors_enumerated = total.leaves;
    return out;
}

std::vector<SweepRow> sweep(const std::string &code_id, const DecoderTable &table, const std::vector<double> &ps,
                            const std::vector<double> &mus, const EfOptions &options) {
    std::vector<SweepRow> rows;
    for (double p : ps) {
        for (double mu : mus) {
            SweepRow row;
            row.code = code_id;
            row.decoder = table.spec().mode;
            row.strategy = options.strategy;
            row.p = p;
            row.mu = mu;
            row.ef = entanglement_fidelity(table, ChannelModel(p, mu), options);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

double parse_number(std::string_view text, std::string_view whole) {
    std::string s(text);
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw ParseError("bad number '" + s + "' in range '" + std::string(whole) + "'");
    }
    return v;
}

double snap(double v) {
    return std::strtod(format_double(v).c_str(), nullptr);
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
    if (text.find(',') != std::string_view::npos) {
        std::vector<double> out;
        size_t begin = 0;
        while (true) {
            size_t comma = text.find(',', begin);
            auto piece = text.substr(begin, comma == std::string_view::npos ? std::string_view::npos : comma - begin);
            for (double v : parse_grid(piece)) {
                out.push_back(v);
            }
            if (comma == std::string_view::npos) {
                return out;
            }
            begin = comma + 1;
        }
    }
    std::vector<std::string_view> parts;
    size_t begin = 0;
    while (true) {
        size_t colon = text.find(':', begin);
        parts.push_back(text.substr(begin, colon == std::string_view::npos ? std::string_view::npos : colon - begin));
        if (colon == std::string_view::npos) {
            break;
        }
        begin = colon + 1;
    }
    if (parts.size() == 1) {
        return {parse_number(parts[0], text)};
    }
    if (parts.size() >= 3 && parts[1] == "log") {
        if (parts.size() > 4) {
            throw ParseError("log range takes start:log:end[:per_decade], got '" + std::string(text) + "'");
        }
        double start = parse_number(parts[0], text);
        double end = parse_number(parts[2], text);
        double per_decade = parts.size() == 4 ? parse_number(parts[3], text) : 4;
        if (!(start > 0) || !(end >= start) || !(per_decade >= 1) || per_decade != std::floor(per_decade)) {
            throw ParseError("log range needs 0 < start <= end and a positive integer density: '" +
                             std::string(text) + "'");
        }
        long count = std::lround(std::log10(end / start) * per_decade);
        std::vector<double> out;
        for (long i = 0; i <= count; i++) {
            out.push_back(snap(start * std::pow(10.0, static_cast<double>(i) / per_decade)));
        }
        return out;
    }
    if (parts.size() != 3) {
        throw ParseError("range must be a number, start:step:end or start:log:end[:N], got '" + std::string(text) +
                         "'");
    }
    double start = parse_number(parts[0], text);
    double step = parse_number(parts[1], text);
    double end = parse_number(parts[2], text);
    if (!(step > 0) || end < start) {
        throw ParseError("range needs a positive step and start <= end: '" + std::string(text) + "'");
    }
    std::vector<double> out;
    for (long i = 0;; i++) {
        double v = start + static_cast<double>(i) * step;
        if (v > end + 1e-9 * step) {
            break;
        }
        out.push_back(snap(v));
        if (out.size() > 1000000) {
            throw ParseError("range '" + std::string(text) + "' has too many points");
        }
    }
    return out;
}

std::string sweep_csv_header() {
    return "code,decoder,strategy,p,mu,ef_lower,ef_residual,exact";
}

std::string sweep_csv_row(const SweepRow &row) {
    return row.code + "," + decoder_mode_name(row.decoder) + "," + ef_strategy_name(row.strategy) + "," +
           format_double(row.p) + "," + format_double(row.mu) + "," + format_double(row.ef.ef_lower) + "," +
           format_double(row.ef.residual) + "," + (row.ef.exact ? "true" : "false");
}

}  // namespace qbecc
