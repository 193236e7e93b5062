#include "tracecc/trace_lang.hpp"

#include <cmath>

namespace tracecc {

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

Word forward_column_right(const Rule& rule, const Word& z, const Word& v) {
    const int n = z.size() - 1;
    std::vector<Letter> cells(v.letters);  // cells 1..n, index k-1
    Word col(0, {});
    col.letters.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        col.letters.push_back(cells[0]);
        if (t == n - 1) break;
        // cells 1..n-t-1 stay alive; cell 1 sees the assumed central letter z_t
        std::vector<Letter> next(cells.size() - 1);
        for (int k = 1; k <= static_cast<int>(next.size()); ++k) {
            Letter a = (k == 1) ? z.at(t) : cells[static_cast<std::size_t>(k - 2)];
            next[static_cast<std::size_t>(k - 1)] =
                rule.apply(a, cells[static_cast<std::size_t>(k - 1)], cells[static_cast<std::size_t>(k)]);
        }
        cells = std::move(next);
    }
    return col;
}

}  // namespace

Word forward_column(const Rule& rule, const Word& z, const Word& v, CcSide side) {
    const int n = z.size() - 1;
    if (n < 1) throw std::invalid_argument("forward_column: need n >= 1");
    if (v.size() != n) throw std::invalid_argument("forward_column: |v| must equal n");
    if (side == CcSide::right) {
        if (v.lo != 1) throw std::invalid_argument("forward_column: right-side word must live on [1..n]");
        return forward_column_right(rule, z, v);
    }
    if (v.hi() != -1) throw std::invalid_argument("forward_column: left-side word must live on [-n..-1]");
    return forward_column_right(mirror_rule(rule), z, mirror_word(v));
}

std::vector<Word> forward_image(const Rule& rule, const Word& z, CcSide side) {
    const int n = z.size() - 1;
    const std::uint64_t count = ipow(static_cast<std::uint64_t>(rule.q), n);
    check_budget(count, "forward_image");
    std::set<Word> image;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Word v = side == CcSide::right ? decode_right(idx, n, rule.q) : decode_left(idx, n, rule.q);
        image.insert(forward_column(rule, z, v, side));
    }
    return {image.begin(), image.end()};
}

std::uint64_t forward_image_size(const Rule& rule, const Word& z, CcSide side) {
    return forward_image(rule, z, side).size();
}

std::vector<Word> tau_set(const Rule& rule, const Word& z, CcSide side) {
    HatOracle oracle(rule, z);
    const int n = oracle.n();
    const std::uint64_t side_count = oracle.side();
    check_budget(side_count * side_count, "tau_set");
    const int col = side == CcSide::right ? 1 : -1;
    std::set<Word> tau;
    for (std::uint64_t i = 0; i < side_count; ++i)
        for (std::uint64_t j = 0; j < side_count; ++j) {
            if (oracle.hat(i, j)) continue;
            Word w(-n, {});
            Word u = decode_left(i, n, rule.q), v = decode_right(j, n, rule.q);
            w.letters.insert(w.letters.end(), u.letters.begin(), u.letters.end());
            w.letters.push_back(z.at(0));
            w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
            TraceWord tr = compute_trace(rule, w, col, col);
            Word column(0, {});
            for (const Word& row : tr.values) column.letters.push_back(row.letters[0]);
            tau.insert(std::move(column));
        }
    return {tau.begin(), tau.end()};
}

std::uint64_t trace_language_count(const Rule& rule, int width, int n) {
    if (width < 1 || n < width) throw std::invalid_argument("trace_language_count: need 1 <= width <= n");
    const std::uint64_t configs = ipow(static_cast<std::uint64_t>(rule.q), 2 * n + 1);
    check_budget(configs, "trace_language_count");
    const int tmax = n - (width - 1);
    std::set<std::vector<Letter>> language;
    std::vector<Letter> base(static_cast<std::size_t>(2 * n + 1));
    for (std::uint64_t idx = 0; idx < configs; ++idx) {
        std::uint64_t x = idx;
        for (auto& l : base) {
            l = static_cast<Letter>(x % rule.q);
            x /= static_cast<unsigned>(rule.q);
        }
        std::vector<Letter> key;
        key.reserve(static_cast<std::size_t>((tmax + 1) * width));
        std::vector<Letter> buf = base, next(base.size());
        for (int t = 0; t <= tmax; ++t) {
            for (int c = 0; c < width; ++c) key.push_back(buf[static_cast<std::size_t>(n + c)]);
            if (t == tmax) break;
            for (int k = t + 1; k <= 2 * n - t - 1; ++k)
                next[static_cast<std::size_t>(k)] = rule.apply(buf[static_cast<std::size_t>(k - 1)],
                                                               buf[static_cast<std::size_t>(k)],
                                                               buf[static_cast<std::size_t>(k + 1)]);
            std::swap(buf, next);
        }
        language.insert(std::move(key));
    }
    return language.size();
}

EntropyEstimate entropy_estimate(const Rule& rule, int width, int n_max) {
    if (width < 1 || n_max < width) throw std::invalid_argument("entropy_estimate: need 1 <= width <= n_max");
    EntropyEstimate est;
    est.width = width;
    for (int n = width; n <= n_max; ++n) {
        std::uint64_t count = trace_language_count(rule, width, n);
        est.samples.push_back({n, count, std::log2(static_cast<double>(count)) / n});
    }
    // finite-scale heuristic only: counts constant over the top half of the range
    const std::size_t half = est.samples.size() / 2;
    est.equicontinuity_like = true;
    for (std::size_t i = half; i < est.samples.size(); ++i)
        if (est.samples[i].count != est.samples[half].count) { est.equicontinuity_like = false; break; }
    return est;
}

}  // namespace tracecc
