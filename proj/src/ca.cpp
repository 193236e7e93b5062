#include "tracecc/ca.hpp"

namespace tracecc {

Word apply_step(const Rule& rule, const Word& w, std::optional<Letter> left_boundary) {
    const int i = w.lo, j = w.hi();
    if (left_boundary) {
        if (j - i < 1) throw std::invalid_argument("apply_step: word too short");
        Word out(i, std::vector<Letter>(static_cast<std::size_t>(j - i)));
        out.at(i) = rule.apply(*left_boundary, w.at(i), w.at(i + 1));
        for (int k = i + 1; k <= j - 1; ++k) out.at(k) = rule.apply(w.at(k - 1), w.at(k), w.at(k + 1));
        return out;
    }
    if (j - i < 2) throw std::invalid_argument("apply_step: word too short");
    Word out(i + 1, std::vector<Letter>(static_cast<std::size_t>(j - i - 1)));
    for (int k = i + 1; k <= j - 1; ++k) out.at(k) = rule.apply(w.at(k - 1), w.at(k), w.at(k + 1));
    return out;
}

Triangle build_triangle(const Rule& rule, const Word& w) {
    if (!w.centered()) throw std::invalid_argument("build_triangle: configuration must be centered");
    const int n = w.radius();
    Triangle tri;
    tri.base = w;
    tri.rows.reserve(static_cast<std::size_t>(n) + 1);
    tri.rows.push_back(w);
    for (int t = 0; t < n; ++t) tri.rows.push_back(apply_step(rule, tri.rows.back()));
    return tri;
}

TraceWord compute_trace(const Rule& rule, const Word& w, int col_lo, int col_hi) {
    if (!w.centered()) throw std::invalid_argument("compute_trace: configuration must be centered");
    const int n = w.radius();
    if (col_lo > col_hi || col_lo < -n || col_hi > n)
        throw std::invalid_argument("compute_trace: column interval outside base");
    const int tmax = n - std::max(col_lo < 0 ? -col_lo : col_lo, col_hi < 0 ? -col_hi : col_hi);
    TraceWord tr;
    tr.col_lo = col_lo;
    tr.col_hi = col_hi;
    Word row = w;
    for (int t = 0; t <= tmax; ++t) {
        tr.values.push_back(row.slice(col_lo, col_hi));
        if (t < tmax) row = apply_step(rule, row);
    }
    return tr;
}

Word central_trace(const Rule& rule, const Word& w) {
    TraceWord tr = compute_trace(rule, w, 0, 0);
    Word out(0, {});
    out.letters.reserve(tr.values.size());
    for (const Word& v : tr.values) out.letters.push_back(v.letters[0]);
    return out;
}

BinStepper::BinStepper(const Rule& rule) {
    if (rule.q != 2) throw std::invalid_argument("BinStepper: binary rules only");
    bits_ = static_cast<unsigned>(rule_to_number(rule));
}

}  // namespace tracecc
