#pragma once

#include <optional>

#include "tracecc/rule.hpp"

namespace tracecc {

// Space-time computation triangle of a centered word: row t lives on [t-n..n-t].
struct Triangle {
    Word base;
    std::vector<Word> rows;  // rows[t] = f^t(base), t = 0..n
};

// Trace of a triangle over a column interval [i..j]: one Word per time step
// t = 0..n-max(|i|,|j|).
struct TraceWord {
    int col_lo = 0;
    int col_hi = 0;
    std::vector<Word> values;
};

// One synchronous application of the rule. Without a boundary letter the result
// lives on [i+1..j-1]. With a left boundary letter b (treated as sitting at i-1)
// position i stays computable and the result lives on [i..j-1].
Word apply_step(const Rule& rule, const Word& w, std::optional<Letter> left_boundary = std::nullopt);

Triangle build_triangle(const Rule& rule, const Word& w);

TraceWord compute_trace(const Rule& rule, const Word& w, int col_lo, int col_hi);

// Central-column trace as a single time-indexed word on [0..n].
Word central_trace(const Rule& rule, const Word& w);

// Bit-parallel stepper for binary rules: cell k of a centered width-(2n+1)
// configuration is bit k+n. One step is a constant number of word operations
// per 64 cells; bits near the edges become garbage one cell per step, exactly
// mirroring the shrinking triangle support.
class BinStepper {
public:
    explicit BinStepper(const Rule& rule);

    std::uint64_t step(std::uint64_t w) const {
        const std::uint64_t b = w;
        const std::uint64_t a = w << 1;  // left neighbor
        const std::uint64_t c = w >> 1;  // right neighbor
        std::uint64_t out = 0;
        if (bits_ & 0x01) out |= ~a & ~b & ~c;
        if (bits_ & 0x02) out |= ~a & ~b & c;
        if (bits_ & 0x04) out |= ~a & b & ~c;
        if (bits_ & 0x08) out |= ~a & b & c;
        if (bits_ & 0x10) out |= a & ~b & ~c;
        if (bits_ & 0x20) out |= a & ~b & c;
        if (bits_ & 0x40) out |= a & b & ~c;
        if (bits_ & 0x80) out |= a & b & c;
        return out;
    }

private:
    unsigned bits_;
};

}  // namespace tracecc
