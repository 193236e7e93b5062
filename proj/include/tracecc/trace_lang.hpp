#pragma once

#include <set>

#include "tracecc/cc.hpp"

namespace tracecc {

// Column adjacent to the center, computed one-sidedly under the assumption that
// the central column is z: values at times t = 0..n-1.
// side == right: v lives on [1..n], the column is cell 1.
// side == left: v lives on [-n..-1], the column is cell -1 (everything mirrored).
Word forward_column(const Rule& rule, const Word& z, const Word& v, CcSide side);

// |T_{f->z}(A^{[1..n]})| (or the mirrored image for the left side).
std::uint64_t forward_image_size(const Rule& rule, const Word& z, CcSide side);

// Canonically (lexicographically) ordered image of forward_column.
std::vector<Word> forward_image(const Rule& rule, const Word& z, CcSide side);

// tau_{f->z}: column-1 traces of full valid triangles whose central trace is z.
// Empty iff z is unattainable. Sorted lexicographically.
std::vector<Word> tau_set(const Rule& rule, const Word& z, CcSide side);

// |T_f^{[0..k-1]}(A^{[-n..n]})|.
std::uint64_t trace_language_count(const Rule& rule, int width, int n);

struct EntropyEstimate {
    int width = 1;
    struct Sample {
        int n;
        std::uint64_t count;
        double slope;  // log2(count) / n
    };
    std::vector<Sample> samples;
    bool equicontinuity_like = false;  // counts constant over the top half of the range
};

EntropyEstimate entropy_estimate(const Rule& rule, int width, int n_max);

}  // namespace tracecc
