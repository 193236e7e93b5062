#pragma once

#include <optional>
#include <utility>

#include "tracecc/ca.hpp"

namespace tracecc {

enum class CcSide { left, right };

inline int ceil_log2(std::uint64_t x) {
    int bits = 0;
    while ((std::uint64_t{1} << bits) < x) ++bits;
    return bits;
}

// Row index i encodes Alice's word: u_{-1-k} = digit k of i in base q.
// Column index j encodes Bob's word: v_{1+k} = digit k of j in base q.
Word decode_left(std::uint64_t index, int n, int q);
Word decode_right(std::uint64_t index, int n, int q);
std::uint64_t encode_left(const Word& u, int q);
std::uint64_t encode_right(const Word& v, int q);

// Evaluates f̂_z(u,v) (1 iff the central trace of u z_0 v differs from z) and,
// on demand, the top cell f^n(u z_0 v)_0. Bit-parallel for binary rules.
class HatOracle {
public:
    HatOracle(const Rule& rule, const Word& z);

    int n() const { return n_; }
    std::uint64_t side() const { return side_; }
    const Rule& rule() const { return rule_; }
    const Word& z() const { return z_; }

    bool hat(std::uint64_t row, std::uint64_t col) const;
    // (hat value, top letter); always runs the full n steps.
    std::pair<bool, Letter> hat_top(std::uint64_t row, std::uint64_t col) const;

private:
    Rule rule_;
    Word z_;
    int n_;
    std::uint64_t side_;
    bool binary_;
    unsigned rule_bits_ = 0;
    std::uint64_t z_bits_ = 0;
    std::vector<std::uint32_t> left_bits_, right_bits_;  // per-index cell masks (binary fast path)
};

// The q^n x q^n matrix of f̂_z with the classical top-cell overlay.
struct CcMatrix {
    Rule rule;
    Word z;        // target trace, length n+1, time-indexed from 0
    int n = 0;
    std::uint64_t side = 0;  // q^n
    std::vector<std::uint8_t> hat;  // row-major, 0 or 1
    std::vector<Letter> top;        // row-major, f^n(u z_0 v)_0

    std::uint8_t hat_at(std::uint64_t i, std::uint64_t j) const { return hat[i * side + j]; }
    Letter top_at(std::uint64_t i, std::uint64_t j) const { return top[i * side + j]; }
};

// workers = 0 picks a default; identical bytes regardless of worker count.
CcMatrix build_matrix(const Rule& rule, const Word& z, unsigned workers = 0);

struct DistinctCounts {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
};

DistinctCounts distinct_counts(const CcMatrix& m);
// Streaming variant with early-exit trace evaluation; avoids storing top letters.
DistinctCounts distinct_counts(const Rule& rule, const Word& z);

int one_round_cc(const CcMatrix& m, CcSide side);

// Minimal protocol-tree depth. Internal node: one bit from one player splitting
// that player's index set in two. Leaf: one player can produce the answer
// (all rows of the sub-rectangle equal, or all columns equal).
int multiround_exact(const CcMatrix& m);

struct FoolingSet {
    int n = 0;
    Word z;
    int common_value = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // (row, col) indices

    std::uint64_t size() const { return pairs.size(); }
    int bound_bits() const { return ceil_log2(pairs.empty() ? 1 : pairs.size()); }
};

enum class FoolingMode { greedy, exact };

FoolingSet fooling_set(const CcMatrix& m, FoolingMode mode);

// Re-checks both fooling-set invariants against a fresh oracle.
// Returns a description of the first violation, or nullopt when valid.
std::optional<std::string> check_fooling(const Rule& rule, const Word& z, const FoolingSet& s);

// (rank over GF(2), rank over the rationals) of the hat matrix.
std::pair<std::uint64_t, std::uint64_t> rank_diagnostics(const CcMatrix& m);

struct BoundsReport {
    int n = 0;
    int q = 2;
    Word z;
    std::uint64_t distinct_rows = 0, distinct_cols = 0;
    int left_cc_bits = 0, right_cc_bits = 0;
    std::optional<int> multiround_exact_bits;
    std::optional<std::uint64_t> fooling_size;
    std::optional<int> fooling_bound_bits;
    std::optional<std::uint64_t> rank_gf2, rank_rational;
    std::optional<std::uint64_t> right_image_size, left_image_size;
    std::optional<std::uint64_t> right_tau_size, left_tau_size;
    std::optional<int> right_image_bits, left_image_bits;
    std::optional<int> right_tau_bits, left_tau_bits;
};

// Consolidated report; fields whose computation exceeds a budget are absent.
BoundsReport cc_bounds(const Rule& rule, const Word& z);

}  // namespace tracecc
