#pragma once

#include <boost/rational.hpp>
#include <iosfwd>

#include "tracecc/cc.hpp"

namespace tracecc {

using Rational = boost::rational<long long>;

// A subshift of finite type: words avoiding every forbidden factor.
struct SubshiftSpec {
    int q = 2;
    int width = 0;  // widest interval the spec is meant to describe
    std::vector<std::vector<Letter>> forbidden;

    static SubshiftSpec full_shift(int q, int width);
    // {11} U {1 0^{2k} 1 : 2k+2 <= width} over the binary alphabet.
    static SubshiftSpec odd_gap(int width);

    bool allows(const std::vector<Letter>& word) const;  // no forbidden factor
    int longest_forbidden() const;
};

// Text format: one forbidden word per line as digits; blank lines and
// #-comments skipped. The directive "@oddgap W" expands to odd_gap(W).
SubshiftSpec read_subshift(std::istream& in);
void write_subshift(std::ostream& out, const SubshiftSpec& spec);

// All words of Sigma on [lo..hi], lexicographic; prefix-extension enumeration.
std::vector<Word> enumerate_sigma(const SubshiftSpec& spec, int lo, int hi);
std::uint64_t sigma_count(const SubshiftSpec& spec, int lo, int hi);

// f does not create forbidden patterns; checked for every input width from 3
// up to min(L+2, spec.width) (L = longest forbidden word) — wider inputs are
// not classifiable once an infinite forbidden family has been truncated.
bool check_subautomaton(const Rule& rule, const SubshiftSpec& spec);

// Legality over Sigma[-1..1]: closed under mirror with f(mirror(u)) = f(u),
// and f(a, zero, a) = zero for every legal a zero a.
bool check_legal(const Rule& rule, const SubshiftSpec& spec, Letter zero);

struct ExpansivityCertificate {
    CcSide side = CcSide::right;
    int t_max = 0;
    std::optional<int> t;  // least witness time, when found
    // on refutation: two words of Sigma^{[-t_max..t_max]} with equal central
    // width-2 trace but different letters beside the center
    std::optional<std::pair<Word, Word>> witness;
};

// Least t <= t_max such that the trace of cells {side == right ? (-1, 0) : (0, 1)}
// over t steps determines the letter at cell +1 (resp. -1), within Sigma.
ExpansivityCertificate detect_expansivity(const Rule& rule, const SubshiftSpec& spec, CcSide side,
                                          int t_max);

struct WzMember {
    Word w;     // on [-floor(n/t_left) .. floor(n/t_right)]
    Word x, y;  // lexicographically first extensions with T(x w y) = z
};

struct WzSet {
    Word z;
    int lo = 0, hi = 0;
    std::vector<WzMember> members;
};

WzSet enumerate_wz(const Rule& rule, const SubshiftSpec& spec, const Word& z, int t_left,
                   int t_right);

// gamma(W_z) as a fooling set, re-validated against the f̂_z oracle.
// Throws std::runtime_error naming the offending pair when validation fails.
FoolingSet wz_fooling(const Rule& rule, const SubshiftSpec& spec, const Word& z, int t_left,
                      int t_right);

// Legal construction: pairs {(mirror(u), u) : u in V}. Each mirror(u) 0 u must lie
// in Sigma[-n..n] and trace z; the fooling property is then oracle-validated.
FoolingSet legal_fooling(const Rule& rule, const SubshiftSpec& spec, const Word& z,
                         const std::vector<Word>& seed);

// All concatenations of `repeats` blocks, as words on [1..repeats*|block|].
std::vector<Word> block_words(const std::vector<std::string>& blocks, int repeats);

struct SigmaCounts {
    std::uint64_t big = 0;    // |Sigma[-floor(n/t_left) .. floor(n/t_right)]|
    std::uint64_t right = 0;  // |Sigma[1..n]|
};

struct HardnessBound {
    Rational bound;  // lower bound on #{z : |W_z| > k}
    Rational m;      // 1/t_right + 1/t_left - 1
    bool applicable = false;  // m > 0
};

// (big - q^{n+1} k) / (right - k); requires 1 <= k < right.
HardnessBound hardness_counts(SigmaCounts counts, int q, int n, std::uint64_t k, int t_left,
                              int t_right);

}  // namespace tracecc
