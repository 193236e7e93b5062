#include "tracecc/cc.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

namespace tracecc {

Word decode_left(std::uint64_t index, int n, int q) {
    Word u(-n, std::vector<Letter>(static_cast<std::size_t>(n)));
    for (int k = 0; k < n; ++k) {
        u.at(-1 - k) = static_cast<Letter>(index % q);
        index /= static_cast<unsigned>(q);
    }
    return u;
}

Word decode_right(std::uint64_t index, int n, int q) {
    Word v(1, std::vector<Letter>(static_cast<std::size_t>(n)));
    for (int k = 0; k < n; ++k) {
        v.at(1 + k) = static_cast<Letter>(index % q);
        index /= static_cast<unsigned>(q);
    }
    return v;
}

std::uint64_t encode_left(const Word& u, int q) {
    std::uint64_t index = 0;
    for (int k = u.size() - 1; k >= 0; --k) index = index * q + u.at(-1 - k);
    return index;
}

std::uint64_t encode_right(const Word& v, int q) {
    std::uint64_t index = 0;
    for (int k = v.size() - 1; k >= 0; --k) index = index * q + v.at(1 + k);
    return index;
}

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline std::uint64_t bin_step(std::uint64_t w, unsigned rule_bits) {
    const std::uint64_t b = w, a = w << 1, c = w >> 1;
    std::uint64_t out = 0;
    if (rule_bits & 0x01) out |= ~a & ~b & ~c;
    if (rule_bits & 0x02) out |= ~a & ~b & c;
    if (rule_bits & 0x04) out |= ~a & b & ~c;
    if (rule_bits & 0x08) out |= ~a & b & c;
    if (rule_bits & 0x10) out |= a & ~b & ~c;
    if (rule_bits & 0x20) out |= a & ~b & c;
    if (rule_bits & 0x40) out |= a & b & ~c;
    if (rule_bits & 0x80) out |= a & b & c;
    return out;
}

}  // namespace

HatOracle::HatOracle(const Rule& rule, const Word& z) : rule_(rule), z_(z) {
    if (z.size() < 2) throw std::invalid_argument("HatOracle: z must have length n+1 with n >= 1");
    for (Letter l : z.letters)
        if (l >= rule.q) throw std::invalid_argument("HatOracle: z letter outside the rule's alphabet");
    n_ = z.size() - 1;
    side_ = ipow(static_cast<std::uint64_t>(rule.q), n_);
    binary_ = rule.q == 2 && 2 * n_ + 1 <= 62 && side_ <= (std::uint64_t{1} << 22);
    if (binary_) {
        rule_bits_ = static_cast<unsigned>(rule_to_number(rule));
        for (int t = 0; t <= n_; ++t) z_bits_ |= static_cast<std::uint64_t>(z.at(t)) << t;
        left_bits_.resize(side_);
        right_bits_.resize(side_);
        for (std::uint64_t i = 0; i < side_; ++i) {
            std::uint32_t lb = 0, rb = 0;
            for (int k = 0; k < n_; ++k) {
                if ((i >> k) & 1) {
                    lb |= std::uint32_t{1} << (n_ - 1 - k);  // cell -1-k
                    rb |= std::uint32_t{1} << k;             // cell 1+k
                }
            }
            left_bits_[i] = lb;
            right_bits_[i] = rb;
        }
    }
}

bool HatOracle::hat(std::uint64_t row, std::uint64_t col) const {
    if (binary_) {
        std::uint64_t w = left_bits_[row] | (static_cast<std::uint64_t>(z_.at(0)) << n_) |
                          (static_cast<std::uint64_t>(right_bits_[col]) << (n_ + 1));
        for (int t = 1; t <= n_; ++t) {
            w = bin_step(w, rule_bits_);
            if (((w >> n_) & 1) != ((z_bits_ >> t) & 1)) return true;
        }
        return false;
    }
    std::vector<Letter> buf(static_cast<std::size_t>(2 * n_ + 1)), next(buf.size());
    Word u = decode_left(row, n_, rule_.q), v = decode_right(col, n_, rule_.q);
    for (int k = 0; k < n_; ++k) buf[static_cast<std::size_t>(k)] = u.at(-n_ + k);
    buf[static_cast<std::size_t>(n_)] = z_.at(0);
    for (int k = 0; k < n_; ++k) buf[static_cast<std::size_t>(n_ + 1 + k)] = v.at(1 + k);
    for (int t = 1; t <= n_; ++t) {
        for (int k = t; k <= 2 * n_ - t; ++k)
            next[static_cast<std::size_t>(k)] = rule_.apply(buf[static_cast<std::size_t>(k - 1)],
                                                            buf[static_cast<std::size_t>(k)],
                                                            buf[static_cast<std::size_t>(k + 1)]);
        std::swap(buf, next);
        if (buf[static_cast<std::size_t>(n_)] != z_.at(t)) return true;
    }
    return false;
}

std::pair<bool, Letter> HatOracle::hat_top(std::uint64_t row, std::uint64_t col) const {
    if (binary_) {
        std::uint64_t w = left_bits_[row] | (static_cast<std::uint64_t>(z_.at(0)) << n_) |
                          (static_cast<std::uint64_t>(right_bits_[col]) << (n_ + 1));
        bool mismatch = false;
        for (int t = 1; t <= n_; ++t) {
            w = bin_step(w, rule_bits_);
            if (((w >> n_) & 1) != ((z_bits_ >> t) & 1)) mismatch = true;
        }
        return {mismatch, static_cast<Letter>((w >> n_) & 1)};
    }
    std::vector<Letter> buf(static_cast<std::size_t>(2 * n_ + 1)), next(buf.size());
    Word u = decode_left(row, n_, rule_.q), v = decode_right(col, n_, rule_.q);
    for (int k = 0; k < n_; ++k) buf[static_cast<std::size_t>(k)] = u.at(-n_ + k);
    buf[static_cast<std::size_t>(n_)] = z_.at(0);
    for (int k = 0; k < n_; ++k) buf[static_cast<std::size_t>(n_ + 1 + k)] = v.at(1 + k);
    bool mismatch = false;
    for (int t = 1; t <= n_; ++t) {
        for (int k = t; k <= 2 * n_ - t; ++k)
            next[static_cast<std::size_t>(k)] = rule_.apply(buf[static_cast<std::size_t>(k - 1)],
                                                            buf[static_cast<std::size_t>(k)],
                                                            buf[static_cast<std::size_t>(k + 1)]);
        std::swap(buf, next);
        if (buf[static_cast<std::size_t>(n_)] != z_.at(t)) mismatch = true;
    }
    return {mismatch, buf[static_cast<std::size_t>(n_)]};
}

CcMatrix build_matrix(const Rule& rule, const Word& z, unsigned workers) {
    HatOracle oracle(rule, z);
    const std::uint64_t side = oracle.side();
    check_budget(side * side, "build_matrix");
    CcMatrix m;
    m.rule = rule;
    m.z = z;
    m.n = oracle.n();
    m.side = side;
    m.hat.resize(side * side);
    m.top.resize(side * side);

    if (workers == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = (side * side >= (std::uint64_t{1} << 16)) ? std::max(1u, std::min(hw, 8u)) : 1u;
    }
    auto fill_rows = [&](std::uint64_t row_begin, std::uint64_t row_end) {
        for (std::uint64_t i = row_begin; i < row_end; ++i)
            for (std::uint64_t j = 0; j < side; ++j) {
                auto [hv, top] = oracle.hat_top(i, j);
                m.hat[i * side + j] = hv ? 1 : 0;
                m.top[i * side + j] = top;
            }
    };
    if (workers <= 1) {
        fill_rows(0, side);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (side + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t b = std::min<std::uint64_t>(w * chunk, side);
            std::uint64_t e = std::min<std::uint64_t>(b + chunk, side);
            if (b < e) pool.emplace_back(fill_rows, b, e);
        }
        for (auto& t : pool) t.join();
    }
    return m;
}

DistinctCounts distinct_counts(const CcMatrix& m) {
    const std::uint64_t side = m.side;
    const std::uint64_t words = (side + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(side, std::vector<std::uint64_t>(words, 0)),
        cols(side, std::vector<std::uint64_t>(words, 0));
    for (std::uint64_t i = 0; i < side; ++i)
        for (std::uint64_t j = 0; j < side; ++j)
            if (m.hat_at(i, j)) {
                rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
                cols[j][i / 64] |= std::uint64_t{1} << (i % 64);
            }
    auto count_distinct = [](std::vector<std::vector<std::uint64_t>>& v) {
        std::sort(v.begin(), v.end());
        return static_cast<std::uint64_t>(std::unique(v.begin(), v.end()) - v.begin());
    };
    return {count_distinct(rows), count_distinct(cols)};
}

DistinctCounts distinct_counts(const Rule& rule, const Word& z) {
    HatOracle oracle(rule, z);
    const std::uint64_t side = oracle.side();
    check_budget(side * side, "distinct_counts");
    const std::uint64_t words = (side + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(side, std::vector<std::uint64_t>(words, 0)),
        cols(side, std::vector<std::uint64_t>(words, 0));
    for (std::uint64_t i = 0; i < side; ++i)
        for (std::uint64_t j = 0; j < side; ++j)
            if (oracle.hat(i, j)) {
                rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
                cols[j][i / 64] |= std::uint64_t{1} << (i % 64);
            }
    auto count_distinct = [](std::vector<std::vector<std::uint64_t>>& v) {
        std::sort(v.begin(), v.end());
        return static_cast<std::uint64_t>(std::unique(v.begin(), v.end()) - v.begin());
    };
    return {count_distinct(rows), count_distinct(cols)};
}

int one_round_cc(const CcMatrix& m, CcSide side) {
    DistinctCounts c = distinct_counts(m);
    return ceil_log2(side == CcSide::left ? c.rows : c.cols);
}

namespace {

class ProtocolTreeSolver {
public:
    explicit ProtocolTreeSolver(const CcMatrix& m) : side_(static_cast<unsigned>(m.side)) {
        row_bits_.assign(side_, 0);
        col_bits_.assign(side_, 0);
        for (unsigned i = 0; i < side_; ++i)
            for (unsigned j = 0; j < side_; ++j)
                if (m.hat_at(i, j)) {
                    row_bits_[i] |= 1u << j;
                    col_bits_[j] |= 1u << i;
                }
        memo_.assign(std::size_t{1} << (2 * side_), -1);
    }

    int solve() {
        const unsigned full = (1u << side_) - 1u;
        return depth(full, full);
    }

private:
    bool leaf(unsigned rmask, unsigned cmask) const {
        // one player can already answer: all rows equal, or all columns equal
        bool rows_equal = true, cols_equal = true;
        unsigned first = ~0u;
        for (unsigned i = 0; i < side_; ++i)
            if ((rmask >> i) & 1) {
                unsigned v = row_bits_[i] & cmask;
                if (first == ~0u) first = v;
                else if (v != first) { rows_equal = false; break; }
            }
        if (rows_equal) return true;
        first = ~0u;
        for (unsigned j = 0; j < side_; ++j)
            if ((cmask >> j) & 1) {
                unsigned v = col_bits_[j] & rmask;
                if (first == ~0u) first = v;
                else if (v != first) { cols_equal = false; break; }
            }
        return cols_equal;
    }

    int depth(unsigned rmask, unsigned cmask) {
        auto& slot = memo_[(static_cast<std::size_t>(rmask) << side_) | cmask];
        if (slot >= 0) return slot;
        if (leaf(rmask, cmask)) return slot = 0;
        int best = 2 * static_cast<int>(side_);  // upper bound: split down to singletons
        const unsigned rlow = rmask & (~rmask + 1), clow = cmask & (~cmask + 1);
        for (unsigned s = (rmask - 1) & rmask; s; s = (s - 1) & rmask) {
            if (!(s & rlow)) continue;  // children are symmetric
            int d = 1 + std::max(depth(s, cmask), depth(rmask ^ s, cmask));
            best = std::min(best, d);
        }
        for (unsigned s = (cmask - 1) & cmask; s; s = (s - 1) & cmask) {
            if (!(s & clow)) continue;
            int d = 1 + std::max(depth(rmask, s), depth(rmask, cmask ^ s));
            best = std::min(best, d);
        }
        return slot = static_cast<signed char>(best);
    }

    unsigned side_;
    std::vector<unsigned> row_bits_, col_bits_;
    std::vector<signed char> memo_;
};

}  // namespace

int multiround_exact(const CcMatrix& m) {
    if (m.side > 8)
        throw resource_error("multiround_exact: matrix side " + std::to_string(m.side) +
                             " exceeds the 8x8 subset-pair memoization cap");
    return ProtocolTreeSolver(m).solve();
}

namespace {

FoolingSet greedy_fooling(const CcMatrix& m, int value) {
    FoolingSet s;
    s.n = m.n;
    s.z = m.z;
    s.common_value = value;
    for (std::uint64_t i = 0; i < m.side; ++i)
        for (std::uint64_t j = 0; j < m.side; ++j) {
            if (m.hat_at(i, j) != value) continue;
            bool ok = true;
            for (auto& [x, y] : s.pairs)
                if (m.hat_at(x, j) == value && m.hat_at(i, y) == value) { ok = false; break; }
            if (ok) s.pairs.emplace_back(i, j);
        }
    return s;
}

// Maximum clique in the pair-compatibility graph, simple branch and bound.
class CliqueSolver {
public:
    CliqueSolver(const CcMatrix& m, int value) : m_(m), value_(value) {
        for (std::uint64_t i = 0; i < m.side; ++i)
            for (std::uint64_t j = 0; j < m.side; ++j)
                if (m.hat_at(i, j) == value) cells_.emplace_back(i, j);
        const std::size_t nv = cells_.size();
        words_ = (nv + 63) / 64;
        adj_.assign(nv * words_, 0);
        for (std::size_t a = 0; a < nv; ++a)
            for (std::size_t b = a + 1; b < nv; ++b)
                if (compatible(a, b)) {
                    adj_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
                    adj_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
                }
    }

    std::vector<std::size_t> solve() {
        std::vector<std::uint64_t> cand(words_, 0);
        for (std::size_t v = 0; v < cells_.size(); ++v) cand[v / 64] |= std::uint64_t{1} << (v % 64);
        std::vector<std::size_t> current;
        expand(cand, current);
        return best_;
    }

    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& cells() const { return cells_; }

private:
    bool compatible(std::size_t a, std::size_t b) const {
        auto [x, y] = cells_[a];
        auto [x2, y2] = cells_[b];
        return m_.hat_at(x2, y) != value_ || m_.hat_at(x, y2) != value_;
    }

    void expand(std::vector<std::uint64_t>& cand, std::vector<std::size_t>& current) {
        std::size_t remaining = 0;
        for (std::uint64_t w : cand) remaining += static_cast<std::size_t>(__builtin_popcountll(w));
        if (current.size() + remaining <= best_.size()) return;
        if (remaining == 0) {
            if (current.size() > best_.size()) best_ = current;
            return;
        }
        for (std::size_t wi = 0; wi < words_; ++wi) {
            while (cand[wi]) {
                std::size_t v = wi * 64 + static_cast<std::size_t>(__builtin_ctzll(cand[wi]));
                cand[wi] &= cand[wi] - 1;
                std::size_t rem = 0;
                for (std::size_t k = wi; k < words_; ++k) rem += static_cast<std::size_t>(__builtin_popcountll(cand[k]));
                if (current.size() + 1 + rem <= best_.size()) return;
                std::vector<std::uint64_t> next(words_);
                for (std::size_t k = 0; k < words_; ++k) next[k] = cand[k] & adj_[v * words_ + k];
                current.push_back(v);
                expand(next, current);
                current.pop_back();
            }
        }
        if (current.size() > best_.size()) best_ = current;
    }

    const CcMatrix& m_;
    int value_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> cells_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::size_t> best_;
};

FoolingSet exact_fooling(const CcMatrix& m, int value) {
    FoolingSet s;
    s.n = m.n;
    s.z = m.z;
    s.common_value = value;
    CliqueSolver solver(m, value);
    for (std::size_t v : solver.solve()) s.pairs.push_back(solver.cells()[v]);
    return s;
}

}  // namespace

FoolingSet fooling_set(const CcMatrix& m, FoolingMode mode) {
    if (mode == FoolingMode::exact && m.side > 16)
        throw resource_error("fooling_set: exact mode capped at side 16");
    FoolingSet zero = mode == FoolingMode::greedy ? greedy_fooling(m, 0) : exact_fooling(m, 0);
    FoolingSet one = mode == FoolingMode::greedy ? greedy_fooling(m, 1) : exact_fooling(m, 1);
    return one.size() > zero.size() ? one : zero;
}

std::optional<std::string> check_fooling(const Rule& rule, const Word& z, const FoolingSet& s) {
    HatOracle oracle(rule, z);
    for (auto& [x, y] : s.pairs) {
        if ((oracle.hat(x, y) ? 1 : 0) != s.common_value)
            return "pair (" + std::to_string(x) + "," + std::to_string(y) + ") does not evaluate to the common value";
    }
    for (std::size_t a = 0; a < s.pairs.size(); ++a)
        for (std::size_t b = a + 1; b < s.pairs.size(); ++b) {
            auto [x, y] = s.pairs[a];
            auto [x2, y2] = s.pairs[b];
            if ((oracle.hat(x2, y) ? 1 : 0) == s.common_value &&
                (oracle.hat(x, y2) ? 1 : 0) == s.common_value)
                return "pairs (" + std::to_string(x) + "," + std::to_string(y) + ") and (" +
                       std::to_string(x2) + "," + std::to_string(y2) + ") violate the cross condition";
        }
    return std::nullopt;
}

std::pair<std::uint64_t, std::uint64_t> rank_diagnostics(const CcMatrix& m) {
    if (m.side > 512) throw resource_error("rank_diagnostics: matrix side exceeds 512");
    const std::uint64_t side = m.side;

    // GF(2): bit-row elimination.
    const std::uint64_t words = (side + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(side, std::vector<std::uint64_t>(words, 0));
    for (std::uint64_t i = 0; i < side; ++i)
        for (std::uint64_t j = 0; j < side; ++j)
            if (m.hat_at(i, j)) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
    std::uint64_t rank2 = 0;
    for (std::uint64_t col = 0; col < side && rank2 < side; ++col) {
        std::uint64_t pivot = side;
        for (std::uint64_t i = rank2; i < side; ++i)
            if ((rows[i][col / 64] >> (col % 64)) & 1) { pivot = i; break; }
        if (pivot == side) continue;
        std::swap(rows[rank2], rows[pivot]);
        for (std::uint64_t i = 0; i < side; ++i)
            if (i != rank2 && ((rows[i][col / 64] >> (col % 64)) & 1))
                for (std::uint64_t k = 0; k < words; ++k) rows[i][k] ^= rows[rank2][k];
        ++rank2;
    }

    // Rationals: Bareiss fraction-free elimination over exact integers.
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> a(side, std::vector<cpp_int>(side));
    for (std::uint64_t i = 0; i < side; ++i)
        for (std::uint64_t j = 0; j < side; ++j) a[i][j] = int(m.hat_at(i, j));
    cpp_int prev = 1;
    std::uint64_t rankq = 0;
    for (std::uint64_t col = 0; col < side && rankq < side; ++col) {
        std::uint64_t pivot = side;
        for (std::uint64_t i = rankq; i < side; ++i)
            if (a[i][col] != 0) { pivot = i; break; }
        if (pivot == side) continue;
        std::swap(a[rankq], a[pivot]);
        for (std::uint64_t i = rankq + 1; i < side; ++i) {
            for (std::uint64_t j = col + 1; j < side; ++j)
                a[i][j] = (a[rankq][col] * a[i][j] - a[i][col] * a[rankq][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rankq][col];
        ++rankq;
    }
    return {rank2, rankq};
}

}  // namespace tracecc
