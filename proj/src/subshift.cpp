#include "tracecc/subshift.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace tracecc {

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

SubshiftSpec mirror_spec(const SubshiftSpec& spec) {
    SubshiftSpec m = spec;
    for (auto& w : m.forbidden) std::reverse(w.begin(), w.end());
    return m;
}

// Does some forbidden word end exactly at the last letter of `word`?
bool violates_at_end(const SubshiftSpec& spec, const std::vector<Letter>& word) {
    for (const auto& f : spec.forbidden) {
        if (f.size() > word.size()) continue;
        if (std::equal(f.begin(), f.end(), word.end() - static_cast<std::ptrdiff_t>(f.size())))
            return true;
    }
    return false;
}

}  // namespace

SubshiftSpec SubshiftSpec::full_shift(int q, int width) { return {q, width, {}}; }

SubshiftSpec SubshiftSpec::odd_gap(int width) {
    SubshiftSpec spec{2, std::max(width, 2), {}};
    for (int k = 0; 2 * k + 2 <= spec.width; ++k) {
        std::vector<Letter> f(static_cast<std::size_t>(2 * k + 2), 0);
        f.front() = f.back() = 1;
        spec.forbidden.push_back(std::move(f));
    }
    return spec;
}

bool SubshiftSpec::allows(const std::vector<Letter>& word) const {
    for (const auto& f : forbidden) {
        if (f.size() > word.size()) continue;
        for (std::size_t i = 0; i + f.size() <= word.size(); ++i)
            if (std::equal(f.begin(), f.end(), word.begin() + static_cast<std::ptrdiff_t>(i)))
                return false;
    }
    return true;
}

int SubshiftSpec::longest_forbidden() const {
    std::size_t l = 0;
    for (const auto& f : forbidden) l = std::max(l, f.size());
    return static_cast<int>(l);
}

SubshiftSpec read_subshift(std::istream& in) {
    SubshiftSpec spec{2, 0, {}};
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "@oddgap") {
            int w = 0;
            if (!(ls >> w) || w < 2) throw std::invalid_argument("read_subshift: @oddgap needs a width >= 2");
            SubshiftSpec gap = SubshiftSpec::odd_gap(w);
            spec.width = std::max(spec.width, gap.width);
            spec.forbidden.insert(spec.forbidden.end(), gap.forbidden.begin(), gap.forbidden.end());
            continue;
        }
        std::vector<Letter> word;
        for (char c : tok) {
            if (c < '0' || c > '9') throw std::invalid_argument("read_subshift: bad digit in forbidden word");
            word.push_back(static_cast<Letter>(c - '0'));
            spec.q = std::max(spec.q, c - '0' + 1);
        }
        spec.width = std::max(spec.width, static_cast<int>(word.size()));
        spec.forbidden.push_back(std::move(word));
    }
    return spec;
}

void write_subshift(std::ostream& out, const SubshiftSpec& spec) {
    for (const auto& f : spec.forbidden) {
        for (Letter l : f) out << static_cast<char>('0' + l);
        out << '\n';
    }
}

std::vector<Word> enumerate_sigma(const SubshiftSpec& spec, int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("enumerate_sigma: empty interval");
    const int len = hi - lo + 1;
    const std::uint64_t budget = enumeration_budget();
    std::uint64_t nodes = 0;
    std::vector<Word> out;
    std::vector<Letter> cur;
    cur.reserve(static_cast<std::size_t>(len));
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(Word(lo, cur));
            return;
        }
        for (Letter l = 0; l < spec.q; ++l) {
            if (++nodes > budget) throw resource_error("enumerate_sigma: budget exceeded");
            cur.push_back(l);
            if (!violates_at_end(spec, cur)) self(self);
            cur.pop_back();
        }
    };
    extend(extend);
    return out;
}

std::uint64_t sigma_count(const SubshiftSpec& spec, int lo, int hi) {
    return enumerate_sigma(spec, lo, hi).size();
}

bool check_subautomaton(const Rule& rule, const SubshiftSpec& spec) {
    const int L = spec.longest_forbidden();
    if (L == 0) return true;  // full shift
    // inputs wider than the working width cannot be classified by a truncated
    // forbidden family, so the check stops at spec.width
    const int max_width = std::min(L + 2, std::max(spec.width, 3));
    for (int width = 3; width <= max_width; ++width)
        for (const Word& w : enumerate_sigma(spec, 0, width - 1))
            if (!spec.allows(apply_step(rule, w).letters)) return false;
    return true;
}

bool check_legal(const Rule& rule, const SubshiftSpec& spec, Letter zero) {
    for (const Word& u : enumerate_sigma(spec, -1, 1)) {
        std::vector<Letter> rev(u.letters.rbegin(), u.letters.rend());
        if (!spec.allows(rev)) return false;
        if (rule.apply(rev[0], rev[1], rev[2]) != rule.apply(u.letters[0], u.letters[1], u.letters[2]))
            return false;
    }
    for (Letter a = 0; a < rule.q; ++a) {
        std::vector<Letter> aza{a, zero, a};
        if (spec.allows(aza) && rule.apply(a, zero, a) != zero) return false;
    }
    return true;
}

namespace {

// Right-side detection: does the t-step trace of cells (-1, 0) determine cell 1?
// Returns nullopt on success, otherwise a conflicting pair of words.
std::optional<std::pair<Word, Word>> expansivity_conflict(const Rule& rule, const SubshiftSpec& spec,
                                                          int t) {
    std::map<std::vector<Letter>, const Word*> seen;
    std::vector<Word> words = enumerate_sigma(spec, -t, t);
    for (const Word& w : words) {
        Triangle tri = build_triangle(rule, w);
        std::vector<Letter> key;
        key.reserve(static_cast<std::size_t>(2 * t + 1));
        for (int s = 0; s <= t; ++s) key.push_back(tri.rows[static_cast<std::size_t>(s)].at(0));
        for (int s = 0; s < t; ++s) key.push_back(tri.rows[static_cast<std::size_t>(s)].at(-1));
        auto [it, inserted] = seen.try_emplace(std::move(key), &w);
        if (!inserted && it->second->at(1) != w.at(1)) return std::make_pair(*it->second, w);
    }
    return std::nullopt;
}

}  // namespace

ExpansivityCertificate detect_expansivity(const Rule& rule, const SubshiftSpec& spec, CcSide side,
                                          int t_max) {
    if (t_max < 1) throw std::invalid_argument("detect_expansivity: need t_max >= 1");
    const bool left = side == CcSide::left;
    const Rule r = left ? mirror_rule(rule) : rule;
    const SubshiftSpec s = left ? mirror_spec(spec) : spec;
    ExpansivityCertificate cert;
    cert.side = side;
    cert.t_max = t_max;
    for (int t = 1; t <= t_max; ++t) {
        auto conflict = expansivity_conflict(r, s, t);
        if (!conflict) {
            cert.t = t;
            return cert;
        }
        if (t == t_max) {
            if (left) {
                conflict->first = mirror_word(conflict->first);
                conflict->second = mirror_word(conflict->second);
            }
            cert.witness = std::move(conflict);
        }
    }
    return cert;
}

WzSet enumerate_wz(const Rule& rule, const SubshiftSpec& spec, const Word& z, int t_left,
                   int t_right) {
    if (t_left < 1 || t_right < 1) throw std::invalid_argument("enumerate_wz: need positive times");
    const int n = z.size() - 1;
    WzSet wz;
    wz.z = z;
    wz.lo = -(n / t_left);
    wz.hi = n / t_right;
    const int left_ext = wz.lo - (-n);
    const int right_ext = n - wz.hi;
    const std::uint64_t ext_count =
        ipow(static_cast<std::uint64_t>(rule.q), left_ext) * ipow(static_cast<std::uint64_t>(rule.q), right_ext);
    std::vector<Word> candidates = enumerate_sigma(spec, wz.lo, wz.hi);
    check_budget(candidates.size() * ext_count, "enumerate_wz");
    for (Word& w : candidates) {
        if (w.at(0) != z.at(0)) continue;
        bool found = false;
        for (std::uint64_t e = 0; e < ext_count && !found; ++e) {
            std::uint64_t xe = e / ipow(static_cast<std::uint64_t>(rule.q), right_ext);
            std::uint64_t ye = e % ipow(static_cast<std::uint64_t>(rule.q), right_ext);
            // lexicographic over (x, y): most significant digit first
            Word x(-n, std::vector<Letter>(static_cast<std::size_t>(left_ext)));
            for (int i = left_ext - 1; i >= 0; --i) {
                x.letters[static_cast<std::size_t>(i)] = static_cast<Letter>(xe % rule.q);
                xe /= static_cast<unsigned>(rule.q);
            }
            Word y(wz.hi + 1, std::vector<Letter>(static_cast<std::size_t>(right_ext)));
            for (int i = right_ext - 1; i >= 0; --i) {
                y.letters[static_cast<std::size_t>(i)] = static_cast<Letter>(ye % rule.q);
                ye /= static_cast<unsigned>(rule.q);
            }
            Word full(-n, {});
            full.letters.insert(full.letters.end(), x.letters.begin(), x.letters.end());
            full.letters.insert(full.letters.end(), w.letters.begin(), w.letters.end());
            full.letters.insert(full.letters.end(), y.letters.begin(), y.letters.end());
            if (!spec.allows(full.letters)) continue;
            if (central_trace(rule, full) != z) continue;
            wz.members.push_back({w, std::move(x), std::move(y)});
            found = true;
        }
    }
    return wz;
}

namespace {

FoolingSet validated(const Rule& rule, const Word& z,
                     std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs) {
    FoolingSet fs;
    fs.n = z.size() - 1;
    fs.z = z;
    fs.common_value = 0;
    fs.pairs = std::move(pairs);
    if (auto violation = check_fooling(rule, z, fs))
        throw std::runtime_error("fooling validation failed: " + *violation);
    return fs;
}

}  // namespace

FoolingSet wz_fooling(const Rule& rule, const SubshiftSpec& spec, const Word& z, int t_left,
                      int t_right) {
    WzSet wz = enumerate_wz(rule, spec, z, t_left, t_right);
    const int n = z.size() - 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (const WzMember& m : wz.members) {
        Word u(-n, m.x.letters);
        for (int k = wz.lo; k <= -1; ++k) u.letters.push_back(m.w.at(k));
        Word v(1, {});
        for (int k = 1; k <= wz.hi; ++k) v.letters.push_back(m.w.at(k));
        v.letters.insert(v.letters.end(), m.y.letters.begin(), m.y.letters.end());
        pairs.emplace_back(encode_left(u, rule.q), encode_right(v, rule.q));
    }
    return validated(rule, z, std::move(pairs));
}

FoolingSet legal_fooling(const Rule& rule, const SubshiftSpec& spec, const Word& z,
                         const std::vector<Word>& seed) {
    const int n = z.size() - 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (const Word& u : seed) {
        if (u.lo != 1 || u.size() != n)
            throw std::invalid_argument("legal_fooling: seed words must live on [1..n]");
        Word ub = mirror_word(u);
        Word full(-n, ub.letters);
        full.letters.push_back(z.at(0));
        full.letters.insert(full.letters.end(), u.letters.begin(), u.letters.end());
        if (!spec.allows(full.letters))
            throw std::runtime_error("legal_fooling: " + full.str() + " leaves the subshift");
        if (central_trace(rule, full) != z)
            throw std::runtime_error("legal_fooling: " + full.str() + " does not trace z");
        pairs.emplace_back(encode_left(ub, rule.q), encode_right(u, rule.q));
    }
    return validated(rule, z, std::move(pairs));
}

std::vector<Word> block_words(const std::vector<std::string>& blocks, int repeats) {
    if (blocks.empty() || repeats < 1)
        throw std::invalid_argument("block_words: need blocks and repeats >= 1");
    const std::size_t blen = blocks.front().size();
    for (const auto& b : blocks)
        if (b.size() != blen || b.empty())
            throw std::invalid_argument("block_words: blocks must share a positive length");
    std::vector<Word> out{Word(1, {})};
    for (int r = 0; r < repeats; ++r) {
        std::vector<Word> next;
        next.reserve(out.size() * blocks.size());
        for (const Word& w : out)
            for (const auto& b : blocks) {
                Word e = w;
                for (char c : b) e.letters.push_back(static_cast<Letter>(c - '0'));
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

HardnessBound hardness_counts(SigmaCounts counts, int q, int n, std::uint64_t k, int t_left,
                              int t_right) {
    if (k < 1 || k > counts.right) throw std::invalid_argument("hardness_counts: need 1 <= k <= |Sigma[1..n]|");
    if (k == counts.right) throw std::invalid_argument("hardness_counts: k = |Sigma[1..n]| divides by zero");
    const long long qn1 = static_cast<long long>(ipow(static_cast<std::uint64_t>(q), n + 1));
    HardnessBound hb;
    hb.bound = Rational(static_cast<long long>(counts.big) - qn1 * static_cast<long long>(k),
                        static_cast<long long>(counts.right - k));
    hb.m = Rational(1, t_right) + Rational(1, t_left) - 1;
    hb.applicable = hb.m > 0;
    return hb;
}

}  // namespace tracecc
