// Acceptance gate: twelve end-to-end checks, one PASS/FAIL line each.
#include <cstdio>
#include <functional>
#include <random>

#include "tracecc/report.hpp"
#include "tracecc/subshift.hpp"

using namespace tracecc;

namespace {

Word zeros(int n) { return uniform_word(0, 0, n + 1); }

int failures = 0;

void criterion(int number, const char* title, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", number, title,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

bool bipermutive_exactness(std::string& detail) {
    for (int rule : {90, 150, 105, 165}) {
        Rule r = rule_from_number(2, rule);
        for (int n = 1; n <= 3; ++n)
            for (std::uint64_t zi = 0; zi < (std::uint64_t{1} << (n + 1)); ++zi) {
                Word z(0, {});
                for (int t = 0; t <= n; ++t) z.letters.push_back((zi >> t) & 1);
                int multi = multiround_exact(build_matrix(r, z));
                if (multi != n) {
                    detail = "rule " + std::to_string(rule) + " z=" + z.str() + " multiround " +
                             std::to_string(multi) + " != " + std::to_string(n);
                    return false;
                }
            }
        for (int n = 1; n <= 8; ++n) {
            DistinctCounts c = distinct_counts(r, zeros(n));
            if (c.rows != (std::uint64_t{1} << n) || c.cols != (std::uint64_t{1} << n)) {
                detail = "rule " + std::to_string(rule) + " n=" + std::to_string(n) + " rows " +
                         std::to_string(c.rows) + " cols " + std::to_string(c.cols);
                return false;
            }
        }
    }
    return true;
}

bool family_min_cc(const std::vector<int>& rules, int n_max, bool both_sides, std::string& detail) {
    for (int rule : rules) {
        Rule r = rule_from_number(2, rule);
        for (int n = 1; n <= n_max; ++n) {
            DistinctCounts c = distinct_counts(r, zeros(n));
            int left = ceil_log2(c.rows), right = ceil_log2(c.cols);
            bool ok = both_sides ? (left <= 1 && right <= 1) : (std::min(left, right) <= 1);
            if (!ok) {
                detail = "rule " + std::to_string(rule) + " n=" + std::to_string(n) + " one-round " +
                         std::to_string(left) + "/" + std::to_string(right);
                return false;
            }
        }
    }
    return true;
}

bool onesided_family(std::string& detail) {
    std::vector<int> members;
    int left = 0, right = 0;
    for (int num = 0; num < 256; ++num) {
        Rule r = rule_from_number(2, num);
        Sidedness s = onesidedness(r, LetterSet{1}, OnesidedMode::plain);
        if (s != Sidedness::none) members.push_back(num);
        if (s == Sidedness::left || s == Sidedness::both) ++left;
        if (s == Sidedness::right || s == Sidedness::both) ++right;
        if (pattern_zero_onesided(num) != (s != Sidedness::none)) {
            detail = "pattern mismatch at rule " + std::to_string(num);
            return false;
        }
    }
    // 64 rules per side per pattern family; the two families overlap in 32 rules
    if (left != 64 || right != 64 || members.size() != 96) {
        detail = "counts left=" + std::to_string(left) + " right=" + std::to_string(right) +
                 " union=" + std::to_string(members.size());
        return false;
    }
    return family_min_cc(members, 10, false, detail);
}

bool spreading_family(std::string& detail) {
    std::vector<int> members;
    for (int num = 0; num < 256; ++num) {
        SpreadingFlags f = spreading_status(rule_from_number(2, num), LetterSet{2});
        bool semantic = f.left_semi_strong || f.right_semi_strong;
        if (pattern_spreading(num) != semantic) {
            detail = "pattern mismatch at rule " + std::to_string(num);
            return false;
        }
        if (semantic) members.push_back(num);
    }
    if (members.size() != 96) {
        detail = "count " + std::to_string(members.size());
        return false;
    }
    return family_min_cc(members, 10, false, detail);
}

bool stagnating_family(std::string& detail) {
    std::vector<int> members;
    for (int num = 0; num < 256; ++num)
        if (pattern_stagnating_family(num)) members.push_back(num);
    if (members.size() != 32) {
        detail = "count " + std::to_string(members.size());
        return false;
    }
    return family_min_cc(members, 10, true, detail);
}

bool stagnating_one_remark(std::string& detail) {
    for (int num = 0; num < 256; ++num) {
        Rule r = rule_from_number(2, num);
        if (!is_stagnating(r, {1})) continue;
        for (int n = 1; n <= 8; ++n) {
            CcMatrix m = build_matrix(r, zeros(n));
            for (std::uint64_t k = 0; k < m.side * m.side; ++k)
                if (m.hat[k] != (m.top[k] == 1 ? 1 : 0)) {
                    detail = "rule " + std::to_string(num) + " n=" + std::to_string(n) +
                             " hat != [top = 1]";
                    return false;
                }
        }
    }
    Rule r222 = rule_from_number(2, 222);
    int prev = 0;
    for (int n : {4, 8, 12}) {
        DistinctCounts c = distinct_counts(r222, zeros(n));
        int cc = std::min(ceil_log2(c.rows), ceil_log2(c.cols));
        if (cc < prev || cc > ceil_log2(static_cast<std::uint64_t>(n) + 1) + 2) {
            detail = "rule 222 n=" + std::to_string(n) + " cc=" + std::to_string(cc);
            return false;
        }
        prev = cc;
    }
    return true;
}

bool trace_protocol_bounds(std::string& detail) {
    for (int num = 0; num < 256; ++num) {
        Rule r = rule_from_number(2, num);
        for (int n = 1; n <= 6; ++n) {
            Word z = zeros(n);
            DistinctCounts c = distinct_counts(r, z);
            int right = ceil_log2(c.cols);
            int image_bits = ceil_log2(forward_image_size(r, z, CcSide::right));
            int tau_bits = ceil_log2(tau_set(r, z, CcSide::right).size() + 1);
            if (right > image_bits || right > tau_bits) {
                detail = "rule " + std::to_string(num) + " n=" + std::to_string(n) + " right=" +
                         std::to_string(right) + " image=" + std::to_string(image_bits) +
                         " tau=" + std::to_string(tau_bits);
                return false;
            }
            for (const ProtocolId& id : candidate_protocols()) {
                if (id.kind == ProtocolId::Kind::grouped) continue;
                if (applicability(id, r, z)) continue;
                VerifyReport vr = verify_protocol(id, r, z);
                if (!vr.correct || vr.max_bits > vr.claimed_bound) {
                    detail = "rule " + std::to_string(num) + " n=" + std::to_string(n) + " " +
                             protocol_name(id) + (vr.correct ? " over budget" : " incorrect");
                    return false;
                }
            }
        }
    }
    return true;
}

bool grouping(std::string& detail) {
    for (int inner : {90, 110, 30}) {
        Rule f = group2(rule_from_number(2, inner));
        for (int n = 1; n <= 3; ++n) {
            const std::uint64_t z_count = std::uint64_t{1} << (2 * (n + 1));
            for (std::uint64_t zi = 0; zi < z_count; ++zi) {
                Word z(0, {});
                std::uint64_t x = zi;
                for (int t = 0; t <= n; ++t) {
                    z.letters.push_back(static_cast<Letter>(x & 3));
                    x >>= 2;
                }
                DistinctCounts c = distinct_counts(f, z);
                if (c.rows > 2 || c.cols > 2) {
                    detail = "group2(" + std::to_string(inner) + ") z=" + z.str() + " rows " +
                             std::to_string(c.rows) + " cols " + std::to_string(c.cols);
                    return false;
                }
            }
        }
    }
    return true;
}

bool legal_corollary(std::string& detail) {
    std::vector<std::string> blocks{"0100", "0001"};
    for (int rule : {18, 26, 146, 154, 218})
        for (int m : {1, 2, 3}) {
            const int n = 4 * m;
            FoolingSet fs = legal_fooling(rule_from_number(2, rule), SubshiftSpec::odd_gap(2 * n + 1),
                                          zeros(n), block_words(blocks, m));
            if (fs.size() != (std::uint64_t{1} << m) || fs.bound_bits() != m) {
                detail = "rule " + std::to_string(rule) + " m=" + std::to_string(m) + " size " +
                         std::to_string(fs.size());
                return false;
            }
        }
    return true;
}

bool expansivity(std::string& detail) {
    SubshiftSpec full = SubshiftSpec::full_shift(2, 9);
    for (int num = 0; num < 256; ++num) {
        Rule r = rule_from_number(2, num);
        bool bi = num == 90 || num == 105 || num == 150 || num == 165;
        auto rc = detect_expansivity(r, full, CcSide::right, 1);
        auto lc = detect_expansivity(r, full, CcSide::left, 1);
        if ((rc.t.has_value() && lc.t.has_value()) != bi) {
            detail = "rule " + std::to_string(num) + " t=1 status unexpected";
            return false;
        }
    }
    SubshiftSpec full4 = SubshiftSpec::full_shift(4, 9);
    Rule g = group2(rule_from_number(2, 90));
    auto gr = detect_expansivity(g, full4, CcSide::right, 3);
    auto gl = detect_expansivity(g, full4, CcSide::left, 3);
    if (!gr.t || *gr.t != 2 || !gl.t || *gl.t != 2) {
        detail = "group2(90) expansivity times not (2, 2)";
        return false;
    }
    auto id = detect_expansivity(rule_from_number(2, 204), full, CcSide::right, 4);
    if (id.t || !id.witness || id.witness->first.at(1) == id.witness->second.at(1)) {
        detail = "rule 204 not refuted with a witness";
        return false;
    }
    return true;
}

bool bound_ordering(std::string& detail) {
    std::mt19937_64 rng(987654321);
    for (int trial = 0; trial < 200; ++trial) {
        int num = static_cast<int>(rng() % 256);
        int n = 1 + static_cast<int>(rng() % 3);
        Word z(0, {});
        for (int t = 0; t <= n; ++t) z.letters.push_back(rng() & 1);
        CcMatrix m = build_matrix(rule_from_number(2, num), z);
        FoolingSet fs = fooling_set(m, FoolingMode::exact);
        int multi = multiround_exact(m);
        int one = std::min(one_round_cc(m, CcSide::left), one_round_cc(m, CcSide::right));
        auto [r2, rq] = rank_diagnostics(m);
        if (fs.bound_bits() > multi || multi > one || rq > (std::uint64_t{1} << multi)) {
            detail = "rule " + std::to_string(num) + " z=" + z.str() + " bounds " +
                     std::to_string(fs.bound_bits()) + "/" + std::to_string(multi) + "/" +
                     std::to_string(one) + " rank " + std::to_string(rq);
            return false;
        }
        if (check_fooling(m.rule, z, fs)) {
            detail = "fooling set failed revalidation";
            return false;
        }
    }
    return true;
}

bool counting_bounds(std::string& detail) {
    SubshiftSpec full = SubshiftSpec::full_shift(2, 9);
    SigmaCounts counts{sigma_count(full, -3, 3), sigma_count(full, 1, 3)};
    for (std::uint64_t k : {std::uint64_t{1}, std::uint64_t{7}}) {
        HardnessBound hb = hardness_counts(counts, 2, 3, k, 1, 1);
        if (hb.bound != Rational(16) || !hb.applicable) {
            detail = "k=" + std::to_string(k) + " bound " +
                     std::to_string(boost::rational_cast<double>(hb.bound));
            return false;
        }
    }
    HardnessBound grouped = hardness_counts({1024, 64}, 4, 2, 3, 2, 2);
    if (grouped.m != Rational(0) || grouped.applicable) {
        detail = "group2(90) should be inapplicable (m = 0)";
        return false;
    }
    return true;
}

bool entropy_checks(std::string& detail) {
    for (int num : {170, 90})
        for (int n = 1; n <= 8; ++n) {
            std::uint64_t c = trace_language_count(rule_from_number(2, num), 1, n);
            if (c != (std::uint64_t{1} << (n + 1))) {
                detail = "rule " + std::to_string(num) + " n=" + std::to_string(n) + " count " +
                         std::to_string(c);
                return false;
            }
        }
    for (int num : {0, 204}) {
        EntropyEstimate est = entropy_estimate(rule_from_number(2, num), 1, 8);
        for (const auto& s : est.samples)
            if (s.count != 2) {
                detail = "rule " + std::to_string(num) + " count " + std::to_string(s.count);
                return false;
            }
        if (!est.equicontinuity_like) {
            detail = "rule " + std::to_string(num) + " not flagged";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "bipermutive exactness: multiround = n, 2^n distinct rows/cols", bipermutive_exactness);
    criterion(2, "0-onesided family: 64 per side (union 96), patterns match, min one-round <= 1",
              onesided_family);
    criterion(3, "spreading family: 96 rules, min one-round <= 1", spreading_family);
    criterion(4, "stagnating-pair family: 32 rules, both one-round <= 1", stagnating_family);
    criterion(5, "stagnating 1: hat matrix = classical matrix; rule 222 log bound", stagnating_one_remark);
    criterion(6, "trace-protocol bounds and exhaustive protocol verification, n <= 6",
              trace_protocol_bounds);
    criterion(7, "2-grouped rules: row/column counts <= 2 for every z", grouping);
    criterion(8, "legal corollary: seeded fooling sets of size 2^m", legal_corollary);
    criterion(9, "expansivity: t = 1 iff bipermutive; group2(90) t = 2; rule 204 refuted", expansivity);
    criterion(10, "bound ordering on 200 random instances", bound_ordering);
    criterion(11, "hardness counting bounds", counting_bounds);
    criterion(12, "entropy/equicontinuity finite checks", entropy_checks);
    return failures == 0 ? 0 : 1;
}
