#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "tracecc/ca.hpp"

using namespace tracecc;

TEST_CASE("rule_from_number basics") {
    Rule r90 = rule_from_number(2, 90);
    for (Letter a = 0; a < 2; ++a)
        for (Letter b = 0; b < 2; ++b)
            for (Letter c = 0; c < 2; ++c) CHECK(r90.apply(a, b, c) == (a ^ c));
    Rule r0 = rule_from_number(2, 0);
    Rule r255 = rule_from_number(2, 255);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(r0.table[i] == 0);
        CHECK(r255.table[i] == 1);
    }
    CHECK_THROWS_AS(rule_from_number(2, 256), std::invalid_argument);
    CHECK_THROWS_AS(rule_from_number(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(rule_from_number(3, 5), std::invalid_argument);
}

TEST_CASE("rule_to_number round trip") {
    for (int num = 0; num < 256; ++num) CHECK(rule_to_number(rule_from_number(2, num)) == num);
    // identity table f(a,b,c) = b
    std::vector<Letter> id_table(8);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) id_table[static_cast<std::size_t>((a * 2 + b) * 2 + c)] = static_cast<Letter>(b);
    CHECK(rule_to_number(rule_from_table(2, id_table)) == 204);
    Rule quaternary = group2(rule_from_number(2, 90));
    CHECK_THROWS_AS(rule_to_number(quaternary), std::invalid_argument);
}

TEST_CASE("apply_step") {
    Word w = config_from_digits("00100");
    Word out = apply_step(rule_from_number(2, 90), w);
    CHECK(out.lo == -1);
    CHECK(out.str() == "101");
    CHECK(apply_step(rule_from_number(2, 0), w).str() == "000");
    CHECK(apply_step(rule_from_number(2, 204), config_from_digits("01011")).str() == "101");
    CHECK_THROWS_AS(apply_step(rule_from_number(2, 90), word_from_digits("01", 0)), std::invalid_argument);
}

TEST_CASE("apply_step with left boundary") {
    // boundary letter sits at i-1, so position i survives
    Rule r170 = rule_from_number(2, 170);  // f(a,b,c) = c
    Word v = word_from_digits("1011", 1);
    Word out = apply_step(r170, v, Letter{0});
    CHECK(out.lo == 1);
    CHECK(out.str() == "011");
    Rule r204 = rule_from_number(2, 204);
    CHECK(apply_step(r204, v, Letter{1}).str() == "101");
}

TEST_CASE("build_triangle") {
    Triangle t18 = build_triangle(rule_from_number(2, 18), config_from_digits("001000100"));
    CHECK(t18.rows[2].lo == -2);
    CHECK(t18.rows[2].str() == "00000");
    Triangle t90 = build_triangle(rule_from_number(2, 90), config_from_digits("000010000"));
    CHECK(t90.rows[1].str() == "0010100");
    Triangle t0 = build_triangle(rule_from_number(2, 0), config_from_digits("110111011"));
    for (std::size_t t = 1; t < t0.rows.size(); ++t)
        for (Letter l : t0.rows[t].letters) CHECK(l == 0);
    CHECK_THROWS_AS(build_triangle(rule_from_number(2, 90), word_from_digits("000", 1)), std::invalid_argument);
}

TEST_CASE("shrinking support") {
    Triangle t = build_triangle(rule_from_number(2, 30), config_from_digits("10110010101"));
    const int n = t.base.radius();
    for (int s = 0; s <= n; ++s) CHECK(t.rows[static_cast<std::size_t>(s)].size() == 2 * (n - s) + 1);
}

TEST_CASE("compute_trace") {
    CHECK(central_trace(rule_from_number(2, 18), config_from_digits("001000100")).str() == "00000");
    CHECK(central_trace(rule_from_number(2, 90), config_from_digits("000010000")).str() == "10000");
    Word w = config_from_digits("0110101");
    Word tr = central_trace(rule_from_number(2, 204), w);
    for (Letter l : tr.letters) CHECK(l == w.at(0));
    TraceWord two = compute_trace(rule_from_number(2, 90), w, -1, 0);
    CHECK(two.values.size() == 3);  // times 0..n-1
    CHECK_THROWS_AS(compute_trace(rule_from_number(2, 90), w, -4, 0), std::invalid_argument);
}

TEST_CASE("group2") {
    Rule g90 = group2(rule_from_number(2, 90));
    CHECK(g90.q == 4);
    CHECK(g90.origin == RuleOrigin::grouped);
    CHECK(g90.apply(1, 2, 3) == 2);  // 2((a+b) mod 2) + ((b/2 + c/2) mod 2)
    Rule g204 = group2(rule_from_number(2, 204));
    for (Letter a = 0; a < 4; ++a)
        for (Letter b = 0; b < 4; ++b)
            for (Letter c = 0; c < 4; ++c) CHECK(g204.apply(a, b, c) == b);
    Rule g0 = group2(rule_from_number(2, 0));
    for (Letter l : g0.table) CHECK(l == 0);
}

TEST_CASE("grouping consistency") {
    // one grouped step on pairs == one plain step on the flattened word
    // (grouping is spatial: pair k covers flat cells 2k and 2k+1)
    for (int num = 0; num < 256; ++num) {
        Rule g = rule_from_number(2, num);
        Rule f = group2(g);
        const int m = 4;  // pairs; flattened word has 2m letters
        for (unsigned bits = 0; bits < (1u << (2 * m)); ++bits) {
            Word flat(0, {});
            for (int k = 0; k < 2 * m; ++k) flat.letters.push_back((bits >> k) & 1);
            Word pairs(0, {});
            for (int k = 0; k < m; ++k)
                pairs.letters.push_back(static_cast<Letter>(2 * flat.letters[2 * k] + flat.letters[2 * k + 1]));
            Word stepped = apply_step(f, pairs);
            Word once = apply_step(g, flat);
            for (int k = 0; k < stepped.size(); ++k) {
                Letter pair = stepped.letters[static_cast<std::size_t>(k)];
                int cell = 2 * (stepped.lo + k);
                CHECK(once.at(cell) == pair / 2);
                CHECK(once.at(cell + 1) == pair % 2);
            }
        }
    }
}

TEST_CASE("rule 90 linearity") {
    // f^t(w)_0 = XOR of w_j with binomial(t, (t+j)/2) odd
    Rule r90 = rule_from_number(2, 90);
    for (int n = 1; n <= 10; ++n) {
        std::vector<std::vector<unsigned>> binom(static_cast<std::size_t>(n + 1));
        for (int t = 0; t <= n; ++t) {
            binom[static_cast<std::size_t>(t)].assign(static_cast<std::size_t>(t + 1), 1);
            for (int j = 1; j < t; ++j)
                binom[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] =
                    (binom[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(j - 1)] +
                     binom[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(j)]) &
                    1u;
        }
        for (int trial = 0; trial < 16; ++trial) {
            Word w(-n, {});
            std::uint64_t x = 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(trial * 31 + n);
            for (int k = 0; k < 2 * n + 1; ++k) w.letters.push_back((x >> (k % 60)) & 1);
            Triangle tri = build_triangle(r90, w);
            for (int t = 0; t <= n; ++t) {
                Letter expect = 0;
                for (int j = -t; j <= t; ++j) {
                    if ((t + j) % 2) continue;
                    if (binom[static_cast<std::size_t>(t)][static_cast<std::size_t>((t + j) / 2)])
                        expect ^= w.at(j);
                }
                CHECK(tri.rows[static_cast<std::size_t>(t)].at(0) == expect);
            }
        }
    }
}

TEST_CASE("mirror_word") {
    Word v = word_from_digits("0100", 1);
    Word m = mirror_word(v);
    CHECK(m.lo == -4);
    CHECK(m.str() == "0010");
    CHECK(mirror_word(m) == v);
    Word pal = word_from_digits("010", -1);
    CHECK(mirror_word(pal).str() == "010");
}

TEST_CASE("mirror equivariance for mirror-symmetric rules") {
    for (int num : {90, 18, 150, 232}) {
        Rule r = rule_from_number(2, num);
        REQUIRE(mirror_rule(r) == r);
        for (unsigned bits = 0; bits < 128; ++bits) {
            Word w(-3, {});
            for (int k = 0; k < 7; ++k) w.letters.push_back((bits >> k) & 1);
            CHECK(central_trace(r, mirror_word(w)) == central_trace(r, w));
        }
    }
}

TEST_CASE("BinStepper agrees with apply_step") {
    for (int num : {30, 90, 110, 184, 222, 45}) {
        Rule r = rule_from_number(2, num);
        BinStepper stepper(r);
        const int n = 12;
        std::uint64_t x = 0x243f6a8885a308d3ull ^ static_cast<std::uint64_t>(num);
        Word w(-n, {});
        for (int k = 0; k < 2 * n + 1; ++k) w.letters.push_back((x >> k) & 1);
        std::uint64_t packed = 0;
        for (int k = -n; k <= n; ++k)
            if (w.at(k)) packed |= std::uint64_t{1} << (k + n);
        Word cur = w;
        for (int t = 1; t <= n; ++t) {
            packed = stepper.step(packed);
            cur = apply_step(r, cur);
            for (int k = cur.lo; k <= cur.hi(); ++k) CHECK(((packed >> (k + n)) & 1) == cur.at(k));
        }
    }
}

TEST_CASE("rule table text round trip") {
    for (const Rule& r : {rule_from_number(2, 110), group2(rule_from_number(2, 30))}) {
        std::stringstream ss;
        write_rule_table(ss, r);
        Rule back = read_rule_table(ss);
        CHECK(back.q == r.q);
        CHECK(back.table == r.table);
    }
    std::stringstream bad("2\n0 0 0 -> 7\n");
    CHECK_THROWS_AS(read_rule_table(bad), std::invalid_argument);
}
