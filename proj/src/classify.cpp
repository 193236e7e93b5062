#include "tracecc/classify.hpp"

#include "tracecc/ca.hpp"

namespace tracecc {

LetterSet full_set(int q) { return (LetterSet{1} << q) - 1u; }

Sidedness onesidedness(const Rule& rule, LetterSet B, OnesidedMode mode) {
    if (B == 0) throw std::invalid_argument("onesidedness: B must be nonempty");
    const int q = rule.q;
    bool left = true, right = true;
    if (mode == OnesidedMode::plain) {
        // leftsided: f(abc) = f(abd) whenever b in B.
        for (int a = 0; a < q && left; ++a)
            for (int b = 0; b < q && left; ++b)
                if (in_set(B, static_cast<Letter>(b)))
                    for (int c = 1; c < q; ++c)
                        if (rule.apply(a, b, c) != rule.apply(a, b, 0)) { left = false; break; }
        for (int b = 0; b < q && right; ++b)
            if (in_set(B, static_cast<Letter>(b)))
                for (int c = 0; c < q && right; ++c)
                    for (int a = 1; a < q; ++a)
                        if (rule.apply(a, b, c) != rule.apply(0, b, c)) { right = false; break; }
    } else {
        // star leftsided: f(abc) = f(abd) whenever a in B.
        for (int a = 0; a < q && left; ++a)
            if (in_set(B, static_cast<Letter>(a)))
                for (int b = 0; b < q && left; ++b)
                    for (int c = 1; c < q; ++c)
                        if (rule.apply(a, b, c) != rule.apply(a, b, 0)) { left = false; break; }
        for (int c = 0; c < q && right; ++c)
            if (in_set(B, static_cast<Letter>(c)))
                for (int b = 0; b < q && right; ++b)
                    for (int a = 1; a < q; ++a)
                        if (rule.apply(a, b, c) != rule.apply(0, b, c)) { right = false; break; }
    }
    if (left && right) return Sidedness::both;
    if (left) return Sidedness::left;
    if (right) return Sidedness::right;
    return Sidedness::none;
}

SpreadingFlags spreading_status(const Rule& rule, LetterSet B) {
    const int q = rule.q;
    if (B == 0 || B == full_set(q)) throw std::invalid_argument("spreading_status: B must be a proper nonempty subset");
    SpreadingFlags fl;
    fl.left_semi_strong = fl.right_semi_strong = fl.left_weak = fl.right_weak = true;
    for (int a = 0; a < q; ++a)
        for (int x = 0; x < q; ++x)
            for (int b = 0; b < q; ++b) {
                const bool xin = in_set(B, static_cast<Letter>(x));
                const bool bin = in_set(B, static_cast<Letter>(b));
                const bool ain = in_set(B, static_cast<Letter>(a));
                if (!xin && bin) {
                    // triple (a, x, b): B on the right invades the middle
                    if (!in_set(B, rule.apply(a, x, b))) {
                        fl.left_semi_strong = false;
                        if (!ain) fl.left_weak = false;
                    }
                    // triple (b, x, a): B on the left invades the middle
                    if (!in_set(B, rule.apply(b, x, a))) {
                        fl.right_semi_strong = false;
                        if (!ain) fl.right_weak = false;
                    }
                }
            }
    // semi-strong implies weak on each side
    if (fl.left_semi_strong) fl.left_weak = true;
    if (fl.right_semi_strong) fl.right_weak = true;
    return fl;
}

Permutivity permutivity(const Rule& rule) {
    const int q = rule.q;
    bool left = true, right = true;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            LetterSet seen = 0;
            for (int c = 0; c < q; ++c) seen |= LetterSet{1} << rule.apply(a, b, c);
            if (seen != full_set(q)) right = false;
            seen = 0;
            for (int c = 0; c < q; ++c) seen |= LetterSet{1} << rule.apply(c, b, a);
            if (seen != full_set(q)) left = false;
        }
    if (left && right) return Permutivity::bi;
    if (left) return Permutivity::left;
    if (right) return Permutivity::right;
    return Permutivity::none;
}

bool is_quiescent(const Rule& rule, Letter l) { return rule.apply(l, l, l) == l; }

bool is_stagnating(const Rule& rule, const std::vector<Letter>& word) {
    if (word.empty()) return false;
    const int q = rule.q;
    const int m = static_cast<int>(word.size());
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            // one step of a·word·b must reproduce word on the middle cells
            std::vector<Letter> padded;
            padded.push_back(static_cast<Letter>(a));
            padded.insert(padded.end(), word.begin(), word.end());
            padded.push_back(static_cast<Letter>(b));
            for (int k = 0; k < m; ++k)
                if (rule.apply(padded[k], padded[k + 1], padded[k + 2]) != word[k]) return false;
        }
    return true;
}

std::vector<std::vector<Letter>> stagnating_words(const Rule& rule, int max_len) {
    std::vector<std::vector<Letter>> out;
    std::vector<Letter> word;
    for (int len = 1; len <= max_len; ++len) {
        word.assign(static_cast<std::size_t>(len), 0);
        while (true) {
            if (is_stagnating(rule, word)) out.push_back(word);
            int k = len - 1;
            while (k >= 0 && word[k] == rule.q - 1) word[k--] = 0;
            if (k < 0) break;
            ++word[k];
        }
    }
    return out;
}

bool pattern_zero_onesided(int number) {
    auto bit = [&](int i) { return (number >> i) & 1; };
    const bool leftsided = bit(5) == bit(4) && bit(1) == bit(0);
    const bool rightsided = bit(5) == bit(1) && bit(4) == bit(0);
    return leftsided || rightsided;
}

bool pattern_spreading(int number) {
    auto bit = [&](int i) { return (number >> i) & 1; };
    const bool right = bit(5) == 1 && bit(4) == 1;  // a7a6 1 1 a3a2a1a0
    const bool left = bit(5) == 1 && bit(1) == 1;   // a7a6 1 a4a3a2 1 a0
    return left || right;
}

bool pattern_stagnating_family(int number) {
    auto bit = [&](int i) { return (number >> i) & 1; };
    return bit(4) == 0 && bit(1) == 0 && bit(0) == 0;  // a7a6a5 0 a3a2 0 0
}

ClassificationReport classify_rule(const Rule& rule) {
    ClassificationReport rep;
    rep.q = rule.q;
    rep.rule_number = (rule.q == 2) ? rule_to_number(rule) : -1;
    for (int l = 0; l < rule.q; ++l)
        if (is_quiescent(rule, static_cast<Letter>(l))) rep.quiescent |= LetterSet{1} << l;
    rep.stagnating = stagnating_words(rule, 2);
    rep.zero_onesided = onesidedness(rule, LetterSet{1}, OnesidedMode::plain);
    rep.zero_star_onesided = onesidedness(rule, LetterSet{1}, OnesidedMode::star);
    rep.nonzero_spreading = spreading_status(rule, full_set(rule.q) & ~LetterSet{1});
    rep.permutive = permutivity(rule);

    rep.legal_on_full_shift.resize(static_cast<std::size_t>(rule.q));
    bool mirror_symmetric = true;
    for (int a = 0; a < rule.q && mirror_symmetric; ++a)
        for (int b = 0; b < rule.q && mirror_symmetric; ++b)
            for (int c = 0; c < rule.q; ++c)
                if (rule.apply(a, b, c) != rule.apply(c, b, a)) { mirror_symmetric = false; break; }
    for (int zero = 0; zero < rule.q; ++zero) {
        bool fixes = true;
        for (int a = 0; a < rule.q; ++a)
            if (rule.apply(a, static_cast<Letter>(zero), a) != zero) { fixes = false; break; }
        rep.legal_on_full_shift[static_cast<std::size_t>(zero)] = mirror_symmetric && fixes;
    }

    if (rep.rule_number >= 0) {
        rep.pattern_onesided = pattern_zero_onesided(rep.rule_number);
        rep.pattern_spreading = pattern_spreading(rep.rule_number);
        rep.pattern_stagnating = pattern_stagnating_family(rep.rule_number);
        const bool sem_onesided = rep.zero_onesided != Sidedness::none;
        const bool sem_spreading =
            rep.nonzero_spreading.left_semi_strong || rep.nonzero_spreading.right_semi_strong;
        bool zero_quiescent = in_set(rep.quiescent, 0);
        SpreadingFlags one = spreading_status(rule, LetterSet{2});
        const bool sem_stagnating = zero_quiescent && !one.left_weak && !one.right_weak;
        rep.patterns_agree = (sem_onesided == rep.pattern_onesided) &&
                             (sem_spreading == rep.pattern_spreading) &&
                             (sem_stagnating == rep.pattern_stagnating);
    }
    return rep;
}

}  // namespace tracecc
