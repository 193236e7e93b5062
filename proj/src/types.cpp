#include "tracecc/types.hpp"

#include <algorithm>
#include <cstdlib>

namespace tracecc {

std::uint64_t enumeration_budget() {
    static const std::uint64_t budget = [] {
        if (const char* env = std::getenv("TRACECC_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t{1} << 26;
    }();
    return budget;
}

void check_budget(std::uint64_t needed, const char* what) {
    if (needed > enumeration_budget()) {
        throw resource_error(std::string(what) + ": enumeration of " + std::to_string(needed) +
                             " items exceeds budget " + std::to_string(enumeration_budget()));
    }
}

Word Word::slice(int i, int j) const {
    if (i < lo || j > hi() || i > j) throw std::invalid_argument("Word::slice: interval out of range");
    return Word(i, std::vector<Letter>(letters.begin() + (i - lo), letters.begin() + (j - lo) + 1));
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters.size());
    for (Letter l : letters) s.push_back(static_cast<char>('0' + l));
    return s;
}

Word word_from_digits(std::string_view digits, int lo) {
    std::vector<Letter> ls;
    ls.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("word_from_digits: non-digit character");
        ls.push_back(static_cast<Letter>(c - '0'));
    }
    return Word(lo, std::move(ls));
}

Word config_from_digits(std::string_view digits) {
    if (digits.size() % 2 == 0) throw std::invalid_argument("config_from_digits: length must be odd");
    return word_from_digits(digits, -static_cast<int>(digits.size() / 2));
}

Word uniform_word(Letter letter, int lo, int len) {
    return Word(lo, std::vector<Letter>(static_cast<std::size_t>(len), letter));
}

Word mirror_word(const Word& w) {
    Word out(-w.hi(), w.letters);
    std::reverse(out.letters.begin(), out.letters.end());
    return out;
}

}  // namespace tracecc
