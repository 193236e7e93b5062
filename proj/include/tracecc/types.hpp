#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tracecc {

using Letter = std::uint8_t;

// Enumeration larger than the configured budget (see TRACECC_BUDGET).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A protocol was requested for a (rule, z) pair that fails its applicability predicate.
struct applicability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Maximum number of items (cells, words, triangles) a single enumeration may touch.
// Overridable through the TRACECC_BUDGET environment variable.
std::uint64_t enumeration_budget();

void check_budget(std::uint64_t needed, const char* what);

// A finite word with absolute integer positions lo..hi.
// Configurations are centered words on [-n..n].
struct Word {
    int lo = 0;
    std::vector<Letter> letters;

    Word() = default;
    Word(int lo_, std::vector<Letter> ls) : lo(lo_), letters(std::move(ls)) {}

    int hi() const { return lo + static_cast<int>(letters.size()) - 1; }
    int size() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }

    Letter at(int k) const { return letters[static_cast<std::size_t>(k - lo)]; }
    Letter& at(int k) { return letters[static_cast<std::size_t>(k - lo)]; }

    bool centered() const { return lo == -hi(); }
    // Half-width n of a centered word of length 2n+1.
    int radius() const { return hi(); }

    Word slice(int i, int j) const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

    std::string str() const;
};

// Parse a digit string ("00101") into a word starting at position lo.
Word word_from_digits(std::string_view digits, int lo);

// Centered word of length 2n+1 from a digit string.
Word config_from_digits(std::string_view digits);

// Uniform word of `letter` on [lo..lo+len-1].
Word uniform_word(Letter letter, int lo, int len);

// mirror(w)_{-k} = w_k; an involution.
Word mirror_word(const Word& w);

}  // namespace tracecc
