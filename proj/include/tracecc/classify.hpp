#pragma once

#include <cstdint>

#include "tracecc/rule.hpp"

namespace tracecc {

enum class Sidedness { none, left, right, both };
enum class Permutivity { none, left, right, bi };
enum class OnesidedMode { plain, star };

// Subset of the alphabet as a bitmask over letters 0..q-1.
using LetterSet = std::uint32_t;

inline bool in_set(LetterSet s, Letter l) { return (s >> l) & 1u; }
LetterSet full_set(int q);

// plain: output ignores one extreme cell whenever the MIDDLE cell is in B.
// star: output ignores the right cell whenever the LEFT cell is in B
//       (resp. left cell / right cell in B).
Sidedness onesidedness(const Rule& rule, LetterSet B, OnesidedMode mode);

struct SpreadingFlags {
    bool left_semi_strong = false;
    bool right_semi_strong = false;
    bool left_weak = false;
    bool right_weak = false;
};

// B left semi-strongly spreading: f(A ~B B) in B; weakly: f(~B ~B B) in B.
// Right side symmetric.
SpreadingFlags spreading_status(const Rule& rule, LetterSet B);

Permutivity permutivity(const Rule& rule);

bool is_quiescent(const Rule& rule, Letter l);

// Words unchanged by the rule regardless of outer context (search capped at length 2).
bool is_stagnating(const Rule& rule, const std::vector<Letter>& word);
std::vector<std::vector<Letter>> stagnating_words(const Rule& rule, int max_len = 2);

struct ClassificationReport {
    int rule_number = -1;  // -1 for non-elementary rules
    int q = 2;
    LetterSet quiescent = 0;
    std::vector<std::vector<Letter>> stagnating;  // up to length 2
    Sidedness zero_onesided = Sidedness::none;        // B = {0}, plain
    Sidedness zero_star_onesided = Sidedness::none;   // B = {0}, star
    SpreadingFlags nonzero_spreading;                 // B = complement of {0}
    Permutivity permutive = Permutivity::none;
    std::vector<bool> legal_on_full_shift;            // per candidate zero letter

    // Elementary-only cross-checks of the bit-pattern families against the
    // semantic tests; meaningful when rule_number >= 0.
    bool pattern_onesided = false;
    bool pattern_spreading = false;
    bool pattern_stagnating = false;
    bool patterns_agree = true;
};

ClassificationReport classify_rule(const Rule& rule);

// Bit-pattern families over elementary rule numbers.
bool pattern_zero_onesided(int number);    // a7a6a4a4a3a2a0a0 or a7a6a1a0a3a2a1a0
bool pattern_spreading(int number);        // a7a6 1 1 a3a2a1a0 or a7a6 1 a4a3a2 1 a0
bool pattern_stagnating_family(int number);  // a7a6a5 0 a3a2 0 0

}  // namespace tracecc
