#pragma once

#include <iosfwd>
#include <memory>
#include <optional>

#include "tracecc/types.hpp"

namespace tracecc {

enum class RuleOrigin { elementary, grouped, custom };

// A radius-1 local map A^3 -> A over the alphabet {0..q-1}.
struct Rule {
    int q = 2;
    // table[(a*q + b)*q + c] = f(a,b,c); defined for all q^3 triples.
    std::vector<Letter> table;
    RuleOrigin origin = RuleOrigin::custom;
    int number = -1;                     // canonical number, elementary rules only
    std::shared_ptr<const Rule> inner;   // the inner rule, grouped rules only

    Letter apply(Letter a, Letter b, Letter c) const {
        return table[(static_cast<std::size_t>(a) * q + b) * q + c];
    }

    std::size_t alphabet_letters() const { return static_cast<std::size_t>(q); }

    bool operator==(const Rule& o) const { return q == o.q && table == o.table; }
};

// Elementary constructor: table(a,b,c) = bit (4a+2b+c) of number. Binary alphabet only.
Rule rule_from_number(int q, int number);

// Inverse of rule_from_number; rejects non-binary alphabets.
int rule_to_number(const Rule& rule);

// Custom rule from an explicit table indexed (a*q+b)*q+c.
Rule rule_from_table(int q, std::vector<Letter> table);

// 2-grouping: pairs encoded as q*x + y on the alphabet of size q^2.
// group2(g)((x-1,y-1),(x0,y0),(x1,y1)) = (g(y-1,x0,y0), g(x0,y0,x1)).
Rule group2(const Rule& rule);

// Reflected rule: f~(a,b,c) = f(c,b,a).
Rule mirror_rule(const Rule& rule);

// Rule table text format: first line q, then q^3 lines "a b c -> d" in
// lexicographic order of (a,b,c).
Rule read_rule_table(std::istream& in);
void write_rule_table(std::ostream& out, const Rule& rule);

}  // namespace tracecc
