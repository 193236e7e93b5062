#include "tracecc/rule.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace tracecc {

Rule rule_from_number(int q, int number) {
    if (q != 2) throw std::invalid_argument("rule_from_number: only q = 2 rules carry canonical numbers");
    if (number < 0 || number > 255) throw std::invalid_argument("rule_from_number: number must be in [0, 255]");
    Rule r;
    r.q = 2;
    r.origin = RuleOrigin::elementary;
    r.number = number;
    r.table.resize(8);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                r.table[(a * 2 + b) * 2 + c] = static_cast<Letter>((number >> (4 * a + 2 * b + c)) & 1);
    return r;
}

int rule_to_number(const Rule& rule) {
    if (rule.q != 2) throw std::invalid_argument("rule_to_number: non-binary alphabet");
    int number = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                number |= rule.apply(a, b, c) << (4 * a + 2 * b + c);
    return number;
}

Rule rule_from_table(int q, std::vector<Letter> table) {
    if (q < 2) throw std::invalid_argument("rule_from_table: alphabet size must be at least 2");
    std::size_t cells = static_cast<std::size_t>(q) * q * q;
    if (table.size() != cells) throw std::invalid_argument("rule_from_table: table must have q^3 entries");
    for (Letter l : table)
        if (l >= q) throw std::invalid_argument("rule_from_table: letter out of alphabet");
    Rule r;
    r.q = q;
    r.table = std::move(table);
    r.origin = RuleOrigin::custom;
    return r;
}

Rule group2(const Rule& rule) {
    const int q = rule.q;
    const int Q = q * q;
    Rule g;
    g.q = Q;
    g.origin = RuleOrigin::grouped;
    g.inner = std::make_shared<Rule>(rule);
    g.table.resize(static_cast<std::size_t>(Q) * Q * Q);
    for (int a = 0; a < Q; ++a)
        for (int b = 0; b < Q; ++b)
            for (int c = 0; c < Q; ++c) {
                Letter xm = static_cast<Letter>(a / q), ym = static_cast<Letter>(a % q);
                Letter x0 = static_cast<Letter>(b / q), y0 = static_cast<Letter>(b % q);
                Letter x1 = static_cast<Letter>(c / q);
                (void)xm;
                Letter out_x = rule.apply(ym, x0, y0);
                Letter out_y = rule.apply(x0, y0, x1);
                g.table[(static_cast<std::size_t>(a) * Q + b) * Q + c] =
                    static_cast<Letter>(out_x * q + out_y);
            }
    return g;
}

Rule mirror_rule(const Rule& rule) {
    Rule m;
    m.q = rule.q;
    m.origin = RuleOrigin::custom;
    m.table.resize(rule.table.size());
    for (int a = 0; a < rule.q; ++a)
        for (int b = 0; b < rule.q; ++b)
            for (int c = 0; c < rule.q; ++c)
                m.table[(static_cast<std::size_t>(a) * rule.q + b) * rule.q + c] =
                    rule.apply(static_cast<Letter>(c), static_cast<Letter>(b), static_cast<Letter>(a));
    return m;
}

Rule read_rule_table(std::istream& in) {
    int q = 0;
    if (!(in >> q) || q < 2) throw std::invalid_argument("rule table: bad alphabet size line");
    std::vector<Letter> table(static_cast<std::size_t>(q) * q * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                int ra, rb, rc, rd;
                std::string arrow;
                if (!(in >> ra >> rb >> rc >> arrow >> rd) || arrow != "->")
                    throw std::invalid_argument("rule table: malformed entry line");
                if (ra != a || rb != b || rc != c)
                    throw std::invalid_argument("rule table: entries must be in lexicographic order");
                if (rd < 0 || rd >= q) throw std::invalid_argument("rule table: output letter out of range");
                table[(static_cast<std::size_t>(a) * q + b) * q + c] = static_cast<Letter>(rd);
            }
    return rule_from_table(q, std::move(table));
}

void write_rule_table(std::ostream& out, const Rule& rule) {
    out << rule.q << '\n';
    for (int a = 0; a < rule.q; ++a)
        for (int b = 0; b < rule.q; ++b)
            for (int c = 0; c < rule.q; ++c)
                out << a << ' ' << b << ' ' << c << " -> " << int(rule.apply(a, b, c)) << '\n';
}

}  // namespace tracecc
