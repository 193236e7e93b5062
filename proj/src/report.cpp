#include "tracecc/report.hpp"

#include <atomic>
#include <charconv>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace tracecc {

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

Word z_from_index(std::uint64_t index, int n, int q) {
    Word z(0, std::vector<Letter>(static_cast<std::size_t>(n + 1)));
    for (auto& l : z.letters) {
        l = static_cast<Letter>(index % static_cast<unsigned>(q));
        index /= static_cast<unsigned>(q);
    }
    return z;
}

const char* sidedness_name(Sidedness s) {
    switch (s) {
        case Sidedness::none: return "none";
        case Sidedness::left: return "left";
        case Sidedness::right: return "right";
        case Sidedness::both: return "both";
    }
    return "?";
}

const char* permutivity_name(Permutivity p) {
    switch (p) {
        case Permutivity::none: return "none";
        case Permutivity::left: return "left";
        case Permutivity::right: return "right";
        case Permutivity::bi: return "bi";
    }
    return "?";
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
    return v ? std::to_string(*v) : std::string{};
}

std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n') c = ';';
    return s;
}

}  // namespace

std::optional<ZSelect> parse_z_select(std::string_view text) {
    ZSelect sel;
    if (text == "zeros") return sel;
    if (text == "all") {
        sel.mode = ZMode::all;
        return sel;
    }
    if (text.starts_with("sample:")) {
        sel.mode = ZMode::sample;
        std::string rest(text.substr(7));
        auto colon = rest.find(':');
        if (colon == std::string::npos) return std::nullopt;
        try {
            sel.count = std::stoull(rest.substr(0, colon));
            sel.seed = std::stoull(rest.substr(colon + 1));
        } catch (...) {
            return std::nullopt;
        }
        if (sel.count == 0) return std::nullopt;
        return sel;
    }
    return std::nullopt;
}

std::vector<Word> select_z(const ZSelect& sel, int n, int q) {
    std::vector<Word> out;
    switch (sel.mode) {
        case ZMode::zeros:
            out.push_back(uniform_word(0, 0, n + 1));
            break;
        case ZMode::all: {
            const std::uint64_t total = ipow(static_cast<std::uint64_t>(q), n + 1);
            check_budget(total, "select_z");
            for (std::uint64_t i = 0; i < total; ++i) out.push_back(z_from_index(i, n, q));
            break;
        }
        case ZMode::sample: {
            std::mt19937_64 rng(sel.seed);
            const std::uint64_t total = ipow(static_cast<std::uint64_t>(q), n + 1);
            std::uniform_int_distribution<std::uint64_t> dist(0, total - 1);
            for (std::uint64_t i = 0; i < sel.count; ++i) out.push_back(z_from_index(dist(rng), n, q));
            break;
        }
    }
    return out;
}

SurveyRow survey_row(int rule_number, const Word& z) {
    SurveyRow row;
    row.rule = rule_number;
    row.n = z.size() - 1;
    row.z = z;
    Rule rule = rule_from_number(2, rule_number);
    row.cls = classify_rule(rule);
    try {
        row.bounds = cc_bounds(rule, z);
    } catch (const resource_error& e) {
        row.error = e.what();
    }
    for (const ProtocolId& id : candidate_protocols()) {
        if (applicability(id, rule, z)) continue;
        try {
            VerifyReport vr = verify_protocol(id, rule, z);
            row.protocols.push_back(
                {protocol_name(id), vr.correct && vr.max_bits <= vr.claimed_bound, vr.max_bits, vr.claimed_bound});
        } catch (const resource_error&) {
        }
    }
    return row;
}

const char* const survey_header =
    "tracecc-v1,rule,n,z,quiescent,onesided,star,spreading,stagnating,permutive,"
    "distinct_rows,distinct_cols,left_bits,right_bits,multiround,fooling_bits,rank_gf2,rank_q,"
    "image_left_bits,image_right_bits,tau_left_bits,tau_right_bits,protocols,error";

std::string format_survey_row(std::uint64_t index, const SurveyRow& row) {
    std::ostringstream out;
    out << index << ',' << row.rule << ',' << row.n << ',' << row.z.str() << ',';
    for (Letter l = 0; l < row.cls.q; ++l)
        if (in_set(row.cls.quiescent, l)) out << static_cast<char>('0' + l);
    out << ',' << sidedness_name(row.cls.zero_onesided) << ',' << sidedness_name(row.cls.zero_star_onesided)
        << ',';
    const SpreadingFlags& sp = row.cls.nonzero_spreading;
    if (sp.left_semi_strong) out << 'L';
    if (sp.right_semi_strong) out << 'R';
    if (sp.left_weak) out << 'l';
    if (sp.right_weak) out << 'r';
    out << ',' << row.cls.stagnating.size() << ',' << permutivity_name(row.cls.permutive) << ',';
    if (row.bounds) {
        const BoundsReport& b = *row.bounds;
        out << b.distinct_rows << ',' << b.distinct_cols << ',' << b.left_cc_bits << ',' << b.right_cc_bits
            << ',' << opt_str(b.multiround_exact_bits) << ',' << opt_str(b.fooling_bound_bits) << ','
            << opt_str(b.rank_gf2) << ',' << opt_str(b.rank_rational) << ',' << opt_str(b.left_image_bits)
            << ',' << opt_str(b.right_image_bits) << ',' << opt_str(b.left_tau_bits) << ','
            << opt_str(b.right_tau_bits) << ',';
    } else {
        out << ",,,,,,,,,,,,";
    }
    bool first = true;
    for (const auto& p : row.protocols) {
        if (!first) out << ';';
        first = false;
        out << p.name << '=' << (p.ok ? "ok" : "FAIL") << '@' << p.max_bits << '/' << p.claimed;
    }
    out << ',' << sanitize(row.error);
    return out.str();
}

void survey(std::ostream& out, int n, const ZSelect& sel, const std::vector<int>& rules,
            unsigned workers) {
    std::vector<Word> zs = select_z(sel, n, 2);
    struct Task {
        int rule;
        const Word* z;
    };
    std::vector<Task> tasks;
    for (int r : rules)
        for (const Word& z : zs) tasks.push_back({r, &z});
    std::vector<std::string> lines(tasks.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
            lines[i] = format_survey_row(i, survey_row(tasks[i].rule, *tasks[i].z));
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    out << survey_header << '\n';
    for (const std::string& line : lines) out << line << '\n';
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) return table;
    table.header = line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        table.rows.push_back(std::move(fields));
    }
    return table;
}

void write_csv(std::ostream& out, const CsvTable& table) {
    out << table.header << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    }
}

void render_matrix(const CcMatrix& m, std::ostream& out) {
    out << "P5\n" << m.side << ' ' << m.side << "\n255\n";
    std::string bytes;
    bytes.reserve(static_cast<std::size_t>(m.side * m.side));
    for (std::uint64_t i = 0; i < m.side; ++i)
        for (std::uint64_t j = 0; j < m.side; ++j) {
            unsigned char px;
            if (!m.hat_at(i, j)) px = 255;
            else if (m.rule.q == 2) px = m.top_at(i, j) == 1 ? 0 : 128;
            else px = 0;
            bytes.push_back(static_cast<char>(px));
        }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void dump_matrix(const CcMatrix& m, std::ostream& out) {
    out.write("TCCM", 4);
    const unsigned char head[3] = {1, static_cast<unsigned char>(m.rule.q), static_cast<unsigned char>(m.n)};
    out.write(reinterpret_cast<const char*>(head), 3);
    out.write(reinterpret_cast<const char*>(m.z.letters.data()),
              static_cast<std::streamsize>(m.z.letters.size()));
    std::string bytes;
    bytes.reserve(static_cast<std::size_t>(2 * m.side * m.side));
    for (std::uint64_t k = 0; k < m.side * m.side; ++k) {
        bytes.push_back(static_cast<char>(m.hat[k]));
        bytes.push_back(static_cast<char>(m.top[k]));
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

CcMatrix load_matrix(std::istream& in, const Rule& rule) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string_view(magic, 4) != "TCCM") throw std::invalid_argument("load_matrix: bad magic");
    unsigned char head[3];
    in.read(reinterpret_cast<char*>(head), 3);
    if (!in || head[0] != 1) throw std::invalid_argument("load_matrix: bad version");
    if (head[1] != rule.q) throw std::invalid_argument("load_matrix: alphabet mismatch");
    CcMatrix m;
    m.rule = rule;
    m.n = head[2];
    m.z = Word(0, std::vector<Letter>(static_cast<std::size_t>(m.n + 1)));
    in.read(reinterpret_cast<char*>(m.z.letters.data()), m.n + 1);
    m.side = ipow(static_cast<std::uint64_t>(rule.q), m.n);
    const std::uint64_t cells = m.side * m.side;
    m.hat.resize(cells);
    m.top.resize(cells);
    std::vector<unsigned char> buf(2 * cells);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!in) throw std::invalid_argument("load_matrix: truncated payload");
    for (std::uint64_t k = 0; k < cells; ++k) {
        m.hat[k] = buf[2 * k];
        m.top[k] = buf[2 * k + 1];
    }
    return m;
}

}  // namespace tracecc
