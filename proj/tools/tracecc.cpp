#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "tracecc/report.hpp"
#include "tracecc/subshift.hpp"

using nlohmann::json;
using namespace tracecc;

namespace {

// "N" for an elementary rule, "gN" for group2 of it, "@path" for a table file.
Rule parse_rule(const std::string& text) {
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw CLI::ValidationError("rule", "cannot open " + text.substr(1));
        return read_rule_table(in);
    }
    if (!text.empty() && text[0] == 'g') return group2(rule_from_number(2, std::stoi(text.substr(1))));
    return rule_from_number(2, std::stoi(text));
}

Word parse_z(const std::string& text, int n, int q) {
    Word z = text.empty() ? uniform_word(0, 0, n + 1) : word_from_digits(text, 0);
    if (z.size() != n + 1) throw CLI::ValidationError("z", "z must have length n+1");
    for (Letter l : z.letters)
        if (l >= q) throw CLI::ValidationError("z", "letter out of alphabet");
    return z;
}

SubshiftSpec load_sigma(const std::string& path, int q, int width) {
    if (path.empty()) return SubshiftSpec::full_shift(q, width);
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("sigma", "cannot open " + path);
    return read_subshift(in);
}

std::string rule_label(const Rule& rule) {
    if (rule.number >= 0) return std::to_string(rule.number);
    if (rule.origin == RuleOrigin::grouped && rule.inner && rule.inner->number >= 0)
        return "group2(" + std::to_string(rule.inner->number) + ")";
    return "custom(q=" + std::to_string(rule.q) + ")";
}

void print_rule_info(const Rule& rule) {
    std::cout << "rule " << rule_label(rule) << "  q=" << rule.q << "\n";
    ClassificationReport cls = classify_rule(rule);
    auto side = [](Sidedness s) {
        return s == Sidedness::none ? "none" : s == Sidedness::left ? "left" : s == Sidedness::right ? "right" : "both";
    };
    std::cout << "quiescent:";
    for (Letter l = 0; l < rule.q; ++l)
        if (in_set(cls.quiescent, l)) std::cout << ' ' << int(l);
    std::cout << "\nstagnating words (<=2):";
    for (const auto& w : cls.stagnating) {
        std::cout << ' ';
        for (Letter l : w) std::cout << int(l);
    }
    std::cout << "\n0-onesided: " << side(cls.zero_onesided) << "\n0-star-onesided: " << side(cls.zero_star_onesided)
              << "\n";
    const SpreadingFlags& sp = cls.nonzero_spreading;
    std::cout << "nonzero spreading: semi-strong(L=" << sp.left_semi_strong << ",R=" << sp.right_semi_strong
              << ") weak(L=" << sp.left_weak << ",R=" << sp.right_weak << ")\n";
    auto perm = [](Permutivity p) {
        return p == Permutivity::none ? "none" : p == Permutivity::left ? "left" : p == Permutivity::right ? "right" : "bi";
    };
    std::cout << "permutive: " << perm(cls.permutive) << "\n";
    if (cls.rule_number >= 0)
        std::cout << "patterns: onesided=" << cls.pattern_onesided << " spreading=" << cls.pattern_spreading
                  << " stagnating-family=" << cls.pattern_stagnating << " agree=" << cls.patterns_agree << "\n";
    write_rule_table(std::cout, rule);
}

json bounds_json(const BoundsReport& b) {
    json j;
    j["n"] = b.n;
    j["q"] = b.q;
    j["z"] = b.z.str();
    j["distinct_rows"] = b.distinct_rows;
    j["distinct_cols"] = b.distinct_cols;
    j["left_cc_bits"] = b.left_cc_bits;
    j["right_cc_bits"] = b.right_cc_bits;
    auto put = [&j](const char* key, const auto& opt) {
        if (opt) j[key] = *opt;
    };
    put("multiround_exact_bits", b.multiround_exact_bits);
    put("fooling_size", b.fooling_size);
    put("fooling_bound_bits", b.fooling_bound_bits);
    put("rank_gf2", b.rank_gf2);
    put("rank_rational", b.rank_rational);
    put("left_image_size", b.left_image_size);
    put("right_image_size", b.right_image_size);
    put("left_image_bits", b.left_image_bits);
    put("right_image_bits", b.right_image_bits);
    put("left_tau_size", b.left_tau_size);
    put("right_tau_size", b.right_tau_size);
    put("left_tau_bits", b.left_tau_bits);
    put("right_tau_bits", b.right_tau_bits);
    return j;
}

// blocks joined by '+', optional "^m" repeat suffix: "0100+0001^2"
std::vector<Word> parse_seed(const std::string& expr, int n) {
    std::string body = expr;
    int repeats = 0;
    if (auto caret = body.rfind('^'); caret != std::string::npos) {
        repeats = std::stoi(body.substr(caret + 1));
        body = body.substr(0, caret);
    }
    std::vector<std::string> blocks;
    std::size_t start = 0;
    while (true) {
        auto plus = body.find('+', start);
        blocks.push_back(body.substr(start, plus == std::string::npos ? plus : plus - start));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    if (blocks.empty() || blocks.front().empty()) throw CLI::ValidationError("mode", "empty seed block");
    if (repeats == 0) {
        if (n % static_cast<int>(blocks.front().size()) != 0)
            throw CLI::ValidationError("mode", "n is not a multiple of the block length");
        repeats = n / static_cast<int>(blocks.front().size());
    }
    return block_words(blocks, repeats);
}

void print_fooling(const FoolingSet& fs, int q, int n) {
    std::cout << "size " << fs.size() << "  bound " << fs.bound_bits() << " bits  common value "
              << fs.common_value << "\n";
    for (const auto& [i, j] : fs.pairs)
        std::cout << "  " << decode_left(i, n, q).str() << " | " << decode_right(j, n, q).str() << "\n";
}

void print_certificate(const ExpansivityCertificate& cert) {
    std::cout << (cert.side == CcSide::right ? "right" : "left") << ": ";
    if (cert.t) {
        std::cout << "t = " << *cert.t << "\n";
        return;
    }
    std::cout << "refuted up to t_max = " << cert.t_max;
    if (cert.witness)
        std::cout << "  witness " << cert.witness->first.str() << " / " << cert.witness->second.str();
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"traced communication complexity of radius-1 cellular automata"};
    app.require_subcommand(1);

    // rule info N
    auto* rule_cmd = app.add_subcommand("rule", "inspect a rule");
    rule_cmd->require_subcommand(1);
    auto* info_cmd = rule_cmd->add_subcommand("info", "print table and classification");
    std::string info_rule;
    info_cmd->add_option("rule", info_rule, "rule (N, gN or @table-file)")->required();

    // survey
    auto* survey_cmd = app.add_subcommand("survey", "sweep rules into a CSV report");
    int survey_n = 4;
    std::string survey_z = "zeros", survey_out;
    std::vector<int> survey_rules;
    survey_cmd->add_option("--n", survey_n, "trace length minus one")->required();
    survey_cmd->add_option("--z", survey_z, "zeros | all | sample:K:SEED");
    survey_cmd->add_option("--rules", survey_rules, "rule numbers (default all 256)")->delimiter(',');
    survey_cmd->add_option("--out", survey_out, "output CSV path")->required();

    // matrix
    auto* matrix_cmd = app.add_subcommand("matrix", "emit the f-hat matrix");
    std::string matrix_rule, matrix_z, matrix_pgm, matrix_dump;
    int matrix_n = 4;
    matrix_cmd->add_option("rule", matrix_rule)->required();
    matrix_cmd->add_option("--n", matrix_n)->required();
    matrix_cmd->add_option("--z", matrix_z, "target trace digits (default 0^{n+1})");
    matrix_cmd->add_option("--pgm", matrix_pgm, "render as binary PGM");
    matrix_cmd->add_option("--dump", matrix_dump, "raw TCCM dump");

    // cc
    auto* cc_cmd = app.add_subcommand("cc", "communication-complexity bounds as JSON");
    std::string cc_rule, cc_z;
    int cc_n = 4;
    cc_cmd->add_option("rule", cc_rule)->required();
    cc_cmd->add_option("--n", cc_n)->required();
    cc_cmd->add_option("--z", cc_z)->required();

    // protocol
    auto* proto_cmd = app.add_subcommand("protocol", "verify a protocol or dump a transcript");
    std::string proto_id, proto_rule, proto_z, proto_transcript;
    int proto_n = 4;
    proto_cmd->add_option("id", proto_id, "protocol name (or 'all')")->required();
    proto_cmd->add_option("rule", proto_rule)->required();
    proto_cmd->add_option("--n", proto_n)->required();
    proto_cmd->add_option("--z", proto_z);
    proto_cmd->add_option("--transcript", proto_transcript, "U,V inputs for one transcript");

    // fooling
    auto* fool_cmd = app.add_subcommand("fooling", "fooling-set lower bounds");
    std::string fool_rule, fool_mode = "greedy", fool_z, fool_sigma;
    int fool_n = 4;
    fool_cmd->add_option("rule", fool_rule)->required();
    fool_cmd->add_option("--n", fool_n)->required();
    fool_cmd->add_option("--z", fool_z);
    fool_cmd->add_option("--mode", fool_mode, "greedy | exact | legal:V");
    fool_cmd->add_option("--sigma", fool_sigma, "subshift file for legal mode (default @oddgap 2n+1)");

    // expansivity
    auto* exp_cmd = app.add_subcommand("expansivity", "one-sided expansivity certificates");
    std::string exp_rule, exp_sigma;
    int exp_tmax = 4;
    exp_cmd->add_option("rule", exp_rule)->required();
    exp_cmd->add_option("--sigma", exp_sigma, "subshift file (default full shift)");
    exp_cmd->add_option("--tmax", exp_tmax)->required();

    // entropy
    auto* ent_cmd = app.add_subcommand("entropy", "trace-language growth");
    std::string ent_rule;
    int ent_width = 1, ent_nmax = 6;
    ent_cmd->add_option("rule", ent_rule)->required();
    ent_cmd->add_option("--width", ent_width)->required();
    ent_cmd->add_option("--nmax", ent_nmax)->required();

    // group
    auto* group_cmd = app.add_subcommand("group", "print the 2-grouped rule table");
    std::string group_rule;
    group_cmd->add_option("rule", group_rule)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info_cmd) {
            print_rule_info(parse_rule(info_rule));
        } else if (*survey_cmd) {
            auto sel = parse_z_select(survey_z);
            if (!sel) throw CLI::ValidationError("z", "expected zeros | all | sample:K:SEED");
            if (survey_rules.empty())
                for (int r = 0; r < 256; ++r) survey_rules.push_back(r);
            std::ofstream out(survey_out, std::ios::binary);
            if (!out) throw CLI::ValidationError("out", "cannot open " + survey_out);
            survey(out, survey_n, *sel, survey_rules);
        } else if (*matrix_cmd) {
            Rule rule = parse_rule(matrix_rule);
            CcMatrix m = build_matrix(rule, parse_z(matrix_z, matrix_n, rule.q));
            if (matrix_pgm.empty() && matrix_dump.empty())
                throw CLI::ValidationError("matrix", "need --pgm or --dump");
            if (!matrix_pgm.empty()) {
                std::ofstream out(matrix_pgm, std::ios::binary);
                render_matrix(m, out);
            }
            if (!matrix_dump.empty()) {
                std::ofstream out(matrix_dump, std::ios::binary);
                dump_matrix(m, out);
            }
        } else if (*cc_cmd) {
            Rule rule = parse_rule(cc_rule);
            std::cout << bounds_json(cc_bounds(rule, parse_z(cc_z, cc_n, rule.q))).dump(2) << "\n";
        } else if (*proto_cmd) {
            Rule rule = parse_rule(proto_rule);
            Word z = parse_z(proto_z, proto_n, rule.q);
            std::vector<ProtocolId> ids;
            if (proto_id == "all") {
                ids = candidate_protocols();
            } else {
                auto id = parse_protocol_id(proto_id);
                if (!id) throw CLI::ValidationError("id", "unknown protocol " + proto_id);
                ids.push_back(*id);
            }
            if (!proto_transcript.empty()) {
                auto comma = proto_transcript.find(',');
                if (comma == std::string::npos) throw CLI::ValidationError("transcript", "expected U,V");
                Word u = word_from_digits(proto_transcript.substr(0, comma), -proto_n);
                Word v = word_from_digits(proto_transcript.substr(comma + 1), 1);
                Transcript tr = run_protocol(ids.front(), rule, z, u, v);
                for (const Message& msg : tr.messages) std::cout << player_name(msg.sender) << ":" << msg.bits << "\n";
                std::cout << "answer:" << tr.answer << " by:" << player_name(tr.answered_by) << "\n";
            } else {
                std::cout << "protocol            applicable verified max_bits claimed\n";
                for (const ProtocolId& id : ids) {
                    std::string name = protocol_name(id);
                    name.resize(20, ' ');
                    std::cout << name;
                    if (auto fail = applicability(id, rule, z)) {
                        std::cout << "no (" << *fail << ")\n";
                        continue;
                    }
                    VerifyReport vr = verify_protocol(id, rule, z);
                    std::cout << "yes        " << (vr.correct ? "yes" : "NO ") << "      " << vr.max_bits
                              << "        " << vr.claimed_bound << "\n";
                }
            }
        } else if (*fool_cmd) {
            Rule rule = parse_rule(fool_rule);
            Word z = parse_z(fool_z, fool_n, rule.q);
            if (fool_mode.rfind("legal:", 0) == 0) {
                SubshiftSpec spec = fool_sigma.empty() ? SubshiftSpec::odd_gap(2 * fool_n + 1)
                                                       : load_sigma(fool_sigma, rule.q, 2 * fool_n + 1);
                FoolingSet fs = legal_fooling(rule, spec, z, parse_seed(fool_mode.substr(6), fool_n));
                print_fooling(fs, rule.q, fool_n);
            } else {
                FoolingMode mode;
                if (fool_mode == "greedy") mode = FoolingMode::greedy;
                else if (fool_mode == "exact") mode = FoolingMode::exact;
                else throw CLI::ValidationError("mode", "expected greedy | exact | legal:V");
                CcMatrix m = build_matrix(rule, z);
                print_fooling(fooling_set(m, mode), rule.q, fool_n);
            }
        } else if (*exp_cmd) {
            Rule rule = parse_rule(exp_rule);
            SubshiftSpec spec = load_sigma(exp_sigma, rule.q, 2 * exp_tmax + 1);
            print_certificate(detect_expansivity(rule, spec, CcSide::right, exp_tmax));
            print_certificate(detect_expansivity(rule, spec, CcSide::left, exp_tmax));
        } else if (*ent_cmd) {
            EntropyEstimate est = entropy_estimate(parse_rule(ent_rule), ent_width, ent_nmax);
            std::cout << "width " << est.width << "\n";
            for (const auto& s : est.samples)
                std::cout << "n=" << s.n << " count=" << s.count << " slope=" << s.slope << "\n";
            std::cout << "equicontinuity-like: " << (est.equicontinuity_like ? "yes" : "no") << "\n";
        } else if (*group_cmd) {
            write_rule_table(std::cout, group2(parse_rule(group_rule)));
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
