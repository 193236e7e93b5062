#pragma once

#include <iosfwd>

#include "tracecc/classify.hpp"
#include "tracecc/protocols.hpp"

namespace tracecc {

enum class ZMode { zeros, all, sample };

struct ZSelect {
    ZMode mode = ZMode::zeros;
    std::uint64_t count = 0;  // sample only
    std::uint64_t seed = 0;   // sample only
};

// "zeros" | "all" | "sample:COUNT:SEED"
std::optional<ZSelect> parse_z_select(std::string_view text);
std::vector<Word> select_z(const ZSelect& sel, int n, int q);

struct SurveyRow {
    int rule = 0;
    int n = 0;
    Word z;
    ClassificationReport cls;
    std::optional<BoundsReport> bounds;  // absent when the whole row blew the budget
    // per applicable candidate protocol: name, verified, max bits observed
    struct ProtocolOutcome {
        std::string name;
        bool ok = false;
        int max_bits = 0;
        int claimed = 0;
    };
    std::vector<ProtocolOutcome> protocols;
    std::string error;  // in-row budget failures
};

SurveyRow survey_row(int rule_number, const Word& z);

extern const char* const survey_header;
std::string format_survey_row(std::uint64_t index, const SurveyRow& row);

// One row per (rule, z); rows computed by a worker pool, emitted in order.
void survey(std::ostream& out, int n, const ZSelect& sel, const std::vector<int>& rules,
            unsigned workers = 0);

// Byte-identical round-trip companion for emitted CSV.
struct CsvTable {
    std::string header;
    std::vector<std::vector<std::string>> rows;
};
CsvTable read_csv(std::istream& in);
void write_csv(std::ostream& out, const CsvTable& table);

// P5 grayscale: white = accepted (hat 0); for binary rules rejected cells split
// into black (top letter 1) and gray 128 (top letter 0); other alphabets render
// rejected cells black. Row 0 (Alice index 0) at the top.
void render_matrix(const CcMatrix& m, std::ostream& out);

// "TCCM" dump: magic, version 1, q, n, z letters, then row-major (hat, top) byte pairs.
void dump_matrix(const CcMatrix& m, std::ostream& out);
CcMatrix load_matrix(std::istream& in, const Rule& rule);

}  // namespace tracecc
