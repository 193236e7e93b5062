#pragma once

#include <string>

#include "tracecc/cc.hpp"
#include "tracecc/classify.hpp"
#include "tracecc/trace_lang.hpp"

namespace tracecc {

enum class Player { alice, bob };

inline const char* player_name(Player p) { return p == Player::alice ? "alice" : "bob"; }

struct Message {
    Player sender;
    std::string bits;  // "0"/"1" characters; may be empty (0-bit message elided from transcripts)
};

struct Transcript {
    std::vector<Message> messages;
    int answer = 0;
    Player answered_by = Player::alice;

    int total_bits() const {
        int b = 0;
        for (const Message& m : messages) b += static_cast<int>(m.bits.size());
        return b;
    }
};

struct ProtocolId {
    enum class Kind {
        one_sided,         // B-onesided rules, z in B^{n+1}: <= 1 bit
        spreading_const,   // 0 quiescent, complement(0) semi-strongly spreading, z = 0^{n+1}: <= 1 bit
        stagnating_pair,   // 0 quiescent, 1 not weakly spreading, z = 0^{n+1}: <= 1 bit
        trace_column,      // send the forward column's index: <= ceil(log |image|) bits
        trace_tau,         // send the tau index or a "not in tau" code: <= ceil(log(|tau|+1)) bits
        grouped,           // 2-grouped rules: 1 bit
        b_star,            // B*onesided rules, z in B^{n+1}: <= ceil(log q) bits
        first_appearance,  // f(0a0)=f(0a1)=a family, z = 0^{n+1}: <= ceil(log(n+1)) bits
    };

    Kind kind = Kind::trace_column;
    LetterSet B = 1;              // one_sided, b_star
    CcSide side = CcSide::right;  // which one-round CC is bounded (right: Bob sends)
    Letter a = auto_letter;       // first_appearance; auto_letter = detect

    static constexpr Letter auto_letter = 255;
};

std::string protocol_name(const ProtocolId& id);
// Accepts "onesided", "spreading", "stagnating", "tracecolumn", "tracetau",
// "grouped", "bstar", "firstappearance", optionally suffixed ":left" / ":right".
std::optional<ProtocolId> parse_protocol_id(std::string_view name);

// The standard ids (B = {0}) on both sides, for sweeps.
std::vector<ProtocolId> candidate_protocols();

// nullopt when the id applies to (rule, z); otherwise names the failed predicate.
std::optional<std::string> applicability(const ProtocolId& id, const Rule& rule, const Word& z);

// Precomputes the shared knowledge (canonically ordered candidate sets) once and
// replays the protocol on concrete inputs. Throws applicability_error on construction
// when the id does not apply.
class ProtocolEngine {
public:
    ProtocolEngine(ProtocolId id, Rule rule, Word z);

    Transcript run(const Word& u, const Word& v) const;
    int claimed_bound() const { return claimed_bound_; }
    const ProtocolId& id() const { return id_; }

private:
    Transcript run_one_sided(const Word& u, const Word& v) const;
    Transcript run_spreading(const Word& u, const Word& v) const;
    Transcript run_stagnating(const Word& u, const Word& v) const;
    Transcript run_column_code(const Word& u, const Word& v) const;
    Transcript run_grouped(const Word& u, const Word& v) const;

    ProtocolId id_;
    Rule rule_;
    Word z_;
    int n_;
    int claimed_bound_ = 0;
    // kind-specific shared knowledge
    Sidedness onesided_dir_ = Sidedness::none;
    CcSide spreading_sender_ = CcSide::right;
    bool zero_stagnating_ = false;
    std::vector<Word> sender_codebook_;  // trace_column / trace_tau: ordered candidate columns
    bool tau_mode_ = false;
    std::vector<Word> tau_left_, tau_right_;  // grouped
    Letter fa_letter_ = 0;                    // first_appearance
};

Transcript run_protocol(const ProtocolId& id, const Rule& rule, const Word& z, const Word& u,
                        const Word& v);

struct VerifyReport {
    bool correct = false;
    int max_bits = 0;
    int claimed_bound = 0;
    std::uint64_t checked = 0;
};

// Runs the protocol on every (u, v) pair and compares against the f̂_z oracle.
VerifyReport verify_protocol(const ProtocolId& id, const Rule& rule, const Word& z);

}  // namespace tracecc
