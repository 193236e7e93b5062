#include "tracecc/protocols.hpp"

#include <algorithm>

namespace tracecc {

namespace {

std::string to_bits(std::uint64_t x, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i)
        if ((x >> i) & 1) s[static_cast<std::size_t>(width - 1 - i)] = '1';
    return s;
}

std::uint64_t from_bits(const std::string& s) {
    std::uint64_t x = 0;
    for (char c : s) x = (x << 1) | static_cast<std::uint64_t>(c == '1');
    return x;
}

bool all_in(const Word& z, LetterSet B) {
    for (Letter l : z.letters)
        if (!in_set(B, l)) return false;
    return true;
}

bool is_uniform_zero(const Word& z) {
    for (Letter l : z.letters)
        if (l != 0) return false;
    return true;
}

// Answer computed by the player on the closed side of a B-leftsided rule:
// the center's next value never reads the open side while the center stays in B.
// `half` is the left word on [-n..-1]; mirror everything for the right case.
int one_sided_answer(const Rule& rule, const Word& z, const Word& half) {
    const int n = z.size() - 1;
    std::vector<Letter> cells(half.letters);  // positions -n..-1
    cells.push_back(z.at(0));                 // center
    for (int t = 0; t < n; ++t) {
        std::vector<Letter> next;
        next.reserve(cells.size() - 1);
        for (std::size_t k = 1; k + 1 < cells.size(); ++k)
            next.push_back(rule.apply(cells[k - 1], cells[k], cells[k + 1]));
        // center: third argument irrelevant while the middle letter stays in B
        next.push_back(rule.apply(cells[cells.size() - 2], cells.back(), cells.back()));
        if (next.back() != z.at(t + 1)) return 1;
        cells = std::move(next);
    }
    return 0;
}

// Exact f̂_z by direct triangle evaluation; used when one player knows both halves.
int full_answer(const Rule& rule, const Word& z, const Word& u, const Word& v) {
    const int n = z.size() - 1;
    Word w(-n, {});
    w.letters.insert(w.letters.end(), u.letters.begin(), u.letters.end());
    w.letters.push_back(z.at(0));
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    Word trace = central_trace(rule, w);
    return trace == z ? 0 : 1;
}

// Do the three juxtaposed columns (left column, z, right column) form a valid
// central evolution?
bool columns_consistent(const Rule& rule, const Word& z, const Word& left_col, const Word& right_col) {
    const int n = z.size() - 1;
    for (int t = 0; t < n; ++t)
        if (rule.apply(left_col.letters[static_cast<std::size_t>(t)], z.at(t),
                       right_col.letters[static_cast<std::size_t>(t)]) != z.at(t + 1))
            return false;
    return true;
}

}  // namespace

std::string protocol_name(const ProtocolId& id) {
    std::string base;
    switch (id.kind) {
        case ProtocolId::Kind::one_sided: base = "onesided"; break;
        case ProtocolId::Kind::spreading_const: base = "spreading"; break;
        case ProtocolId::Kind::stagnating_pair: base = "stagnating"; break;
        case ProtocolId::Kind::trace_column: base = "tracecolumn"; break;
        case ProtocolId::Kind::trace_tau: base = "tracetau"; break;
        case ProtocolId::Kind::grouped: base = "grouped"; break;
        case ProtocolId::Kind::b_star: base = "bstar"; break;
        case ProtocolId::Kind::first_appearance: base = "firstappearance"; break;
    }
    switch (id.kind) {
        case ProtocolId::Kind::trace_column:
        case ProtocolId::Kind::trace_tau:
        case ProtocolId::Kind::b_star:
        case ProtocolId::Kind::first_appearance:
            base += id.side == CcSide::right ? ":right" : ":left";
            break;
        default:
            break;
    }
    return base;
}

std::optional<ProtocolId> parse_protocol_id(std::string_view name) {
    ProtocolId id;
    std::string_view base = name;
    if (auto pos = name.find(':'); pos != std::string_view::npos) {
        base = name.substr(0, pos);
        std::string_view side = name.substr(pos + 1);
        if (side == "left") id.side = CcSide::left;
        else if (side == "right") id.side = CcSide::right;
        else return std::nullopt;
    }
    if (base == "onesided") id.kind = ProtocolId::Kind::one_sided;
    else if (base == "spreading") id.kind = ProtocolId::Kind::spreading_const;
    else if (base == "stagnating") id.kind = ProtocolId::Kind::stagnating_pair;
    else if (base == "tracecolumn") id.kind = ProtocolId::Kind::trace_column;
    else if (base == "tracetau") id.kind = ProtocolId::Kind::trace_tau;
    else if (base == "grouped") id.kind = ProtocolId::Kind::grouped;
    else if (base == "bstar") id.kind = ProtocolId::Kind::b_star;
    else if (base == "firstappearance") id.kind = ProtocolId::Kind::first_appearance;
    else return std::nullopt;
    return id;
}

std::vector<ProtocolId> candidate_protocols() {
    std::vector<ProtocolId> ids;
    using K = ProtocolId::Kind;
    ids.push_back({K::one_sided, 1, CcSide::right, ProtocolId::auto_letter});
    ids.push_back({K::spreading_const, 1, CcSide::right, ProtocolId::auto_letter});
    ids.push_back({K::stagnating_pair, 1, CcSide::right, ProtocolId::auto_letter});
    for (CcSide s : {CcSide::right, CcSide::left}) {
        ids.push_back({K::trace_column, 1, s, ProtocolId::auto_letter});
        ids.push_back({K::trace_tau, 1, s, ProtocolId::auto_letter});
        ids.push_back({K::b_star, 1, s, ProtocolId::auto_letter});
        ids.push_back({K::first_appearance, 1, s, ProtocolId::auto_letter});
    }
    ids.push_back({K::grouped, 1, CcSide::right, ProtocolId::auto_letter});
    return ids;
}

std::optional<std::string> applicability(const ProtocolId& id, const Rule& rule, const Word& z) {
    using K = ProtocolId::Kind;
    switch (id.kind) {
        case K::one_sided: {
            if (id.B == 0) return "B is empty";
            if (!all_in(z, id.B)) return "z has a letter outside B";
            if (onesidedness(rule, id.B, OnesidedMode::plain) == Sidedness::none)
                return "rule is not B-onesided";
            return std::nullopt;
        }
        case K::spreading_const: {
            if (!is_quiescent(rule, 0)) return "letter 0 is not quiescent";
            if (!is_uniform_zero(z)) return "z is not 0^{n+1}";
            SpreadingFlags fl = spreading_status(rule, full_set(rule.q) & ~LetterSet{1});
            if (!fl.left_semi_strong && !fl.right_semi_strong)
                return "complement of 0 is not semi-strongly spreading on either side";
            return std::nullopt;
        }
        case K::stagnating_pair: {
            if (rule.q != 2) return "binary alphabet required";
            if (!is_quiescent(rule, 0)) return "letter 0 is not quiescent";
            if (!is_uniform_zero(z)) return "z is not 0^{n+1}";
            SpreadingFlags fl = spreading_status(rule, LetterSet{2});
            if (fl.left_weak || fl.right_weak) return "letter 1 is weakly spreading";
            return std::nullopt;
        }
        case K::trace_column:
        case K::trace_tau:
            return std::nullopt;
        case K::grouped:
            if (rule.origin != RuleOrigin::grouped || !rule.inner)
                return "rule is not tagged as a 2-grouped rule";
            return std::nullopt;
        case K::b_star: {
            if (id.B == 0) return "B is empty";
            if (!all_in(z, id.B)) return "z has a letter outside B";
            Sidedness s = onesidedness(rule, id.B, OnesidedMode::star);
            if (id.side == CcSide::right && s != Sidedness::left && s != Sidedness::both)
                return "rule is not B*leftsided";
            if (id.side == CcSide::left && s != Sidedness::right && s != Sidedness::both)
                return "rule is not B*rightsided";
            return std::nullopt;
        }
        case K::first_appearance: {
            if (rule.q != 2) return "binary alphabet required";
            if (!is_uniform_zero(z)) return "z is not 0^{n+1}";
            auto holds = [&](Letter a) {
                return id.side == CcSide::right
                           ? rule.apply(0, a, 0) == a && rule.apply(0, a, 1) == a
                           : rule.apply(0, a, 0) == a && rule.apply(1, a, 0) == a;
            };
            if (id.a != ProtocolId::auto_letter) {
                if (id.a > 1 || !holds(id.a)) return "f(0a0)=f(0a1)=a fails for the given letter";
                return std::nullopt;
            }
            if (!holds(0) && !holds(1)) return "no letter a satisfies f(0a0)=f(0a1)=a";
            return std::nullopt;
        }
    }
    return "unknown protocol";
}

ProtocolEngine::ProtocolEngine(ProtocolId id, Rule rule, Word z)
    : id_(id), rule_(std::move(rule)), z_(std::move(z)), n_(z_.size() - 1) {
    if (auto fail = applicability(id_, rule_, z_))
        throw applicability_error(protocol_name(id_) + " not applicable: " + *fail);
    using K = ProtocolId::Kind;
    switch (id_.kind) {
        case K::one_sided:
            onesided_dir_ = onesidedness(rule_, id_.B, OnesidedMode::plain);
            claimed_bound_ = 1;
            break;
        case K::spreading_const: {
            SpreadingFlags fl = spreading_status(rule_, full_set(rule_.q) & ~LetterSet{1});
            spreading_sender_ = fl.left_semi_strong ? CcSide::right : CcSide::left;
            claimed_bound_ = 1;
            break;
        }
        case K::stagnating_pair:
            zero_stagnating_ = rule_.apply(1, 0, 1) == 0;
            claimed_bound_ = 1;
            break;
        case K::trace_column:
            sender_codebook_ = forward_image(rule_, z_, id_.side);
            claimed_bound_ = ceil_log2(sender_codebook_.size());
            break;
        case K::trace_tau:
            tau_mode_ = true;
            sender_codebook_ = tau_set(rule_, z_, id_.side);
            claimed_bound_ = ceil_log2(sender_codebook_.size() + 1);
            break;
        case K::grouped:
            tau_right_ = tau_set(rule_, z_, CcSide::right);
            tau_left_ = tau_set(rule_, z_, CcSide::left);
            claimed_bound_ = 1;
            break;
        case K::b_star:
            claimed_bound_ = ceil_log2(static_cast<std::uint64_t>(rule_.q));
            break;
        case K::first_appearance: {
            auto holds = [&](Letter a) {
                return id_.side == CcSide::right
                           ? rule_.apply(0, a, 0) == a && rule_.apply(0, a, 1) == a
                           : rule_.apply(0, a, 0) == a && rule_.apply(1, a, 0) == a;
            };
            fa_letter_ = id_.a != ProtocolId::auto_letter ? id_.a : (holds(0) ? Letter{0} : Letter{1});
            claimed_bound_ = ceil_log2(static_cast<std::uint64_t>(n_) + 1);
            break;
        }
    }
}

Transcript ProtocolEngine::run_one_sided(const Word& u, const Word& v) const {
    Transcript tr;
    if (onesided_dir_ == Sidedness::right || onesided_dir_ == Sidedness::both) {
        // B-rightsided: Bob computes alone, nothing is sent
        tr.answer = one_sided_answer(mirror_rule(rule_), z_, mirror_word(v));
        tr.answered_by = Player::bob;
    } else {
        // B-leftsided: Alice computes the answer and hands it to Bob
        int ans = one_sided_answer(rule_, z_, u);
        tr.messages.push_back({Player::alice, ans ? "1" : "0"});
        tr.answer = ans;
        tr.answered_by = Player::bob;
    }
    return tr;
}

Transcript ProtocolEngine::run_spreading(const Word& u, const Word& v) const {
    Transcript tr;
    const bool bob_sends = spreading_sender_ == CcSide::right;
    const Word& sender_word = bob_sends ? v : u;
    bool has_nonzero = false;
    for (Letter l : sender_word.letters)
        if (l != 0) { has_nonzero = true; break; }
    tr.messages.push_back({bob_sends ? Player::bob : Player::alice, has_nonzero ? "1" : "0"});
    tr.answered_by = bob_sends ? Player::alice : Player::bob;
    if (has_nonzero) {
        tr.answer = 1;  // the nonzero letter spreads to the center
    } else {
        // the receiver now knows the sender's word is uniform 0
        Word zeros = bob_sends ? uniform_word(0, 1, n_) : uniform_word(0, -n_, n_);
        tr.answer = bob_sends ? full_answer(rule_, z_, u, zeros) : full_answer(rule_, z_, zeros, v);
    }
    return tr;
}

Transcript ProtocolEngine::run_stagnating(const Word& u, const Word& v) const {
    Transcript tr;
    if (zero_stagnating_) {
        // f(101) = 0: the central 0 never changes, the trace is 0^{n+1} for every input
        tr.answer = 0;
        tr.answered_by = Player::bob;
        return tr;
    }
    // f(101) = 1: 00 stagnates but single 0s disappear, so the trace stays 0^{n+1}
    // exactly when one of the two inner letters is 0
    Letter vb = v.at(1);
    tr.messages.push_back({Player::bob, vb ? "1" : "0"});
    tr.answer = (u.at(-1) != 0 && vb != 0) ? 1 : 0;
    tr.answered_by = Player::alice;
    return tr;
}

Transcript ProtocolEngine::run_column_code(const Word& u, const Word& v) const {
    Transcript tr;
    const bool bob_sends = id_.side == CcSide::right;
    const Word& sender_word = bob_sends ? v : u;
    const Player sender = bob_sends ? Player::bob : Player::alice;
    tr.answered_by = bob_sends ? Player::alice : Player::bob;

    Word col = forward_column(rule_, z_, sender_word, id_.side);

    // encode
    std::string bits;
    bool not_in_tau = false;
    switch (id_.kind) {
        case ProtocolId::Kind::trace_column: {
            auto it = std::lower_bound(sender_codebook_.begin(), sender_codebook_.end(), col);
            bits = to_bits(static_cast<std::uint64_t>(it - sender_codebook_.begin()), claimed_bound_);
            break;
        }
        case ProtocolId::Kind::trace_tau: {
            auto it = std::lower_bound(sender_codebook_.begin(), sender_codebook_.end(), col);
            std::uint64_t index;
            if (it != sender_codebook_.end() && *it == col) {
                index = static_cast<std::uint64_t>(it - sender_codebook_.begin());
            } else {
                index = sender_codebook_.size();  // prespecified "not in tau" code
                not_in_tau = true;
            }
            bits = to_bits(index, claimed_bound_);
            break;
        }
        case ProtocolId::Kind::b_star:
            bits = to_bits(col.letters[0], claimed_bound_);
            break;
        case ProtocolId::Kind::first_appearance: {
            int first = n_;
            for (int t = 0; t < n_; ++t)
                if (col.letters[static_cast<std::size_t>(t)] == fa_letter_) { first = t; break; }
            bits = to_bits(static_cast<std::uint64_t>(first), claimed_bound_);
            break;
        }
        default:
            throw std::logic_error("run_column_code: bad kind");
    }
    if (!bits.empty()) tr.messages.push_back({sender, bits});

    // decode on the receiver's side
    Word decoded(0, {});
    switch (id_.kind) {
        case ProtocolId::Kind::trace_column:
            decoded = sender_codebook_[bits.empty() ? 0 : from_bits(bits)];
            break;
        case ProtocolId::Kind::trace_tau: {
            std::uint64_t index = bits.empty() ? 0 : from_bits(bits);
            if (index >= sender_codebook_.size()) {
                // no full triangle extends the sender's half to trace z
                tr.answer = 1;
                return tr;
            }
            decoded = sender_codebook_[index];
            break;
        }
        case ProtocolId::Kind::b_star: {
            decoded.letters.resize(static_cast<std::size_t>(n_));
            Letter c = static_cast<Letter>(from_bits(bits));
            for (int t = 0; t < n_; ++t) {
                decoded.letters[static_cast<std::size_t>(t)] = c;
                // the open-side neighbor is irrelevant: the boundary letter z_t is in B
                c = bob_sends ? rule_.apply(z_.at(t), c, 0) : rule_.apply(0, c, z_.at(t));
            }
            break;
        }
        case ProtocolId::Kind::first_appearance: {
            int first = static_cast<int>(from_bits(bits));
            decoded.letters.assign(static_cast<std::size_t>(n_), static_cast<Letter>(1 - fa_letter_));
            for (int t = first; t < n_; ++t) decoded.letters[static_cast<std::size_t>(t)] = fa_letter_;
            break;
        }
        default:
            break;
    }
    (void)not_in_tau;

    Word receiver_col =
        bob_sends ? forward_column(rule_, z_, u, CcSide::left) : forward_column(rule_, z_, v, CcSide::right);
    const Word& left_col = bob_sends ? receiver_col : decoded;
    const Word& right_col = bob_sends ? decoded : receiver_col;
    tr.answer = columns_consistent(rule_, z_, left_col, right_col) ? 0 : 1;
    return tr;
}

Transcript ProtocolEngine::run_grouped(const Word& u, const Word& v) const {
    Transcript tr;
    Word bob_col = forward_column(rule_, z_, v, CcSide::right);
    bool bob_ok = std::binary_search(tau_right_.begin(), tau_right_.end(), bob_col);
    tr.messages.push_back({Player::bob, bob_ok ? "1" : "0"});
    Word alice_col = forward_column(rule_, z_, u, CcSide::left);
    bool alice_ok = std::binary_search(tau_left_.begin(), tau_left_.end(), alice_col);
    tr.answer = (bob_ok && alice_ok) ? 0 : 1;
    tr.answered_by = Player::alice;
    return tr;
}

Transcript ProtocolEngine::run(const Word& u, const Word& v) const {
    if (u.size() != n_ || u.hi() != -1) throw std::invalid_argument("run: u must live on [-n..-1]");
    if (v.size() != n_ || v.lo != 1) throw std::invalid_argument("run: v must live on [1..n]");
    using K = ProtocolId::Kind;
    switch (id_.kind) {
        case K::one_sided: return run_one_sided(u, v);
        case K::spreading_const: return run_spreading(u, v);
        case K::stagnating_pair: return run_stagnating(u, v);
        case K::trace_column:
        case K::trace_tau:
        case K::b_star:
        case K::first_appearance: return run_column_code(u, v);
        case K::grouped: return run_grouped(u, v);
    }
    throw std::logic_error("run: bad kind");
}

Transcript run_protocol(const ProtocolId& id, const Rule& rule, const Word& z, const Word& u,
                        const Word& v) {
    return ProtocolEngine(id, rule, z).run(u, v);
}

VerifyReport verify_protocol(const ProtocolId& id, const Rule& rule, const Word& z) {
    ProtocolEngine engine(id, rule, z);
    HatOracle oracle(rule, z);
    const std::uint64_t side = oracle.side();
    check_budget(side * side, "verify_protocol");
    VerifyReport rep;
    rep.correct = true;
    rep.claimed_bound = engine.claimed_bound();
    const int n = oracle.n();
    for (std::uint64_t i = 0; i < side; ++i) {
        Word u = decode_left(i, n, rule.q);
        for (std::uint64_t j = 0; j < side; ++j) {
            Word v = decode_right(j, n, rule.q);
            Transcript tr = engine.run(u, v);
            if (tr.answer != (oracle.hat(i, j) ? 1 : 0)) rep.correct = false;
            rep.max_bits = std::max(rep.max_bits, tr.total_bits());
            ++rep.checked;
        }
    }
    return rep;
}

}  // namespace tracecc
