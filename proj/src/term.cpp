#include "hbn/term.hpp"

#include <atomic>
#include <cassert>
#include <ostream>

namespace hbn {

struct Term::Node {
    bool odd;
    std::vector<Term> counters;  // head first, then the alternating tail
    // Saturating caches, 0 == not yet computed (a nonzero term never has
    // value 0 or bitsize 0, so 0 is free as a sentinel).
    mutable std::atomic<std::uint64_t> value_cache{0};
    mutable std::atomic<std::uint64_t> bits_cache{0};

    Node(bool o, std::vector<Term> cs) : odd(o), counters(std::move(cs)) {}
};

Term make_term_impl(bool odd, std::vector<Term> counters) {
    assert(!counters.empty());
    return Term(std::make_shared<const Term::Node>(odd, std::move(counters)));
}

Term detail::make_term(bool odd, std::vector<Term> counters) {
    return make_term_impl(odd, std::move(counters));
}

Term Term::v(Term head, std::vector<Term> tail) {
    std::vector<Term> cs;
    cs.reserve(1 + tail.size());
    cs.push_back(std::move(head));
    for (auto& t : tail) cs.push_back(std::move(t));
    return make_term_impl(true, std::move(cs));
}

Term Term::w(Term head, std::vector<Term> tail) {
    std::vector<Term> cs;
    cs.reserve(1 + tail.size());
    cs.push_back(std::move(head));
    for (auto& t : tail) cs.push_back(std::move(t));
    return make_term_impl(false, std::move(cs));
}

bool Term::is_odd() const noexcept { return node_ && node_->odd; }
bool Term::is_even() const noexcept { return node_ && !node_->odd; }

const Term& Term::head() const noexcept {
    assert(node_);
    return node_->counters.front();
}

std::span<const Term> Term::tail() const noexcept {
    assert(node_);
    return std::span<const Term>(node_->counters).subspan(1);
}

std::span<const Term> Term::counters() const noexcept {
    assert(node_);
    return node_->counters;
}

bool operator==(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.node_->odd != b.node_->odd) return false;
    const auto& ca = a.node_->counters;
    const auto& cb = b.node_->counters;
    if (ca.size() != cb.size()) return false;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (!(ca[i] == cb[i])) return false;
    return true;
}

Parity3 parity(const Term& t) noexcept {
    if (t.is_zero()) return Parity3::Zero;
    return t.is_odd() ? Parity3::Odd : Parity3::Even;
}

namespace {

std::vector<Term> copy_counters(std::span<const Term> cs) {
    return std::vector<Term>(cs.begin(), cs.end());
}

}  // namespace

// Successor and predecessor form one mutually recursive pair; every
// recursive call lands on a run counter, which is iterated-logarithmically
// smaller than the argument, so the call depth is practically constant.
Term successor(const Term& t) {
    if (t.is_zero()) return Term::v({}, {});
    auto cs = t.counters();
    if (t.is_odd()) {
        if (cs[0].is_zero()) {
            if (cs.size() == 1) return Term::w({}, {});  // V E [] -> W E []
            // V E (x:xs) -> W (s x) xs
            std::vector<Term> out;
            out.reserve(cs.size() - 1);
            out.push_back(successor(cs[1]));
            for (std::size_t i = 2; i < cs.size(); ++i) out.push_back(cs[i]);
            return make_term_impl(false, std::move(out));
        }
        // V z xs -> W E (s' z : xs)
        std::vector<Term> out;
        out.reserve(cs.size() + 1);
        out.push_back({});
        out.push_back(predecessor(cs[0]));
        for (std::size_t i = 1; i < cs.size(); ++i) out.push_back(cs[i]);
        return make_term_impl(false, std::move(out));
    }
    // even root
    if (cs.size() == 1) {  // W z [] -> V (s z) []
        return Term::v(successor(cs[0]), {});
    }
    if (cs.size() == 2 && cs[1].is_zero()) {  // W z [E] -> V z [E]
        return make_term_impl(true, copy_counters(cs));
    }
    if (cs[1].is_zero()) {  // W z (E:y:ys) -> V z (s y:ys)
        std::vector<Term> out;
        out.reserve(cs.size() - 1);
        out.push_back(cs[0]);
        out.push_back(successor(cs[2]));
        for (std::size_t i = 3; i < cs.size(); ++i) out.push_back(cs[i]);
        return make_term_impl(true, std::move(out));
    }
    // W z (x:xs) with x /= E -> V z (E:s' x:xs)
    std::vector<Term> out;
    out.reserve(cs.size() + 1);
    out.push_back(cs[0]);
    out.push_back({});
    out.push_back(predecessor(cs[1]));
    for (std::size_t i = 2; i < cs.size(); ++i) out.push_back(cs[i]);
    return make_term_impl(true, std::move(out));
}

Term predecessor(const Term& t) {
    if (t.is_zero()) throw domain_error("predecessor of zero");
    auto cs = t.counters();
    if (t.is_odd()) {
        if (cs[0].is_zero() && cs.size() == 1) return {};  // V E [] -> E
        if (cs.size() == 1) {                              // V z [] -> W (s' z) []
            return Term::w(predecessor(cs[0]), {});
        }
        if (cs.size() == 2 && cs[1].is_zero()) {  // V z [E] -> W z [E]
            return make_term_impl(false, copy_counters(cs));
        }
        if (cs[1].is_zero()) {  // V z (E:x:xs) -> W z (s x:xs)
            std::vector<Term> out;
            out.reserve(cs.size() - 1);
            out.push_back(cs[0]);
            out.push_back(successor(cs[2]));
            for (std::size_t i = 3; i < cs.size(); ++i) out.push_back(cs[i]);
            return make_term_impl(false, std::move(out));
        }
        // V z (x:xs) with x /= E -> W z (E:s' x:xs)
        std::vector<Term> out;
        out.reserve(cs.size() + 1);
        out.push_back(cs[0]);
        out.push_back({});
        out.push_back(predecessor(cs[1]));
        for (std::size_t i = 2; i < cs.size(); ++i) out.push_back(cs[i]);
        return make_term_impl(false, std::move(out));
    }
    // even root
    if (cs[0].is_zero()) {
        if (cs.size() == 1) return Term::v({}, {});  // W E [] -> V E []
        // W E (x:xs) -> V (s x) xs
        std::vector<Term> out;
        out.reserve(cs.size() - 1);
        out.push_back(successor(cs[1]));
        for (std::size_t i = 2; i < cs.size(); ++i) out.push_back(cs[i]);
        return make_term_impl(true, std::move(out));
    }
    // W z xs with z /= E -> V E (s' z:xs)
    std::vector<Term> out;
    out.reserve(cs.size() + 1);
    out.push_back({});
    out.push_back(predecessor(cs[0]));
    for (std::size_t i = 1; i < cs.size(); ++i) out.push_back(cs[i]);
    return make_term_impl(true, std::move(out));
}

Term apply_o(const Term& t) {
    if (t.is_zero()) return Term::v({}, {});
    auto cs = t.counters();
    if (t.is_odd()) {  // o (V x xs) = V (s x) xs
        std::vector<Term> out;
        out.reserve(cs.size());
        out.push_back(successor(cs[0]));
        for (std::size_t i = 1; i < cs.size(); ++i) out.push_back(cs[i]);
        return make_term_impl(true, std::move(out));
    }
    // o (W x xs) = V E (x:xs)
    std::vector<Term> out;
    out.reserve(cs.size() + 1);
    out.push_back({});
    for (const Term& c : cs) out.push_back(c);
    return make_term_impl(true, std::move(out));
}

Term apply_i(const Term& t) {
    if (t.is_zero()) return Term::w({}, {});
    auto cs = t.counters();
    if (t.is_even()) {  // i (W x xs) = W (s x) xs
        std::vector<Term> out;
        out.reserve(cs.size());
        out.push_back(successor(cs[0]));
        for (std::size_t i = 1; i < cs.size(); ++i) out.push_back(cs[i]);
        return make_term_impl(false, std::move(out));
    }
    // i (V x xs) = W E (x:xs)
    std::vector<Term> out;
    out.reserve(cs.size() + 1);
    out.push_back({});
    for (const Term& c : cs) out.push_back(c);
    return make_term_impl(false, std::move(out));
}

Term unapply_o(const Term& t) {
    if (!t.is_odd()) throw domain_error("not odd");
    auto cs = t.counters();
    if (cs[0].is_zero()) {
        if (cs.size() == 1) return {};  // o' (V E []) = E
        // o' (V E (x:xs)) = W x xs
        std::vector<Term> out(cs.begin() + 1, cs.end());
        return make_term_impl(false, std::move(out));
    }
    // o' (V x xs) = V (s' x) xs
    std::vector<Term> out;
    out.reserve(cs.size());
    out.push_back(predecessor(cs[0]));
    for (std::size_t i = 1; i < cs.size(); ++i) out.push_back(cs[i]);
    return make_term_impl(true, std::move(out));
}

Term unapply_i(const Term& t) {
    if (!t.is_even()) throw domain_error("not even");
    auto cs = t.counters();
    if (cs[0].is_zero()) {
        if (cs.size() == 1) return {};  // i' (W E []) = E
        // i' (W E (x:xs)) = V x xs
        std::vector<Term> out(cs.begin() + 1, cs.end());
        return make_term_impl(true, std::move(out));
    }
    // i' (W x xs) = W (s' x) xs
    std::vector<Term> out;
    out.reserve(cs.size());
    out.push_back(predecessor(cs[0]));
    for (std::size_t i = 1; i < cs.size(); ++i) out.push_back(cs[i]);
    return make_term_impl(false, std::move(out));
}

Term dual(const Term& t) {
    if (t.is_zero()) return t;
    return make_term_impl(!t.is_odd(), copy_counters(t.counters()));
}

std::pair<Term, Term> split_leading_block(const Term& t) {
    if (t.is_zero()) throw domain_error("split of zero");
    auto cs = t.counters();
    if (cs.size() == 1) return {cs[0], Term{}};
    std::vector<Term> rest(cs.begin() + 1, cs.end());
    // The rest starts with the opposite digit kind.
    return {cs[0], make_term_impl(!t.is_odd(), std::move(rest))};
}

namespace {

void append_text(std::string& out, const Term& t) {
    if (t.is_zero()) {
        out += 'E';
        return;
    }
    out += t.is_odd() ? 'V' : 'W';
    out += ' ';
    if (t.head().is_zero()) {
        out += 'E';
    } else {
        out += '(';
        append_text(out, t.head());
        out += ')';
    }
    out += " [";
    bool first = true;
    for (const Term& e : t.tail()) {
        if (!first) out += ',';
        first = false;
        append_text(out, e);
    }
    out += ']';
}

struct TermParser {
    std::string_view in;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < in.size() && (in[pos] == ' ' || in[pos] == '\t' || in[pos] == '\n' || in[pos] == '\r'))
            ++pos;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error("term parse error at offset " + std::to_string(pos) + ": " + what);
    }

    char peek() {
        skip_ws();
        if (pos >= in.size()) fail("unexpected end of input");
        return in[pos];
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    Term parse_head() {
        char c = peek();
        if (c == 'E') {
            ++pos;
            return {};
        }
        if (c == '(') {
            ++pos;
            Term t = parse();
            expect(')');
            return t;
        }
        fail("expected head (E or parenthesized term)");
    }

    Term parse() {
        char c = peek();
        if (c == 'E') {
            ++pos;
            return {};
        }
        if (c != 'V' && c != 'W') fail("expected E, V or W");
        ++pos;
        bool odd = (c == 'V');
        Term head = parse_head();
        expect('[');
        std::vector<Term> cs;
        cs.push_back(std::move(head));
        if (peek() != ']') {
            cs.push_back(parse());
            while (peek() == ',') {
                ++pos;
                cs.push_back(parse());
            }
        }
        expect(']');
        return make_term_impl(odd, std::move(cs));
    }
};

}  // namespace

std::string to_text(const Term& t) {
    std::string out;
    append_text(out, t);
    return out;
}

Term parse_term(std::string_view text) {
    TermParser p{text};
    Term t = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return t;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_text(t); }

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    return (r < a) ? detail::kSat : r;
}

// min(a * 2^e, kSat) for a >= 1.
std::uint64_t sat_shl(std::uint64_t a, std::uint64_t e) {
    if (a == 0) return 0;
    if (e >= 64) return detail::kSat;
    if (a > (detail::kSat >> e)) return detail::kSat;
    return a << e;
}

}  // namespace

std::uint64_t sat_value_impl(const Term& t) noexcept {
    if (t.is_zero()) return 0;
    std::uint64_t cached = t.node_->value_cache.load(std::memory_order_relaxed);
    if (cached != 0) return cached;
    auto cs = t.counters();
    // Fold the denotation from the innermost run outward, saturating.
    std::uint64_t acc = 0;
    bool innermost_odd = t.is_odd() == (cs.size() % 2 == 1);
    bool odd_run = innermost_odd;
    for (std::size_t i = cs.size(); i-- > 0;) {
        std::uint64_t len = sat_add(sat_value_impl(cs[i]), 1);
        std::uint64_t adj = odd_run ? 1 : 2;
        std::uint64_t shifted = (len >= 64) ? detail::kSat : sat_shl(sat_add(acc, adj), len);
        acc = (shifted == detail::kSat) ? detail::kSat : shifted - adj;
        odd_run = !odd_run;
    }
    t.node_->value_cache.store(acc, std::memory_order_relaxed);
    return acc;
}

std::uint64_t sat_bitsize_impl(const Term& t) noexcept {
    if (t.is_zero()) return 0;
    std::uint64_t cached = t.node_->bits_cache.load(std::memory_order_relaxed);
    if (cached != 0) return cached;
    std::uint64_t total = 0;
    for (const Term& c : t.counters()) total = sat_add(total, sat_add(sat_value_impl(c), 1));
    t.node_->bits_cache.store(total, std::memory_order_relaxed);
    return total;
}

std::uint64_t detail::sat_value(const Term& t) noexcept { return sat_value_impl(t); }
std::uint64_t detail::sat_bitsize(const Term& t) noexcept { return sat_bitsize_impl(t); }

}  // namespace hbn
