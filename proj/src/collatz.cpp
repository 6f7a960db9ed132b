#include "hbn/collatz.hpp"

#include <ostream>
#include <stdexcept>

#include "hbn/arith.hpp"

namespace hbn {

Term tl(const Term& n) {
    if (n.is_zero()) throw domain_error("tl of zero");
    if (n.is_odd()) return unapply_o(n);
    // Even: n-1 is odd, its leading o-run absorbs the trailing doublings.
    Term p = predecessor(n);
    auto rest = p.tail();
    if (rest.empty()) return {};
    std::vector<Term> cs(rest.begin(), rest.end());
    return successor(unapply_i(detail::make_term(false, std::move(cs))));
}

Term syracuse(const Term& n) { return tl(add(n, apply_i(n))); }

Term collatz_step(const Term& x) {
    if (x.is_zero()) return x;
    if (x.is_odd()) return add(x, apply_o(x));
    return half(x);
}

namespace {

TraceEntry make_entry(std::size_t step, Term t, std::uint64_t cap_bits) {
    TraceEntry e;
    e.step = step;
    e.tsize_value = to_reference(tsize(t));
    try {
        e.bitsize_value = to_reference(bitsize(t), cap_bits);
    } catch (const expansion_error&) {
    }
    e.term = std::move(t);
    return e;
}

template <typename Step, typename Terminal>
Trace run_trace(const Term& start, std::size_t max_steps, std::uint64_t cap_bits, Step step,
                Terminal terminal) {
    if (max_steps == 0) throw std::invalid_argument("max_steps must be positive");
    Trace trace;
    Term cur = start;
    for (std::size_t i = 0; i < max_steps; ++i) {
        trace.entries.push_back(make_entry(i, cur, cap_bits));
        if (terminal(cur)) {
            trace.reached_terminal = true;
            break;
        }
        cur = step(cur);
    }
    return trace;
}

}  // namespace

Trace nsyr(const Term& start, std::size_t max_steps, std::uint64_t cap_bits) {
    return run_trace(
        start, max_steps, cap_bits, [](const Term& t) { return syracuse(t); },
        [](const Term& t) { return t.is_zero(); });
}

Trace collatz_trace(const Term& start, std::size_t max_steps, std::uint64_t cap_bits) {
    static const Term one = Term::v({}, {});
    return run_trace(
        start, max_steps, cap_bits, [](const Term& t) { return collatz_step(t); },
        [](const Term& t) { return t.is_zero() || t == one; });
}

void write_trace_csv(std::ostream& os, std::span<const TraceEntry> entries, bool with_bitsize) {
    os << "step,tsize";
    if (with_bitsize) os << ",bitsize";
    os << '\n';
    for (const auto& e : entries) {
        os << e.step << ',' << print_decimal(e.tsize_value);
        if (with_bitsize) {
            os << ',';
            if (e.bitsize_value) os << print_decimal(*e.bitsize_value);
        }
        os << '\n';
    }
}

}  // namespace hbn
