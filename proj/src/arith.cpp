#include "hbn/arith.hpp"

#include <cassert>
#include <stdexcept>

namespace hbn {

namespace {

const Term& one() {
    static const Term t = Term::v({}, {});
    return t;
}

const Term& two() {
    static const Term t = Term::w({}, {});
    return t;
}

#ifndef NDEBUG
// add/sub/compare form a mutually recursive cluster whose calls strictly
// shrink a well-founded measure (total run count of the arguments). The
// guard turns an accidental violation into an assertion instead of a hang.
thread_local int g_depth = 0;
constexpr int kMaxDepth = 1 << 16;
struct DepthGuard {
    DepthGuard() {
        ++g_depth;
        assert(g_depth < kMaxDepth && "mutual recursion measure violated");
    }
    ~DepthGuard() { --g_depth; }
};
#else
struct DepthGuard {};
#endif

std::vector<Term> counters_with_prepended(const Term& first, std::span<const Term> rest) {
    std::vector<Term> out;
    out.reserve(rest.size() + 1);
    out.push_back(first);
    for (const Term& t : rest) out.push_back(t);
    return out;
}

}  // namespace

namespace detail {

Term otimes(const Term& n, const Term& y) {
    if (n.is_zero()) return y;
    if (y.is_zero()) return Term::v(predecessor(n), {});
    if (y.is_odd()) {
        std::vector<Term> cs = counters_with_prepended(add(n, y.head()), y.tail());
        return make_term(true, std::move(cs));
    }
    // even: a fresh o-run in front of the whole term
    return make_term(true, counters_with_prepended(predecessor(n), y.counters()));
}

Term itimes(const Term& n, const Term& y) {
    if (n.is_zero()) return y;
    if (y.is_zero()) return Term::w(predecessor(n), {});
    if (y.is_even()) {
        std::vector<Term> cs = counters_with_prepended(add(n, y.head()), y.tail());
        return make_term(false, std::move(cs));
    }
    return make_term(false, counters_with_prepended(predecessor(n), y.counters()));
}

// o^k(x) + o^k(y) = i^k(x+y)
Term oplus(const Term& k, const Term& x, const Term& y) { return itimes(k, add(x, y)); }

// o^k(x) + i^k(y) = i^k(x) + o^k(y) = i^k(x+y+1) - 1
Term oiplus(const Term& k, const Term& x, const Term& y) {
    return predecessor(itimes(k, successor(add(x, y))));
}

// i^k(x) + i^k(y) = i^k(x+y+2) - 2
Term iplus(const Term& k, const Term& x, const Term& y) {
    return predecessor(predecessor(itimes(k, successor(successor(add(x, y))))));
}

// o^k(x) - o^k(y) = o^k(x-y-1) + 1  (x > y), zero when x == y
Term ominus(const Term& k, const Term& x, const Term& y) {
    if (x == y) return {};
    return successor(otimes(k, predecessor(sub_rec(x, y))));
}

// i^k(x) - i^k(y) = o^k(x-y-1) + 1  (x > y), zero when x == y
Term iminus(const Term& k, const Term& x, const Term& y) {
    if (x == y) return {};
    return successor(otimes(k, predecessor(sub_rec(x, y))));
}

// o^k(x) - i^k(y) = o^k(x-y-2) + 2  (x > y+1), with the two small cases
// x == y+1 -> 1 and x == y+2 -> 2^k + 1 handled directly
Term oiminus(const Term& k, const Term& x, const Term& y) {
    if (x == successor(y)) return one();
    if (x == successor(successor(y))) return successor(exp2(k));
    return successor(successor(otimes(k, predecessor(predecessor(sub_rec(x, y))))));
}

// i^k(x) - o^k(y) = o^k(x-y)  (x >= y)
Term iominus(const Term& k, const Term& x, const Term& y) { return otimes(k, sub_rec(x, y)); }

Term sub_rec(const Term& x, const Term& y) {
    [[maybe_unused]] DepthGuard guard;
    if (y.is_zero()) return x;
    if (x.is_zero()) throw domain_error("negative result");
    auto [a, as] = split_leading_block(x);
    auto [b, bs] = split_leading_block(y);
    Ordering3 c = compare(a, b);
    if (x.is_odd()) {
        if (y.is_odd()) {
            switch (c) {
                case Ordering3::EQ: return ominus(successor(a), as, bs);
                case Ordering3::GT: return ominus(successor(b), otimes(sub_rec(a, b), as), bs);
                case Ordering3::LT: return ominus(successor(a), as, otimes(sub_rec(b, a), bs));
            }
        } else {
            switch (c) {
                case Ordering3::EQ: return oiminus(successor(a), as, bs);
                case Ordering3::GT: return oiminus(successor(b), otimes(sub_rec(a, b), as), bs);
                case Ordering3::LT: return oiminus(successor(a), as, itimes(sub_rec(b, a), bs));
            }
        }
    } else {
        if (y.is_odd()) {
            switch (c) {
                case Ordering3::EQ: return iominus(successor(a), as, bs);
                case Ordering3::GT: return iominus(successor(b), itimes(sub_rec(a, b), as), bs);
                case Ordering3::LT: return iominus(successor(a), as, otimes(sub_rec(b, a), bs));
            }
        } else {
            switch (c) {
                case Ordering3::EQ: return iminus(successor(a), as, bs);
                case Ordering3::GT: return iminus(successor(b), itimes(sub_rec(a, b), as), bs);
                case Ordering3::LT: return iminus(successor(a), as, itimes(sub_rec(b, a), bs));
            }
        }
    }
    throw std::logic_error("unreachable");
}

Term reversed_dual(const Term& t) {
    if (t.is_zero()) return t;
    auto cs = t.counters();
    std::vector<Term> rev(cs.rbegin(), cs.rend());
    bool odd_run_count = cs.size() % 2 == 1;
    // With an odd number of runs the last run has the same kind as the
    // first, so the reversed form keeps the root constructor.
    bool root_odd = t.is_odd() ? odd_run_count : !odd_run_count;
    return make_term(root_odd, std::move(rev));
}

Ordering3 comp_big_first(const Term& x, const Term& y) {
    if (x.is_zero() && y.is_zero()) return Ordering3::EQ;
    auto [a, c] = split_leading_block(x);
    auto [b, d] = split_leading_block(y);
    if (x.is_odd() && y.is_odd()) {
        switch (compare(a, b)) {
            case Ordering3::EQ: return comp_big_first(c, d);
            // A shorter leading o-run reaches an i digit sooner, and at
            // equal bitsize the i digit wins.
            case Ordering3::LT: return Ordering3::GT;
            case Ordering3::GT: return Ordering3::LT;
        }
    }
    if (x.is_even() && y.is_even()) {
        Ordering3 r = compare(a, b);
        return r == Ordering3::EQ ? comp_big_first(c, d) : r;
    }
    return x.is_odd() ? Ordering3::LT : Ordering3::GT;
}

}  // namespace detail

using detail::itimes;
using detail::otimes;
using detail::sub_rec;

Term iter_apply(Parity3 kind, const Term& count, const Term& t) {
    switch (kind) {
        case Parity3::Odd: return otimes(count, t);
        case Parity3::Even: return itimes(count, t);
        case Parity3::Zero: break;
    }
    throw std::invalid_argument("iter_apply kind must be Odd or Even");
}

Term add(const Term& x, const Term& y) {
    [[maybe_unused]] DepthGuard guard;
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    auto [a, as] = split_leading_block(x);
    auto [b, bs] = split_leading_block(y);
    Ordering3 c = compare(a, b);
    if (x.is_odd()) {
        if (y.is_odd()) {
            switch (c) {
                case Ordering3::EQ: return detail::oplus(successor(a), as, bs);
                case Ordering3::GT: return detail::oplus(successor(b), otimes(sub_rec(a, b), as), bs);
                case Ordering3::LT: return detail::oplus(successor(a), as, otimes(sub_rec(b, a), bs));
            }
        } else {
            switch (c) {
                case Ordering3::EQ: return detail::oiplus(successor(a), as, bs);
                case Ordering3::GT: return detail::oiplus(successor(b), otimes(sub_rec(a, b), as), bs);
                case Ordering3::LT: return detail::oiplus(successor(a), as, itimes(sub_rec(b, a), bs));
            }
        }
    } else {
        if (y.is_odd()) {
            switch (c) {
                case Ordering3::EQ: return detail::oiplus(successor(a), as, bs);
                case Ordering3::GT: return detail::oiplus(successor(b), itimes(sub_rec(a, b), as), bs);
                case Ordering3::LT: return detail::oiplus(successor(a), as, otimes(sub_rec(b, a), bs));
            }
        } else {
            switch (c) {
                case Ordering3::EQ: return detail::iplus(successor(a), as, bs);
                case Ordering3::GT: return detail::iplus(successor(b), itimes(sub_rec(a, b), as), bs);
                case Ordering3::LT: return detail::iplus(successor(a), as, itimes(sub_rec(b, a), bs));
            }
        }
    }
    throw std::logic_error("unreachable");
}

Term sub(const Term& x, const Term& y) {
    if (compare(x, y) == Ordering3::LT) throw domain_error("negative result");
    return sub_rec(x, y);
}

Ordering3 compare(const Term& x, const Term& y) {
    [[maybe_unused]] DepthGuard guard;
    if (x.is_zero()) return y.is_zero() ? Ordering3::EQ : Ordering3::LT;
    if (y.is_zero()) return Ordering3::GT;
    // Strictly fewer digits means strictly smaller. The machine-word
    // saturating count settles almost every case; only when both digit
    // counts exceed the word range do we compare them as terms.
    std::uint64_t bx = detail::sat_bitsize(x);
    std::uint64_t by = detail::sat_bitsize(y);
    if (bx != by) return bx < by ? Ordering3::LT : Ordering3::GT;
    if (bx == detail::kSat) {
        Ordering3 r = compare(bitsize(x), bitsize(y));
        if (r != Ordering3::EQ) return r;
    }
    return detail::comp_big_first(detail::reversed_dual(x), detail::reversed_dual(y));
}

MinMaxAbsdif min_max_absdif(const Term& x, const Term& y) {
    if (compare(x, y) == Ordering3::LT) return {x, y, sub_rec(y, x)};
    return {y, x, sub_rec(x, y)};
}

Term twice(const Term& t) { return predecessor(apply_o(t)); }

Term half(const Term& t) {
    if (t.is_odd()) throw domain_error("half of odd");
    return unapply_o(successor(t));
}

Term exp2(const Term& t) {
    if (t.is_zero()) return one();
    return successor(Term::v(predecessor(t), {}));
}

Term leftshift_by(const Term& n, const Term& k) {
    if (k.is_zero()) return {};
    return successor(otimes(n, predecessor(k)));
}

ShiftView to_shift_view(const Term& t) {
    if (t.is_zero()) throw domain_error("shift view of zero");
    auto [a, b] = split_leading_block(t);
    if (t.is_odd()) return {Parity3::Odd, successor(a), successor(b)};
    return {Parity3::Even, successor(a), successor(successor(b))};
}

Term rightshift_by(const Term& m, const Term& k) {
    Term shift = m;
    Term cur = k;
    for (;;) {
        if (cur.is_zero()) return {};
        if (shift.is_zero()) return cur;
        ShiftView sv = to_shift_view(cur);
        bool o_run = sv.block_kind == Parity3::Odd;
        switch (compare(shift, sv.block_len)) {
            case Ordering3::EQ:
                return o_run ? sub_rec(sv.payload, one()) : successor(sub_rec(sv.payload, two()));
            case Ordering3::LT:
                return o_run ? otimes(sub_rec(sv.block_len, shift), sub_rec(sv.payload, one()))
                             : successor(itimes(sub_rec(sv.block_len, shift),
                                                sub_rec(sv.payload, two())));
            case Ordering3::GT:
                // Drop the whole run: what remains of the number after the
                // run is floor(value/2^len) = payload - 1.
                shift = sub_rec(shift, sv.block_len);
                cur = predecessor(sv.payload);
                break;
        }
    }
}

// o^n(a) * o^m(b) = o^(n+m)(ab + a + b) - o^n(a) - o^m(b)
Term mul(const Term& x, const Term& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.is_odd() && y.is_odd()) {
        auto [n, a] = split_leading_block(x);
        auto [m, b] = split_leading_block(y);
        Term p1 = add(mul(a, b), add(a, b));
        Term p2 = otimes(add(successor(n), successor(m)), p1);
        return sub_rec(sub_rec(p2, x), y);
    }
    if (x.is_odd()) return add(x, mul(x, predecessor(y)));
    if (y.is_odd()) return add(y, mul(predecessor(x), y));
    Term xp = predecessor(x);
    Term yp = predecessor(y);
    return successor(add(add(xp, yp), mul(xp, yp)));
}

// (o^n(a))^2 = o^(2n)(a^2 + 2a) - 2 o^n(a)
Term square(const Term& x) {
    if (x.is_zero()) return {};
    if (x.is_odd()) {
        auto [n, a] = split_leading_block(x);
        Term p1 = add(square(a), twice(a));
        Term p2 = otimes(apply_i(n), p1);
        return sub_rec(p2, twice(x));
    }
    Term xp = predecessor(x);
    return successor(add(twice(xp), square(xp)));
}

Term pow(const Term& x, const Term& y) {
    if (y.is_zero()) return one();
    if (y.is_odd()) return mul(x, pow(square(x), unapply_o(y)));
    Term x2 = square(x);
    return mul(x2, pow(x2, unapply_i(y)));
}

Term bitsize(const Term& t) {
    if (t.is_zero()) return {};
    auto cs = t.counters();
    Term acc = cs[0];
    for (std::size_t i = cs.size(); i-- > 1;) acc = successor(add(cs[i], acc));
    return successor(acc);
}

Term ilog2(const Term& t) {
    if (t.is_zero()) throw domain_error("ilog2 of zero");
    return bitsize(predecessor(t));
}

Term tsize(const Term& t) {
    if (t.is_zero()) return {};
    auto cs = t.counters();
    Term acc;
    for (std::size_t i = cs.size(); i-- > 0;) acc = successor(add(tsize(cs[i]), acc));
    return acc;
}

Term iterated(const std::function<Term(const Term&)>& f, const Term& count, const Term& x) {
    std::uint64_t n = detail::sat_value(count);
    if (n == detail::kSat) throw std::invalid_argument("iteration count too large");
    Term acc = x;
    for (std::uint64_t i = 0; i < n; ++i) acc = f(acc);
    return acc;
}

Term best_case(const Term& k) {
    return predecessor(iterated([](const Term& t) { return exp2(t); }, k, {}));
}

Term worse_case(const Term& k) {
    return iterated([](const Term& t) { return apply_i(apply_o(t)); }, k, {});
}

namespace {

// Largest e with y * 2^e <= x; requires x >= y.
Term try_to_double(const Term& x, const Term& y) {
    Term cur = y;
    Term count;
    while (compare(x, cur) != Ordering3::LT) {
        cur = twice(cur);
        count = successor(count);
    }
    return predecessor(count);
}

}  // namespace

DivRem div_and_rem(const Term& x, const Term& y) {
    if (y.is_zero()) throw domain_error("division by zero");
    Term quotient;
    Term rest = x;
    while (compare(rest, y) != Ordering3::LT) {
        Term qt = try_to_double(rest, y);
        rest = sub_rec(rest, leftshift_by(qt, y));
        quotient = add(quotient, exp2(qt));
    }
    return {std::move(quotient), std::move(rest)};
}

Term isqrt(const Term& x) {
    if (x.is_zero()) return {};
    auto step = [&x](const Term& v) {
        return div_and_rem(add(v, div_and_rem(x, v).quotient), two()).quotient;
    };
    Term k = x;
    for (;;) {
        Term r = step(k);
        bool done = compare(min_max_absdif(r, k).absdif, two()) == Ordering3::LT;
        k = std::move(r);
        if (done) break;
    }
    return compare(square(k), x) == Ordering3::GT ? predecessor(k) : k;
}

}  // namespace hbn
