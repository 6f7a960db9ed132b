#pragma once

#include <functional>
#include <utility>

#include "hbn/term.hpp"

namespace hbn {

/// Reversible view of a nonzero term's outermost run as k*2^m minus an
/// adjustment: for an odd term, value+1 = 2^value(block_len) * value(payload);
/// for an even term, value+2 = 2^value(block_len) * value(payload).
struct ShiftView {
    Parity3 block_kind;  // Odd for an o-run, Even for an i-run
    Term block_len;
    Term payload;
};

struct MinMaxAbsdif {
    Term min;
    Term max;
    Term absdif;
};

struct DivRem {
    Term quotient;
    Term remainder;
};

/// value(count) iterations of the o map (kind Odd) or the i map (kind Even),
/// merged into the leading run in one step:
///   Odd:  value = 2^value(count) * (value(t)+1) - 1
///   Even: value = 2^value(count) * (value(t)+2) - 2
/// Throws std::invalid_argument for kind Zero.
Term iter_apply(Parity3 kind, const Term& count, const Term& t);

/// Run-at-a-time addition; mutually recursive with sub and compare.
Term add(const Term& x, const Term& y);
/// Run-at-a-time subtraction. Requires x >= y ("negative result" otherwise,
/// detected with compare up front).
Term sub(const Term& x, const Term& y);
/// Total order isomorphic to the numeric one. Compares digit counts first,
/// then runs in big-digit-first order.
Ordering3 compare(const Term& x, const Term& y);

MinMaxAbsdif min_max_absdif(const Term& x, const Term& y);

/// 2*value(t).
Term twice(const Term& t);
/// Inverse of twice; requires an even (or zero) argument.
Term half(const Term& t);
/// 2^value(t) in a constant number of core calls.
Term exp2(const Term& t);

/// value(k) * 2^value(n).
Term leftshift_by(const Term& n, const Term& k);
/// Outermost-run view of a nonzero term; see ShiftView.
ShiftView to_shift_view(const Term& t);
/// floor(value(k) / 2^value(m)); exact inverse of leftshift_by on its range.
Term rightshift_by(const Term& m, const Term& k);

Term mul(const Term& x, const Term& y);
Term square(const Term& x);
/// value(x) ^ value(y), by squaring; pow(x, E) = <1> including x = E.
Term pow(const Term& x, const Term& y);

/// Total number of digit applications (the bijective base-2 length).
Term bitsize(const Term& t);
/// floor(log2(value(t))); requires a nonzero term.
Term ilog2(const Term& t);
/// Structural complexity: node count of the tree, root excluded.
/// Always <= bitsize.
Term tsize(const Term& t);

/// Applies f value(count) times to x.
Term iterated(const std::function<Term(const Term&)>& f, const Term& count, const Term& x);
/// Predecessor of the iterated exponent of 2 (a tower of height value(k)).
Term best_case(const Term& k);
/// value(k) rounds of the i*o map: value 4*(4^value(k) - 1)/3.
Term worse_case(const Term& k);

/// Quotient and remainder by doubling search; requires y != 0.
DivRem div_and_rem(const Term& x, const Term& y);
/// floor square root by Newton iteration started at x itself.
Term isqrt(const Term& x);

namespace detail {

// Internal run-at-a-time helpers, each implementing one arithmetic
// identity on iterated digit maps. Exposed for their unit tests only.
Term otimes(const Term& n, const Term& y);
Term itimes(const Term& n, const Term& y);
Term oplus(const Term& k, const Term& x, const Term& y);
Term oiplus(const Term& k, const Term& x, const Term& y);
Term iplus(const Term& k, const Term& x, const Term& y);
Term ominus(const Term& k, const Term& x, const Term& y);
Term oiminus(const Term& k, const Term& x, const Term& y);
Term iominus(const Term& k, const Term& x, const Term& y);
Term iminus(const Term& k, const Term& x, const Term& y);

// Subtraction without the up-front order check; callers must guarantee
// x >= y.
Term sub_rec(const Term& x, const Term& y);

// Comparison of same-bitsize terms on their big-digit-first forms.
Ordering3 comp_big_first(const Term& x, const Term& y);
// Reverses the run order to big-digit-first; the root constructor is fixed
// up from the parity of the run count.
Term reversed_dual(const Term& t);

}  // namespace detail

}  // namespace hbn
