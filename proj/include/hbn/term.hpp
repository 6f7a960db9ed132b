#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hbn {

/// Thrown when a partial operation is applied outside its domain
/// (predecessor of zero, negative subtraction, division by zero, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when a term's binary expansion would exceed the configured bit cap.
class expansion_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by the text parsers (term syntax, decimal strings, expressions).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Three-way classification of a term: zero, odd (V-rooted) or even (W-rooted).
enum class Parity3 { Zero, Odd, Even };

/// Result of a total-order comparison.
enum class Ordering3 { LT, EQ, GT };

/// A natural number as a tree numeral: run-length compressed bijective
/// base-2 digits, with the run lengths themselves encoded recursively in
/// the same representation.
///
/// The empty term denotes 0. `V x xs` denotes an odd number, `W x xs` an
/// even one; `x` and the entries of `xs` count alternating runs of the
/// digit maps o(k) = 2k+1 and i(k) = 2k+2, the leading run being o-digits
/// for V and i-digits for W. Each counter stands for a run one longer
/// than its value:
///
///   value(E)          = 0
///   value(V x [])     = 2^(value(x)+1) - 1
///   value(V x (y:ys)) = (value(W y ys) + 1) * 2^(value(x)+1) - 1
///   value(W x [])     = 2^(value(x)+2) - 2
///   value(W x (y:ys)) = (value(V y ys) + 2) * 2^(value(x)+1) - 2
///
/// The denotation is a bijection onto the naturals, so structural equality
/// coincides with numeric equality. Terms are immutable values; operations
/// return fresh terms and share subtrees freely.
class Term {
public:
    /// The empty term (zero).
    Term() noexcept = default;

    /// Builds an odd-rooted term `V head tail`.
    static Term v(Term head, std::vector<Term> tail);
    /// Builds an even-rooted term `W head tail`.
    static Term w(Term head, std::vector<Term> tail);

    bool is_zero() const noexcept { return node_ == nullptr; }
    bool is_odd() const noexcept;
    bool is_even() const noexcept;

    /// Leading run counter. Undefined on the zero term.
    const Term& head() const noexcept;
    /// Counters of the remaining alternating runs. Undefined on zero.
    std::span<const Term> tail() const noexcept;
    /// Head followed by tail. Undefined on zero.
    std::span<const Term> counters() const noexcept;

    friend bool operator==(const Term& a, const Term& b) noexcept;
    friend bool operator!=(const Term& a, const Term& b) noexcept { return !(a == b); }

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) noexcept : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;

    friend Term make_term_impl(bool odd, std::vector<Term> counters);
    friend std::uint64_t sat_value_impl(const Term&) noexcept;
    friend std::uint64_t sat_bitsize_impl(const Term&) noexcept;
};

Parity3 parity(const Term& t) noexcept;

/// 2*value(t)+1; prepends or extends the leading o-run.
Term apply_o(const Term& t);
/// 2*value(t)+2; prepends or extends the leading i-run.
Term apply_i(const Term& t);
/// Exact inverse of apply_o; requires an odd term.
Term unapply_o(const Term& t);
/// Exact inverse of apply_i; requires an even term.
Term unapply_i(const Term& t);

/// value(t)+1; amortized constant time.
Term successor(const Term& t);
/// value(t)-1; requires a nonzero term.
Term predecessor(const Term& t);

/// Flips every bijective base-2 digit by swapping the root constructor.
Term dual(const Term& t);

/// Splits a nonzero term into its leading run counter and the rest:
/// V x []     -> (x, E)        W x []     -> (x, E)
/// V x (y:ys) -> (x, W y ys)   W x (y:ys) -> (x, V y ys)
std::pair<Term, Term> split_leading_block(const Term& t);

/// Canonical text form, e.g. `V (W E [E]) []`. Composite heads are
/// parenthesized; tail entries are comma-separated without spaces.
std::string to_text(const Term& t);
/// Parses the canonical text form; whitespace between tokens is ignored.
/// Rejects trailing input.
Term parse_term(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Term& t);

namespace detail {

/// Builds a term from its root kind and counter list (head first).
/// The list must be nonempty.
Term make_term(bool odd, std::vector<Term> counters);

inline constexpr std::uint64_t kSat = UINT64_MAX;

/// value(t) clamped to kSat; cached per node.
std::uint64_t sat_value(const Term& t) noexcept;
/// Total digit count of t clamped to kSat; cached per node.
std::uint64_t sat_bitsize(const Term& t) noexcept;

}  // namespace detail

}  // namespace hbn
