#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hbn/convert.hpp"
#include "hbn/refnat.hpp"
#include "hbn/term.hpp"

namespace hbn {

/// Strips every trailing doubling, then undoes one o application:
/// tl(k) = ((k / 2^v2(k)) - 1) / 2 with v2 the dyadic valuation.
/// Requires a nonzero term; works run-at-a-time, never digit by digit.
Term tl(const Term& n);

/// syracuse(n) = tl(3n + 2); total (3n+2 is never zero).
Term syracuse(const Term& n);

/// One classic Collatz step: half when even, 3x+1 when odd.
Term collatz_step(const Term& x);

struct TraceEntry {
    std::size_t step = 0;
    Term term;
    RefNat tsize_value;
    /// Present only when the bitsize expands under the conversion cap;
    /// for tower-sized values the bitsize itself is astronomical and is
    /// only available as a term, never as digits.
    std::optional<RefNat> bitsize_value;
};

struct Trace {
    std::vector<TraceEntry> entries;
    bool reached_terminal = false;  // hit the fixed point before max_steps
};

/// Iterates syracuse from `start` until zero is produced (inclusive) or
/// max_steps entries are emitted. Requires max_steps >= 1.
Trace nsyr(const Term& start, std::size_t max_steps,
           std::uint64_t cap_bits = kDefaultExpansionCapBits);

/// Iterates collatz_step until 1 (or 0) is reached, inclusive, or max_steps
/// entries are emitted. Requires max_steps >= 1.
Trace collatz_trace(const Term& start, std::size_t max_steps,
                    std::uint64_t cap_bits = kDefaultExpansionCapBits);

/// CSV lines `step,tsize` (plus a bitsize column on request, blank when
/// the value is not expandable), LF line endings.
void write_trace_csv(std::ostream& os, std::span<const TraceEntry> entries, bool with_bitsize);

}  // namespace hbn
