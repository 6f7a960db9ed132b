#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hbn/convert.hpp"
#include "hbn/refnat.hpp"
#include "hbn/term.hpp"

namespace hbn {

/// Digit-by-digit addition, recursing one o/i application at a time.
/// Kept as an executable specification for the run-at-a-time add.
Term simple_add(const Term& x, const Term& y);
/// Digit-by-digit subtraction; requires x >= y.
Term simple_sub(const Term& x, const Term& y);

/// One conformance case: a pair of values in both representations.
/// Laws that need derived inputs (shift amounts, iteration counts) reduce
/// the values themselves.
struct SweepCase {
    const Term& ta;
    const Term& tb;
    const RefNat& ra;
    const RefNat& rb;
};

/// A named equivalence checked by the sweep. The checker returns an empty
/// optional on success and a counterexample description on failure.
struct Law {
    std::string name;
    std::function<std::optional<std::string>(const SweepCase&)> check;
};

struct LawResult {
    std::string name;
    std::uint64_t cases = 0;
    bool passed = true;
    std::string counterexample;  // first failure only, decimal operands
};

struct SweepConfig {
    std::uint64_t exhaustive_limit = 512;  // inclusive upper bound of the dense range
    std::uint64_t random_cases = 10000;
    std::uint64_t random_max_bits = 256;
    std::uint64_t seed = 0;
};

struct SweepReport {
    std::vector<LawResult> laws;
    std::uint64_t total_cases = 0;
    bool all_passed() const;
};

/// The standard law set: every fast operation against the schoolbook
/// reference, the simple algorithms against the fast ones, and the
/// run-identity assertions.
std::vector<Law> standard_laws();

/// Runs the given laws over the exhaustive range and the seeded random
/// pairs. Deterministic for a fixed config.
SweepReport run_laws(std::span<const Law> laws, const SweepConfig& config);

/// run_laws over standard_laws().
SweepReport conformance_sweep(const SweepConfig& config);

/// One line per law: name, case count, PASS/FAIL, counterexample if any.
void write_report_lines(std::ostream& os, const SweepReport& report);
/// JSON array with one record per law.
std::string report_to_json(const SweepReport& report);

/// Deterministic generators for the two test distributions: dense values
/// with uniformly chosen bit length, and structured low-complexity giants
/// built from shift/exponent/successor chains.
class TermGen {
public:
    explicit TermGen(std::uint64_t seed) : rng_(seed) {}

    /// Uniform bit length in [0, max_bits], then uniform bits.
    RefNat dense_ref(std::uint64_t max_bits);
    Term dense(std::uint64_t max_bits);

    /// Random composition of exp2, shifts, successor/predecessor and small
    /// additions, keeping the digit count at most max_bits (saturating
    /// estimate). With allow_towers, nested exponents may blow past any
    /// expandable size.
    Term structured(std::uint64_t max_bits, int steps, bool allow_towers = false);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace hbn
