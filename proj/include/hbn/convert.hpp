#pragma once

#include <cstdint>

#include "hbn/refnat.hpp"
#include "hbn/term.hpp"

namespace hbn {

/// Default cap on the binary expansion produced by to_reference: 2^24 bits.
inline constexpr std::uint64_t kDefaultExpansionCapBits = std::uint64_t{1} << 24;

/// Builds the unique term denoting the same natural as `r`. Iterative over
/// the digits, so million-bit inputs are fine; total.
Term from_reference(const RefNat& r);

/// Expands a term back to a reference natural. Throws expansion_error when
/// the result would exceed `cap_bits` binary digits; a term like a tower of
/// exponents is detected and refused cheaply, long before any allocation.
RefNat to_reference(const Term& t, std::uint64_t cap_bits = kDefaultExpansionCapBits);

/// Convenience: the canonical term for a machine-word value.
Term term_of_u64(std::uint64_t v);

/// Convenience: parse_decimal composed with from_reference.
Term term_of_decimal(std::string_view s);

}  // namespace hbn
