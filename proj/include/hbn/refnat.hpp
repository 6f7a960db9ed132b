#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbn/term.hpp"

namespace hbn {

/// Reference arbitrary-length natural: a little-endian sequence of binary
/// digits with no trailing zero digit (the empty sequence is zero). All
/// arithmetic on it is deliberately schoolbook; this type is the test
/// oracle and the conversion anchor, not a performance path.
struct RefNat {
    std::vector<std::uint8_t> bits;  // each 0 or 1, least significant first

    bool is_zero() const noexcept { return bits.empty(); }
    bool is_odd() const noexcept { return !bits.empty() && bits[0] != 0; }
    bool is_even() const noexcept { return !is_odd(); }
    std::size_t bit_length() const noexcept { return bits.size(); }

    friend bool operator==(const RefNat&, const RefNat&) = default;
};

RefNat ref_from_u64(std::uint64_t v);
/// Empty when the value does not fit in 64 bits.
std::optional<std::uint64_t> ref_to_u64(const RefNat& a);

RefNat ref_add(const RefNat& a, const RefNat& b);
/// Requires a >= b.
RefNat ref_sub(const RefNat& a, const RefNat& b);
RefNat ref_mul(const RefNat& a, const RefNat& b);

struct RefDivRem {
    RefNat quotient;
    RefNat remainder;
};
/// Requires b != 0.
RefDivRem ref_divrem(const RefNat& a, const RefNat& b);

Ordering3 ref_cmp(const RefNat& a, const RefNat& b);

RefNat ref_double(const RefNat& a);
/// Floor of a/2.
RefNat ref_half(const RefNat& a);
RefNat ref_shl(const RefNat& a, std::uint64_t k);
RefNat ref_shr(const RefNat& a, std::uint64_t k);
RefNat ref_pow(const RefNat& base, std::uint64_t exponent);
/// Floor square root, digit by digit.
RefNat ref_isqrt(const RefNat& a);

/// Parses a decimal string: digits only, no leading zeros except "0".
RefNat parse_decimal(std::string_view s);
/// Canonical decimal form ("0" for zero, no leading zeros otherwise).
std::string print_decimal(const RefNat& a);

}  // namespace hbn
