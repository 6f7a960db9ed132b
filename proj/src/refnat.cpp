#include "hbn/refnat.hpp"

#include <algorithm>

namespace hbn {

namespace {

void trim(RefNat& a) {
    while (!a.bits.empty() && a.bits.back() == 0) a.bits.pop_back();
}

}  // namespace

RefNat ref_from_u64(std::uint64_t v) {
    RefNat r;
    while (v != 0) {
        r.bits.push_back(static_cast<std::uint8_t>(v & 1));
        v >>= 1;
    }
    return r;
}

std::optional<std::uint64_t> ref_to_u64(const RefNat& a) {
    if (a.bit_length() > 64) return std::nullopt;
    std::uint64_t v = 0;
    for (std::size_t i = a.bits.size(); i-- > 0;) v = (v << 1) | a.bits[i];
    return v;
}

RefNat ref_add(const RefNat& a, const RefNat& b) {
    RefNat r;
    std::size_t n = std::max(a.bits.size(), b.bits.size());
    r.bits.reserve(n + 1);
    int carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int s = carry;
        if (i < a.bits.size()) s += a.bits[i];
        if (i < b.bits.size()) s += b.bits[i];
        r.bits.push_back(static_cast<std::uint8_t>(s & 1));
        carry = s >> 1;
    }
    if (carry) r.bits.push_back(1);
    return r;
}

RefNat ref_sub(const RefNat& a, const RefNat& b) {
    if (ref_cmp(a, b) == Ordering3::LT) throw domain_error("negative result");
    RefNat r;
    r.bits.reserve(a.bits.size());
    int borrow = 0;
    for (std::size_t i = 0; i < a.bits.size(); ++i) {
        int d = a.bits[i] - borrow - (i < b.bits.size() ? b.bits[i] : 0);
        borrow = 0;
        if (d < 0) {
            d += 2;
            borrow = 1;
        }
        r.bits.push_back(static_cast<std::uint8_t>(d));
    }
    trim(r);
    return r;
}

RefNat ref_mul(const RefNat& a, const RefNat& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Schoolbook: shift-and-add over the bits of b.
    RefNat acc;
    for (std::size_t i = b.bits.size(); i-- > 0;) {
        acc = ref_double(acc);
        if (b.bits[i]) acc = ref_add(acc, a);
    }
    return acc;
}

RefDivRem ref_divrem(const RefNat& a, const RefNat& b) {
    if (b.is_zero()) throw domain_error("division by zero");
    RefNat q, r;
    q.bits.assign(a.bits.size(), 0);
    for (std::size_t i = a.bits.size(); i-- > 0;) {
        r = ref_double(r);
        if (a.bits[i]) {
            if (r.bits.empty()) r.bits.push_back(1);
            else r.bits[0] = 1;
        }
        if (ref_cmp(r, b) != Ordering3::LT) {
            r = ref_sub(r, b);
            q.bits[i] = 1;
        }
    }
    trim(q);
    return {std::move(q), std::move(r)};
}

Ordering3 ref_cmp(const RefNat& a, const RefNat& b) {
    if (a.bits.size() != b.bits.size())
        return a.bits.size() < b.bits.size() ? Ordering3::LT : Ordering3::GT;
    for (std::size_t i = a.bits.size(); i-- > 0;) {
        if (a.bits[i] != b.bits[i]) return a.bits[i] < b.bits[i] ? Ordering3::LT : Ordering3::GT;
    }
    return Ordering3::EQ;
}

RefNat ref_double(const RefNat& a) { return ref_shl(a, 1); }

RefNat ref_half(const RefNat& a) { return ref_shr(a, 1); }

RefNat ref_shl(const RefNat& a, std::uint64_t k) {
    if (a.is_zero()) return {};
    RefNat r;
    r.bits.reserve(a.bits.size() + k);
    r.bits.assign(k, 0);
    r.bits.insert(r.bits.end(), a.bits.begin(), a.bits.end());
    return r;
}

RefNat ref_shr(const RefNat& a, std::uint64_t k) {
    if (k >= a.bits.size()) return {};
    RefNat r;
    r.bits.assign(a.bits.begin() + static_cast<std::ptrdiff_t>(k), a.bits.end());
    return r;
}

RefNat ref_pow(const RefNat& base, std::uint64_t exponent) {
    RefNat r = ref_from_u64(1);
    for (std::uint64_t i = 0; i < exponent; ++i) r = ref_mul(r, base);
    return r;
}

RefNat ref_isqrt(const RefNat& a) {
    if (a.is_zero()) return {};
    // Binary restoring square root: scan candidate bits from the top.
    std::size_t top = (a.bit_length() - 1) / 2;
    RefNat res, num = a;
    for (std::size_t i = top + 1; i-- > 0;) {
        // candidate = res with bit i set; test candidate^2 <= num via
        // (res + 2^i)^2 = res^2 + 2^(i+1)*res + 2^(2i), tracked incrementally:
        // keep num = a - res^2 and test 2^(i+1)*res + 2^(2i) <= num.
        RefNat probe = ref_add(ref_shl(res, i + 1), ref_shl(ref_from_u64(1), 2 * i));
        if (ref_cmp(probe, num) != Ordering3::GT) {
            num = ref_sub(num, probe);
            if (res.bits.size() <= i) res.bits.resize(i + 1, 0);
            res.bits[i] = 1;
        }
    }
    return res;
}

RefNat parse_decimal(std::string_view s) {
    if (s.empty()) throw parse_error("empty decimal string");
    if (s.size() > 1 && s[0] == '0') throw parse_error("leading zero in decimal string");
    RefNat ten = ref_from_u64(10);
    RefNat acc;
    for (char c : s) {
        if (c < '0' || c > '9') throw parse_error(std::string("invalid decimal digit '") + c + "'");
        acc = ref_add(ref_mul(acc, ten), ref_from_u64(static_cast<std::uint64_t>(c - '0')));
    }
    return acc;
}

std::string print_decimal(const RefNat& a) {
    if (a.is_zero()) return "0";
    std::string out;
    RefNat cur = a;
    RefNat ten = ref_from_u64(10);
    while (!cur.is_zero()) {
        auto [q, r] = ref_divrem(cur, ten);
        out += static_cast<char>('0' + ref_to_u64(r).value());
        cur = std::move(q);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace hbn
