#include "hbn/convert.hpp"

#include <algorithm>

namespace hbn {

// Both directions use the digit bridge: the bijective base-2 digits of n,
// innermost first, are exactly the binary digits of n+1 below its leading
// one (digit 0 -> the o map, digit 1 -> the i map). The run structure of
// that digit string is the term: the root kind is the lowest digit, and
// each run of length L contributes the counter <L-1>.

Term from_reference(const RefNat& r) {
    if (r.is_zero()) return {};
    RefNat m = ref_add(r, ref_from_u64(1));
    const auto& bits = m.bits;
    std::size_t digit_count = bits.size() - 1;  // leading one excluded
    std::vector<Term> counters;
    std::size_t pos = 0;
    while (pos < digit_count) {
        std::size_t run_end = pos;
        while (run_end < digit_count && bits[run_end] == bits[pos]) ++run_end;
        counters.push_back(from_reference(ref_from_u64(run_end - pos - 1)));
        pos = run_end;
    }
    bool root_odd = bits[0] == 0;  // lowest digit is the outermost map
    return detail::make_term(root_odd, std::move(counters));
}

RefNat to_reference(const Term& t, std::uint64_t cap_bits) {
    if (t.is_zero()) return {};
    cap_bits = std::min(cap_bits, std::uint64_t{1} << 62);
    // First resolve every run length, refusing before anything is allocated.
    auto cs = t.counters();
    std::vector<std::uint64_t> lens;
    lens.reserve(cs.size());
    std::uint64_t total = 0;
    for (const Term& c : cs) {
        RefNat cv = to_reference(c, cap_bits);
        auto v = ref_to_u64(cv);
        if (!v || *v >= cap_bits) throw expansion_error("expansion too large");
        std::uint64_t len = *v + 1;
        total += len;
        if (total > cap_bits) throw expansion_error("expansion too large");
        lens.push_back(len);
    }
    RefNat m;
    m.bits.assign(total + 1, 0);
    bool i_run = t.is_even();
    std::size_t pos = 0;
    for (std::uint64_t len : lens) {
        if (i_run) std::fill_n(m.bits.begin() + static_cast<std::ptrdiff_t>(pos), len, 1);
        pos += len;
        i_run = !i_run;
    }
    m.bits[total] = 1;
    return ref_sub(m, ref_from_u64(1));
}

Term term_of_u64(std::uint64_t v) { return from_reference(ref_from_u64(v)); }

Term term_of_decimal(std::string_view s) { return from_reference(parse_decimal(s)); }

}  // namespace hbn
