#include "hbn/oracle.hpp"

#include <json.hpp>

#include <ostream>

#include "hbn/arith.hpp"

namespace hbn {

Term simple_add(const Term& x, const Term& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    bool xo = x.is_odd();
    bool yo = y.is_odd();
    if (xo && yo) return apply_i(simple_add(unapply_o(x), unapply_o(y)));
    if (xo) return apply_o(successor(simple_add(unapply_o(x), unapply_i(y))));
    if (yo) return apply_o(successor(simple_add(unapply_i(x), unapply_o(y))));
    return apply_i(successor(simple_add(unapply_i(x), unapply_i(y))));
}

namespace {

Term simple_sub_rec(const Term& x, const Term& y) {
    if (y.is_zero()) return x;
    if (x.is_zero()) throw domain_error("negative result");
    bool xo = x.is_odd();
    bool yo = y.is_odd();
    if (xo && yo) return predecessor(apply_o(simple_sub_rec(unapply_o(x), unapply_o(y))));
    if (xo) return predecessor(predecessor(apply_o(simple_sub_rec(unapply_o(x), unapply_i(y)))));
    if (yo) return apply_o(simple_sub_rec(unapply_i(x), unapply_o(y)));
    return predecessor(apply_o(simple_sub_rec(unapply_i(x), unapply_i(y))));
}

}  // namespace

Term simple_sub(const Term& x, const Term& y) {
    try {
        return simple_sub_rec(x, y);
    } catch (const domain_error&) {
        // Underflow surfaces as a failing predecessor somewhere down the
        // digit recursion; report it uniformly.
        throw domain_error("negative result");
    }
}

bool SweepReport::all_passed() const {
    for (const auto& law : laws)
        if (!law.passed) return false;
    return true;
}

namespace {

std::uint64_t low_u64(const RefNat& a) {
    std::uint64_t v = 0;
    std::size_t n = std::min<std::size_t>(a.bits.size(), 64);
    for (std::size_t i = n; i-- > 0;) v = (v << 1) | a.bits[i];
    return v;
}

std::string show_case(const SweepCase& c) {
    return "a=" + print_decimal(c.ra) + " b=" + print_decimal(c.rb);
}

std::optional<std::string> expect_term(const SweepCase& c, const Term& got, const RefNat& want) {
    RefNat gv = to_reference(got);
    if (gv == want) return std::nullopt;
    return show_case(c) + " got=" + print_decimal(gv) + " want=" + print_decimal(want);
}

RefNat flipped_digits(const RefNat& a) {
    if (a.is_zero()) return {};
    RefNat m = ref_add(a, ref_from_u64(1));
    for (std::size_t i = 0; i + 1 < m.bits.size(); ++i) m.bits[i] ^= 1;
    return ref_sub(m, ref_from_u64(1));
}

}  // namespace

std::vector<Law> standard_laws() {
    std::vector<Law> laws;

    laws.push_back({"add_matches_reference", [](const SweepCase& c) {
                        return expect_term(c, add(c.ta, c.tb), ref_add(c.ra, c.rb));
                    }});

    laws.push_back({"sub_matches_reference", [](const SweepCase& c) -> std::optional<std::string> {
                        if (ref_cmp(c.ra, c.rb) == Ordering3::LT) {
                            try {
                                sub(c.ta, c.tb);
                            } catch (const domain_error&) {
                                return std::nullopt;
                            }
                            return show_case(c) + " missing negative-result error";
                        }
                        return expect_term(c, sub(c.ta, c.tb), ref_sub(c.ra, c.rb));
                    }});

    laws.push_back({"mul_matches_reference", [](const SweepCase& c) {
                        return expect_term(c, mul(c.ta, c.tb), ref_mul(c.ra, c.rb));
                    }});

    laws.push_back({"compare_matches_reference", [](const SweepCase& c) -> std::optional<std::string> {
                        if (compare(c.ta, c.tb) == ref_cmp(c.ra, c.rb)) return std::nullopt;
                        return show_case(c) + " order mismatch";
                    }});

    laws.push_back({"div_and_rem_matches_reference",
                    [](const SweepCase& c) -> std::optional<std::string> {
                        if (c.rb.is_zero()) {
                            try {
                                div_and_rem(c.ta, c.tb);
                            } catch (const domain_error&) {
                                return std::nullopt;
                            }
                            return show_case(c) + " missing division-by-zero error";
                        }
                        auto [q, r] = div_and_rem(c.ta, c.tb);
                        auto want = ref_divrem(c.ra, c.rb);
                        if (auto bad = expect_term(c, q, want.quotient)) return bad;
                        return expect_term(c, r, want.remainder);
                    }});

    // Newton from the value itself makes full-width random square roots
    // expensive; the random leg is bounded, the dense range is not.
    laws.push_back({"isqrt_matches_reference_le_2pow48",
                    [](const SweepCase& c) -> std::optional<std::string> {
                        if (c.ra.bit_length() > 48) return std::nullopt;
                        return expect_term(c, isqrt(c.ta), ref_isqrt(c.ra));
                    }});

    laws.push_back({"leftshift_matches_reference", [](const SweepCase& c) {
                        std::uint64_t n = low_u64(c.ra) % 1024;
                        return expect_term(c, leftshift_by(term_of_u64(n), c.tb),
                                           ref_shl(c.rb, n));
                    }});

    laws.push_back({"rightshift_matches_reference", [](const SweepCase& c) {
                        std::uint64_t n = low_u64(c.ra) % 1024;
                        return expect_term(c, rightshift_by(term_of_u64(n), c.tb),
                                           ref_shr(c.rb, n));
                    }});

    laws.push_back({"exp2_matches_reference", [](const SweepCase& c) {
                        std::uint64_t e = low_u64(c.ra) % 2048;
                        return expect_term(c, exp2(term_of_u64(e)),
                                           ref_shl(ref_from_u64(1), e));
                    }});

    laws.push_back({"bitsize_matches_reference", [](const SweepCase& c) {
                        RefNat want = ref_from_u64(ref_add(c.ra, ref_from_u64(1)).bit_length() - 1);
                        return expect_term(c, bitsize(c.ta), want);
                    }});

    laws.push_back({"ilog2_matches_reference", [](const SweepCase& c) -> std::optional<std::string> {
                        if (c.ra.is_zero()) {
                            try {
                                ilog2(c.ta);
                            } catch (const domain_error&) {
                                return std::nullopt;
                            }
                            return show_case(c) + " missing ilog2-of-zero error";
                        }
                        RefNat want = ref_from_u64(c.ra.bit_length() - 1);
                        return expect_term(c, ilog2(c.ta), want);
                    }});

    laws.push_back({"simple_add_matches_add", [](const SweepCase& c) -> std::optional<std::string> {
                        if (simple_add(c.ta, c.tb) == add(c.ta, c.tb)) return std::nullopt;
                        return show_case(c) + " simple_add disagrees with add";
                    }});

    laws.push_back({"simple_sub_matches_sub", [](const SweepCase& c) -> std::optional<std::string> {
                        if (ref_cmp(c.ra, c.rb) == Ordering3::LT) {
                            try {
                                simple_sub(c.ta, c.tb);
                            } catch (const domain_error&) {
                                return std::nullopt;
                            }
                            return show_case(c) + " missing negative-result error";
                        }
                        if (simple_sub(c.ta, c.tb) == sub(c.ta, c.tb)) return std::nullopt;
                        return show_case(c) + " simple_sub disagrees with sub";
                    }});

    laws.push_back({"simple_add_matches_reference", [](const SweepCase& c) {
                        return expect_term(c, simple_add(c.ta, c.tb), ref_add(c.ra, c.rb));
                    }});

    laws.push_back({"simple_sub_matches_reference",
                    [](const SweepCase& c) -> std::optional<std::string> {
                        if (ref_cmp(c.ra, c.rb) == Ordering3::LT) return std::nullopt;
                        return expect_term(c, simple_sub(c.ta, c.tb), ref_sub(c.ra, c.rb));
                    }});

    laws.push_back({"double_half_match_reference",
                    [](const SweepCase& c) -> std::optional<std::string> {
                        if (auto bad = expect_term(c, twice(c.ta), ref_double(c.ra))) return bad;
                        if (c.ra.is_even()) {
                            if (auto bad = expect_term(c, half(c.ta), ref_half(c.ra))) return bad;
                        } else {
                            try {
                                half(c.ta);
                                return show_case(c) + " missing half-of-odd error";
                            } catch (const domain_error&) {
                            }
                        }
                        if (half(twice(c.ta)) == c.ta) return std::nullopt;
                        return show_case(c) + " half does not invert twice";
                    }});

    laws.push_back({"dual_flips_digits", [](const SweepCase& c) {
                        return expect_term(c, dual(c.ta), flipped_digits(c.ra));
                    }});

    laws.push_back({"square_matches_mul", [](const SweepCase& c) -> std::optional<std::string> {
                        Term sq = square(c.ta);
                        if (sq != mul(c.ta, c.ta)) return show_case(c) + " square != mul(x,x)";
                        return expect_term(c, sq, ref_mul(c.ra, c.ra));
                    }});

    laws.push_back({"pow_matches_reference_small", [](const SweepCase& c) {
                        std::uint64_t pa = low_u64(c.ra) % 9;
                        std::uint64_t pb = low_u64(c.rb) % 9;
                        return expect_term(c, pow(term_of_u64(pa), term_of_u64(pb)),
                                           ref_pow(ref_from_u64(pa), pb));
                    }});

    laws.push_back({"successor_predecessor_match_reference",
                    [](const SweepCase& c) -> std::optional<std::string> {
                        Term s = successor(c.ta);
                        if (auto bad = expect_term(c, s, ref_add(c.ra, ref_from_u64(1)))) return bad;
                        if (predecessor(s) != c.ta) return show_case(c) + " predecessor(successor) != id";
                        if (c.ra.is_zero()) {
                            try {
                                predecessor(c.ta);
                                return show_case(c) + " missing predecessor-of-zero error";
                            } catch (const domain_error&) {
                            }
                        }
                        return std::nullopt;
                    }});

    laws.push_back({"parity_matches_reference", [](const SweepCase& c) -> std::optional<std::string> {
                        Parity3 want = c.ra.is_zero() ? Parity3::Zero
                                       : c.ra.is_odd() ? Parity3::Odd
                                                       : Parity3::Even;
                        if (parity(c.ta) == want) return std::nullopt;
                        return show_case(c) + " parity mismatch";
                    }});

    laws.push_back({"run_identity_oplus", [](const SweepCase& c) -> std::optional<std::string> {
                        Term k = term_of_u64(1 + low_u64(c.ra) % 64);
                        Term lhs = add(detail::otimes(k, c.ta), detail::otimes(k, c.tb));
                        Term rhs = detail::itimes(k, add(c.ta, c.tb));
                        if (lhs == rhs) return std::nullopt;
                        return show_case(c) + " o-run addition identity broken";
                    }});

    laws.push_back({"run_identity_iplus", [](const SweepCase& c) -> std::optional<std::string> {
                        Term k = term_of_u64(1 + low_u64(c.rb) % 64);
                        Term lhs = add(detail::itimes(k, c.ta), detail::itimes(k, c.tb));
                        Term rhs = predecessor(predecessor(
                            detail::itimes(k, successor(successor(add(c.ta, c.tb))))));
                        if (lhs == rhs) return std::nullopt;
                        return show_case(c) + " i-run addition identity broken";
                    }});

    laws.push_back({"run_identity_mixed_plus", [](const SweepCase& c) -> std::optional<std::string> {
                        Term k = term_of_u64(1 + (low_u64(c.ra) ^ low_u64(c.rb)) % 64);
                        Term rhs = predecessor(detail::itimes(k, successor(add(c.ta, c.tb))));
                        if (add(detail::otimes(k, c.ta), detail::itimes(k, c.tb)) != rhs)
                            return show_case(c) + " o/i mixed addition identity broken";
                        if (add(detail::itimes(k, c.ta), detail::otimes(k, c.tb)) != rhs)
                            return show_case(c) + " i/o mixed addition identity broken";
                        return std::nullopt;
                    }});

    laws.push_back({"shift_view_round_trip", [](const SweepCase& c) -> std::optional<std::string> {
                        if (c.ra.is_zero()) return std::nullopt;
                        ShiftView sv = to_shift_view(c.ta);
                        Term back = sv.block_kind == Parity3::Odd
                                        ? detail::otimes(sv.block_len, predecessor(sv.payload))
                                        : detail::itimes(sv.block_len,
                                                         predecessor(predecessor(sv.payload)));
                        if (back == c.ta) return std::nullopt;
                        return show_case(c) + " shift view does not reconstruct";
                    }});

    laws.push_back({"iter_apply_matches_reference", [](const SweepCase& c) -> std::optional<std::string> {
                        std::uint64_t n = low_u64(c.ra) % 257;
                        Term nt = term_of_u64(n);
                        RefNat one = ref_from_u64(1);
                        RefNat want_o = ref_sub(ref_shl(ref_add(c.rb, one), n), one);
                        if (auto bad = expect_term(c, iter_apply(Parity3::Odd, nt, c.tb), want_o))
                            return bad;
                        RefNat two = ref_from_u64(2);
                        RefNat want_i = ref_sub(ref_shl(ref_add(c.rb, two), n), two);
                        return expect_term(c, iter_apply(Parity3::Even, nt, c.tb), want_i);
                    }});

    laws.push_back({"tsize_le_bitsize", [](const SweepCase& c) -> std::optional<std::string> {
                        if (compare(tsize(c.ta), bitsize(c.ta)) != Ordering3::GT) return std::nullopt;
                        return show_case(c) + " tsize exceeds bitsize";
                    }});

    laws.push_back({"min_max_absdif_consistent", [](const SweepCase& c) -> std::optional<std::string> {
                        auto m = min_max_absdif(c.ta, c.tb);
                        bool ab = ref_cmp(c.ra, c.rb) != Ordering3::GT;
                        const RefNat& lo = ab ? c.ra : c.rb;
                        const RefNat& hi = ab ? c.rb : c.ra;
                        if (auto bad = expect_term(c, m.min, lo)) return bad;
                        if (auto bad = expect_term(c, m.max, hi)) return bad;
                        if (auto bad = expect_term(c, m.absdif, ref_sub(hi, lo))) return bad;
                        auto swapped = min_max_absdif(c.tb, c.ta);
                        if (swapped.absdif != m.absdif) return show_case(c) + " absdif not symmetric";
                        return std::nullopt;
                    }});

    return laws;
}

namespace {

void apply_laws(std::span<const Law> laws, std::vector<LawResult>& results, const SweepCase& c) {
    for (std::size_t i = 0; i < laws.size(); ++i) {
        auto& r = results[i];
        ++r.cases;
        if (!r.passed) continue;  // keep only the first counterexample
        std::optional<std::string> bad;
        try {
            bad = laws[i].check(c);
        } catch (const std::exception& e) {
            bad = show_case(c) + " unexpected exception: " + e.what();
        }
        if (bad) {
            r.passed = false;
            r.counterexample = *bad;
        }
    }
}

}  // namespace

RefNat TermGen::dense_ref(std::uint64_t max_bits) {
    std::uniform_int_distribution<std::uint64_t> len_dist(0, max_bits);
    std::uint64_t len = len_dist(rng_);
    RefNat r;
    if (len == 0) return r;
    r.bits.resize(len);
    for (std::uint64_t i = 0; i + 1 < len; ++i) r.bits[i] = static_cast<std::uint8_t>(rng_() & 1);
    r.bits[len - 1] = 1;
    return r;
}

Term TermGen::dense(std::uint64_t max_bits) { return from_reference(dense_ref(max_bits)); }

Term TermGen::structured(std::uint64_t max_bits, int steps, bool allow_towers) {
    Term t = term_of_u64(rng_() % 17);
    for (int i = 0; i < steps; ++i) {
        switch (rng_() % 7) {
            case 0:
                if (allow_towers || detail::sat_value(t) < max_bits) t = exp2(t);
                break;
            case 1: {
                std::uint64_t r = rng_() % 4096;
                if (allow_towers || detail::sat_bitsize(t) + r <= max_bits)
                    t = leftshift_by(term_of_u64(r), t);
                break;
            }
            case 2:
                t = successor(t);
                break;
            case 3:
                if (!t.is_zero()) t = predecessor(t);
                break;
            case 4:
                t = add(t, term_of_u64(rng_() % 257));
                break;
            case 5:
                if (allow_towers || detail::sat_bitsize(t) + 5 <= max_bits)
                    t = mul(t, term_of_u64(1 + rng_() % 16));
                break;
            case 6:
                t = dual(t);
                break;
        }
    }
    return t;
}

SweepReport run_laws(std::span<const Law> laws, const SweepConfig& config) {
    SweepReport report;
    report.laws.resize(laws.size());
    for (std::size_t i = 0; i < laws.size(); ++i) report.laws[i].name = laws[i].name;

    std::vector<Term> terms;
    std::vector<RefNat> refs;
    terms.reserve(config.exhaustive_limit + 1);
    refs.reserve(config.exhaustive_limit + 1);
    for (std::uint64_t k = 0; k <= config.exhaustive_limit; ++k) {
        refs.push_back(ref_from_u64(k));
        terms.push_back(from_reference(refs.back()));
    }
    for (std::uint64_t a = 0; a <= config.exhaustive_limit; ++a)
        for (std::uint64_t b = 0; b <= config.exhaustive_limit; ++b)
            apply_laws(laws, report.laws, SweepCase{terms[a], terms[b], refs[a], refs[b]});

    TermGen gen(config.seed);
    for (std::uint64_t i = 0; i < config.random_cases; ++i) {
        RefNat ra = gen.dense_ref(config.random_max_bits);
        RefNat rb = gen.dense_ref(config.random_max_bits);
        Term ta = from_reference(ra);
        Term tb = from_reference(rb);
        apply_laws(laws, report.laws, SweepCase{ta, tb, ra, rb});
    }

    for (const auto& law : report.laws) report.total_cases += law.cases;
    return report;
}

SweepReport conformance_sweep(const SweepConfig& config) {
    auto laws = standard_laws();
    return run_laws(laws, config);
}

void write_report_lines(std::ostream& os, const SweepReport& report) {
    for (const auto& law : report.laws) {
        os << "LAW " << law.name << " cases=" << law.cases << ' '
           << (law.passed ? "PASS" : "FAIL");
        if (!law.passed) os << " counterexample: " << law.counterexample;
        os << '\n';
    }
    os << "SWEEP " << (report.all_passed() ? "PASS" : "FAIL")
       << " laws=" << report.laws.size() << " total_cases=" << report.total_cases << '\n';
}

std::string report_to_json(const SweepReport& report) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& law : report.laws) {
        nlohmann::json rec;
        rec["name"] = law.name;
        rec["cases"] = law.cases;
        rec["passed"] = law.passed;
        rec["counterexample"] = law.counterexample;
        out.push_back(std::move(rec));
    }
    return out.dump(2);
}

}  // namespace hbn
