#include "antipower/theory.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "antipower/anti_power.hpp"
#include "antipower/errors.hpp"
#include "antipower/tm.hpp"

namespace antipower::theory {

namespace {

constexpr std::uint64_t kPrefixSearchBound = 1 << 12; // base-case witness search window
constexpr std::uint64_t kDirectKappaLimit = 1000;     // largest m whose K we compute outright

std::uint64_t pow2(unsigned e) {
    return std::uint64_t{1} << e;
}

std::string pair_note(std::uint64_t a, std::uint64_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// First 1-based occurrence of pattern in the prefix of length bound.
std::optional<std::uint64_t> find_in_prefix(const Word& pattern, std::uint64_t bound) {
    Word pref = tm::prefix(bound);
    if (pattern.size() > pref.size()) return std::nullopt;
    for (std::uint64_t p = 0; p + pattern.size() <= pref.size(); ++p) {
        bool match = true;
        for (std::uint64_t q = 0; q < pattern.size() && match; q += 64) {
            unsigned chunk = static_cast<unsigned>(std::min<std::uint64_t>(64, pattern.size() - q));
            if (pref.bits_at(p + q, chunk) != pattern.bits_at(q, chunk)) match = false;
        }
        if (match) return p + 1;
    }
    return std::nullopt;
}

bool factors_equal(std::uint64_t a, std::uint64_t b, std::uint64_t len) {
    return tm::factor({a, a + len - 1}) == tm::factor({b, b + len - 1});
}

} // namespace

DyadicParams dyadic_params(std::uint64_t m) {
    if (m < 1) throw std::domain_error("dyadic_params requires m >= 1");
    DyadicParams out{m, ell_of(m), delta_of(m), std::nullopt, std::nullopt};
    if (m > 1 && m % 8 == 1) {
        unsigned L = static_cast<unsigned>(std::countr_zero(m - 1));
        out.L = L;
        out.h = (m - 1) >> L;
    }
    return out;
}

Verdict check_prop1_i(std::uint64_t m, std::uint64_t N) {
    if (m < 2) throw std::domain_error("check_prop1_i requires m >= 2");
    if (N < 2 * m) throw std::domain_error("check_prop1_i requires N >= 2m");
    std::uint64_t divisor = pow2(delta_of(m));
    Verdict v;
    bool all = true;
    for (const auto& [a, b] : tm::find_equal_factors(m, N)) {
        if ((b - a) % divisor != 0) {
            all = false;
            v.witness = "gap " + std::to_string(b - a) + " at " + pair_note(a, b) +
                        " not divisible by " + std::to_string(divisor);
            break;
        }
    }
    v.checked_conditions = {all};
    v.holds = all;
    return v;
}

Prop1Witness prop1_ii_witness(std::uint64_t m) {
    if (m < 2) throw std::domain_error("prop1_ii_witness requires m >= 2");
    std::uint64_t position, gap;
    if (m == 2 || m == 3) {
        // y=01, v=1 gives yvy = 01101; y=101, v=empty gives yvy = 101101.
        Word pattern = Word::from_string(m == 2 ? "01101" : "101101");
        auto at = find_in_prefix(pattern, kPrefixSearchBound);
        if (!at)
            throw falsification_error("base witness for m=" + std::to_string(m) +
                                      " not found in search window");
        position = *at;
        gap = 3;
    } else if (m % 2 == 0) {
        Prop1Witness half = prop1_ii_witness(m / 2);
        position = 2 * half.position - 1; // mu sends an occurrence at a to 2a-1
        gap = 2 * half.gap;
    } else {
        Prop1Witness even = prop1_ii_witness(m + 1); // drop the last letter of y
        position = even.position;
        gap = even.gap;
    }

    Verdict v;
    bool equal = factors_equal(position, position + gap, m);
    bool indivisible = gap % pow2(delta_of(m) + 1) != 0;
    v.checked_conditions = {equal, indivisible};
    v.holds = equal && indivisible;
    v.witness = "a=" + std::to_string(position) + " gap=" + std::to_string(gap);
    if (!v.holds)
        throw falsification_error("re-verification failed for m=" + std::to_string(m) +
                                  " at " + v.witness);
    return {position, gap, v};
}

Verdict check_corollary1(std::uint64_t k, std::uint64_t m) {
    if (k < 3) throw std::domain_error("check_corollary1 requires k >= 3");
    if (m % 2 == 0) throw std::domain_error("check_corollary1 requires odd m");
    Verdict v;
    if (f_membership(m, k)) {
        v.vacuous = true;
        v.witness = "m in F(k); nothing to check";
        return v;
    }
    bool ok = k - 1 >= pow2(delta_of(m));
    v.checked_conditions = {ok};
    v.holds = ok;
    if (!ok) v.witness = "k-1 < 2^delta(m)";
    return v;
}

Verdict check_lemma1(const LemmaOneParams& params) {
    const auto [r, m, ell, h, p, q] = params;
    if (ell < 2 || ell > 60) throw std::domain_error("check_lemma1 requires 2 <= ell <= 60");
    std::uint64_t quarter = pow2(ell - 2);

    Verdict v;
    v.checked_conditions = {
        h < quarter,
        r * m == p * pow2(ell + 1) + pow2(ell - 1) + h,
        (r + 1) * m <= p * pow2(ell + 1) + 5 * quarter,
        (r + quarter) * m == q * pow2(ell + 1) + 3 * quarter + h,
        tm::letter_at(p + 1) != tm::letter_at(q + 1),
    };
    for (std::size_t i = 0; i < v.checked_conditions.size(); ++i) {
        if (!v.checked_conditions[i]) {
            v.holds = false;
            v.witness = "condition " + std::to_string(i + 1) + " fails";
            return v; // hypotheses not met; no block comparison attempted
        }
    }

    std::uint64_t second = r + quarter;
    if (!factors_equal(r * m + 1, second * m + 1, m))
        throw falsification_error("blocks differ although all five conditions hold (r=" +
                                  std::to_string(r) + ", m=" + std::to_string(m) + ")");
    v.witness = "blocks " + pair_note(r, second) + " equal; K(" + std::to_string(m) +
                ") <= " + std::to_string(second + 1);

    if (m % 2 == 1 && m <= kDirectKappaLimit) {
        std::uint64_t exact = kappa(m).kappa;
        if (exact > second + 1)
            throw falsification_error("direct K(" + std::to_string(m) +
                                      ") exceeds the certified bound");
        v.witness += "; direct K = " + std::to_string(exact);
    }
    v.holds = true;
    return v;
}

FamilyParams family_params(FamilyIndex idx) {
    const unsigned i = idx.index;
    FamilyParams out{};
    switch (idx.family) {
    case Family::k_alpha: {
        if (i < 3) throw std::domain_error("k_alpha requires alpha >= 3");
        out.k = pow2(2 * i) + pow2(i) + 2;
        out.m = 3 * pow2(2 * i) - pow2(i) + 1;
        out.lemma = {pow2(i) + 1, out.m, 2 * i + 2, 1,
                     3 * pow2(i - 3), 3 * pow2(2 * i - 3) + pow2(i - 2)};
        break;
    }
    case Family::big_k_beta: {
        if (i < 9) throw std::domain_error("K_beta requires beta >= 9");
        out.k = pow2(2 * i + 1) + 3 * pow2(i + 3) + 49;
        out.m = 3 * pow2(2 * i + 1) - pow2(i - 1) + 1;
        out.lemma = {3 * pow2(i + 3) + 48, out.m, 2 * i + 3, 48,
                     9 * pow2(i) + 17, 3 * pow2(2 * i - 2) + 143 * pow2(i - 4) + 17};
        break;
    }
    case Family::kappa_rho: {
        if (i < 4) throw std::domain_error("kappa_rho requires rho >= 4");
        std::uint64_t chi = (i % 2 == 0) ? 1 : 2;
        out.k = pow2(i) + 2;
        out.m = 5 * pow2(i - 1) - 8 * chi + 1;
        out.lemma = {1, out.m, i + 2, pow2(i - 1) - 8 * chi + 1, 0, 5 * pow2(i - 4) - chi};
        break;
    }
    }
    out.big_gamma_lower_bound = out.m;
    // Internal consistency of the family: the certified order is always
    // r + 2^(ell-2) + 1.
    if (out.k != out.lemma.r + pow2(out.lemma.ell - 2) + 1)
        throw falsification_error("family order does not match its construction");
    return out;
}

Verdict check_lemma3(std::uint64_t m) {
    if (m % 2 == 0) throw std::domain_error("check_lemma3 requires odd m");
    unsigned ell = ell_of(m);
    Verdict v;
    if (kappa(m).kappa <= pow2(ell) + 1) {
        v.vacuous = true;
        v.witness = "K(m) <= 2^ell + 1; nothing to check";
        return v;
    }
    bool first = tm::letter_at(m + 1) == Letter::one && tm::letter_at(m + 2) == Letter::one;
    bool second = tm::letter_at(2 * m + 1) == Letter::one && tm::letter_at(2 * m + 2) == Letter::zero;
    v.checked_conditions = {first, second};
    if (!first || !second)
        throw falsification_error("digram conclusion fails at m=" + std::to_string(m));
    return v;
}

Verdict check_lemma4(std::uint64_t m, std::uint64_t j) {
    if (m < 3 || m % 2 == 0) throw std::domain_error("check_lemma4 requires odd m >= 3");
    if (j < 1) throw std::domain_error("check_lemma4 requires j >= 1");
    Verdict v;
    bool digram = tm::letter_at(j) == tm::letter_at(m + j) &&
                  tm::letter_at(j + 1) == tm::letter_at(m + j + 1);
    if (!digram) {
        v.vacuous = true;
        v.witness = "digrams differ at j=" + std::to_string(j);
        return v;
    }
    bool ok = m * kappa(m).kappa < (m + j + 1) * pow2(ell_of(m));
    v.checked_conditions = {ok};
    if (!ok)
        throw falsification_error("bound fails at m=" + std::to_string(m) +
                                  ", j=" + std::to_string(j));
    return v;
}

Verdict check_kappa_upper_bounds(std::uint64_t m) {
    if (m % 2 == 0) throw std::domain_error("check_kappa_upper_bounds requires odd m");
    std::uint64_t K = kappa(m).kappa;
    unsigned ell = ell_of(m);
    Verdict v;
    std::uint64_t base = pow2(ell) + 10;
    bool general = K <= base || lt_pow2_half(K - base, ell + 5);
    v.checked_conditions.push_back(general);
    if (!general) v.witness = "general bound fails";

    if (m % 8 != 1) {
        bool narrow = m * K < (m + 37) * pow2(ell);
        v.checked_conditions.push_back(narrow);
        if (!narrow) v.witness = "non-residue bound fails";
    } else if (m > 1) {
        auto dp = dyadic_params(m);
        unsigned L = *dp.L;
        bool residue = m * K < (m + pow2(L + 1) + 4) * pow2(ell);
        v.checked_conditions.push_back(residue);
        if (!residue) v.witness = "residue-class bound fails";

        // Canonical n: the largest n <= 2^(L-1) with m-n = 2 (mod 4).
        std::uint64_t n = pow2(L - 1);
        while ((m - n) % 4 != 2) --n;
        bool applicable = n >= 2 && tm::letter_at(m - n) == tm::letter_at(m - n + 1) &&
                          m * (2 * n + 2) <= (2 * n + 1) * pow2(ell);
        if (applicable) {
            bool tight = K <= pow2(ell) - n;
            v.checked_conditions.push_back(tight);
            if (!tight) v.witness = "subtracted bound fails at n=" + std::to_string(n);
        }
    }
    for (bool c : v.checked_conditions) v.holds = v.holds && c;
    return v;
}

Verdict check_lemma9(unsigned ell) {
    if (ell < 3 || ell > 30) throw std::domain_error("check_lemma9 requires 3 <= ell <= 30");
    std::uint64_t m1 = 3 * pow2(ell - 2) + 1;
    std::uint64_t m2 = pow2(ell - 1) + 3;
    bool first = kappa(m1).kappa * m1 > 5 * pow2(2 * ell - 3);
    bool second = kappa(m2).kappa * m2 > pow2(2 * ell - 2);
    Verdict v;
    v.checked_conditions = {first, second};
    v.holds = first && second;
    if (!v.holds) v.witness = "strict lower bound fails at ell=" + std::to_string(ell);
    return v;
}

std::uint64_t envelope_g(unsigned ell) {
    return pow2(ell) + pow2_half_floor(ell + 5) + 10 + 1;
}

std::uint64_t envelope_f(unsigned ell) {
    return 5 * pow2(2 * ell - 3) / (3 * pow2(ell - 2) + 1);
}

std::uint64_t envelope_h(unsigned ell) {
    return pow2(2 * ell - 2) / (pow2(ell - 1) + 3);
}

Verdict check_theorem_bounds(std::uint64_t k_lo, std::uint64_t k_hi,
                             unsigned ell_lo, unsigned ell_hi) {
    if (k_lo < 3 || k_lo > k_hi) throw std::domain_error("check_theorem_bounds requires 3 <= k_lo <= k_hi");
    if (ell_lo < 3 || ell_lo > ell_hi) throw std::domain_error("check_theorem_bounds requires 3 <= ell_lo <= ell_hi");
    Verdict v;
    auto record = [&](bool ok, const std::string& note) {
        v.checked_conditions.push_back(ok);
        if (!ok && v.witness.empty()) v.witness = note;
    };

    bool linear = true, powers = true, gamma_mono = true, big_gamma_mono = true, nested = true;
    std::uint64_t prev_gamma = 0, prev_big_gamma = 0;
    std::vector<std::uint64_t> prev_members;
    std::string linear_note, powers_note;
    for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
        std::uint64_t G = big_gamma(k);
        std::uint64_t g = gamma(k);
        if (G > 3 * k - 4 && linear) {
            linear = false;
            linear_note = "Gamma(" + std::to_string(k) + ") > 3k-4";
        }
        if (std::has_single_bit(k) && 2 * G > 3 * k && powers) {
            powers = false;
            powers_note = "Gamma(" + std::to_string(k) + ") above 3k/2 at a power of two";
        }
        if (g < prev_gamma) gamma_mono = false;
        if (G < prev_big_gamma) big_gamma_mono = false;
        auto members = complement_set(k).members;
        if (!std::includes(members.begin(), members.end(), prev_members.begin(),
                           prev_members.end()))
            nested = false;
        prev_gamma = g;
        prev_big_gamma = G;
        prev_members = std::move(members);
    }
    record(linear, linear_note);
    record(powers, powers_note);

    bool env_g = true, env_f = true, env_h = true, ordering = true;
    for (unsigned ell = ell_lo; ell <= ell_hi; ++ell) {
        if (gamma(envelope_g(ell)) < pow2(ell) + 1) env_g = false;
        if (gamma(envelope_f(ell)) > 3 * pow2(ell - 2) + 1) env_f = false;
        if (gamma(envelope_h(ell + 1)) > pow2(ell) + 3) env_h = false;
        if (!(envelope_h(ell) < envelope_f(ell) && envelope_f(ell) <= envelope_h(ell + 1)))
            ordering = false;
    }
    record(env_g, "gamma(g(ell)) envelope fails");
    record(env_f, "gamma(f(ell)) envelope fails");
    record(env_h, "gamma(h(ell+1)) envelope fails");
    record(ordering, "h(ell) < f(ell) <= h(ell+1) ordering fails");
    record(gamma_mono, "gamma not nondecreasing");
    record(big_gamma_mono, "Gamma not nondecreasing");
    record(nested, "complement sets not nested");

    for (bool c : v.checked_conditions) v.holds = v.holds && c;
    return v;
}

} // namespace antipower::theory
