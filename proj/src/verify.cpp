#include "antipower/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "antipower/anti_power.hpp"
#include "antipower/errors.hpp"
#include "antipower/intmath.hpp"
#include "antipower/theory.hpp"
#include "antipower/tm.hpp"

namespace antipower {

namespace {

using Clock = std::chrono::steady_clock;

class SweepReport {
public:
    explicit SweepReport(std::string name) : start_(Clock::now()) {
        report_.check = std::move(name);
    }

    void tally(bool ok, const std::function<std::string()>& describe) {
        ++report_.swept;
        if (ok) {
            ++report_.passed;
        } else {
            ++report_.failed;
            if (report_.first_failure.empty()) report_.first_failure = describe();
        }
    }

    VerifyReport finish() {
        report_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return report_;
    }

private:
    VerifyReport report_;
    Clock::time_point start_;
};

std::uint64_t pow2(unsigned e) {
    return std::uint64_t{1} << e;
}

std::vector<theory::FamilyParams> family_sweep() {
    std::vector<theory::FamilyParams> out;
    for (unsigned a = 3; a <= 8; ++a)
        out.push_back(theory::family_params({theory::Family::k_alpha, a}));
    for (unsigned b = 9; b <= 11; ++b)
        out.push_back(theory::family_params({theory::Family::big_k_beta, b}));
    for (unsigned r = 4; r <= 16; ++r)
        out.push_back(theory::family_params({theory::Family::kappa_rho, r}));
    return out;
}

std::vector<VerifyReport> suite_prop1(const VerifyOptions& opts) {
    std::uint64_t top = std::min<std::uint64_t>(opts.max_m, 64);
    SweepReport gaps("prop1.gap-divisibility");
    for (std::uint64_t m = 2; m <= top; ++m) {
        auto v = theory::check_prop1_i(m, 1 << 12);
        gaps.tally(v.holds, [&] { return "m=" + std::to_string(m) + ": " + v.witness; });
    }
    SweepReport witness("prop1.witness-construction");
    for (std::uint64_t m = 2; m <= top; ++m) {
        auto w = theory::prop1_ii_witness(m);
        witness.tally(w.verdict.holds,
                      [&] { return "m=" + std::to_string(m) + ": " + w.verdict.witness; });
    }
    return {gaps.finish(), witness.finish()};
}

std::vector<VerifyReport> suite_families(const VerifyOptions&) {
    SweepReport rep("families.parameter-consistency");
    for (const auto& fp : family_sweep()) {
        // Each instantiation must satisfy every hypothesis, certify its block
        // equality, and advertise its own m as the lower-bound target.
        auto v = theory::check_lemma1(fp.lemma);
        bool ok = v.holds && fp.big_gamma_lower_bound == fp.m;
        rep.tally(ok, [&] {
            return "k=" + std::to_string(fp.k) + ": " + v.witness;
        });
    }
    return {rep.finish()};
}

std::vector<VerifyReport> suite_lemma1(const VerifyOptions&) {
    SweepReport rep("lemma1.block-equality");
    for (const auto& fp : family_sweep()) {
        auto v = theory::check_lemma1(fp.lemma);
        rep.tally(v.holds, [&] { return "k=" + std::to_string(fp.k) + ": " + v.witness; });
    }
    return {rep.finish()};
}

std::vector<VerifyReport> suite_kappa_bounds(const VerifyOptions& opts) {
    SweepReport lower("kappa-bounds.lower");
    SweepReport upper("kappa-bounds.upper");
    SweepReport digrams("kappa-bounds.digrams");
    SweepReport window("kappa-bounds.digram-window");
    for (std::uint64_t m = 1; m <= opts.max_m; m += 2) {
        std::uint64_t K = kappa(m).kappa;
        lower.tally(K >= pow2(delta_of(m)) + 1, [&] {
            return "K(" + std::to_string(m) + ")=" + std::to_string(K) + " below 2^delta+1";
        });
        auto ub = theory::check_kappa_upper_bounds(m);
        upper.tally(ub.holds, [&] { return "m=" + std::to_string(m) + ": " + ub.witness; });
        auto lb3 = theory::check_lemma3(m);
        digrams.tally(lb3.holds, [&] { return "m=" + std::to_string(m) + ": " + lb3.witness; });
        if (m >= 3) {
            // Smallest usable digram position, if one exists within reach.
            bool ok = true;
            for (std::uint64_t j = 1; j <= 40; ++j) {
                auto lb4 = theory::check_lemma4(m, j);
                if (!lb4.vacuous) {
                    ok = lb4.holds;
                    break;
                }
            }
            window.tally(ok, [&] { return "m=" + std::to_string(m); });
        }
    }
    return {lower.finish(), upper.finish(), digrams.finish(), window.finish()};
}

std::vector<VerifyReport> suite_lemma9(const VerifyOptions&) {
    SweepReport rep("lemma9.strict-lower-bounds");
    for (unsigned ell = 3; ell <= 9; ++ell) {
        auto v = theory::check_lemma9(ell);
        rep.tally(v.holds, [&] { return v.witness; });
    }
    return {rep.finish()};
}

std::vector<VerifyReport> suite_theorems(const VerifyOptions& opts) {
    std::uint64_t hi = std::max<std::uint64_t>(opts.max_k, 3);

    SweepReport linear("theorems.gamma-linear-bound");
    SweepReport powers("theorems.power-of-two-bound");
    SweepReport mono("theorems.monotone-and-nested");
    std::uint64_t prev_gamma = 0, prev_big = 0;
    std::vector<std::uint64_t> prev_members;
    for (std::uint64_t k = 3; k <= hi; ++k) {
        std::uint64_t G = big_gamma(k);
        std::uint64_t g = gamma(k);
        linear.tally(G <= 3 * k - 4, [&] {
            return "Gamma(" + std::to_string(k) + ")=" + std::to_string(G);
        });
        if (std::has_single_bit(k))
            powers.tally(2 * G <= 3 * k, [&] {
                return "Gamma(" + std::to_string(k) + ")=" + std::to_string(G);
            });
        auto members = complement_set(k).members;
        bool ok = g >= prev_gamma && G >= prev_big &&
                  std::includes(members.begin(), members.end(), prev_members.begin(),
                                prev_members.end());
        mono.tally(ok, [&] { return "k=" + std::to_string(k); });
        prev_gamma = g;
        prev_big = G;
        prev_members = std::move(members);
    }

    SweepReport envelopes("theorems.gamma-envelopes");
    for (unsigned ell = 3; ell <= 8; ++ell) {
        bool ok = gamma(theory::envelope_g(ell)) >= pow2(ell) + 1 &&
                  gamma(theory::envelope_f(ell)) <= 3 * pow2(ell - 2) + 1 &&
                  gamma(theory::envelope_h(ell + 1)) <= pow2(ell) + 3 &&
                  theory::envelope_h(ell) < theory::envelope_f(ell) &&
                  theory::envelope_f(ell) <= theory::envelope_h(ell + 1);
        envelopes.tally(ok, [&] { return "ell=" + std::to_string(ell); });
    }
    return {linear.finish(), powers.finish(), mono.finish(), envelopes.finish()};
}

} // namespace

std::vector<VerifyReport> run_verify_suite(std::string_view suite, const VerifyOptions& opts) {
    if (suite == "prop1") return suite_prop1(opts);
    if (suite == "lemma1") return suite_lemma1(opts);
    if (suite == "families") return suite_families(opts);
    if (suite == "kappa-bounds") return suite_kappa_bounds(opts);
    if (suite == "lemma9") return suite_lemma9(opts);
    if (suite == "theorems") return suite_theorems(opts);
    if (suite == "all") {
        std::vector<VerifyReport> out;
        for (const char* name : {"prop1", "lemma1", "families", "kappa-bounds", "lemma9", "theorems"}) {
            auto part = run_verify_suite(name, opts);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::domain_error("unknown verify suite: " + std::string(suite));
}

bool all_passed(const std::vector<VerifyReport>& reports) {
    for (const auto& r : reports)
        if (r.failed != 0) return false;
    return true;
}

} // namespace antipower
