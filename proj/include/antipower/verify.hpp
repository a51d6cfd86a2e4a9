#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace antipower {

/// Result of one verification sweep. passed + failed equals swept.
struct VerifyReport {
    std::string check;
    std::uint64_t swept = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::string first_failure;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t max_m = 999; ///< bound for per-m sweeps (odd m <= max_m)
    std::uint64_t max_k = 135; ///< bound for per-k sweeps
};

/// Runs one named suite: prop1, lemma1, families, kappa-bounds, lemma9,
/// theorems, or all. Throws std::domain_error for an unknown name.
std::vector<VerifyReport> run_verify_suite(std::string_view suite, const VerifyOptions& opts);

bool all_passed(const std::vector<VerifyReport>& reports);

} // namespace antipower
