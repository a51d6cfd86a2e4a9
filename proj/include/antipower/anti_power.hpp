#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace antipower {

/// The k consecutive length-m blocks of t starting after offset_j skipped
/// letters: block n (0-based) is <offset_j + n*m + 1, offset_j + (n+1)*m>.
/// offset_j = 0 is the plain prefix decomposition.
struct BlockDecomposition {
    std::uint64_t m;
    std::uint64_t k;
    std::uint64_t offset_j = 0;
};

/// Verdict for "the decomposition's blocks are pairwise distinct".
/// When they are not, first_collision holds the 0-based block pair (n1, n2),
/// n1 < n2, minimal in n2 and then in n1; the two blocks are letterwise
/// equal (always confirmed by direct comparison, independent of hashing).
struct AntiPowerReport {
    bool is_anti_power;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> first_collision;
};

struct KappaResult {
    std::uint64_t m;     ///< odd block length
    std::uint64_t kappa; ///< smallest k whose length-k*m prefix repeats a block
    std::pair<std::uint64_t, std::uint64_t> witness; ///< colliding blocks at k = kappa
};

/// The odd m outside F(k), sorted ascending. Finite and nonempty for k >= 3;
/// every member is at most 3k-4.
struct ComplementSet {
    std::uint64_t k;
    std::vector<std::uint64_t> members;
};

AntiPowerReport is_k_anti_power_prefix(const BlockDecomposition& decomp);

/// m in F(k): the prefix of length k*m is a k-anti-power, m odd.
/// Even m is rejected with std::domain_error (use is_k_anti_power_prefix).
bool f_membership(std::uint64_t m, std::uint64_t k);

/// K(m): smallest k such that the length-k*m prefix is not a k-anti-power.
/// The incremental search is capped just above the proven upper bound
/// 2^l + 2^((l+5)/2) + 10, l = ceil(log2 m); hitting the cap would falsify
/// that bound and throws falsification_error rather than truncating.
KappaResult kappa(std::uint64_t m);

/// gamma(k) = min F(k), by ascending scan over odd m.
std::uint64_t gamma(std::uint64_t k);

/// Gamma(k) = max odd non-member of F(k), k >= 3. Scans odd m <= 3k-4
/// downward; the bound makes the scan terminating and exact.
std::uint64_t big_gamma(std::uint64_t k);

/// Exact sorted complement of F(k) inside the odd integers, k >= 3.
ComplementSet complement_set(std::uint64_t k);

/// K_lambda(m): smallest k such that some block value occurs more than
/// lambda times among the first k blocks. kappa_lambda(m, 1) == kappa(m).
std::uint64_t kappa_lambda(std::uint64_t m, std::uint64_t lambda);

/// Membership of m and 2m in AP(t, k) always agree; returns that agreement
/// so sweeps can assert it. Accepts even m.
bool doubling_check(std::uint64_t m, std::uint64_t k);

} // namespace antipower
