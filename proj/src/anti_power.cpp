#include "antipower/anti_power.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

#include "antipower/errors.hpp"
#include "antipower/intmath.hpp"
#include "antipower/tm.hpp"

namespace antipower {

namespace {

inline std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Scans the blocks of a decomposition in order, fingerprinting each one and
// resolving fingerprint hits by re-extracting the earlier block and comparing
// packed words. Verdicts therefore never depend on hash quality. Entries are
// kept in insertion order so the earliest equal block is always found first.
class BlockScanner {
public:
    BlockScanner(std::uint64_t m, std::uint64_t offset)
        : m_(m), offset_(offset), words_((m + 63) / 64), cur_(words_), other_(words_) {
        slots_.assign(64, 0);
        mask_ = slots_.size() - 1;
    }

    // Processes blocks n = 0,1,2,... until some block value has been seen
    // more than lambda times (returning that block's first and current
    // index) or until limit blocks pass distinct-enough, returning nullopt.
    std::optional<std::pair<std::uint64_t, std::uint64_t>>
    run(std::uint64_t limit, std::uint64_t lambda) {
        for (std::uint64_t n = 0; n < limit; ++n) {
            extract(n, cur_);
            std::uint64_t h = hash(cur_);
            std::uint64_t seen = 0;
            std::uint64_t first_equal = 0;
            for (std::uint64_t s = h & mask_;; s = (s + 1) & mask_) {
                std::uint32_t ref = slots_[s];
                if (ref == 0) break;
                const auto& e = log_[ref - 1];
                if (e.first != h) continue;
                extract(e.second, other_);
                if (other_ == cur_) {
                    if (seen == 0) first_equal = e.second;
                    if (++seen >= lambda) return std::make_pair(first_equal, n);
                }
            }
            insert(h, n);
        }
        return std::nullopt;
    }

private:
    void extract(std::uint64_t n, std::vector<std::uint64_t>& buf) {
        tm::fill_factor(buf.data(), offset_ + n * m_, m_);
    }

    std::uint64_t hash(const std::vector<std::uint64_t>& buf) const {
        std::uint64_t h = 0xc2b2ae3d27d4eb4fULL;
        for (std::uint64_t w : buf) h = mix64(h ^ w);
        return h;
    }

    void insert(std::uint64_t h, std::uint64_t n) {
        if ((log_.size() + 1) * 2 > slots_.size()) grow();
        log_.emplace_back(h, n);
        place(static_cast<std::uint32_t>(log_.size()));
    }

    void place(std::uint32_t ref) {
        std::uint64_t h = log_[ref - 1].first;
        std::uint64_t s = h & mask_;
        while (slots_[s] != 0) s = (s + 1) & mask_;
        slots_[s] = ref;
    }

    void grow() {
        slots_.assign(slots_.size() * 2, 0);
        mask_ = slots_.size() - 1;
        // Reinserting in log order keeps same-hash probe chains in insertion
        // order, which is what makes the reported n1 minimal.
        for (std::uint32_t ref = 1; ref <= log_.size(); ++ref) place(ref);
    }

    std::uint64_t m_;
    std::uint64_t offset_;
    std::size_t words_;
    std::vector<std::uint64_t> cur_, other_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> log_; // (hash, block) in order
    std::vector<std::uint32_t> slots_;                         // 1-based refs into log_
    std::uint64_t mask_;
};

std::optional<std::pair<std::uint64_t, std::uint64_t>>
first_repeat(std::uint64_t m, std::uint64_t offset, std::uint64_t limit, std::uint64_t lambda = 1) {
    BlockScanner scanner(m, offset);
    return scanner.run(limit, lambda);
}

// Cap for the K(m) search, strictly above the proven bound
// 2^l + 2^((l+5)/2) + 10 with l = ceil(log2 m).
std::uint64_t kappa_cap(std::uint64_t m) {
    unsigned ell = ell_of(m);
    return (std::uint64_t{1} << ell) + pow2_half_floor(ell + 5) + 11;
}

void require_odd(std::uint64_t m, const char* who) {
    if (m < 1 || m % 2 == 0)
        throw std::domain_error(std::string(who) + " is defined for odd positive m");
}

} // namespace

AntiPowerReport is_k_anti_power_prefix(const BlockDecomposition& decomp) {
    if (decomp.m < 1 || decomp.k < 1)
        throw std::domain_error("block decomposition requires m >= 1 and k >= 1");
    auto hit = first_repeat(decomp.m, decomp.offset_j, decomp.k, 1);
    if (hit) return {false, hit};
    return {true, std::nullopt};
}

bool f_membership(std::uint64_t m, std::uint64_t k) {
    require_odd(m, "f_membership");
    if (k < 1) throw std::domain_error("f_membership requires k >= 1");
    return !first_repeat(m, 0, k).has_value();
}

KappaResult kappa(std::uint64_t m) {
    require_odd(m, "kappa");
    std::uint64_t cap = kappa_cap(m);
    auto hit = first_repeat(m, 0, cap, 1);
    if (!hit)
        throw falsification_error("kappa(" + std::to_string(m) +
                                  ") exceeded its proven cap " + std::to_string(cap));
    return {m, hit->second + 1, *hit};
}

std::uint64_t gamma(std::uint64_t k) {
    if (k < 1) throw std::domain_error("gamma requires k >= 1");
    // Membership must appear well below this; a miss would contradict the
    // envelope bounds the library verifies elsewhere, so fail loudly.
    std::uint64_t cap = std::uint64_t{1} << (ell_of(k) + 3);
    for (std::uint64_t m = 1; m <= cap; m += 2)
        if (!first_repeat(m, 0, k)) return m;
    throw falsification_error("gamma(" + std::to_string(k) +
                              "): no odd member found below safety cap " + std::to_string(cap));
}

std::uint64_t big_gamma(std::uint64_t k) {
    if (k < 3) throw std::domain_error("big-gamma requires k >= 3");
    std::uint64_t top = 3 * k - 4;
    if (top % 2 == 0) --top;
    for (std::uint64_t m = top;; m -= 2) {
        if (first_repeat(m, 0, k)) return m;
        if (m == 1) break;
    }
    throw falsification_error("big_gamma(" + std::to_string(k) +
                              "): complement unexpectedly empty");
}

ComplementSet complement_set(std::uint64_t k) {
    if (k < 3) throw std::domain_error("complement requires k >= 3");
    ComplementSet out{k, {}};
    for (std::uint64_t m = 1; m <= 3 * k - 4; m += 2)
        if (first_repeat(m, 0, k)) out.members.push_back(m);
    return out;
}

std::uint64_t kappa_lambda(std::uint64_t m, std::uint64_t lambda) {
    require_odd(m, "kappa_lambda");
    if (lambda < 1) throw std::domain_error("kappa_lambda requires lambda >= 1");
    // The word has fewer than 4m+4 distinct length-m factors, so within
    // lambda*(4m+4)+1 blocks some value must occur lambda+1 times.
    std::uint64_t cap = lambda * (4 * m + 4) + 1;
    auto hit = first_repeat(m, 0, cap, lambda);
    if (!hit)
        throw falsification_error("kappa_lambda(" + std::to_string(m) + ", " +
                                  std::to_string(lambda) + ") exceeded pigeonhole cap");
    return hit->second + 1;
}

bool doubling_check(std::uint64_t m, std::uint64_t k) {
    if (m < 1 || k < 1)
        throw std::domain_error("doubling_check requires positive m and k");
    bool member = !first_repeat(m, 0, k);
    bool member2 = !first_repeat(2 * m, 0, k);
    return member == member2;
}

} // namespace antipower
