#include "antipower/tm.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

#include "antipower/errors.hpp"

namespace antipower::tm {

namespace {

constexpr std::uint64_t chunk_a6() {
    std::uint64_t w = 0;
    for (unsigned b = 0; b < 64; ++b)
        if (std::popcount(std::uint64_t{b}) & 1) w |= std::uint64_t{1} << b;
    return w;
}

constexpr std::uint64_t kA6 = chunk_a6(); // mu^6(0), LSB-first
constexpr std::uint64_t kB6 = ~kA6;       // mu^6(1)

inline std::uint64_t aligned_chunk(std::uint64_t j) noexcept {
    return (std::popcount(j) & 1) ? kB6 : kA6;
}

inline std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

void fill_factor(std::uint64_t* dst, std::uint64_t start, std::uint64_t len) {
    if (len == 0) return;
    std::uint64_t first = start >> 6;
    unsigned shift = static_cast<unsigned>(start & 63);
    std::uint64_t words = (len + 63) >> 6;
    if (shift == 0) {
        for (std::uint64_t i = 0; i < words; ++i) dst[i] = aligned_chunk(first + i);
    } else {
        std::uint64_t cur = aligned_chunk(first);
        for (std::uint64_t i = 0; i < words; ++i) {
            std::uint64_t nxt = aligned_chunk(first + i + 1);
            dst[i] = (cur >> shift) | (nxt << (64 - shift));
            cur = nxt;
        }
    }
    if (len & 63) dst[words - 1] &= ~std::uint64_t{0} >> (64 - (len & 63));
}

Word factor(FactorSpec spec) {
    if (spec.alpha < 1 || spec.alpha > spec.beta)
        throw std::domain_error("factor requires 1 <= alpha <= beta");
    std::uint64_t len = spec.beta - spec.alpha + 1;
    Word w(static_cast<std::size_t>(len));
    fill_factor(w.data(), spec.alpha - 1, len);
    return w;
}

Word prefix(std::uint64_t n) {
    if (n < 1) throw std::domain_error("prefix length must be >= 1");
    return factor({1, n});
}

Word apply_morphism(MorphismId id, const Word& w) {
    if (id == MorphismId::mu) {
        Word out;
        out.reserve(2 * w.size());
        for (std::size_t p = 0; p < w.size(); ++p) {
            Letter l = w.at(p);
            out.push_back(l); // mu(x) = x xbar
            out.push_back(complement(l));
        }
        return out;
    }
    if (w.size() % 2 != 0)
        throw std::invalid_argument("sigma requires a word of even length");
    Word out;
    out.reserve(w.size() / 2);
    for (std::size_t p = 0; p < w.size(); p += 2) {
        Letter a = w.at(p);
        if (a == w.at(p + 1))
            throw std::invalid_argument("sigma requires aligned {01,10} blocks");
        out.push_back(a); // sigma(01)=0, sigma(10)=1
    }
    return out;
}

Word a_n(unsigned n) {
    Word w;
    w.push_back(Letter::zero);
    for (unsigned i = 0; i < n; ++i) w.append(w.complemented());
    return w;
}

Word b_n(unsigned n) {
    return a_n(n).complemented();
}

bool check_fact1(unsigned n, std::uint64_t r) {
    if (n < 1) throw std::domain_error("check_fact1 requires n >= 1");
    std::uint64_t block = std::uint64_t{1} << n;
    Word extracted = factor({block * r + 1, block * (r + 1)});
    Word image = (letter_at(r + 1) == Letter::zero) ? a_n(n) : b_n(n);
    return extracted == image;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>>
find_equal_factors(std::uint64_t m, std::uint64_t N) {
    if (m < 1 || m > N)
        throw std::domain_error("find_equal_factors requires 1 <= m <= N");
    Word pref = prefix(N);
    std::uint64_t positions = N - m + 1; // 0-based window starts [0, positions)

    auto window_hash = [&](std::uint64_t p) {
        std::uint64_t h = 0x51f0d3c257a3e49bULL;
        std::uint64_t q = p, left = m;
        while (left >= 64) {
            h = mix64(h ^ pref.bits_at(q, 64));
            q += 64;
            left -= 64;
        }
        if (left) h = mix64(h ^ pref.bits_at(q, static_cast<unsigned>(left)));
        return h;
    };

    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> buckets;
    buckets.reserve(positions);
    for (std::uint64_t p = 0; p < positions; ++p) buckets[window_hash(p)].push_back(p);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::vector<std::vector<std::uint64_t>> groups;
    for (auto& [h, bucket] : buckets) {
        if (bucket.size() < 2) continue;
        // Split the bucket into classes of truly equal windows; hash ties
        // across distinct contents end up in separate classes here.
        groups.clear();
        for (std::uint64_t p : bucket) {
            bool placed = false;
            for (auto& g : groups) {
                if (pref.ranges_equal(g.front(), p, m)) {
                    g.push_back(p);
                    placed = true;
                    break;
                }
            }
            if (!placed) groups.push_back({p});
        }
        for (const auto& g : groups)
            for (std::size_t i = 0; i < g.size(); ++i)
                for (std::size_t j = i + 1; j < g.size(); ++j)
                    pairs.emplace_back(g[i] + 1, g[j] + 1);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

} // namespace antipower::tm
