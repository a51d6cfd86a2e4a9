#pragma once

#include <bit>
#include <cstdint>

namespace antipower {

// Integer square root: largest r with r*r <= n.
constexpr std::uint64_t isqrt_u64(std::uint64_t n) noexcept {
    if (n == 0) return 0;
    // Seed from the bit length, then Newton steps; converges in a handful of
    // iterations and stays in integer arithmetic throughout.
    std::uint64_t r = std::uint64_t{1} << ((std::bit_width(n) + 1) / 2);
    while (true) {
        std::uint64_t next = (r + n / r) / 2;
        if (next >= r) break;
        r = next;
    }
    while (r * r > n) --r;
    return r;
}

// Smallest e >= 0 with 2^e >= m, i.e. ceil(log2 m) for m >= 1.
constexpr unsigned ell_of(std::uint64_t m) noexcept {
    if (m <= 1) return 0;
    return static_cast<unsigned>(std::bit_width(m - 1));
}

// Smallest d >= 0 with 3*2^d >= m, i.e. ceil(log2(m/3)) clamped at 0.
constexpr unsigned delta_of(std::uint64_t m) noexcept {
    if (m <= 3) return 0;
    std::uint64_t third = (m + 2) / 3; // 2^d >= ceil(m/3)
    return static_cast<unsigned>(std::bit_width(third - 1));
}

// floor(2^(e/2)) for half-integer exponents; exact power when e is even.
constexpr std::uint64_t pow2_half_floor(unsigned e) noexcept {
    if (e % 2 == 0) return std::uint64_t{1} << (e / 2);
    return isqrt_u64(std::uint64_t{1} << e);
}

// Exact test x < 2^(e/2). For odd e the bound is irrational, so strict and
// non-strict comparison coincide on integers and squaring preserves order.
constexpr bool lt_pow2_half(std::uint64_t x, unsigned e) noexcept {
    if (e % 2 == 0) return x < (std::uint64_t{1} << (e / 2));
    return (unsigned __int128)x * x < ((unsigned __int128)1 << e);
}

} // namespace antipower
