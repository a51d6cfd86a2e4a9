#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "antipower/word.hpp"

namespace antipower::tm {

/// i-th letter of the Thue-Morse word t = 0110100110010110..., 1-based:
/// the parity of the number of 1 bits in i-1.
inline Letter letter_at(std::uint64_t i) noexcept {
    return static_cast<Letter>(std::popcount(i - 1) & 1);
}

/// Low-level bulk generator: writes the letters at 0-based positions
/// [start, start+len) into dst, packed LSB-first, 64 letters per block.
/// Exploits that t is a product over the two-letter alphabet
/// {mu^6(0), mu^6(1)}: the j-th aligned 64-letter chunk of t is mu^6(0) when
/// letter_at(j+1) is 0, and its complement otherwise, so arbitrary windows
/// come out of shift-merged constants, never letter by letter.
void fill_factor(std::uint64_t* dst, std::uint64_t start, std::uint64_t len);

/// The factor <alpha,beta> = t_alpha ... t_beta (1-based, inclusive).
Word factor(FactorSpec spec);

/// Prefix of length n; identical content to factor({1, n}).
Word prefix(std::uint64_t n);

/// mu(0)=01, mu(1)=10; sigma is the inverse, defined on words that split
/// into aligned {01,10} blocks. sigma on a malformed word throws
/// std::invalid_argument.
Word apply_morphism(MorphismId id, const Word& w);

/// A_n = mu^n(0), built by the doubling recurrence A_{n+1} = A_n A_n-bar.
Word a_n(unsigned n);
/// B_n = complement of A_n = mu^n(1).
Word b_n(unsigned n);

/// Self-test: <2^n r + 1, 2^n (r+1)> == mu^n(t_{r+1}).
bool check_fact1(unsigned n, std::uint64_t r);

/// All pairs a < b (1-based) with <a,a+m-1> = <b,b+m-1> inside the prefix of
/// length N. Window fingerprints are hashed; equal hashes are confirmed by
/// direct comparison before a pair is emitted.
std::vector<std::pair<std::uint64_t, std::uint64_t>>
find_equal_factors(std::uint64_t m, std::uint64_t N);

} // namespace antipower::tm
