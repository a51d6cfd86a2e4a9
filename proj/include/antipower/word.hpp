#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antipower {

/// A binary symbol.
enum class Letter : std::uint8_t { zero = 0, one = 1 };

constexpr Letter complement(Letter l) noexcept {
    return l == Letter::zero ? Letter::one : Letter::zero;
}

constexpr char to_char(Letter l) noexcept {
    return l == Letter::zero ? '0' : '1';
}

/// A finite binary word in a packed representation: letter at offset p lives
/// in bit (p % 64) of block (p / 64), LSB first. Bits above size() are kept
/// zero so equality is plain length-then-content comparison. The empty word
/// is allowed.
class Word {
public:
    Word() = default;

    /// Zero-filled word of n letters; letters are written through data().
    explicit Word(std::size_t n) : blocks_((n + 63) / 64, 0), len_(n) {}

    static Word from_string(std::string_view s);

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    /// Letter at 0-based offset p.
    Letter at(std::size_t p) const noexcept {
        return static_cast<Letter>((blocks_[p >> 6] >> (p & 63)) & 1u);
    }

    void reserve(std::size_t n) { blocks_.reserve((n + 63) / 64); }
    void push_back(Letter l);
    void append(const Word& other);

    Word complemented() const;

    /// Up to 64 letters starting at offset p, packed LSB-first.
    std::uint64_t bits_at(std::size_t p, unsigned count) const noexcept;

    /// Letterwise equality of the length-len ranges starting at offsets i and j.
    bool ranges_equal(std::size_t i, std::size_t j, std::size_t len) const noexcept;

    std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }
    std::uint64_t* data() noexcept { return blocks_.data(); }
    const std::uint64_t* data() const noexcept { return blocks_.data(); }

    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) noexcept {
        return a.len_ == b.len_ && a.blocks_ == b.blocks_;
    }

private:
    std::vector<std::uint64_t> blocks_;
    std::size_t len_ = 0;
};

/// A 1-based closed index interval into the infinite Thue-Morse word.
struct FactorSpec {
    std::uint64_t alpha; ///< first index, >= 1
    std::uint64_t beta;  ///< last index, >= alpha
};

enum class MorphismId { mu, sigma };

} // namespace antipower
