#include "antipower/word.hpp"

#include <cassert>
#include <stdexcept>

namespace antipower {

Word Word::from_string(std::string_view s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        if (c == '0') {
            w.push_back(Letter::zero);
        } else if (c == '1') {
            w.push_back(Letter::one);
        } else {
            throw std::invalid_argument("word string must contain only 0 and 1");
        }
    }
    return w;
}

void Word::push_back(Letter l) {
    if ((len_ & 63) == 0) blocks_.push_back(0);
    if (l == Letter::one) blocks_[len_ >> 6] |= std::uint64_t{1} << (len_ & 63);
    ++len_;
}

void Word::append(const Word& other) {
    if (other.len_ == 0) return;
    unsigned off = len_ & 63;
    std::size_t need = (len_ + other.len_ + 63) / 64;
    std::size_t base = len_ >> 6;
    blocks_.resize(need, 0);
    if (off == 0) {
        for (std::size_t i = 0; i < other.blocks_.size(); ++i)
            blocks_[base + i] = other.blocks_[i];
    } else {
        for (std::size_t i = 0; i < other.blocks_.size(); ++i) {
            std::uint64_t w = other.blocks_[i];
            blocks_[base + i] |= w << off;
            if (base + i + 1 < need) blocks_[base + i + 1] |= w >> (64 - off);
        }
    }
    len_ += other.len_;
}

Word Word::complemented() const {
    Word out(*this);
    for (auto& b : out.blocks_) b = ~b;
    if (len_ & 63) out.blocks_.back() &= ~std::uint64_t{0} >> (64 - (len_ & 63));
    return out;
}

std::uint64_t Word::bits_at(std::size_t p, unsigned count) const noexcept {
    assert(count >= 1 && count <= 64 && p + count <= len_);
    unsigned off = p & 63;
    std::size_t blk = p >> 6;
    std::uint64_t w = blocks_[blk] >> off;
    if (off != 0 && blk + 1 < blocks_.size()) w |= blocks_[blk + 1] << (64 - off);
    if (count < 64) w &= (std::uint64_t{1} << count) - 1;
    return w;
}

bool Word::ranges_equal(std::size_t i, std::size_t j, std::size_t len) const noexcept {
    while (len >= 64) {
        if (bits_at(i, 64) != bits_at(j, 64)) return false;
        i += 64;
        j += 64;
        len -= 64;
    }
    if (len == 0) return true;
    return bits_at(i, static_cast<unsigned>(len)) == bits_at(j, static_cast<unsigned>(len));
}

std::string Word::str() const {
    std::string s;
    s.reserve(len_);
    for (std::size_t p = 0; p < len_; ++p) s.push_back(to_char(at(p)));
    return s;
}

} // namespace antipower
