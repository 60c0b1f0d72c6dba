#include "icsec/det_channel.hpp"

#include <algorithm>
#include <stdexcept>

namespace icsec {

namespace {

std::uint64_t width_mask(int width) {
    if (width == 0) return 0;
    if (width == 64) return ~std::uint64_t{0};
    return (std::uint64_t{1} << width) - 1;
}

}  // namespace

BitWord::BitWord(int width, std::uint64_t bits) : width_(width), bits_(bits) {
    if (width < 0 || width > 64)
        throw WidthMismatch("BitWord width must be in [0, 64], got " + std::to_string(width));
    if ((bits & ~width_mask(width)) != 0)
        throw WidthMismatch("BitWord value does not fit in " + std::to_string(width) + " bits");
}

BitWord BitWord::from_bits(std::initializer_list<int> bits) {
    return from_bits(std::vector<int>(bits));
}

BitWord BitWord::from_bits(const std::vector<int>& bits) {
    std::uint64_t raw = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("bit values must be 0 or 1");
        raw = (raw << 1) | static_cast<std::uint64_t>(b);
    }
    return BitWord(static_cast<int>(bits.size()), raw);
}

int BitWord::bit(int pos) const {
    if (pos < 1 || pos > width_)
        throw std::out_of_range("bit position " + std::to_string(pos) + " outside width " +
                                std::to_string(width_));
    return static_cast<int>((bits_ >> (width_ - pos)) & 1u);
}

BitWord BitWord::with_bit(int pos, int value) const {
    if (pos < 1 || pos > width_)
        throw std::out_of_range("bit position " + std::to_string(pos) + " outside width " +
                                std::to_string(width_));
    if (value != 0 && value != 1) throw std::invalid_argument("bit values must be 0 or 1");
    const std::uint64_t mask = std::uint64_t{1} << (width_ - pos);
    return BitWord(width_, value ? (bits_ | mask) : (bits_ & ~mask));
}

std::string BitWord::to_string() const {
    std::string s;
    s.reserve(width_);
    for (int i = 1; i <= width_; ++i) s.push_back(bit(i) ? '1' : '0');
    return s;
}

BitWord BitWord::operator^(const BitWord& other) const {
    if (width_ != other.width_)
        throw WidthMismatch("xor of words with widths " + std::to_string(width_) + " and " +
                            std::to_string(other.width_));
    return BitWord(width_, bits_ ^ other.bits_);
}

DetChannelParams::DetChannelParams(int m11_, int m12_, int m21_, int m22_)
    : m11(m11_), m12(m12_), m21(m21_), m22(m22_) {
    if (m11 < 0 || m12 < 0 || m21 < 0 || m22 < 0)
        throw std::invalid_argument("link strengths must be nonnegative");
    q = std::max({m11, m12, m21, m22});
    if (q > 64) throw WidthMismatch("word width q = " + std::to_string(q) + " exceeds 64");
}

DetChannelParams DetChannelParams::symmetric(int md, int mc) {
    return DetChannelParams(md, mc, mc, md);
}

BitWord shift_down(const BitWord& x, int s) {
    if (s < 0) throw std::invalid_argument("shift amount must be nonnegative");
    // Position i of the packed word is integer bit (width - i), so shifting
    // the word down by s is a plain right shift. Shift counts >= 64 are UB on
    // uint64_t, hence the explicit zero.
    if (s >= x.width()) return BitWord::zero(x.width());
    return BitWord(x.width(), x.raw() >> s);
}

BitWord channel_output(const DetChannelParams& p, const BitWord& x1, const BitWord& x2,
                       int receiver) {
    if (x1.width() != p.q || x2.width() != p.q)
        throw WidthMismatch("channel inputs must have width q = " + std::to_string(p.q));
    if (receiver == 1) return shift_down(x1, p.q - p.m11) ^ shift_down(x2, p.q - p.m12);
    if (receiver == 2) return shift_down(x1, p.q - p.m21) ^ shift_down(x2, p.q - p.m22);
    throw std::invalid_argument("receiver must be 1 or 2");
}

}  // namespace icsec
