// Bit-exact model of the two-user linear deterministic interference channel.
//
// Each link delivers the top m_kl bits of the transmitted word, shifted down
// to the bottom of the receiver's word; the two arriving words add modulo 2.
// All operations here are pure functions on immutable values and are safe to
// call concurrently.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "icsec/errors.hpp"

namespace icsec {

/// A fixed-width column of bits over GF(2). Position 1 is the most
/// significant (top) bit, position width() the least significant.
///
/// Words are stored as packed integers, so widths are limited to 64 bits;
/// that covers every instance this library constructs (q <= 64) and keeps
/// exhaustive enumeration cheap. Width 0 is permitted as the degenerate word
/// of an all-zero channel.
class BitWord {
  public:
    BitWord() = default;
    BitWord(int width, std::uint64_t bits);

    static BitWord zero(int width) { return BitWord(width, 0); }
    /// Builds a word from bits listed most-significant first.
    static BitWord from_bits(std::initializer_list<int> bits);
    static BitWord from_bits(const std::vector<int>& bits);

    int width() const { return width_; }
    std::uint64_t raw() const { return bits_; }

    /// Bit at position pos, 1-based from the most significant bit.
    int bit(int pos) const;
    /// Copy with the bit at position pos set to value.
    BitWord with_bit(int pos, int value) const;

    /// Bits listed most-significant first, e.g. "101".
    std::string to_string() const;

    BitWord operator^(const BitWord& other) const;
    bool operator==(const BitWord&) const = default;

  private:
    int width_ = 0;
    std::uint64_t bits_ = 0;
};

/// The four link strengths of the deterministic channel, in bits per channel
/// use, plus the derived word width q = max of the four. q is never
/// user-supplied, which keeps the parameter set consistent by construction.
struct DetChannelParams {
    int m11 = 0;  // transmitter 1 -> receiver 1
    int m12 = 0;  // transmitter 2 -> receiver 1
    int m21 = 0;  // transmitter 1 -> receiver 2
    int m22 = 0;  // transmitter 2 -> receiver 2
    int q = 0;

    DetChannelParams(int m11, int m12, int m21, int m22);

    /// Symmetric instance: direct strength md on both direct links, cross
    /// strength mc on both cross links.
    static DetChannelParams symmetric(int md, int mc);

    bool is_symmetric() const { return m11 == m22 && m12 == m21; }
    bool operator==(const DetChannelParams&) const = default;
};

/// Applies the lower-shift matrix s times: output position i holds input
/// position i - s, positions 1..s become zero. Total for any s >= 0; shifts
/// past the width return the all-zero word.
BitWord shift_down(const BitWord& x, int s);

/// Channel output at the given receiver (1 or 2) for one channel use:
/// receiver k hears shift_down(x1, q - m_k1) xor shift_down(x2, q - m_k2).
/// Throws WidthMismatch unless both inputs have width q.
BitWord channel_output(const DetChannelParams& p, const BitWord& x1,
                       const BitWord& x2, int receiver);

}  // namespace icsec
