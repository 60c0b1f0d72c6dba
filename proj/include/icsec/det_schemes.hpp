// One-shot (single channel use) encoder and decoder constructions for the
// deterministic interference channel.
//
// Two families are provided:
//   - wocj_scheme: each transmitter sends its private data over the least
//     significant bits the other receiver cannot see, with no jamming.
//   - cj_scheme: symmetric cooperative-jamming layouts in which common data
//     bits are masked at the unintended receiver by the partner's jamming
//     bits; valid layouts are certified at construction time by the exact
//     secrecy auditor (zero leakage, zero decoding error).
//
// Schemes are immutable after construction and safe to share across threads.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "icsec/det_channel.hpp"

namespace icsec {

/// Role of one input position of one transmitter. Message and jam bits are
/// 1-based indices into that user's message / jamming tuples; every index
/// appears exactly once in the user's layout.
struct BitRole {
    enum class Kind { Zero, Message, Jam };

    Kind kind = Kind::Zero;
    int user = 0;   // 1 or 2; meaningful for Message and Jam
    int index = 0;  // 1-based within the user's message or jam bits

    static BitRole zero() { return {}; }
    static BitRole message(int user, int index) { return {Kind::Message, user, index}; }
    static BitRole jam(int user, int index) { return {Kind::Jam, user, index}; }

    bool operator==(const BitRole&) const = default;
};

/// One step of a receiver's decoding plan: read the given output position,
/// xor out the listed already-recovered message bits, and take the result as
/// message bit msg_index. Steps run in order (forward substitution); every
/// scheme this library constructs decodes by plain reads, so the cancel
/// lists it emits are empty, but the executor honors them.
struct ReadStep {
    int position = 0;                 // 1..q of the receiver's output word
    int msg_index = 0;                // which message bit this step recovers
    std::vector<int> cancel_indices;  // message bits decoded by earlier steps

    bool operator==(const ReadStep&) const = default;
};

using ReadMap = std::vector<ReadStep>;
using BitTuple = std::vector<int>;

/// A complete one-shot scheme: per-transmitter bit layouts plus per-receiver
/// read maps. Rates are counted in bits per channel use, R_k = msg_bits_k.
struct OneShotScheme {
    DetChannelParams params;
    std::vector<BitRole> layout1, layout2;  // one role per input position, MSB first
    int msg_bits1 = 0, msg_bits2 = 0;
    int jam_bits1 = 0, jam_bits2 = 0;
    ReadMap read_map1, read_map2;

    std::pair<int, int> rates() const { return {msg_bits1, msg_bits2}; }

    /// Checks the structural invariants (each message/jam index placed
    /// exactly once, read maps in range and properly ordered). Throws
    /// std::invalid_argument on violation.
    void validate() const;
};

/// The scheme without cooperative jamming: transmitter k places its
/// (m_kk - m_lk)^+ message bits at positions m_lk+1 .. m_kk, zeros elsewhere.
/// Degenerate parameters yield zero-rate schemes; never fails.
OneShotScheme wocj_scheme(const DetChannelParams& p);

/// Symmetric cooperative-jamming scheme for interference ratio
/// alpha = mc/md in (2/3, 2) excluding 1. Per-user message bits by regime:
///   2/3 < alpha <= 3/4 : (md - mc) private + (3mc - 2md) common
///   3/4 < alpha <  1   : (md - mc) private + mc/3 common   (requires 3 | mc)
///   1   < alpha <  3/2 : mc/3 common                       (requires 3 | mc)
///   3/2 <= alpha <  2  : (2md - mc) common
/// The returned scheme is audited at construction and guaranteed to have
/// exactly zero leakage and zero decoding error. Throws
/// UnsupportedParameters when alpha is outside the supported range, a role
/// count is not an integer, or no one-shot layout exists.
OneShotScheme cj_scheme(int md, int mc);

/// Substitutes message and jamming bits into the layouts. Tuple lengths must
/// match the scheme's declared counts (LengthMismatch otherwise).
std::pair<BitWord, BitWord> encode(const OneShotScheme& s, const BitTuple& w1,
                                   const BitTuple& w2, const BitTuple& r1, const BitTuple& r2);

/// Runs the receiver's read map over an output word of width q and returns
/// the recovered message tuple. Total for any input word.
BitTuple decode(const OneShotScheme& s, const BitWord& y, int receiver);

}  // namespace icsec
