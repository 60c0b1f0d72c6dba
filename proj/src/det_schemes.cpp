#include "icsec/det_schemes.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "icsec/secrecy_audit.hpp"

namespace icsec {

namespace {

int positive_part(int v) { return v > 0 ? v : 0; }

void check_tuple(const BitTuple& t, int expected, const char* what) {
    if (static_cast<int>(t.size()) != expected)
        throw LengthMismatch(std::string(what) + " has " + std::to_string(t.size()) +
                             " bits, scheme declares " + std::to_string(expected));
    for (int b : t) {
        if (b != 0 && b != 1) throw std::invalid_argument("tuple bits must be 0 or 1");
    }
}

void check_layout(const std::vector<BitRole>& layout, int user, int q, int msg_bits,
                  int jam_bits) {
    if (static_cast<int>(layout.size()) != q)
        throw std::invalid_argument("layout length does not equal q");
    std::vector<int> msg_seen(static_cast<std::size_t>(msg_bits) + 1, 0);
    std::vector<int> jam_seen(static_cast<std::size_t>(jam_bits) + 1, 0);
    for (const BitRole& role : layout) {
        if (role.kind == BitRole::Kind::Zero) continue;
        if (role.user != user) throw std::invalid_argument("layout carries a foreign user's bit");
        auto& seen = role.kind == BitRole::Kind::Message ? msg_seen : jam_seen;
        const int limit = role.kind == BitRole::Kind::Message ? msg_bits : jam_bits;
        if (role.index < 1 || role.index > limit)
            throw std::invalid_argument("bit index outside the declared count");
        if (seen[static_cast<std::size_t>(role.index)]++)
            throw std::invalid_argument("bit index placed more than once");
    }
    for (int i = 1; i <= msg_bits; ++i)
        if (!msg_seen[static_cast<std::size_t>(i)])
            throw std::invalid_argument("message bit missing from layout");
    for (int i = 1; i <= jam_bits; ++i)
        if (!jam_seen[static_cast<std::size_t>(i)])
            throw std::invalid_argument("jam bit missing from layout");
}

void check_read_map(const ReadMap& rm, int q, int msg_bits) {
    std::vector<int> decoded(static_cast<std::size_t>(msg_bits) + 1, 0);
    for (const ReadStep& step : rm) {
        if (step.position < 1 || step.position > q)
            throw std::invalid_argument("read position outside 1..q");
        if (step.msg_index < 1 || step.msg_index > msg_bits)
            throw std::invalid_argument("read step targets an unknown message bit");
        for (int j : step.cancel_indices) {
            if (j < 1 || j > msg_bits || !decoded[static_cast<std::size_t>(j)])
                throw std::invalid_argument("cancellation refers to a not-yet-decoded bit");
        }
        if (decoded[static_cast<std::size_t>(step.msg_index)]++)
            throw std::invalid_argument("message bit decoded twice");
    }
    for (int i = 1; i <= msg_bits; ++i)
        if (!decoded[static_cast<std::size_t>(i)])
            throw std::invalid_argument("message bit never decoded");
}

BitWord fill_word(const std::vector<BitRole>& layout, int q, const BitTuple& w,
                  const BitTuple& r) {
    BitWord x = BitWord::zero(q);
    for (int pos = 1; pos <= q; ++pos) {
        const BitRole& role = layout[static_cast<std::size_t>(pos - 1)];
        switch (role.kind) {
        case BitRole::Kind::Zero:
            break;
        case BitRole::Kind::Message:
            x = x.with_bit(pos, w[static_cast<std::size_t>(role.index - 1)]);
            break;
        case BitRole::Kind::Jam:
            x = x.with_bit(pos, r[static_cast<std::size_t>(role.index - 1)]);
            break;
        }
    }
    return x;
}

// Builds the symmetric cooperative-jamming layout for the given common-bit
// positions. Both users share the same role pattern. The partner's jamming
// bit that masks a common bit at position c sits s = |md - mc| levels away:
// at c + s when the interference is weak (mc < md, the eavesdropper sees the
// partner's word shifted down by s) and at c - s when it is strong. Private
// bits occupy the bottom md - mc positions the eavesdropper cannot see at
// all (weak case only). Returns nothing when roles would collide.
std::optional<OneShotScheme> build_symmetric_cj(int md, int mc,
                                                const std::vector<int>& common_positions) {
    const DetChannelParams p = DetChannelParams::symmetric(md, mc);
    const int q = p.q;
    const bool weak = mc < md;
    const int s = weak ? md - mc : mc - md;

    std::vector<BitRole> pattern(static_cast<std::size_t>(q), BitRole::zero());
    // Roles are recorded for user 1; user 2's layout is the same pattern
    // with the user field flipped.
    auto place = [&](int pos, BitRole role) -> bool {
        if (pos < 1 || pos > q) return false;
        BitRole& cell = pattern[static_cast<std::size_t>(pos - 1)];
        if (cell.kind != BitRole::Kind::Zero) return false;
        cell = role;
        return true;
    };

    int msg_index = 0;
    std::vector<std::pair<int, int>> reads;  // (y position, message index)
    for (int c : common_positions) {
        ++msg_index;
        if (!place(c, BitRole::message(1, msg_index))) return std::nullopt;
        reads.emplace_back(weak ? c : c + s, msg_index);
    }
    if (weak) {
        for (int ppos = mc + 1; ppos <= md; ++ppos) {
            ++msg_index;
            if (!place(ppos, BitRole::message(1, msg_index))) return std::nullopt;
            reads.emplace_back(ppos, msg_index);
        }
    }
    int jam_index = 0;
    for (int c : common_positions) {
        ++jam_index;
        if (!place(weak ? c + s : c - s, BitRole::jam(1, jam_index))) return std::nullopt;
    }

    OneShotScheme scheme{p, {}, {}, msg_index, msg_index, jam_index, jam_index, {}, {}};
    scheme.layout1 = pattern;
    scheme.layout2 = pattern;
    for (BitRole& role : scheme.layout2) {
        if (role.kind != BitRole::Kind::Zero) role.user = 2;
    }
    for (auto [pos, idx] : reads) {
        if (pos < 1 || pos > q) return std::nullopt;
        scheme.read_map1.push_back({pos, idx, {}});
        scheme.read_map2.push_back({pos, idx, {}});
    }
    return scheme;
}

// Builds a candidate and keeps it only if the exact audit certifies zero
// leakage in both directions and zero decoding error.
std::optional<OneShotScheme> certify_cj(int md, int mc, const std::vector<int>& common_positions) {
    auto scheme = build_symmetric_cj(md, mc, common_positions);
    if (!scheme) return std::nullopt;
    scheme->validate();
    if (!audit_scheme(*scheme).secure(1e-9)) return std::nullopt;
    return scheme;
}

std::vector<int> parametric_common_positions(int md, int mc, int n_common) {
    std::vector<int> c;
    c.reserve(static_cast<std::size_t>(n_common));
    if (mc < md) {
        const int s = md - mc;
        if (4 * mc <= 3 * md) {
            // Common block on top, jam block right below it.
            for (int i = 1; i <= n_common; ++i) c.push_back(i);
        } else {
            // Interleaved: common, jam, gap, repeating down the word.
            for (int i = 0; i < n_common; ++i) c.push_back(1 + 3 * s * i);
        }
    } else {
        const int s = mc - md;
        if (2 * mc < 3 * md) {
            for (int i = 0; i < n_common; ++i) c.push_back(s + 1 + 3 * s * i);
        } else {
            // Entire receiver-visible band below the jam block.
            for (int i = s + 1; i <= md; ++i) c.push_back(i);
        }
    }
    return c;
}

// Deterministic enumeration of all n_common-subsets of the candidate window,
// in lexicographic order. Only used as a fallback for small words.
std::optional<OneShotScheme> search_cj(int md, int mc, int n_common) {
    const bool weak = mc < md;
    const int lo = weak ? 1 : (mc - md) + 1;
    const int hi = weak ? mc : md;
    std::vector<int> window;
    for (int pos = lo; pos <= hi; ++pos) window.push_back(pos);
    if (n_common > static_cast<int>(window.size())) return std::nullopt;

    std::vector<int> pick(static_cast<std::size_t>(n_common));
    for (int i = 0; i < n_common; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<int> common;
        common.reserve(static_cast<std::size_t>(n_common));
        for (int i : pick) common.push_back(window[static_cast<std::size_t>(i)]);
        if (auto scheme = certify_cj(md, mc, common)) return scheme;

        int k = n_common - 1;
        while (k >= 0 &&
               pick[static_cast<std::size_t>(k)] == static_cast<int>(window.size()) - n_common + k)
            --k;
        if (k < 0) return std::nullopt;
        ++pick[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < n_common; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

void OneShotScheme::validate() const {
    check_layout(layout1, 1, params.q, msg_bits1, jam_bits1);
    check_layout(layout2, 2, params.q, msg_bits2, jam_bits2);
    check_read_map(read_map1, params.q, msg_bits1);
    check_read_map(read_map2, params.q, msg_bits2);
}

OneShotScheme wocj_scheme(const DetChannelParams& p) {
    OneShotScheme s{p, {}, {}, 0, 0, 0, 0, {}, {}};
    s.layout1.assign(static_cast<std::size_t>(p.q), BitRole::zero());
    s.layout2.assign(static_cast<std::size_t>(p.q), BitRole::zero());

    auto place_user = [&](int user, int m_direct, int m_cross, std::vector<BitRole>& layout,
                          ReadMap& read_map) {
        const int rate = positive_part(m_direct - m_cross);
        for (int i = 1; i <= rate; ++i) {
            // Least significant direct-link bits, below everything the
            // unintended receiver can see.
            layout[static_cast<std::size_t>(m_cross + i - 1)] = BitRole::message(user, i);
            read_map.push_back({p.q - m_direct + m_cross + i, i, {}});
        }
        return rate;
    };
    s.msg_bits1 = place_user(1, p.m11, p.m21, s.layout1, s.read_map1);
    s.msg_bits2 = place_user(2, p.m22, p.m12, s.layout2, s.read_map2);
    return s;
}

OneShotScheme cj_scheme(int md, int mc) {
    if (md < 1 || mc < 1)
        throw UnsupportedParameters("cooperative jamming needs md >= 1 and mc >= 1");
    // alpha = mc/md must lie in (2/3, 2) excluding 1; integer arithmetic only.
    if (!(3 * mc > 2 * md) || mc == md || !(mc < 2 * md))
        throw UnsupportedParameters("mc/md = " + std::to_string(mc) + "/" + std::to_string(md) +
                                    " is outside (2/3, 2) \\ {1}");

    int n_common = 0;
    int n_private = 0;
    if (mc < md) {
        n_private = md - mc;
        if (4 * mc <= 3 * md) {
            n_common = 3 * mc - 2 * md;
        } else {
            if (mc % 3 != 0)
                throw UnsupportedParameters("regime needs mc/3 common bits but 3 does not divide mc");
            n_common = mc / 3;
        }
    } else {
        if (2 * mc < 3 * md) {
            if (mc % 3 != 0)
                throw UnsupportedParameters("regime needs mc/3 common bits but 3 does not divide mc");
            n_common = mc / 3;
        } else {
            n_common = 2 * md - mc;
        }
    }

    if (auto scheme = certify_cj(md, mc, parametric_common_positions(md, mc, n_common)))
        return *scheme;
    if (std::max(md, mc) <= 8) {
        if (auto scheme = search_cj(md, mc, n_common)) return *scheme;
    }
    throw UnsupportedParameters("no one-shot cooperative jamming layout exists for md=" +
                                std::to_string(md) + ", mc=" + std::to_string(mc));
}

std::pair<BitWord, BitWord> encode(const OneShotScheme& s, const BitTuple& w1, const BitTuple& w2,
                                   const BitTuple& r1, const BitTuple& r2) {
    check_tuple(w1, s.msg_bits1, "w1");
    check_tuple(w2, s.msg_bits2, "w2");
    check_tuple(r1, s.jam_bits1, "r1");
    check_tuple(r2, s.jam_bits2, "r2");
    return {fill_word(s.layout1, s.params.q, w1, r1), fill_word(s.layout2, s.params.q, w2, r2)};
}

BitTuple decode(const OneShotScheme& s, const BitWord& y, int receiver) {
    if (receiver != 1 && receiver != 2) throw std::invalid_argument("receiver must be 1 or 2");
    if (y.width() != s.params.q)
        throw WidthMismatch("output word must have width q = " + std::to_string(s.params.q));
    const ReadMap& read_map = receiver == 1 ? s.read_map1 : s.read_map2;
    const int msg_bits = receiver == 1 ? s.msg_bits1 : s.msg_bits2;
    BitTuple w(static_cast<std::size_t>(msg_bits), 0);
    for (const ReadStep& step : read_map) {
        int v = y.bit(step.position);
        for (int j : step.cancel_indices) v ^= w[static_cast<std::size_t>(j - 1)];
        w[static_cast<std::size_t>(step.msg_index - 1)] = v;
    }
    return w;
}

}  // namespace icsec
