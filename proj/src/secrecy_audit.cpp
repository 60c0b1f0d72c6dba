#include "icsec/secrecy_audit.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <thread>

namespace icsec {

namespace {

struct EnumSlice {
    ExactPmf pmf;
    std::uint64_t errors_1 = 0;
    std::uint64_t errors_2 = 0;
};

BitTuple unpack_bits(std::uint64_t packed, int count) {
    BitTuple t(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) t[j] = static_cast<int>((packed >> j) & 1u);
    return t;
}

std::uint64_t pack_bits(const BitTuple& t) {
    std::uint64_t packed = 0;
    for (std::size_t j = 0; j < t.size(); ++j)
        packed |= static_cast<std::uint64_t>(t[j] & 1) << j;
    return packed;
}

std::vector<ExactPmf::Variable> joint_variables(const OneShotScheme& s) {
    return {{"w1", s.msg_bits1}, {"w2", s.msg_bits2}, {"y1", s.params.q}, {"y2", s.params.q}};
}

// Enumerates assignments [begin, end) of the packed input bits
// [w1 | w2 | r1 | r2] (least significant field first) and accumulates the
// joint counts and exact error counts for that slice.
EnumSlice enumerate_slice(const OneShotScheme& s, int total_bits, std::uint64_t begin,
                          std::uint64_t end) {
    EnumSlice slice{ExactPmf(joint_variables(s), total_bits)};
    const int off_w2 = s.msg_bits1;
    const int off_r1 = off_w2 + s.msg_bits2;
    const int off_r2 = off_r1 + s.jam_bits1;
    ExactPmf::Outcome outcome(4);
    for (std::uint64_t i = begin; i < end; ++i) {
        const BitTuple w1 = unpack_bits(i, s.msg_bits1);
        const BitTuple w2 = unpack_bits(i >> off_w2, s.msg_bits2);
        const BitTuple r1 = unpack_bits(i >> off_r1, s.jam_bits1);
        const BitTuple r2 = unpack_bits(i >> off_r2, s.jam_bits2);
        const auto [x1, x2] = encode(s, w1, w2, r1, r2);
        const BitWord y1 = channel_output(s.params, x1, x2, 1);
        const BitWord y2 = channel_output(s.params, x1, x2, 2);
        if (decode(s, y1, 1) != w1) ++slice.errors_1;
        if (decode(s, y2, 2) != w2) ++slice.errors_2;
        outcome[0] = pack_bits(w1);
        outcome[1] = pack_bits(w2);
        outcome[2] = y1.raw();
        outcome[3] = y2.raw();
        slice.pmf.add(outcome, 1);
    }
    return slice;
}

EnumSlice enumerate_all(const OneShotScheme& s, int workers) {
    s.validate();
    const int total_bits = s.msg_bits1 + s.msg_bits2 + s.jam_bits1 + s.jam_bits2;
    if (total_bits > kAuditMaxInputBits)
        throw TooLarge("audit would enumerate 2^" + std::to_string(total_bits) +
                       " assignments, budget is 2^" + std::to_string(kAuditMaxInputBits));
    const std::uint64_t total = std::uint64_t{1} << total_bits;
    if (workers < 1) workers = 1;
    workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));

    if (workers == 1) return enumerate_slice(s, total_bits, 0, total);

    std::vector<std::optional<EnumSlice>> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    const std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
    for (int t = 0; t < workers; ++t) {
        const std::uint64_t begin = chunk * static_cast<std::uint64_t>(t);
        const std::uint64_t end = (t + 1 == workers) ? total : begin + chunk;
        threads.emplace_back([&, t, begin, end] {
            parts[static_cast<std::size_t>(t)] = enumerate_slice(s, total_bits, begin, end);
        });
    }
    for (auto& th : threads) th.join();

    // Counts merge by plain addition, so the result is independent of the
    // partitioning.
    EnumSlice merged{ExactPmf(joint_variables(s), total_bits)};
    for (auto& part : parts) {
        merged.pmf.merge(part->pmf);
        merged.errors_1 += part->errors_1;
        merged.errors_2 += part->errors_2;
    }
    return merged;
}

}  // namespace

ExactPmf audit_joint_pmf(const OneShotScheme& s, int workers) {
    return enumerate_all(s, workers).pmf;
}

AuditReport audit_scheme(const OneShotScheme& s, int workers) {
    EnumSlice slice = enumerate_all(s, workers);
    AuditReport report;
    report.leakage_1to2 = mutual_information(slice.pmf, {"w1"}, {"y2"});
    report.leakage_2to1 = mutual_information(slice.pmf, {"w2"}, {"y1"});
    report.error_1 = {slice.errors_1, slice.pmf.denominator()};
    report.error_2 = {slice.errors_2, slice.pmf.denominator()};
    report.rate_1 = s.msg_bits1;
    report.rate_2 = s.msg_bits2;
    return report;
}

}  // namespace icsec
