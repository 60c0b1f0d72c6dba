// Exact, enumeration-based audit of one-shot schemes: information leakage
// toward the unintended receivers and zero-error decodability, computed from
// the full joint distribution of (w1, w2, y1, y2) under uniform message and
// jamming bits.
//
// The audit runs at a single channel use. The channel is memoryless and the
// schemes draw fresh independent bits every use, so per-use leakage exactly
// zero carries over to any block length.

#pragma once

#include <cstdint>

#include "icsec/det_schemes.hpp"
#include "icsec/exact_pmf.hpp"

namespace icsec {

/// An exact probability as integer numerator over a power-of-two denominator.
struct ExactRatio {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    double value() const {
        return static_cast<double>(numerator) / static_cast<double>(denominator);
    }
    bool operator==(const ExactRatio&) const = default;
};

/// Result of auditing a scheme over one channel use.
struct AuditReport {
    double leakage_1to2 = 0.0;  // I(w1; y2) in bits
    double leakage_2to1 = 0.0;  // I(w2; y1) in bits
    ExactRatio error_1;         // Pr[decoded w1 != w1], exact
    ExactRatio error_2;
    int rate_1 = 0;  // bits per channel use
    int rate_2 = 0;

    bool secure(double tolerance = 1e-9) const {
        return leakage_1to2 <= tolerance && leakage_2to1 <= tolerance &&
               error_1.numerator == 0 && error_2.numerator == 0;
    }
};

/// Enumeration budget: audits with more than this many uniform input bits
/// (messages plus jamming, both users) are rejected with TooLarge.
inline constexpr int kAuditMaxInputBits = 30;

/// Enumerates all message and jamming assignments, builds the exact joint
/// pmf of (w1, w2, y1, y2), and reports leakages, exact decoding error rates
/// and scheme rates. The enumeration may be partitioned across `workers`
/// threads; the merged counts are identical to a serial run regardless of
/// the partitioning.
AuditReport audit_scheme(const OneShotScheme& s, int workers = 1);

/// The joint pmf the audit is computed from, exposed for property checks.
/// Variables are named "w1", "w2", "y1", "y2".
ExactPmf audit_joint_pmf(const OneShotScheme& s, int workers = 1);

}  // namespace icsec
