// Closed-form secure rates, capacity bounds, optimality conditions and GDoF
// expressions for the two-user interference channel with confidential
// messages, for both the deterministic and the Gaussian model.
//
// All logarithms are base 2 and all rates are in bits per channel use. Every
// function here is pure.

#pragma once

#include <array>
#include <optional>
#include <utility>

#include "icsec/det_channel.hpp"
#include "icsec/errors.hpp"

namespace icsec {

// ---------------------------------------------------------------------------
// Deterministic model
// ---------------------------------------------------------------------------

/// Outer bound on the secure capacity region of the deterministic channel:
/// the five linear constraints R1, R2, R1+R2, 2R1+R2, 2R2+R1. All values are
/// integers for integer link strengths.
struct DetRegion {
    int b_r1 = 0;
    int b_r2 = 0;
    int b_sum = 0;
    int b_2r1_r2 = 0;
    int b_2r2_r1 = 0;

    bool operator==(const DetRegion&) const = default;
};

DetRegion det_outer_region(const DetChannelParams& p);

/// Tightest bound on R1 + R2 implied by the region:
/// min{ b_r1 + b_r2, b_sum, (b_2r1_r2 + b_2r2_r1) / 3 }.
double det_sum_upper(const DetChannelParams& p);

/// Secure rates of the scheme without cooperative jamming,
/// ((m11 - m21)^+, (m22 - m12)^+), and their sum.
std::pair<int, int> wocj_rates(const DetChannelParams& p);
int wocj_sum_rate(const DetChannelParams& p);

/// Whether the no-jamming scheme attains the secure sum capacity.
enum class OptimalityKind { OptimalPositive, OptimalZero, Suboptimal, Unknown };

struct OptimalityVerdict {
    OptimalityKind kind = OptimalityKind::Unknown;
    double c_sum = 0.0;  // meaningful for OptimalPositive

    bool operator==(const OptimalityVerdict&) const = default;
};

/// Classifies the no-jamming scheme:
///   - OptimalPositive(C_sum) when the sufficient conditions
///     m22 + (m11-m12)^+ >= m21 + m12 and m11 + (m22-m21)^+ >= m21 + m12
///     hold and the scheme's sum rate is positive, or when the symmetric
///     secure sum capacity is positive and equals the scheme's sum;
///   - OptimalZero when the secure sum capacity is provably zero (so the
///     silent scheme trivially attains it);
///   - Suboptimal for symmetric channels with mc/md in (2/3, 1) or (1, 2),
///     where jamming schemes are strictly better;
///   - Unknown otherwise (necessity is open for general asymmetric
///     parameters).
OptimalityVerdict wocj_optimality(const DetChannelParams& p);

/// Secure sum capacity of the symmetric deterministic channel with direct
/// strength md > 0 and cross strength mc >= 0 (real-valued arguments are
/// accepted for smooth sweeps). With alpha = mc/md, the normalized value is
/// the piecewise function
///   2(1-alpha), 2(2 alpha - 1), 2(1 - 2 alpha / 3), 0, 2 alpha / 3,
///   2(2-alpha), 0
/// on [0,2/3], [2/3,3/4], [3/4,1), {1}, (1,3/2], [3/2,2], [2,inf); boundary
/// ties resolve to the first matching branch.
double sym_secure_sum(double md, double mc);

/// Sum capacity of the same channel without any secrecy constraint (the
/// classical W-curve): normalized 2(1-alpha), 2 alpha, 2-alpha, alpha, 2 on
/// [0,1/2], [1/2,2/3], [2/3,1], [1,2], [2,inf).
double sym_nonsecure_sum(double md, double mc);

// ---------------------------------------------------------------------------
// Gaussian model
// ---------------------------------------------------------------------------

/// Channel-strength exponents and nominal power of the Gaussian channel.
/// Phases may be recorded for documentation but never enter any formula
/// here: the no-jamming scheme needs no phase knowledge at the transmitters.
struct GaussianParams {
    double a11 = 0, a12 = 0, a21 = 0, a22 = 0;  // exponents, >= 0
    double P = 1;                               // nominal power, >= 1
    std::optional<std::array<double, 4>> phases;  // theta11, theta12, theta21, theta22

    GaussianParams(double a11, double a12, double a21, double a22, double P,
                   std::optional<std::array<double, 4>> phases = std::nullopt);
};

/// The sufficient conditions under which the wiretap-codebook scheme with
/// treating interference as noise is constant-gap optimal:
///   a22 + (a11 - a12)^+ >= a21 + a12  and  a11 + (a22 - a21)^+ >= a21 + a12.
bool gaussian_conditions(const GaussianParams& g);

/// Secure rates of the wiretap-codebook / treat-interference-as-noise scheme
/// with the power split that pushes each cross link down to the noise floor:
/// R_k = max{0, log2(1 + P^(a_kk - a_lk) / 2) - 1}. Clamping at zero reflects
/// that a transmitter can always stay silent.
std::pair<double, double> gwc_tin_rates(const GaussianParams& g);

/// The same sum without clamping, as used by the constant-gap arithmetic.
double gwc_tin_sum_unclamped(const GaussianParams& g);

/// General power split: rates and confusion-message rates for arbitrary
/// power exponents beta1, beta2 >= 0. With beta = (a21, a12) this
/// specializes to gwc_tin_rates and both confusion rates equal 1 bit.
struct GwcTinDesign {
    double beta1 = 0, beta2 = 0;
    double r1 = 0, r2 = 0;    // secure rates, clamped at 0
    double rp1 = 0, rp2 = 0;  // confusion-message rates
};

GwcTinDesign gwc_tin_design(const GaussianParams& g, double beta1, double beta2);

/// Upper bound on the secure sum capacity, valid for all parameters:
/// log2(1 + P^(a22-a12) + P^(a22-(a11-a12)^+))
///   + log2(1 + P^(a11-a21) + P^(a11-(a22-a21)^+)) + 4.
double gaussian_sum_upper(const GaussianParams& g);

/// Refinement under gaussian_conditions:
/// log2(1 + 2 P^(a22-a12)) + log2(1 + 2 P^(a11-a21)) + 4.
double gaussian_sum_upper_refined(const GaussianParams& g);

/// Gap between the refined upper bound and the unclamped achievable sum.
/// Guaranteed no more than 10 bits whenever the conditions hold; throws
/// ConditionsNotMet outside that regime.
double gaussian_gap(const GaussianParams& g);

/// Secure sum generalized degrees of freedom achieved by the scheme,
/// (a22 - a12)^+ + (a11 - a21)^+. The value is the optimum exactly when the
/// conditions hold; otherwise it is only achievable, and the flag says so.
struct GdofSum {
    double value = 0.0;
    bool optimal = false;  // true iff gaussian_conditions hold
};

GdofSum gdof_sum(const GaussianParams& g);

}  // namespace icsec
