#include "icsec/capacity_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace icsec {

namespace {

int pos(int v) { return v > 0 ? v : 0; }
double pos(double v) { return v > 0.0 ? v : 0.0; }

constexpr double kLn2 = 0.6931471805599453;

// log2(1 + 2^t), stable for any t. Keeps the Gaussian formulas finite even
// when P^exponent would overflow a double.
double log2_1p_exp2(double t) {
    if (t > 0.0) return t + std::log1p(std::exp2(-t)) / kLn2;
    return std::log1p(std::exp2(t)) / kLn2;
}

// log2(1 + 2^t1 + 2^t2), same log-domain treatment.
double log2_1p_exp2_2(double t1, double t2) {
    const double m = std::max({0.0, t1, t2});
    return m + std::log2(std::exp2(0.0 - m) + std::exp2(t1 - m) + std::exp2(t2 - m));
}

}  // namespace

// ---------------------------------------------------------------------------
// Deterministic model
// ---------------------------------------------------------------------------

DetRegion det_outer_region(const DetChannelParams& p) {
    DetRegion r;
    r.b_r1 = std::max(0, p.m11 - pos(p.m21 - p.m22));
    r.b_r2 = std::max(0, p.m22 - pos(p.m12 - p.m11));
    r.b_sum = std::max({p.m21 - pos(p.m11 - p.m12), p.m22 - p.m12, 0}) +
              std::max({p.m12 - pos(p.m22 - p.m21), p.m11 - p.m21, 0});
    r.b_2r1_r2 = std::max(p.m11, p.m12) + pos(p.m11 - p.m21) + pos(p.m22 - p.m12);
    r.b_2r2_r1 = std::max(p.m22, p.m21) + pos(p.m11 - p.m21) + pos(p.m22 - p.m12);
    return r;
}

double det_sum_upper(const DetChannelParams& p) {
    const DetRegion r = det_outer_region(p);
    return std::min({static_cast<double>(r.b_r1 + r.b_r2), static_cast<double>(r.b_sum),
                     static_cast<double>(r.b_2r1_r2 + r.b_2r2_r1) / 3.0});
}

std::pair<int, int> wocj_rates(const DetChannelParams& p) {
    return {pos(p.m11 - p.m21), pos(p.m22 - p.m12)};
}

int wocj_sum_rate(const DetChannelParams& p) {
    const auto [r1, r2] = wocj_rates(p);
    return r1 + r2;
}

OptimalityVerdict wocj_optimality(const DetChannelParams& p) {
    const bool conditions = p.m22 + pos(p.m11 - p.m12) >= p.m21 + p.m12 &&
                            p.m11 + pos(p.m22 - p.m21) >= p.m21 + p.m12;
    const int sum = wocj_sum_rate(p);
    if (conditions && sum > 0)
        return {OptimalityKind::OptimalPositive, static_cast<double>(sum)};
    if (sum == 0 && det_sum_upper(p) == 0.0) return {OptimalityKind::OptimalZero, 0.0};
    if (p.is_symmetric() && p.m11 > 0) {
        // The symmetric secure sum capacity is known in closed form, which
        // settles the cases the general region bound leaves open.
        const double capacity = sym_secure_sum(p.m11, p.m12);
        if (capacity == 0.0 && sum == 0) return {OptimalityKind::OptimalZero, 0.0};
        if (capacity > 0.0 && sum < capacity) return {OptimalityKind::Suboptimal, 0.0};
        if (capacity > 0.0 && sum == capacity)
            return {OptimalityKind::OptimalPositive, capacity};
    }
    return {OptimalityKind::Unknown, 0.0};
}

double sym_secure_sum(double md, double mc) {
    if (!(md > 0.0) || mc < 0.0)
        throw std::invalid_argument("sym_secure_sum needs md > 0 and mc >= 0");
    const double a = mc / md;
    double f;
    if (a <= 2.0 / 3.0)
        f = 2.0 * (1.0 - a);
    else if (a <= 0.75)
        f = 2.0 * (2.0 * a - 1.0);
    else if (a < 1.0)
        f = 2.0 * (1.0 - 2.0 * a / 3.0);
    else if (a == 1.0)
        f = 0.0;
    else if (a <= 1.5)
        f = 2.0 * a / 3.0;
    else if (a <= 2.0)
        f = 2.0 * (2.0 - a);
    else
        f = 0.0;
    return md * f;
}

double sym_nonsecure_sum(double md, double mc) {
    if (!(md > 0.0) || mc < 0.0)
        throw std::invalid_argument("sym_nonsecure_sum needs md > 0 and mc >= 0");
    const double a = mc / md;
    double g;
    if (a <= 0.5)
        g = 2.0 * (1.0 - a);
    else if (a <= 2.0 / 3.0)
        g = 2.0 * a;
    else if (a <= 1.0)
        g = 2.0 - a;
    else if (a <= 2.0)
        g = a;
    else
        g = 2.0;
    return md * g;
}

// ---------------------------------------------------------------------------
// Gaussian model
// ---------------------------------------------------------------------------

GaussianParams::GaussianParams(double a11_, double a12_, double a21_, double a22_, double P_,
                               std::optional<std::array<double, 4>> phases_)
    : a11(a11_), a12(a12_), a21(a21_), a22(a22_), P(P_), phases(phases_) {
    if (a11 < 0 || a12 < 0 || a21 < 0 || a22 < 0)
        throw std::invalid_argument("channel-strength exponents must be nonnegative");
    if (!(P >= 1.0)) throw std::invalid_argument("nominal power P must be at least 1");
}

bool gaussian_conditions(const GaussianParams& g) {
    return g.a22 + pos(g.a11 - g.a12) >= g.a21 + g.a12 &&
           g.a11 + pos(g.a22 - g.a21) >= g.a21 + g.a12;
}

std::pair<double, double> gwc_tin_rates(const GaussianParams& g) {
    const double lp = std::log2(g.P);
    const double r1 = log2_1p_exp2((g.a11 - g.a21) * lp - 1.0) - 1.0;
    const double r2 = log2_1p_exp2((g.a22 - g.a12) * lp - 1.0) - 1.0;
    return {pos(r1), pos(r2)};
}

double gwc_tin_sum_unclamped(const GaussianParams& g) {
    const double lp = std::log2(g.P);
    return log2_1p_exp2((g.a11 - g.a21) * lp - 1.0) +
           log2_1p_exp2((g.a22 - g.a12) * lp - 1.0) - 2.0;
}

GwcTinDesign gwc_tin_design(const GaussianParams& g, double beta1, double beta2) {
    if (beta1 < 0 || beta2 < 0)
        throw std::invalid_argument("power-allocation exponents must be nonnegative");
    const double lp = std::log2(g.P);
    const double cross1 = (g.a21 - beta1) * lp;  // interference caused at receiver 2
    const double cross2 = (g.a12 - beta2) * lp;  // interference caused at receiver 1
    // log2(1 + A/(1+B)) = log2(1 + B + A) - log2(1 + B)
    const double i11 = log2_1p_exp2_2(cross2, (g.a11 - beta1) * lp) - log2_1p_exp2(cross2);
    const double i22 = log2_1p_exp2_2(cross1, (g.a22 - beta2) * lp) - log2_1p_exp2(cross1);
    GwcTinDesign d;
    d.beta1 = beta1;
    d.beta2 = beta2;
    d.rp1 = log2_1p_exp2(cross1);
    d.rp2 = log2_1p_exp2(cross2);
    d.r1 = pos(i11 - d.rp1);
    d.r2 = pos(i22 - d.rp2);
    return d;
}

double gaussian_sum_upper(const GaussianParams& g) {
    const double lp = std::log2(g.P);
    return log2_1p_exp2_2((g.a22 - g.a12) * lp, (g.a22 - pos(g.a11 - g.a12)) * lp) +
           log2_1p_exp2_2((g.a11 - g.a21) * lp, (g.a11 - pos(g.a22 - g.a21)) * lp) + 4.0;
}

double gaussian_sum_upper_refined(const GaussianParams& g) {
    const double lp = std::log2(g.P);
    return log2_1p_exp2((g.a22 - g.a12) * lp + 1.0) +
           log2_1p_exp2((g.a11 - g.a21) * lp + 1.0) + 4.0;
}

double gaussian_gap(const GaussianParams& g) {
    if (!gaussian_conditions(g))
        throw ConditionsNotMet("constant-gap guarantee requires the strength conditions");
    return gaussian_sum_upper_refined(g) - gwc_tin_sum_unclamped(g);
}

GdofSum gdof_sum(const GaussianParams& g) {
    return {pos(g.a22 - g.a12) + pos(g.a11 - g.a21), gaussian_conditions(g)};
}

}  // namespace icsec
