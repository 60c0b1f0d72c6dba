#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "icsec/capacity_bounds.hpp"

using icsec::DetChannelParams;
using icsec::DetRegion;
using icsec::GaussianParams;
using icsec::OptimalityKind;

namespace {

// Independently coded evaluator of the five region constraints, kept in
// deliberately different shape from the library's.
DetRegion oracle_region(int m11, int m12, int m21, int m22) {
    auto clamp0 = [](int v) { return v < 0 ? 0 : v; };
    auto max3 = [](int a, int b, int c) { return std::max(a, std::max(b, c)); };
    DetRegion r;
    r.b_r1 = clamp0(m11 - clamp0(m21 - m22));
    r.b_r2 = clamp0(m22 - clamp0(m12 - m11));
    r.b_sum = max3(m21 - clamp0(m11 - m12), m22 - m12, 0) +
              max3(m12 - clamp0(m22 - m21), m11 - m21, 0);
    r.b_2r1_r2 = (m11 > m12 ? m11 : m12) + clamp0(m11 - m21) + clamp0(m22 - m12);
    r.b_2r2_r1 = (m22 > m21 ? m22 : m21) + clamp0(m11 - m21) + clamp0(m22 - m12);
    return r;
}

bool tin_optimal_symmetric(int md, int mc) {
    // The no-jamming scheme is sum-capacity optimal with positive capacity.
    const double secure = icsec::sym_secure_sum(md, mc);
    const double wocj = 2.0 * std::max(0, md - mc);
    return secure > 1e-9 && std::abs(wocj - secure) <= 1e-9;
}

}  // namespace

TEST_CASE("region bounds on the worked examples") {
    CHECK(icsec::det_outer_region(DetChannelParams(3, 1, 2, 3)) == DetRegion{3, 3, 3, 6, 6});
    CHECK(icsec::det_outer_region(DetChannelParams(0, 0, 0, 0)) == DetRegion{0, 0, 0, 0, 0});
    CHECK(icsec::det_outer_region(DetChannelParams(4, 3, 3, 4)).b_sum == 4);
}

TEST_CASE("region bounds agree with the independent evaluator on a grid") {
    for (int m11 = 0; m11 <= 5; ++m11)
        for (int m12 = 0; m12 <= 5; ++m12)
            for (int m21 = 0; m21 <= 5; ++m21)
                for (int m22 = 0; m22 <= 5; ++m22) {
                    const DetRegion got =
                        icsec::det_outer_region(DetChannelParams(m11, m12, m21, m22));
                    CHECK(got == oracle_region(m11, m12, m21, m22));
                    CHECK(got.b_r1 >= 0);
                    CHECK(got.b_r2 >= 0);
                    CHECK(got.b_sum >= 0);
                }
}

TEST_CASE("tightest sum bound") {
    CHECK(icsec::det_sum_upper(DetChannelParams(3, 1, 2, 3)) == 3.0);
    CHECK(icsec::det_sum_upper(DetChannelParams(0, 0, 0, 0)) == 0.0);
    CHECK(icsec::det_sum_upper(DetChannelParams(4, 3, 3, 4)) == 4.0);
}

TEST_CASE("no-jamming optimality verdicts") {
    const auto v1 = icsec::wocj_optimality(DetChannelParams(3, 1, 2, 3));
    CHECK(v1.kind == OptimalityKind::OptimalPositive);
    CHECK(v1.c_sum == 3.0);

    CHECK(icsec::wocj_optimality(DetChannelParams(4, 3, 3, 4)).kind ==
          OptimalityKind::Suboptimal);
    CHECK(icsec::wocj_optimality(DetChannelParams(3, 3, 3, 3)).kind ==
          OptimalityKind::OptimalZero);
    CHECK(icsec::wocj_optimality(DetChannelParams(0, 0, 0, 0)).kind ==
          OptimalityKind::OptimalZero);
    // Asymmetric, conditions violated, positive rate: left open.
    CHECK(icsec::wocj_optimality(DetChannelParams(3, 2, 3, 3)).kind == OptimalityKind::Unknown);
}

TEST_CASE("achievable never exceeds the bound, with equality under the conditions") {
    for (int m11 = 0; m11 <= 8; ++m11)
        for (int m12 = 0; m12 <= 8; ++m12)
            for (int m21 = 0; m21 <= 8; ++m21)
                for (int m22 = 0; m22 <= 8; ++m22) {
                    const DetChannelParams p(m11, m12, m21, m22);
                    const int wocj = icsec::wocj_sum_rate(p);
                    const double upper = icsec::det_sum_upper(p);
                    CHECK(wocj <= upper + 1e-12);
                    const bool conditions =
                        m22 + std::max(0, m11 - m12) >= m21 + m12 &&
                        m11 + std::max(0, m22 - m21) >= m21 + m12;
                    if (conditions) CHECK(wocj == doctest::Approx(upper).epsilon(1e-12));
                }
}

TEST_CASE("symmetric secure sum capacity, curve values") {
    // Normalized values at the pinned ratios.
    const std::pair<double, double> cases[] = {
        {1.0 / 3.0, 4.0 / 3.0}, {2.0 / 3.0, 2.0 / 3.0}, {0.75, 1.0}, {6.0 / 7.0, 6.0 / 7.0},
        {1.0, 0.0},             {1.2, 0.8},             {1.5, 1.0},  {2.0, 0.0},
    };
    for (const auto& [alpha, expected] : cases) {
        CAPTURE(alpha);
        CHECK(icsec::sym_secure_sum(1.0, alpha) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(icsec::sym_secure_sum(4, 3) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(icsec::sym_secure_sum(3, 3) == 0.0);
    CHECK(icsec::sym_secure_sum(2, 3) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(icsec::sym_secure_sum(6, 2) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK_THROWS_AS(icsec::sym_secure_sum(0, 1), std::invalid_argument);
}

TEST_CASE("symmetric sum capacity without secrecy (W curve)") {
    CHECK(icsec::sym_nonsecure_sum(4, 2) == 4.0);
    CHECK(icsec::sym_secure_sum(4, 2) == 4.0);
    CHECK(icsec::sym_nonsecure_sum(4, 3) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(icsec::sym_nonsecure_sum(2, 3) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("secrecy costs nothing up to ratio one half, and always costs beyond") {
    for (int i = 0; i <= 400; ++i) {
        const double alpha = 2.0 * (static_cast<double>(i) / 400.0);
        const double secure = icsec::sym_secure_sum(1.0, alpha);
        const double nonsecure = icsec::sym_nonsecure_sum(1.0, alpha);
        if (alpha <= 0.5) {
            CHECK(secure == nonsecure);  // identical expressions, bit-exact
        } else {
            CHECK(secure < nonsecure);
        }
    }
}

TEST_CASE("piecewise curve is continuous except at ratio one") {
    const double boundaries[] = {2.0 / 3.0, 0.75, 1.5, 2.0};
    for (double b : boundaries) {
        const double eps = 1e-9;
        const double left = icsec::sym_secure_sum(1.0, b - eps);
        const double at = icsec::sym_secure_sum(1.0, b);
        const double right = icsec::sym_secure_sum(1.0, b + eps);
        CHECK(std::abs(left - at) <= 1e-8);
        CHECK(std::abs(right - at) <= 1e-8);
    }
    // Both one-sided limits at ratio 1 are 2/3; the value drops to 0.
    CHECK(icsec::sym_secure_sum(1.0, 1.0 - 1e-9) == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
    CHECK(icsec::sym_secure_sum(1.0, 1.0 + 1e-9) == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
    CHECK(icsec::sym_secure_sum(1.0, 1.0) == 0.0);

    // Adjacent branches agree at every boundary except 1.
    auto branch_a = [](double a) { return 2.0 * (1.0 - a); };
    auto branch_b = [](double a) { return 2.0 * (2.0 * a - 1.0); };
    auto branch_c = [](double a) { return 2.0 * (1.0 - 2.0 * a / 3.0); };
    auto branch_e = [](double a) { return 2.0 * a / 3.0; };
    auto branch_f = [](double a) { return 2.0 * (2.0 - a); };
    CHECK(branch_a(2.0 / 3.0) == doctest::Approx(branch_b(2.0 / 3.0)).epsilon(1e-12));
    CHECK(branch_b(0.75) == doctest::Approx(branch_c(0.75)).epsilon(1e-12));
    CHECK(branch_e(1.5) == doctest::Approx(branch_f(1.5)).epsilon(1e-12));
    CHECK(branch_f(2.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("secure sum scales linearly in the pair") {
    for (int md = 1; md <= 6; ++md)
        for (int mc = 0; mc <= 12; ++mc)
            for (int k = 1; k <= 4; ++k) {
                CHECK(icsec::sym_secure_sum(k * md, k * mc) ==
                      doctest::Approx(k * icsec::sym_secure_sum(md, mc)).epsilon(1e-12));
            }
}

TEST_CASE("no-jamming optimality is exactly the low-interference regime (symmetric)") {
    for (int md = 1; md <= 12; ++md)
        for (int mc = 0; mc <= 24; ++mc) {
            CAPTURE(md);
            CAPTURE(mc);
            CHECK(tin_optimal_symmetric(md, mc) == (3 * mc <= 2 * md));
        }
}

TEST_CASE("symmetric region bound meets the capacity up to ratio 3/4") {
    for (int md = 1; md <= 12; ++md)
        for (int mc = 0; mc <= 2 * md; ++mc) {
            const double upper = icsec::det_sum_upper(DetChannelParams::symmetric(md, mc));
            const double secure = icsec::sym_secure_sum(md, mc);
            CHECK(upper >= secure - 1e-12);
            if (4 * mc <= 3 * md) CHECK(upper == doctest::Approx(secure).epsilon(1e-12));
        }
}

// ---------------------------------------------------------------------------

TEST_CASE("gaussian strength conditions") {
    CHECK(gaussian_conditions(GaussianParams(2, 2, 1, 3, 100)));
    CHECK(gaussian_conditions(GaussianParams(1, 2.0 / 3.0, 2.0 / 3.0, 1, 10)));
    CHECK_FALSE(gaussian_conditions(GaussianParams(1, 1, 1, 1, 10)));
    CHECK_THROWS_AS(GaussianParams(1, 1, 1, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(GaussianParams(-0.1, 1, 1, 1, 2), std::invalid_argument);
}

TEST_CASE("treat-interference-as-noise rates") {
    const GaussianParams g(2, 2, 1, 3, 100);
    const auto [r1, r2] = icsec::gwc_tin_rates(g);
    CHECK(r1 == doctest::Approx(std::log2(51.0) - 1.0).epsilon(1e-12));
    CHECK(r2 == doctest::Approx(std::log2(51.0) - 1.0).epsilon(1e-12));
    CHECK(r1 + r2 == doctest::Approx(9.3448).epsilon(1e-4));

    const auto [z1, z2] = icsec::gwc_tin_rates(GaussianParams(1, 0, 1, 1, 50));
    CHECK(z1 == 0.0);  // direct no stronger than cross: clamped to silence

    const auto [s1, s2] = icsec::gwc_tin_rates(GaussianParams(1, 0, 0, 0, 4));
    CHECK(s1 == doctest::Approx(std::log2(3.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("general power split specializes to the noise-floor design") {
    const GaussianParams g(2, 2, 1, 3, 100);
    const icsec::GwcTinDesign d = icsec::gwc_tin_design(g, g.a21, g.a12);
    CHECK(d.rp1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.rp2 == doctest::Approx(1.0).epsilon(1e-12));
    const auto [r1, r2] = icsec::gwc_tin_rates(g);
    CHECK(d.r1 == doctest::Approx(r1).epsilon(1e-12));
    CHECK(d.r2 == doctest::Approx(r2).epsilon(1e-12));

    // Huge power exponent: both the rate and the confusion rate vanish.
    const icsec::GwcTinDesign quiet = icsec::gwc_tin_design(g, 400.0, g.a12);
    CHECK(quiet.r1 == 0.0);
    CHECK(quiet.rp1 <= 1e-12);
    CHECK_THROWS_AS(icsec::gwc_tin_design(g, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("gaussian sum upper bounds") {
    const GaussianParams g(2, 2, 1, 3, 100);
    CHECK(icsec::gaussian_sum_upper(g) ==
          doctest::Approx(std::log2(1.0 + 100.0 + 1e6) + std::log2(102.0) + 4.0).epsilon(1e-12));
    CHECK(icsec::gaussian_sum_upper(g) == doctest::Approx(30.604).epsilon(1e-4));
    CHECK(icsec::gaussian_sum_upper_refined(g) ==
          doctest::Approx(2.0 * std::log2(201.0) + 4.0).epsilon(1e-12));
    CHECK(icsec::gaussian_sum_upper_refined(g) == doctest::Approx(19.302).epsilon(1e-3));

    const GaussianParams degenerate(0, 0, 0, 0, 1);
    CHECK(icsec::gaussian_sum_upper(degenerate) ==
          doctest::Approx(2.0 * std::log2(3.0) + 4.0).epsilon(1e-12));
}

TEST_CASE("constant gap") {
    const GaussianParams g(2, 2, 1, 3, 100);
    CHECK(icsec::gaussian_gap(g) == doctest::Approx(9.957).epsilon(1e-3));
    CHECK(icsec::gaussian_gap(g) <= 10.0);

    // Parallel channels at unit power: gap is exactly 8 bits.
    CHECK(icsec::gaussian_gap(GaussianParams(1, 0, 0, 1, 1)) ==
          doctest::Approx(8.0).epsilon(1e-12));

    // The gap approaches 10 from below as the power grows.
    const GaussianParams huge(2, 2, 1, 3, 1e300);
    const double gap = icsec::gaussian_gap(huge);
    CHECK(gap <= 10.0);
    CHECK(gap == doctest::Approx(10.0).epsilon(1e-6));

    CHECK_THROWS_AS(icsec::gaussian_gap(GaussianParams(1, 1, 1, 1, 100)),
                    icsec::ConditionsNotMet);
}

TEST_CASE("gap stays within 10 bits across the exponent grid") {
    const double grid[] = {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    const double powers[] = {1.0, 1e2, 1e4, 1e6};
    for (double a11 : grid)
        for (double a12 : grid)
            for (double a21 : grid)
                for (double a22 : grid)
                    for (double P : powers) {
                        const GaussianParams g(a11, a12, a21, a22, P);
                        if (!gaussian_conditions(g)) continue;
                        const double gap = icsec::gaussian_gap(g);
                        CHECK(gap > 0.0);
                        CHECK(gap <= 10.0);
                        const auto [r1, r2] = icsec::gwc_tin_rates(g);
                        CHECK(r1 + r2 <= icsec::gaussian_sum_upper_refined(g) + 1e-12);
                    }
}

TEST_CASE("phases are stored but never enter a formula") {
    const GaussianParams plain(2, 2, 1, 3, 100);
    const GaussianParams phased(2, 2, 1, 3, 100, std::array<double, 4>{0.3, 1.1, 2.9, 0.7});
    REQUIRE(phased.phases.has_value());
    CHECK(icsec::gwc_tin_rates(plain) == icsec::gwc_tin_rates(phased));
    CHECK(icsec::gaussian_sum_upper(plain) == icsec::gaussian_sum_upper(phased));
    CHECK(icsec::gaussian_gap(plain) == icsec::gaussian_gap(phased));
}

TEST_CASE("sum GDoF") {
    const icsec::GdofSum d = icsec::gdof_sum(GaussianParams(2, 2, 1, 3, 100));
    CHECK(d.value == 2.0);
    CHECK(d.optimal);
    CHECK(icsec::gdof_sum(GaussianParams(1, 0.4, 0.4, 1, 1e6)).value ==
          doctest::Approx(1.2).epsilon(1e-12));
    CHECK(icsec::gdof_sum(GaussianParams(1.5, 0, 0, 2.5, 10)).value ==
          doctest::Approx(4.0).epsilon(1e-12));
    CHECK_FALSE(icsec::gdof_sum(GaussianParams(1, 1, 1, 1, 10)).optimal);
}

TEST_CASE("achievable sum has the GDoF slope, with a fixed 4-bit offset") {
    // (sum at P) = gdof * log2(P) - 4 + o(1) whenever both direct links beat
    // their cross links, so the ratio deficit is 4/log2(P) exactly in the
    // limit. Checked at two power scales, including one where P^a overflows
    // a double unless rates are computed in the log domain.
    const double grid[] = {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    for (double lp : {40.0, 400.0, 1000.0}) {
        const double P = std::exp2(lp);
        for (double a11 : grid)
            for (double a12 : grid)
                for (double a21 : grid)
                    for (double a22 : grid) {
                        const GaussianParams g(a11, a12, a21, a22, P);
                        if (!gaussian_conditions(g)) continue;
                        const auto [r1, r2] = icsec::gwc_tin_rates(g);
                        const double gdof = icsec::gdof_sum(g).value;
                        const double deficit = gdof - (r1 + r2) / lp;
                        CHECK(deficit >= -1e-9);
                        CHECK(deficit <= 4.0 / lp + 1e-9);
                    }
    }
}
