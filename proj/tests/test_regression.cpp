#include <doctest.h>

#include <cmath>

#include "wqed/correlations.hpp"
#include "wqed/regression.hpp"

using namespace wqed;

TEST_CASE("density state validation enforces trace, hermiticity, positivity") {
    CHECK_NOTHROW(DensityState::ground().validate());
    CHECK_NOTHROW(DensityState::excited().validate());
    DensityState bad_trace{0.6, 0.0, 0.0, 0.5};
    CHECK_THROWS_AS(bad_trace.validate(), NumericalFailure);
    DensityState not_herm{0.5, 0.3, 0.1, 0.5};
    CHECK_THROWS_AS(not_herm.validate(), NumericalFailure);
    DensityState not_pos{0.5, 0.9, 0.9, 0.5};  // eigenvalue below zero
    CHECK_THROWS_AS(not_pos.validate(), NumericalFailure);
}

TEST_CASE("undriven excited population decays at unit rate") {
    DriveEnvelope d = constant_side_drive(0.0);
    TimeGrid grid{0.0, 6.0, 600};
    auto rho = evolve_density(d, 0.0, grid, DensityState::excited());
    for (int i = 0; i < grid.n_nodes(); i += 30)
        CHECK(rho[i].ee.real() == doctest::Approx(std::exp(-grid.zeta(i))).epsilon(1e-9));
}

TEST_CASE("undriven coherence decays at half rate") {
    DriveEnvelope d = constant_side_drive(0.0);
    TimeGrid grid{0.0, 6.0, 600};
    DensityState init{0.5, 0.5, 0.5, 0.5};
    auto rho = evolve_density(d, 0.0, grid, init);
    for (int i = 0; i < grid.n_nodes(); i += 30)
        CHECK(std::abs(rho[i].ge) ==
              doctest::Approx(0.5 * std::exp(-0.5 * grid.zeta(i))).epsilon(1e-9));
}

TEST_CASE("driven steady state matches the closed form") {
    // rho_ee -> (Omega^2/2) / (Omega^2 + 1/2 + 2 delta^2) for H = Omega/2 sigma_x.
    const double omega = 0.8;
    DriveEnvelope d = constant_side_drive(omega);
    TimeGrid grid{0.0, 60.0, 6000};
    auto rho = evolve_density(d, 0.0, grid, DensityState::ground());
    const double expect = 0.5 * omega * omega / (omega * omega + 0.5);
    CHECK(rho.back().ee.real() == doctest::Approx(expect).epsilon(1e-6));

    const double delta = 0.6;
    auto rho_det = evolve_density(d, delta, grid, DensityState::ground());
    const double expect_det = 0.5 * omega * omega / (omega * omega + 0.5 + 2.0 * delta * delta);
    CHECK(rho_det.back().ee.real() == doctest::Approx(expect_det).epsilon(1e-6));
}

TEST_CASE("every evolution step preserves the density-matrix invariants") {
    DriveEnvelope d = gaussian_side_pulse(0.2);
    TimeGrid grid{0.0, d.pulse_center() + 14.0, 1560};
    CHECK_NOTHROW(evolve_density(d, 0.3, grid, DensityState::ground()));
}

TEST_CASE("pi pulse emits one photon plus a small two-photon correction") {
    DriveEnvelope d = gaussian_side_pulse(0.1);
    TimeGrid grid{0.0, d.pulse_center() + 14.0, 1480};
    const double n = regression_mean_photons(d, 0.0, grid);
    CHECK(n > 1.0);
    CHECK(n < 1.1);
}

TEST_CASE("zero-area pulse yields no photons and a flagged error") {
    DriveEnvelope d = constant_side_drive(0.0);
    TimeGrid grid{0.0, 10.0, 500};
    CHECK(regression_mean_photons(d, 0.0, grid) == 0.0);
    CHECK_THROWS_AS(regression_pulsed_g2(d, 0.0, grid), NumericalFailure);
}

TEST_CASE("oracle and ansatz pulsed g2 agree across pulse widths") {
    SystemParams p{1.0, 0.0, 0.0, 0.0};
    for (double sigma : {0.05, 0.2, 1.0}) {
        DriveEnvelope d = gaussian_side_pulse(sigma);
        TimeGrid grid{0.0, d.pulse_center() + 14.0, 1500};
        SingleEmitterResult r = run_single_emitter(p, d, grid);
        const double ansatz = pulsed_g2(r.two_base, r.phi_g_base, grid);
        const double oracle = regression_pulsed_g2(d, 0.0, grid);
        CHECK(std::abs(ansatz - oracle) / oracle < 0.01);
    }
}

TEST_CASE("oracle pulsed g2 grows with pulse width") {
    double prev = 0.0;
    for (double sigma : {0.05, 0.1, 0.5, 1.0}) {
        DriveEnvelope d = gaussian_side_pulse(sigma);
        TimeGrid grid{0.0, d.pulse_center() + 14.0, 1200};
        const double g = regression_pulsed_g2(d, 0.0, grid);
        CHECK(g > prev);
        prev = g;
    }
}

TEST_CASE("cw oracle g2 shows resonance-fluorescence antibunching") {
    DriveEnvelope d = constant_side_drive(0.02);
    TimeGrid grid{0.0, 30.0, 3000};
    TimeGrid delay{30.0, 45.0, 1500};
    auto g2 = regression_cw_g2(d, 0.0, grid, delay);
    CHECK(g2.front() == 0.0);
    for (std::size_t i = 1; i < g2.size(); ++i) CHECK(g2[i] >= g2[i - 1] - 1e-12);
    CHECK(g2.back() == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("cw oracle matches the ansatz side-emission g2 pointwise") {
    // Weak side drive: ansatz g2 with no coherent background vs regression.
    const cxd omega{0.02, 0.0};
    DriveEnvelope d = constant_side_drive(omega);
    TimeGrid grid{0.0, 40.0, 2000};
    SteadyG2Options opt;
    opt.branch_fraction = 0.5;
    SystemParams p{1.0, 0.0, 0.0, 0.0};
    SteadyG2Result ans = g2_normalized_steady(p, d, grid, opt);

    TimeGrid delay{40.0, 60.0, 1000};
    auto oracle = regression_cw_g2(d, 0.0, grid, delay);
    // Compare on the common delay range, skipping the zero-denominator start.
    for (double zeta : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        const int ia = static_cast<int>(std::lround(zeta / (grid.h())));
        const int io = static_cast<int>(std::lround(zeta / delay.h()));
        CHECK(ans.g2[ia] == doctest::Approx(oracle[io]).epsilon(0.02));
    }
}

TEST_CASE("delay grid must continue the evolution grid") {
    DriveEnvelope d = constant_side_drive(0.02);
    TimeGrid grid{0.0, 30.0, 3000};
    TimeGrid delay{29.0, 45.0, 1600};
    CHECK_THROWS_AS(regression_cw_g2(d, 0.0, grid, delay), InvalidParams);
}
