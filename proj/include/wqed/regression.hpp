// Brute-force validator: density-matrix master equation for a single driven
// two-level emitter plus the quantum regression theorem. Conventions (drive,
// detuning, dimensionless time, total decay rate 1) match the wave-function
// modules so results are directly comparable.

#pragma once

#include <vector>

#include "wqed/drive.hpp"
#include "wqed/params.hpp"

namespace wqed {

struct DensityState {
    cxd gg = 1.0, ge = 0.0, eg = 0.0, ee = 0.0;

    static DensityState ground() { return {}; }
    static DensityState excited() { return {0.0, 0.0, 0.0, 1.0}; }

    // Trace within 1e-9 of 1, Hermitian within 1e-12, eigenvalues >= -1e-9.
    void validate() const;
};

std::vector<DensityState> evolve_density(const DriveEnvelope& drive, double delta,
                                         const TimeGrid& grid, DensityState initial);

// Pulsed g2p from the density-matrix side, restricted to the two-photon
// sector: G2 = 2 * double integral over t' > t of the joint density of a
// first emission at t and a second at t', built from no-jump propagation
// (emissions beyond the second are excluded, matching the two-excitation
// truncation of the wave-function method). Normalized by the same truncated
// <n> = P(>=1 emission) + P(>=2 emissions).
double regression_pulsed_g2(const DriveEnvelope& drive, double delta, const TimeGrid& grid);

// Mean photon number over the grid window: integral of rho_ee.
double regression_mean_photons(const DriveEnvelope& drive, double delta, const TimeGrid& grid);

// CW g2(tau) on the delay grid: evolve to steady state over `grid`, then
// apply the regression theorem from its end point.
std::vector<double> regression_cw_g2(const DriveEnvelope& drive, double delta,
                                     const TimeGrid& grid, const TimeGrid& delay_grid);

}  // namespace wqed
