// First- and second-order correlation functions from the amplitude grids:
// leading-order G1/G2, normalized steady-state g2, pulsed g2p, mean photon
// number, and the full-order (all orders in the drive field) forms.

#pragma once

#include <vector>

#include "wqed/chain.hpp"
#include "wqed/single_emitter.hpp"

namespace wqed {

// Trapezoidal quadrature on the uniform grid.
double trapezoid(const std::vector<double>& f, double h);

// Integral over the ordered triangle zeta_e2 > zeta_e1 of |amp|^2 with
// trapezoidal weights on both axes (the diagonal carries the corner weights).
double triangle_abs2_integral(const TriangularGrid& amp, double h);

// G1(zeta_e)/v_g = |phi_gR(zeta_T, zeta_e) + E_eff|^2. For side drives pass
// e_eff = 0; with the c_g substitution pass e_eff = c_g(zeta_T) * E.
std::vector<double> g1_leading(const std::vector<cxd>& phi_gR_slice, cxd e_eff);

// G2(zeta'_e, zeta_e)/v_g^2 over the stored triangle. The two-photon
// amplitude enters once: the swapped-argument term of the symmetrized sum is
// zero by the zeta_e2 > zeta_e1 storage convention.
std::vector<double> g2_leading(const TriangularGrid& rr, const std::vector<cxd>& phi_gR_slice,
                               cxd e_eff);

// Single point of the leading-order G2.
double g2_point(cxd rr_value, cxd phi_g_late, cxd phi_g_early, cxd e_eff);

// G2_pulsed/v_g^2 = 2 * triangle integral of |phi_RR|^2.
double g2_pulsed_numerator(const TriangularGrid& rr, const TimeGrid& grid);

// <n> = int |phi_gR|^2 dzeta_e + 2 * triangle integral of |phi_RR|^2.
double mean_photons(const std::vector<cxd>& phi_gR_slice, const TriangularGrid& rr,
                    const TimeGrid& grid);

// g2p = G2_pulsed / <n>^2; throws NumericalFailure when <n> = 0.
double pulsed_g2(const TriangularGrid& rr, const std::vector<cxd>& phi_gR_slice,
                 const TimeGrid& grid);

struct SteadyG2Options {
    double branch_fraction = 0.4;  // branch point as a fraction of zeta_T
    double convergence_tol = 0.01;
    bool use_cg_substitution = true;
};

struct SteadyG2Result {
    std::vector<double> delay;  // zeta = zeta'_e - zeta_b >= 0
    std::vector<double> g2;
    double g2_zero = 0.0;
};

SteadyG2Result g2_normalized_steady(const SystemParams& params, const DriveEnvelope& drive,
                                    const TimeGrid& grid, const SteadyG2Options& opts = {});

SteadyG2Result g2_normalized_steady_chain(const ChainParams& params, const DriveEnvelope& drive,
                                          const TimeGrid& grid, const SteadyG2Options& opts = {});

// Two-excitation-ansatz norm at zeta_T: emitter sector plus single- and
// two-photon sectors summed over all channels (the branching ratios drop out
// since they sum to one). Deviation from 1 is the truncation deficit.
double total_norm(const SingleEmitterResult& r);

struct FullOrderOptions {
    // Include the O(E^3)-amplitude background sectors of G2 (a remaining
    // undetected photon integrated over its emission time). Off by default;
    // these terms are beyond the consistent order of the expansion.
    bool include_integral_sectors = false;
};

// Full-order G1(zeta_e)/v_g per the orthogonal final-state decomposition.
std::vector<double> g1_full(const SingleEmitterResult& r, const SystemParams& params,
                            const DriveEnvelope& drive, const FullOrderOptions& opts = {});

// Full-order G2(zeta'_e, zeta_b)/v_g^2 along one row (requires the full
// two-photon grid in r).
std::vector<double> g2_full_row(const SingleEmitterResult& r, const SystemParams& params,
                                const DriveEnvelope& drive, int row,
                                const FullOrderOptions& opts = {});

}  // namespace wqed
