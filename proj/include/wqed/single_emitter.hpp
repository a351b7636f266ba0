// Single-emitter dynamics: before-emission amplitudes, emission branching,
// after-emission propagation, and two-photon assembly. All channels share the
// same propagation up to a sqrt(beta) factor, so the pipeline stores
// channel-independent base amplitudes.

#pragma once

#include <vector>

#include "wqed/drive.hpp"
#include "wqed/params.hpp"

namespace wqed {

struct EmitterTrajectory {
    TimeGrid grid;
    std::vector<cxd> c_g, c_e;  // one entry per grid node
};

// Upper-triangular complex table over node pairs (i2, i1) with i2 >= i1,
// stored row-major by first index i1.
struct TriangularGrid {
    int n = 0;
    std::vector<cxd> data;

    TriangularGrid() = default;
    explicit TriangularGrid(int nodes)
        : n(nodes), data(static_cast<std::size_t>(nodes) * (nodes + 1) / 2) {}

    bool empty() const { return data.empty(); }

    std::size_t offset(int i1) const {
        return static_cast<std::size_t>(i1) * n - static_cast<std::size_t>(i1) * (i1 - 1) / 2;
    }
    cxd& at(int i2, int i1) { return data[offset(i1) + (i2 - i1)]; }
    const cxd& at(int i2, int i1) const { return data[offset(i1) + (i2 - i1)]; }
    // Symmetric access: reads the stored (max, min) entry.
    const cxd& sym(int a, int b) const { return a >= b ? at(a, b) : at(b, a); }
};

// After-emission single-photon amplitudes phi_g,ch(zeta, zeta_e) and
// phi_e,ch(zeta, zeta_e); entries with zeta < zeta_e are structurally zero.
struct SinglePhotonField {
    Channel channel = Channel::R;
    TimeGrid grid;
    TriangularGrid phi_g, phi_e;  // at(i, i_e)
};

// Frozen two-photon amplitude phi_{ch2,ch1}(zeta_T, zeta_e2, zeta_e1),
// stored for zeta_e2 >= zeta_e1 only; the diagonal is zero.
struct TwoPhotonAmplitude {
    Channel channel2 = Channel::R;
    Channel channel1 = Channel::R;
    TimeGrid grid;
    TriangularGrid amp;  // at(i_e2, i_e1)
};

// One after-emission propagation for a fixed emission node: amplitudes over
// the full grid, zero before the emission time.
struct AfterEmissionSlice {
    int i_e = 0;
    std::vector<cxd> phi_g, phi_e;
};

EmitterTrajectory integrate_emitter(const SystemParams& params, const DriveEnvelope& drive,
                                    const TimeGrid& grid, cxd cg0 = 1.0, cxd ce0 = 0.0);

// Initial condition i*sqrt(beta_ch)*c_e(zeta_e)*exp(i*delta*zeta_e) for the
// after-emission propagation.
cxd branch_single_photon(const EmitterTrajectory& traj, const SystemParams& params, Channel ch,
                         double zeta_e);

AfterEmissionSlice propagate_after_emission(const SystemParams& params, const DriveEnvelope& drive,
                                            const TimeGrid& grid, double zeta_e, cxd init);

// Full (zeta, zeta_e) panes for one channel; O(n^2) storage.
SinglePhotonField propagate_all_emissions(const EmitterTrajectory& traj,
                                          const SystemParams& params, const DriveEnvelope& drive,
                                          Channel ch);

// phi_{ch2,ch1}(zeta_e2, zeta_e1) = i*sqrt(beta_ch2)*phi_e,ch1(zeta_e2, zeta_e1)
// * exp(i*delta*zeta_e2), frozen thereafter.
TwoPhotonAmplitude assemble_two_photon(const SinglePhotonField& field, const SystemParams& params,
                                       Channel channel2);

struct PipelineOptions {
    bool two_photon = true;  // build the full base two-photon triangle
    int branch_row = -1;     // >= 0: two-photon amplitudes only for this emission row
    cxd cg0 = 1.0;
    cxd ce0 = 0.0;
};

// Channel-independent pipeline output. Channel amplitudes are recovered by
// scaling: phi_g,ch = sqrt(beta_ch) * phi_g_base, and the two-photon pair
// (ch2, ch1) is sqrt(beta_ch2 * beta_ch1) * two_base.
struct SingleEmitterResult {
    TimeGrid grid;
    EmitterTrajectory traj;
    std::vector<cxd> phi_g_base, phi_e_base;  // slices at zeta_T, indexed by zeta_e node
    TriangularGrid two_base;                  // built when two_photon && branch_row < 0
    int branch_row = -1;
    std::vector<cxd> two_row_base;  // built when branch_row >= 0; zeros below the row
};

SingleEmitterResult run_single_emitter(const SystemParams& params, const DriveEnvelope& drive,
                                       const TimeGrid& grid, const PipelineOptions& opts = {});

namespace detail {

// RK4 stepper for the two-amplitude system da = -conj(g) b, db = g a - b/2,
// with g(zeta) = i*Omega(zeta)/2 * exp(-i*delta*zeta) precomputed at half-step
// resolution. Shared by before- and after-emission propagation so both paths
// produce bit-identical trajectories.
struct TwoLevelStepper {
    double h = 0.0;
    std::vector<cxd> g;  // size 2*n_steps + 1

    void step(int i, cxd& a, cxd& b) const;
};

TwoLevelStepper make_stepper(const SystemParams& params, const DriveEnvelope& drive,
                             const TimeGrid& grid, double phase = 0.0);

}  // namespace detail

}  // namespace wqed
