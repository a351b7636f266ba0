// N-emitter chain dynamics: coupled amplitudes (c_g, c_e^j, c_ee^{jl}) with
// photon-mediated emitter-emitter coupling, per-channel emission branching,
// after-emission propagation, and two-photon assembly. For N = 1 everything
// reduces to the single-emitter module.

#pragma once

#include <vector>

#include "wqed/drive.hpp"
#include "wqed/params.hpp"
#include "wqed/single_emitter.hpp"

namespace wqed {

// Emission channel of a chain: right, left, or the side reservoir of
// emitter m (each emitter has its own independent loss reservoir).
struct ChainChannel {
    Channel kind = Channel::R;
    int m = 0;  // emitter index, used only for kind == S
};

struct ChainTrajectory {
    TimeGrid grid;
    int n_emitters = 1;
    std::vector<cxd> c_g;                // per node
    std::vector<std::vector<cxd>> c_e;   // [j][node]
    std::vector<std::vector<cxd>> c_ee;  // [pair_index(j,l)][node], j < l
};

// Initial values for one after-emission propagation.
struct ChainBranch {
    cxd phi_g = 0.0;
    std::vector<cxd> phi_e;  // one per emitter
};

// One after-emission propagation at fixed emission node; zero before it.
struct ChainAfterSlice {
    int i_e = 0;
    std::vector<cxd> phi_g;               // per node
    std::vector<std::vector<cxd>> phi_e;  // [j][node]
};

// Full (zeta, zeta_e) panes for one channel.
struct ChainPhotonField {
    ChainChannel channel;
    TimeGrid grid;
    int n_emitters = 1;
    TriangularGrid phi_g;
    std::vector<TriangularGrid> phi_e;  // per emitter, at(i, i_e)
};

struct ChainTwoPhoton {
    ChainChannel channel2, channel1;
    TimeGrid grid;
    TriangularGrid amp;  // at(i_e2, i_e1)
};

ChainTrajectory integrate_chain(const ChainParams& params, const DriveEnvelope& drive,
                                const TimeGrid& grid);

ChainBranch branch_chain_emission(const ChainTrajectory& traj, const ChainParams& params,
                                  ChainChannel ch, double zeta_e);

ChainAfterSlice propagate_chain_after_emission(const ChainParams& params,
                                               const DriveEnvelope& drive, const TimeGrid& grid,
                                               double zeta_e, const ChainBranch& init);

ChainPhotonField propagate_chain_all_emissions(const ChainTrajectory& traj,
                                               const ChainParams& params,
                                               const DriveEnvelope& drive, ChainChannel ch);

ChainTwoPhoton assemble_chain_two_photon(const ChainPhotonField& field, const ChainParams& params,
                                         ChainChannel channel2);

struct ChainPipelineOptions {
    bool two_photon = true;
    int branch_row = -1;  // >= 0: RR two-photon amplitudes only for this row
};

// R-channel pipeline output for transmission correlations: phi_gR slices at
// zeta_T and the phi_RR grid (or a single row), without storing panes.
struct ChainResult {
    TimeGrid grid;
    ChainTrajectory traj;
    std::vector<cxd> phi_gR;  // at zeta_T, indexed by emission node
    TriangularGrid two_rr;
    int branch_row = -1;
    std::vector<cxd> two_rr_row;
};

ChainResult run_chain(const ChainParams& params, const DriveEnvelope& drive, const TimeGrid& grid,
                      const ChainPipelineOptions& opts = {});

}  // namespace wqed
