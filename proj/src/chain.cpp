#include "wqed/chain.hpp"

#include <cmath>
#include <string>

namespace wqed {

namespace {

void check_finite(const std::vector<cxd>& y, const char* what) {
    for (const cxd& v : y)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NumericalFailure(std::string(what) + ": non-finite amplitude encountered");
}

// Coupled chain equations with precomputed drive couplings and the
// photon-mediated coupling matrices of the single- and double-excitation
// sectors. Full state layout: (c_g, c_e^0..c_e^{n-1}, c_ee pairs j<l);
// after-emission state layout: (phi_g, phi_e^0..phi_e^{n-1}).
struct ChainStepper {
    ChainParams p;
    double h = 0.0;
    int n = 1, np = 0;
    std::vector<std::vector<cxd>> g;  // [j][half-node], i*Omega_j/2*e^{-i*delta*zeta}
    std::vector<cxd> M;               // n x n, includes -1/2 diagonal
    std::vector<cxd> Q;               // np x np, includes -1 diagonal

    void rhs_full(int k, const std::vector<cxd>& y, std::vector<cxd>& dy) const {
        cxd dg = 0.0;
        for (int j = 0; j < n; ++j) dg += -std::conj(g[j][k]) * y[1 + j];
        dy[0] = dg;
        for (int j = 0; j < n; ++j) {
            cxd acc = g[j][k] * y[0];
            for (int l = 0; l < n; ++l) acc += M[j * n + l] * y[1 + l];
            for (int l = 0; l < n; ++l) {
                if (l == j) continue;
                const int pi = l < j ? p.pair_index(l, j) : p.pair_index(j, l);
                acc += -std::conj(g[l][k]) * y[1 + n + pi];
            }
            dy[1 + j] = acc;
        }
        for (int j = 0; j < n; ++j) {
            for (int l = j + 1; l < n; ++l) {
                const int pi = p.pair_index(j, l);
                cxd acc = g[l][k] * y[1 + j] + g[j][k] * y[1 + l];
                for (int q = 0; q < np; ++q) acc += Q[pi * np + q] * y[1 + n + q];
                dy[1 + n + pi] = acc;
            }
        }
    }

    void rhs_single(int k, const std::vector<cxd>& y, std::vector<cxd>& dy) const {
        cxd dg = 0.0;
        for (int j = 0; j < n; ++j) dg += -std::conj(g[j][k]) * y[1 + j];
        dy[0] = dg;
        for (int j = 0; j < n; ++j) {
            cxd acc = g[j][k] * y[0];
            for (int l = 0; l < n; ++l) acc += M[j * n + l] * y[1 + l];
            dy[1 + j] = acc;
        }
    }
};

ChainStepper make_chain_stepper(const ChainParams& p, const DriveEnvelope& drive,
                                const TimeGrid& grid) {
    p.validate();
    grid.validate();
    drive.validate(grid);

    ChainStepper s;
    s.p = p;
    s.h = grid.h();
    s.n = p.n;
    s.np = p.n_pairs();

    const SystemParams ep = p.emitter();
    const int m = 2 * grid.n_steps + 1;
    s.g.assign(p.n, std::vector<cxd>(m));
    for (int j = 0; j < p.n; ++j) {
        for (int k = 0; k < m; ++k) {
            const double zeta = grid.zeta_start + 0.5 * k * s.h;
            s.g[j][k] = I * 0.5 * drive.rabi(ep, zeta, p.phases[j]) *
                        std::exp(-I * ep.delta * zeta);
        }
    }

    // A right-moving photon from emitter l < j drives emitter j (and the
    // mirror process for left movers), with the propagation phase
    // e^{i k0 (z_> - z_<)}.
    s.M.assign(static_cast<std::size_t>(p.n) * p.n, 0.0);
    for (int j = 0; j < p.n; ++j) {
        for (int l = 0; l < p.n; ++l) {
            if (l == j)
                s.M[j * p.n + l] = -0.5;
            else if (l < j)
                s.M[j * p.n + l] = -p.beta_r * std::exp(I * (p.phases[j] - p.phases[l]));
            else
                s.M[j * p.n + l] = -p.beta_l * std::exp(I * (p.phases[l] - p.phases[j]));
        }
    }

    // Double-excitation sector: one excitation hops while the other is a
    // spectator; both excited emitters decay, giving the -1 diagonal.
    s.Q.assign(static_cast<std::size_t>(s.np) * s.np, 0.0);
    for (int j = 0; j < p.n; ++j) {
        for (int l = j + 1; l < p.n; ++l) {
            const int t = p.pair_index(j, l);
            s.Q[t * s.np + t] = -1.0;
            for (int lp = 0; lp < p.n; ++lp) {  // spectator j, photon lp -> l
                if (lp == l || lp == j) continue;
                const int src = lp < j ? p.pair_index(lp, j) : p.pair_index(j, lp);
                s.Q[t * s.np + src] +=
                    lp < l ? -p.beta_r * std::exp(I * (p.phases[l] - p.phases[lp]))
                           : -p.beta_l * std::exp(I * (p.phases[lp] - p.phases[l]));
            }
            for (int jp = 0; jp < p.n; ++jp) {  // spectator l, photon jp -> j
                if (jp == j || jp == l) continue;
                const int src = jp < l ? p.pair_index(jp, l) : p.pair_index(l, jp);
                s.Q[t * s.np + src] +=
                    jp < j ? -p.beta_r * std::exp(I * (p.phases[j] - p.phases[jp]))
                           : -p.beta_l * std::exp(I * (p.phases[jp] - p.phases[j]));
            }
        }
    }
    return s;
}

struct Rk4Work {
    std::vector<cxd> k1, k2, k3, k4, tmp;
    explicit Rk4Work(std::size_t m) : k1(m), k2(m), k3(m), k4(m), tmp(m) {}
};

template <class Rhs>
void rk4_step(int i, double h, const Rhs& rhs, std::vector<cxd>& y, Rk4Work& w) {
    const std::size_t m = y.size();
    rhs(2 * i, y, w.k1);
    for (std::size_t q = 0; q < m; ++q) w.tmp[q] = y[q] + 0.5 * h * w.k1[q];
    rhs(2 * i + 1, w.tmp, w.k2);
    for (std::size_t q = 0; q < m; ++q) w.tmp[q] = y[q] + 0.5 * h * w.k2[q];
    rhs(2 * i + 1, w.tmp, w.k3);
    for (std::size_t q = 0; q < m; ++q) w.tmp[q] = y[q] + h * w.k3[q];
    rhs(2 * i + 2, w.tmp, w.k4);
    for (std::size_t q = 0; q < m; ++q)
        y[q] += (h / 6.0) * (w.k1[q] + 2.0 * w.k2[q] + 2.0 * w.k3[q] + w.k4[q]);
}

// Branch values at grid node ie; shared by the public branch operation and
// the pipelines.
ChainBranch branch_at_node(const ChainTrajectory& traj, const ChainParams& p, ChainChannel ch,
                           int ie) {
    const double zeta_e = traj.grid.zeta(ie);
    const cxd rot = std::exp(I * p.delta * zeta_e);

    ChainBranch b;
    b.phi_e.assign(p.n, 0.0);
    if (ch.kind == Channel::S) {
        if (ch.m < 0 || ch.m >= p.n) throw InvalidParams("side channel index out of range");
        const double rb = std::sqrt(p.beta_s);
        b.phi_g = I * rb * traj.c_e[ch.m][ie] * rot;
        for (int j = 0; j < p.n; ++j) {
            if (j == ch.m) continue;
            const int pi = j < ch.m ? p.pair_index(j, ch.m) : p.pair_index(ch.m, j);
            b.phi_e[j] = I * rb * traj.c_ee[pi][ie] * rot;
        }
        return b;
    }

    const bool right = ch.kind == Channel::R;
    const double rb = std::sqrt(right ? p.beta_r : p.beta_l);
    const double sgn = right ? -1.0 : 1.0;  // e^{-+ i k0 z_l} for R/L
    cxd pg = 0.0;
    for (int j = 0; j < p.n; ++j) pg += traj.c_e[j][ie] * std::exp(I * sgn * p.phases[j]);
    b.phi_g = I * rb * pg * rot;
    for (int j = 0; j < p.n; ++j) {
        cxd pe = 0.0;
        for (int l = 0; l < p.n; ++l) {
            if (l == j) continue;
            const int pi = l < j ? p.pair_index(l, j) : p.pair_index(j, l);
            pe += traj.c_ee[pi][ie] * std::exp(I * sgn * p.phases[l]);
        }
        b.phi_e[j] = I * rb * pe * rot;
    }
    return b;
}

// Second-photon assembly from the propagated phi_e^j at node i2.
cxd assemble_at_node(const std::vector<cxd>& phi_e, const ChainParams& p, ChainChannel ch2,
                     double zeta_e2) {
    const cxd rot = std::exp(I * p.delta * zeta_e2);
    if (ch2.kind == Channel::S) {
        if (ch2.m < 0 || ch2.m >= p.n) throw InvalidParams("side channel index out of range");
        return I * std::sqrt(p.beta_s) * phi_e[ch2.m] * rot;
    }
    const bool right = ch2.kind == Channel::R;
    const double sgn = right ? -1.0 : 1.0;
    cxd acc = 0.0;
    for (int j = 0; j < p.n; ++j) acc += phi_e[j] * std::exp(I * sgn * p.phases[j]);
    return I * std::sqrt(right ? p.beta_r : p.beta_l) * acc * rot;
}

}  // namespace

ChainTrajectory integrate_chain(const ChainParams& params, const DriveEnvelope& drive,
                                const TimeGrid& grid) {
    const auto stepper = make_chain_stepper(params, drive, grid);
    const int n = grid.n_nodes();
    const std::size_t dim = 1 + params.n + params.n_pairs();

    ChainTrajectory traj;
    traj.grid = grid;
    traj.n_emitters = params.n;
    traj.c_g.resize(n);
    traj.c_e.assign(params.n, std::vector<cxd>(n));
    traj.c_ee.assign(params.n_pairs(), std::vector<cxd>(n));

    std::vector<cxd> y(dim, 0.0);
    y[0] = 1.0;
    Rk4Work work(dim);
    auto rhs = [&stepper](int k, const std::vector<cxd>& s, std::vector<cxd>& ds) {
        stepper.rhs_full(k, s, ds);
    };
    auto record = [&](int i) {
        traj.c_g[i] = y[0];
        for (int j = 0; j < params.n; ++j) traj.c_e[j][i] = y[1 + j];
        for (int q = 0; q < params.n_pairs(); ++q) traj.c_ee[q][i] = y[1 + params.n + q];
    };
    record(0);
    for (int i = 0; i < grid.n_steps; ++i) {
        rk4_step(i, stepper.h, rhs, y, work);
        record(i + 1);
    }
    check_finite(y, "integrate_chain");
    return traj;
}

ChainBranch branch_chain_emission(const ChainTrajectory& traj, const ChainParams& params,
                                  ChainChannel ch, double zeta_e) {
    return branch_at_node(traj, params, ch, traj.grid.index_of(zeta_e));
}

ChainAfterSlice propagate_chain_after_emission(const ChainParams& params,
                                               const DriveEnvelope& drive, const TimeGrid& grid,
                                               double zeta_e, const ChainBranch& init) {
    if (static_cast<int>(init.phi_e.size()) != params.n)
        throw InvalidParams("branch size does not match emitter count");
    const auto stepper = make_chain_stepper(params, drive, grid);
    const int ie = grid.index_of(zeta_e);
    const std::size_t dim = 1 + params.n;

    ChainAfterSlice s;
    s.i_e = ie;
    s.phi_g.assign(grid.n_nodes(), 0.0);
    s.phi_e.assign(params.n, std::vector<cxd>(grid.n_nodes(), 0.0));

    std::vector<cxd> y(dim);
    y[0] = init.phi_g;
    for (int j = 0; j < params.n; ++j) y[1 + j] = init.phi_e[j];
    Rk4Work work(dim);
    auto rhs = [&stepper](int k, const std::vector<cxd>& v, std::vector<cxd>& dv) {
        stepper.rhs_single(k, v, dv);
    };
    auto record = [&](int i) {
        s.phi_g[i] = y[0];
        for (int j = 0; j < params.n; ++j) s.phi_e[j][i] = y[1 + j];
    };
    record(ie);
    for (int i = ie; i < grid.n_steps; ++i) {
        rk4_step(i, stepper.h, rhs, y, work);
        record(i + 1);
    }
    check_finite(y, "propagate_chain_after_emission");
    return s;
}

ChainPhotonField propagate_chain_all_emissions(const ChainTrajectory& traj,
                                               const ChainParams& params,
                                               const DriveEnvelope& drive, ChainChannel ch) {
    const TimeGrid& grid = traj.grid;
    const auto stepper = make_chain_stepper(params, drive, grid);
    const std::size_t dim = 1 + params.n;

    ChainPhotonField f;
    f.channel = ch;
    f.grid = grid;
    f.n_emitters = params.n;
    f.phi_g = TriangularGrid(grid.n_nodes());
    f.phi_e.assign(params.n, TriangularGrid(grid.n_nodes()));

#pragma omp parallel for schedule(dynamic)
    for (int ie = 0; ie < grid.n_nodes(); ++ie) {
        const ChainBranch b = branch_at_node(traj, params, ch, ie);
        std::vector<cxd> y(dim);
        y[0] = b.phi_g;
        for (int j = 0; j < params.n; ++j) y[1 + j] = b.phi_e[j];
        Rk4Work work(dim);
        auto rhs = [&stepper](int k, const std::vector<cxd>& v, std::vector<cxd>& dv) {
            stepper.rhs_single(k, v, dv);
        };
        f.phi_g.at(ie, ie) = y[0];
        for (int j = 0; j < params.n; ++j) f.phi_e[j].at(ie, ie) = y[1 + j];
        for (int i = ie; i < grid.n_steps; ++i) {
            rk4_step(i, stepper.h, rhs, y, work);
            f.phi_g.at(i + 1, ie) = y[0];
            for (int j = 0; j < params.n; ++j) f.phi_e[j].at(i + 1, ie) = y[1 + j];
        }
        check_finite(y, "propagate_chain_all_emissions");
    }
    return f;
}

ChainTwoPhoton assemble_chain_two_photon(const ChainPhotonField& field, const ChainParams& params,
                                         ChainChannel channel2) {
    const TimeGrid& grid = field.grid;
    ChainTwoPhoton tp;
    tp.channel2 = channel2;
    tp.channel1 = field.channel;
    tp.grid = grid;
    tp.amp = TriangularGrid(grid.n_nodes());

    std::vector<cxd> phi_e(params.n);
    for (int ie1 = 0; ie1 < grid.n_nodes(); ++ie1) {
        for (int ie2 = ie1; ie2 < grid.n_nodes(); ++ie2) {
            for (int j = 0; j < params.n; ++j) phi_e[j] = field.phi_e[j].at(ie2, ie1);
            tp.amp.at(ie2, ie1) = assemble_at_node(phi_e, params, channel2, grid.zeta(ie2));
        }
    }
    return tp;
}

ChainResult run_chain(const ChainParams& params, const DriveEnvelope& drive, const TimeGrid& grid,
                      const ChainPipelineOptions& opts) {
    const auto stepper = make_chain_stepper(params, drive, grid);
    const int n = grid.n_nodes();

    ChainResult r;
    r.grid = grid;
    r.traj = integrate_chain(params, drive, grid);
    r.phi_gR.resize(n);
    r.branch_row = opts.branch_row;
    const bool full_two = opts.two_photon && opts.branch_row < 0;
    if (full_two) r.two_rr = TriangularGrid(n);
    if (opts.branch_row >= 0) {
        if (opts.branch_row >= n) throw InvalidParams("branch row outside grid");
        r.two_rr_row.assign(n, 0.0);
    }

    const ChainChannel chR{Channel::R, 0};
    const std::size_t dim = 1 + params.n;

#pragma omp parallel for schedule(dynamic)
    for (int ie = 0; ie < n; ++ie) {
        const bool want_two = full_two || ie == opts.branch_row;
        const ChainBranch b = branch_at_node(r.traj, params, chR, ie);
        std::vector<cxd> y(dim);
        y[0] = b.phi_g;
        for (int j = 0; j < params.n; ++j) y[1 + j] = b.phi_e[j];
        Rk4Work work(dim);
        auto rhs = [&stepper](int k, const std::vector<cxd>& v, std::vector<cxd>& dv) {
            stepper.rhs_single(k, v, dv);
        };
        std::vector<cxd> phi_e(params.n);
        auto record_two = [&](int i2) {
            for (int j = 0; j < params.n; ++j) phi_e[j] = y[1 + j];
            const cxd v = assemble_at_node(phi_e, params, chR, grid.zeta(i2));
            if (full_two)
                r.two_rr.at(i2, ie) = v;
            else
                r.two_rr_row[i2] = v;
        };
        if (want_two) record_two(ie);
        for (int i = ie; i < grid.n_steps; ++i) {
            rk4_step(i, stepper.h, rhs, y, work);
            if (want_two) record_two(i + 1);
        }
        check_finite(y, "run_chain");
        r.phi_gR[ie] = y[0];
    }
    return r;
}

}  // namespace wqed
