#include "wqed/single_emitter.hpp"

#include <cmath>
#include <string>

namespace wqed {

namespace detail {

void TwoLevelStepper::step(int i, cxd& a, cxd& b) const {
    const cxd g0 = g[2 * i], gm = g[2 * i + 1], g1 = g[2 * i + 2];

    auto da = [](cxd gk, cxd /*ak*/, cxd bk) { return -std::conj(gk) * bk; };
    auto db = [](cxd gk, cxd ak, cxd bk) { return gk * ak - 0.5 * bk; };

    const cxd ka1 = da(g0, a, b), kb1 = db(g0, a, b);
    const cxd ka2 = da(gm, a + 0.5 * h * ka1, b + 0.5 * h * kb1);
    const cxd kb2 = db(gm, a + 0.5 * h * ka1, b + 0.5 * h * kb1);
    const cxd ka3 = da(gm, a + 0.5 * h * ka2, b + 0.5 * h * kb2);
    const cxd kb3 = db(gm, a + 0.5 * h * ka2, b + 0.5 * h * kb2);
    const cxd ka4 = da(g1, a + h * ka3, b + h * kb3);
    const cxd kb4 = db(g1, a + h * ka3, b + h * kb3);

    a += (h / 6.0) * (ka1 + 2.0 * ka2 + 2.0 * ka3 + ka4);
    b += (h / 6.0) * (kb1 + 2.0 * kb2 + 2.0 * kb3 + kb4);
}

TwoLevelStepper make_stepper(const SystemParams& params, const DriveEnvelope& drive,
                             const TimeGrid& grid, double phase) {
    params.validate();
    grid.validate();
    drive.validate(grid);

    TwoLevelStepper s;
    s.h = grid.h();
    const int m = 2 * grid.n_steps + 1;
    s.g.resize(m);
    for (int k = 0; k < m; ++k) {
        const double zeta = grid.zeta_start + 0.5 * k * s.h;
        const cxd omega = drive.rabi(params, zeta, phase);
        s.g[k] = I * 0.5 * omega * std::exp(-I * params.delta * zeta);
    }
    return s;
}

namespace {

void check_finite(cxd a, cxd b, const char* what) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) ||
        !std::isfinite(b.imag()))
        throw NumericalFailure(std::string(what) + ": non-finite amplitude encountered");
}

}  // namespace

}  // namespace detail

EmitterTrajectory integrate_emitter(const SystemParams& params, const DriveEnvelope& drive,
                                    const TimeGrid& grid, cxd cg0, cxd ce0) {
    const auto stepper = detail::make_stepper(params, drive, grid);

    EmitterTrajectory traj;
    traj.grid = grid;
    traj.c_g.resize(grid.n_nodes());
    traj.c_e.resize(grid.n_nodes());

    cxd a = cg0, b = ce0;
    traj.c_g[0] = a;
    traj.c_e[0] = b;
    for (int i = 0; i < grid.n_steps; ++i) {
        stepper.step(i, a, b);
        traj.c_g[i + 1] = a;
        traj.c_e[i + 1] = b;
    }
    detail::check_finite(a, b, "integrate_emitter");
    return traj;
}

cxd branch_single_photon(const EmitterTrajectory& traj, const SystemParams& params, Channel ch,
                         double zeta_e) {
    const int ie = traj.grid.index_of(zeta_e);
    return I * std::sqrt(channel_beta(params, ch)) * traj.c_e[ie] *
           std::exp(I * params.delta * zeta_e);
}

AfterEmissionSlice propagate_after_emission(const SystemParams& params, const DriveEnvelope& drive,
                                            const TimeGrid& grid, double zeta_e, cxd init) {
    const int ie = grid.index_of(zeta_e);
    const auto stepper = detail::make_stepper(params, drive, grid);

    AfterEmissionSlice s;
    s.i_e = ie;
    s.phi_g.assign(grid.n_nodes(), 0.0);
    s.phi_e.assign(grid.n_nodes(), 0.0);

    cxd a = init, b = 0.0;
    s.phi_g[ie] = a;
    for (int i = ie; i < grid.n_steps; ++i) {
        stepper.step(i, a, b);
        s.phi_g[i + 1] = a;
        s.phi_e[i + 1] = b;
    }
    detail::check_finite(a, b, "propagate_after_emission");
    return s;
}

SinglePhotonField propagate_all_emissions(const EmitterTrajectory& traj,
                                          const SystemParams& params, const DriveEnvelope& drive,
                                          Channel ch) {
    const TimeGrid& grid = traj.grid;
    const auto stepper = detail::make_stepper(params, drive, grid);
    const double root_beta = std::sqrt(channel_beta(params, ch));

    SinglePhotonField f;
    f.channel = ch;
    f.grid = grid;
    f.phi_g = TriangularGrid(grid.n_nodes());
    f.phi_e = TriangularGrid(grid.n_nodes());

#pragma omp parallel for schedule(dynamic)
    for (int ie = 0; ie < grid.n_nodes(); ++ie) {
        cxd a = I * root_beta * traj.c_e[ie] * std::exp(I * params.delta * grid.zeta(ie));
        cxd b = 0.0;
        f.phi_g.at(ie, ie) = a;
        f.phi_e.at(ie, ie) = 0.0;
        for (int i = ie; i < grid.n_steps; ++i) {
            stepper.step(i, a, b);
            f.phi_g.at(i + 1, ie) = a;
            f.phi_e.at(i + 1, ie) = b;
        }
        detail::check_finite(a, b, "propagate_all_emissions");
    }
    return f;
}

TwoPhotonAmplitude assemble_two_photon(const SinglePhotonField& field, const SystemParams& params,
                                       Channel channel2) {
    const TimeGrid& grid = field.grid;
    const double root_beta2 = std::sqrt(channel_beta(params, channel2));

    TwoPhotonAmplitude tp;
    tp.channel2 = channel2;
    tp.channel1 = field.channel;
    tp.grid = grid;
    tp.amp = TriangularGrid(grid.n_nodes());

    for (int ie1 = 0; ie1 < grid.n_nodes(); ++ie1) {
        for (int ie2 = ie1; ie2 < grid.n_nodes(); ++ie2) {
            tp.amp.at(ie2, ie1) = I * root_beta2 * field.phi_e.at(ie2, ie1) *
                                  std::exp(I * params.delta * grid.zeta(ie2));
        }
    }
    return tp;
}

SingleEmitterResult run_single_emitter(const SystemParams& params, const DriveEnvelope& drive,
                                       const TimeGrid& grid, const PipelineOptions& opts) {
    const auto stepper = detail::make_stepper(params, drive, grid);
    const int n = grid.n_nodes();

    SingleEmitterResult r;
    r.grid = grid;
    r.traj.grid = grid;
    r.traj.c_g.resize(n);
    r.traj.c_e.resize(n);

    {
        cxd a = opts.cg0, b = opts.ce0;
        r.traj.c_g[0] = a;
        r.traj.c_e[0] = b;
        for (int i = 0; i < grid.n_steps; ++i) {
            stepper.step(i, a, b);
            r.traj.c_g[i + 1] = a;
            r.traj.c_e[i + 1] = b;
        }
        detail::check_finite(a, b, "run_single_emitter (before emission)");
    }

    r.phi_g_base.resize(n);
    r.phi_e_base.resize(n);
    r.branch_row = opts.branch_row;
    const bool full_two = opts.two_photon && opts.branch_row < 0;
    if (full_two) r.two_base = TriangularGrid(n);
    if (opts.branch_row >= 0) {
        if (opts.branch_row >= n) throw InvalidParams("branch row outside grid");
        r.two_row_base.assign(n, 0.0);
    }

#pragma omp parallel for schedule(dynamic)
    for (int ie = 0; ie < n; ++ie) {
        const bool want_two = full_two || ie == opts.branch_row;
        // Unit-branching initial condition; channel factors are applied by
        // the consumer.
        cxd a = I * r.traj.c_e[ie] * std::exp(I * params.delta * grid.zeta(ie));
        cxd b = 0.0;
        if (want_two && full_two) r.two_base.at(ie, ie) = 0.0;
        for (int i = ie; i < grid.n_steps; ++i) {
            stepper.step(i, a, b);
            if (want_two) {
                const cxd v = I * b * std::exp(I * params.delta * grid.zeta(i + 1));
                if (full_two)
                    r.two_base.at(i + 1, ie) = v;
                else
                    r.two_row_base[i + 1] = v;
            }
        }
        detail::check_finite(a, b, "run_single_emitter (after emission)");
        r.phi_g_base[ie] = a;
        r.phi_e_base[ie] = b;
    }
    return r;
}

}  // namespace wqed
