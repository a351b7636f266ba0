#include "wqed/correlations.hpp"

#include <cmath>
#include <string>

namespace wqed {

namespace {

double w_trap(int i, int n_nodes) { return (i == 0 || i == n_nodes - 1) ? 0.5 : 1.0; }

double abs2(cxd z) { return std::norm(z); }

}  // namespace

double trapezoid(const std::vector<double>& f, double h) {
    const int n = static_cast<int>(f.size());
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += w_trap(i, n) * f[i];
    return acc * h;
}

double triangle_abs2_integral(const TriangularGrid& amp, double h) {
    // Product trapezoid weights of the full square, restricted to the ordered
    // triangle (the square integral of the symmetric extension is twice this).
    double acc = 0.0;
    for (int i1 = 0; i1 < amp.n; ++i1) {
        const double w1 = w_trap(i1, amp.n);
        for (int i2 = i1; i2 < amp.n; ++i2) {
            const double w = (i2 == i1) ? 0.5 * w1 * w1 : w1 * w_trap(i2, amp.n);
            acc += w * abs2(amp.at(i2, i1));
        }
    }
    return acc * h * h;
}

std::vector<double> g1_leading(const std::vector<cxd>& phi_gR_slice, cxd e_eff) {
    std::vector<double> g1(phi_gR_slice.size());
    for (std::size_t i = 0; i < phi_gR_slice.size(); ++i) g1[i] = abs2(phi_gR_slice[i] + e_eff);
    return g1;
}

double g2_point(cxd rr_value, cxd phi_g_late, cxd phi_g_early, cxd e_eff) {
    return abs2(rr_value + e_eff * phi_g_early + e_eff * phi_g_late + e_eff * e_eff);
}

std::vector<double> g2_leading(const TriangularGrid& rr, const std::vector<cxd>& phi_gR_slice,
                               cxd e_eff) {
    if (static_cast<std::size_t>(rr.n) != phi_gR_slice.size())
        throw InvalidParams("two-photon grid and slice sizes differ");
    std::vector<double> table(rr.data.size());
    for (int i1 = 0; i1 < rr.n; ++i1)
        for (int i2 = i1; i2 < rr.n; ++i2)
            table[rr.offset(i1) + (i2 - i1)] =
                g2_point(rr.at(i2, i1), phi_gR_slice[i2], phi_gR_slice[i1], e_eff);
    return table;
}

double g2_pulsed_numerator(const TriangularGrid& rr, const TimeGrid& grid) {
    return 2.0 * triangle_abs2_integral(rr, grid.h());
}

double mean_photons(const std::vector<cxd>& phi_gR_slice, const TriangularGrid& rr,
                    const TimeGrid& grid) {
    std::vector<double> one(phi_gR_slice.size());
    for (std::size_t i = 0; i < phi_gR_slice.size(); ++i) one[i] = abs2(phi_gR_slice[i]);
    return trapezoid(one, grid.h()) + 2.0 * triangle_abs2_integral(rr, grid.h());
}

double pulsed_g2(const TriangularGrid& rr, const std::vector<cxd>& phi_gR_slice,
                 const TimeGrid& grid) {
    const double n = mean_photons(phi_gR_slice, rr, grid);
    if (n <= 0.0) throw NumericalFailure("pulsed_g2: zero mean photon number");
    return g2_pulsed_numerator(rr, grid) / (n * n);
}

namespace {

void check_steady(const std::vector<cxd>& c_e, const TimeGrid& grid, double tol) {
    const int i_late = grid.n_steps;
    const int i_check = static_cast<int>(std::lround(0.9 * grid.n_steps));
    const double drift = std::abs(c_e[i_late] - c_e[i_check]);
    if (drift > tol * std::abs(c_e[i_late]))
        throw NumericalFailure("steady-state g2: emitter amplitudes have not converged (drift " +
                               std::to_string(drift) + ")");
}

int branch_node(const TimeGrid& grid, double fraction) {
    return static_cast<int>(std::lround(fraction * grid.n_steps));
}

}  // namespace

SteadyG2Result g2_normalized_steady(const SystemParams& params, const DriveEnvelope& drive,
                                    const TimeGrid& grid, const SteadyG2Options& opts) {
    if (drive.kind != DriveKind::Constant)
        throw InvalidParams("steady-state g2 requires a constant drive");
    const int ib = branch_node(grid, opts.branch_fraction);

    PipelineOptions popt;
    popt.branch_row = ib;
    const SingleEmitterResult r = run_single_emitter(params, drive, grid, popt);
    check_steady(r.traj.c_e, grid, opts.convergence_tol);

    const double rb = std::sqrt(params.beta_r);
    cxd e_eff = drive.coherent_amplitude(params, grid.zeta(ib));
    if (opts.use_cg_substitution) e_eff *= r.traj.c_g[grid.n_steps];

    const std::vector<double> g1 = g1_leading([&] {
        std::vector<cxd> s(r.phi_g_base.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = rb * r.phi_g_base[i];
        return s;
    }(), e_eff);

    SteadyG2Result out;
    const int n = grid.n_nodes();
    out.delay.reserve(n - ib);
    out.g2.reserve(n - ib);
    for (int i2 = ib; i2 < n; ++i2) {
        const cxd rr = params.beta_r * r.two_row_base[i2];
        const double num =
            g2_point(rr, rb * r.phi_g_base[i2], rb * r.phi_g_base[ib], e_eff);
        const double den = g1[i2] * g1[ib];
        if (den <= 0.0) throw NumericalFailure("steady-state g2: vanishing intensity");
        out.delay.push_back(grid.zeta(i2) - grid.zeta(ib));
        out.g2.push_back(num / den);
    }
    out.g2_zero = out.g2.front();
    return out;
}

SteadyG2Result g2_normalized_steady_chain(const ChainParams& params, const DriveEnvelope& drive,
                                          const TimeGrid& grid, const SteadyG2Options& opts) {
    if (drive.kind != DriveKind::Constant)
        throw InvalidParams("steady-state g2 requires a constant drive");
    const int ib = branch_node(grid, opts.branch_fraction);

    ChainPipelineOptions copt;
    copt.branch_row = ib;
    const ChainResult r = run_chain(params, drive, grid, copt);
    // Guard on the emitter whose amplitude is largest at the final time.
    {
        int jmax = 0;
        for (int j = 1; j < params.n; ++j)
            if (std::abs(r.traj.c_e[j][grid.n_steps]) > std::abs(r.traj.c_e[jmax][grid.n_steps]))
                jmax = j;
        check_steady(r.traj.c_e[jmax], grid, opts.convergence_tol);
    }

    cxd e_eff = drive.coherent_amplitude(params.emitter(), grid.zeta(ib));
    if (opts.use_cg_substitution) e_eff *= r.traj.c_g[grid.n_steps];

    const std::vector<double> g1 = g1_leading(r.phi_gR, e_eff);

    SteadyG2Result out;
    const int n = grid.n_nodes();
    for (int i2 = ib; i2 < n; ++i2) {
        const double num = g2_point(r.two_rr_row[i2], r.phi_gR[i2], r.phi_gR[ib], e_eff);
        const double den = g1[i2] * g1[ib];
        if (den <= 0.0) throw NumericalFailure("steady-state g2: vanishing intensity");
        out.delay.push_back(grid.zeta(i2) - grid.zeta(ib));
        out.g2.push_back(num / den);
    }
    out.g2_zero = out.g2.front();
    return out;
}

double total_norm(const SingleEmitterResult& r) {
    if (r.two_base.empty())
        throw InvalidParams("total_norm requires the full two-photon grid");
    const TimeGrid& grid = r.grid;
    std::vector<double> one(r.phi_g_base.size());
    for (std::size_t i = 0; i < one.size(); ++i)
        one[i] = abs2(r.phi_g_base[i]) + abs2(r.phi_e_base[i]);
    const int iT = grid.n_steps;
    return abs2(r.traj.c_g[iT]) + abs2(r.traj.c_e[iT]) + trapezoid(one, grid.h()) +
           triangle_abs2_integral(r.two_base, grid.h());
}

std::vector<double> g1_full(const SingleEmitterResult& r, const SystemParams& params,
                            const DriveEnvelope& drive, const FullOrderOptions&) {
    if (r.two_base.empty())
        throw InvalidParams("g1_full requires the full two-photon grid");
    const TimeGrid& grid = r.grid;
    const int n = grid.n_nodes();
    const double h = grid.h();
    const double br = params.beta_r;
    const double rb = std::sqrt(br);
    const cxd e = drive.coherent_amplitude(params, grid.zeta_end);
    const cxd cgT = r.traj.c_g[grid.n_steps];
    const cxd ceT = r.traj.c_e[grid.n_steps];

    std::vector<double> g1(n);
#pragma omp parallel for schedule(static)
    for (int ie = 0; ie < n; ++ie) {
        // One-photon pieces plus the partner-integrated two-photon pieces;
        // the channel sum over the partner collapses since the betas sum to 1.
        double pair_int = 0.0;
        cxd cross_pair = 0.0;
        for (int ip = 0; ip < n; ++ip) {
            const cxd b = r.two_base.sym(ie, ip);
            const double w = w_trap(ip, n) * h;
            pair_int += w * abs2(b);
            cross_pair += w * std::conj(b) * r.phi_g_base[ip];
        }
        const cxd expect_Edag =
            rb * (std::conj(r.phi_g_base[ie]) * cgT + std::conj(r.phi_e_base[ie]) * ceT +
                  cross_pair);
        g1[ie] = br * (abs2(r.phi_g_base[ie]) + abs2(r.phi_e_base[ie])) + br * pair_int +
                 2.0 * std::real(e * expect_Edag) + abs2(e);
    }
    return g1;
}

std::vector<double> g2_full_row(const SingleEmitterResult& r, const SystemParams& params,
                                const DriveEnvelope& drive, int row,
                                const FullOrderOptions& opts) {
    if (r.two_base.empty())
        throw InvalidParams("g2_full_row requires the full two-photon grid");
    const TimeGrid& grid = r.grid;
    const int n = grid.n_nodes();
    if (row < 0 || row >= n) throw InvalidParams("g2_full_row: row outside grid");
    const double h = grid.h();
    const double br = params.beta_r;
    const double rb = std::sqrt(br);
    const cxd e = drive.coherent_amplitude(params, grid.zeta_end);
    const cxd cgT = r.traj.c_g[grid.n_steps];
    const cxd ceT = r.traj.c_e[grid.n_steps];

    std::vector<double> g2(n);
#pragma omp parallel for schedule(static)
    for (int i2 = 0; i2 < n; ++i2) {
        const cxd rr = br * r.two_base.sym(i2, row);
        // Detected-pair sector (emitter in the ground state at zeta_T).
        double val = abs2(rr + e * rb * r.phi_g_base[i2] + e * rb * r.phi_g_base[row] +
                          e * e * cgT);
        // Emitter-still-excited sector.
        val += abs2(e * rb * r.phi_e_base[i2] + e * rb * r.phi_e_base[row] + e * e * ceT);
        if (opts.include_integral_sectors) {
            // A third, undetected photon remains; integrate over its emission
            // time. Channel sums collapse as in g1_full.
            double acc = 0.0;
            for (int ip = 0; ip < n; ++ip) {
                const cxd amp = e * rb * (r.two_base.sym(i2, ip) + r.two_base.sym(row, ip)) +
                                e * e * r.phi_g_base[ip];
                acc += w_trap(ip, n) * abs2(amp);
            }
            val += acc * h;
        }
        g2[i2] = val;
    }
    return g2;
}

}  // namespace wqed
