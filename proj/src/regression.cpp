#include "wqed/regression.hpp"

#include <array>
#include <cmath>
#include <string>

namespace wqed {

void DensityState::validate() const {
    const double tr = gg.real() + ee.real();
    if (std::abs(tr - 1.0) > 1e-9 || std::abs(gg.imag()) > 1e-12 || std::abs(ee.imag()) > 1e-12)
        throw NumericalFailure("density matrix trace deviates: " + std::to_string(tr));
    if (std::abs(ge - std::conj(eg)) > 1e-12)
        throw NumericalFailure("density matrix not Hermitian");
    // Eigenvalues of the Hermitian 2x2: tr/2 +- sqrt((tr/2)^2 - det).
    const double det = (gg * ee - ge * eg).real();
    const double disc = std::sqrt(std::max(0.25 * tr * tr - det, 0.0));
    if (0.5 * tr - disc < -1e-9)
        throw NumericalFailure("density matrix not positive semidefinite");
}

namespace {

using Rho = std::array<cxd, 4>;  // gg, ge, eg, ee

// Master equation rho' = -i[H, rho] + s rho s+ - {s+s, rho}/2 with
// H = a s+ + a* s-, a = -Omega/2 e^{-i delta zeta}, decay rate 1.
struct LindbladStepper {
    double h = 0.0;
    std::vector<cxd> a;  // half-step resolution

    // no_jump drops the recycling term: the evolution then tracks the
    // conditional state with no emission having occurred.
    bool no_jump = false;

    void rhs(int k, const Rho& r, Rho& dr) const {
        const cxd ak = a[k], ac = std::conj(ak);
        dr[0] = -I * (ac * r[2] - ak * r[1]) + (no_jump ? cxd{0.0} : r[3]);
        dr[1] = -I * ac * (r[3] - r[0]) - 0.5 * r[1];
        dr[2] = -I * ak * (r[0] - r[3]) - 0.5 * r[2];
        dr[3] = -I * (ak * r[1] - ac * r[2]) - r[3];
    }

    void step(int i, Rho& r) const {
        Rho k1, k2, k3, k4, tmp;
        rhs(2 * i, r, k1);
        for (int q = 0; q < 4; ++q) tmp[q] = r[q] + 0.5 * h * k1[q];
        rhs(2 * i + 1, tmp, k2);
        for (int q = 0; q < 4; ++q) tmp[q] = r[q] + 0.5 * h * k2[q];
        rhs(2 * i + 1, tmp, k3);
        for (int q = 0; q < 4; ++q) tmp[q] = r[q] + h * k3[q];
        rhs(2 * i + 2, tmp, k4);
        for (int q = 0; q < 4; ++q)
            r[q] += (h / 6.0) * (k1[q] + 2.0 * k2[q] + 2.0 * k3[q] + k4[q]);
    }
};

LindbladStepper make_lindblad_stepper(const DriveEnvelope& drive, double delta,
                                      const TimeGrid& grid) {
    grid.validate();
    drive.validate(grid);
    SystemParams ref{1.0, 0.0, 0.0, delta};

    LindbladStepper s;
    s.h = grid.h();
    const int m = 2 * grid.n_steps + 1;
    s.a.resize(m);
    for (int k = 0; k < m; ++k) {
        const double zeta = grid.zeta_start + 0.5 * k * s.h;
        s.a[k] = -0.5 * drive.rabi(ref, zeta) * std::exp(-I * delta * zeta);
    }
    return s;
}

double w_trap(int i, int n_nodes) { return (i == 0 || i == n_nodes - 1) ? 0.5 : 1.0; }

std::vector<double> populations(const DriveEnvelope& drive, double delta, const TimeGrid& grid) {
    const auto st = make_lindblad_stepper(drive, delta, grid);
    std::vector<double> p(grid.n_nodes());
    Rho r{1.0, 0.0, 0.0, 0.0};
    p[0] = r[3].real();
    for (int i = 0; i < grid.n_steps; ++i) {
        st.step(i, r);
        p[i + 1] = r[3].real();
    }
    return p;
}

}  // namespace

std::vector<DensityState> evolve_density(const DriveEnvelope& drive, double delta,
                                         const TimeGrid& grid, DensityState initial) {
    initial.validate();
    const auto st = make_lindblad_stepper(drive, delta, grid);
    std::vector<DensityState> out(grid.n_nodes());
    Rho r{initial.gg, initial.ge, initial.eg, initial.ee};
    out[0] = initial;
    for (int i = 0; i < grid.n_steps; ++i) {
        st.step(i, r);
        out[i + 1] = {r[0], r[1], r[2], r[3]};
        out[i + 1].validate();
    }
    return out;
}

double regression_mean_photons(const DriveEnvelope& drive, double delta, const TimeGrid& grid) {
    const std::vector<double> p = populations(drive, delta, grid);
    double acc = 0.0;
    for (int i = 0; i < grid.n_nodes(); ++i) acc += w_trap(i, grid.n_nodes()) * p[i];
    return acc * grid.h();
}

double regression_pulsed_g2(const DriveEnvelope& drive, double delta, const TimeGrid& grid) {
    auto st = make_lindblad_stepper(drive, delta, grid);
    st.no_jump = true;
    const int n = grid.n_nodes();
    const double h = grid.h();

    // First-emission density: rho_ee of the no-jump state from the ground
    // state (its norm loss is the emission probability).
    std::vector<double> p1(n);
    {
        Rho r{1.0, 0.0, 0.0, 0.0};
        p1[0] = 0.0;
        for (int i = 0; i < n - 1; ++i) {
            st.step(i, r);
            p1[i + 1] = r[3].real();
        }
    }
    double p_first = 0.0;  // P(>= 1 emission)
    for (int i = 0; i < n; ++i) p_first += w_trap(i, n) * p1[i];
    p_first *= h;
    if (p_first <= 0.0) throw NumericalFailure("regression_pulsed_g2: zero mean photon number");

    // For each first-emission time, reset to |g><g| weighted by the emission
    // density, propagate without further jumps, and integrate the density of
    // the second emission over t' > t.
    double g2_num = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(+ : g2_num)
    for (int i = 0; i < n; ++i) {
        Rho lam{p1[i], 0.0, 0.0, 0.0};
        const int m = n - i;  // nodes in [i, n)
        double inner = 0.0;   // second-emission density at t' = t is 0
        for (int j = i; j < n - 1; ++j) {
            st.step(j, lam);
            inner += w_trap(j + 1 - i, m) * lam[3].real();
        }
        g2_num += w_trap(i, n) * inner * h;
    }
    g2_num *= 2.0 * h;

    const double mean_n = p_first + 0.5 * g2_num;  // P(>=1) + P(>=2)
    return g2_num / (mean_n * mean_n);
}

std::vector<double> regression_cw_g2(const DriveEnvelope& drive, double delta,
                                     const TimeGrid& grid, const TimeGrid& delay_grid) {
    if (std::abs(delay_grid.zeta_start - grid.zeta_end) > 1e-9 * std::abs(grid.zeta_end))
        throw InvalidParams("delay grid must start at the end of the evolution grid");
    // Steady state by direct evolution from the ground state.
    const auto st = make_lindblad_stepper(drive, delta, grid);
    Rho r{1.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < grid.n_steps; ++i) st.step(i, r);
    const double pee = r[3].real();
    if (pee <= 0.0) throw NumericalFailure("regression_cw_g2: no excited population");

    const auto std2 = make_lindblad_stepper(drive, delta, delay_grid);
    Rho lam{pee, 0.0, 0.0, 0.0};
    std::vector<double> g2(delay_grid.n_nodes());
    g2[0] = 0.0;
    for (int i = 0; i < delay_grid.n_steps; ++i) {
        std2.step(i, lam);
        g2[i + 1] = lam[3].real() / (pee * pee);
    }
    return g2;
}

}  // namespace wqed
