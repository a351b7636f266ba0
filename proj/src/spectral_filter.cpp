#include "wqed/spectral_filter.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "wqed/czt.hpp"

namespace wqed {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::atomic<bool> warned_out_of_table{false};

double trap_w(int i, int n_nodes) { return (i == 0 || i == n_nodes - 1) ? 0.5 : 1.0; }

// Trapezoid transform over the time grid: F[q] = sum_k w_k h f_k
// exp(-i omega_q zeta_k). The affine offsets of both grids factor into a
// per-sample pre-phase and a per-frequency post-phase around the plain czt
// kernel exp(-i dw h q k).
struct SpectralTransform {
    CztPlan plan;
    std::vector<cxd> pre, post;
    mutable std::vector<cxd> scratch_in, scratch_out;

    SpectralTransform(const TimeGrid& tgrid, const FrequencyGrid& fgrid)
        : plan(tgrid.n_nodes(), fgrid.n_nodes(), fgrid.d_omega() * tgrid.h()) {
        const int n = tgrid.n_nodes(), m = fgrid.n_nodes();
        const double h = tgrid.h(), w0 = fgrid.omega(0);
        pre.resize(n);
        for (int k = 0; k < n; ++k) {
            const double ph = -w0 * k * h;
            pre[k] = trap_w(k, n) * h * cxd{std::cos(ph), std::sin(ph)};
        }
        post.resize(m);
        for (int q = 0; q < m; ++q) {
            const double ph = -fgrid.omega(q) * tgrid.zeta_start;
            post[q] = cxd{std::cos(ph), std::sin(ph)};
        }
        scratch_in.resize(n);
        scratch_out.resize(m);
    }

    // out must hold n_out values; in holds n_in raw samples.
    void apply(const cxd* in, cxd* out) const {
        const int n = plan.n_in(), m = plan.n_out();
        for (int k = 0; k < n; ++k) scratch_in[k] = in[k] * pre[k];
        plan.transform(scratch_in.data(), scratch_out.data());
        for (int q = 0; q < m; ++q) out[q] = scratch_out[q] * post[q];
    }
};

std::vector<double> abs2_transmission(const FilterSpec& spec, const FrequencyGrid& fgrid) {
    std::vector<double> t2(fgrid.n_nodes());
    for (int q = 0; q < fgrid.n_nodes(); ++q) t2[q] = std::norm(filter_transmission(spec, fgrid.omega(q)));
    return t2;
}

}  // namespace

void FilterSpec::validate() const {
    if (kind == FilterKind::Tabulated) {
        if (table_omega.size() < 2 || table_omega.size() != table_t.size())
            throw InvalidParams("tabulated filter needs matching omega/T tables with >= 2 rows");
        for (std::size_t i = 0; i + 1 < table_omega.size(); ++i)
            if (!(table_omega[i] < table_omega[i + 1]))
                throw InvalidParams("tabulated filter frequencies must be strictly increasing");
        for (const cxd& t : table_t)
            if (!(std::abs(t) <= 1.0 + 1e-9))
                throw InvalidParams("tabulated filter must be passive (|T| <= 1)");
        return;
    }
    if (!(kappa > 0.0)) throw InvalidParams("filter bandwidth kappa must be positive");
    if (!std::isfinite(omega_c)) throw InvalidParams("filter center must be finite");
}

cxd filter_transmission(const FilterSpec& spec, double omega) {
    switch (spec.kind) {
        case FilterKind::Lorentzian:
            return 0.5 * spec.kappa / (I * (omega - spec.omega_c) - 0.5 * spec.kappa);
        case FilterKind::Gaussian: {
            // kappa is the FWHM of |T|^2, matching the Lorentzian convention,
            // so equal-kappa filters have equal linewidth.
            const double s = spec.kappa / (2.0 * std::sqrt(std::log(2.0)));
            const double x = omega - spec.omega_c;
            return std::exp(-x * x / (2.0 * s * s));
        }
        case FilterKind::Tabulated: {
            if (omega < spec.table_omega.front() || omega > spec.table_omega.back()) {
                if (!warned_out_of_table.exchange(true))
                    std::cerr << "warning: filter table does not cover omega = " << omega
                              << "; treating transmission as 0 outside the table\n";
                return 0.0;
            }
            const auto it =
                std::upper_bound(spec.table_omega.begin(), spec.table_omega.end(), omega);
            const std::size_t j = std::min<std::size_t>(it - spec.table_omega.begin(),
                                                        spec.table_omega.size() - 1);
            const double w0 = spec.table_omega[j - 1], w1 = spec.table_omega[j];
            const double s = (omega - w0) / (w1 - w0);
            return (1.0 - s) * spec.table_t[j - 1] + s * spec.table_t[j];
        }
    }
    throw InvalidParams("unknown filter kind");
}

FilterSpec lorentzian_filter(double kappa, double omega_c) {
    FilterSpec s{FilterKind::Lorentzian, kappa, omega_c, {}, {}};
    s.validate();
    return s;
}

FilterSpec gaussian_filter(double kappa, double omega_c) {
    FilterSpec s{FilterKind::Gaussian, kappa, omega_c, {}, {}};
    s.validate();
    return s;
}

FilterSpec all_pass_filter(double omega_max) {
    FilterSpec s;
    s.kind = FilterKind::Tabulated;
    s.table_omega = {-omega_max, omega_max};
    s.table_t = {1.0, 1.0};
    s.validate();
    return s;
}

FilterSpec tabulated_filter_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParams("cannot open filter table: " + path);
    FilterSpec s;
    s.kind = FilterKind::Tabulated;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        double w, re, im;
        if (!(row >> w >> re)) continue;  // blank / comment-only line
        if (!(row >> im)) throw InvalidParams("filter table row needs 'omega re(T) im(T)': " + line);
        s.table_omega.push_back(w);
        s.table_t.emplace_back(re, im);
    }
    s.validate();
    return s;
}

void FrequencyGrid::validate() const {
    if (n_freq < 2) throw InvalidParams("frequency grid needs n_freq >= 2");
    if (!(omega_max > 0.0)) throw InvalidParams("frequency grid needs omega_max > 0");
}

void FrequencyGrid::validate_for(const FilterSpec& spec, const TimeGrid& tgrid) const {
    validate();
    spec.validate();
    if (spec.kind == FilterKind::Tabulated) return;
    if (!(d_omega() < spec.kappa / 10.0))
        throw InvalidParams("frequency spacing too coarse for the filter: need d_omega < kappa/10; "
                            "increase n_freq or shrink omega_max");
    const double window = tgrid.zeta_end - tgrid.zeta_start;
    if (!(1.0 / window < spec.kappa))
        throw InvalidParams("time window too short to resolve the filter bandwidth: need "
                            "zeta_T > 1/kappa; extend the grid");
}

FrequencyGrid default_frequency_grid(const std::vector<FilterSpec>& filters,
                                     const TimeGrid& tgrid) {
    // The emitted spectrum lives within a few tens of linewidths of the
    // transition; past that the integrand vanishes no matter how wide the
    // filter is, so the half-range is capped there.
    constexpr double kSupportCap = 80.0;
    double omega_max = 20.0;
    double d_omega = 0.1;
    for (const FilterSpec& f : filters) {
        f.validate();
        if (f.kind == FilterKind::Tabulated) {
            omega_max = std::max({omega_max, std::abs(f.table_omega.front()),
                                  std::abs(f.table_omega.back())});
            continue;
        }
        omega_max = std::max(omega_max,
                             std::min(std::max(20.0, std::abs(f.omega_c) + 5.0 * f.kappa), kSupportCap));
        d_omega = std::min(d_omega, f.kappa / 20.0);
    }
    omega_max = std::min(omega_max, kSupportCap);
    FrequencyGrid g;
    g.omega_max = omega_max;
    g.n_freq = static_cast<int>(std::ceil(2.0 * omega_max / d_omega));
    g.validate();
    for (const FilterSpec& f : filters) g.validate_for(f, tgrid);
    return g;
}

std::vector<FilteredResult> filtered_pulsed_batch(const TriangularGrid& rr,
                                                  const std::vector<cxd>& phi_gR,
                                                  const std::vector<cxd>& phi_eR,
                                                  const std::vector<FilterSpec>& filters,
                                                  const FrequencyGrid& fgrid,
                                                  const TimeGrid& tgrid) {
    fgrid.validate();
    const int n = tgrid.n_nodes(), m = fgrid.n_nodes();
    if (rr.n != n || static_cast<int>(phi_gR.size()) != n || static_cast<int>(phi_eR.size()) != n)
        throw InvalidParams("filtered_pulsed_batch: field sizes do not match the time grid");
    for (const FilterSpec& f : filters) fgrid.validate_for(f, tgrid);

    const double h = tgrid.h(), dw = fgrid.d_omega();
    const std::size_t nf = filters.size();
    std::vector<std::vector<double>> t2(nf);
    for (std::size_t f = 0; f < nf; ++f) t2[f] = abs2_transmission(filters[f], fgrid);

    const SpectralTransform xf(tgrid, fgrid);

    // One-photon spectra.
    std::vector<cxd> spec_g(m), spec_e(m);
    xf.apply(phi_gR.data(), spec_g.data());
    xf.apply(phi_eR.data(), spec_e.data());
    double norm_g = 0.0;
    for (int k = 0; k < n; ++k) norm_g += trap_w(k, n) * std::norm(phi_gR[k]);
    norm_g *= h;

    // Stage 1: transform the symmetric two-photon extension f(a, b) over its
    // second (filtered) index, one row per untransformed time a. Rows land
    // transposed (per-frequency contiguous over a) so stage 2 reads them
    // straight. The per-row spectra also feed the two-photon part of the
    // filtered mean photon number.
    std::vector<cxd> et(static_cast<std::size_t>(m) * n);
    std::vector<double> two_row(m, 0.0);
    {
        std::vector<cxd> row(n), out(m);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) row[b] = rr.sym(a, b);
            xf.apply(row.data(), out.data());
            const double wa = trap_w(a, n) * h;
            for (int q = 0; q < m; ++q) {
                et[static_cast<std::size_t>(q) * n + a] = out[q];
                two_row[q] += wa * std::norm(out[q]);
            }
        }
    }

    // Stage 2: transform over the remaining time index and reduce each
    // spectral column against every filter at once; the full two-photon
    // spectrum is never materialized.
    std::vector<double> g2_num(nf, 0.0);
    {
        std::vector<cxd> psi(m);
        for (int q2 = 0; q2 < m; ++q2) {
            xf.apply(&et[static_cast<std::size_t>(q2) * n], psi.data());
            const double w2 = trap_w(q2, m);
            for (std::size_t f = 0; f < nf; ++f) {
                double acc = 0.0;
                const double* tf = t2[f].data();
                for (int q1 = 0; q1 < m; ++q1)
                    acc += trap_w(q1, m) * tf[q1] * std::norm(psi[q1]);
                g2_num[f] += w2 * t2[f][q2] * acc;
            }
        }
    }

    std::vector<FilteredResult> res(nf);
    for (std::size_t f = 0; f < nf; ++f) {
        FilteredResult& r = res[f];
        r.g2_numerator = g2_num[f] * dw * dw / (4.0 * kPi * kPi);
        double n1 = 0.0, ng = 0.0;
        for (int q = 0; q < m; ++q) {
            const double w = trap_w(q, m) * t2[f][q];
            ng += w * std::norm(spec_g[q]);
            n1 += w * (std::norm(spec_g[q]) + std::norm(spec_e[q]) + two_row[q]);
        }
        r.mean_n = n1 * dw / (2.0 * kPi);
        if (r.mean_n <= 0.0) throw NumericalFailure("filtered mean photon number vanished");
        r.g2p = r.g2_numerator / (r.mean_n * r.mean_n);
        if (norm_g <= 0.0) throw NumericalFailure("single-photon amplitude vanished");
        r.eta_sp = ng * dw / (2.0 * kPi) / norm_g;
    }
    return res;
}

double filtered_pulsed_g2(const TriangularGrid& rr, const std::vector<cxd>& phi_gR,
                          const std::vector<cxd>& phi_eR, const FilterSpec& spec,
                          const FrequencyGrid& fgrid, const TimeGrid& tgrid) {
    return filtered_pulsed_batch(rr, phi_gR, phi_eR, {spec}, fgrid, tgrid)[0].g2p;
}

double filtered_mean_photons(const TriangularGrid& rr, const std::vector<cxd>& phi_gR,
                             const std::vector<cxd>& phi_eR, const FilterSpec& spec,
                             const FrequencyGrid& fgrid, const TimeGrid& tgrid) {
    return filtered_pulsed_batch(rr, phi_gR, phi_eR, {spec}, fgrid, tgrid)[0].mean_n;
}

double single_photon_efficiency(const std::vector<cxd>& phi_gR, const FilterSpec& spec,
                                const FrequencyGrid& fgrid, const TimeGrid& tgrid) {
    fgrid.validate_for(spec, tgrid);
    const int n = tgrid.n_nodes(), m = fgrid.n_nodes();
    if (static_cast<int>(phi_gR.size()) != n)
        throw InvalidParams("single_photon_efficiency: field size does not match the time grid");
    const SpectralTransform xf(tgrid, fgrid);
    std::vector<cxd> spec_g(m);
    xf.apply(phi_gR.data(), spec_g.data());
    const std::vector<double> t2 = abs2_transmission(spec, fgrid);
    double num = 0.0;
    for (int q = 0; q < m; ++q) num += trap_w(q, m) * t2[q] * std::norm(spec_g[q]);
    num *= fgrid.d_omega() / (2.0 * kPi);
    double den = 0.0;
    for (int k = 0; k < n; ++k) den += trap_w(k, n) * std::norm(phi_gR[k]);
    den *= tgrid.h();
    if (den <= 0.0) throw NumericalFailure("single-photon amplitude vanished");
    return num / den;
}

double filtered_g2_numerator_direct(const TriangularGrid& rr, const FilterSpec& spec,
                                    const FrequencyGrid& fgrid, const TimeGrid& tgrid) {
    fgrid.validate();
    spec.validate();
    const int n = tgrid.n_nodes(), m = fgrid.n_nodes();
    if (rr.n != n) throw InvalidParams("filtered_g2_numerator_direct: grid mismatch");
    const double h = tgrid.h(), dw = fgrid.d_omega();
    const std::vector<double> t2 = abs2_transmission(spec, fgrid);

    // Same discretization as the fast path, evaluated by nested sums.
    std::vector<cxd> e(static_cast<std::size_t>(n) * m);
    for (int a = 0; a < n; ++a)
        for (int q = 0; q < m; ++q) {
            cxd acc = 0.0;
            for (int b = 0; b < n; ++b) {
                const double ph = -fgrid.omega(q) * tgrid.zeta(b);
                acc += trap_w(b, n) * h * rr.sym(a, b) * cxd{std::cos(ph), std::sin(ph)};
            }
            e[static_cast<std::size_t>(a) * m + q] = acc;
        }

    double total = 0.0;
    for (int q1 = 0; q1 < m; ++q1)
        for (int q2 = 0; q2 < m; ++q2) {
            cxd psi = 0.0;
            for (int a = 0; a < n; ++a) {
                const double ph = -fgrid.omega(q1) * tgrid.zeta(a);
                psi += trap_w(a, n) * h * e[static_cast<std::size_t>(a) * m + q2] *
                       cxd{std::cos(ph), std::sin(ph)};
            }
            total += trap_w(q1, m) * trap_w(q2, m) * t2[q1] * t2[q2] * std::norm(psi);
        }
    return total * dw * dw / (4.0 * kPi * kPi);
}

}  // namespace wqed
