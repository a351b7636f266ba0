#include "wqed/drive.hpp"

#include <algorithm>
#include <cmath>

namespace wqed {

namespace {

cxd lerp_table(const std::vector<double>& xs, const std::vector<cxd>& ys, double x) {
    if (xs.empty() || x < xs.front() || x > xs.back())
        throw InvalidParams("tabulated drive undefined at zeta = " + std::to_string(x));
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.end()) return ys.back();
    if (it == xs.begin()) return ys.front();
    const auto i = static_cast<std::size_t>(it - xs.begin());
    const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] * (1.0 - t) + ys[i] * t;
}

}  // namespace

cxd DriveEnvelope::rabi(const SystemParams& p, double zeta, double phase) const {
    switch (kind) {
        case DriveKind::Constant:
            if (geometry == DriveGeometry::Waveguide)
                return 2.0 * std::sqrt(p.beta_r) * amplitude * std::exp(I * phase);
            return amplitude;
        case DriveKind::GaussianPulse: {
            const double zc = pulse_center();
            const double peak = area / (2.0 * sigma * std::sqrt(M_PI));
            const double env = peak * std::exp(-(zeta - zc) * (zeta - zc) / (4.0 * sigma * sigma));
            if (geometry == DriveGeometry::Waveguide) return env * std::exp(I * phase);
            return env;
        }
        case DriveKind::Tabulated: {
            cxd omega = lerp_table(table_zeta, table_omega, zeta);
            if (geometry == DriveGeometry::Waveguide) return omega * std::exp(I * phase);
            return omega;
        }
    }
    return 0.0;
}

cxd DriveEnvelope::coherent_amplitude(const SystemParams& p, double zeta) const {
    if (geometry == DriveGeometry::Side) return 0.0;
    // The waveguide field amplitude corresponding to the Rabi frequency at
    // the reference position z = 0.
    return rabi(p, zeta) / (2.0 * std::sqrt(p.beta_r));
}

void DriveEnvelope::validate(const TimeGrid& grid) const {
    grid.validate();
    SystemParams ref;  // beta_r = 1; only used to probe definedness
    for (int i = 0; i <= grid.n_steps; ++i) {
        cxd w = rabi(ref, grid.zeta(i));
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
            throw InvalidParams("drive not finite at grid node " + std::to_string(i));
    }
    if (kind == DriveKind::GaussianPulse) {
        if (sigma <= 0.0) throw InvalidParams("pulse width must be positive");
        // Trapezoid of the envelope over the grid must recover the area.
        double integral = 0.0;
        const double h = grid.h();
        for (int i = 0; i <= grid.n_steps; ++i) {
            const double w = std::abs(rabi(ref, grid.zeta(i)));
            integral += (i == 0 || i == grid.n_steps) ? 0.5 * w * h : w * h;
        }
        if (std::abs(integral - area) > 1e-6 * std::abs(area))
            throw InvalidParams("pulse area not resolved on this grid: integral = " +
                                std::to_string(integral) + ", expected " + std::to_string(area));
    }
}

DriveEnvelope constant_waveguide_drive(cxd field_amplitude) {
    DriveEnvelope d;
    d.kind = DriveKind::Constant;
    d.geometry = DriveGeometry::Waveguide;
    d.amplitude = field_amplitude;
    return d;
}

DriveEnvelope constant_side_drive(cxd rabi_frequency) {
    DriveEnvelope d;
    d.kind = DriveKind::Constant;
    d.geometry = DriveGeometry::Side;
    d.amplitude = rabi_frequency;
    return d;
}

DriveEnvelope gaussian_side_pulse(double sigma, double area, double center) {
    DriveEnvelope d;
    d.kind = DriveKind::GaussianPulse;
    d.geometry = DriveGeometry::Side;
    d.sigma = sigma;
    d.area = area;
    d.center = center;
    return d;
}

}  // namespace wqed
