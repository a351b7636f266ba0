// Drive definitions. A drive is specified either as a coherent field of
// dimensionless amplitude fed through the waveguide, or as a Rabi frequency
// applied from the side (in which case no coherent background reaches the
// output detector).

#pragma once

#include <vector>

#include "wqed/params.hpp"

namespace wqed {

enum class DriveKind { Constant, GaussianPulse, Tabulated };
enum class DriveGeometry { Waveguide, Side };

struct DriveEnvelope {
    DriveKind kind = DriveKind::Constant;
    DriveGeometry geometry = DriveGeometry::Waveguide;

    // Constant kind: dimensionless field amplitude (waveguide) or Rabi
    // frequency (side).
    cxd amplitude = 0.0;

    // Gaussian pulse: width sigma (in 1/Gamma), integrated Rabi area, and
    // pulse center on the time axis. center < 0 means "auto" (8 sigma, far
    // enough in that the clipped tail stays below the area tolerance).
    double sigma = 0.1;
    double area = M_PI;
    double center = -1.0;

    // Tabulated Rabi frequency, linearly interpolated; must cover the grid.
    std::vector<double> table_zeta;
    std::vector<cxd> table_omega;

    double pulse_center() const { return center < 0.0 ? 8.0 * sigma : center; }

    // Rabi frequency at time zeta for an emitter with waveguide phase k0*z.
    // For a waveguide coherent drive the Rabi frequency is 2*sqrt(beta_r)
    // times the field amplitude; side drives give the Rabi frequency directly.
    cxd rabi(const SystemParams& p, double zeta, double phase = 0.0) const;

    // Coherent field amplitude reaching the output; zero for side geometry.
    cxd coherent_amplitude(const SystemParams& p, double zeta) const;

    // Checks the envelope is defined on every node and, for Gaussian pulses,
    // that the integrated area matches on the given grid.
    void validate(const TimeGrid& grid) const;
};

DriveEnvelope constant_waveguide_drive(cxd field_amplitude);
DriveEnvelope constant_side_drive(cxd rabi_frequency);
DriveEnvelope gaussian_side_pulse(double sigma, double area = M_PI, double center = -1.0);

}  // namespace wqed
