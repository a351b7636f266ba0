// Dimensionless emitter, chain, and grid parameters. All rates are in units
// of the total decay rate, all times in units of inverse total decay rate.

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace wqed {

using cxd = std::complex<double>;
inline constexpr cxd I{0.0, 1.0};

struct InvalidParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an integration or reduction produces non-finite values or an
// otherwise undefined result (e.g. zero mean photon number).
struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Branching ratios into the right, left, and side (loss) channels plus the
// detuning of the drive from the emitter transition.
struct SystemParams {
    double beta_r = 1.0;
    double beta_l = 0.0;
    double beta_s = 0.0;
    double delta = 0.0;

    void validate() const;
};

enum class Channel { R, L, S };

double channel_beta(const SystemParams& p, Channel ch);

// N identical emitters along the waveguide. phases[j] = k0*z_j, nondecreasing
// (index increases towards the output end).
struct ChainParams {
    int n = 1;
    std::vector<double> phases{0.0};
    double beta_r = 1.0;
    double beta_l = 0.0;
    double beta_s = 0.0;
    double delta = 0.0;

    SystemParams emitter() const { return {beta_r, beta_l, beta_s, delta}; }
    void validate() const;

    // Flat index of the ordered pair j < l into the doubly-excited block.
    int pair_index(int j, int l) const;
    int n_pairs() const { return n * (n - 1) / 2; }
};

// Uniform time grid over [zeta_start, zeta_end] with n_steps intervals.
struct TimeGrid {
    double zeta_start = 0.0;
    double zeta_end = 1.0;
    int n_steps = 2;

    void validate() const;
    double h() const { return (zeta_end - zeta_start) / n_steps; }
    int n_nodes() const { return n_steps + 1; }
    double zeta(int i) const { return zeta_start + i * h(); }
    // Exact node lookup; throws if zeta is not a grid node (tolerance h*1e-9).
    int index_of(double zeta) const;
};

}  // namespace wqed
