// Frequency-domain filtering of the emitted photons: filter transmissions,
// frequency grids, and the filtered pulsed g2, mean photon number, and
// single-photon transmission efficiency. Frequencies are measured relative
// to the emitter transition, in units of the total decay rate.

#pragma once

#include <string>
#include <vector>

#include "wqed/single_emitter.hpp"

namespace wqed {

enum class FilterKind { Lorentzian, Gaussian, Tabulated };

struct FilterSpec {
    FilterKind kind = FilterKind::Lorentzian;
    double kappa = 1.0;    // |T|^2 FWHM in Gamma units (parametric kinds)
    double omega_c = 0.0;  // center offset from the transition
    std::vector<double> table_omega;  // tabulated kind: strictly increasing
    std::vector<cxd> table_t;

    void validate() const;
};

// T(omega); tabulated filters return 0 outside their table (with a one-time
// warning).
cxd filter_transmission(const FilterSpec& spec, double omega);

FilterSpec lorentzian_filter(double kappa, double omega_c = 0.0);
FilterSpec gaussian_filter(double kappa, double omega_c = 0.0);
FilterSpec all_pass_filter(double omega_max);  // tabulated T = 1 on [-max, max]
// Text file with rows "omega re(T) im(T)"; '#' comments allowed.
FilterSpec tabulated_filter_from_file(const std::string& path);

// Uniform frequency samples omega_q = -omega_max + q * d_omega, q = 0..n_freq
// (n_freq intervals, n_freq + 1 nodes).
struct FrequencyGrid {
    int n_freq = 800;
    double omega_max = 20.0;

    double d_omega() const { return 2.0 * omega_max / n_freq; }
    int n_nodes() const { return n_freq + 1; }
    double omega(int q) const { return -omega_max + q * d_omega(); }
    void validate() const;
    // Resolution invariants: d_omega < kappa/10 and 1/zeta_T < kappa for
    // parametric filters.
    void validate_for(const FilterSpec& spec, const TimeGrid& tgrid) const;
};

// Grid resolving every filter in the list and the emission spectrum. The
// half-range follows max(20, 5*kappa) but is capped where the emitted
// spectrum has no support left, so very wide filters stay affordable.
FrequencyGrid default_frequency_grid(const std::vector<FilterSpec>& filters,
                                     const TimeGrid& tgrid);

struct FilteredResult {
    double g2_numerator = 0.0;  // filtered G2_pulsed
    double mean_n = 0.0;        // filtered <n>
    double g2p = 0.0;
    double eta_sp = 0.0;  // single-photon transmission efficiency
};

// One spectral pass over the two-photon grid serving all filters in the
// list. rr is the (beta-scaled) phi_RR triangle; pg/pe the zeta_T slices.
std::vector<FilteredResult> filtered_pulsed_batch(const TriangularGrid& rr,
                                                  const std::vector<cxd>& phi_gR,
                                                  const std::vector<cxd>& phi_eR,
                                                  const std::vector<FilterSpec>& filters,
                                                  const FrequencyGrid& fgrid,
                                                  const TimeGrid& tgrid);

double filtered_pulsed_g2(const TriangularGrid& rr, const std::vector<cxd>& phi_gR,
                          const std::vector<cxd>& phi_eR, const FilterSpec& spec,
                          const FrequencyGrid& fgrid, const TimeGrid& tgrid);

double filtered_mean_photons(const TriangularGrid& rr, const std::vector<cxd>& phi_gR,
                             const std::vector<cxd>& phi_eR, const FilterSpec& spec,
                             const FrequencyGrid& fgrid, const TimeGrid& tgrid);

double single_photon_efficiency(const std::vector<cxd>& phi_gR, const FilterSpec& spec,
                                const FrequencyGrid& fgrid, const TimeGrid& tgrid);

// Direct nested-sum evaluation of the filtered G2 numerator on the same
// discretization (no FFT); reference for equivalence tests on small grids.
double filtered_g2_numerator_direct(const TriangularGrid& rr, const FilterSpec& spec,
                                    const FrequencyGrid& fgrid, const TimeGrid& tgrid);

}  // namespace wqed
