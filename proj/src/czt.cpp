#include "wqed/czt.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace wqed {

namespace {

// Phase exp(-i * alpha * k^2 / 2); k^2/2 as double to avoid integer overflow.
cxd chirp(double alpha, std::int64_t k) {
    const double phase = -0.5 * alpha * static_cast<double>(k) * static_cast<double>(k);
    return {std::cos(phase), std::sin(phase)};
}

std::size_t next_pow2(std::size_t x) {
    std::size_t p = 1;
    while (p < x) p <<= 1;
    return p;
}

}  // namespace

CztPlan::CztPlan(int n_in, int n_out, double alpha) : n_(n_in), m_(n_out) {
    if (n_ < 1 || m_ < 1) throw InvalidParams("czt sizes must be positive");
    len_ = next_pow2(static_cast<std::size_t>(n_) + m_ - 1);

    chirp_in_.resize(n_);
    for (int k = 0; k < n_; ++k) chirp_in_[k] = chirp(alpha, k);
    chirp_out_.resize(m_);
    for (int q = 0; q < m_; ++q) chirp_out_[q] = chirp(alpha, q);

    // Circular filter v[j] = exp(+i alpha j^2 / 2) for j in (-(n-1), m-1].
    std::vector<cxd> v(len_, 0.0);
    for (int j = 0; j < m_; ++j) v[j] = std::conj(chirp(alpha, j));
    for (int j = 1; j < n_; ++j) v[len_ - j] = std::conj(chirp(alpha, j));

    buf_.resize(len_);
    auto* raw = reinterpret_cast<fftw_complex*>(buf_.data());
    fwd_ = fftw_plan_dft_1d(static_cast<int>(len_), raw, raw, FFTW_FORWARD, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_1d(static_cast<int>(len_), raw, raw, FFTW_BACKWARD, FFTW_ESTIMATE);

    std::copy(v.begin(), v.end(), buf_.begin());
    fftw_execute(static_cast<fftw_plan>(fwd_));
    filter_fft_.assign(buf_.begin(), buf_.end());
}

CztPlan::~CztPlan() {
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(inv_));
}

void CztPlan::transform(const cxd* in, cxd* out) const {
    for (int k = 0; k < n_; ++k) buf_[k] = in[k] * chirp_in_[k];
    std::fill(buf_.begin() + n_, buf_.end(), cxd{0.0, 0.0});
    fftw_execute(static_cast<fftw_plan>(fwd_));
    for (std::size_t j = 0; j < len_; ++j) buf_[j] *= filter_fft_[j];
    fftw_execute(static_cast<fftw_plan>(inv_));
    const double scale = 1.0 / static_cast<double>(len_);
    for (int q = 0; q < m_; ++q) out[q] = buf_[q] * chirp_out_[q] * scale;
}

std::vector<cxd> CztPlan::transform(const std::vector<cxd>& in) const {
    if (static_cast<int>(in.size()) != n_) throw InvalidParams("czt input size mismatch");
    std::vector<cxd> out(m_);
    transform(in.data(), out.data());
    return out;
}

}  // namespace wqed
