// Chirp-Z transform (Bluestein's algorithm on top of FFTW): evaluates
// out[q] = sum_k in[k] * exp(-i * alpha * q * k) for q = 0..m-1 exactly (to
// rounding), for arbitrary alpha, using three FFTs of a fixed power-of-two
// size. Lets us place frequency samples wherever the frequency grid wants
// them instead of being tied to the FFT bin spacing.

#pragma once

#include <cstddef>
#include <vector>

#include "wqed/params.hpp"

namespace wqed {

class CztPlan {
public:
    CztPlan(int n_in, int n_out, double alpha);
    ~CztPlan();
    CztPlan(const CztPlan&) = delete;
    CztPlan& operator=(const CztPlan&) = delete;

    int n_in() const { return n_; }
    int n_out() const { return m_; }

    // Not thread-safe (shared scratch buffer); create one plan per thread.
    void transform(const cxd* in, cxd* out) const;
    std::vector<cxd> transform(const std::vector<cxd>& in) const;

private:
    int n_ = 0, m_ = 0;
    std::size_t len_ = 0;
    std::vector<cxd> chirp_in_, chirp_out_, filter_fft_;
    mutable std::vector<cxd> buf_;
    void* fwd_ = nullptr;  // fftw_plan
    void* inv_ = nullptr;
};

}  // namespace wqed
