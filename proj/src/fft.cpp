#include "gnse/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace gnse {

namespace {
std::mutex& plan_mutex() {
    static std::mutex mu;
    return mu;
}
}  // namespace

FftGrid::FftGrid(int n, int M) : n_(n), M_(M) {
    pts_ = 1;
    for (int i = 0; i < n; ++i) pts_ *= size_t(M);
    buf_ = reinterpret_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * pts_));
    std::lock_guard<std::mutex> lock(plan_mutex());  // plan creation is not thread-safe
    auto* raw = reinterpret_cast<fftw_complex*>(buf_);
    if (n == 2) {
        plan_fwd_ = fftw_plan_dft_2d(M, M, raw, raw, FFTW_FORWARD, FFTW_ESTIMATE);
        plan_bwd_ = fftw_plan_dft_2d(M, M, raw, raw, FFTW_BACKWARD, FFTW_ESTIMATE);
    } else {
        plan_fwd_ = fftw_plan_dft_3d(M, M, M, raw, raw, FFTW_FORWARD, FFTW_ESTIMATE);
        plan_bwd_ = fftw_plan_dft_3d(M, M, M, raw, raw, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
}

FftGrid::~FftGrid() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    fftw_free(buf_);
}

void FftGrid::forward() { fftw_execute(static_cast<fftw_plan>(plan_fwd_)); }
void FftGrid::backward() { fftw_execute(static_cast<fftw_plan>(plan_bwd_)); }

int good_fft_size(int m) {
    for (int s = m;; ++s) {
        int r = s;
        for (int p : {2, 3, 5})
            while (r % p == 0) r /= p;
        if (r == 1) return s;
    }
}

}  // namespace gnse
