#pragma once

#include <complex>
#include <vector>

namespace gnse {

// In-place n-dimensional complex DFT on an M^n grid (FFTW backend).
// forward() computes sum_x f(x) e^{-i 2pi k.x/M} (unnormalized),
// backward() the conjugate transform.
class FftGrid {
  public:
    FftGrid(int n, int M);
    ~FftGrid();
    FftGrid(const FftGrid&) = delete;
    FftGrid& operator=(const FftGrid&) = delete;

    int n() const { return n_; }
    int M() const { return M_; }
    size_t points() const { return pts_; }

    std::complex<double>* data() { return buf_; }
    void forward();
    void backward();

  private:
    int n_, M_;
    size_t pts_;
    std::complex<double>* buf_;
    void* plan_fwd_;
    void* plan_bwd_;
};

// Smallest grid size >= m whose prime factors are all in {2,3,5}.
int good_fft_size(int m);

}  // namespace gnse
