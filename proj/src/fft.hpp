#pragma once

// Thin RAII wrapper over an FFTW complex-to-complex plan pair operating in
// place on an owned, aligned buffer. Plans are created with FFTW_ESTIMATE so
// results do not depend on timing measurements.

#include <complex>
#include <cstddef>
#include <span>

#include <fftw3.h>

namespace fho::detail {

class Fft {
 public:
  explicit Fft(std::size_t n);
  ~Fft();

  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  std::span<std::complex<double>> buffer() noexcept { return {data_, n_}; }
  std::size_t size() const noexcept { return n_; }

  // Unnormalized: backward(forward(x)) = n x.
  void forward();
  void backward();

 private:
  std::size_t n_;
  std::complex<double>* data_ = nullptr;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

/// Signed DFT frequency index for bin k of an n-point transform.
inline long signed_index(std::size_t k, std::size_t n) {
  return k < n / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
}

}  // namespace fho::detail
