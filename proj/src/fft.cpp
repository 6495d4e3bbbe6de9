#include "fft.hpp"

#include <mutex>
#include <new>

namespace fho::detail {

namespace {
// FFTW's planner is not thread-safe; execution of an existing plan is.
std::mutex planner_mutex;
}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
  std::lock_guard lock(planner_mutex);
  data_ = reinterpret_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (data_ == nullptr) throw std::bad_alloc();
  auto* raw = reinterpret_cast<fftw_complex*>(data_);
  const int len = static_cast<int>(n);
  forward_ = fftw_plan_dft_1d(len, raw, raw, FFTW_FORWARD, FFTW_ESTIMATE);
  backward_ = fftw_plan_dft_1d(len, raw, raw, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft::~Fft() {
  std::lock_guard lock(planner_mutex);
  if (forward_) fftw_destroy_plan(forward_);
  if (backward_) fftw_destroy_plan(backward_);
  fftw_free(data_);
}

void Fft::forward() { fftw_execute(forward_); }
void Fft::backward() { fftw_execute(backward_); }

}  // namespace fho::detail
