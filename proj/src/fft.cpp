#include "hodge/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace hodge {

namespace {
// Only fftw_execute is thread-safe; planning and destruction are not.
std::mutex planner_mutex;
} // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_nd(std::vector<Complex> &data, int dims, std::size_t n, int sign) {
  if (dims < 1 || dims > 8)
    throw std::invalid_argument("fft_nd: unsupported dimension");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("fft_nd: sign must be +1 or -1");
  std::size_t total = 1;
  int shape[8];
  for (int a = 0; a < dims; ++a) {
    total *= n;
    shape[a] = static_cast<int>(n);
  }
  if (data.size() != total)
    throw std::invalid_argument("fft_nd: data size does not match shape");
  auto *ptr = reinterpret_cast<fftw_complex *>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    plan = fftw_plan_dft(dims, shape, ptr, ptr, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (!plan)
    throw std::runtime_error("fft_nd: FFTW planning failed");
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(planner_mutex);
  fftw_destroy_plan(plan);
}

} // namespace hodge
