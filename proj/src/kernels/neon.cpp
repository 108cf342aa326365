#include <arm_neon.h>

#include <cmath>

#include "pax/kernels/kernels.hpp"

namespace pax::kernels::detail {

namespace {

void rank1_subtract_neon(double* m, std::size_t rows, std::size_t cols, const double* u, const double* v) {
  for (std::size_t i = 0; i < rows; ++i) {
    double* row = m + i * cols;
    const float64x2_t ui = vdupq_n_f64(u[i]);
    std::size_t j = 0;
    for (; j + 2 <= cols; j += 2) {
      const float64x2_t prod = vmulq_f64(ui, vld1q_f64(v + j));
      vst1q_f64(row + j, vsubq_f64(vld1q_f64(row + j), prod));
    }
    for (; j < cols; ++j) row[j] -= u[i] * v[j];
  }
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t a = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t prod = vmulq_f64(a, vld1q_f64(x + i));
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), prod));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void column_mean_std_neon(const double* const* rows, std::size_t num_rows, std::size_t cols, double* mean,
                          double* stddev) {
  const double n = static_cast<double>(num_rows);
  const float64x2_t vn = vdupq_n_f64(n);
  const float64x2_t vn1 = vdupq_n_f64(n - 1.0);
  std::size_t j = 0;
  for (; j + 2 <= cols; j += 2) {
    float64x2_t sum = vdupq_n_f64(0.0);
    for (std::size_t r = 0; r < num_rows; ++r) sum = vaddq_f64(sum, vld1q_f64(rows[r] + j));
    const float64x2_t m = vdivq_f64(sum, vn);
    float64x2_t ss = vdupq_n_f64(0.0);
    for (std::size_t r = 0; r < num_rows; ++r) {
      const float64x2_t d = vsubq_f64(vld1q_f64(rows[r] + j), m);
      ss = vaddq_f64(ss, vmulq_f64(d, d));
    }
    vst1q_f64(mean + j, m);
    vst1q_f64(stddev + j, num_rows > 1 ? vsqrtq_f64(vdivq_f64(ss, vn1)) : vdupq_n_f64(0.0));
  }
  for (; j < cols; ++j) {
    double sum = 0.0;
    for (std::size_t r = 0; r < num_rows; ++r) sum += rows[r][j];
    const double m = sum / n;
    double ss = 0.0;
    for (std::size_t r = 0; r < num_rows; ++r) {
      const double d = rows[r][j] - m;
      ss += d * d;
    }
    mean[j] = m;
    stddev[j] = num_rows > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  }
}

}  // namespace

const KernelTable neon_table{Isa::neon, rank1_subtract_neon, axpy_neon, column_mean_std_neon};

}  // namespace pax::kernels::detail
