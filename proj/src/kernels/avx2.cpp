#include <immintrin.h>

#include <cmath>

#include "pax/kernels/kernels.hpp"

namespace pax::kernels::detail {

namespace {

void rank1_subtract_avx2(double* m, std::size_t rows, std::size_t cols, const double* u, const double* v) {
  for (std::size_t i = 0; i < rows; ++i) {
    double* row = m + i * cols;
    const __m256d ui = _mm256_set1_pd(u[i]);
    std::size_t j = 0;
    for (; j + 4 <= cols; j += 4) {
      const __m256d prod = _mm256_mul_pd(ui, _mm256_loadu_pd(v + j));
      _mm256_storeu_pd(row + j, _mm256_sub_pd(_mm256_loadu_pd(row + j), prod));
    }
    for (; j < cols; ++j) row[j] -= u[i] * v[j];
  }
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(a, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void column_mean_std_avx2(const double* const* rows, std::size_t num_rows, std::size_t cols, double* mean,
                          double* stddev) {
  const double n = static_cast<double>(num_rows);
  const __m256d vn = _mm256_set1_pd(n);
  const __m256d vn1 = _mm256_set1_pd(n - 1.0);
  std::size_t j = 0;
  for (; j + 4 <= cols; j += 4) {
    __m256d sum = _mm256_setzero_pd();
    for (std::size_t r = 0; r < num_rows; ++r) sum = _mm256_add_pd(sum, _mm256_loadu_pd(rows[r] + j));
    const __m256d m = _mm256_div_pd(sum, vn);
    __m256d ss = _mm256_setzero_pd();
    for (std::size_t r = 0; r < num_rows; ++r) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(rows[r] + j), m);
      ss = _mm256_add_pd(ss, _mm256_mul_pd(d, d));
    }
    _mm256_storeu_pd(mean + j, m);
    if (num_rows > 1) {
      _mm256_storeu_pd(stddev + j, _mm256_sqrt_pd(_mm256_div_pd(ss, vn1)));
    } else {
      _mm256_storeu_pd(stddev + j, _mm256_setzero_pd());
    }
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

const KernelTable avx2_table{Isa::avx2, rank1_subtract_avx2, axpy_avx2, column_mean_std_avx2};

}  // namespace pax::kernels::detail
