#include <cmath>

#include "pax/kernels/kernels.hpp"

namespace pax::kernels::detail {

namespace {

void rank1_subtract_scalar(double* m, std::size_t rows, std::size_t cols, const double* u, const double* v) {
  for (std::size_t i = 0; i < rows; ++i) {
    double* row = m + i * cols;
    for (std::size_t j = 0; j < cols; ++j) row[j] -= u[i] * v[j];
  }
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void column_mean_std_scalar(const double* const* rows, std::size_t num_rows, std::size_t cols, double* mean,
                            double* stddev) {
  const double n = static_cast<double>(num_rows);
  for (std::size_t j = 0; j < cols; ++j) {
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

const KernelTable scalar_table{Isa::scalar, rank1_subtract_scalar, axpy_scalar, column_mean_std_scalar};

}  // namespace pax::kernels::detail
