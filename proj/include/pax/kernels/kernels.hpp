#pragma once

// Data-parallel inner loops used by the Kalman filter and the run
// aggregator. Each kernel has a scalar reference implementation and SIMD
// variants chosen once at runtime from the host CPU. Variants only use
// lane-wise IEEE operations (add, sub, mul, div, sqrt) in the same order
// as the scalar code, so every variant is bit-identical to the reference.

#include <cstddef>
#include <span>
#include <vector>

namespace pax::kernels {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  // m[i * cols + j] -= u[i] * v[j]
  void (*rank1_subtract)(double* m, std::size_t rows, std::size_t cols, const double* u, const double* v);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // Per-column sample mean and standard deviation (n - 1 denominator, zero
  // for a single row) of a matrix given as row pointers.
  void (*column_mean_std)(const double* const* rows, std::size_t num_rows, std::size_t cols, double* mean,
                          double* stddev);
};

const char* isa_name(Isa isa);

// Table for a specific ISA, or nullptr when it is not compiled in or the
// host cannot run it.
const KernelTable* table_for(Isa isa);

// Every ISA usable on this host, scalar first.
std::vector<Isa> available_isas();

// Best available table. Setting PAX_ISA=scalar (or avx2/neon) in the
// environment pins the choice; an unusable request falls back to scalar.
const KernelTable& active();

// Span-checked front ends over active().
void rank1_subtract(std::span<double> m, std::size_t cols, std::span<const double> u, std::span<const double> v);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void column_mean_std(std::span<const std::span<const double>> rows, std::span<double> mean,
                     std::span<double> stddev);

namespace detail {
extern const KernelTable scalar_table;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_table;
#endif
#if defined(__aarch64__)
extern const KernelTable neon_table;
#endif
}  // namespace detail

}  // namespace pax::kernels
