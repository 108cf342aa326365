#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "pax/kernels/kernels.hpp"

namespace pax::kernels {

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &detail::scalar_table;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (__builtin_cpu_supports("avx2")) return &detail::avx2_table;
#endif
      return nullptr;
    case Isa::neon:
#if defined(__aarch64__)
      return &detail::neon_table;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (table_for(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

namespace {

const KernelTable& select() {
  if (const char* req = std::getenv("PAX_ISA")) {
    const std::string_view name(req);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (name == isa_name(isa)) {
        const KernelTable* t = table_for(isa);
        return t != nullptr ? *t : detail::scalar_table;
      }
    }
  }
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (const KernelTable* t = table_for(isa)) return *t;
  }
  return detail::scalar_table;
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

void rank1_subtract(std::span<double> m, std::size_t cols, std::span<const double> u, std::span<const double> v) {
  if (v.size() != cols || m.size() != u.size() * cols)
    throw std::invalid_argument("rank1_subtract: shape mismatch");
  active().rank1_subtract(m.data(), u.size(), cols, u.data(), v.data());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: length mismatch");
  active().axpy(alpha, x.data(), y.data(), x.size());
}

void column_mean_std(std::span<const std::span<const double>> rows, std::span<double> mean,
                     std::span<double> stddev) {
  if (rows.empty()) throw std::invalid_argument("column_mean_std: no rows");
  const std::size_t cols = mean.size();
  if (stddev.size() != cols) throw std::invalid_argument("column_mean_std: output length mismatch");
  std::vector<const double*> ptrs;
  ptrs.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() < cols) throw std::invalid_argument("column_mean_std: row shorter than output");
    ptrs.push_back(r.data());
  }
  active().column_mean_std(ptrs.data(), ptrs.size(), cols, mean.data(), stddev.data());
}

}  // namespace pax::kernels
