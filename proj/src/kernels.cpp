#include "breadthlab/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace breadthlab::kernels {

namespace scalar {

void compose(std::span<const Point> table, std::span<const Point> index, std::span<Point> out) {
  const std::size_t n = index.size();
  for (std::size_t i = 0; i < n; ++i) out[i] = table[index[i]];
}

std::size_t count_fixed_points(std::span<const Point> image) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < image.size(); ++i) c += image[i] == i;
  return c;
}

}  // namespace scalar

namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("BREADTHLAB_SIMD"); env && std::string(env) == "scalar")
    return Isa::scalar;
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa() { return avx2::supported() ? Isa::avx2 : Isa::scalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2::supported())
    throw std::invalid_argument("AVX2 not supported on this CPU");
  active().store(isa, std::memory_order_relaxed);
}

void compose(std::span<const Point> table, std::span<const Point> index, std::span<Point> out) {
  if (active_isa() == Isa::avx2)
    avx2::compose(table, index, out);
  else
    scalar::compose(table, index, out);
}

std::size_t count_fixed_points(std::span<const Point> image) {
  return active_isa() == Isa::avx2 ? avx2::count_fixed_points(image)
                                   : scalar::count_fixed_points(image);
}

}  // namespace breadthlab::kernels
