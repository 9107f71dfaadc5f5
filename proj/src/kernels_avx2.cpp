#include "breadthlab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define BREADTHLAB_X86 1
#include <immintrin.h>
#else
#define BREADTHLAB_X86 0
#endif

namespace breadthlab::kernels::avx2 {

#if BREADTHLAB_X86

bool supported() {
  static const bool ok = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return ok;
}

// Eight lanes per step: widen eight u16 indices to i32, gather the dword at
// table + 2*index (low half is the wanted Point, high half is the neighbour or
// the padding slot), then narrow back.
__attribute__((target("avx2"))) void compose(std::span<const Point> table,
                                             std::span<const Point> index,
                                             std::span<Point> out) {
  const std::size_t n = index.size();
  const auto* base = reinterpret_cast<const int*>(table.data());
  const __m256i low16 = _mm256_set1_epi32(0xFFFF);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m128i idx16 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(index.data() + i));
    const __m256i idx32 = _mm256_cvtepu16_epi32(idx16);
    __m256i g = _mm256_i32gather_epi32(base, idx32, 2);
    g = _mm256_and_si256(g, low16);
    const __m128i packed =
        _mm_packus_epi32(_mm256_castsi256_si128(g), _mm256_extracti128_si256(g, 1));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out.data() + i), packed);
  }
  for (; i < n; ++i) out[i] = table[index[i]];
}

__attribute__((target("avx2"))) std::size_t count_fixed_points(std::span<const Point> image) {
  const std::size_t n = image.size();
  __m256i lane = _mm256_setr_epi16(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  const __m256i step = _mm256_set1_epi16(16);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(image.data() + i));
    const unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(v, lane)));
    count += static_cast<std::size_t>(__builtin_popcount(mask)) / 2;
    lane = _mm256_add_epi16(lane, step);
  }
  for (; i < n; ++i) count += image[i] == i;
  return count;
}

#else

bool supported() { return false; }

void compose(std::span<const Point> table, std::span<const Point> index, std::span<Point> out) {
  scalar::compose(table, index, out);
}

std::size_t count_fixed_points(std::span<const Point> image) {
  return scalar::count_fixed_points(image);
}

#endif

}  // namespace breadthlab::kernels::avx2
