#pragma once

// Inner loops over permutation image arrays. Each kernel has a scalar
// reference implementation and, on x86-64, an AVX2 variant; the variant is
// chosen once at startup from CPUID (override with BREADTHLAB_SIMD=scalar).
//
// Padding contract: the vector gather reads one Point past the end of the
// table it gathers from. Every buffer passed as `table` must therefore be
// followed by at least one readable Point. Perm and Group storage satisfy this.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace breadthlab {

using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = std::size_t{1} << 16;

namespace kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Best ISA the running CPU supports.
Isa detected_isa();

/// ISA the dispatched entry points currently use.
Isa active_isa();

/// Forces the dispatch target (tests use this to pin the scalar path).
/// Throws std::invalid_argument when the CPU lacks the requested ISA.
void set_active_isa(Isa isa);

/// out[i] = table[index[i]], i.e. the permutation "table after index".
void compose(std::span<const Point> table, std::span<const Point> index, std::span<Point> out);

/// Number of i with image[i] == i.
std::size_t count_fixed_points(std::span<const Point> image);

namespace scalar {
void compose(std::span<const Point> table, std::span<const Point> index, std::span<Point> out);
std::size_t count_fixed_points(std::span<const Point> image);
}  // namespace scalar

namespace avx2 {
bool supported();
void compose(std::span<const Point> table, std::span<const Point> index, std::span<Point> out);
std::size_t count_fixed_points(std::span<const Point> image);
}  // namespace avx2

}  // namespace kernels
}  // namespace breadthlab
