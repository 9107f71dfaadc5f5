#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "breadthlab/kernels.hpp"

using namespace breadthlab;
namespace k = breadthlab::kernels;

namespace {

std::vector<Point> random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> p(n + 1, 0);  // trailing padding slot
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Point>(i);
  std::shuffle(p.begin(), p.begin() + n, rng);
  return p;
}

}  // namespace

TEST_CASE("scalar kernels") {
  const std::vector<Point> a{1, 2, 0, 3, 0};
  const std::vector<Point> b{0, 0, 2, 1, 3};
  std::vector<Point> out(4);
  k::scalar::compose({a.data(), 4}, {b.data(), 4}, out);
  CHECK(out == std::vector<Point>{1, 1, 0, 2});
  CHECK(k::scalar::count_fixed_points({a.data(), 4}) == 1);
}

TEST_CASE("AVX2 kernels agree with scalar") {
  if (!k::avx2::supported()) {
    MESSAGE("AVX2 unavailable; skipping");
    return;
  }
  std::mt19937 rng(20261015);
  for (std::size_t n : {1, 2, 7, 15, 16, 17, 31, 65, 100, 1000, 4097, 65536}) {
    CAPTURE(n);
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_perm(n, rng);
      const auto b = random_perm(n, rng);
      std::vector<Point> s(n), v(n);
      k::scalar::compose({a.data(), n}, {b.data(), n}, s);
      k::avx2::compose({a.data(), n}, {b.data(), n}, v);
      CHECK(s == v);
      CHECK(k::scalar::count_fixed_points({a.data(), n}) == k::avx2::count_fixed_points({a.data(), n}));
    }
    std::vector<Point> id(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<Point>(i);
    CHECK(k::avx2::count_fixed_points({id.data(), n}) == n);
  }
}

TEST_CASE("dispatch") {
  const auto saved = k::active_isa();
  k::set_active_isa(k::Isa::scalar);
  CHECK(k::active_isa() == k::Isa::scalar);
  CHECK(k::isa_name(k::Isa::scalar) == "scalar");
  if (k::avx2::supported()) {
    k::set_active_isa(k::Isa::avx2);
    CHECK(k::active_isa() == k::Isa::avx2);
  } else {
    CHECK_THROWS_AS(k::set_active_isa(k::Isa::avx2), std::invalid_argument);
  }
  k::set_active_isa(saved);
}
