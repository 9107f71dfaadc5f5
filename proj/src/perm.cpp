#include "breadthlab/perm.hpp"

#include <algorithm>
#include <numeric>

#include "breadthlab/error.hpp"

namespace breadthlab {

Perm::Perm(std::span<const Point> image) {
  const std::size_t n = image.size();
  if (n == 0 || n > kMaxDegree) throw DomainError("permutation degree out of range");
  std::vector<bool> seen(n, false);
  for (Point x : image) {
    if (x >= n || seen[x]) throw DomainError("image is not a bijection");
    seen[x] = true;
  }
  storage_.assign(image.begin(), image.end());
  storage_.push_back(0);
}

Perm Perm::identity(std::size_t n) {
  if (n == 0 || n > kMaxDegree) throw DomainError("permutation degree out of range");
  Perm p;
  p.storage_.resize(n + 1);
  std::iota(p.storage_.begin(), p.storage_.end() - 1, Point{0});
  p.storage_.back() = 0;
  return p;
}

Perm Perm::from_cycles(std::size_t n, std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    const std::vector<Point> c(cyc);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n || used[c[i]]) throw DomainError("cycles are not disjoint points of the domain");
      used[c[i]] = true;
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::span<const Point>(img));
}

bool Perm::is_identity() const {
  return kernels::count_fixed_points(image()) == degree();
}

bool Perm::operator==(const Perm& o) const {
  return std::ranges::equal(image(), o.image());
}

std::strong_ordering Perm::operator<=>(const Perm& o) const {
  return std::lexicographical_compare_three_way(image().begin(), image().end(), o.image().begin(),
                                                o.image().end());
}

std::string Perm::cycle_string() const {
  std::string s;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || storage_[i] == i) continue;
    s += '(';
    for (std::size_t j = i; !seen[j]; j = storage_[j]) {
      if (s.back() != '(') s += ' ';
      s += std::to_string(j);
      seen[j] = true;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw DomainError("compose: degree mismatch");
  Perm r;
  r.storage_.resize(a.degree() + 1, 0);
  kernels::compose(std::span<const Point>(a.storage_.data(), a.degree()), b.image(),
                   std::span<Point>(r.storage_.data(), a.degree()));
  return r;
}

Perm inverse(const Perm& a) {
  Perm r;
  r.storage_.resize(a.degree() + 1, 0);
  for (std::size_t i = 0; i < a.degree(); ++i) r.storage_[a.storage_[i]] = static_cast<Point>(i);
  return r;
}

u64 perm_order(std::span<const Point> image) {
  const std::size_t n = image.size();
  std::vector<bool> seen(n, false);
  u64 order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    u64 len = 0;
    for (std::size_t j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::vector<std::size_t> cycle_type(std::span<const Point> image) {
  const std::size_t n = image.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace breadthlab
