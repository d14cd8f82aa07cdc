#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sysrep/matrix.hpp"

namespace sysrep::testing {

inline Polynomial poly(const Field& f, std::initializer_list<std::int64_t> low_first) {
  std::vector<Element> c;
  for (auto v : low_first) c.push_back(f.from_int(v));
  return Polynomial(f, std::move(c));
}

inline Vector vec(const Field& f, std::initializer_list<std::int64_t> entries) {
  Vector v;
  for (auto e : entries) v.push_back(f.from_int(e));
  return v;
}

inline Matrix fibonacci(const Field& f) { return Matrix::from_ints(f, {{1, 1}, {1, 0}}); }

inline Matrix diagonal(const Field& f, std::initializer_list<std::int64_t> d) {
  Matrix m(f, d.size(), d.size());
  std::size_t i = 0;
  for (auto v : d) {
    m(i, i) = f.from_int(v);
    ++i;
  }
  return m;
}

inline Matrix random_matrix(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.random(rng);
  }
  return m;
}

/// Random matrices with more structure than uniform entries: conjugates of
/// block-diagonal companions so repeated factors and non-cyclic cases show up.
inline Matrix random_structured_matrix(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  if (pick(rng) == 0) return random_matrix(f, n, rng);
  std::vector<Matrix> blocks;
  std::size_t used = 0;
  while (used < n) {
    std::uniform_int_distribution<std::size_t> size(1, std::min<std::size_t>(3, n - used));
    const std::size_t d = size(rng);
    std::vector<Element> c(d + 1);
    for (std::size_t i = 0; i < d; ++i) c[i] = f.random(rng);
    c[d] = f.one();
    Polynomial g(f, std::move(c));
    blocks.push_back(companion(g));
    // Occasionally repeat a block to force repeated invariant factors.
    if (used + 2 * d <= n && pick(rng) == 0) {
      blocks.push_back(companion(g));
      used += d;
    }
    used += d;
  }
  const Matrix c = Matrix::block_diagonal(f, blocks);
  for (;;) {
    Matrix p = random_matrix(f, n, rng);
    if (rank(p) == n) return inverse(p) * c * p;
  }
}

inline Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_structured_matrix(f, n, rng);
    if (rank(m) == n) return m;
  }
}

inline Polynomial random_poly(const Field& f, int degree, std::mt19937_64& rng) {
  std::vector<Element> c(static_cast<std::size_t>(degree) + 1);
  for (auto& e : c) e = f.random(rng);
  return Polynomial(f, std::move(c));
}

/// Naive order of A: multiply until the identity comes back.
inline std::uint64_t naive_order(const Matrix& a, std::uint64_t limit = 1'000'000) {
  Matrix p = a;
  for (std::uint64_t t = 1; t <= limit; ++t) {
    if (p.is_identity()) return t;
    p = p * a;
  }
  return 0;
}

}  // namespace sysrep::testing
