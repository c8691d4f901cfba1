#pragma once

// Test-only oracles and random generators. Nothing here calls into the
// library routine it is used to check.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include "lk/matrix.hpp"
#include "lk/poly.hpp"

namespace lk::testing {

using Rng = std::mt19937_64;

/// Laplace expansion along the first row.
inline Rat cofactor_det(const MatQ& a) {
  const std::size_t n = a.dim();
  if (n == 1) return a(0, 0);
  Rat out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    MatQ sub(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) sub(i - 1, cc++) = a(i, c);
    const Rat term = a(0, j) * cofactor_det(sub);
    out += (j % 2 == 0) ? term : Rat(-term);
  }
  return out;
}

/// Naive triple-loop product.
inline MatQ naive_mul(const MatQ& a, const MatQ& b) {
  MatQ out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

inline std::uint64_t brute_totient(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

/// Pascal-triangle binomial, independent of GMP's mpz_bin.
inline std::int64_t pascal_binom(std::int64_t p, std::int64_t q) {
  if (q < 0 || q > p) return 0;
  std::vector<std::int64_t> row{1};
  for (std::int64_t i = 1; i <= p; ++i) {
    std::vector<std::int64_t> next(row.size() + 1, 1);
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = next;
  }
  return row[static_cast<std::size_t>(q)];
}

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Small rational with numerator in [-bound, bound] and denominator 1..3.
inline Rat random_rat(Rng& rng, std::int64_t bound = 5) {
  Rat v(static_cast<long>(uniform(rng, -bound, bound)), static_cast<unsigned long>(uniform(rng, 1, 3)));
  v.canonicalize();
  return v;
}

inline Rat random_int(Rng& rng, std::int64_t bound = 3) { return Rat(static_cast<long>(uniform(rng, -bound, bound))); }

inline MatQ random_matrix(Rng& rng, std::size_t dim, std::int64_t bound = 5) {
  MatQ out(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out(i, j) = random_rat(rng, bound);
  return out;
}

/// Random matrix whose index is exactly `index` (entries with i - j > index
/// vanish, some entry on that diagonal does not). |index| < dim.
inline MatQ random_with_index(Rng& rng, std::size_t dim, std::int64_t index) {
  MatQ out(dim);
  const auto n = static_cast<std::int64_t>(dim);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (i - j <= index && uniform(rng, 0, 2) > 0) out(i, j) = random_rat(rng);
  // force a nonzero entry on the index diagonal
  std::vector<std::int64_t> rows;
  for (std::int64_t i = 0; i < n; ++i)
    if (i - index >= 0 && i - index < n) rows.push_back(i);
  const std::int64_t i = rows[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(rows.size()) - 1))];
  out(i, i - index) = static_cast<long>(uniform(rng, 1, 4));
  return out;
}

/// Upper triangular with diagonal entries in {1, -1}: quasi-unipotent.
inline MatQ random_upper_qu(Rng& rng, std::size_t dim, std::int64_t bound = 3) {
  MatQ out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out(i, i) = uniform(rng, 0, 1) ? 1 : -1;
    for (std::size_t j = i + 1; j < dim; ++j) out(i, j) = random_int(rng, bound);
  }
  return out;
}

/// Integer matrix with determinant 1 (product of unit lower and unit upper
/// triangular factors), so its inverse is integral too.
inline MatQ random_unimodular(Rng& rng, std::size_t dim, std::int64_t bound = 2) {
  MatQ lower = MatQ::identity(dim), upper = MatQ::identity(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = random_int(rng, bound);
      upper(j, i) = random_int(rng, bound);
    }
  return naive_mul(lower, upper);
}

/// Inverse by the adjugate formula; independent of Gauss-Jordan.
inline MatQ adjugate_inverse(const MatQ& a) {
  const std::size_t n = a.dim();
  const Rat d = cofactor_det(a);
  MatQ out(n);
  if (n == 1) {
    out(0, 0) = 1 / d;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MatQ sub(n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != j) sub(rr, cc++) = a(r, c);
        ++rr;
      }
      Rat cof = cofactor_det(sub);
      if ((i + j) % 2) cof = -cof;
      out(j, i) = cof / d;
    }
  return out;
}

inline MatQ canonical_block(std::size_t dim) { return MatQ::identity(dim) + MatQ::shift(dim); }

}  // namespace lk::testing

namespace lk {

// Readable gtest failure output.
inline void PrintTo(const MatQ& a, std::ostream* os) { *os << "\n" << to_string(a); }
inline void PrintTo(const UniPoly& p, std::ostream* os) { *os << to_string(p); }

}  // namespace lk
