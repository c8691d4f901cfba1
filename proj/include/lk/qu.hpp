#pragma once

/**
 * @file qu.hpp
 * @brief Quasi-unipotence over Q and single-Jordan-block structure.
 *
 * A rational matrix of dimension d is quasi-unipotent iff every root of its
 * characteristic polynomial is a root of unity. Such a root is a primitive
 * n-th root with phi(n) <= d, so it is an Nmax-th root of unity where Nmax
 * is the lcm of all such n. The decision therefore reduces to
 * x^Nmax = 1 modulo the squarefree part of the characteristic polynomial.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "lk/index.hpp"
#include "lk/matrix.hpp"
#include "lk/poly.hpp"

namespace lk {

struct QuReport {
  bool is_quasi_unipotent = false;
  std::optional<std::uint64_t> unipotent_order;
  /// Monic product of the irreducible factors of the characteristic
  /// polynomial whose roots are not roots of unity.
  std::optional<UniPoly> witness_factor;
};

/// (A - I)^dim = 0.
inline bool is_unipotent(const MatQ& a) {
  return mat_pow(a - MatQ::identity(a.dim()), a.dim()).is_zero();
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline QuReport is_quasi_unipotent(const MatQ& a) {
  const UniPoly q = squarefree_part(char_poly(a));
  const std::uint64_t nmax = max_root_of_unity_exponent(a.dim());
  const UniPoly one = UniPoly::constant(1);
  QuReport report;
  if (pow_x_mod(nmax, q) != one % q) {
    // gcd(q, x^Nmax - 1) collects the cyclotomic factors of q; the
    // complement is the offending part.
    const UniPoly cyclotomic_part = gcd(q, pow_x_mod(nmax, q) - one);
    report.witness_factor = (q / cyclotomic_part).monic();
    return report;
  }
  report.is_quasi_unipotent = true;
  for (auto e : divisors(nmax)) {
    if (pow_x_mod(e, q) != one % q) continue;
    if (!is_unipotent(mat_pow(a, e)))
      throw TheoremFalsified("x^" + std::to_string(e) + " = 1 mod squarefree char poly but A^" +
                             std::to_string(e) + " is not unipotent");
    report.unipotent_order = e;
    break;
  }
  return report;
}

struct SingleBlockResult {
  bool single = false;
  /// Set whenever the characteristic polynomial is a pure power (x - lambda)^d.
  std::optional<Rat> eigenvalue;
};

/// True iff char_poly(B) = (x - lambda)^dim with lambda in {1, -1} and
/// rank(B - lambda I) = dim - 1. Over Q these are the only candidates: a
/// repeated irrational root would bring its conjugates along.
inline SingleBlockResult is_single_jordan_block(const MatQ& b) {
  const std::size_t n = b.dim();
  SingleBlockResult out;
  const Rat lambda = trace(b) / Rat(static_cast<long>(n));
  if (char_poly(b) != linear_power(lambda, n)) return out;
  out.eigenvalue = lambda;
  if (lambda != 1 && lambda != -1) return out;
  out.single = rank(b - lambda * MatQ::identity(n)) == n - 1;
  return out;
}

/// P with P^{-1} B P = I + N for a unipotent single block B. Columns are
/// (B-I)^m w, ..., (B-I) w, w for the first standard vector w with
/// (B-I)^m w != 0, scaled so the leading eigenvector has first nonzero
/// coordinate 1.
inline MatQ jordan_basis_single_block(const MatQ& b) {
  const auto sb = is_single_jordan_block(b);
  if (!sb.single || *sb.eigenvalue != 1)
    throw DomainError("jordan_basis_single_block: B is not a unipotent single Jordan block");
  const std::size_t n = b.dim();
  const MatQ nil = b - MatQ::identity(n);
  const MatQ top = mat_pow(nil, n - 1);
  std::size_t pick = 0;
  while (pick < n && top.column(pick) == VecQ(n)) ++pick;
  if (pick == n) throw TheoremFalsified("single block B with (B-I)^m = 0");

  VecQ w(n);
  w[pick] = 1;
  const VecQ eig = top * w;
  const auto lead = std::find_if(eig.begin(), eig.end(), [](const Rat& v) { return v != 0; });
  const Rat scale = 1 / *lead;
  for (auto& v : w) v *= scale;

  std::vector<VecQ> cols(n);
  cols[n - 1] = w;
  for (std::size_t i = n - 1; i-- > 0;) cols[i] = nil * cols[i + 1];
  MatQ p = from_columns(cols);
  if (inverse(p) * b * p != MatQ::identity(n) + MatQ::shift(n))
    throw TheoremFalsified("jordan basis failed to conjugate B to I + N");
  return p;
}

/// Anything commuting with the canonical block I + N is upper triangular.
inline bool centralizer_is_upper_triangular_check(const MatQ& m, const MatQ& j) {
  m.require_same_dim(j);
  const std::size_t n = j.dim();
  if (j != MatQ::identity(n) + MatQ::shift(n))
    throw DomainError("centralizer check: J must be the canonical block I + N");
  if (m * j != j * m) throw DomainError("centralizer check: M does not commute with J");
  return is_upper_triangular(m);
}

/// Companion matrix of a monic polynomial (ones on the subdiagonal, negated
/// coefficients in the last column).
inline MatQ companion(const UniPoly& p) {
  if (p.degree() < 1 || p.leading() != 1) throw DomainError("companion: need monic, degree >= 1");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  MatQ out(n);
  for (std::size_t i = 1; i < n; ++i) out(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) out(i, n - 1) = -p.coeffs()[i];
  return out;
}

/// n-th cyclotomic polynomial, by dividing x^n - 1 by Phi_d for d | n, d < n.
inline UniPoly cyclotomic(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic: n must be positive");
  UniPoly out = UniPoly::monomial(1, n) - UniPoly::constant(1);
  for (auto d : divisors(n))
    if (d < n) out = out / cyclotomic(d);
  return out;
}

}  // namespace lk
