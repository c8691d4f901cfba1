#pragma once

/**
 * @file tracepoly.hpp
 * @brief tr((A B^n)^k) as an exact polynomial in n, and a finite decision
 *        procedure for "tr((A B^n)^k) is independent of n for every k".
 *
 * With B = I + N unipotent and N^{m+1} = 0,
 *
 *   (A B^n)^k = sum over (i_1..i_k) in {0..m}^k of
 *               C(n,i_1)...C(n,i_k) A N^{i_1} ... A N^{i_k}.
 *
 * expand_trace_poly evaluates this sum with compositions sharing a prefix
 * merged: after t factors the partial sum is a matrix whose entries are
 * polynomials in n, and one more factor multiplies by sum_i C(n,i) A N^i.
 * trace_poly_interpolated is the independent route: sample the trace
 * directly and interpolate.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "lk/index.hpp"
#include "lk/matrix.hpp"
#include "lk/poly.hpp"
#include "lk/qu.hpp"

namespace lk {

struct TracePoly {
  std::uint64_t k = 0;
  UniPoly poly;  // variable n
  friend bool operator==(const TracePoly&, const TracePoly&) = default;
};

struct TraceWitness {
  std::uint64_t k = 0;
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  Rat t1;
  Rat t2;
  friend bool operator==(const TraceWitness&, const TraceWitness&) = default;
};

struct HypothesisReport {
  bool verdict = false;
  std::vector<std::uint64_t> checked_k;
  /// The hypothesis is decided for B^b_power, the unipotent power of B (1 or 2).
  std::uint64_t b_power = 1;
  std::optional<TraceWitness> witness;
};

namespace detail {

inline void require_unipotent_block(const MatQ& b) {
  if (!is_unipotent(b) || !is_single_jordan_block(b).single)
    throw DomainError("B must be a unipotent single Jordan block");
}

// Matrix with polynomial entries, stored as coefficient matrices by degree.
using PolyMat = std::vector<MatQ>;

inline PolyMat poly_mat_mul(const PolyMat& a, const PolyMat& b) {
  const std::size_t n = a.front().dim();
  PolyMat out(a.size() + b.size() - 1, MatQ(n));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

}  // namespace detail

inline TracePoly expand_trace_poly(const MatQ& a, const MatQ& b, std::uint64_t k) {
  a.require_same_dim(b);
  if (k == 0) throw DomainError("expand_trace_poly: k must be positive");
  detail::require_unipotent_block(b);
  const std::size_t dim = a.dim();
  const std::size_t m = dim - 1;
  const MatQ nil = b - MatQ::identity(dim);

  // One factor A B^n = sum_{i<=m} C(n,i) A N^i, regrouped by powers of n.
  detail::PolyMat factor(m + 1, MatQ(dim));
  MatQ a_ni = a;
  for (std::size_t i = 0; i <= m; ++i) {
    const UniPoly weight = binom_poly(i);
    for (int d = 0; d <= weight.degree(); ++d) factor[d] += weight.coeffs()[d] * a_ni;
    a_ni = a_ni * nil;
  }

  detail::PolyMat power = factor;
  for (std::uint64_t t = 1; t < k; ++t) power = detail::poly_mat_mul(power, factor);

  std::vector<Rat> coeffs;
  for (const auto& c : power) coeffs.push_back(trace(c));
  return {k, UniPoly(std::move(coeffs))};
}

/// tr((A B^n)^k) sampled at n = 0..k*m+1 and interpolated.
inline TracePoly trace_poly_interpolated(const MatQ& a, const MatQ& b, std::uint64_t k) {
  a.require_same_dim(b);
  if (k == 0) throw DomainError("trace_poly_interpolated: k must be positive");
  detail::require_unipotent_block(b);
  const std::uint64_t samples = k * (a.dim() - 1) + 2;
  std::vector<std::pair<Rat, Rat>> points;
  MatQ b_pow = MatQ::identity(a.dim());
  for (std::uint64_t n = 0; n < samples; ++n) {
    points.emplace_back(Rat(static_cast<long>(n)), trace(mat_pow(a * b_pow, k)));
    b_pow = b_pow * b;
  }
  return {k, poly_interpolate(points)};
}

/// Decides whether tr((A B^n)^k) is independent of n for all k. Only
/// k = 1..dim need checking: once the first dim power sums of the eigenvalues
/// of A B^n are constant, Newton's identities fix its characteristic
/// polynomial, hence every power sum.
///
/// B is replaced by its unipotent power (B or B^2) and both matrices are
/// conjugated into the Jordan basis of that power. Failed preconditions throw
/// PreconditionError.
inline HypothesisReport hypothesis_verifier(const MatQ& a, const MatQ& b) {
  using Kind = PreconditionError::Kind;
  if (a.dim() != b.dim())
    throw PreconditionError(Kind::kDimensionMismatch, "A and B have different dimensions");
  if (!is_quasi_unipotent(a).is_quasi_unipotent)
    throw PreconditionError(Kind::kNotQuasiUnipotentA, "A is not quasi-unipotent");
  const auto sb = is_single_jordan_block(b);
  if (!sb.single) {
    if (!is_quasi_unipotent(b).is_quasi_unipotent)
      throw PreconditionError(Kind::kNotQuasiUnipotentB, "B is not quasi-unipotent");
    throw PreconditionError(Kind::kNotSingleBlockB, "B is not a single Jordan block");
  }

  HypothesisReport report;
  report.b_power = *sb.eigenvalue == 1 ? 1 : 2;
  const MatQ bu = report.b_power == 1 ? b : b * b;
  const auto sbu = is_single_jordan_block(bu);
  if (!sbu.single || *sbu.eigenvalue != 1)
    throw TheoremFalsified("square of a single block with eigenvalue -1 is not a unipotent single block");

  const std::size_t dim = a.dim();
  const MatQ p = jordan_basis_single_block(bu);
  const MatQ a_conj = inverse(p) * a * p;
  const MatQ block = MatQ::identity(dim) + MatQ::shift(dim);

  for (std::uint64_t k = 1; k <= dim; ++k) {
    report.checked_k.push_back(k);
    const TracePoly tp = expand_trace_poly(a_conj, block, k);
    if (tp.poly.is_constant()) continue;

    // A nonconstant polynomial of degree d takes a value other than p(0)
    // somewhere in 1..d.
    TraceWitness w{k, 0, 0, tp.poly(Rat(0)), Rat(0)};
    for (std::uint64_t n = 1;; ++n) {
      Rat v = tp.poly(Rat(static_cast<long>(n)));
      if (v != w.t1) {
        w.n2 = n;
        w.t2 = v;
        break;
      }
    }
    const Rat direct1 = trace(mat_pow(a * mat_pow(bu, w.n1), k));
    const Rat direct2 = trace(mat_pow(a * mat_pow(bu, w.n2), k));
    if (direct1 != w.t1 || direct2 != w.t2)
      throw TheoremFalsified("trace polynomial disagrees with direct trace at the witness");
    report.witness = w;
    return report;
  }
  report.verdict = true;
  return report;
}

/// Evidence mode: A B^n quasi-unipotent for every n in 0..nmax.
inline bool sampled_qu_family_check(const MatQ& a, const MatQ& b, std::uint64_t nmax) {
  a.require_same_dim(b);
  MatQ b_pow = MatQ::identity(a.dim());
  for (std::uint64_t n = 0; n <= nmax; ++n) {
    if (!is_quasi_unipotent(a * b_pow).is_quasi_unipotent) return false;
    b_pow = b_pow * b;
  }
  return true;
}

}  // namespace lk
