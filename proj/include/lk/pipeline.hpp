#pragma once

/**
 * @file pipeline.hpp
 * @brief End-to-end check of the common-eigenvector criterion for a pair
 *        (A, B): quasi-unipotent A, single-Jordan-block B, and trace of
 *        (A B^n)^k independent of n for every k imply a common eigenvector and
 *        a basis in which <A, B> is upper triangular.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lk/index.hpp"
#include "lk/matrix.hpp"
#include "lk/qu.hpp"
#include "lk/tracepoly.hpp"

namespace lk {

struct TriangularizationCertificate {
  MatQ p{1};
  MatQ a_conj{1};
  MatQ b_conj{1};
  VecQ common_eigenvector;
  Rat eigenvalue_a;
  Rat eigenvalue_b;
};

enum class Status { kCertified, kWitnessed, kPreconditionFailure };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::kCertified:
      return "hypotheses-hold-certified";
    case Status::kWitnessed:
      return "hypotheses-fail-witnessed";
    case Status::kPreconditionFailure:
      return "precondition-failure";
  }
  return "unknown";
}

struct Verdict {
  Status status = Status::kPreconditionFailure;
  std::optional<HypothesisReport> report;
  std::optional<TriangularizationCertificate> cert;
  std::optional<PreconditionError::Kind> precondition;
  std::string message;
};

/// Re-derives every certificate invariant from raw arithmetic on A and B.
/// Returns the list of violated invariants (empty when valid).
inline std::vector<std::string> certificate_problems(const MatQ& a, const MatQ& b,
                                                     const TriangularizationCertificate& c) {
  std::vector<std::string> problems;
  const std::size_t n = a.dim();
  if (b.dim() != n || c.p.dim() != n || c.a_conj.dim() != n || c.b_conj.dim() != n ||
      c.common_eigenvector.size() != n) {
    problems.emplace_back("dimension mismatch");
    return problems;
  }
  if (det(c.p) == 0) {
    problems.emplace_back("P is singular");
    return problems;
  }
  if (a * c.p != c.p * c.a_conj) problems.emplace_back("A P != P A_conj");
  if (b * c.p != c.p * c.b_conj) problems.emplace_back("B P != P B_conj");
  if (!is_upper_triangular(c.a_conj)) problems.emplace_back("A_conj not upper triangular");
  if (!is_upper_triangular(c.b_conj)) problems.emplace_back("B_conj not upper triangular");

  const VecQ& v = c.common_eigenvector;
  if (v == VecQ(n)) problems.emplace_back("common eigenvector is zero");
  VecQ av = a * v, bv = b * v;
  for (std::size_t i = 0; i < n; ++i) {
    if (av[i] != c.eigenvalue_a * v[i]) {
      problems.emplace_back("A v != eigenvalue_A v");
      break;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (bv[i] != c.eigenvalue_b * v[i]) {
      problems.emplace_back("B v != eigenvalue_B v");
      break;
    }
  }

  // Flag invariance: span(P_1..P_i) contains the images of P_1..P_i.
  for (const auto* g : {&a, &b}) {
    std::vector<VecQ> span;
    for (std::size_t i = 0; i < n; ++i) {
      span.push_back(c.p.column(i));
      std::vector<VecQ> with_images = span;
      for (std::size_t j = 0; j <= i; ++j) with_images.push_back(*g * c.p.column(j));
      if (rank_of_rows(with_images) != i + 1) {
        problems.emplace_back(std::string("flag of length ") + std::to_string(i + 1) +
                              " not invariant under " + (g == &a ? "A" : "B"));
        break;
      }
    }
  }
  return problems;
}

/// Basis change from the Jordan basis of the unipotent power of B, whose
/// first column spans the eigenline of B. Requires the hypothesis verdict to
/// be true; a non-triangular A in that basis throws TheoremFalsified.
inline TriangularizationCertificate triangularize(const MatQ& a, const MatQ& b) {
  const HypothesisReport report = hypothesis_verifier(a, b);
  if (!report.verdict)
    throw DomainError("triangularize: trace hypothesis fails at k = " +
                      std::to_string(report.witness->k));
  const MatQ bu = report.b_power == 1 ? b : b * b;
  TriangularizationCertificate c;
  c.p = jordan_basis_single_block(bu);
  const MatQ p_inv = inverse(c.p);
  c.a_conj = p_inv * a * c.p;
  c.b_conj = p_inv * b * c.p;
  if (!is_upper_triangular(c.a_conj) || !is_upper_triangular(c.b_conj))
    throw TheoremFalsified("hypotheses verified but the pair is not triangular in the flag of B: A = " +
                           to_string(a) + ", B = " + to_string(b));
  c.common_eigenvector = c.p.column(0);
  c.eigenvalue_a = c.a_conj(0, 0);
  c.eigenvalue_b = c.b_conj(0, 0);
  if (auto problems = certificate_problems(a, b, c); !problems.empty())
    throw TheoremFalsified("triangularization certificate failed self-check: " + problems.front());
  return c;
}

/// The eigenline of B, normalized to first nonzero coordinate 1.
inline VecQ common_eigenvector(const MatQ& a, const MatQ& b) {
  VecQ v = triangularize(a, b).common_eigenvector;
  const auto lambda = *is_single_jordan_block(b).eigenvalue;
  const auto kernel = kernel_basis(b - lambda * MatQ::identity(b.dim()));
  if (kernel.size() != 1 || rank_of_rows({kernel.front(), v}) != 1)
    throw TheoremFalsified("common eigenvector does not span the eigenline of B");
  return v;
}

inline Verdict verify_main_theorem(const MatQ& a, const MatQ& b) {
  Verdict out;
  try {
    out.report = hypothesis_verifier(a, b);
  } catch (const PreconditionError& e) {
    out.status = Status::kPreconditionFailure;
    out.precondition = e.kind();
    out.message = e.what();
    return out;
  }
  if (!out.report->verdict) {
    out.status = Status::kWitnessed;
    return out;
  }
  out.cert = triangularize(a, b);
  out.status = Status::kCertified;
  return out;
}

struct SearchWitness {
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  Rat trace_at_zero;
  Rat trace_at_n;
};

/// Least (k, n), lexicographically, with tr((A B^n)^k) != tr(A^k).
inline std::optional<SearchWitness> counterexample_search(const MatQ& a, const MatQ& b,
                                                          std::uint64_t kmax, std::uint64_t nmax) {
  a.require_same_dim(b);
  if (!is_single_jordan_block(b).single)
    throw DomainError("counterexample_search: B must be a single Jordan block");
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    const Rat base = trace(mat_pow(a, k));
    MatQ b_pow = b;
    for (std::uint64_t n = 1; n <= nmax; ++n) {
      Rat t = trace(mat_pow(a * b_pow, k));
      if (t != base) return SearchWitness{k, n, base, t};
      b_pow = b_pow * b;
    }
  }
  return std::nullopt;
}

/// [x, y] = x y x^{-1} y^{-1}
inline MatQ commutator(const MatQ& x, const MatQ& y) {
  return x * y * inverse(x) * inverse(y);
}

/// If g = prod [x_i, y_i] and every x_i, y_i commutes with g, then g is
/// quasi-unipotent. Violated preconditions throw DomainError.
inline bool commutator_qu_check(const MatQ& g, const std::vector<MatQ>& xs,
                                const std::vector<MatQ>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw DomainError("commutator check: need equally many x_i and y_i, at least one");
  MatQ product = MatQ::identity(g.dim());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    g.require_same_dim(xs[i]);
    g.require_same_dim(ys[i]);
    if (det(xs[i]) == 0 || det(ys[i]) == 0)
      throw DomainError("commutator check: x_" + std::to_string(i + 1) + " or y_" +
                        std::to_string(i + 1) + " is singular");
    product = product * commutator(xs[i], ys[i]);
  }
  if (product != g) throw DomainError("commutator check: g is not the product of the commutators");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] * g != g * xs[i])
      throw DomainError("commutator check: x_" + std::to_string(i + 1) + " does not commute with g");
    if (ys[i] * g != g * ys[i])
      throw DomainError("commutator check: y_" + std::to_string(i + 1) + " does not commute with g");
  }
  return is_quasi_unipotent(g).is_quasi_unipotent;
}

}  // namespace lk
