#pragma once

/**
 * @file comb.hpp
 * @brief The cyclic polynomials p_k, the matrices behind them, and the
 *        Pascal-matrix machinery showing their only common zero is x = 0.
 *
 *   p_k(x) = sum_{i_1..i_k in 1..m+1} x_{i_1}...x_{i_k}
 *            / ((i_2-i_1+r)! ... (i_k-i_{k-1}+r)! (i_1-i_k+r)!)
 *
 * with 1/t! = 0 for t < 0. Writing Bm = (1/(i-j+r)!) and Am = diag(x) Bm,
 * p_k = tr(Am^k). Vanishing of every p_k makes Am nilpotent, and since every
 * principal minor of Bm is nonsingular that forces x = 0. Nonsingularity is
 * reduced to positivity of minors of the lower triangular Pascal matrix,
 * which is totally nonnegative as a product of elementary bidiagonal factors.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lk/index.hpp"
#include "lk/matrix.hpp"

namespace lk {

/// x_i for i = 1..m+1; A's entries on its r-th subdiagonal when built from a
/// matrix (pk_instance_from_matrix).
struct PkInstance {
  std::int64_t r = 0;
  std::size_t m = 0;
  VecQ x;

  void validate() const {
    if (r < 0) throw DomainError("PkInstance: r must be >= 0");
    if (x.size() != m + 1) throw DomainError("PkInstance: |x| must equal m+1");
  }
};

/// x_i = A_{i,i-r}, with x_i = 0 when i - r < 1.
inline PkInstance pk_instance_from_matrix(const MatQ& a, std::int64_t r) {
  PkInstance inst{r, a.dim() - 1, VecQ(a.dim())};
  for (std::int64_t i = 1; i <= static_cast<std::int64_t>(a.dim()); ++i)
    if (i - r >= 1 && i - r <= static_cast<std::int64_t>(a.dim())) inst.x[i - 1] = a.at1(i, i - r);
  return inst;
}

/// p_k by direct summation over index tuples; prefixes whose running
/// product is zero are pruned.
inline Rat pk_direct(const PkInstance& inst, std::uint64_t k) {
  inst.validate();
  if (k == 0) throw DomainError("pk_direct: k must be positive");
  const auto n = static_cast<std::int64_t>(inst.m + 1);
  std::vector<Rat> inv_fact(2 * n + inst.r + 1);
  for (std::size_t t = 0; t < inv_fact.size(); ++t) inv_fact[t] = inv_factorial(static_cast<std::int64_t>(t));
  auto weight = [&](std::int64_t from, std::int64_t to) -> const Rat& {
    static const Rat zero = 0;
    const std::int64_t t = to - from + inst.r;
    return t < 0 ? zero : inv_fact[t];
  };

  Rat total = 0;
  std::function<void(std::uint64_t, std::int64_t, std::int64_t, const Rat&)> walk =
      [&](std::uint64_t depth, std::int64_t first, std::int64_t last, const Rat& acc) {
        if (depth == k) {
          total += acc * weight(last, first);
          return;
        }
        for (std::int64_t next = 1; next <= n; ++next) {
          const Rat& w = weight(last, next);
          if (w == 0 || inst.x[next - 1] == 0) continue;
          walk(depth + 1, first, next, acc * w * inst.x[next - 1]);
        }
      };
  for (std::int64_t first = 1; first <= n; ++first)
    if (inst.x[first - 1] != 0) walk(1, first, first, inst.x[first - 1]);
  return total;
}

/// Bm(r, m) = (1/(i-j+r)!), size m+1.
inline MatQ matB(std::int64_t r, std::size_t m) {
  if (r < 0) throw DomainError("matB: r must be >= 0");
  MatQ out(m + 1);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j <= m; ++j)
      out(i, j) = inv_factorial(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j) + r);
  return out;
}

/// diag(x) * Bm. Trace-equivalent to the symmetric diag(y) Bm diag(y) with
/// x_i = y_i^2, without square roots.
inline MatQ matA_from_x(const PkInstance& inst) {
  inst.validate();
  return MatQ::diag(inst.x) * matB(inst.r, inst.m);
}

inline Rat pk_via_trace(const PkInstance& inst, std::uint64_t k) {
  if (k == 0) throw DomainError("pk_via_trace: k must be positive");
  return trace(mat_pow(matA_from_x(inst), k));
}

struct PkCheck {
  bool all_zero = false;
  std::optional<std::uint64_t> witness_k;
};

/// Least k <= m+1 with p_k != 0, or all_zero when p_1..p_{m+1} vanish, in
/// which case x must be 0 (checked; anything else falsifies the theorem).
inline PkCheck theorem_pk_check(const PkInstance& inst) {
  inst.validate();
  const MatQ am = matA_from_x(inst);
  MatQ power = am;
  for (std::uint64_t k = 1; k <= inst.m + 1; ++k) {
    if (trace(power) != 0) return {false, k};
    power = power * am;
  }
  for (const auto& v : inst.x)
    if (v != 0) throw TheoremFalsified("p_1..p_{m+1} vanish for a nonzero x");
  return {true, std::nullopt};
}

/// M(r, m) = (C(i+r, j)), i, j = 1..m+1.
inline MatQ matM(std::int64_t r, std::size_t m) {
  if (r < 0) throw DomainError("matM: r must be >= 0");
  MatQ out(m + 1);
  for (std::size_t i = 1; i <= m + 1; ++i)
    for (std::size_t j = 1; j <= m + 1; ++j)
      out.at1(i, j) = binom(static_cast<std::int64_t>(i) + r, static_cast<std::int64_t>(j));
  return out;
}

/// (L_n)_{i,j} = C(i-1, j-1).
inline MatQ pascal_L(std::size_t n) {
  MatQ out(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j)
      out.at1(i, j) = binom(static_cast<std::int64_t>(i) - 1, static_cast<std::int64_t>(j) - 1);
  return out;
}

/// I_n + E_{i,i-1}
inline MatQ elementary_lower(std::size_t n, std::size_t i) {
  if (i < 2 || i > n) throw DomainError("elementary_lower: need 2 <= i <= n");
  MatQ out = MatQ::identity(n);
  out.at1(i, i - 1) = 1;
  return out;
}

/// F_k = I_n + E_{n,n-1} + ... + E_{k,k-1}; L_n = F_n F_{n-1} ... F_2.
inline MatQ pascal_block_factor(std::size_t n, std::size_t k) {
  if (k < 2 || k > n) throw DomainError("pascal_block_factor: need 2 <= k <= n");
  MatQ out = MatQ::identity(n);
  for (std::size_t i = k; i <= n; ++i) out.at1(i, i - 1) = 1;
  return out;
}

/// Elementary factors whose ordered product is L_n: F_n F_{n-1} ... F_2 with
/// each F_k expanded as (I+E_{k,k-1})(I+E_{k+1,k})...(I+E_{n,n-1}).
inline std::vector<MatQ> bidiagonal_factorization(std::size_t n) {
  if (n == 0) throw DomainError("bidiagonal_factorization: n must be positive");
  std::vector<MatQ> out;
  for (std::size_t k = n; k >= 2; --k)
    for (std::size_t i = k; i <= n; ++i) out.push_back(elementary_lower(n, i));
  return out;
}

inline constexpr std::size_t kDefaultTnnCap = 6;

namespace detail {

// Calls fn on every strictly increasing subset of {1..n} of size k, in
// lexicographic order; stops early when fn returns false.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    if (!fn(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

struct TnnResult {
  bool nonnegative = true;
  std::optional<MinorSpec> offending;
};

/// Exhaustive scan of every square minor, by size, then rows, then columns
/// (lexicographic). Reports the first negative minor.
inline TnnResult is_totally_nonnegative(const MatQ& a, std::size_t cap = kDefaultTnnCap) {
  if (a.dim() > cap)
    throw ResourceError("TNN scan: dim " + std::to_string(a.dim()) + " exceeds cap " +
                        std::to_string(cap));
  TnnResult out;
  const std::size_t n = a.dim();
  for (std::size_t k = 1; k <= n && out.nonnegative; ++k) {
    detail::for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      return detail::for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        MinorSpec s{rows, cols};
        if (minor_det(a, s) < 0) {
          out = {false, s};
          return false;
        }
        return true;
      });
    });
  }
  return out;
}

/// det((AB)_{I,J}) = sum_{|K|=|I|} det(A_{I,K}) det(B_{K,J}).
inline bool cauchy_binet_check(const MatQ& a, const MatQ& b, const MinorSpec& s) {
  a.require_same_dim(b);
  s.validate(a.dim());
  const Rat lhs = minor_det(a * b, s);
  Rat rhs = 0;
  detail::for_each_subset(a.dim(), s.rows.size(), [&](const std::vector<std::size_t>& mid) {
    rhs += minor_det(a, {s.rows, mid}) * minor_det(b, {mid, s.cols});
    return true;
  });
  return lhs == rhs;
}

/// Chain R_n, R_{n-1}, ..., R_1 of m-element index sets (1-based), with
/// rows = R_n and cols = R_1 of the witnessed Pascal minor.
struct ChainCertificate {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> chain;
};

struct MinorPositivity {
  Rat det;
  ChainCertificate cert;
};

/// Independent check of a chain certificate for the minor (L_n)_{P,Q}:
/// shape, endpoints, the shift rule between consecutive levels, and that
/// every step minor det((F_k)_{R_k,R_{k-1}}) equals 1.
inline bool verify_chain_certificate(const ChainCertificate& cert,
                                     const std::vector<std::size_t>& p,
                                     const std::vector<std::size_t>& q) {
  const std::size_t n = cert.n;
  if (n < 2 || cert.chain.size() != n) return false;
  if (cert.chain.front() != p || cert.chain.back() != q) return false;
  const std::size_t m = p.size();
  for (const auto& level : cert.chain) {
    if (level.size() != m) return false;
    for (std::size_t t = 0; t < m; ++t)
      if (level[t] < 1 || level[t] > n || (t > 0 && level[t] <= level[t - 1])) return false;
  }
  // chain[s] is R_{n-s}; the step R_k -> R_{k-1} runs through F_k.
  for (std::size_t s = 0; s + 1 < n; ++s) {
    const std::size_t k = n - s;
    const auto& from = cert.chain[s];
    const auto& to = cert.chain[s + 1];
    // Shift rule: R_{k-1} = (R_k \ S) u (S - 1) for some S inside R_k n {k..n}.
    std::vector<std::size_t> movable;
    for (auto a : from)
      if (a >= k) movable.push_back(a);
    bool shift_ok = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << movable.size()) && !shift_ok; ++mask) {
      std::vector<std::size_t> rebuilt;
      for (auto a : from) {
        auto pos = std::find(movable.begin(), movable.end(), a);
        bool moved = pos != movable.end() && (mask >> (pos - movable.begin()) & 1);
        rebuilt.push_back(moved ? a - 1 : a);
      }
      std::sort(rebuilt.begin(), rebuilt.end());
      shift_ok = std::adjacent_find(rebuilt.begin(), rebuilt.end()) == rebuilt.end() && rebuilt == to;
    }
    if (!shift_ok) return false;
    if (minor_det(pascal_block_factor(n, k), {from, to}) != 1) return false;
  }
  return minor_det(pascal_L(n), {p, q}) > 0;
}

/// det (L_n)_{P,Q} for P = {q_i + r}, Q = {q_i} with n = q_m + r + 1, plus the
/// chain: constant at P down to level q_1 + r, then every level shifted down
/// by one for r steps, then constant at Q.
inline MinorPositivity minor_positivity(const std::vector<std::size_t>& qs, std::int64_t r) {
  if (qs.empty()) throw DomainError("minor_positivity: need m >= 1");
  if (r < 0) throw DomainError("minor_positivity: r must be >= 0");
  for (std::size_t t = 0; t < qs.size(); ++t)
    if (qs[t] < 1 || (t > 0 && qs[t] <= qs[t - 1]))
      throw DomainError("minor_positivity: qs must be strictly increasing positive integers");

  const std::size_t shift = static_cast<std::size_t>(r);
  const std::size_t n = qs.back() + shift + 1;
  const std::size_t top = qs.front() + shift;  // level q_1 + r
  std::vector<std::size_t> p;
  for (auto q : qs) p.push_back(q + shift);

  MinorPositivity out;
  out.det = minor_det(pascal_L(n), {p, qs});
  out.cert.n = n;
  for (std::size_t level = n; level >= 1; --level) {
    if (level >= top) {
      out.cert.chain.push_back(p);
    } else if (level >= qs.front()) {
      std::vector<std::size_t> shifted;
      for (auto q : qs) shifted.push_back(q + level - qs.front());
      out.cert.chain.push_back(shifted);
    } else {
      out.cert.chain.push_back(qs);
    }
  }
  if (out.det <= 0 || !verify_chain_certificate(out.cert, p, qs))
    throw TheoremFalsified("binomial minor positivity chain failed to verify");
  return out;
}

}  // namespace lk
