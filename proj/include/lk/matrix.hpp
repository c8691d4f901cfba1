#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact square matrices over Q.
 *
 * Storage is row-major and 0-based. Documentation, MinorSpec and every
 * serialized index are 1-based.
 */

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lk/exact.hpp"
#include "lk/poly.hpp"

namespace lk {

using VecQ = std::vector<Rat>;

class MatQ {
 public:
  /// Zero matrix of the given dimension.
  explicit MatQ(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw DomainError("matrix dimension must be positive");
  }

  MatQ(std::size_t dim, std::vector<Rat> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) throw DomainError("matrix dimension must be positive");
    if (entries_.size() != dim * dim)
      throw DomainError("matrix of dim " + std::to_string(dim) + " needs " +
                        std::to_string(dim * dim) + " entries, got " +
                        std::to_string(entries_.size()));
  }

  MatQ(std::initializer_list<std::initializer_list<Rat>> rows) : MatQ(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw DomainError("matrix rows must be square");
      std::size_t j = 0;
      for (const auto& v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static MatQ from_rows(const std::vector<VecQ>& rows) {
    MatQ out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw DomainError("matrix rows must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  static MatQ identity(std::size_t dim) {
    MatQ out(dim);
    for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1;
    return out;
  }

  static MatQ diag(const VecQ& d) {
    MatQ out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
    return out;
  }

  /// Nilpotent single Jordan block: ones on the superdiagonal.
  static MatQ shift(std::size_t dim) {
    MatQ out(dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) out(i, i + 1) = 1;
    return out;
  }

  /// E_{i,j} (1-based): the matrix unit.
  static MatQ unit(std::size_t dim, std::size_t i, std::size_t j) {
    MatQ out(dim);
    out.at1(i, j) = 1;
    return out;
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Rat>& entries() const { return entries_; }

  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  Rat& at1(std::size_t i, std::size_t j) {
    check1(i, j);
    return (*this)(i - 1, j - 1);
  }
  const Rat& at1(std::size_t i, std::size_t j) const {
    check1(i, j);
    return (*this)(i - 1, j - 1);
  }

  VecQ column(std::size_t j) const {
    VecQ out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rat& v) { return v == 0; });
  }

  friend bool operator==(const MatQ&, const MatQ&) = default;

  MatQ& operator+=(const MatQ& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  MatQ& operator-=(const MatQ& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  MatQ& operator*=(const Rat& c) {
    for (auto& v : entries_) v *= c;
    return *this;
  }

  friend MatQ operator+(MatQ a, const MatQ& b) { return a += b; }
  friend MatQ operator-(MatQ a, const MatQ& b) { return a -= b; }
  friend MatQ operator-(MatQ a) { return a *= Rat(-1); }
  friend MatQ operator*(MatQ a, const Rat& c) { return a *= c; }
  friend MatQ operator*(const Rat& c, MatQ a) { return a *= c; }

  friend MatQ operator*(const MatQ& a, const MatQ& b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim_;
    MatQ out(n);
    Rat tmp;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Rat& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (b(k, j) == 0) continue;
          mpq_mul(tmp.get_mpq_t(), aik.get_mpq_t(), b(k, j).get_mpq_t());
          out(i, j) += tmp;
        }
      }
    return out;
  }

  friend VecQ operator*(const MatQ& a, const VecQ& v) {
    if (v.size() != a.dim_) throw DomainError("matrix-vector dimension mismatch");
    VecQ out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t j = 0; j < a.dim_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  void require_same_dim(const MatQ& o) const {
    if (o.dim_ != dim_)
      throw DomainError("dimension mismatch: " + std::to_string(dim_) + " vs " +
                        std::to_string(o.dim_));
  }

 private:
  void check1(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > dim_ || j > dim_)
      throw DomainError("index (" + std::to_string(i) + "," + std::to_string(j) +
                        ") out of range for dim " + std::to_string(dim_));
  }

  std::size_t dim_;
  std::vector<Rat> entries_;
};

inline MatQ mat_mul(const MatQ& a, const MatQ& b) { return a * b; }

inline MatQ mat_pow(MatQ base, std::uint64_t k) {
  MatQ out = MatQ::identity(base.dim());
  while (k > 0) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return out;
}

inline Rat trace(const MatQ& a) {
  Rat out = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) out += a(i, i);
  return out;
}

inline MatQ transpose(const MatQ& a) {
  MatQ out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = a(i, j);
  return out;
}

namespace detail {

// Fraction-free (Bareiss) determinant of an integer matrix, row-major.
inline Int bareiss_det(std::vector<Int> m, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> Int& { return m[i * n + j]; };
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

// Determinant of rows selected by `rows` and columns `cols` (0-based), each
// row cleared of denominators before Bareiss elimination.
inline Rat det_of(const MatQ& a, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 0) return Rat(1);
  std::vector<Int> ints(n * n);
  Int scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a(rows[i], cols[j]).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& v = a(rows[i], cols[j]);
      ints[i * n + j] = v.get_num() * (row_lcm / v.get_den());
    }
    scale *= row_lcm;
  }
  Rat out(bareiss_det(std::move(ints), n), scale);
  out.canonicalize();
  return out;
}

inline std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace detail

inline Rat det(const MatQ& a) {
  auto all = detail::iota(a.dim());
  return detail::det_of(a, all, all);
}

/// Monic det(xI - A) via the Faddeev-LeVerrier recurrence.
inline UniPoly char_poly(const MatQ& a) {
  const std::size_t n = a.dim();
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  MatQ m(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -trace(a * m) / Rat(static_cast<long>(k));
  }
  return UniPoly(std::move(c));
}

/// p(A) by Horner's rule.
inline MatQ eval_at(const UniPoly& p, const MatQ& a) {
  MatQ out(a.dim());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    out = out * a;
    for (std::size_t i = 0; i < a.dim(); ++i) out(i, i) += *it;
  }
  return out;
}

/// Reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(std::vector<VecQ>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::vector<VecQ> rows_of(const MatQ& a) {
  std::vector<VecQ> rows(a.dim(), VecQ(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) rows[i][j] = a(i, j);
  return rows;
}

/// Rank of an arbitrary list of equal-length row vectors.
inline std::size_t rank_of_rows(std::vector<VecQ> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  return rref_in_place(rows, ncols).size();
}

inline std::size_t rank(const MatQ& a) { return rank_of_rows(rows_of(a)); }

/// Basis of {v : A v = 0}, one vector per free column of the RREF.
inline std::vector<VecQ> kernel_basis(const MatQ& a) {
  auto rows = rows_of(a);
  const std::size_t n = a.dim();
  auto pivots = rref_in_place(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<VecQ> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    VecQ v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact inverse by Gauss-Jordan; throws on singular input.
inline MatQ inverse(const MatQ& a) {
  const std::size_t n = a.dim();
  std::vector<VecQ> rows(n, VecQ(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    rows[i][n + i] = 1;
  }
  auto pivots = rref_in_place(rows, n);
  if (pivots.size() != n) throw DomainError("matrix is singular");
  MatQ out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = rows[i][n + j];
  return out;
}

/// Matrix whose columns are the given vectors.
inline MatQ from_columns(const std::vector<VecQ>& cols) {
  MatQ out(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != cols.size()) throw DomainError("from_columns: need a square set");
    for (std::size_t i = 0; i < cols.size(); ++i) out(i, j) = cols[j][i];
  }
  return out;
}

/// Row set I and column set J (1-based, strictly increasing, |I| = |J|).
struct MinorSpec {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;

  void validate(std::size_t dim) const {
    if (rows.size() != cols.size()) throw DomainError("minor: |I| != |J|");
    if (rows.empty()) throw DomainError("minor: empty index set");
    auto check = [dim](const std::vector<std::size_t>& idx, const char* what) {
      for (std::size_t t = 0; t < idx.size(); ++t) {
        if (idx[t] < 1 || idx[t] > dim)
          throw DomainError(std::string("minor: ") + what + " index " + std::to_string(idx[t]) +
                            " out of range 1.." + std::to_string(dim));
        if (t > 0 && idx[t] <= idx[t - 1])
          throw DomainError(std::string("minor: ") + what + " indices not strictly increasing");
      }
    };
    check(rows, "row");
    check(cols, "column");
  }
};

inline Rat minor_det(const MatQ& a, const MinorSpec& s) {
  s.validate(a.dim());
  std::vector<std::size_t> r, c;
  for (auto i : s.rows) r.push_back(i - 1);
  for (auto j : s.cols) c.push_back(j - 1);
  return detail::det_of(a, r, c);
}

inline std::string to_string(const MatQ& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < a.dim(); ++j) out += (j ? ", " : "") + to_string(a(i, j));
    out += "]";
  }
  return out + "]";
}

}  // namespace lk
