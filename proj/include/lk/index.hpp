#pragma once

/**
 * @file index.hpp
 * @brief Index of a square matrix.
 *
 * The index of a nonzero A is the largest k = i - j over nonzero entries
 * A_{i,j}: every entry strictly below the k-th subdiagonal vanishes and some
 * entry on it does not. For dim m+1 it lies in [-m, m]. The zero matrix has
 * the distinguished index Bottom, which orders below every integer.
 *
 * Index is submultiplicative, ind(AB) <= ind(A) + ind(B), which makes the
 * trace of a product with index sum 0 collapse to a single sum along the
 * shifted diagonals (product_trace_formula).
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "lk/matrix.hpp"

namespace lk {

class IndexValue {
 public:
  static IndexValue bottom() { return IndexValue(); }
  explicit IndexValue(std::int64_t v) : value_(v) {}

  bool is_bottom() const { return !value_.has_value(); }
  std::int64_t value() const {
    if (!value_) throw DomainError("index of the zero matrix is bottom");
    return *value_;
  }

  friend bool operator==(const IndexValue&, const IndexValue&) = default;
  friend std::strong_ordering operator<=>(const IndexValue& a, const IndexValue& b) {
    if (a.is_bottom() || b.is_bottom()) return !a.is_bottom() <=> !b.is_bottom();
    return *a.value_ <=> *b.value_;
  }

  /// Bottom absorbs: bottom + anything = bottom.
  friend IndexValue operator+(const IndexValue& a, const IndexValue& b) {
    if (a.is_bottom() || b.is_bottom()) return bottom();
    return IndexValue(*a.value_ + *b.value_);
  }

 private:
  IndexValue() = default;
  std::optional<std::int64_t> value_;
};

inline std::string to_string(const IndexValue& v) {
  return v.is_bottom() ? "bottom" : std::to_string(v.value());
}

inline IndexValue index_of(const MatQ& a) {
  std::optional<std::int64_t> best;
  const auto n = static_cast<std::int64_t>(a.dim());
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (a(i, j) != 0 && (!best || i - j > *best)) best = i - j;
  return best ? IndexValue(*best) : IndexValue::bottom();
}

inline bool is_upper_triangular(const MatQ& a) {
  return index_of(a) <= IndexValue(0);
}

/// ind(AB) <= ind(A) + ind(B); holds vacuously when either factor is zero.
inline bool check_submultiplicative(const MatQ& a, const MatQ& b) {
  a.require_same_dim(b);
  const IndexValue ia = index_of(a), ib = index_of(b);
  if (ia.is_bottom() || ib.is_bottom()) return true;
  return index_of(a * b) <= ia + ib;
}

/// Trace of A_1 ... A_s when the indices n_t sum to zero:
///   sum_k (A_1)_{k,k-n_1} (A_2)_{k-n_1,k-n_1-n_2} ... (A_s)_{...,k},
/// where entries with an index outside 1..dim count as zero.
inline Rat product_trace_formula(std::span<const MatQ> mats) {
  if (mats.empty()) throw DomainError("product_trace_formula: empty list");
  const std::size_t dim = mats.front().dim();
  std::vector<std::int64_t> shifts;
  std::int64_t total = 0;
  for (const auto& m : mats) {
    m.require_same_dim(mats.front());
    IndexValue v = index_of(m);
    if (v.is_bottom()) throw DomainError("product_trace_formula: zero factor has index bottom");
    shifts.push_back(v.value());
    total += v.value();
  }
  if (total != 0)
    throw DomainError("product_trace_formula: index sum is " + std::to_string(total) + ", not 0");

  const auto n = static_cast<std::int64_t>(dim);
  Rat sum = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    Rat term = 1;
    std::int64_t row = k;
    for (std::size_t t = 0; t < mats.size() && term != 0; ++t) {
      const std::int64_t col = row - shifts[t];
      if (row < 1 || row > n || col < 1 || col > n) {
        term = 0;
        break;
      }
      term *= mats[t](row - 1, col - 1);
      row = col;
    }
    sum += term;
  }
  return sum;
}

}  // namespace lk
