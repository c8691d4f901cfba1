#pragma once

// Dense univariate polynomials over Q. Coefficient i multiplies x^i; the
// zero polynomial has no coefficients and degree -1.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lk/exact.hpp"

namespace lk {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

  static UniPoly constant(const Rat& c) { return UniPoly({c}); }
  static UniPoly x() { return UniPoly({Rat(0), Rat(1)}); }
  /// c * x^n
  static UniPoly monomial(const Rat& c, std::size_t n) {
    std::vector<Rat> v(n + 1);
    v[n] = c;
    return UniPoly(std::move(v));
  }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return degree() <= 0; }
  Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

  Rat operator()(const Rat& at) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rat& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rat(-1); }
  friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly derivative() const {
    std::vector<Rat> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Rat(static_cast<long>(i)));
    return UniPoly(std::move(out));
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    return *this * Rat(1 / leading());
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rat> coeffs_;
};

/// Quotient and remainder of Euclidean division over Q.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Rat> quo(a.degree() - db + 1);
  const Rat lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rat c = rem[i] / lead;
    quo[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

inline UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
inline UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Product of the distinct monic irreducible factors of p.
inline UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_constant()) return p.is_zero() ? p : UniPoly::constant(1);
  return (p / gcd(p, p.derivative())).monic();
}

/// x^e mod modulus by repeated squaring.
inline UniPoly pow_x_mod(std::uint64_t e, const UniPoly& modulus) {
  UniPoly result = UniPoly::constant(1) % modulus;
  UniPoly base = UniPoly::x() % modulus;
  while (e > 0) {
    if (e & 1) result = (result * base) % modulus;
    base = (base * base) % modulus;
    e >>= 1;
  }
  return result;
}

/// (x - root)^n
inline UniPoly linear_power(const Rat& root, std::size_t n) {
  UniPoly out = UniPoly::constant(1);
  const UniPoly lin({-root, Rat(1)});
  for (std::size_t i = 0; i < n; ++i) out *= lin;
  return out;
}

/// C(n, i) as a polynomial in n: n(n-1)...(n-i+1)/i!.
inline UniPoly binom_poly(std::size_t i) {
  UniPoly out = UniPoly::constant(inv_factorial(static_cast<std::int64_t>(i)));
  for (std::size_t t = 0; t < i; ++t) out *= UniPoly({Rat(-static_cast<long>(t)), Rat(1)});
  return out;
}

/// Unique polynomial of degree < points.size() through the given points
/// (Newton divided differences).
inline UniPoly poly_interpolate(std::span<const std::pair<Rat, Rat>> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw DomainError("poly_interpolate: duplicate abscissa " + to_string(points[i].first));
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
  UniPoly out;
  for (std::size_t i = n; i-- > 0;) {
    out *= UniPoly({-points[i].first, Rat(1)});
    out += UniPoly::constant(dd[i]);
  }
  return out;
}

/// Human-readable form in the variable `var`, highest degree first.
inline std::string to_string(const UniPoly& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeffs()[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (i == 0 || a != 1) out += to_string(a);
    if (i > 0) {
      if (a != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace lk
