#pragma once

/**
 * @file exact.hpp
 * @brief Exact rational scalars and the small combinatorial primitives built
 *        on them (factorials, binomials, Euler's totient).
 *
 * Rat is GMP's mpq_class. Every arithmetic result of mpq_class is already in
 * lowest terms with a positive denominator; values built from strings are
 * canonicalized on construction here.
 */

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "lk/error.hpp"

namespace lk {

using Rat = mpq_class;
using Int = mpz_class;

/// Serializes as "p/q", with "/q" omitted when q = 1.
inline std::string to_string(const Rat& value) { return value.get_str(); }

/// Parses "p", "-p", "p/q". Rejects zero denominators and stray characters.
inline Rat parse_rat(std::string_view text) {
  auto digits = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
      s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!digits(num, true) || !digits(den, false))
    throw ParseError("invalid rational '" + std::string(text) + "'");
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  Int n(num_str, 10);
  Int d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rat out(n, d);
  out.canonicalize();
  return out;
}

inline Int factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

/// C(p, q); zero when q < 0 or q > p. Negative p is rejected.
inline Rat binom(std::int64_t p, std::int64_t q) {
  if (p < 0) throw DomainError("binom: negative upper index " + std::to_string(p));
  if (q < 0 || q > p) return Rat(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(p),
               static_cast<unsigned long>(q));
  return Rat(out);
}

/// 1/t! with the convention 1/t! = 0 for t < 0.
inline Rat inv_factorial(std::int64_t t) {
  if (t < 0) return Rat(0);
  return Rat(Int(1), factorial(t));
}

inline std::uint64_t euler_totient(std::uint64_t n) {
  if (n == 0) throw DomainError("totient of zero");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// All n >= 1 with phi(n) <= d, ascending. phi(n) >= sqrt(n/2) bounds the
/// search by n <= 2 d^2.
inline std::vector<std::uint64_t> orders_with_totient_le(std::uint64_t d) {
  if (d == 0) throw DomainError("orders_with_totient_le: d must be positive");
  std::vector<std::uint64_t> out;
  const std::uint64_t bound = 2 * d * d;
  for (std::uint64_t n = 1; n <= bound; ++n)
    if (euler_totient(n) <= d) out.push_back(n);
  return out;
}

/// lcm of orders_with_totient_le(d): every root of unity of degree <= d over
/// Q is an Nmax-th root of unity.
inline std::uint64_t max_root_of_unity_exponent(std::uint64_t d) {
  std::uint64_t out = 1;
  for (auto n : orders_with_totient_le(d)) out = std::lcm(out, n);
  return out;
}

}  // namespace lk
