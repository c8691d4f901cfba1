#include <gtest/gtest.h>

#include <set>

#include "lk/exact.hpp"
#include "lk/poly.hpp"
#include "oracles.hpp"

namespace lk {
namespace {

TEST(Rat, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(parse_rat("3")), "3");
  EXPECT_EQ(to_string(parse_rat("-7/2")), "-7/2");
}

TEST(Rat, ReducesOnParse) {
  EXPECT_EQ(to_string(parse_rat("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rat("-10/5")), "-2");
  EXPECT_EQ(to_string(parse_rat("0/7")), "0");
  EXPECT_EQ(parse_rat("+4").get_den(), 1);
}

TEST(Rat, RejectsMalformedInput) {
  EXPECT_THROW(parse_rat("1/0"), ParseError);
  EXPECT_THROW(parse_rat("abc"), ParseError);
  EXPECT_THROW(parse_rat("1/"), ParseError);
  EXPECT_THROW(parse_rat(""), ParseError);
  EXPECT_THROW(parse_rat("1.5"), ParseError);
  EXPECT_THROW(parse_rat("1/-2"), ParseError);
}

TEST(Binom, Examples) {
  EXPECT_EQ(binom(4, 2), 6);
  EXPECT_EQ(binom(2, 3), 0);
  EXPECT_EQ(binom(5, 0), 1);
  EXPECT_EQ(binom(5, -1), 0);
  EXPECT_THROW(binom(-1, 0), DomainError);
}

TEST(Binom, PascalRecurrenceAndOracle) {
  for (std::int64_t p = 1; p <= 30; ++p)
    for (std::int64_t q = 0; q <= p; ++q) {
      EXPECT_EQ(binom(p, q), binom(p - 1, q - 1) + binom(p - 1, q));
      EXPECT_EQ(binom(p, q), Rat(static_cast<long>(testing::pascal_binom(p, q))));
    }
}

TEST(InvFactorial, Conventions) {
  EXPECT_EQ(inv_factorial(3), Rat(1, 6));
  EXPECT_EQ(inv_factorial(-2), 0);
  EXPECT_EQ(inv_factorial(0), 1);
}

TEST(BinomPoly, Examples) {
  EXPECT_EQ(binom_poly(0), UniPoly::constant(1));
  EXPECT_EQ(binom_poly(2), UniPoly({Rat(0), Rat(-1, 2), Rat(1, 2)}));
  EXPECT_EQ(binom_poly(3)(Rat(5)), binom(5, 3));
}

TEST(BinomPoly, AgreesWithBinomOnIntegers) {
  for (std::size_t i = 0; i <= 10; ++i) {
    EXPECT_EQ(binom_poly(i).degree(), static_cast<int>(i));
    for (long n = 0; n <= 20; ++n) EXPECT_EQ(binom_poly(i)(Rat(n)), binom(n, static_cast<std::int64_t>(i)));
  }
}

TEST(Interpolate, Examples) {
  std::vector<std::pair<Rat, Rat>> constant{{0, 1}, {1, 1}};
  EXPECT_EQ(poly_interpolate(constant), UniPoly::constant(1));
  std::vector<std::pair<Rat, Rat>> affine{{0, 2}, {1, 3}, {2, 4}};
  EXPECT_EQ(poly_interpolate(affine), UniPoly({Rat(2), Rat(1)}));
  std::vector<std::pair<Rat, Rat>> sampled;
  for (long n = 0; n <= 4; ++n) sampled.emplace_back(Rat(n), binom_poly(4)(Rat(n)));
  EXPECT_EQ(poly_interpolate(sampled), binom_poly(4));
}

TEST(Interpolate, DuplicateAbscissaIsError) {
  std::vector<std::pair<Rat, Rat>> pts{{1, 2}, {1, 3}};
  EXPECT_THROW(poly_interpolate(pts), DomainError);
}

TEST(Interpolate, RoundTripsRandomPolynomials) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto deg = testing::uniform(rng, 0, 8);
    std::vector<Rat> c;
    for (int i = 0; i <= deg; ++i) c.push_back(testing::random_rat(rng));
    const UniPoly p(c);
    std::vector<std::pair<Rat, Rat>> pts;
    // deliberately non-consecutive, partly fractional abscissae
    for (int i = 0; i <= deg + testing::uniform(rng, 0, 2); ++i) {
      Rat x(3 * i - 4, 2);
      x.canonicalize();
      pts.emplace_back(x, p(x));
    }
    EXPECT_EQ(poly_interpolate(pts), p);
  }
}

TEST(Totient, OrdersWithTotientLe) {
  EXPECT_EQ(orders_with_totient_le(1), (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(orders_with_totient_le(2), (std::vector<std::uint64_t>{1, 2, 3, 4, 6}));
  const auto d4 = orders_with_totient_le(4);
  const std::set<std::uint64_t> s4(d4.begin(), d4.end());
  for (auto n : {5, 8, 10, 12}) EXPECT_TRUE(s4.count(n)) << n;
  for (auto n : {7, 9}) EXPECT_FALSE(s4.count(n)) << n;
  EXPECT_THROW(orders_with_totient_le(0), DomainError);
}

TEST(Totient, MembershipMatchesBruteForce) {
  for (std::uint64_t d = 1; d <= 8; ++d) {
    const auto orders = orders_with_totient_le(d);
    const std::set<std::uint64_t> s(orders.begin(), orders.end());
    for (std::uint64_t n = 1; n <= 200; ++n) {
      EXPECT_EQ(euler_totient(n), testing::brute_totient(n));
      EXPECT_EQ(s.count(n) == 1, testing::brute_totient(n) <= d) << "d=" << d << " n=" << n;
    }
  }
}

TEST(Poly, DivmodGcdSquarefree) {
  const UniPoly x1({Rat(-1), Rat(1)});   // x - 1
  const UniPoly x2({Rat(-2), Rat(1)});   // x - 2
  const UniPoly p = x1 * x1 * x1 * x2;
  auto [q, r] = divmod(p, x1 * x2);
  EXPECT_EQ(q, x1 * x1);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(p, x1 * x1 * UniPoly({Rat(5), Rat(1)})), x1 * x1);
  EXPECT_EQ(squarefree_part(p), x1 * x2);
  EXPECT_THROW(divmod(p, UniPoly{}), DomainError);
}

TEST(Poly, PowXModMatchesRepeatedMultiplication) {
  const UniPoly mod({Rat(1), Rat(1), Rat(1)});  // x^2 + x + 1
  UniPoly direct = UniPoly::constant(1);
  for (std::uint64_t e = 0; e <= 20; ++e) {
    EXPECT_EQ(pow_x_mod(e, mod), direct % mod) << e;
    direct *= UniPoly::x();
  }
}

}  // namespace
}  // namespace lk
