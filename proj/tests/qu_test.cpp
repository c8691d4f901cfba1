#include <gtest/gtest.h>

#include "lk/qu.hpp"
#include "oracles.hpp"

namespace lk {
namespace {

using testing::canonical_block;
using testing::Rng;

TEST(Unipotent, Examples) {
  EXPECT_TRUE(is_unipotent(MatQ::identity(3)));
  EXPECT_TRUE(is_unipotent(canonical_block(4)));
  EXPECT_FALSE(is_unipotent(MatQ::diag({2, 1})));
  EXPECT_FALSE(is_unipotent(-MatQ::identity(2)));
}

TEST(QuasiUnipotent, RotationHasOrderFour) {
  const MatQ rot{{0, -1}, {1, 0}};
  const QuReport r = is_quasi_unipotent(rot);
  EXPECT_TRUE(r.is_quasi_unipotent);
  EXPECT_EQ(r.unipotent_order, 4u);
  EXPECT_FALSE(r.witness_factor);
  EXPECT_EQ(mat_pow(rot, 4), MatQ::identity(2));
  EXPECT_FALSE(is_unipotent(mat_pow(rot, 2)));
}

TEST(QuasiUnipotent, NonRootOfUnityGivesWitness) {
  const QuReport r = is_quasi_unipotent(MatQ::diag({2, 1}));
  EXPECT_FALSE(r.is_quasi_unipotent);
  EXPECT_FALSE(r.unipotent_order);
  ASSERT_TRUE(r.witness_factor);
  EXPECT_EQ(*r.witness_factor, UniPoly({Rat(-2), Rat(1)}));
}

TEST(QuasiUnipotent, SingularMatrixWitnessContainsX) {
  const QuReport r = is_quasi_unipotent(MatQ{{0, 1}, {0, 0}});
  EXPECT_FALSE(r.is_quasi_unipotent);
  ASSERT_TRUE(r.witness_factor);
  EXPECT_EQ(*r.witness_factor, UniPoly::x());
}

TEST(QuasiUnipotent, FifthCyclotomicCompanion) {
  const UniPoly phi5({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
  EXPECT_EQ(cyclotomic(5), phi5);
  const MatQ c = companion(phi5);
  EXPECT_EQ(char_poly(c), phi5);
  EXPECT_EQ(mat_pow(c, 5), MatQ::identity(4));
  const QuReport r = is_quasi_unipotent(c);
  EXPECT_TRUE(r.is_quasi_unipotent);
  EXPECT_EQ(r.unipotent_order, 5u);
}

TEST(QuasiUnipotent, MixedBlocksWitnessIsTheNonCyclotomicPart) {
  // diag(companion(x^2 - 3x + 1), -1): the golden-ratio pair is the offender
  MatQ a(3);
  a(1, 0) = 1;
  a(0, 1) = -1;
  a(1, 1) = 3;
  a(2, 2) = -1;
  const QuReport r = is_quasi_unipotent(a);
  EXPECT_FALSE(r.is_quasi_unipotent);
  EXPECT_EQ(*r.witness_factor, UniPoly({Rat(1), Rat(-3), Rat(1)}));
}

TEST(QuasiUnipotent, RandomUnipotentHasOrderOne) {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const auto d = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    MatQ u = MatQ::identity(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) u(i, j) = testing::random_rat(rng);
    const QuReport r = is_quasi_unipotent(u);
    EXPECT_TRUE(r.is_quasi_unipotent);
    EXPECT_EQ(r.unipotent_order, 1u);
  }
}

TEST(QuasiUnipotent, CyclotomicCompanionsPaddedWithIdentity) {
  for (std::uint64_t d = 1; d <= 6; ++d) {
    const std::uint64_t nmax = max_root_of_unity_exponent(d);
    for (auto n : orders_with_totient_le(d)) {
      const UniPoly phi = cyclotomic(n);
      const MatQ c = companion(phi);
      MatQ a = MatQ::identity(d);
      for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j) a(i, j) = c(i, j);
      const QuReport r = is_quasi_unipotent(a);
      ASSERT_TRUE(r.is_quasi_unipotent) << "d=" << d << " n=" << n;
      EXPECT_EQ(*r.unipotent_order, n);
      EXPECT_EQ(nmax % *r.unipotent_order, 0u);
      EXPECT_TRUE(is_unipotent(mat_pow(a, *r.unipotent_order)));
    }
  }
}

TEST(QuasiUnipotent, ConjugatedQuasiUnipotentKeepsOrder) {
  Rng rng(32);
  for (int t = 0; t < 60; ++t) {
    const auto d = static_cast<std::size_t>(testing::uniform(rng, 2, 5));
    // signed permutation block structure: cyclic shift times a sign
    MatQ perm(d);
    for (std::size_t i = 0; i < d; ++i) perm((i + 1) % d, i) = 1;
    const MatQ q = testing::random_unimodular(rng, d);
    const MatQ a = q * perm * testing::adjugate_inverse(q);
    const QuReport r = is_quasi_unipotent(a);
    ASSERT_TRUE(r.is_quasi_unipotent);
    EXPECT_EQ(*r.unipotent_order, d);
    EXPECT_TRUE(is_unipotent(mat_pow(a, *r.unipotent_order)));
  }
}

TEST(SingleBlock, Examples) {
  const auto plus = is_single_jordan_block(canonical_block(4));
  EXPECT_TRUE(plus.single);
  EXPECT_EQ(*plus.eigenvalue, 1);

  const MatQ minus = -canonical_block(3);
  EXPECT_EQ(char_poly(minus), linear_power(-1, 3));
  EXPECT_EQ(rank(minus + MatQ::identity(3)), 2u);
  const auto neg = is_single_jordan_block(minus);
  EXPECT_TRUE(neg.single);
  EXPECT_EQ(*neg.eigenvalue, -1);

  EXPECT_FALSE(is_single_jordan_block(MatQ::identity(2)).single);
  EXPECT_FALSE(is_single_jordan_block(MatQ{{2, 1}, {0, 2}}).single);
  EXPECT_FALSE(is_single_jordan_block(MatQ{{0, -1}, {1, 0}}).single);
  EXPECT_TRUE(is_single_jordan_block(MatQ{{1}}).single);
}

TEST(SingleBlock, SquareOfNegativeBlockIsUnipotentBlock) {
  for (std::size_t d = 1; d <= 6; ++d) {
    const MatQ b = -canonical_block(d);
    const auto sq = is_single_jordan_block(b * b);
    EXPECT_TRUE(sq.single);
    EXPECT_EQ(*sq.eigenvalue, 1);
  }
}

TEST(JordanBasis, CanonicalBlock) {
  const MatQ b = canonical_block(4);
  const MatQ p = jordan_basis_single_block(b);
  EXPECT_EQ(inverse(p) * b * p, b);
}

TEST(JordanBasis, ScaledSuperdiagonal) {
  const MatQ b{{1, 2}, {0, 1}};
  const MatQ p = jordan_basis_single_block(b);
  EXPECT_EQ(inverse(p) * b * p, canonical_block(2));
}

TEST(JordanBasis, RejectsWrongInputs) {
  EXPECT_THROW(jordan_basis_single_block(MatQ::identity(2)), DomainError);
  EXPECT_THROW(jordan_basis_single_block(-canonical_block(2)), DomainError);
}

TEST(JordanBasis, RecoversRandomConjugates) {
  Rng rng(33);
  for (std::size_t d = 1; d <= 6; ++d) {
    for (int t = 0; t < 200; ++t) {
      const MatQ q = testing::random_unimodular(rng, d);
      MatQ scaled = MatQ::identity(d);
      for (std::size_t i = 0; i < d; ++i) scaled(i, i) = static_cast<long>(testing::uniform(rng, 1, 3));
      const MatQ qq = q * scaled;
      const MatQ b = qq * canonical_block(d) * testing::adjugate_inverse(qq);
      const MatQ p = jordan_basis_single_block(b);
      ASSERT_EQ(testing::adjugate_inverse(p) * b * p, canonical_block(d)) << "dim " << d;
    }
  }
}

TEST(Centralizer, Examples) {
  const MatQ j = canonical_block(3);
  EXPECT_TRUE(centralizer_is_upper_triangular_check(j, j));
  const MatQ n = MatQ::shift(3);
  EXPECT_TRUE(centralizer_is_upper_triangular_check(MatQ::identity(3) + Rat(3) * n + n * n, j));
  EXPECT_THROW(centralizer_is_upper_triangular_check(MatQ::unit(3, 2, 1), j), DomainError);
  EXPECT_THROW(centralizer_is_upper_triangular_check(j, MatQ::identity(3)), DomainError);
}

TEST(Centralizer, RandomSolutionsOfCommutationSystem) {
  Rng rng(34);
  for (std::size_t d = 1; d <= 5; ++d) {
    const MatQ j = canonical_block(d);
    // Linear map X -> XJ - JX on vec(X), as a d^2 x d^2 matrix.
    MatQ system(d * d);
    for (std::size_t col = 0; col < d * d; ++col) {
      MatQ x(d);
      x(col / d, col % d) = 1;
      const MatQ image = x * j - j * x;
      for (std::size_t row = 0; row < d * d; ++row) system(row, col) = image(row / d, row % d);
    }
    const auto basis = kernel_basis(system);
    EXPECT_EQ(basis.size(), d);  // centralizer of a single block: polynomials in N
    for (int t = 0; t < 20; ++t) {
      MatQ m(d);
      for (const auto& v : basis) {
        const Rat c = testing::random_rat(rng);
        for (std::size_t e = 0; e < d * d; ++e) m(e / d, e % d) += c * v[e];
      }
      EXPECT_TRUE(centralizer_is_upper_triangular_check(m, j));
    }
  }
}

}  // namespace
}  // namespace lk
