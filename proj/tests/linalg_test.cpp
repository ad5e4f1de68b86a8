#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "vest/linalg.hpp"

namespace {

using vest::FunctionalMatrix;
using vest::Matrix;
using vest::Rational;
using vest::Semiring;
using vest::Vector;

Matrix gadget() { return Matrix::from_dense({{0, 1, 0}, {0, 0, 1}, {0, 0, 1}}); }

TEST(Scalar, ParseCanonicalizes) {
  EXPECT_EQ(vest::parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(vest::to_string(vest::parse_rational("2/4")), "1/2");
  EXPECT_EQ(vest::to_string(vest::parse_rational("-6/3")), "-2");
  EXPECT_EQ(vest::to_string(vest::parse_rational("0/7")), "0");
  EXPECT_EQ(vest::to_string(vest::parse_rational("12345678901234567890123/1")), "12345678901234567890123");
}

TEST(Scalar, ParseRejectsMalformed) {
  for (const char* bad : {"", "1/0", "1.5", "a/b", "1/", "/2", "--1", "1/-2"}) {
    EXPECT_THROW(vest::parse_rational(bad), vest::Error) << bad;
  }
}

TEST(Scalar, CanonicalFormIsIdempotent) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 50);
  for (int i = 0; i < 500; ++i) {
    Rational x(num(rng), den(rng));
    auto p = boost::multiprecision::numerator(x);
    auto q = boost::multiprecision::denominator(x);
    EXPECT_GT(q, 0);
    EXPECT_EQ(boost::multiprecision::gcd(boost::multiprecision::abs(p), q), p == 0 ? q : 1);
    EXPECT_EQ(vest::parse_rational(vest::to_string(x)), x);
    EXPECT_EQ(vest::to_string(vest::parse_rational(vest::to_string(x))), vest::to_string(x));
  }
}

TEST(ToFunctional, GadgetSubmatrix) {
  auto f = vest::to_functional(gadget());
  ASSERT_TRUE(f);
  ASSERT_EQ(f->dimension(), 3u);
  EXPECT_EQ(f->source(0), 1u);
  EXPECT_EQ(f->source(1), 2u);
  EXPECT_EQ(f->source(2), 2u);
}

TEST(ToFunctional, Identity) {
  auto f = vest::to_functional(Matrix::identity(2));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->source(0), 0u);
  EXPECT_EQ(f->source(1), 1u);
}

TEST(ToFunctional, TwoOnesInARowIsNotFunctional) {
  EXPECT_FALSE(vest::to_functional(Matrix::from_dense({{1, 1}, {0, 0}})));
  EXPECT_FALSE(vest::to_functional(Matrix::from_dense({{2, 0}, {0, 0}})));
  EXPECT_FALSE(vest::to_functional(Matrix::from_dense({{Rational(1, 2), 0}, {0, 1}})));
}

TEST(ToFunctional, ZeroRowsAreZeroActions) {
  auto f = vest::to_functional(Matrix::from_dense({{0, 0}, {1, 0}}));
  ASSERT_TRUE(f);
  EXPECT_FALSE(f->source(0));
  EXPECT_EQ(f->source(1), 0u);
}

TEST(ToFunctional, NonSquareThrows) {
  try {
    vest::to_functional(Matrix::from_dense({{1, 0, 0}, {0, 1, 0}}));
    FAIL();
  } catch (const vest::Error& e) {
    EXPECT_EQ(e.code(), vest::ErrorCode::non_square);
  }
}

TEST(Apply, GadgetFirstApplicationSetsU3) {
  const Vector x{0, 0, 1};
  EXPECT_EQ(vest::apply(Semiring::rational, gadget(), x), (Vector{0, 1, 1}));
  EXPECT_EQ(vest::apply(*vest::to_functional(gadget()), x), (Vector{0, 1, 1}));
}

TEST(Apply, GadgetSecondApplicationSetsU2) {
  const Vector x{0, 1, 1};
  EXPECT_EQ(vest::apply(Semiring::rational, gadget(), x), (Vector{1, 1, 1}));
  EXPECT_EQ(vest::apply(Semiring::gf2, gadget(), x), (Vector{1, 1, 1}));
  EXPECT_EQ(vest::apply(*vest::to_functional(gadget()), x), (Vector{1, 1, 1}));
}

TEST(Apply, IdentityIsNeutral) {
  const Vector x{Rational(3, 7), -2, 0, Rational(-1, 9)};
  EXPECT_EQ(vest::apply(Semiring::rational, Matrix::identity(4), x), x);
}

TEST(Apply, RationalProduct) {
  Matrix m = Matrix::from_dense({{Rational(1, 2), 1}, {-1, Rational(2, 3)}});
  EXPECT_EQ(vest::apply(Semiring::rational, m, Vector{2, 3}), (Vector{4, 0}));
}

TEST(Apply, Gf2AdditionWraps) {
  Matrix m = Matrix::from_dense({{1, 1}, {0, 1}});
  EXPECT_EQ(vest::apply(Semiring::gf2, m, Vector{1, 1}), (Vector{0, 1}));
  EXPECT_EQ(vest::apply(Semiring::rational, m, Vector{1, 1}), (Vector{2, 1}));
}

TEST(Apply, DimensionMismatchThrows) {
  try {
    vest::apply(Semiring::rational, Matrix::identity(3), Vector{1, 0});
    FAIL();
  } catch (const vest::Error& e) {
    EXPECT_EQ(e.code(), vest::ErrorCode::dimension_mismatch);
  }
  EXPECT_THROW(vest::apply(*vest::to_functional(Matrix::identity(3)), Vector{1, 0}), vest::Error);
}

TEST(IsZeroVector, Basics) {
  EXPECT_TRUE(vest::is_zero_vector(Vector{0, 0, 0}));
  EXPECT_FALSE(vest::is_zero_vector(Vector{0, 1}));
  EXPECT_TRUE(vest::is_zero_vector(Vector{vest::parse_rational("0/7"), vest::parse_rational("0/1")}));
}

TEST(Matrix, RejectsBadSparseRows) {
  EXPECT_THROW(Matrix(1, 2, {{{2, Rational(1)}}}), vest::Error);
  EXPECT_THROW(Matrix(1, 2, {{{0, Rational(1)}, {0, Rational(2)}}}), vest::Error);
  EXPECT_THROW(Matrix(2, 2, {{}}), vest::Error);
  EXPECT_THROW(Matrix::from_dense({{1, 0}, {1}}), vest::Error);
}

TEST(Matrix, MultiplyMatchesDenseOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = oracle::random_matrix(3, 4, rng, 0.3);
    auto b = oracle::random_matrix(4, 2, rng, 0.3);
    EXPECT_EQ(vest::multiply(Semiring::rational, a, b).to_dense(),
              oracle::dense_multiply(Semiring::rational, a.to_dense(), b.to_dense()));
    auto x = oracle::random_binary_matrix(4, 4, rng);
    auto y = oracle::random_binary_matrix(4, 4, rng);
    EXPECT_EQ(vest::multiply(Semiring::gf2, x, y).to_dense(),
              oracle::dense_multiply(Semiring::gf2, x.to_dense(), y.to_dense()));
  }
}

// Property: densify(to_functional(M)) == M whenever M is functional.
TEST(FunctionalProperty, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t d = 1 + trial % 8;
    auto f = oracle::random_functional(d, rng);
    Matrix dense = f.to_matrix();
    auto back = vest::to_functional(dense);
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, f);
    EXPECT_EQ(back->to_matrix(), dense);
  }
}

TEST(FunctionalProperty, RandomBinaryMatricesClassifyCorrectly) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t d = 1 + trial % 6;
    auto m = oracle::random_binary_matrix(d, d, rng);
    bool expected = true;
    for (const auto& row : m.to_dense()) {
      int ones = 0;
      for (const auto& x : row) ones += (x == 1);
      expected = expected && ones <= 1;
    }
    auto f = vest::to_functional(m);
    EXPECT_EQ(f.has_value(), expected);
    if (f) {
      EXPECT_EQ(f->to_matrix(), m);
    }
  }
}

TEST(FunctionalProperty, ClosureUnderProduct) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t d = 1 + trial % 8;
    auto f = oracle::random_functional(d, rng);
    auto g = oracle::random_functional(d, rng);
    for (auto s : {Semiring::rational, Semiring::gf2}) {
      Matrix product = vest::multiply(s, f.to_matrix(), g.to_matrix());
      auto classified = vest::to_functional(product);
      ASSERT_TRUE(classified);
      EXPECT_EQ(*classified, f.compose(g));
    }
  }
}

TEST(FunctionalProperty, ApplyAgreesWithDense) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t d = 1 + trial % 8;
    auto f = oracle::random_functional(d, rng);
    auto x = oracle::random_binary_vector(d, rng);
    Vector fast = vest::apply(f, x);
    EXPECT_TRUE(fast.is_binary());
    EXPECT_EQ(vest::apply(Semiring::rational, f.to_matrix(), x), fast);
    EXPECT_EQ(vest::apply(Semiring::gf2, f.to_matrix(), x), fast);
    EXPECT_EQ(f.apply(x.to_bits()), fast.to_bits());
  }
}

}  // namespace
