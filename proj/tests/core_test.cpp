#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pyth/conic.hpp"
#include "pyth/core.hpp"
#include "pyth/ptpm.hpp"

using namespace pyth;
using pyth::test::imat;
using pyth::test::leibniz_det;
using pyth::test::mat;

namespace {

const Mat3 kM13 = mat({-15, 10, 18, -26, 15, 30, -30, 18, 35});

Mat3 random_rational_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  Mat3 m;
  for (Eigen::Index i = 0; i < 9; ++i) m(i) = Rat(num(rng), den(rng));
  return m;
}

}  // namespace

TEST(Scalar, ParsesIntegersAndFractions) {
  EXPECT_EQ(Int::parse("-42"), Int(-42));
  EXPECT_EQ(Int::parse("+7"), Int(7));
  EXPECT_EQ(Rat::parse("-6/4"), Rat(-3, 2));
  EXPECT_EQ(Rat::parse("5"), Rat(5));
  EXPECT_EQ(Rat::parse("-6/4").str(), "-3/2");
  EXPECT_THROW(Rat::parse("0.5"), std::invalid_argument);
  EXPECT_THROW(Rat::parse("1e3"), std::invalid_argument);
  EXPECT_THROW(Rat::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rat::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Int::parse(""), std::invalid_argument);
}

TEST(Scalar, NoOverflowOnLargeProducts) {
  Int big = Int::parse("9223372036854775807");
  Int sq = big * big;
  EXPECT_EQ(sq.str(), "85070591730234615847396907784232501249");
  EXPECT_FALSE(sq.fits_int64());
  EXPECT_TRUE(big.fits_int64());
  EXPECT_EQ(isqrt(sq), big);
  EXPECT_EQ(floor_div(Int(-7), Int(2)), Int(-4));
}

TEST(Scalar, RationalsStayReduced) {
  Rat r = Rat(6, -4);
  EXPECT_EQ(r.numerator(), Int(-3));
  EXPECT_EQ(r.denominator(), Int(2));
  EXPECT_TRUE((r + Rat(3, 2)).is_integer());
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
}

TEST(MatMul, IdentityIsNeutral) {
  EXPECT_EQ(mat_mul(Mat3(Mat3::Identity()), kM13), kM13);
  EXPECT_EQ(mat_mul(kM13, Mat3(Mat3::Identity())), kM13);
}

TEST(MatMul, PermutationSquare) {
  const Mat3 p = mat({0, 1, 0, 0, 0, 1, 1, 0, 0});
  EXPECT_EQ(mat_mul(p, p), mat({0, 0, 1, 1, 0, 0, 0, 1, 0}));
}

TEST(MatMul, SquareOfWorkedExampleActsLikeTwoSteps) {
  const Mat3 sq = mat_mul(kM13, kM13);
  EXPECT_EQ(sq(0, 0), Rat(-15 * -15 + 10 * -26 + 18 * -30));
  EXPECT_EQ(mat_vec(sq, triple(1, 0, 1)), mat_vec(kM13, triple(3, 4, 5)));
  EXPECT_EQ(mat_vec(kM13, triple(3, 4, 5)), triple(85, 132, 157));
}

TEST(MatVec, WorkedExamples) {
  EXPECT_EQ(mat_vec(kM13, triple(15, -8, 17)), triple(1, 0, 1));
  EXPECT_EQ(mat_vec(kM13, triple(3, 4, 5)), triple(85, 132, 157));
  EXPECT_EQ(mat_vec(Mat3(Mat3::Identity()), triple(-2, 7, 11)), triple(-2, 7, 11));
}

TEST(MatVec, RejectsNonIntegralResult) {
  Mat3 half = Mat3::Identity() * Rat(1, 2);
  try {
    mat_vec(half, triple(1, 2, 4));
    FAIL() << "expected NonIntegralResult";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegralResult);
  }
  EXPECT_EQ(mat_vec(half, triple(2, 4, 6)), triple(1, 2, 3));
}

TEST(RowVec, IsTransposeAction) {
  EXPECT_EQ(row_vec(triple(1, 0, 0), kM13), triple(-15, 10, 18));
  EXPECT_EQ(row_vec(triple(1, 0, 0), to_integral(kM13)), triple(-15, 10, 18));
}

TEST(Det, KnownValues) {
  EXPECT_EQ(det(Mat3(Mat3::Identity())), Rat(1));
  // phi(2,1) = (3,4,5) on alpha_{1,-3}(1): det = 1^3.
  EXPECT_EQ(det(m_beta_gamma({1, -3}, phi({2, 1}))), Rat(1));
  EXPECT_EQ(leibniz_det(m_beta_gamma({1, -3}, phi({2, 1}))), Rat(1));
  // At beta = gamma = 0 the level of (2,1) is 3.
  EXPECT_EQ(det(m_beta_gamma({0, 0}, triple(3, 4, 5))), Rat(27));
  EXPECT_EQ(leibniz_det(m_beta_gamma({0, 0}, triple(3, 4, 5))), Rat(27));
  EXPECT_EQ(det(imat({2, 0, 0, 0, 3, 0, 0, 0, 4})), Int(24));
}

TEST(MatrixAlgebraProperties, AssociativeMultiplicativeDet) {
  std::mt19937_64 rng(20261014);
  for (int trial = 0; trial < 200; ++trial) {
    const Mat3 a = random_rational_matrix(rng);
    const Mat3 b = random_rational_matrix(rng);
    const Mat3 c = random_rational_matrix(rng);
    ASSERT_EQ(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)));
    ASSERT_EQ(det(mat_mul(a, b)), det(a) * det(b));
    ASSERT_EQ(det(a), leibniz_det(a));
  }
}

TEST(MatrixAlgebraProperties, MatVecComposes) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix3<Int> a, b;
    for (Eigen::Index i = 0; i < 9; ++i) {
      a(i) = entry(rng);
      b(i) = entry(rng);
    }
    const Triple t = triple(entry(rng), entry(rng), entry(rng));
    ASSERT_EQ(mat_vec(to_rational(Matrix3<Int>(a * b)), t), mat_vec(to_rational(a), mat_vec(to_rational(b), t)));
  }
}

TEST(MatPow, MatchesRepeatedProduct) {
  Mat3 acc = Mat3::Identity();
  for (unsigned long n = 0; n <= 7; ++n) {
    ASSERT_EQ(mat_pow(kM13, n), acc);
    acc = acc * kM13;
  }
}

TEST(Triples, Predicates) {
  EXPECT_TRUE(is_pythagorean(triple(3, 4, 5)));
  EXPECT_TRUE(is_pythagorean(triple(0, 0, 0)));
  EXPECT_TRUE(is_pythagorean(triple(-3, 4, -5)));
  EXPECT_FALSE(is_pythagorean(triple(1, 1, 1)));
  EXPECT_EQ(to_string(triple(15, -8, 17)), "15,-8,17");
  EXPECT_FALSE(is_integral(Mat3(Mat3::Identity() * Rat(1, 3))));
}
