#include <gtest/gtest.h>

#include "generators.hpp"
#include "homalg/polynomial.hpp"

using homalg::Polynomial;
using testgen::evaluate;
using testgen::random_nonzero_polynomial;
using testgen::random_point;
using testgen::random_polynomial;

namespace {

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
Polynomial cst(std::size_t n, long c) { return Polynomial::constant(n, c); }

}  // namespace

TEST(Polynomial, GradedLexRendering) {
  const std::vector<std::string> names{"a", "b"};
  Polynomial a = var(2, 0), b = var(2, 1);
  EXPECT_EQ(render_polynomial((a - b) * b, names), "a*b - b^2");
  EXPECT_EQ(render_polynomial(b + a * a - cst(2, 3), names), "a^2 + b - 3");
  EXPECT_EQ(render_polynomial(a.scaled(mpq_class(3, 2)), names), "3/2*a");
  EXPECT_EQ(render_polynomial(Polynomial(2), names), "0");
}

TEST(Polynomial, ArithmeticAgreesWithPointEvaluation) {
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial p = random_polynomial(3), q = random_polynomial(3);
    auto pt = random_point(3);
    EXPECT_EQ(evaluate(p + q, pt), evaluate(p, pt) + evaluate(q, pt));
    EXPECT_EQ(evaluate(p - q, pt), evaluate(p, pt) - evaluate(q, pt));
    EXPECT_EQ(evaluate(p * q, pt), evaluate(p, pt) * evaluate(q, pt));
  }
}

TEST(Polynomial, ExactDivisionRecoversFactor) {
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p = random_polynomial(3), q = random_nonzero_polynomial(3);
    auto r = homalg::divide_exact(p * q, q);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, p);
  }
  Polynomial a = var(2, 0), b = var(2, 1);
  EXPECT_FALSE(homalg::divide_exact(a * a + b, a).has_value());
}

TEST(Polynomial, GcdOfCommonFactor) {
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial g = random_nonzero_polynomial(3, 3, 2);
    Polynomial p = random_nonzero_polynomial(3, 3, 2), q = random_nonzero_polynomial(3, 3, 2);
    Polynomial d = homalg::gcd(g * p, g * q);
    EXPECT_TRUE(homalg::divide_exact(g * p, d).has_value());
    EXPECT_TRUE(homalg::divide_exact(g * q, d).has_value());
    EXPECT_TRUE(homalg::divide_exact(d, g.monic()).has_value());
    EXPECT_EQ(d.leading_coeff(), 1);
  }
}

TEST(Polynomial, GcdKnownValues) {
  Polynomial a = var(2, 0), b = var(2, 1), one = cst(2, 1);
  EXPECT_EQ(homalg::gcd(a * a - a * b, a), a);
  EXPECT_EQ(homalg::gcd(a * a - b * b, a * a - (a * b).scaled(2) + b * b), a - b);
  EXPECT_TRUE(homalg::gcd(a + one, b + one).is_one());
  EXPECT_EQ(homalg::gcd(a.scaled(2) * b, a * a), a);
}

TEST(Polynomial, PrimitiveIntegerForm) {
  Polynomial a = var(2, 0), b = var(2, 1);
  Polynomial p = (a.scaled(mpq_class(-1, 2)) + b.scaled(mpq_class(3, 4)));
  EXPECT_EQ(render_polynomial(p.primitive_integer(), std::vector<std::string>{"a", "b"}), "2*a - 3*b");
}
