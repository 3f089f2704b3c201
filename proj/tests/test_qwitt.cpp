#include <gtest/gtest.h>

#include "generators.hpp"
#include "homalg/qwitt.hpp"

using namespace homalg;

namespace {

Scalar r(const mpq_class& q) { return Scalar::rational(q); }

/// {n} straight from the closed form (1 − qⁿ)/(1 − q).
mpq_class closed(long n, const mpq_class& q) {
  mpq_class p = 1;
  for (long k = 0; k < n; ++k) p *= q;
  return (1 - p) / (1 - q);
}

}  // namespace

TEST(QNumber, Examples) {
  EXPECT_EQ(q_number(0, r(2)), r(0));
  EXPECT_EQ(q_number(1, r(2)), r(1));
  EXPECT_EQ(q_number(5, r(2)), r(31));
  EXPECT_EQ(q_number(5, r(2)), q_number(3, r(2)) + r(8) * q_number(2, r(2)));
  EXPECT_THROW(q_number(-1, r(2)), DefinitionError);
}

TEST(QNumber, IdentitiesAtRandomQ) {
  for (int t = 0; t < 5; ++t) {
    mpq_class q;
    do q = testgen::nonzero_rational(9, 5);
    while (q == 1);
    const Scalar s = r(q);
    for (long n = 0; n <= 12; ++n) {
      EXPECT_EQ(q_number(n, s), r(closed(n, q)));
      EXPECT_EQ(q_number(n + 1, s), r(1) + s * q_number(n, s));
      for (long m = 0; m <= 12; ++m) EXPECT_EQ(q_number(n + m, s), q_number(n, s) + s.pow(n) * q_number(m, s));
    }
  }
}

TEST(QNumber, LargeIndicesStayExact) {
  // {200} at q = 2 is 2^200 − 1
  mpz_class p = 1;
  p <<= 200;
  EXPECT_EQ(q_number(200, r(2)), r(mpq_class(p - 1)));
}

TEST(QWitt, BracketExamples) {
  const QWitt w(2);
  const WittElement b = w.bracket(WittGen{'X', 2}, WittGen{'X', 3});
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.begin()->first, (WittGen{'X', 5}));
  EXPECT_EQ(b.begin()->second, r(4));
  EXPECT_EQ(render_witt(b), "4*X5");
  // [X1,G1] = (q{2} − q²{1}) G2 = 2·3 − 4 = 2 at q = 2
  const WittElement xg = w.bracket(WittGen{'X', 1}, WittGen{'G', 1});
  EXPECT_EQ(xg.at(WittGen{'G', 2}), r(2));
  EXPECT_EQ(w.bracket(WittGen{'G', 1}, WittGen{'X', 1}).at(WittGen{'G', 2}), r(-2));
  EXPECT_TRUE(w.bracket(WittGen{'G', 1}, WittGen{'G', 2}).empty());
  EXPECT_EQ(w.twist_coefficient(WittGen{'X', 3}), r(9));
  EXPECT_EQ(w.twist_coefficient(WittGen{'G', 3}), r(17));
}

TEST(QWitt, WindowHolds) {
  const CheckReport rep = check_qwitt(2, 8);
  EXPECT_TRUE(rep.holds()) << render_text(rep);
  EXPECT_TRUE(check_qwitt(mpq_class(-1, 3), 6).holds());
}

TEST(QWitt, ExcludedParameters) {
  EXPECT_THROW(check_qwitt(1, 8), DefinitionError);
  EXPECT_THROW(check_qwitt(0, 8), DefinitionError);
  EXPECT_THROW(check_qwitt(2, 1), DefinitionError);
}

TEST(QWitt, JacobiOracle) {
  // independent expansion of the Hom-super-Jacobi sum on even triples
  const mpq_class q(3, 2);
  const QWitt w(q);
  auto qn = [&](long n) -> mpq_class { return closed(n, q); };
  auto pw = [&](long n) -> mpq_class {
    mpq_class p = 1;
    for (long k = 0; k < n; ++k) p *= q;
    return p;
  };
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b)
      for (long c = 0; c <= 4; ++c) {
        // [α X_a, [X_b, X_c]] = (1+q^a)({c}−{b})({b+c}−{a}) X_{a+b+c}, cyclically
        auto term = [&](long x, long y, long z) -> mpq_class { return (1 + pw(x)) * (qn(z) - qn(y)) * (qn(y + z) - qn(x)); };
        const mpq_class sum = term(a, b, c) + term(b, c, a) + term(c, a, b);
        EXPECT_EQ(sum, 0) << a << b << c;
        WittElement lhs;
        auto add = [&](long x, long y, long z) {
          const WittElement inner = w.bracket(WittElement{{WittGen{'X', y}, r(1)}}, WittElement{{WittGen{'X', z}, r(1)}});
          const WittElement outer = w.bracket(w.twist(WittElement{{WittGen{'X', x}, r(1)}}), inner);
          for (const auto& [g, s] : outer) QWitt::accumulate(lhs, g, s);
        };
        add(a, b, c);
        add(b, c, a);
        add(c, a, b);
        EXPECT_TRUE(lhs.empty());
      }
}
