#include <doctest.h>

#include "oracles.hpp"
#include "sjack/algebra.hpp"

using namespace sjack;

namespace {

const AlphaRational A = AlphaRational::alpha();

AlphaPoly random_poly(oracle::RationalSource& src, int max_degree) {
  std::vector<BigRat> c;
  const int d = src.integer(0, max_degree);
  for (int k = 0; k <= d; ++k) c.push_back(src.any(5));
  return AlphaPoly(c);
}

AlphaRational random_rational(oracle::RationalSource& src) {
  AlphaPoly den = random_poly(src, 3);
  while (den.is_zero()) den = random_poly(src, 3);
  return {random_poly(src, 3), den};
}

}  // namespace

TEST_CASE("rationals parse in integer, fraction and decimal form") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/4") == BigRat(-3, 4));
  CHECK(parse_rational("6/8") == BigRat(3, 4));
  CHECK(parse_rational("0.25") == BigRat(1, 4));
  CHECK(parse_rational("010") == 10);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
}

TEST_CASE("AlphaPoly keeps no trailing zeros") {
  AlphaPoly p(std::vector<BigRat>{1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(AlphaPoly::monomial(3, 4).valuation() == 4);
  CHECK(AlphaPoly::linear(1, 1).to_string() == "1 + alpha");
  CHECK_THROWS_AS(AlphaPoly::divmod(p, AlphaPoly()), std::invalid_argument);
}

TEST_CASE("AlphaPoly division and gcd") {
  const AlphaPoly x = AlphaPoly::alpha();
  const AlphaPoly p = (x + 1) * (x + 2);
  auto [q, r] = AlphaPoly::divmod(p, x + 1);
  CHECK(q == x + 2);
  CHECK(r.is_zero());
  CHECK(gcd(p, (x + 1) * (x - 3)) == x + 1);
  CHECK(gcd(AlphaPoly(), AlphaPoly()).is_zero());
  CHECK(gcd(AlphaPoly(6) * x, AlphaPoly()) == x);
}

TEST_CASE("rf_arith examples") {
  const AlphaRational one_plus(AlphaPoly::linear(1, 1));
  CHECK(rf_arith(AlphaRational(1) / one_plus, A / one_plus, RfOp::add) == AlphaRational(1));
  CHECK(rf_arith(A * A + A, A.inverse(), RfOp::mul) == AlphaRational(AlphaPoly::linear(1, 1)));
  const AlphaRational a(AlphaPoly::linear(2, 3), AlphaPoly::monomial(5, 2));
  CHECK(a * a.inverse() == AlphaRational(1));
  CHECK(rf_arith(a, a, RfOp::sub).is_zero());
  CHECK(rf_arith(a, a, RfOp::div) == AlphaRational(1));
  CHECK_THROWS_AS(rf_arith(a, AlphaRational(0), RfOp::div), std::invalid_argument);
  CHECK_THROWS_AS(AlphaRational(AlphaPoly(1), AlphaPoly()), std::invalid_argument);
  CHECK_THROWS_AS(AlphaRational(0).inverse(), std::invalid_argument);
}

TEST_CASE("canonical form: integer, primitive, positive leading denominator") {
  // (1/2) / (-3/4 alpha)  ==  -2 / (3 alpha)
  AlphaRational r(AlphaPoly(BigRat(1, 2)), AlphaPoly::monomial(BigRat(-3, 4), 1));
  CHECK(r.num() == IntPoly{BigInt(-2)});
  CHECK(r.den() == IntPoly{BigInt(0), BigInt(3)});
  CHECK(AlphaRational(0).den() == IntPoly{BigInt(1)});
  CHECK(AlphaRational(0).num().empty());
  CHECK(r.to_string() == "-2/(3*alpha)");
  CHECK((AlphaRational(2) * A / AlphaRational(AlphaPoly::linear(1, 1))).to_string() == "2*alpha/(1 + alpha)");
}

TEST_CASE("canonical-form uniqueness under common factors") {
  oracle::RationalSource src(11);
  for (int trial = 0; trial < 200; ++trial) {
    AlphaPoly a = random_poly(src, 4), b = random_poly(src, 4), c = random_poly(src, 3);
    if (b.is_zero() || c.is_zero()) continue;
    AlphaRational lhs(a, b), rhs(c * a, c * b);
    CHECK(lhs.num() == rhs.num());
    CHECK(lhs.den() == rhs.den());
  }
}

TEST_CASE("evaluation is a homomorphism for the four operations") {
  oracle::RationalSource src(12);
  for (int trial = 0; trial < 200; ++trial) {
    const AlphaRational a = random_rational(src), b = random_rational(src);
    const BigRat q = src.any(7);
    for (RfOp op : {RfOp::add, RfOp::sub, RfOp::mul, RfOp::div}) {
      if (op == RfOp::div && b.is_zero()) continue;
      BigRat av, bv, rv;
      try {
        av = a.eval_at(q);
        bv = b.eval_at(q);
        rv = rf_arith(a, b, op).eval_at(q);
      } catch (const PoleError&) {
        continue;
      }
      BigRat expect;
      switch (op) {
        case RfOp::add: expect = av + bv; break;
        case RfOp::sub: expect = av - bv; break;
        case RfOp::mul: expect = av * bv; break;
        case RfOp::div:
          if (bv == 0) continue;
          expect = av / bv;
          break;
      }
      CHECK(rv == expect);
    }
  }
}

TEST_CASE("gcd correctness: (p q) / q reduces to p") {
  oracle::RationalSource src(13);
  for (int trial = 0; trial < 200; ++trial) {
    const AlphaPoly p = random_poly(src, 5), q = random_poly(src, 5);
    if (q.is_zero()) continue;
    CHECK(AlphaRational(p * q, q) == AlphaRational(p));
    CHECK(AlphaRational(p * q, q).is_polynomial());
  }
}

TEST_CASE("eval_at examples and poles") {
  const AlphaRational r = AlphaRational(2) / AlphaRational(AlphaPoly::linear(1, 1));
  CHECK(eval_at(r, 1) == 1);
  CHECK(eval_at(AlphaRational(AlphaPoly::linear(1, 1)), BigRat(3, 2)) == BigRat(5, 2));
  CHECK_THROWS_AS(eval_at(A.inverse(), 0), PoleError);
  CHECK_THROWS_AS(eval_at(r, -1), PoleError);
}

TEST_CASE("substitute_reciprocal") {
  const AlphaRational r = AlphaRational(2) / AlphaRational(AlphaPoly::linear(1, 1));
  CHECK(r.substitute_reciprocal() == AlphaRational(2) * A / AlphaRational(AlphaPoly::linear(1, 1)));
  oracle::RationalSource src(14);
  for (int trial = 0; trial < 100; ++trial) {
    const AlphaRational f = random_rational(src);
    const BigRat q = src.nonzero(5);
    try {
      CHECK(f.substitute_reciprocal().eval_at(q) == f.eval_at(1 / q));
    } catch (const PoleError&) {
    }
  }
}

TEST_CASE("to_laurent examples") {
  auto l = to_laurent((A * A + A) / A);
  REQUIRE(l);
  CHECK(l->min_exp == 0);
  CHECK(l->coeffs == std::vector<BigRat>{1, 1});
  CHECK_FALSE(to_laurent(AlphaRational(1) / AlphaRational(AlphaPoly::linear(1, 1))));
  auto z = to_laurent(AlphaRational(0));
  REQUIRE(z);
  CHECK(z->is_zero());
  auto neg = to_laurent(AlphaRational(3) / (A * A * AlphaRational(2)));
  REQUIRE(neg);
  CHECK(neg->min_exp == -2);
  CHECK(neg->coeffs == std::vector<BigRat>{BigRat(3, 2)});
  CHECK(neg->to_string() == "3/2*alpha^-2");
}

TEST_CASE("to_laurent round trip") {
  oracle::RationalSource src(15);
  for (int trial = 0; trial < 200; ++trial) {
    const AlphaRational r = AlphaRational(random_poly(src, 5)) * AlphaRational::alpha_power(src.integer(-4, 4));
    auto l = to_laurent(r);
    REQUIRE(l);
    CHECK(l->to_rational() == r);
    if (!l->is_zero()) {
      CHECK(l->coeffs.front() != 0);
      CHECK(l->coeffs.back() != 0);
    }
  }
}

TEST_CASE("nonnegative integer coefficient test") {
  CHECK(is_nonneg_integer_coeffs(*to_laurent(A * A * AlphaRational(2))));
  CHECK_FALSE(is_nonneg_integer_coeffs(*to_laurent(A - AlphaRational(1))));
  CHECK_FALSE(is_nonneg_integer_coeffs(*to_laurent(A / AlphaRational(2))));
  // 8 alpha^5 (9 + 97 alpha + 294 alpha^2 + 321 alpha^3 + 131 alpha^4 + 12 alpha^5), expanded
  AlphaPoly p(std::vector<BigRat>{0, 0, 0, 0, 0, 72, 776, 2352, 2568, 1048, 96});
  CHECK(is_nonneg_integer_coeffs(*to_laurent(AlphaRational(p))));
  CHECK(is_nonneg_integer_coeffs(AlphaLaurent{}));
}
