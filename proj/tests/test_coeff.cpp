#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qweyl/coeff.hpp"
#include "qweyl/errors.hpp"

using namespace qweyl;

namespace {

bool close(Complex a, Complex b, double tol = 1e-9) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

// Random element q0^s * P / Q with small integer Gaussian coefficients.
Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<int> sh(-3, 3);
  auto poly = [&] {
    Poly p;
    for (int k = 0, d = deg(rng); k <= d; ++k) p = p + Poly::monomial(GaussRational(mpq_class(coef(rng)), mpq_class(coef(rng))), k);
    return p;
  };
  Poly num = poly();
  Poly den = poly();
  while (den.is_zero()) den = poly();
  return Scalar(sh(rng), num, den);
}

}  // namespace

TEST_CASE("lambda and q") {
  const NumericContext ctx(std::numbers::pi / 3);
  CHECK(Scalar::q() == Scalar::q0() * Scalar::q0());
  CHECK(Scalar::lambda() == Scalar::q() - Scalar::q().inverse());
  CHECK(close(Scalar::lambda().eval(ctx), Complex(0, std::sqrt(3.0))));
  CHECK(Scalar::lambda().star() == -Scalar::lambda());
  const Scalar il = Scalar::i() * Scalar::lambda().inverse();
  CHECK(il.star() == il);
}

TEST_CASE("canonical form") {
  const Scalar a = (Scalar::q() - Scalar(1)) / (Scalar::q() * Scalar::q() - Scalar(1));
  const Scalar b = (Scalar::q() + Scalar(1)).inverse();
  CHECK(a == b);
  CHECK(b.denominator().lead().is_one());
  CHECK(Scalar::q0_pow(-3).shift() == -3);
  CHECK(Scalar::q0_pow(-3).is_laurent());
  CHECK((Scalar::q0_pow(5) * Scalar::q0_pow(-5)).is_one());
  CHECK(Scalar::rational(6, -4) == Scalar::rational(-3, 2));
  CHECK((Scalar::i() * Scalar::i()) == Scalar(-1));
  CHECK((Scalar(2) - Scalar(2)).is_zero());
}

TEST_CASE("field axioms against numeric evaluation") {
  std::mt19937_64 rng(7);
  const NumericContext ctx(0.7);
  for (int t = 0; t < 200; ++t) {
    const Scalar a = random_scalar(rng);
    const Scalar b = random_scalar(rng);
    const Scalar c = random_scalar(rng);
    Complex ea, eb, ec;
    try {
      ea = a.eval(ctx);
      eb = b.eval(ctx);
      ec = c.eval(ctx);
    } catch (const PoleAtEvaluationPoint&) {
      continue;
    }
    CHECK(close((a + b).eval(ctx), ea + eb));
    CHECK(close((a * b).eval(ctx), ea * eb));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a + b) - b == a);
    CHECK(close(a.star().eval(ctx), std::conj(ea)));
    CHECK(a.star().star() == a);
    CHECK((a * b).star() == a.star() * b.star());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("printing is stable") {
  CHECK(Scalar(3).to_string() == "3");
  CHECK(Scalar::i().to_string() == "i");
  CHECK(Scalar::rational(3, 4).to_string() == "3/4");
  CHECK(Scalar().to_string() == "0");
}

TEST_CASE("pole at evaluation point") {
  const NumericContext ctx(std::numbers::pi / 3);
  const Scalar s = (Scalar::q0_pow(12) - Scalar(1)).inverse();
  CHECK_THROWS_AS(s.eval(ctx), PoleAtEvaluationPoint);
  CHECK_NOTHROW(s.eval(NumericContext(0.5)));
}

TEST_CASE("invalid context") {
  CHECK_THROWS_AS(NumericContext(std::numbers::pi), InvalidContext);
  CHECK_THROWS_AS(NumericContext(0.0), InvalidContext);
  CHECK_THROWS_AS(NumericContext(std::numbers::pi / 2), InvalidContext);
  CHECK_THROWS_AS(NumericContext(1.0, 0.0), InvalidContext);
}
