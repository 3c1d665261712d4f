#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qweyl/errors.hpp"
#include "qweyl/gauss.hpp"

using namespace qweyl;

namespace {

const Complex I(0.0, 1.0);

void check_report(const Report& r) {
  REQUIRE(r.size() > 0);
  for (const auto& rec : r.records()) {
    INFO(format_record(rec));
    CHECK(rec.pass);
  }
}

// Trapezoid rule on [-L, L] for one leg.
Complex quad_inner_1d(const GaussianState& u, const GaussianState& v) {
  const double L = 14.0;
  const int N = 8000;
  const double h = 2 * L / N;
  Complex s(0.0, 0.0);
  for (int i = 0; i <= N; ++i) {
    const double t = -L + i * h;
    const double w = (i == 0 || i == N) ? 0.5 : 1.0;
    for (int c = 0; c < u.dim(); ++c) s += w * u.value({t}, c) * std::conj(v.value({t}, c));
  }
  return s * h;
}

Complex gauss_at(const GaussianState& g, Complex t) {
  Complex out(0.0, 0.0);
  for (const auto& [k, a] : g.terms()) out += a * std::exp(-k.legs[0].epsilon * t * t + k.legs[0].gamma * t);
  return out;
}

}  // namespace

TEST_CASE("elementary shifts") {
  const GaussianFactor g{1.0, {0.0, 0.0}, {1.0, 0.0}};
  const GaussianFactor t = apply_shiftT(2.0, g);
  CHECK(t.gamma == Complex(2.0, 0.0));
  const GaussianFactor p = apply_shiftP(1.0, g);
  CHECK(p.epsilon == 1.0);
  CHECK(std::abs(p.gamma - Complex(0.0, -2.0)) < 1e-15);
  CHECK(std::abs(p.prefactor - std::exp(1.0)) < 1e-14);
  // oracle: e^{beta P} f (t) = f(t + i beta)
  const GaussianFactor h{0.7, {0.3, -0.4}, {1.0, 0.0}};
  for (double beta : {0.5, -1.3}) {
    const GaussianFactor r = apply_shiftP(beta, h);
    for (double s : {-1.0, 0.2, 1.7}) {
      const Complex z = s + I * beta;
      const Complex want = std::exp(-h.epsilon * z * z + h.gamma * z);
      const Complex got = r.prefactor * std::exp(-r.epsilon * s * s + r.gamma * s);
      CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
    }
  }
  // Weyl relation e^{bP} e^{aT} = e^{iba} e^{aT} e^{bP}
  const double a = 1.0;
  const double b = 0.8;
  const GaussianFactor l = apply_shiftP(b, apply_shiftT(a, h));
  const GaussianFactor r = apply_shiftT(a, apply_shiftP(b, h));
  CHECK(l.epsilon == r.epsilon);
  CHECK(l.gamma == r.gamma);
  CHECK(std::abs(l.prefactor - std::exp(I * b * a) * r.prefactor) < 1e-14);
}

TEST_CASE("Weyl relation is exact in the operator arithmetic") {
  const auto P = ShiftOperator::elementary({{0, 1, 0}}, Scalar(1));
  const auto T = ShiftOperator::elementary({{1, 0, 0}}, Scalar(1));
  CHECK(P * T == Scalar::q() * (T * P));
  const auto Ppi = ShiftOperator::elementary({{0, 0, 1}}, Scalar(1));
  CHECK(Ppi * T == Scalar(-1) * (T * Ppi));
  CHECK((P * T).adjoint() == T * P);
}

TEST_CASE("inner product") {
  const auto g = GaussianState::product({{1.0, {0.0, 0.0}, {1.0, 0.0}}});
  CHECK(std::abs(inner(g, g) - std::sqrt(std::numbers::pi / 2)) < 1e-14);
  const auto s = random_states(1, 4, 3);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    CHECK(std::abs(inner(s[i], s[i + 1]) - std::conj(inner(s[i + 1], s[i]))) < 1e-12);
    CHECK(std::abs(inner(s[i], s[i + 1]) - quad_inner_1d(s[i], s[i + 1])) < 1e-9);
    CHECK(std::abs(inner(s[i] + s[i + 1], g) - inner(s[i], g) - inner(s[i + 1], g)) < 1e-12);
  }
  const auto m = random_states(1, 2, 4, 2);
  CHECK(std::abs(inner(m[0], m[1]) - quad_inner_1d(m[0], m[1])) < 1e-9);
}

TEST_CASE("generator images") {
  const AlgebraDescriptor d(1);
  const NumericContext ctx;
  CHECK(represent(q_elem(d, 1)) == ShiftOperator::elementary({{0, 2, 0}}, Scalar(-1)));
  CHECK(represent(gen_r(d, 1)) == ShiftOperator::elementary({{0, 1, 0}}, Scalar(1)));
  CHECK(represent(gen_y(d, 1)) == ShiftOperator::elementary({{1, 0, 0}}, Scalar(1)));
  const auto g = GaussianState::product({{1.0, {0.0, 0.0}, {1.0, 0.0}}});
  const auto yg = apply(represent(gen_y(d, 1)), g, ctx);
  REQUIRE(yg.terms().size() == 1);
  CHECK(yg.terms().begin()->first.legs[0].gamma == Complex(1.0, 0.0));
  // oracle for x = (q e^{2 phi P} + 1) e^{-T}: (x f)(t) = q e^{-(t + 2 i phi)} f(t + 2 i phi) + e^{-t} f(t)
  const auto f = random_states(1, 1, 9)[0];
  const auto xf = apply(represent(gen_x(d, 1)), f, ctx);
  const Complex q = std::exp(I * ctx.phi());
  for (double t : {-0.8, 0.0, 1.1}) {
    const Complex z = t + 2.0 * I * ctx.phi();
    const Complex want = q * std::exp(-z) * gauss_at(f, z) + std::exp(-t) * gauss_at(f, t);
    CHECK(std::abs(xf.value({t}) - want) <= 1e-10 * std::max(1.0, std::abs(want)));
  }
  // x y - q^2 y x = 1 - q^2 on a Gaussian
  const FreeExpr lhs = FreeExpr::x(d, 1) * FreeExpr::y(d, 1) - Scalar::q0_pow(4) * (FreeExpr::y(d, 1) * FreeExpr::x(d, 1));
  const FreeExpr rhs = FreeExpr::scalar(d, Scalar(1) - Scalar::q0_pow(4));
  CHECK(relation_residual(represent(lhs), represent(rhs), g, ctx) == 0.0);
  CHECK_THROWS_AS(apply(represent(gen_y(AlgebraDescriptor(2), 1)), g, ctx), ShapeMismatch);
}

TEST_CASE("pointwise relations and hermiticity") {
  for (double phi : {std::numbers::pi / 3, -std::numbers::pi / 5}) {
    const NumericContext ctx(phi);
    for (int n = 1; n <= 2; ++n) {
      const auto samples = random_states(n, 10, 17 + static_cast<std::uint64_t>(n));
      check_report(check_pointwise(AlgebraDescriptor(n), samples, ctx));
      check_report(check_homomorphism(AlgebraDescriptor(n), samples, ctx, 12, 5));
    }
    check_report(check_model_II_n1(random_states(1, 10, 23, 2), ctx));
  }
}

TEST_CASE("a false relation is detected pointwise") {
  const AlgebraDescriptor d(1);
  const NumericContext ctx;
  const auto u = random_states(1, 1, 1)[0];
  const double r = relation_residual(represent(FreeExpr::x(d, 1) * FreeExpr::y(d, 1)),
                                     represent(FreeExpr::y(d, 1) * FreeExpr::x(d, 1)), u, ctx);
  CHECK(r > 1e-3);
}

// Sum of |amp| * ||term|| over the product terms: the scale of float rounding in a state.
double term_norm(const GaussianState& s) {
  double out = 0.0;
  for (const auto& [k, a] : s.terms()) {
    GaussianState single(s.legs(), s.dim());
    single.add_term(k, a);
    out += norm(single);
  }
  return out;
}

TEST_CASE("sequential numeric application agrees to rounding of its terms") {
  const NumericContext ctx;
  for (int n = 1; n <= 2; ++n) {
    const AlgebraDescriptor d(n);
    const auto u = random_states(n, 1, 31)[0];
    const std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs = {
        {gamma(d), b_op(d, 1)}, {a_op(d, n), gen_x(d, 1)}, {rho(d, 1), gen_y(d, n) * gen_x(d, 1)}};
    for (const auto& [a, b] : pairs) {
      const auto lhs = apply(represent(a * b), u, ctx);
      const auto rhs = apply(represent(a), apply(represent(b), u, ctx), ctx);
      // Weak comparison: Gram norms of near-cancelling differences lose half the digits.
      for (const auto& w : random_states(n, 3, 41)) {
        const Complex diff = inner(lhs, w) - inner(rhs, w);
        CHECK(std::abs(diff) <= 1e-12 * std::max(term_norm(lhs), term_norm(rhs)) * norm(w));
      }
    }
  }
}
