#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qweyl/errors.hpp"
#include "qweyl/haar.hpp"

using namespace qweyl;

namespace {

void check_report(const Report& r) {
  REQUIRE(r.size() > 0);
  for (const auto& rec : r.records()) {
    INFO(format_record(rec));
    CHECK(rec.pass);
  }
}

GaussianState single(double eps, Complex gamma, int legs = 1) {
  return GaussianState::product(std::vector<GaussianFactor>(static_cast<std::size_t>(legs), {eps, gamma, {1.0, 0.0}}));
}

Complex quad_inner_1d(const GaussianState& u, const GaussianState& v) {
  const double L = 14.0;
  const int N = 8000;
  const double h = 2 * L / N;
  Complex s(0.0, 0.0);
  for (int i = 0; i <= N; ++i) {
    const double t = -L + i * h;
    const double w = (i == 0 || i == N) ? 0.5 : 1.0;
    s += w * u.value({t}) * std::conj(v.value({t}));
  }
  return s * h;
}

double state_distance(const GaussianState& a, const GaussianState& b) {
  const Complex d = inner(a, a) + inner(b, b) - inner(a, b) - inner(b, a);
  return std::sqrt(std::max(0.0, d.real()));
}

// Weak comparison <a, w> = <b, w> at the float scale of both sides.
void check_weakly_equal(const GaussianState& a, const GaussianState& b, const GaussianState& w) {
  const Complex x = inner(a, w);
  const Complex y = inner(b, w);
  const double scale = std::max({1.0, norm(a) * norm(w), norm(b) * norm(w)});
  CHECK(std::abs(x - y) <= 1e-11 * scale);
}

}  // namespace

TEST_CASE("rank-one operators") {
  const GaussianState g = single(1.0, {0.3, -0.2});
  const FiniteRankOperator f = rank_one(g, g);
  CHECK(f.rank_bound() == 1);
  const GaussianState fg = f.apply(g);
  CHECK(state_distance(fg, inner(g, g) * g) <= 1e-14 * inner(g, g).real() * norm(g));

  const GaussianState e = single(0.8, {0.1, 0.5});
  const FiniteRankOperator ef = rank_one(e, g);
  const FiniteRankOperator fe = ef.adjoint();
  REQUIRE(fe.terms().size() == 1);
  CHECK(fe.terms()[0].ket.terms() == g.terms());
  CHECK(fe.terms()[0].bra.terms() == e.terms());

  // plain trace by Gram-Schmidt on span{e, g}: sum <F u_k, u_k> = <e, g>
  const GaussianState u1 = (1.0 / norm(e)) * e;
  GaussianState w = g - inner(g, u1) * u1;
  const GaussianState u2 = (1.0 / norm(w)) * w;
  const Complex tr = inner(ef.apply(u1), u1) + inner(ef.apply(u2), u2);
  CHECK(std::abs(tr - inner(e, g)) <= 1e-12 * std::abs(inner(e, g)));

  CHECK_THROWS_AS(rank_one(e, single(1.0, {}, 2)), ShapeMismatch);
  FiniteRankOperator two(2);
  CHECK_THROWS_AS(two += ef, ShapeMismatch);
}

TEST_CASE("quantum trace values") {
  const AlgebraDescriptor d(1);
  const GaussianState g = single(1.0, {0.0, 0.0});
  for (double phi : {std::numbers::pi / 3, -std::numbers::pi / 5}) {
    IntegralContext ictx{1.0, NumericContext(phi), TraceConvention::AbsQInverse};
    const Complex h = quantum_trace(d, rank_one(g, g), ictx);
    // <g, e^{-2 phi P} g> = int e^{-t^2} e^{-(t - 2 i phi)^2} dt
    const Complex closed = std::sqrt(std::numbers::pi / 2) * std::exp(2 * phi * phi);
    CHECK(std::abs(h - closed) <= 1e-12 * std::abs(closed));
    const GaussianState gg = apply(represent(gen_r(d, 1, -2)), g, ictx.ctx);
    CHECK(std::abs(h - quad_inner_1d(g, gg)) <= 1e-9 * std::abs(closed));

    ictx.c = -2.5;
    CHECK(std::abs(quantum_trace(d, rank_one(g, g), ictx) + 2.5 * closed) <= 1e-12 * std::abs(closed));
  }

  const NumericContext ctx;
  for (const auto& f : random_operators(1, 5, 3, 11)) {
    const Complex a = quantum_trace(d, f, {1.0, ctx, TraceConvention::QInverse});
    const Complex b = quantum_trace(d, f, {1.0, ctx, TraceConvention::AbsQInverse});
    CHECK(std::abs(a + b) <= 1e-12 * std::max(1.0, std::abs(a)));
    const Complex alpha(0.4, -1.1);
    const Complex s = quantum_trace(d, alpha * f, {1.0, ctx, TraceConvention::QInverse});
    CHECK(std::abs(s - alpha * a) <= 1e-12 * std::max(1.0, std::abs(s)));
  }

  for (int n : {1, 2}) {
    for (double phi : {std::numbers::pi / 3, -std::numbers::pi / 5}) {
      check_report(check_trace_routes(AlgebraDescriptor(n), {1.0, NumericContext(phi), TraceConvention::QInverse}));
      if (n == 1)
        check_report(check_trace_routes(AlgebraDescriptor(n), {1.0, NumericContext(phi), TraceConvention::AbsQInverse}));
    }
  }
}

TEST_CASE("action on operators against the sandwich formulas") {
  const NumericContext ctx;
  const Scalar q2 = Scalar::q() * Scalar::q();
  for (int n : {1, 2}) {
    const AlgebraDescriptor d(n);
    const ActionEngine engine(d);
    const auto ops = random_operators(n, 3, 2, 21);
    const auto probes = random_states(n, 5, 22);
    const auto tests = random_states(n, 5, 23);
    for (int j = 1; j <= n; ++j) {
      const ShiftOperator r = represent(engine.conj(j));
      const ShiftOperator ri = represent(engine.conj_inverse(j));
      const ShiftOperator a = represent(engine.a(j));
      const ShiftOperator b = represent(engine.b(j));
      for (const auto& f : ops) {
        const FiniteRankOperator kf = act_on_operator(engine, {HopfKind::K, j}, f, ctx);
        const FiniteRankOperator kif = act_on_operator(engine, {HopfKind::Kinv, j}, f, ctx);
        const FiniteRankOperator ef = act_on_operator(engine, {HopfKind::E, j}, f, ctx);
        const FiniteRankOperator ff = act_on_operator(engine, {HopfKind::F, j}, f, ctx);
        CHECK(kf.rank_bound() == f.rank_bound());
        CHECK(ef.rank_bound() == 2 * f.rank_bound());
        for (std::size_t s = 0; s < probes.size(); ++s) {
          const GaussianState& v = probes[s];
          const GaussianState& w = tests[s];
          check_weakly_equal(kf.apply(v), apply(r, f.apply(apply(ri, v, ctx)), ctx), w);
          check_weakly_equal(kif.apply(v), apply(ri, f.apply(apply(r, v, ctx)), ctx), w);
          const GaussianState e_want =
              apply(a, f.apply(v), ctx) - apply(r, f.apply(apply(ri, apply(a, v, ctx), ctx)), ctx);
          check_weakly_equal(ef.apply(v), e_want, w);
          const GaussianState f_want =
              apply(b, f.apply(apply(r, v, ctx)), ctx) - q2.eval(ctx) * f.apply(apply(r, apply(b, v, ctx), ctx));
          check_weakly_equal(ff.apply(v), f_want, w);
        }
      }
    }
  }
  const ActionEngine engine(AlgebraDescriptor(2));
  CHECK_THROWS_AS(act_on_operator(engine, {HopfKind::E, 3}, random_operators(2, 1, 1, 1)[0], ctx), IndexOutOfRange);
  CHECK_THROWS_AS(act_on_operator(engine, {HopfKind::E, 1}, random_operators(1, 1, 1, 1)[0], ctx), ShapeMismatch);
}

TEST_CASE("invariance of the quantum trace") {
  for (int n : {1, 2}) {
    for (double phi : {std::numbers::pi / 3, -std::numbers::pi / 5}) {
      for (auto conv : {TraceConvention::QInverse, TraceConvention::AbsQInverse}) {
        if (n == 2 && conv == TraceConvention::AbsQInverse) continue;
        const Report r = check_invariance(AlgebraDescriptor(n), {1.0, NumericContext(phi), conv});
        CHECK(r.size() == 4u * static_cast<unsigned>(n));
        check_report(r);
      }
    }
  }
}

TEST_CASE("plain trace is not invariant") {
  const AlgebraDescriptor d(1);
  const NumericContext ctx;
  const ActionEngine engine(d);
  const auto f = random_operators(1, 1, 2, 5)[0];
  const FiniteRankOperator ef = act_on_operator(engine, {HopfKind::E, 1}, f, ctx);
  Complex plain(0.0, 0.0);
  for (const auto& t : ef.terms()) plain += t.amp * inner(t.ket, t.bra);
  Complex scale(0.0, 0.0);
  for (const auto& t : f.terms()) scale += t.amp * inner(t.ket, t.bra);
  CHECK(std::abs(plain) > 1e-3 * (1.0 + std::abs(scale)));
}

TEST_CASE("trace cyclicity") {
  for (int n : {1, 2}) {
    for (double phi : {std::numbers::pi / 3, -std::numbers::pi / 5}) {
      const Report r = check_trace_cyclicity(AlgebraDescriptor(n), {1.0, NumericContext(phi)});
      CHECK(r.size() == 20u);
      check_report(r);
    }
  }
  // explicit pairs (y, Q^-1) at n = 1 and (R2, x1) at n = 2
  const NumericContext ctx;
  for (int n : {1, 2}) {
    const AlgebraDescriptor d(n);
    const ShiftOperator a = n == 1 ? represent(gen_y(d, 1)) : represent(gen_r(d, 2));
    const ShiftOperator b = n == 1 ? represent(q_elem_inverse(d, 1)) : represent(gen_x(d, 1));
    const auto g = random_states(n, 2, 31);
    const Complex agb = inner(apply(a, g[0], ctx), apply(b.adjoint(), g[1], ctx));
    const Complex gba = inner(g[0], apply((b * a).adjoint(), g[1], ctx));
    const Complex bag = inner(apply(b, apply(a, g[0], ctx), ctx), g[1]);
    const double scale = std::max(1.0, std::abs(agb));
    CHECK(std::abs(agb - gba) <= 1e-9 * scale);
    CHECK(std::abs(agb - bag) <= 1e-9 * scale);
  }
}

TEST_CASE("obstruction to a normalized integral") {
  const Report r = check_no_normalized_integral();
  CHECK(r.size() == 3);
  check_report(r);
  CHECK(obstruction_derivation().size() == 4);
}

TEST_CASE("module-* structure on operators") {
  for (int n : {1, 2}) {
    for (double phi : {std::numbers::pi / 3, -std::numbers::pi / 5}) {
      check_report(check_operator_module_star(AlgebraDescriptor(n), NumericContext(phi), {10, 2, 3}));
    }
  }
}
