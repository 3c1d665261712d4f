#include "qweyl/haar.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdio>
#include <random>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

void check_shape(int la, int da, int lb, int db) {
  if (la != lb || da != db)
    throw ShapeMismatch("finite-rank operator shapes differ: " + std::to_string(la) + " legs/dim " +
                        std::to_string(da) + " vs " + std::to_string(lb) + "/" + std::to_string(db));
}

}  // namespace

void FiniteRankOperator::add_term(Complex amp, GaussianState ket, GaussianState bra) {
  check_shape(legs_, dim_, ket.legs(), ket.dim());
  check_shape(legs_, dim_, bra.legs(), bra.dim());
  if (amp == Complex(0.0, 0.0)) return;
  terms_.push_back({amp, std::move(ket), std::move(bra)});
}

GaussianState FiniteRankOperator::apply(const GaussianState& v) const {
  check_shape(legs_, dim_, v.legs(), v.dim());
  GaussianState out(legs_, dim_);
  for (const auto& t : terms_) out += (t.amp * inner(v, t.bra)) * t.ket;
  return out;
}

FiniteRankOperator FiniteRankOperator::adjoint() const {
  FiniteRankOperator out(legs_, dim_);
  for (const auto& t : terms_) out.add_term(std::conj(t.amp), t.bra, t.ket);
  return out;
}

FiniteRankOperator FiniteRankOperator::left(const ShiftOperator& l, const NumericContext& ctx) const {
  check_shape(legs_, dim_, l.legs(), l.dim());
  FiniteRankOperator out(legs_, dim_);
  for (const auto& t : terms_) out.add_term(t.amp, qweyl::apply(l, t.ket, ctx), t.bra);
  return out;
}

FiniteRankOperator FiniteRankOperator::right(const ShiftOperator& r, const NumericContext& ctx) const {
  check_shape(legs_, dim_, r.legs(), r.dim());
  const ShiftOperator ra = r.adjoint();
  FiniteRankOperator out(legs_, dim_);
  for (const auto& t : terms_) out.add_term(t.amp, t.ket, qweyl::apply(ra, t.bra, ctx));
  return out;
}

FiniteRankOperator& FiniteRankOperator::operator+=(const FiniteRankOperator& o) {
  check_shape(legs_, dim_, o.legs_, o.dim_);
  for (const auto& t : o.terms_) terms_.push_back(t);
  return *this;
}

FiniteRankOperator operator*(Complex c, const FiniteRankOperator& a) {
  FiniteRankOperator out(a.legs(), a.dim());
  for (const auto& t : a.terms()) out.add_term(c * t.amp, t.ket, t.bra);
  return out;
}

FiniteRankOperator rank_one(const GaussianState& e, const GaussianState& f) {
  FiniteRankOperator out(e.legs(), e.dim());
  out.add_term({1.0, 0.0}, e, f);
  return out;
}

AlgebraElement trace_density(AlgebraDescriptor d, TraceConvention convention) {
  if (d.n == 1 && convention == TraceConvention::QInverse) return q_elem_inverse(d, 1);
  return gamma(d);
}

namespace {

/// g > F = sum L F R over the returned pairs.
std::vector<std::pair<ShiftOperator, ShiftOperator>> sandwiches(const ActionEngine& engine, const HopfGenerator& g) {
  const AlgebraDescriptor& d = engine.descriptor();
  if (g.index < 1 || g.index > d.n)
    throw IndexOutOfRange("generator index " + std::to_string(g.index) + " outside 1.." + std::to_string(d.n));
  const int j = g.index;
  const auto& r = engine.conj(j);
  const auto& ri = engine.conj_inverse(j);
  const int legs = d.n;
  switch (g.kind) {
    case HopfKind::K:
      return {{represent(r), represent(ri)}};
    case HopfKind::Kinv:
      return {{represent(ri), represent(r)}};
    case HopfKind::E:
      return {{represent(engine.a(j)), ShiftOperator::identity(legs)},
              {Scalar(-1) * represent(r), represent(ri * engine.a(j))}};
    case HopfKind::F:
      return {{represent(engine.b(j)), represent(r)},
              {(-(Scalar::q() * Scalar::q())) * ShiftOperator::identity(legs), represent(r * engine.b(j))}};
  }
  return {};
}

}  // namespace

FiniteRankOperator act_on_operator(const ActionEngine& engine, const HopfGenerator& g, const FiniteRankOperator& f,
                                   const NumericContext& ctx) {
  check_shape(engine.descriptor().n, 1, f.legs(), f.dim());
  FiniteRankOperator out(f.legs(), f.dim());
  for (const auto& [l, r] : sandwiches(engine, g)) out += f.left(l, ctx).right(r, ctx);
  return out;
}

FiniteRankOperator act_on_operator(const ActionEngine& engine, const HopfElement& h, const FiniteRankOperator& f,
                                   const NumericContext& ctx) {
  FiniteRankOperator out(f.legs(), f.dim());
  for (const auto& [w, c] : h.terms()) {
    FiniteRankOperator cur = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act_on_operator(engine, *it, cur, ctx);
    out += c.eval(ctx) * cur;
  }
  return out;
}

Complex quantum_trace(AlgebraDescriptor d, const FiniteRankOperator& f, const IntegralContext& ictx) {
  check_shape(d.n, 1, f.legs(), f.dim());
  const ShiftOperator density = represent(trace_density(d, ictx.convention));
  Complex sum(0.0, 0.0);
  for (const auto& t : f.terms()) sum += t.amp * inner(t.ket, apply(density, t.bra, ictx.ctx));
  return ictx.c * sum;
}

Complex quantum_trace_gram(AlgebraDescriptor d, const FiniteRankOperator& f, const IntegralContext& ictx) {
  check_shape(d.n, 1, f.legs(), f.dim());
  const auto& terms = f.terms();
  const auto k = static_cast<Eigen::Index>(terms.size());
  if (k == 0) return {0.0, 0.0};
  Eigen::MatrixXcd gram(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      gram(i, j) = inner(terms[static_cast<std::size_t>(j)].ket, terms[static_cast<std::size_t>(i)].ket);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double cutoff = 1e-13 * ev.cwiseAbs().maxCoeff();
  const ShiftOperator density = represent(trace_density(d, ictx.convention));
  Complex sum(0.0, 0.0);
  for (Eigen::Index c = 0; c < k; ++c) {
    if (ev(c) <= cutoff) continue;
    GaussianState u(f.legs(), f.dim());
    for (Eigen::Index j = 0; j < k; ++j)
      u += (es.eigenvectors()(j, c) / std::sqrt(ev(c))) * terms[static_cast<std::size_t>(j)].ket;
    sum += inner(f.apply(apply(density, u, ictx.ctx)), u);
  }
  return ictx.c * sum;
}

std::vector<FiniteRankOperator> random_operators(int legs, int count, int max_rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rank(1, max_rank);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<FiniteRankOperator> out;
  for (int s = 0; s < count; ++s) {
    FiniteRankOperator f(legs);
    const int r = rank(rng);
    const auto kets = random_states(legs, r, rng());
    const auto bras = random_states(legs, r, rng());
    for (int i = 0; i < r; ++i)
      f.add_term({unit(rng), unit(rng)}, kets[static_cast<std::size_t>(i)], bras[static_cast<std::size_t>(i)]);
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

std::string tag(const AlgebraDescriptor& d, const NumericContext& ctx) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "n=%d;phi=%.6g", d.n, ctx.phi());
  return buf;
}

std::string tag(const AlgebraDescriptor& d, const IntegralContext& ictx) {
  std::string s = tag(d, ictx.ctx);
  if (d.n == 1) s += ictx.convention == TraceConvention::QInverse ? ";density=Qinv" : ";density=absQinv";
  return s;
}

std::string complex_text(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e%+.6ei", z.real(), z.imag());
  return buf;
}

}  // namespace

Report check_invariance(AlgebraDescriptor d, const IntegralContext& ictx, const HaarCheckOptions& opt) {
  const ActionEngine engine(d);
  const auto samples = random_operators(d.n, opt.samples, opt.max_rank, opt.seed);
  std::vector<Complex> h;
  for (const auto& f : samples) h.push_back(quantum_trace(d, f, ictx));
  Report rep;
  for (const auto& g : generators(d.n)) {
    const Complex eps = counit(g).eval(ictx.ctx);
    double worst = 0.0;
    std::string witness;
    for (std::size_t s = 0; s < samples.size(); ++s) {
      const Complex hg = quantum_trace(d, act_on_operator(engine, g, samples[s], ictx.ctx), ictx);
      const double r = std::abs(hg - eps * h[s]) / (1.0 + std::abs(h[s]));
      if (r > worst) {
        worst = r;
        witness = "sample " + std::to_string(s) + ": h(g>F)=" + complex_text(hg) + " eps(g)h(F)=" +
                  complex_text(eps * h[s]);
      }
    }
    const bool pass = worst <= ictx.ctx.tolerance();
    rep.add("invariance", "invariance[" + tag(d, ictx) + ";g=" + g.to_string() + "]", worst, pass,
            pass ? std::string{} : witness);
  }
  return rep;
}

namespace {

std::vector<std::pair<std::string, ShiftOperator>> generator_pool(AlgebraDescriptor d) {
  std::vector<std::pair<std::string, ShiftOperator>> pool;
  pool.emplace_back("1", ShiftOperator::identity(d.n));
  for (int k = 1; k <= d.n; ++k) {
    const std::string s = std::to_string(k);
    pool.emplace_back("y" + s, represent(gen_y(d, k)));
    pool.emplace_back("x" + s, represent(gen_x(d, k)));
    pool.emplace_back("R" + s, represent(gen_r(d, k)));
    pool.emplace_back("R" + s + "^-1", represent(gen_r(d, k, -1)));
    pool.emplace_back("Q" + s + "^-1", represent(q_elem_inverse(d, k)));
  }
  return pool;
}

}  // namespace

Report check_trace_cyclicity(AlgebraDescriptor d, const IntegralContext& ictx, const HaarCheckOptions& opt) {
  const auto pool = generator_pool(d);
  const auto ops = random_operators(d.n, opt.samples, std::min(opt.max_rank, 2), opt.seed);
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const NumericContext& ctx = ictx.ctx;
  Report rep;
  for (std::size_t s = 0; s < ops.size(); ++s) {
    const auto& [an, a] = pool[pick(rng)];
    const auto& [bn, b] = pool[pick(rng)];
    const ShiftOperator ba = b * a;
    const ShiftOperator bad = b.adjoint();
    const ShiftOperator bada = ba.adjoint();
    Complex agb(0.0, 0.0), gba(0.0, 0.0), bag(0.0, 0.0);
    for (const auto& t : ops[s].terms()) {
      agb += t.amp * inner(apply(a, t.ket, ctx), apply(bad, t.bra, ctx));
      gba += t.amp * inner(t.ket, apply(bada, t.bra, ctx));
      bag += t.amp * inner(apply(b, apply(a, t.ket, ctx), ctx), t.bra);
    }
    const double scale = std::max({1.0, std::abs(agb), std::abs(gba), std::abs(bag)});
    const double r = std::max({std::abs(agb - gba), std::abs(gba - bag), std::abs(agb - bag)}) / scale;
    const bool pass = r <= ctx.tolerance();
    rep.add("cyclicity", "cyclicity[" + tag(d, ctx) + ";a=" + an + ";b=" + bn + ";sample=" + std::to_string(s) + "]",
            r, pass,
            pass ? std::string{}
                 : "tr(agb)=" + complex_text(agb) + " tr(gba)=" + complex_text(gba) + " tr(bag)=" + complex_text(bag));
  }
  return rep;
}

std::vector<std::string> obstruction_derivation() {
  return {
      "F > y = i",
      "eps(F) = 0",
      "h invariant: h(F > y) = eps(F) h(y) = 0",
      "1 = h(1) = -i h(F > y) = 0, contradiction",
  };
}

Report check_no_normalized_integral() {
  const AlgebraDescriptor d(1);
  const AlgebraElement fy = act({HopfKind::F, 1}, gen_y(d, 1));
  const AlgebraElement expected = AlgebraElement::scalar(d, Scalar::i());
  const bool act_ok = fy == expected;
  const bool eps_ok = counit(HopfGenerator{HopfKind::F, 1}).is_zero();
  Report rep;
  rep.add("obstruction", "act(F;y)=i", act_ok ? 0.0 : 1.0, act_ok, act_ok ? std::string{} : fy.to_string());
  rep.add("obstruction", "eps(F)=0", eps_ok ? 0.0 : 1.0, eps_ok);
  const bool both = act_ok && eps_ok;
  rep.add("obstruction", "no-normalized-integral", both ? 0.0 : 1.0, both);
  return rep;
}

Report check_operator_module_star(AlgebraDescriptor d, const NumericContext& ctx, const HaarCheckOptions& opt) {
  const ActionEngine engine(d);
  const auto ops = random_operators(d.n, opt.samples, std::min(opt.max_rank, 2), opt.seed);
  const auto probes = random_states(d.n, 2 * opt.samples, opt.seed + 1);
  auto weak = [&](const FiniteRankOperator& x, const GaussianState& v, const GaussianState& w, double& scale) {
    Complex z(0.0, 0.0);
    for (const auto& t : x.terms()) {
      const Complex term = t.amp * inner(v, t.bra) * inner(t.ket, w);
      scale = std::max(scale, std::abs(term));
      z += term;
    }
    return z;
  };
  Report rep;
  for (const auto& g : generators(d.n)) {
    const HopfElement sg = star(antipode(HopfElement::generator(g)));
    double worst = 0.0;
    for (std::size_t s = 0; s < ops.size(); ++s) {
      const FiniteRankOperator lhs = act_on_operator(engine, g, ops[s], ctx).adjoint();
      const FiniteRankOperator rhs = act_on_operator(engine, sg, ops[s].adjoint(), ctx);
      const auto& v = probes[2 * s];
      const auto& w = probes[2 * s + 1];
      double scale = 1.0;
      const Complex a = weak(lhs, v, w, scale);
      const Complex b = weak(rhs, v, w, scale);
      worst = std::max(worst, std::abs(a - b) / scale);
    }
    rep.add("operator-star", "operator-star[" + tag(d, ctx) + ";g=" + g.to_string() + "]", worst,
            worst <= ctx.tolerance());
  }
  return rep;
}

Report check_trace_routes(AlgebraDescriptor d, const IntegralContext& ictx, const HaarCheckOptions& opt) {
  const auto ops = random_operators(d.n, opt.samples, opt.max_rank, opt.seed);
  double worst = 0.0;
  for (const auto& f : ops) {
    const Complex a = quantum_trace(d, f, ictx);
    const Complex b = quantum_trace_gram(d, f, ictx);
    worst = std::max(worst, std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}));
  }
  Report rep;
  rep.add("trace-routes", "trace-routes[" + tag(d, ictx) + "]", worst, worst <= ictx.ctx.tolerance());
  return rep;
}

}  // namespace qweyl
