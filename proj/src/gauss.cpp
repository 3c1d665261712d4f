#include "qweyl/gauss.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "qweyl/errors.hpp"

namespace qweyl {

double LegShift::beta(double phi) const { return m * phi + p * std::numbers::pi; }

ShiftOperator ShiftOperator::identity(int legs, int dim) {
  ShiftOperator op(legs, dim);
  for (int r = 0; r < dim; ++r) op.add_term({std::vector<LegShift>(static_cast<std::size_t>(legs)), r, r}, Scalar(1));
  return op;
}

ShiftOperator ShiftOperator::elementary(std::vector<LegShift> legs, const Scalar& c, int dim, int row, int col) {
  ShiftOperator op(static_cast<int>(legs.size()), dim);
  op.add_term({std::move(legs), row, col}, c);
  return op;
}

void ShiftOperator::add_term(const ShiftKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void check_shape(int la, int da, int lb, int db) {
  if (la != lb || da != db) {
    throw ShapeMismatch("operator shapes differ: " + std::to_string(la) + " legs/dim " + std::to_string(da) + " vs " +
                        std::to_string(lb) + " legs/dim " + std::to_string(db));
  }
}

// e^{beta P} e^{alpha T} = q^{m alpha} (-1)^{p alpha} e^{alpha T} e^{beta P}
Scalar swap_phase(const LegShift& b, int alpha) {
  Scalar s = Scalar::q0_pow(2 * b.m * alpha);
  if ((b.p * alpha) % 2 != 0) s = -s;
  return s;
}

}  // namespace

ShiftOperator ShiftOperator::adjoint() const {
  ShiftOperator out(legs_, dim_);
  for (const auto& [k, c] : terms_) {
    Scalar s = c.star();
    for (const LegShift& l : k.legs) s *= swap_phase(l, l.alpha);
    out.add_term({k.legs, k.col, k.row}, s);
  }
  return out;
}

ShiftOperator& ShiftOperator::operator+=(const ShiftOperator& o) {
  check_shape(legs_, dim_, o.legs_, o.dim_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ShiftOperator& ShiftOperator::operator-=(const ShiftOperator& o) {
  check_shape(legs_, dim_, o.legs_, o.dim_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ShiftOperator operator*(const ShiftOperator& a, const ShiftOperator& b) {
  check_shape(a.legs_, a.dim_, b.legs_, b.dim_);
  ShiftOperator out(a.legs_, a.dim_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if (ka.col != kb.row) continue;
      ShiftKey k{std::vector<LegShift>(ka.legs.size()), ka.row, kb.col};
      Scalar c = ca * cb;
      for (std::size_t l = 0; l < ka.legs.size(); ++l) {
        const LegShift& x = ka.legs[l];
        const LegShift& y = kb.legs[l];
        if (y.alpha != 0 && (x.m != 0 || x.p != 0)) c *= swap_phase(x, y.alpha);
        k.legs[l] = {x.alpha + y.alpha, x.m + y.m, x.p + y.p};
      }
      out.add_term(k, c);
    }
  }
  return out;
}

ShiftOperator operator*(const Scalar& c, const ShiftOperator& a) {
  ShiftOperator out(a.legs_, a.dim_);
  for (const auto& [k, x] : a.terms_) out.add_term(k, c * x);
  return out;
}

GaussianFactor apply_shiftT(double alpha, const GaussianFactor& g) { return {g.epsilon, g.gamma + alpha, g.prefactor}; }

GaussianFactor apply_shiftP(double beta, const GaussianFactor& g) {
  const Complex i(0.0, 1.0);
  return {g.epsilon, g.gamma - 2.0 * i * g.epsilon * beta, g.prefactor * std::exp(g.epsilon * beta * beta + i * g.gamma * beta)};
}

GaussianState GaussianState::product(const std::vector<GaussianFactor>& legs, int dim, int component) {
  GaussianState s(static_cast<int>(legs.size()), dim);
  Key k;
  k.component = component;
  Complex amp(1.0, 0.0);
  for (const auto& g : legs) {
    if (g.epsilon <= 0.0) throw std::invalid_argument("Gaussian width must be positive");
    k.legs.push_back({g.epsilon, g.gamma});
    amp *= g.prefactor;
  }
  s.add_term(k, amp);
  return s;
}

void GaussianState::add_term(const Key& k, Complex amp) {
  if (amp == Complex(0.0, 0.0)) return;
  auto [it, inserted] = terms_.try_emplace(k, amp);
  if (!inserted) it->second += amp;
}

GaussianState& GaussianState::operator+=(const GaussianState& o) {
  check_shape(legs_, dim_, o.legs_, o.dim_);
  for (const auto& [k, a] : o.terms_) add_term(k, a);
  return *this;
}

GaussianState& GaussianState::operator-=(const GaussianState& o) {
  check_shape(legs_, dim_, o.legs_, o.dim_);
  for (const auto& [k, a] : o.terms_) add_term(k, -a);
  return *this;
}

GaussianState operator*(Complex c, const GaussianState& a) {
  GaussianState out(a.legs_, a.dim_);
  for (const auto& [k, x] : a.terms_) out.add_term(k, c * x);
  return out;
}

Complex GaussianState::value(const std::vector<double>& t, int component) const {
  Complex out(0.0, 0.0);
  for (const auto& [k, a] : terms_) {
    if (k.component != component) continue;
    Complex e(0.0, 0.0);
    for (std::size_t l = 0; l < k.legs.size(); ++l) e += -k.legs[l].epsilon * t[l] * t[l] + k.legs[l].gamma * t[l];
    out += a * std::exp(e);
  }
  return out;
}

Complex inner(const GaussianState& u, const GaussianState& v) {
  check_shape(u.legs(), u.dim(), v.legs(), v.dim());
  Complex out(0.0, 0.0);
  for (const auto& [ku, au] : u.terms()) {
    for (const auto& [kv, av] : v.terms()) {
      if (ku.component != kv.component) continue;
      Complex log_value(0.0, 0.0);
      double scale = 1.0;
      for (std::size_t l = 0; l < ku.legs.size(); ++l) {
        const double a = ku.legs[l].epsilon + kv.legs[l].epsilon;
        const Complex b = ku.legs[l].gamma + std::conj(kv.legs[l].gamma);
        scale *= std::sqrt(std::numbers::pi / a);
        log_value += b * b / (4.0 * a);
      }
      out += au * std::conj(av) * scale * std::exp(log_value);
    }
  }
  return out;
}

double norm(const GaussianState& u) { return std::sqrt(std::max(0.0, inner(u, u).real())); }

namespace {

class Representer {
 public:
  explicit Representer(AlgebraDescriptor d) : d_(d) {}

  ShiftOperator letter(const Letter& l) {
    const int n = d_.n;
    const int leg = n - l.index + 1;  // 1-based leg carrying the new factor
    std::vector<LegShift> prefix(static_cast<std::size_t>(n));
    switch (l.kind) {
      case LetterKind::R:
        for (int j = 0; j < leg; ++j) prefix[static_cast<std::size_t>(j)] = {0, l.power, 0};
        return ShiftOperator::elementary(prefix, Scalar(1));
      case LetterKind::Y:
        for (int j = 0; j < leg - 1; ++j) prefix[static_cast<std::size_t>(j)] = {0, 1, 0};
        prefix[static_cast<std::size_t>(leg - 1)] = {1, 0, 0};
        return ShiftOperator::elementary(prefix, Scalar(1));
      case LetterKind::X: {
        for (int j = 0; j < leg - 1; ++j) prefix[static_cast<std::size_t>(j)] = {0, 1, 0};
        const Scalar sign((leg - 1) % 2 == 0 ? 1 : -1);
        std::vector<LegShift> p2(static_cast<std::size_t>(n));
        p2[static_cast<std::size_t>(leg - 1)] = {0, 2, 0};
        std::vector<LegShift> tm(static_cast<std::size_t>(n));
        tm[static_cast<std::size_t>(leg - 1)] = {-1, 0, 0};
        const ShiftOperator e_minus_t = ShiftOperator::elementary(tm, Scalar(1));
        const ShiftOperator inner_factor =
            Scalar::q() * (ShiftOperator::elementary(p2, Scalar(1)) * e_minus_t) + e_minus_t;
        return ShiftOperator::elementary(prefix, sign) * inner_factor;
      }
    }
    return ShiftOperator(n, 1);
  }

  ShiftOperator word(const Word& w) {
    ShiftOperator out = ShiftOperator::identity(d_.n);
    for (const Letter& l : w) out = out * cached(l);
    return out;
  }

 private:
  const ShiftOperator& cached(const Letter& l) {
    auto it = cache_.find(l);
    if (it == cache_.end()) it = cache_.emplace(l, letter(l)).first;
    return it->second;
  }

  AlgebraDescriptor d_;
  std::map<Letter, ShiftOperator> cache_;
};

}  // namespace

ShiftOperator represent(const AlgebraElement& a) {
  Representer rep(a.descriptor());
  ShiftOperator out(a.n(), 1);
  for (const auto& [m, c] : a.terms()) out += c * rep.word(m.word());
  return out;
}

ShiftOperator represent(const FreeExpr& e) {
  Representer rep(e.descriptor());
  ShiftOperator out(e.descriptor().n, 1);
  for (const auto& [w, c] : e.terms()) out += c * rep.word(w);
  return out;
}

GaussianState apply(const ShiftOperator& op, const GaussianState& s, const NumericContext& ctx) {
  check_shape(op.legs(), op.dim(), s.legs(), s.dim());
  GaussianState out(s.legs(), s.dim());
  for (const auto& [k, c] : op.terms()) {
    const Complex coef = c.eval(ctx);
    for (const auto& [sk, amp] : s.terms()) {
      if (sk.component != k.col) continue;
      GaussianState::Key nk{{}, k.row};
      nk.legs.reserve(sk.legs.size());
      Complex a = coef * amp;
      for (std::size_t l = 0; l < sk.legs.size(); ++l) {
        GaussianFactor g{sk.legs[l].epsilon, sk.legs[l].gamma, {1.0, 0.0}};
        const LegShift& sh = k.legs[l];
        if (sh.m != 0 || sh.p != 0) g = apply_shiftP(sh.beta(ctx.phi()), g);
        if (sh.alpha != 0) g = apply_shiftT(sh.alpha, g);
        nk.legs.push_back({g.epsilon, g.gamma});
        a *= g.prefactor;
      }
      out.add_term(nk, a);
    }
  }
  return out;
}

std::vector<GaussianState> random_states(int legs, int count, std::uint64_t seed, int dim, int terms) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> eps(0.5, 2.0);
  std::uniform_real_distribution<double> radius(0.0, 2.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<int> comp(0, dim - 1);
  std::vector<GaussianState> out;
  for (int s = 0; s < count; ++s) {
    GaussianState st(legs, dim);
    for (int t = 0; t < terms; ++t) {
      std::vector<GaussianFactor> f;
      for (int l = 0; l < legs; ++l) f.push_back({eps(rng), std::polar(radius(rng), angle(rng)), {1.0, 0.0}});
      const Complex amp(unit(rng), unit(rng));
      st += amp * GaussianState::product(f, dim, comp(rng));
    }
    out.push_back(std::move(st));
  }
  return out;
}

double relation_residual(const ShiftOperator& lhs, const ShiftOperator& rhs, const GaussianState& u,
                         const NumericContext& ctx) {
  const ShiftOperator diff = lhs - rhs;
  if (diff.is_zero()) return 0.0;
  return norm(apply(diff, u, ctx)) / norm(u);
}

double hermiticity_residual(const ShiftOperator& a, const GaussianState& u, const GaussianState& v,
                            const NumericContext& ctx) {
  const Complex left = inner(apply(a, u, ctx), v);
  const Complex right = inner(u, apply(a, v, ctx));
  const double scale = std::max({norm(u) * norm(v), std::abs(left), std::abs(right)});
  return std::abs(left - right) / scale;
}

namespace {

std::string idx(const char* a, int i) { return std::string(a) + "=" + std::to_string(i); }
std::string idx(const char* a, int i, const char* b, int j) { return idx(a, i) + ";" + idx(b, j); }

std::string ctx_tag(const AlgebraDescriptor& d, const NumericContext& ctx) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "n=%d;phi=%.6g", d.n, ctx.phi());
  return buf;
}

}  // namespace

std::vector<PointwiseRelation> pointwise_relations(AlgebraDescriptor d) {
  std::vector<PointwiseRelation> out;
  const int n = d.n;
  auto y = [&](int k) { return FreeExpr::y(d, k); };
  auto x = [&](int k) { return FreeExpr::x(d, k); };
  auto Q = [&](int k) { return k == n + 1 ? FreeExpr::scalar(d, Scalar(1)) : FreeExpr::q_power(d, k, 1); };
  auto c = [&](const Scalar& s) { return FreeExpr::scalar(d, s); };
  auto qp = [](int k) { return Scalar::q0_pow(2 * k); };
  const Scalar linv = Scalar::lambda().inverse();
  const Scalar one_minus_q2 = Scalar(1) - qp(2);
  auto add = [&](std::string name, FreeExpr l, FreeExpr r) { out.push_back({std::move(name), std::move(l), std::move(r)}); };

  if (n == 1) {
    add("xy", x(1) * y(1) - qp(2) * (y(1) * x(1)), c(one_minus_q2));
    add("Qxy[y]", Q(1) * y(1), qp(2) * (y(1) * Q(1)));
    add("Qxy[x]", Q(1) * x(1), qp(-2) * (x(1) * Q(1)));
    add("Q-def-alt", Q(1), Scalar::q() * (c(Scalar(1)) - y(1) * x(1)));
  }
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      add("qhn0[" + idx("k", k, "l", l) + "]", y(k) * y(l), Scalar::q() * (y(l) * y(k)));
      add("qhn1[" + idx("k", k, "l", l) + "]", x(k) * x(l), Scalar::q().inverse() * (x(l) * x(k)));
    }
    for (int l = 1; l <= n; ++l) {
      if (l != k) add("qhn2[" + idx("k", k, "l", l) + "]", x(l) * y(k), Scalar::q() * (y(k) * x(l)));
    }
  }
  for (int k = 1; k < n; ++k) {
    FreeExpr rhs = qp(2) * (y(k) * x(k));
    for (int j = k + 1; j <= n; ++j) rhs -= (one_minus_q2 * qp(j - k)) * (y(j) * x(j));
    rhs += c(one_minus_q2 * qp(n - k));
    add("qhn3[" + idx("k", k) + "]", x(k) * y(k), rhs);
  }
  add("qhn4", x(n) * y(n), qp(2) * (y(n) * x(n)) + c(one_minus_q2));
  for (int k = 1; k <= n; ++k) {
    add("def-Q[" + idx("k", k) + "]", Q(k), linv * (y(k) * x(k) - x(k) * y(k)));
    add("xyQ[" + idx("k", k) + "]", x(k) * y(k) - qp(2) * (y(k) * x(k)), one_minus_q2 * Q(k + 1));
    add("QQyx[" + idx("k", k) + "]", y(k) * x(k), Q(k + 1) - Scalar::q().inverse() * Q(k));
    for (int j = 1; j <= n; ++j) {
      const int e = j < k ? 0 : 1;
      add("Qy[" + idx("k", k, "j", j) + "]", Q(k) * y(j), qp(2 * e) * (y(j) * Q(k)));
      add("Qx[" + idx("k", k, "j", j) + "]", Q(k) * x(j), qp(-2 * e) * (x(j) * Q(k)));
      add("Q12y-y[" + idx("k", k, "j", j) + "]", FreeExpr::r(d, k) * y(j), qp(e) * (y(j) * FreeExpr::r(d, k)));
      add("Q12y-x[" + idx("k", k, "j", j) + "]", FreeExpr::r(d, k) * x(j), qp(-e) * (x(j) * FreeExpr::r(d, k)));
    }
    for (int l = k + 1; l <= n; ++l) add("QQn[" + idx("k", k, "l", l) + "]", Q(k) * Q(l), Q(l) * Q(k));
    add("R-inverse[" + idx("k", k) + "]", FreeExpr::r(d, k, -1) * FreeExpr::r(d, k), c(Scalar(1)));
  }
  return out;
}

std::vector<std::pair<std::string, AlgebraElement>> hermitian_elements(AlgebraDescriptor d) {
  std::vector<std::pair<std::string, AlgebraElement>> out;
  for (int k = 1; k <= d.n; ++k) {
    const std::string s = "[k=" + std::to_string(k) + "]";
    out.emplace_back("y" + s, gen_y(d, k));
    out.emplace_back("x" + s, gen_x(d, k));
    out.emplace_back("Q" + s, q_elem(d, k));
    out.emplace_back("R" + s, gen_r(d, k));
    out.emplace_back("rho" + s, rho(d, k));
    out.emplace_back("A" + s, a_op(d, k));
    out.emplace_back("B" + s, b_op(d, k));
  }
  out.emplace_back("Gamma", gamma(d));
  if (d.n == 1) {
    out.emplace_back("A[hyperboloid]", hyperboloid_a());
    out.emplace_back("B[hyperboloid]", hyperboloid_b());
    out.emplace_back("Qinv", q_elem_inverse(d, 1));
  }
  return out;
}

Report check_relation_pointwise(const std::string& name, const ShiftOperator& lhs, const ShiftOperator& rhs,
                                const std::vector<GaussianState>& samples, const NumericContext& ctx) {
  Report r;
  double worst = 0.0;
  for (const auto& u : samples) worst = std::max(worst, relation_residual(lhs, rhs, u, ctx));
  r.add("pointwise", name, worst, worst <= ctx.tolerance());
  return r;
}

namespace {

Report hermiticity_records(const std::string& suite, const std::string& name, const ShiftOperator& a,
                           const std::vector<GaussianState>& samples, const NumericContext& ctx) {
  Report r;
  double worst = 0.0;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    worst = std::max(worst, hermiticity_residual(a, samples[s], samples[(s + 1) % samples.size()], ctx));
  }
  r.add(suite, "herm[" + name + "]", worst, worst <= ctx.tolerance());
  const bool exact = a.adjoint() == a;
  r.add(suite, "herm-exact[" + name + "]", exact ? 0.0 : 1.0, exact);
  return r;
}

}  // namespace

Report check_pointwise(AlgebraDescriptor d, const std::vector<GaussianState>& samples, const NumericContext& ctx) {
  Report r;
  const std::string tag = ctx_tag(d, ctx);
  for (const auto& rel : pointwise_relations(d)) {
    r.merge(check_relation_pointwise(rel.name + "[" + tag + "]", represent(rel.lhs), represent(rel.rhs), samples, ctx));
  }
  for (const auto& [name, e] : hermitian_elements(d)) {
    r.merge(hermiticity_records("pointwise", name + "[" + tag + "]", represent(e), samples, ctx));
  }
  return r;
}

Report check_homomorphism(AlgebraDescriptor d, const std::vector<GaussianState>& samples, const NumericContext& ctx,
                          int elements, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> index(1, d.n);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_element = [&] {
    FreeExpr e(d);
    for (int t = 0; t < 2; ++t) {
      Word w;
      for (int i = 0, l = len(rng); i < l; ++i) {
        const int k = kind(rng);
        if (k == 0) w.push_back({LetterKind::R, index(rng), coef(rng) >= 0 ? 1 : -1});
        else w.push_back({k == 1 ? LetterKind::Y : LetterKind::X, index(rng), 1});
      }
      e.add_term(w, Scalar(coef(rng)) * Scalar::q0_pow(coef(rng)));
    }
    return normal_form(e);
  };
  Report r;
  const std::string tag = ctx_tag(d, ctx);
  for (int t = 0; t < elements; ++t) {
    const AlgebraElement a = random_element();
    const AlgebraElement b = random_element();
    const ShiftOperator lhs = represent(a * b);
    const ShiftOperator rhs = represent(a) * represent(b);
    double worst = 0.0;
    for (const auto& u : samples) worst = std::max(worst, relation_residual(lhs, rhs, u, ctx));
    r.add("pointwise", "homomorphism[" + tag + ";pair=" + std::to_string(t) + "]", worst, worst <= ctx.tolerance(),
          "a=" + a.to_string() + ";b=" + b.to_string());
  }
  return r;
}

namespace {

LegShift model2_shift(const NumericContext& ctx, int sign) {
  const int s = ctx.phi() > 0 ? 1 : -1;
  return {0, 2 * sign, -s * sign};
}

ShiftOperator pauli(int which) {
  ShiftOperator op(1, 2);
  const std::vector<LegShift> none(1);
  if (which == 0) {
    op.add_term({none, 0, 0}, Scalar(1));
    op.add_term({none, 1, 1}, Scalar(-1));
  } else {
    op.add_term({none, 0, 1}, Scalar(1));
    op.add_term({none, 1, 0}, Scalar(1));
  }
  return op;
}

ShiftOperator leg_op(LegShift s) {
  ShiftOperator op(1, 2);
  op.add_term({{s}, 0, 0}, Scalar(1));
  op.add_term({{s}, 1, 1}, Scalar(1));
  return op;
}

}  // namespace

ShiftOperator model2_y() { return leg_op({1, 0, 0}) * pauli(1); }

ShiftOperator model2_x(const NumericContext& ctx) {
  const ShiftOperator e_minus_t = leg_op({-1, 0, 0});
  return Scalar::q() * (leg_op(model2_shift(ctx, 1)) * e_minus_t * pauli(0) * pauli(1)) + e_minus_t * pauli(1);
}

ShiftOperator model2_q(const NumericContext& ctx) { return Scalar(-1) * (leg_op(model2_shift(ctx, 1)) * pauli(0)); }

ShiftOperator model2_q_inverse(const NumericContext& ctx) {
  return Scalar(-1) * (leg_op(model2_shift(ctx, -1)) * pauli(0));
}

Report check_model_II_n1(const std::vector<GaussianState>& samples, const NumericContext& ctx) {
  Report r;
  char buf[32];
  std::snprintf(buf, sizeof buf, "phi=%.6g", ctx.phi());
  const std::string tag(buf);
  const ShiftOperator y = model2_y();
  const ShiftOperator x = model2_x(ctx);
  const ShiftOperator Q = model2_q(ctx);
  const ShiftOperator Qi = model2_q_inverse(ctx);
  const ShiftOperator one = ShiftOperator::identity(1, 2);
  const Scalar q = Scalar::q();
  auto rel = [&](const std::string& name, const ShiftOperator& l, const ShiftOperator& rr) {
    Report part = check_relation_pointwise(name + "[" + tag + "]", l, rr, samples, ctx);
    for (const auto& rec : part.records()) r.add("model2-n1", rec.case_id, rec.residual, rec.pass);
  };
  rel("xy", x * y - q * q * (y * x), (Scalar(1) - q * q) * one);
  rel("Qxy[y]", Q * y, q * q * (y * Q));
  rel("Qxy[x]", Q * x, q.inverse() * q.inverse() * (x * Q));
  rel("Q-def", Q, Scalar::lambda().inverse() * (y * x - x * y));
  rel("Q-def-alt", Q, q * (one - y * x));
  rel("Q-inverse", Q * Qi, one);
  const ShiftOperator anti = pauli(0) * pauli(1) + pauli(1) * pauli(0);
  r.add("model2-n1", "pauli-anticommute", anti.is_zero() ? 0.0 : 1.0, anti.is_zero());
  for (const auto& [name, op] : {std::pair<std::string, ShiftOperator>{"y", y}, {"x", x}, {"Q", Q}, {"Qinv", Qi}}) {
    r.merge(hermiticity_records("model2-n1", name + "[" + tag + "]", op, samples, ctx));
  }
  return r;
}

}  // namespace qweyl
