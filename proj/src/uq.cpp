#include "qweyl/uq.hpp"

#include <cstdlib>

#include "qweyl/errors.hpp"

namespace qweyl {

std::string HopfGenerator::to_string() const {
  const std::string j = std::to_string(index);
  switch (kind) {
    case HopfKind::K: return "K" + j;
    case HopfKind::Kinv: return "K" + j + "^-1";
    case HopfKind::E: return "E" + j;
    case HopfKind::F: return "F" + j;
  }
  return "?";
}

HopfElement HopfElement::scalar(const Scalar& c) {
  HopfElement h;
  h.add_term({}, c);
  return h;
}

HopfElement HopfElement::word(HopfWord w, const Scalar& c) {
  HopfElement h;
  h.add_term(w, c);
  return h;
}

void HopfElement::add_term(const HopfWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int HopfElement::max_index() const {
  int m = 0;
  for (const auto& [w, c] : terms_) {
    for (const auto& g : w) m = std::max(m, g.index);
  }
  return m;
}

std::string HopfElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string mono;
    for (const auto& g : w) mono += (mono.empty() ? "" : "*") + g.to_string();
    std::string term;
    bool negative = false;
    if (mono.empty()) {
      term = "(" + c.to_string() + ")";
    } else if (c.is_one()) {
      term = mono;
    } else if ((-c).is_one()) {
      term = mono;
      negative = true;
    } else {
      term = "(" + c.to_string() + ")*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HopfElement operator-(const HopfElement& a) {
  HopfElement out;
  for (const auto& [w, c] : a.terms_) out.add_term(w, -c);
  return out;
}

HopfElement operator*(const HopfElement& a, const HopfElement& b) {
  HopfElement out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      HopfWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

HopfElement operator*(const Scalar& c, const HopfElement& a) {
  HopfElement out;
  for (const auto& [w, x] : a.terms_) out.add_term(w, c * x);
  return out;
}

std::vector<std::vector<int>> cartan_matrix(int n) {
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    if (i + 1 < n) {
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
      a[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
    }
  }
  return a;
}

Scalar counit(const HopfGenerator& g) {
  return g.kind == HopfKind::K || g.kind == HopfKind::Kinv ? Scalar(1) : Scalar(0);
}

Scalar counit(const HopfElement& h) {
  Scalar out;
  for (const auto& [w, c] : h.terms()) {
    Scalar t = c;
    for (const auto& g : w) t *= counit(g);
    out += t;
  }
  return out;
}

std::vector<std::pair<HopfElement, HopfElement>> coproduct(const HopfGenerator& g) {
  const int j = g.index;
  switch (g.kind) {
    case HopfKind::K: return {{HopfElement::K(j), HopfElement::K(j)}};
    case HopfKind::Kinv: return {{HopfElement::Kinv(j), HopfElement::Kinv(j)}};
    case HopfKind::E: return {{HopfElement::E(j), HopfElement::one()}, {HopfElement::K(j), HopfElement::E(j)}};
    case HopfKind::F: return {{HopfElement::F(j), HopfElement::Kinv(j)}, {HopfElement::one(), HopfElement::F(j)}};
  }
  return {};
}

HopfElement antipode(const HopfGenerator& g) {
  const int j = g.index;
  switch (g.kind) {
    case HopfKind::K: return HopfElement::Kinv(j);
    case HopfKind::Kinv: return HopfElement::K(j);
    case HopfKind::E: return -(HopfElement::Kinv(j) * HopfElement::E(j));
    case HopfKind::F: return -(HopfElement::F(j) * HopfElement::K(j));
  }
  return {};
}

HopfElement antipode(const HopfElement& h) {
  HopfElement out;
  for (const auto& [w, c] : h.terms()) {
    HopfElement t = HopfElement::scalar(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = t * antipode(*it);
    out += t;
  }
  return out;
}

HopfElement star(const HopfElement& h) {
  HopfElement out;
  for (const auto& [w, c] : h.terms()) out.add_term(HopfWord(w.rbegin(), w.rend()), c.star());
  return out;
}

ActionEngine::ActionEngine(AlgebraDescriptor d, HyperboloidExpansion mode) : desc_(d) {
  for (int j = 1; j <= d.n; ++j) {
    if (d.n == 1 && mode == HyperboloidExpansion::Q) {
      rho_.push_back(q_elem(d, 1));
      rho_inv_.push_back(q_elem_inverse(d, 1));
      a_.push_back(hyperboloid_a());
      b_.push_back(hyperboloid_b());
    } else {
      rho_.push_back(rho(d, j));
      rho_inv_.push_back(rho_inverse(d, j));
      a_.push_back(a_op(d, j));
      b_.push_back(b_op(d, j));
    }
  }
}

AlgebraElement ActionEngine::act(const HopfGenerator& g, const AlgebraElement& f) const {
  if (!(f.descriptor() == desc_)) {
    throw DescriptorMismatch("action engine for n=" + std::to_string(desc_.n) + " applied to element with n=" +
                             std::to_string(f.n()));
  }
  if (g.index < 1 || g.index > desc_.n) {
    throw IndexOutOfRange("generator " + g.to_string() + " outside 1.." + std::to_string(desc_.n));
  }
  const int j = g.index;
  switch (g.kind) {
    case HopfKind::K: return conj(j) * f * conj_inverse(j);
    case HopfKind::Kinv: return conj_inverse(j) * f * conj(j);
    case HopfKind::E: return a(j) * f - conj(j) * f * conj_inverse(j) * a(j);
    case HopfKind::F: {
      const AlgebraElement f_rho = f * conj(j);
      return b(j) * f_rho - Scalar::q0_pow(4) * (f_rho * b(j));
    }
  }
  return AlgebraElement(desc_);
}

AlgebraElement ActionEngine::act_element(const HopfElement& h, const AlgebraElement& f) const {
  AlgebraElement out(desc_);
  for (const auto& [w, c] : h.terms()) {
    AlgebraElement t = f;
    for (auto it = w.rbegin(); it != w.rend() && !t.is_zero(); ++it) t = act(*it, t);
    out += c * t;
  }
  return out;
}

AlgebraElement act(const HopfGenerator& g, const AlgebraElement& f) { return ActionEngine(f.descriptor()).act(g, f); }

AlgebraElement act_element(const HopfElement& h, const AlgebraElement& f) {
  return ActionEngine(f.descriptor()).act_element(h, f);
}

AlgebraElement action_table_entry(AlgebraDescriptor d, const HopfGenerator& g, LetterKind coordinate, int k) {
  const int n = d.n;
  const int j = g.index;
  if (coordinate == LetterKind::R) throw std::invalid_argument("action table covers y and x only");
  const bool is_y = coordinate == LetterKind::Y;
  const Scalar i = Scalar::i();
  const Scalar q = Scalar::q();
  const Scalar q0 = Scalar::q0();
  const AlgebraElement zero(d);
  const AlgebraElement self = is_y ? gen_y(d, k) : gen_x(d, k);

  if (g.kind == HopfKind::K || g.kind == HopfKind::Kinv) {
    int e = 0;  // K_j > coordinate = q^e coordinate
    if (j < n) {
      if (k == j) e = 1;
      if (k == j + 1) e = -1;
    } else {
      e = k < n ? 1 : 2;
    }
    if (!is_y) e = -e;
    if (g.kind == HopfKind::Kinv) e = -e;
    return Scalar::q0_pow(2 * e) * self;
  }
  if (j < n) {
    if (g.kind == HopfKind::E) {
      if (is_y) return k == j + 1 ? -(i * q0.inverse()) * gen_y(d, j) : zero;
      return k == j ? (i * q0.inverse()) * gen_x(d, j + 1) : zero;
    }
    if (is_y) return k == j ? (i * q0) * gen_y(d, j + 1) : zero;
    return k == j + 1 ? -(i * q0) * gen_x(d, j) : zero;
  }
  if (g.kind == HopfKind::E) {
    if (is_y) return (i * q) * (gen_y(d, n) * gen_y(d, k));
    return k < n ? zero : AlgebraElement::scalar(d, -(i * q.inverse()));
  }
  if (is_y) return k < n ? zero : AlgebraElement::scalar(d, i);
  return -(i * q * q) * (gen_x(d, k) * gen_x(d, n));
}

std::vector<HopfGenerator> generators(int max_index) {
  std::vector<HopfGenerator> out;
  for (int j = 1; j <= max_index; ++j) {
    for (HopfKind k : {HopfKind::K, HopfKind::Kinv, HopfKind::E, HopfKind::F}) out.push_back({k, j});
  }
  return out;
}

std::vector<AlgebraElement> test_monomials(AlgebraDescriptor d, int degree) {
  std::vector<AlgebraElement> out;
  // Signed exponent per index: positive for y_k, negative for x_k.
  std::vector<int> e(static_cast<std::size_t>(d.n), 0);
  auto rec = [&](auto&& self, int k, int budget) -> void {
    if (k == d.n) {
      Monomial m(d.n);
      for (std::size_t t = 0; t < e.size(); ++t) (e[t] > 0 ? m.y : m.x)[t] = std::abs(e[t]);
      out.push_back(AlgebraElement::monomial(d, m));
      return;
    }
    for (int v = -budget; v <= budget; ++v) {
      e[static_cast<std::size_t>(k)] = v;
      self(self, k + 1, budget - std::abs(v));
    }
    e[static_cast<std::size_t>(k)] = 0;
  };
  rec(rec, 0, degree);
  for (int k = 1; k <= d.n; ++k) {
    out.push_back(gen_r(d, k, 1));
    out.push_back(gen_r(d, k, -1));
  }
  return out;
}

namespace {

std::string idx2(int i, int j) { return "[i=" + std::to_string(i) + ";j=" + std::to_string(j) + "]"; }
std::string idx1(int j) { return "[j=" + std::to_string(j) + "]"; }

int resolve_max(const AlgebraDescriptor& d, const UqCheckOptions& opt) {
  if (opt.max_index == 0) return d.n;
  if (opt.max_index < 0 || opt.max_index > d.n) throw IndexOutOfRange("max_index outside 0..n");
  return opt.max_index;
}

std::string suffix(const AlgebraDescriptor& d, int max_index) {
  std::string s = "n=" + std::to_string(d.n);
  if (max_index < d.n) s += ";j<=" + std::to_string(max_index);
  return s;
}

}  // namespace

std::vector<std::pair<std::string, HopfElement>> defining_relations(int m) {
  using H = HopfElement;
  std::vector<std::pair<std::string, HopfElement>> out;
  const auto a = cartan_matrix(m);
  auto cart = [&](int i, int j) { return a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; };
  const Scalar qq = Scalar::q() + Scalar::q().inverse();
  for (int j = 1; j <= m; ++j) {
    out.emplace_back("KinvK" + idx1(j), H::Kinv(j) * H::K(j) - H::one());
    out.emplace_back("KKinv" + idx1(j), H::K(j) * H::Kinv(j) - H::one());
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i < j) out.emplace_back("KK" + idx2(i, j), H::K(i) * H::K(j) - H::K(j) * H::K(i));
      out.emplace_back("KE" + idx2(i, j), H::K(i) * H::E(j) - Scalar::q0_pow(2 * cart(i, j)) * (H::E(j) * H::K(i)));
      out.emplace_back("KF" + idx2(i, j), H::K(i) * H::F(j) - Scalar::q0_pow(-2 * cart(i, j)) * (H::F(j) * H::K(i)));
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 2; j <= m; ++j) {
      out.emplace_back("EE" + idx2(i, j), H::E(i) * H::E(j) - H::E(j) * H::E(i));
      out.emplace_back("FF" + idx2(i, j), H::F(i) * H::F(j) - H::F(j) * H::F(i));
    }
  }
  for (int j = 1; j <= m; ++j) {
    for (int l : {j - 1, j + 1}) {
      if (l < 1 || l > m) continue;
      out.emplace_back("serreE" + idx2(j, l),
                       H::E(j) * H::E(j) * H::E(l) - qq * (H::E(j) * H::E(l) * H::E(j)) + H::E(l) * H::E(j) * H::E(j));
      out.emplace_back("serreF" + idx2(j, l),
                       H::F(j) * H::F(j) * H::F(l) - qq * (H::F(j) * H::F(l) * H::F(j)) + H::F(l) * H::F(j) * H::F(j));
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (i != j) out.emplace_back("EF" + idx2(i, j), H::E(i) * H::F(j) - H::F(j) * H::E(i));
    }
  }
  const Scalar linv = Scalar::lambda().inverse();
  for (int j = 1; j <= m; ++j) {
    out.emplace_back("EF" + idx1(j), H::E(j) * H::F(j) - H::F(j) * H::E(j) - linv * (H::K(j) - H::Kinv(j)));
  }
  return out;
}

Report check_action_table(AlgebraDescriptor d, const UqCheckOptions& opt) {
  const int m = resolve_max(d, opt);
  const ActionEngine engine(d);
  Report r;
  for (const auto& g : generators(m)) {
    for (LetterKind c : {LetterKind::Y, LetterKind::X}) {
      for (int k = 1; k <= d.n; ++k) {
        const AlgebraElement f = c == LetterKind::Y ? gen_y(d, k) : gen_x(d, k);
        const AlgebraElement diff = engine.act(g, f) - action_table_entry(d, g, c, k);
        const std::string id =
            "table[" + suffix(d, m) + ";" + g.to_string() + ">" + (c == LetterKind::Y ? "y" : "x") + std::to_string(k) + "]";
        r.add("action-table", id, static_cast<double>(diff.size()), diff.is_zero(), diff.to_string());
      }
    }
  }
  return r;
}

Report check_module_algebra(AlgebraDescriptor d, const UqCheckOptions& opt) {
  const int m = resolve_max(d, opt);
  const ActionEngine engine(d);
  const auto basis = test_monomials(d, opt.degree);
  const AlgebraElement one = AlgebraElement::one(d);
  Report r;

  // Generators appearing in coproduct legs, with their action on every basis element cached.
  std::map<HopfGenerator, std::vector<AlgebraElement>> cache;
  auto acted = [&](const HopfGenerator& g) -> const std::vector<AlgebraElement>& {
    auto it = cache.find(g);
    if (it != cache.end()) return it->second;
    std::vector<AlgebraElement> v;
    v.reserve(basis.size());
    for (const auto& f : basis) v.push_back(engine.act(g, f));
    return cache.emplace(g, std::move(v)).first->second;
  };
  auto act_leg = [&](const HopfElement& h, std::size_t idx) {
    AlgebraElement out(d);
    for (const auto& [w, c] : h.terms()) {
      if (w.empty()) {
        out += c * basis[idx];
      } else {
        out += c * acted(w.front())[idx];  // coproduct legs are single letters
      }
    }
    return out;
  };

  for (const auto& g : generators(m)) {
    const std::string gs = g.to_string();
    // unit law
    {
      const AlgebraElement diff = engine.act(g, one) - AlgebraElement::scalar(d, counit(g));
      r.add("module-algebra", "unit[" + suffix(d, m) + ";g=" + gs + "]", static_cast<double>(diff.size()), diff.is_zero(),
            diff.to_string());
    }
    // Leibniz rule over all basis pairs
    const auto legs = coproduct(g);
    std::size_t bad = 0;
    std::string witness;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        AlgebraElement rhs(d);
        for (const auto& [l1, l2] : legs) rhs += act_leg(l1, a) * act_leg(l2, b);
        const AlgebraElement diff = engine.act(g, basis[a] * basis[b]) - rhs;
        if (!diff.is_zero()) {
          if (bad++ == 0) witness = "f1=" + basis[a].to_string() + ";f2=" + basis[b].to_string() + ";diff=" + diff.to_string();
        }
      }
    }
    r.add("module-algebra", "leibniz[" + suffix(d, m) + ";g=" + gs + "]", static_cast<double>(bad), bad == 0, witness);
    // star compatibility: (g > f)* = S(g)* > f*
    const HopfElement sg = star(antipode(g));
    bad = 0;
    witness.clear();
    for (const auto& f : basis) {
      const AlgebraElement diff = star(engine.act(g, f)) - engine.act_element(sg, star(f));
      if (!diff.is_zero() && bad++ == 0) witness = "f=" + f.to_string() + ";diff=" + diff.to_string();
    }
    r.add("module-algebra", "star[" + suffix(d, m) + ";g=" + gs + "]", static_cast<double>(bad), bad == 0, witness);
  }
  return r;
}

Report check_relations_through_action(AlgebraDescriptor d, const UqCheckOptions& opt) {
  const int m = resolve_max(d, opt);
  const ActionEngine engine(d);
  const auto basis = test_monomials(d, opt.degree);
  Report r;
  for (const auto& [name, rel] : defining_relations(m)) {
    std::size_t bad = 0;
    std::string witness;
    for (const auto& f : basis) {
      const AlgebraElement v = engine.act_element(rel, f);
      if (!v.is_zero() && bad++ == 0) witness = "f=" + f.to_string() + ";value=" + v.to_string();
    }
    r.add("module-algebra", "relation[" + suffix(d, m) + ";" + name + "]", static_cast<double>(bad), bad == 0, witness);
  }
  return r;
}

Report check_antipode_axiom(AlgebraDescriptor d, const UqCheckOptions& opt) {
  const int m = resolve_max(d, opt);
  const ActionEngine engine(d);
  const auto basis = test_monomials(d, opt.degree);
  Report r;
  for (const auto& g : generators(m)) {
    HopfElement left;
    HopfElement right;
    for (const auto& [l1, l2] : coproduct(g)) {
      left += antipode(l1) * l2;
      right += l1 * antipode(l2);
    }
    const Scalar e = counit(g);
    for (const auto& [side, h] : {std::pair{"S*id", left}, std::pair{"id*S", right}}) {
      std::size_t bad = 0;
      std::string witness;
      for (const auto& f : basis) {
        const AlgebraElement diff = engine.act_element(h, f) - e * f;
        if (!diff.is_zero() && bad++ == 0) witness = "f=" + f.to_string() + ";diff=" + diff.to_string();
      }
      r.add("module-algebra", std::string("antipode[") + suffix(d, m) + ";g=" + g.to_string() + ";" + side + "]",
            static_cast<double>(bad), bad == 0, witness);
    }
  }
  return r;
}

Report check_hyperboloid_expansions(const UqCheckOptions& opt) {
  const AlgebraDescriptor d(1);
  const ActionEngine with_q(d, HyperboloidExpansion::Q);
  const ActionEngine with_rho(d, HyperboloidExpansion::Rho);
  Report r;
  for (const auto& g : generators(1)) {
    std::size_t bad = 0;
    std::string witness;
    for (const auto& f : test_monomials(d, opt.degree)) {
      const AlgebraElement diff = with_q.act(g, f) - with_rho.act(g, f);
      if (!diff.is_zero() && bad++ == 0) witness = "f=" + f.to_string() + ";diff=" + diff.to_string();
    }
    r.add("action-table", "expansion[Q=rho;g=" + g.to_string() + "]", static_cast<double>(bad), bad == 0, witness);
  }
  return r;
}

}  // namespace qweyl
