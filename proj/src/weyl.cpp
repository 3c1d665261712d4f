#include "qweyl/weyl.hpp"

#include <stdexcept>

#include "qweyl/errors.hpp"

namespace qweyl {

AlgebraDescriptor::AlgebraDescriptor(int n_) : n(n_) {
  if (n < 1) throw IndexOutOfRange("algebra rank n must be >= 1");
}

int AlgebraDescriptor::sign(int k) const {
  if (k == n + 1) return 1;
  return ((n - k + 1) % 2 == 0) ? 1 : -1;
}

namespace {

void check_index(int k, int upper, const char* what) {
  if (k < 1 || k > upper) {
    throw IndexOutOfRange(std::string(what) + " index " + std::to_string(k) + " outside 1.." +
                          std::to_string(upper));
  }
}

void check_letter(const AlgebraDescriptor& d, const Letter& l) {
  const char* name = l.kind == LetterKind::R ? "R" : (l.kind == LetterKind::Y ? "y" : "x");
  check_index(l.index, d.n, name);
  if (l.kind != LetterKind::R && l.power != 1) throw std::invalid_argument("coordinate letters carry power 1");
}

void check_same(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
  if (!(a == b)) {
    throw DescriptorMismatch("algebra descriptors differ: n=" + std::to_string(a.n) + " vs n=" + std::to_string(b.n));
  }
}

// ---- normal form engine ----
//
// Coefficients produced while reducing a single word are integer Laurent polynomials in q0;
// each branch of the reduction carries a single signed power of q0.

using IntLaurent = std::map<int, long long>;

struct WorkItem {
  int sign;
  int q0_exp;
  std::vector<int> rexp;
  std::vector<Letter> letters;  // Y and X only
};

int key(const Letter& l, int n) { return l.kind == LetterKind::Y ? l.index : n + l.index; }

// Exponent of q picked up by moving R_k one step left past letter L: L R_k = q^w R_k L.
int r_weight(const Letter& l, int k) {
  if (l.index < k) return 0;
  return l.kind == LetterKind::Y ? -1 : 1;
}

int r_weight_prefix(const std::vector<Letter>& letters, std::size_t end, int k) {
  int w = 0;
  for (std::size_t i = 0; i < end; ++i) w += r_weight(letters[i], k);
  return w;
}

class Reducer {
 public:
  explicit Reducer(const AlgebraDescriptor& d) : d_(d) {}

  std::map<Monomial, IntLaurent> reduce(const Word& word) {
    std::map<Monomial, IntLaurent> out;
    WorkItem start{1, 0, std::vector<int>(static_cast<std::size_t>(d_.n), 0), {}};
    for (const Letter& l : word) {
      check_letter(d_, l);
      if (l.kind == LetterKind::R) {
        start.q0_exp += 2 * l.power * r_weight_prefix(start.letters, start.letters.size(), l.index);
        start.rexp[static_cast<std::size_t>(l.index - 1)] += l.power;
      } else {
        start.letters.push_back(l);
      }
    }
    stack_.push_back(std::move(start));
    while (!stack_.empty()) {
      WorkItem item = std::move(stack_.back());
      stack_.pop_back();
      step(std::move(item), out);
    }
    for (auto it = out.begin(); it != out.end();) {
      for (auto jt = it->second.begin(); jt != it->second.end();) {
        jt = jt->second == 0 ? it->second.erase(jt) : std::next(jt);
      }
      it = it->second.empty() ? out.erase(it) : std::next(it);
    }
    return out;
  }

 private:
  // Replaces the adjacent same-index pair at letters[pos], letters[pos+1] by
  // Q_{k+1} - q0^{minus_q_exp} Q_k, moving the new R factors to the front.
  void collapse(const WorkItem& item, std::size_t pos, int k, int minus_q_exp) {
    std::vector<Letter> rest;
    rest.reserve(item.letters.size() - 2);
    rest.insert(rest.end(), item.letters.begin(), item.letters.begin() + static_cast<long>(pos));
    rest.insert(rest.end(), item.letters.begin() + static_cast<long>(pos) + 2, item.letters.end());
    // Q_{k+1}
    {
      WorkItem w{item.sign * d_.sign(k + 1), item.q0_exp, item.rexp, rest};
      if (k + 1 <= d_.n) {
        w.q0_exp += 4 * r_weight_prefix(item.letters, pos, k + 1);
        w.rexp[static_cast<std::size_t>(k)] += 2;
      }
      stack_.push_back(std::move(w));
    }
    // -q^{+-1} Q_k
    {
      WorkItem w{-item.sign * d_.sign(k), item.q0_exp + minus_q_exp, item.rexp, std::move(rest)};
      w.q0_exp += 4 * r_weight_prefix(item.letters, pos, k);
      w.rexp[static_cast<std::size_t>(k - 1)] += 2;
      stack_.push_back(std::move(w));
    }
  }

  void step(WorkItem item, std::map<Monomial, IntLaurent>& out) {
    const int n = d_.n;
    auto& L = item.letters;
    for (std::size_t i = 0; i + 1 < L.size(); ++i) {
      const Letter a = L[i];
      const Letter b = L[i + 1];
      if (key(a, n) <= key(b, n)) continue;
      if (a.kind == LetterKind::X && b.kind == LetterKind::Y && a.index == b.index) {
        collapse(item, i, a.index, 2);  // x_k y_k = Q_{k+1} - q Q_k
        return;
      }
      if (a.kind == LetterKind::Y) {
        item.q0_exp -= 2;  // y_b y_a = q^-1 y_a y_b (a < b)
      } else if (b.kind == LetterKind::X) {
        item.q0_exp += 2;  // x_b x_a = q x_a x_b (a < b)
      } else {
        item.q0_exp += 2;  // x_l y_k = q y_k x_l (k != l)
      }
      std::swap(L[i], L[i + 1]);
      stack_.push_back(std::move(item));
      return;
    }
    // Sorted. Eliminate the first same-index y/x pair, if any.
    for (int k = 1; k <= n; ++k) {
      std::size_t last_y = L.size();
      std::size_t first_x = L.size();
      for (std::size_t i = 0; i < L.size(); ++i) {
        if (L[i].index != k) continue;
        if (L[i].kind == LetterKind::Y) last_y = i;
        if (L[i].kind == LetterKind::X && first_x == L.size()) first_x = i;
      }
      if (last_y == L.size() || first_x == L.size()) continue;
      // Carry y_k right until it meets x_k.
      for (std::size_t i = last_y + 1; i < first_x; ++i) {
        item.q0_exp += L[i].kind == LetterKind::Y ? 2 : -2;  // y_k y_j = q y_j y_k (k<j); y_k x_j = q^-1 x_j y_k
      }
      const Letter yk = L[last_y];
      L.erase(L.begin() + static_cast<long>(last_y));
      L.insert(L.begin() + static_cast<long>(first_x) - 1, yk);
      collapse(item, first_x - 1, k, -2);  // y_k x_k = Q_{k+1} - q^-1 Q_k
      return;
    }
    Monomial m(n);
    m.r = item.rexp;
    for (const Letter& l : L) {
      auto& slot = l.kind == LetterKind::Y ? m.y : m.x;
      ++slot[static_cast<std::size_t>(l.index - 1)];
    }
    out[m][item.q0_exp] += item.sign;
  }

  AlgebraDescriptor d_;
  std::vector<WorkItem> stack_;
};

Scalar apply_laurent(const Scalar& c, const IntLaurent& p) {
  if (p.size() == 1) {
    const auto& [e, v] = *p.begin();
    Scalar r = c.mul_q0_pow(e);
    if (v == 1) return r;
    if (v == -1) return -r;
    return r * Scalar(static_cast<long>(v));
  }
  Scalar acc;
  for (const auto& [e, v] : p) acc += Scalar(static_cast<long>(v)).mul_q0_pow(e);
  return c * acc;
}

void accumulate(std::map<Monomial, Scalar>& terms, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

// ---- FreeExpr ----

FreeExpr FreeExpr::scalar(AlgebraDescriptor d, Scalar c) {
  FreeExpr e(d);
  e.add_term({}, std::move(c));
  return e;
}

FreeExpr FreeExpr::letter(AlgebraDescriptor d, Letter l) {
  check_letter(d, l);
  FreeExpr e(d);
  e.add_term({l}, Scalar(1));
  return e;
}

FreeExpr FreeExpr::q_power(AlgebraDescriptor d, int k, int power) {
  check_index(k, d.n + 1, "Q");
  if (k == d.n + 1 || power == 0) return scalar(d, Scalar(1));
  const long s = (power % 2 == 0) ? 1 : d.sign(k);
  FreeExpr e(d);
  e.add_term({Letter{LetterKind::R, k, 2 * power}}, Scalar(s));
  return e;
}

void FreeExpr::add_term(Word w, Scalar c) {
  if (c.is_zero()) return;
  for (const auto& l : w) check_letter(desc_, l);
  terms_.emplace_back(std::move(w), std::move(c));
}

FreeExpr FreeExpr::star() const {
  FreeExpr r(desc_);
  for (const auto& [w, c] : terms_) r.terms_.emplace_back(Word(w.rbegin(), w.rend()), c.star());
  return r;
}

FreeExpr FreeExpr::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of a free expression");
  FreeExpr r = scalar(desc_, Scalar(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

FreeExpr& FreeExpr::operator+=(const FreeExpr& o) {
  check_same(desc_, o.desc_);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

FreeExpr& FreeExpr::operator-=(const FreeExpr& o) { return *this += -o; }

FreeExpr operator-(const FreeExpr& a) {
  FreeExpr r(a.desc_);
  for (const auto& [w, c] : a.terms_) r.terms_.emplace_back(w, -c);
  return r;
}

FreeExpr operator*(const FreeExpr& a, const FreeExpr& b) {
  check_same(a.desc_, b.desc_);
  FreeExpr r(a.desc_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(std::move(w), ca * cb);
    }
  }
  return r;
}

FreeExpr operator*(const Scalar& c, const FreeExpr& a) {
  FreeExpr r(a.desc_);
  for (const auto& [w, ca] : a.terms_) r.add_term(w, c * ca);
  return r;
}

// ---- Monomial ----

int Monomial::degree() const {
  int d = 0;
  for (std::size_t k = 0; k < y.size(); ++k) d += y[k] + x[k];
  return d;
}

bool Monomial::is_pure_r() const { return degree() == 0; }

Word Monomial::word() const {
  Word w;
  const int n = static_cast<int>(r.size());
  for (int k = 1; k <= n; ++k) {
    if (r[static_cast<std::size_t>(k - 1)] != 0) w.push_back({LetterKind::R, k, r[static_cast<std::size_t>(k - 1)]});
  }
  for (int k = 1; k <= n; ++k) {
    for (int e = 0; e < y[static_cast<std::size_t>(k - 1)]; ++e) w.push_back({LetterKind::Y, k, 1});
  }
  for (int k = 1; k <= n; ++k) {
    for (int e = 0; e < x[static_cast<std::size_t>(k - 1)]; ++e) w.push_back({LetterKind::X, k, 1});
  }
  return w;
}

// ---- AlgebraElement ----

AlgebraElement AlgebraElement::scalar(AlgebraDescriptor d, const Scalar& c) {
  AlgebraElement e(d);
  e.add_term(Monomial(d.n), c);
  return e;
}

AlgebraElement AlgebraElement::monomial(AlgebraDescriptor d, Monomial m, Scalar c) {
  if (static_cast<int>(m.r.size()) != d.n) throw DescriptorMismatch("monomial length differs from n");
  for (std::size_t k = 0; k < m.y.size(); ++k) {
    if (m.y[k] < 0 || m.x[k] < 0) throw std::invalid_argument("negative coordinate exponent");
  }
  FreeExpr e(d);
  e.add_term(m.word(), std::move(c));
  return normal_form(e);
}

void AlgebraElement::add_term(const Monomial& m, const Scalar& c) { accumulate(terms_, m, c); }

Scalar AlgebraElement::constant_term() const {
  auto it = terms_.find(Monomial(desc_.n));
  return it == terms_.end() ? Scalar() : it->second;
}

bool AlgebraElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial(desc_.n));
}

FreeExpr AlgebraElement::to_free() const {
  FreeExpr e(desc_);
  for (const auto& [m, c] : terms_) e.add_term(m.word(), c);
  return e;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    auto put = [&mono](const char* name, int index, int power) {
      if (power == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name + std::to_string(index);
      if (power != 1) mono += "^" + std::to_string(power);
    };
    for (std::size_t k = 0; k < m.r.size(); ++k) put("R", static_cast<int>(k) + 1, m.r[k]);
    for (std::size_t k = 0; k < m.y.size(); ++k) put("y", static_cast<int>(k) + 1, m.y[k]);
    for (std::size_t k = 0; k < m.x.size(); ++k) put("x", static_cast<int>(k) + 1, m.x[k]);
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

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same(desc_, o.desc_);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same(desc_, o.desc_);
  for (const auto& [m, c] : o.terms_) accumulate(terms_, m, -c);
  return *this;
}

AlgebraElement operator-(const AlgebraElement& a) {
  AlgebraElement r(a.desc_);
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
  return r;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  AlgebraElement r(a.desc_);
  if (c.is_zero()) return r;
  for (const auto& [m, ca] : a.terms_) r.terms_.emplace(m, c * ca);
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.desc_ == b.desc_ && a.terms_ == b.terms_;
}

AlgebraElement normal_form(const FreeExpr& expr) {
  const AlgebraDescriptor& d = expr.descriptor();
  Reducer reducer(d);
  AlgebraElement result(d);
  std::map<Monomial, Scalar> terms;
  for (const auto& [w, c] : expr.terms()) {
    for (const auto& [m, p] : reducer.reduce(w)) accumulate(terms, m, apply_laurent(c, p));
  }
  for (const auto& [m, c] : terms) result.add_term(m, c);
  return result;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a.descriptor(), b.descriptor());
  const AlgebraDescriptor& d = a.descriptor();
  Reducer reducer(d);
  std::map<Monomial, Scalar> terms;
  for (const auto& [ma, ca] : a.terms()) {
    const Word wa = ma.word();
    for (const auto& [mb, cb] : b.terms()) {
      Word w = wa;
      const Word wb = mb.word();
      w.insert(w.end(), wb.begin(), wb.end());
      const Scalar c = ca * cb;
      for (const auto& [m, p] : reducer.reduce(w)) accumulate(terms, m, apply_laurent(c, p));
    }
  }
  AlgebraElement result(d);
  for (const auto& [m, c] : terms) result.add_term(m, c);
  return result;
}

AlgebraElement star(const AlgebraElement& a) { return normal_form(a.to_free().star()); }

AlgebraElement power(const AlgebraElement& a, int k) {
  if (k < 0) return power(inverse_r_monomial(a), -k);
  AlgebraElement r = AlgebraElement::one(a.descriptor());
  for (int i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

AlgebraElement inverse_r_monomial(const AlgebraElement& a) {
  if (a.size() != 1 || !a.terms().begin()->first.is_pure_r()) {
    throw std::domain_error("only single pure-R monomials are invertible here");
  }
  const auto& [m, c] = *a.terms().begin();
  Monomial inv = m;
  for (auto& e : inv.r) e = -e;
  AlgebraElement r(a.descriptor());
  r.add_term(inv, c.inverse());
  return r;
}

// ---- generators and derived elements ----

AlgebraElement gen_y(AlgebraDescriptor d, int k) { return normal_form(FreeExpr::y(d, k)); }
AlgebraElement gen_x(AlgebraDescriptor d, int k) { return normal_form(FreeExpr::x(d, k)); }
AlgebraElement gen_r(AlgebraDescriptor d, int k, int power) { return normal_form(FreeExpr::r(d, k, power)); }

AlgebraElement q_elem(AlgebraDescriptor d, int k) { return normal_form(FreeExpr::q_power(d, k, 1)); }
AlgebraElement q_elem_inverse(AlgebraDescriptor d, int k) { return normal_form(FreeExpr::q_power(d, k, -1)); }

namespace {

// R_k^p with R_{n+1} = 1.
FreeExpr r_or_one(AlgebraDescriptor d, int k, int p) {
  if (k == d.n + 1 || p == 0) return FreeExpr::scalar(d, Scalar(1));
  return FreeExpr::r(d, k, p);
}

FreeExpr rho_free(AlgebraDescriptor d, int k, int sign) {
  check_index(k, d.n, "rho");
  if (k < d.n) return r_or_one(d, k, sign) * r_or_one(d, k + 1, -2 * sign) * r_or_one(d, k + 2, sign);
  return r_or_one(d, 1, sign) * r_or_one(d, d.n, sign);
}

}  // namespace

AlgebraElement rho(AlgebraDescriptor d, int k) { return normal_form(rho_free(d, k, 1)); }
AlgebraElement rho_inverse(AlgebraDescriptor d, int k) { return normal_form(rho_free(d, k, -1)); }

AlgebraElement a_op(AlgebraDescriptor d, int k) {
  check_index(k, d.n, "A");
  const Scalar i = Scalar::i();
  const Scalar linv = Scalar::lambda().inverse();
  if (k == d.n) return normal_form(-(i * linv) * FreeExpr::y(d, k));
  // i lambda^-1 q0^-1 q^-1 Q_{k+1}^-1 x_{k+1} y_k
  const Scalar c = i * linv * Scalar::q0_pow(-3);
  return normal_form(c * (FreeExpr::q_power(d, k + 1, -1) * FreeExpr::x(d, k + 1) * FreeExpr::y(d, k)));
}

AlgebraElement b_op(AlgebraDescriptor d, int k) {
  check_index(k, d.n, "B");
  const Scalar i = Scalar::i();
  const Scalar linv = Scalar::lambda().inverse();
  if (k == d.n) {
    // -i lambda^-1 q^-1 rho_n^-1 x_n
    return normal_form(-(i * linv * Scalar::q0_pow(-2)) * (rho_free(d, k, -1) * FreeExpr::x(d, k)));
  }
  // -i lambda^-1 q0 rho_k^-1 Q_{k+1}^-1 y_{k+1} x_k
  const Scalar c = -(i * linv * Scalar::q0());
  return normal_form(c * (rho_free(d, k, -1) * FreeExpr::q_power(d, k + 1, -1) * FreeExpr::y(d, k + 1) *
                          FreeExpr::x(d, k)));
}

AlgebraElement gamma(AlgebraDescriptor d) {
  if (d.n == 1) return gen_r(d, 1, -2);
  FreeExpr g = FreeExpr::r(d, 1, -2 * d.n);
  for (int k = 2; k <= d.n; ++k) g = g * FreeExpr::r(d, k, 2);
  return normal_form(g);
}

AlgebraElement hyperboloid_a() { return a_op(AlgebraDescriptor(1), 1); }

AlgebraElement hyperboloid_b() {
  const AlgebraDescriptor d(1);
  const Scalar c = -(Scalar::i() * Scalar::lambda().inverse() * Scalar::q0_pow(-2));
  return normal_form(c * (FreeExpr::q_power(d, 1, -1) * FreeExpr::x(d, 1)));
}

IdentityResult verify_identity(const FreeExpr& lhs, const FreeExpr& rhs) {
  AlgebraElement rem = normal_form(lhs - rhs);
  return {rem.is_zero(), std::move(rem)};
}

IdentityResult verify_identity(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  AlgebraElement rem = lhs - rhs;
  return {rem.is_zero(), std::move(rem)};
}

}  // namespace qweyl
