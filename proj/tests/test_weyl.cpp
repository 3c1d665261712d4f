#include <optional>
#include <random>

#include "doctest.h"
#include "qweyl/errors.hpp"
#include "qweyl/weyl.hpp"

using namespace qweyl;

namespace {

// Independent rewriting oracle: applies single rewrite steps at random positions until no
// rule applies, then reads the monomial off the sorted word.
class NaiveRewriter {
 public:
  NaiveRewriter(AlgebraDescriptor d, std::uint64_t seed) : d_(d), rng_(seed) {}

  AlgebraElement reduce(const FreeExpr& e) {
    std::vector<std::pair<Word, Scalar>> pending(e.terms().begin(), e.terms().end());
    AlgebraElement out(d_);
    while (!pending.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
      const std::size_t t = pick(rng_);
      auto [w, c] = pending[t];
      pending.erase(pending.begin() + static_cast<long>(t));
      auto next = step(w, c);
      if (!next) {
        out += AlgebraElement::monomial(d_, read(w), c);
        continue;
      }
      for (auto& p : *next) pending.push_back(std::move(p));
    }
    return out;
  }

 private:
  using Terms = std::vector<std::pair<Word, Scalar>>;

  static Scalar qp(int k) { return Scalar::q0_pow(2 * k); }

  Word q_word(int k) const {
    if (k == d_.n + 1) return {};
    return {{LetterKind::R, k, 2}};
  }
  Scalar q_sign(int k) const { return Scalar(d_.sign(k)); }

  static Word splice(const Word& w, std::size_t at, std::size_t len, const Word& mid) {
    Word out(w.begin(), w.begin() + static_cast<long>(at));
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), w.begin() + static_cast<long>(at + len), w.end());
    return out;
  }

  std::optional<Terms> local(const Word& w, std::size_t i, const Scalar& c) const {
    const Letter& a = w[i];
    const Letter& b = w[i + 1];
    using K = LetterKind;
    if (a.kind == K::R && b.kind == K::R) {
      if (a.index == b.index) {
        Word mid;
        if (a.power + b.power != 0) mid.push_back({K::R, a.index, a.power + b.power});
        return Terms{{splice(w, i, 2, mid), c}};
      }
      if (a.index > b.index) return Terms{{splice(w, i, 2, {b, a}), c}};
      return std::nullopt;
    }
    if (b.kind == K::R) {
      const int e = a.index >= b.index ? (a.kind == K::Y ? -1 : 1) : 0;
      return Terms{{splice(w, i, 2, {b, a}), c * qp(e * b.power)}};
    }
    if (a.kind == K::R) return std::nullopt;
    if (a.kind == K::Y && b.kind == K::Y && a.index > b.index) return Terms{{splice(w, i, 2, {b, a}), c * qp(-1)}};
    if (a.kind == K::X && b.kind == K::X && a.index > b.index) return Terms{{splice(w, i, 2, {b, a}), c * qp(1)}};
    if (a.kind == K::X && b.kind == K::Y) {
      if (a.index != b.index) return Terms{{splice(w, i, 2, {b, a}), c * qp(1)}};
      const int k = a.index;
      return Terms{{splice(w, i, 2, q_word(k + 1)), c * q_sign(k + 1)},
                   {splice(w, i, 2, q_word(k)), -(c * qp(1) * q_sign(k))}};
    }
    return std::nullopt;
  }

  std::optional<Terms> step(const Word& w, const Scalar& c) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (local(w, i, c)) spots.push_back(i);
    }
    if (!spots.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, spots.size() - 1);
      return local(w, spots[pick(rng_)], c);
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].kind == LetterKind::R && w[i].power == 0) return Terms{{splice(w, i, 1, {}), c}};
    }
    // Sorted word holding y_k and x_k: move y_k right until it meets x_k, then collapse.
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].kind != LetterKind::Y) continue;
      const int k = w[i].index;
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].kind == LetterKind::X && w[j].index == k) {
          Word v = w;
          Scalar s = c;
          for (std::size_t p = i; p + 1 < j; ++p) {
            const Letter& nb = v[p + 1];
            if (nb.kind == LetterKind::Y) {
              if (nb.index != k) s = s * qp(1);  // y_k y_m = q y_m y_k, k < m
            } else {
              s = s * qp(-1);  // y_k x_m = q^-1 x_m y_k, k != m
            }
            std::swap(v[p], v[p + 1]);
          }
          const std::size_t at = j - 1;
          return Terms{{splice(v, at, 2, q_word(k + 1)), s * q_sign(k + 1)},
                       {splice(v, at, 2, q_word(k)), -(s * qp(-1) * q_sign(k))}};
        }
      }
    }
    return std::nullopt;
  }

  Monomial read(const Word& w) const {
    Monomial m(d_.n);
    for (const Letter& l : w) {
      auto& slot = l.kind == LetterKind::R ? m.r : (l.kind == LetterKind::Y ? m.y : m.x);
      slot[static_cast<std::size_t>(l.index - 1)] += l.power;
    }
    return m;
  }

  AlgebraDescriptor d_;
  std::mt19937_64 rng_;
};

FreeExpr random_word_expr(AlgebraDescriptor d, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> idx(1, d.n);
  std::uniform_int_distribution<int> pw(-2, 2);
  std::uniform_int_distribution<int> cf(-3, 3);
  FreeExpr e(d);
  for (int t = 0; t < 2; ++t) {
    Word w;
    for (int i = 0, l = len(rng); i < l; ++i) {
      const int k = kind(rng);
      if (k == 0) w.push_back({LetterKind::R, idx(rng), pw(rng) == 0 ? 1 : pw(rng) | 1});
      else w.push_back({k == 1 ? LetterKind::Y : LetterKind::X, idx(rng), 1});
    }
    e.add_term(w, Scalar(cf(rng)) * Scalar::q0_pow(pw(rng)));
  }
  return e;
}

}  // namespace

TEST_CASE("hyperboloid relations") {
  const AlgebraDescriptor d(1);
  const auto x = gen_x(d, 1);
  const auto y = gen_y(d, 1);
  const auto Q = q_elem(d, 1);
  CHECK(x * y == AlgebraElement::one(d) - Scalar::q() * Q);
  CHECK(verify_identity(x * y - Scalar::q0_pow(4) * (y * x), AlgebraElement::scalar(d, Scalar(1) - Scalar::q0_pow(4))).holds);
  const auto r = verify_identity(x * y, y * x);
  CHECK_FALSE(r.holds);
  CHECK(r.remainder == (Scalar::q() * Scalar::q() - Scalar(1)) * (y * x - AlgebraElement::one(d)));
}

TEST_CASE("gamma") {
  CHECK(gamma(AlgebraDescriptor(1)) == gen_r(AlgebraDescriptor(1), 1, -2));
  const AlgebraDescriptor d3(3);
  CHECK(gamma(d3) == gen_r(d3, 1, -6) * gen_r(d3, 2, 2) * gen_r(d3, 3, 2));
}

TEST_CASE("normal form agrees with naive rewriting") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 3; ++n) {
    const AlgebraDescriptor d(n);
    NaiveRewriter oracle(d, 100 + static_cast<std::uint64_t>(n));
    for (int t = 0; t < 60; ++t) {
      const FreeExpr e = random_word_expr(d, rng, 6);
      const auto want = oracle.reduce(e);
      INFO("nf " << normal_form(e).to_string() << " oracle " << want.to_string());
      CHECK(normal_form(e) == want);
    }
  }
}

TEST_CASE("associativity and star") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 3; ++n) {
    const AlgebraDescriptor d(n);
    for (int t = 0; t < 25; ++t) {
      const auto a = normal_form(random_word_expr(d, rng, 3));
      const auto b = normal_form(random_word_expr(d, rng, 3));
      const auto c = normal_form(random_word_expr(d, rng, 3));
      CHECK((a * b) * c == a * (b * c));
      CHECK(star(a * b) == star(b) * star(a));
      CHECK(star(star(a)) == a);
    }
  }
}

TEST_CASE("identity catalogs hold") {
  for (int n = 1; n <= 4; ++n) {
    const AlgebraDescriptor d(n);
    for (auto make : {weyl_relation_identities, ab_rho_identities, hermiticity_identities}) {
      for (const auto& id : make(d)) {
        INFO("n=" << n << " " << id.name << " remainder " << verify_identity(id.lhs, id.rhs).remainder.to_string());
        CHECK(verify_identity(id.lhs, id.rhs).holds);
      }
    }
  }
}

TEST_CASE("hilf6 with the factor q fails, with q^-1 it holds") {
  for (int n = 2; n <= 3; ++n) {
    const AlgebraDescriptor d(n);
    const auto M = q_elem_inverse(d, n) * gen_y(d, n - 1);
    const auto r = verify_identity(a_op(d, n - 1) * M, Scalar::q() * (M * a_op(d, n - 1)));
    CHECK_FALSE(r.holds);
    CHECK(r.remainder.to_string() == "(-i*q0^-1)*R" + std::to_string(n) + "^-4*y" + std::to_string(n - 1) + "^2*x" +
                                         std::to_string(n));
    CHECK(verify_identity(a_op(d, n - 1) * M, Scalar::q().inverse() * (M * a_op(d, n - 1))).holds);
  }
}

TEST_CASE("index checks") {
  const AlgebraDescriptor d(2);
  CHECK_THROWS_AS(gen_y(d, 3), IndexOutOfRange);
  CHECK_NOTHROW(q_elem(d, 3));
  CHECK_THROWS_AS(q_elem(d, 4), IndexOutOfRange);
  CHECK_THROWS_AS(gen_x(d, 1) * gen_x(AlgebraDescriptor(3), 1), DescriptorMismatch);
}

TEST_CASE("antisymmetrized cross relation fails, the commutator form holds") {
  const AlgebraDescriptor d(2);
  CHECK_FALSE(verify_identity(a_op(d, 1) * b_op(d, 2), a_op(d, 2) * b_op(d, 1)).holds);
  CHECK(verify_identity(a_op(d, 1) * b_op(d, 2), b_op(d, 2) * a_op(d, 1)).holds);
}
