#include "doctest.h"
#include "qweyl/errors.hpp"
#include "qweyl/uq.hpp"

using namespace qweyl;

namespace {

void check_report(const Report& r) {
  for (const auto& rec : r.records()) {
    INFO(format_record(rec));
    CHECK(rec.pass);
  }
}

}  // namespace

TEST_CASE("generator tables") {
  using H = HopfElement;
  CHECK(counit(H::K(1)).is_one());
  CHECK(counit(H::E(1) * H::F(1)).is_zero());
  CHECK(counit(H::K(1) + H::E(1)).is_one());
  const auto dE = coproduct({HopfKind::E, 2});
  REQUIRE(dE.size() == 2);
  CHECK(dE[0].first == H::E(2));
  CHECK(dE[0].second == H::one());
  CHECK(dE[1].first == H::K(2));
  CHECK(dE[1].second == H::E(2));
  CHECK(antipode(HopfGenerator{HopfKind::K, 1}) == H::Kinv(1));
  CHECK(antipode(HopfGenerator{HopfKind::E, 1}) == -(H::Kinv(1) * H::E(1)));
  CHECK(antipode(HopfGenerator{HopfKind::F, 1}) == -(H::F(1) * H::K(1)));
  CHECK(star(antipode(H::F(1))) == -(H::K(1) * H::F(1)));
  CHECK(star(Scalar::i() * (H::E(1) * H::F(2))) == -Scalar::i() * (H::F(2) * H::E(1)));
  CHECK(antipode(H::E(1) * H::F(1)) == H::F(1) * H::K(1) * H::Kinv(1) * H::E(1));
  const auto a = cartan_matrix(3);
  CHECK(a[0][0] == 2);
  CHECK(a[0][1] == -1);
  CHECK(a[0][2] == 0);
  CHECK(a[2][1] == -1);
}

TEST_CASE("action values") {
  const Scalar i = Scalar::i();
  for (int n = 1; n <= 3; ++n) {
    const AlgebraDescriptor d(n);
    CHECK(act({HopfKind::F, n}, gen_y(d, n)) == AlgebraElement::scalar(d, i));
    CHECK(act({HopfKind::E, n}, gen_x(d, n)) == AlgebraElement::scalar(d, -(i * Scalar::q().inverse())));
    for (int j = 1; j < n; ++j) {
      CHECK(act({HopfKind::E, j}, gen_x(d, j)) == (i * Scalar::q0().inverse()) * gen_x(d, j + 1));
    }
    const auto f = gen_y(d, 1) * gen_x(d, n);
    CHECK(act_element(HopfElement::one(), f) == f);
    CHECK(act_element(HopfElement::K(1) * HopfElement::Kinv(1), f) == f);
  }
  const AlgebraDescriptor d1(1);
  CHECK(act({HopfKind::E, 1}, gen_y(d1, 1)) == (i * Scalar::q()) * (gen_y(d1, 1) * gen_y(d1, 1)));
  CHECK(act({HopfKind::K, 1}, gen_x(d1, 1)) == Scalar::q0_pow(-4) * gen_x(d1, 1));
  CHECK_THROWS_AS(act({HopfKind::E, 2}, gen_x(d1, 1)), IndexOutOfRange);
}

TEST_CASE("commutator acts as lambda^-1 (K - K^-1) at n=1, degree 4") {
  using H = HopfElement;
  const AlgebraDescriptor d(1);
  const ActionEngine e(d);
  const H lhs = H::E(1) * H::F(1) - H::F(1) * H::E(1);
  const H rhs = Scalar::lambda().inverse() * (H::K(1) - H::Kinv(1));
  for (const auto& f : test_monomials(d, 4)) CHECK(e.act_element(lhs, f) == e.act_element(rhs, f));
}

TEST_CASE("action table") {
  for (int n = 1; n <= 3; ++n) check_report(check_action_table(AlgebraDescriptor(n)));
  check_report(check_hyperboloid_expansions());
}

TEST_CASE("module algebra axioms") {
  for (int n = 1; n <= 2; ++n) check_report(check_module_algebra(AlgebraDescriptor(n)));
}

TEST_CASE("relations and antipode through the action") {
  for (int n = 1; n <= 2; ++n) {
    check_report(check_relations_through_action(AlgebraDescriptor(n)));
    check_report(check_antipode_axiom(AlgebraDescriptor(n)));
  }
}

TEST_CASE("sub-Hopf restriction") {
  const UqCheckOptions opt{3, 1};
  check_report(check_action_table(AlgebraDescriptor(2), opt));
  check_report(check_module_algebra(AlgebraDescriptor(2), opt));
  check_report(check_relations_through_action(AlgebraDescriptor(2), opt));
}

TEST_CASE("a wrong table entry is detected") {
  const AlgebraDescriptor d(2);
  const AlgebraElement wrong = act({HopfKind::E, 1}, gen_x(d, 1)) - action_table_entry(d, {HopfKind::F, 1}, LetterKind::X, 2);
  CHECK_FALSE(wrong.is_zero());
}

TEST_CASE("naive Leibniz rule and antisymmetrized cross relation are rejected") {
  using H = HopfElement;
  const AlgebraDescriptor d(2);
  const ActionEngine e(d);
  const auto f = gen_y(d, 2);
  const HopfGenerator E1{HopfKind::E, 1};
  CHECK_FALSE((e.act(E1, f * f) - (e.act(E1, f) * f + f * e.act(E1, f))).is_zero());
  bool nonzero = false;
  for (const auto& m : test_monomials(d, 2)) nonzero = nonzero || !e.act_element(H::E(1) * H::F(2) - H::E(2) * H::F(1), m).is_zero();
  CHECK(nonzero);
}
