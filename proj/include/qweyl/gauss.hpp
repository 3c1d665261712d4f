#pragma once

// Series (I) representation of A_q(n;R) (all k_j = 0, K = C, omega_l = 1) on
// F^{(x)n}, F = Lin{e^{-eps t^2 + gamma t}}, built from the shifts e^{alpha T}, e^{beta P}.
//
// Leg m carries the variable of the m-th tensor factor. With l' = n - l + 1:
//   y_l   = e^{phi P} on legs 1..l'-1,  e^{T} on leg l'
//   x_l   = (-1)^{l'-1} e^{phi P} on legs 1..l'-1,  (q e^{2 phi P} + 1) e^{-T} on leg l'
//   R_l   = e^{phi P} on legs 1..l'
// Operators are kept exact: every leg factor is normal ordered as e^{alpha T} e^{beta P} with
// alpha integer and beta = m phi + p pi, so e^{beta P} e^{alpha T} = q^{m alpha} (-1)^{p alpha}
// e^{alpha T} e^{beta P} stays in Q(i)(q0). Floats appear only when acting on states.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qweyl/coeff.hpp"
#include "qweyl/report.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

/// e^{alpha T} e^{(m phi + p pi) P} on one leg.
struct LegShift {
  int alpha = 0;
  int m = 0;
  int p = 0;
  auto operator<=>(const LegShift&) const = default;
  double beta(double phi) const;
};

/// Term key: one LegShift per leg and a matrix unit E_{row,col} on the internal space.
struct ShiftKey {
  std::vector<LegShift> legs;
  int row = 0;
  int col = 0;
  auto operator<=>(const ShiftKey&) const = default;
};

/// Exact linear combination of elementary operators (x)_legs e^{alpha T} e^{beta P} (x) E_{row,col}.
class ShiftOperator {
 public:
  ShiftOperator(int legs, int dim) : legs_(legs), dim_(dim) {}
  static ShiftOperator identity(int legs, int dim = 1);
  /// c * the given per-leg shifts (x) E_{row,col}.
  static ShiftOperator elementary(std::vector<LegShift> legs, const Scalar& c, int dim = 1, int row = 0, int col = 0);

  int legs() const { return legs_; }
  int dim() const { return dim_; }
  const std::map<ShiftKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const ShiftKey& k, const Scalar& c);

  ShiftOperator adjoint() const;

  ShiftOperator& operator+=(const ShiftOperator& o);
  ShiftOperator& operator-=(const ShiftOperator& o);
  friend ShiftOperator operator+(ShiftOperator a, const ShiftOperator& b) { return a += b; }
  friend ShiftOperator operator-(ShiftOperator a, const ShiftOperator& b) { return a -= b; }
  friend ShiftOperator operator*(const ShiftOperator& a, const ShiftOperator& b);
  friend ShiftOperator operator*(const Scalar& c, const ShiftOperator& a);
  friend bool operator==(const ShiftOperator& a, const ShiftOperator& b) { return a.terms_ == b.terms_; }

 private:
  int legs_;
  int dim_;
  std::map<ShiftKey, Scalar> terms_;
};

/// prefactor * e^{-epsilon t^2 + gamma t}.
struct GaussianFactor {
  double epsilon = 1.0;
  Complex gamma{0.0, 0.0};
  Complex prefactor{1.0, 0.0};
};

GaussianFactor apply_shiftT(double alpha, const GaussianFactor& g);
GaussianFactor apply_shiftP(double beta, const GaussianFactor& g);

struct GaussianLeg {
  double epsilon;
  Complex gamma;
  auto operator<=>(const GaussianLeg& o) const {
    if (auto c = epsilon <=> o.epsilon; c != 0) return c;
    if (auto c = gamma.real() <=> o.gamma.real(); c != 0) return c;
    return gamma.imag() <=> o.gamma.imag();
  }
  bool operator==(const GaussianLeg&) const = default;
};

/// Finite combination of amp * (x)_legs e^{-eps t^2 + gamma t} (x) e_component.
class GaussianState {
 public:
  struct Key {
    std::vector<GaussianLeg> legs;
    int component = 0;
    auto operator<=>(const Key&) const = default;
  };

  GaussianState(int legs, int dim = 1) : legs_(legs), dim_(dim) {}
  /// A single product Gaussian with the given legs.
  static GaussianState product(const std::vector<GaussianFactor>& legs, int dim = 1, int component = 0);

  int legs() const { return legs_; }
  int dim() const { return dim_; }
  const std::map<Key, Complex>& terms() const { return terms_; }
  void add_term(const Key& k, Complex amp);

  GaussianState& operator+=(const GaussianState& o);
  GaussianState& operator-=(const GaussianState& o);
  friend GaussianState operator+(GaussianState a, const GaussianState& b) { return a += b; }
  friend GaussianState operator-(GaussianState a, const GaussianState& b) { return a -= b; }
  friend GaussianState operator*(Complex c, const GaussianState& a);

  /// Pointwise value at t (one real coordinate per leg), component `component`.
  Complex value(const std::vector<double>& t, int component = 0) const;

 private:
  int legs_;
  int dim_;
  std::map<Key, Complex> terms_;
};

/// Closed-form L^2 inner product, linear in the first argument.
Complex inner(const GaussianState& u, const GaussianState& v);
double norm(const GaussianState& u);

/// Exact image of an element under the series (I) representation.
ShiftOperator represent(const AlgebraElement& a);
/// Word-by-word image of a free expression; no rewriting in the Weyl algebra takes place.
ShiftOperator represent(const FreeExpr& e);

GaussianState apply(const ShiftOperator& op, const GaussianState& s, const NumericContext& ctx);

/// Random states with `terms` product terms, eps in [0.5, 2], |gamma| <= 2.
std::vector<GaussianState> random_states(int legs, int count, std::uint64_t seed, int dim = 1, int terms = 2);

/// ||(lhs - rhs) u|| / ||u|| with lhs - rhs formed exactly before acting.
double relation_residual(const ShiftOperator& lhs, const ShiftOperator& rhs, const GaussianState& u,
                         const NumericContext& ctx);
/// |<Au,v> - <u,Av>| / max(||u|| ||v||, |<Au,v>|, |<u,Av>|).
double hermiticity_residual(const ShiftOperator& a, const GaussianState& u, const GaussianState& v,
                            const NumericContext& ctx);

struct PointwiseRelation {
  std::string name;
  FreeExpr lhs;
  FreeExpr rhs;
};

/// Defining and derived relations of A_q(n;R) as unreduced free expressions.
std::vector<PointwiseRelation> pointwise_relations(AlgebraDescriptor d);
/// Hermitian elements y_j, x_j, Q_j, R_j, rho_j, A_j, B_j, Gamma.
std::vector<std::pair<std::string, AlgebraElement>> hermitian_elements(AlgebraDescriptor d);

/// One record per relation / element, residual = max over samples, pass iff <= tolerance.
Report check_relation_pointwise(const std::string& name, const ShiftOperator& lhs, const ShiftOperator& rhs,
                                const std::vector<GaussianState>& samples, const NumericContext& ctx);
Report check_pointwise(AlgebraDescriptor d, const std::vector<GaussianState>& samples, const NumericContext& ctx);
/// rep(a b) = rep(a) rep(b) on random elements of degree <= 3.
Report check_homomorphism(AlgebraDescriptor d, const std::vector<GaussianState>& samples, const NumericContext& ctx,
                          int elements, std::uint64_t seed);

// Model (II) for n = 1 on L^2(R) (x) C^2, with c = 2 phi - s(phi) pi.
ShiftOperator model2_y();
ShiftOperator model2_x(const NumericContext& ctx);
ShiftOperator model2_q(const NumericContext& ctx);
ShiftOperator model2_q_inverse(const NumericContext& ctx);
Report check_model_II_n1(const std::vector<GaussianState>& samples, const NumericContext& ctx);

}  // namespace qweyl
