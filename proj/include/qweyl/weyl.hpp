#pragma once

// Localized real q-Weyl algebra A_q(n;R) with adjoined R_k = |Q_k|^{1/2} and R_k^{-1}.
//
// Normal order is R-block, then y-block, then x-block, each in ascending index, and no
// monomial carries both y_k and x_k. Same-index pairs collapse through
//   y_k x_k = Q_{k+1} - q^{-1} Q_k,   x_k y_k = Q_{k+1} - q Q_k,
// with Q_k = sigma_k R_k^2, sigma_k = (-1)^{n-k+1} and Q_{n+1} = 1 (series (I), all k_j = 0).
// Normal monomials are linearly independent in the faithful Gaussian model, so canonical
// forms decide equality.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/coeff.hpp"
#include "qweyl/report.hpp"

namespace qweyl {

struct AlgebraDescriptor {
  int n = 1;

  AlgebraDescriptor() = default;
  explicit AlgebraDescriptor(int n);

  /// sigma_k = (-1)^{n-k+1} for k <= n, sigma_{n+1} = +1.
  int sign(int k) const;
  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

enum class LetterKind { R, Y, X };

/// One factor of a free word. `power` is 1 for y and x and any nonzero integer for R.
struct Letter {
  LetterKind kind;
  int index;
  int power = 1;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Unreduced noncommutative linear combination of words over Q(i)(q0).
class FreeExpr {
 public:
  explicit FreeExpr(AlgebraDescriptor d) : desc_(d) {}
  static FreeExpr scalar(AlgebraDescriptor d, Scalar c);
  static FreeExpr letter(AlgebraDescriptor d, Letter l);
  static FreeExpr y(AlgebraDescriptor d, int k) { return letter(d, {LetterKind::Y, k, 1}); }
  static FreeExpr x(AlgebraDescriptor d, int k) { return letter(d, {LetterKind::X, k, 1}); }
  static FreeExpr r(AlgebraDescriptor d, int k, int power = 1) { return letter(d, {LetterKind::R, k, power}); }
  /// Q_k as sigma_k R_k^power*2; Q_{n+1} = 1.
  static FreeExpr q_power(AlgebraDescriptor d, int k, int power = 1);

  const AlgebraDescriptor& descriptor() const { return desc_; }
  const std::vector<std::pair<Word, Scalar>>& terms() const { return terms_; }
  void add_term(Word w, Scalar c);

  FreeExpr star() const;
  FreeExpr pow(int k) const;

  FreeExpr& operator+=(const FreeExpr& o);
  FreeExpr& operator-=(const FreeExpr& o);
  friend FreeExpr operator+(FreeExpr a, const FreeExpr& b) { return a += b; }
  friend FreeExpr operator-(FreeExpr a, const FreeExpr& b) { return a -= b; }
  friend FreeExpr operator-(const FreeExpr& a);
  friend FreeExpr operator*(const FreeExpr& a, const FreeExpr& b);
  friend FreeExpr operator*(const Scalar& c, const FreeExpr& a);

 private:
  AlgebraDescriptor desc_;
  std::vector<std::pair<Word, Scalar>> terms_;
};

struct Monomial {
  std::vector<int> r;
  std::vector<int> y;
  std::vector<int> x;

  explicit Monomial(int n = 0) : r(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n)) {}
  /// Total y/x degree.
  int degree() const;
  bool is_pure_r() const;
  Word word() const;
  auto operator<=>(const Monomial&) const = default;
};

class AlgebraElement {
 public:
  explicit AlgebraElement(AlgebraDescriptor d) : desc_(d) {}
  static AlgebraElement one(AlgebraDescriptor d) { return scalar(d, Scalar(1)); }
  static AlgebraElement scalar(AlgebraDescriptor d, const Scalar& c);
  static AlgebraElement monomial(AlgebraDescriptor d, Monomial m, Scalar c = Scalar(1));

  const AlgebraDescriptor& descriptor() const { return desc_; }
  int n() const { return desc_.n; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of the empty monomial.
  Scalar constant_term() const;
  bool is_scalar() const;

  void add_term(const Monomial& m, const Scalar& c);
  FreeExpr to_free() const;
  std::string to_string() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(const AlgebraElement& a);
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  AlgebraDescriptor desc_;
  std::map<Monomial, Scalar> terms_;
};

AlgebraElement normal_form(const FreeExpr& expr);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement star(const AlgebraElement& a);
/// Integer power; negative powers only for a single pure-R monomial.
AlgebraElement power(const AlgebraElement& a, int k);
/// Inverse of c * R^a (c != 0). Throws std::domain_error for anything else.
AlgebraElement inverse_r_monomial(const AlgebraElement& a);

// Generators and derived elements. Indices outside 1..n (1..n+1 for Q) throw IndexOutOfRange.
AlgebraElement gen_y(AlgebraDescriptor d, int k);
AlgebraElement gen_x(AlgebraDescriptor d, int k);
AlgebraElement gen_r(AlgebraDescriptor d, int k, int power = 1);
AlgebraElement q_elem(AlgebraDescriptor d, int k);
AlgebraElement q_elem_inverse(AlgebraDescriptor d, int k);
AlgebraElement rho(AlgebraDescriptor d, int k);
AlgebraElement rho_inverse(AlgebraDescriptor d, int k);
AlgebraElement a_op(AlgebraDescriptor d, int k);
AlgebraElement b_op(AlgebraDescriptor d, int k);
/// Gamma = R_1^{-2n} R_2^2 ... R_n^2 (n > 1), R_1^{-2} (n = 1).
AlgebraElement gamma(AlgebraDescriptor d);

/// n = 1 operator expansion pair A = -i lambda^-1 y, B = -i lambda^-1 q^-1 Q^-1 x.
AlgebraElement hyperboloid_a();
AlgebraElement hyperboloid_b();

struct IdentityResult {
  bool holds = false;
  AlgebraElement remainder;  ///< normal form of lhs - rhs; zero exactly when holds
};

IdentityResult verify_identity(const FreeExpr& lhs, const FreeExpr& rhs);
IdentityResult verify_identity(const AlgebraElement& lhs, const AlgebraElement& rhs);

/// Relations in the form "equality of two elements", named after the identity they encode.
struct NamedIdentity {
  std::string name;
  AlgebraElement lhs;
  AlgebraElement rhs;
};

/// Defining relations, Q/R commutation rules and derived identities of A_q(n;R).
std::vector<NamedIdentity> weyl_relation_identities(AlgebraDescriptor d);
/// Commutation relations of rho_k, A_k, B_k and the auxiliary identities used for the
/// Serre relations.
std::vector<NamedIdentity> ab_rho_identities(AlgebraDescriptor d);
/// Hermiticity of rho_k, A_k, B_k and Gamma, as star(e) = e.
std::vector<NamedIdentity> hermiticity_identities(AlgebraDescriptor d);

/// One record per identity, case "n=<n>/<name>"; residual is the number of remainder terms and
/// the remainder is the witness.
Report check_identities(const std::string& suite, const std::vector<NamedIdentity>& ids);

}  // namespace qweyl
