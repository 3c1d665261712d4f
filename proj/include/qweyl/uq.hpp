#pragma once

// Hopf *-algebra U_q(sl_{n+1}(R)) as free words in K_j^{+-1}, E_j, F_j, and its action on
// the localized q-Weyl algebra through the operator expansion
//   K_j > f = rho_j f rho_j^-1,   E_j > f = A_j f - rho_j f rho_j^-1 A_j,
//   F_j > f = B_j f rho_j - q^2 f rho_j B_j
// (with Q, A, B of the hyperboloid in place of rho_1, A_1, B_1 when n = 1).
// Words are never rewritten; relations are checked through their action.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qweyl/coeff.hpp"
#include "qweyl/report.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

enum class HopfKind { K, Kinv, E, F };

struct HopfGenerator {
  HopfKind kind;
  int index;
  auto operator<=>(const HopfGenerator&) const = default;
  std::string to_string() const;
};

using HopfWord = std::vector<HopfGenerator>;

class HopfElement {
 public:
  HopfElement() = default;
  static HopfElement one() { return scalar(Scalar(1)); }
  static HopfElement scalar(const Scalar& c);
  static HopfElement generator(HopfGenerator g) { return word({g}); }
  static HopfElement word(HopfWord w, const Scalar& c = Scalar(1));
  static HopfElement K(int j) { return generator({HopfKind::K, j}); }
  static HopfElement Kinv(int j) { return generator({HopfKind::Kinv, j}); }
  static HopfElement E(int j) { return generator({HopfKind::E, j}); }
  static HopfElement F(int j) { return generator({HopfKind::F, j}); }

  const std::map<HopfWord, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const HopfWord& w, const Scalar& c);
  /// Largest generator index occurring (0 for scalars).
  int max_index() const;
  std::string to_string() const;

  HopfElement& operator+=(const HopfElement& o);
  HopfElement& operator-=(const HopfElement& o);
  friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
  friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
  friend HopfElement operator-(const HopfElement& a);
  friend HopfElement operator*(const HopfElement& a, const HopfElement& b);
  friend HopfElement operator*(const Scalar& c, const HopfElement& a);
  friend bool operator==(const HopfElement& a, const HopfElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<HopfWord, Scalar> terms_;
};

/// a_jj = 2, a_{j,j+-1} = -1, else 0.
std::vector<std::vector<int>> cartan_matrix(int n);

Scalar counit(const HopfGenerator& g);
/// Algebra homomorphism extended from the generator table.
Scalar counit(const HopfElement& h);
std::vector<std::pair<HopfElement, HopfElement>> coproduct(const HopfGenerator& g);
HopfElement antipode(const HopfGenerator& g);
/// Anti-homomorphism extended from the generator table.
HopfElement antipode(const HopfElement& h);
/// Generators are hermitian: reverses words and stars coefficients.
HopfElement star(const HopfElement& h);

/// Which element implements K and F for n = 1: the hyperboloid Q (default) or rho_1 = R_1^2.
enum class HyperboloidExpansion { Q, Rho };

class ActionEngine {
 public:
  explicit ActionEngine(AlgebraDescriptor d, HyperboloidExpansion mode = HyperboloidExpansion::Q);

  const AlgebraDescriptor& descriptor() const { return desc_; }
  /// Throws IndexOutOfRange for generator indices outside 1..n, DescriptorMismatch on f.
  AlgebraElement act(const HopfGenerator& g, const AlgebraElement& f) const;
  /// Linear in h; a word acts by composition, rightmost letter first.
  AlgebraElement act_element(const HopfElement& h, const AlgebraElement& f) const;

  /// The operator-expansion data (rho_j resp. Q, A_j, B_j).
  const AlgebraElement& conj(int j) const { return rho_[static_cast<std::size_t>(j - 1)]; }
  const AlgebraElement& conj_inverse(int j) const { return rho_inv_[static_cast<std::size_t>(j - 1)]; }
  const AlgebraElement& a(int j) const { return a_[static_cast<std::size_t>(j - 1)]; }
  const AlgebraElement& b(int j) const { return b_[static_cast<std::size_t>(j - 1)]; }

 private:
  AlgebraDescriptor desc_;
  std::vector<AlgebraElement> rho_;
  std::vector<AlgebraElement> rho_inv_;
  std::vector<AlgebraElement> a_;
  std::vector<AlgebraElement> b_;
};

AlgebraElement act(const HopfGenerator& g, const AlgebraElement& f);
AlgebraElement act_element(const HopfElement& h, const AlgebraElement& f);

/// Independent encoding of the coordinate action table; `coordinate` is Y or X.
AlgebraElement action_table_entry(AlgebraDescriptor d, const HopfGenerator& g, LetterKind coordinate, int k);

/// Generators K_j, K_j^-1, E_j, F_j with j <= max_index.
std::vector<HopfGenerator> generators(int max_index);
/// Normal monomials with y/x degree <= degree, plus the single letters R_k^{+-1}.
std::vector<AlgebraElement> test_monomials(AlgebraDescriptor d, int degree);
/// Defining relations of U_q(sl_{m+1}) for indices <= max_index, as named elements that act as 0.
std::vector<std::pair<std::string, HopfElement>> defining_relations(int max_index);

struct UqCheckOptions {
  int degree = 3;
  /// Generators with index <= max_index are used; 0 means all (n).
  int max_index = 0;
};

Report check_action_table(AlgebraDescriptor d, const UqCheckOptions& opt = {});
Report check_module_algebra(AlgebraDescriptor d, const UqCheckOptions& opt = {});
Report check_relations_through_action(AlgebraDescriptor d, const UqCheckOptions& opt = {});
/// m (S x id) Delta(g) and m (id x S) Delta(g) act as eps(g) on the test monomials.
Report check_antipode_axiom(AlgebraDescriptor d, const UqCheckOptions& opt = {});
/// n = 1: the Q and rho_1 expansions define the same action.
Report check_hyperboloid_expansions(const UqCheckOptions& opt = {});

}  // namespace qweyl
