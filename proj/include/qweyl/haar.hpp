#pragma once

// Finite-rank operators F = sum amp_i e_i (x) f_i, (e (x) f)(v) = <v, f> e, with Gaussian legs,
// the U_q(sl_{n+1}(R)) action on them by the operator expansion, and the quantum trace
//   h(F) = c tr(F Gamma) = c sum amp_i <e_i, Gamma* f_i>.

#include <cstdint>
#include <string>
#include <vector>

#include "qweyl/gauss.hpp"
#include "qweyl/report.hpp"
#include "qweyl/uq.hpp"

namespace qweyl {

class FiniteRankOperator {
 public:
  struct Term {
    Complex amp;
    GaussianState ket;
    GaussianState bra;
  };

  FiniteRankOperator(int legs, int dim = 1) : legs_(legs), dim_(dim) {}

  int legs() const { return legs_; }
  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t rank_bound() const { return terms_.size(); }
  void add_term(Complex amp, GaussianState ket, GaussianState bra);

  GaussianState apply(const GaussianState& v) const;
  FiniteRankOperator adjoint() const;
  /// L o F and F o R with L, R given by exact shift operators.
  FiniteRankOperator left(const ShiftOperator& l, const NumericContext& ctx) const;
  FiniteRankOperator right(const ShiftOperator& r, const NumericContext& ctx) const;

  FiniteRankOperator& operator+=(const FiniteRankOperator& o);
  friend FiniteRankOperator operator+(FiniteRankOperator a, const FiniteRankOperator& b) { return a += b; }
  friend FiniteRankOperator operator*(Complex c, const FiniteRankOperator& a);

 private:
  int legs_;
  int dim_;
  std::vector<Term> terms_;
};

FiniteRankOperator rank_one(const GaussianState& e, const GaussianState& f);

/// n = 1 density: Q^-1 (hyperboloid form) or |Q|^-1 = Gamma. Ignored for n >= 2.
enum class TraceConvention { QInverse, AbsQInverse };

struct IntegralContext {
  double c = 1.0;
  NumericContext ctx;
  TraceConvention convention = TraceConvention::QInverse;
};

/// Gamma for n >= 2; Q^-1 or |Q|^-1 for n = 1 according to the convention.
AlgebraElement trace_density(AlgebraDescriptor d, TraceConvention convention);

FiniteRankOperator act_on_operator(const ActionEngine& engine, const HopfGenerator& g, const FiniteRankOperator& f,
                                   const NumericContext& ctx);
/// Word acts by composition, rightmost letter first.
FiniteRankOperator act_on_operator(const ActionEngine& engine, const HopfElement& h, const FiniteRankOperator& f,
                                   const NumericContext& ctx);

/// h(F) = c * sum amp <e, density* f>.
Complex quantum_trace(AlgebraDescriptor d, const FiniteRankOperator& f, const IntegralContext& ictx);
/// Same value by orthonormalizing the kets (Gram eigenbasis) and summing <F Gamma u_k, u_k>.
Complex quantum_trace_gram(AlgebraDescriptor d, const FiniteRankOperator& f, const IntegralContext& ictx);

/// Random operators of rank 1..max_rank with random Gaussian legs.
std::vector<FiniteRankOperator> random_operators(int legs, int count, int max_rank, std::uint64_t seed);

struct HaarCheckOptions {
  int samples = 20;
  int max_rank = 3;
  std::uint64_t seed = 7;
};

/// |h(g > F) - eps(g) h(F)| <= tol (1 + |h(F)|) for every generator.
Report check_invariance(AlgebraDescriptor d, const IntegralContext& ictx, const HaarCheckOptions& opt = {});
/// tr(a g b) = tr(g b a) = tr(b a g) for a, b among represented generators.
Report check_trace_cyclicity(AlgebraDescriptor d, const IntegralContext& ictx, const HaarCheckOptions& opt = {});
/// The steps of the n = 1 argument that no invariant h has h(1) = 1.
std::vector<std::string> obstruction_derivation();
/// act(F, y) = i and eps(F) = 0 at n = 1, so no invariant h has h(1) = 1.
Report check_no_normalized_integral();
/// (g > F)* = S(g)* > F* compared through matrix elements on random states.
Report check_operator_module_star(AlgebraDescriptor d, const NumericContext& ctx, const HaarCheckOptions& opt = {});
/// The two trace routes agree.
Report check_trace_routes(AlgebraDescriptor d, const IntegralContext& ictx, const HaarCheckOptions& opt = {});

}  // namespace qweyl
