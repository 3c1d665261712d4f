// Acceptance criteria 1-10, one PASS/FAIL line each. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qweyl/gauss.hpp"
#include "qweyl/haar.hpp"
#include "qweyl/uq.hpp"
#include "qweyl/weyl.hpp"

using namespace qweyl;

namespace {

const double kPhis[] = {std::numbers::pi / 3, -std::numbers::pi / 5};

Report exact_record(const std::string& suite, const std::string& name, bool ok, const std::string& witness = {}) {
  Report r;
  r.add(suite, name, ok ? 0.0 : 1.0, ok, ok ? std::string{} : witness);
  return r;
}

Report symbolic_relations() {
  Report r;
  r.merge(check_identities("weyl-relations", weyl_relation_identities(AlgebraDescriptor(1))));
  for (const auto& id : ab_rho_identities(AlgebraDescriptor(1)))
    if (id.name.rfind("ABQ", 0) == 0) r.merge(check_identities("ab-rho", {id}));
  for (int n : {2, 3}) {
    r.merge(check_identities("weyl-relations", weyl_relation_identities(AlgebraDescriptor(n))));
    r.merge(check_identities("ab-rho", ab_rho_identities(AlgebraDescriptor(n))));
  }
  return r;
}

Report hermiticity() {
  Report r;
  for (int n = 1; n <= 3; ++n) r.merge(check_identities("hermiticity", hermiticity_identities(AlgebraDescriptor(n))));
  return r;
}

Report action_table() {
  Report r;
  for (int n = 1; n <= 3; ++n) {
    const AlgebraDescriptor d(n);
    r.merge(check_action_table(d));
    const Scalar i = Scalar::i();
    const AlgebraElement en = act({HopfKind::E, n}, gen_x(d, n));
    r.merge(exact_record("action-values", "E_n>x_n[n=" + std::to_string(n) + "]",
                         en == AlgebraElement::scalar(d, -i * Scalar::q().inverse()), en.to_string()));
    const AlgebraElement fn = act({HopfKind::F, n}, gen_y(d, n));
    r.merge(exact_record("action-values", "F_n>y_n[n=" + std::to_string(n) + "]", fn == AlgebraElement::scalar(d, i),
                         fn.to_string()));
    for (int j = 1; j < n; ++j) {
      const AlgebraElement ej = act({HopfKind::E, j}, gen_x(d, j));
      r.merge(exact_record("action-values", "E_j>x_j[n=" + std::to_string(n) + ";j=" + std::to_string(j) + "]",
                           ej == (i * Scalar::q0().inverse()) * gen_x(d, j + 1), ej.to_string()));
    }
  }
  return r;
}

Report module_algebra(int max_index_offset) {
  Report r;
  for (int n : {1, 2}) {
    if (n - max_index_offset < 1) continue;
    r.merge(check_module_algebra(AlgebraDescriptor(n), {3, n - max_index_offset}));
  }
  return r;
}

Report relations(int max_index_offset) {
  Report r;
  for (int n : {1, 2}) {
    if (n - max_index_offset < 1) continue;
    r.merge(check_relations_through_action(AlgebraDescriptor(n), {3, n - max_index_offset}));
  }
  return r;
}

Report pointwise() {
  Report r;
  for (double phi : kPhis) {
    const NumericContext ctx(phi);
    for (int n : {1, 2}) r.merge(check_pointwise(AlgebraDescriptor(n), random_states(n, 10, 7), ctx));
    r.merge(check_model_II_n1(random_states(1, 10, 7, 2), ctx));
  }
  return r;
}

Report invariance() {
  Report r;
  for (double phi : kPhis) {
    for (int n : {1, 2}) {
      std::vector<TraceConvention> conv{TraceConvention::QInverse};
      if (n == 1) conv.push_back(TraceConvention::AbsQInverse);
      for (auto c : conv) r.merge(check_invariance(AlgebraDescriptor(n), {1.0, NumericContext(phi), c}, {20, 3, 7}));
    }
  }
  return r;
}

Report cyclicity() {
  Report r;
  for (double phi : kPhis)
    for (int n : {1, 2}) r.merge(check_trace_cyclicity(AlgebraDescriptor(n), {1.0, NumericContext(phi)}, {20, 2, 7}));
  return r;
}

Report sub_hopf() {
  Report r;
  for (int n : {2, 3}) r.merge(check_action_table(AlgebraDescriptor(n), {3, n - 1}));
  r.merge(module_algebra(1));
  r.merge(relations(1));
  return r;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Report()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "symbolic relation suite", symbolic_relations},
      {2, "hermiticity of rho, A, B, Gamma", hermiticity},
      {3, "action-table reproduction", action_table},
      {4, "module-algebra axioms", [] { return module_algebra(0); }},
      {5, "U_q relations through the action", [] { return relations(0); }},
      {6, "pointwise representation checks", pointwise},
      {7, "invariance of the integral", invariance},
      {8, "trace cyclicity", cyclicity},
      {9, "obstruction to a normalized integral", check_no_normalized_integral},
      {10, "sub-Hopf restriction j < n", sub_hopf},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const Report r = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = r.size() > 0 && r.all_pass();
    if (!ok) ++failed;
    std::printf("criterion %d %s: %s (records=%zu, failures=%zu, max-residual=%.3e, time=%.2fs)\n", c.id, c.title,
                ok ? "PASS" : "FAIL", r.size(), r.failures(), r.max_residual(), secs);
    if (!ok)
      for (const auto& rec : r.records())
        if (!rec.pass) std::printf("  %s\n", format_record(rec).c_str());
  }
  return failed == 0 ? 0 : 1;
}
