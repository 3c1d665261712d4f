#include "qweyl/suites.hpp"

#include <future>

#include "qweyl/gauss.hpp"
#include "qweyl/haar.hpp"
#include "qweyl/uq.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

const std::vector<SuiteId>& all_suites() {
  static const std::vector<SuiteId> ids{SuiteId::WeylRelations, SuiteId::AbRho,    SuiteId::ActionTable,
                                        SuiteId::ModuleAlgebra, SuiteId::Pointwise, SuiteId::Model2N1,
                                        SuiteId::Invariance,    SuiteId::Cyclicity, SuiteId::Obstruction};
  return ids;
}

std::string suite_name(SuiteId id) {
  switch (id) {
    case SuiteId::WeylRelations: return "weyl-relations";
    case SuiteId::AbRho: return "ab-rho";
    case SuiteId::ActionTable: return "action-table";
    case SuiteId::ModuleAlgebra: return "module-algebra";
    case SuiteId::Pointwise: return "pointwise";
    case SuiteId::Model2N1: return "model2-n1";
    case SuiteId::Invariance: return "invariance";
    case SuiteId::Cyclicity: return "cyclicity";
    case SuiteId::Obstruction: return "obstruction";
  }
  return {};
}

std::optional<SuiteId> suite_from_name(std::string_view name) {
  for (SuiteId id : all_suites())
    if (suite_name(id) == name) return id;
  return std::nullopt;
}

Report run_suite(SuiteId id, const SuiteOptions& opt) {
  const AlgebraDescriptor d(opt.n);
  const NumericContext ctx(opt.phi, opt.tolerance);
  Report rep;
  switch (id) {
    case SuiteId::WeylRelations:
      rep = check_identities("weyl-relations", weyl_relation_identities(d));
      break;
    case SuiteId::AbRho:
      rep = check_identities("ab-rho", ab_rho_identities(d));
      rep.merge(check_identities("ab-rho", hermiticity_identities(d)));
      break;
    case SuiteId::ActionTable:
      rep = check_action_table(d);
      if (opt.n == 1) rep.merge(check_hyperboloid_expansions());
      break;
    case SuiteId::ModuleAlgebra:
      rep = check_module_algebra(d);
      rep.merge(check_relations_through_action(d));
      rep.merge(check_antipode_axiom(d));
      break;
    case SuiteId::Pointwise:
      rep = check_pointwise(d, random_states(opt.n, opt.samples.value_or(10), opt.seed), ctx);
      break;
    case SuiteId::Model2N1:
      rep = check_model_II_n1(random_states(1, opt.samples.value_or(10), opt.seed, 2), ctx);
      break;
    case SuiteId::Invariance: {
      const HaarCheckOptions hopt{opt.samples.value_or(20), 3, opt.seed};
      std::vector<TraceConvention> conventions{TraceConvention::QInverse};
      if (opt.n == 1) conventions.push_back(TraceConvention::AbsQInverse);
      for (auto conv : conventions) {
        const IntegralContext ictx{opt.c, ctx, conv};
        rep.merge(check_invariance(d, ictx, hopt));
        rep.merge(check_trace_routes(d, ictx, hopt));
      }
      rep.merge(check_operator_module_star(d, ctx, {hopt.samples, 2, opt.seed}));
      break;
    }
    case SuiteId::Cyclicity:
      rep = check_trace_cyclicity(d, {opt.c, ctx}, {opt.samples.value_or(20), 2, opt.seed});
      break;
    case SuiteId::Obstruction:
      rep = check_no_normalized_integral();
      break;
  }
  return rep;
}

Report run_all(const SuiteOptions& opt, const std::vector<int>& ns) {
  std::vector<std::future<Report>> jobs;
  for (SuiteId id : all_suites()) {
    const bool n_free = id == SuiteId::Model2N1 || id == SuiteId::Obstruction;
    for (int n : ns) {
      if (n_free && n != ns.front()) continue;
      SuiteOptions o = opt;
      o.n = n_free ? 1 : n;
      jobs.push_back(std::async(std::launch::async, [id, o] { return run_suite(id, o); }));
    }
  }
  Report all;
  for (auto& j : jobs) all.merge(j.get());
  return all;
}

}  // namespace qweyl
