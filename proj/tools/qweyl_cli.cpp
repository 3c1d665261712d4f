// qweyl: normalize, act, verify, integrate, repr-check.
//
// Exit codes: 0 pass, 1 failures present, 2 usage or parse error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/gauss.hpp"
#include "qweyl/haar.hpp"
#include "qweyl/parser.hpp"
#include "qweyl/suites.hpp"

using namespace qweyl;

namespace {

constexpr int kUsage = 2;

// "eps,re,im;eps,re,im;..." with one triple per leg.
GaussianState parse_leg_triples(const std::string& text, int legs) {
  std::vector<GaussianFactor> f;
  std::stringstream in(text);
  std::string leg;
  while (std::getline(in, leg, ';')) {
    double eps = 0, re = 0, im = 0;
    char c1 = 0, c2 = 0;
    std::stringstream ls(leg);
    if (!(ls >> eps >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',' || eps <= 0)
      throw CLI::ValidationError("state", "expected eps,re,im with eps > 0, got '" + leg + "'");
    f.push_back({eps, {re, im}, {1.0, 0.0}});
  }
  if (static_cast<int>(f.size()) != legs)
    throw CLI::ValidationError("state", "expected " + std::to_string(legs) + " legs, got " + std::to_string(f.size()));
  return GaussianState::product(f);
}

std::string complex_text(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
  return buf;
}

int emit(const Report& r) {
  std::cout << r.to_lines();
  std::cout << "summary: records=" << r.size() << ", failures=" << r.failures() << "\n";
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms, U_q actions, representation checks and invariant integrals."};
  app.require_subcommand(1);

  int n = 1;
  double phi = SuiteOptions{}.phi;
  double tolerance = 1e-9;
  int samples = 0;
  std::uint64_t seed = 7;
  double c = 1.0;
  std::string suite;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--n", n, "number of x/y pairs")->check(CLI::Range(1, 12));
    s->add_option("--phi", phi, "q = e^{i phi}, radians");
    s->add_option("--tolerance", tolerance, "relative tolerance")->check(CLI::PositiveNumber);
    s->add_option("--seed", seed, "random seed");
  };

  auto* normalize = app.add_subcommand("normalize", "print the canonical form of an expression");
  std::string expr;
  normalize->add_option("expr", expr, "expression")->required();
  normalize->add_option("--n", n, "number of x/y pairs")->check(CLI::Range(1, 12));

  auto* act = app.add_subcommand("act", "apply a U_q element to an algebra element");
  std::string hopf, target, expansion = "q";
  act->add_option("hopf", hopf, "U_q expression, e.g. E1*F1")->required();
  act->add_option("expr", target, "algebra expression")->required();
  act->add_option("--n", n, "number of x/y pairs")->check(CLI::Range(1, 12));
  act->add_option("--expansion", expansion, "n = 1 expansion: q or rho")->check(CLI::IsMember({"q", "rho"}));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify);
  verify->add_option("--samples", samples, "number of random samples")->check(CLI::PositiveNumber);
  verify->add_option("--c", c, "normalization of the integral");
  std::vector<std::string> names;
  for (SuiteId id : all_suites()) names.push_back(suite_name(id));
  verify->add_option("--suite", suite, "suite name; all suites when omitted")->check(CLI::IsMember(names));

  auto* integrate = app.add_subcommand("integrate", "evaluate h on a rank-one operator ket (x) bra");
  add_common(integrate);
  std::string ket, bra, density = "qinv";
  integrate->add_option("--c", c, "normalization of the integral");
  integrate->add_option("--ket", ket, "eps,re,im per leg, separated by ';'")->required();
  integrate->add_option("--bra", bra, "eps,re,im per leg, separated by ';'")->required();
  integrate->add_option("--density", density, "n = 1 density: qinv or absqinv")
      ->check(CLI::IsMember({"qinv", "absqinv"}));

  auto* repr = app.add_subcommand("repr-check", "compare two expressions in the series (I) representation");
  add_common(repr);
  std::string lhs, rhs = "0";
  repr->add_option("lhs", lhs, "algebra expression")->required();
  repr->add_option("rhs", rhs, "algebra expression (default 0)");
  repr->add_option("--samples", samples, "number of random states")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const AlgebraDescriptor d(n);
    if (*normalize) {
      const ParsedExpression p = parse_expression(expr, d);
      std::visit([](const auto& v) { std::cout << v.to_string() << "\n"; }, p);
      return 0;
    }
    if (*act) {
      const ActionEngine engine(d, expansion == "rho" ? HyperboloidExpansion::Rho : HyperboloidExpansion::Q);
      std::cout << engine.act_element(parse_hopf(hopf), parse_algebra(target, d)).to_string() << "\n";
      return 0;
    }
    if (*verify) {
      SuiteOptions opt;
      opt.n = n;
      opt.phi = phi;
      opt.tolerance = tolerance;
      opt.seed = seed;
      opt.c = c;
      if (samples > 0) opt.samples = samples;
      (void)NumericContext(phi, tolerance);
      if (suite.empty()) {
        const bool n_given = verify->count("--n") > 0;
        return emit(run_all(opt, n_given ? std::vector<int>{n} : std::vector<int>{1, 2}));
      }
      const SuiteId id = *suite_from_name(suite);
      if (id == SuiteId::Obstruction)
        for (const auto& line : obstruction_derivation()) std::cout << "derivation: " << line << "\n";
      return emit(run_suite(id, opt));
    }
    if (*integrate) {
      IntegralContext ictx{c, NumericContext(phi, tolerance),
                           density == "absqinv" ? TraceConvention::AbsQInverse : TraceConvention::QInverse};
      const FiniteRankOperator f = rank_one(parse_leg_triples(ket, n), parse_leg_triples(bra, n));
      std::cout << "h=" << complex_text(quantum_trace(d, f, ictx)) << "\n";
      std::cout << "h_gram=" << complex_text(quantum_trace_gram(d, f, ictx)) << "\n";
      return 0;
    }
    if (*repr) {
      const NumericContext ctx(phi, tolerance);
      const ShiftOperator a = represent(parse_algebra(lhs, d));
      const ShiftOperator b = represent(parse_algebra(rhs, d));
      const auto states = random_states(n, samples > 0 ? samples : 10, seed);
      Report r = check_relation_pointwise(lhs + " = " + rhs, a, b, states, ctx);
      return emit(r);
    }
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
