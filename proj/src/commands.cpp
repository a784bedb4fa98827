#include "lpinterp/commands.hpp"

#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lpinterp/oracle.hpp"
#include "lpinterp/solver.hpp"

namespace lpinterp {

namespace {

using json = nlohmann::ordered_json;

json subset_json(Subset s, unsigned arity) {
  json a = json::array();
  for (unsigned i = 0; i < arity; ++i)
    if ((s >> i) & 1u) a.push_back(i + 1);
  return a;
}

json point_json(const DistributiveLattice& lattice, const Point& x) {
  json a = json::array();
  for (LatticeElement c : x) a.push_back(lattice.label(c));
  return a;
}

json table_json(const DistributiveLattice& lattice, const LatticePolynomial& p) {
  json a = json::array();
  for (LatticeElement c : p.coefficients()) a.push_back(lattice.label(c));
  return a;
}

class Writer {
public:
  explicit Writer(OutputFormat format) : format_(format) {}
  bool machine() const { return format_ == OutputFormat::machine; }
  void line(const std::string& text) {
    if (!machine()) out_ << text << "\n";
  }
  void record(const json& r) {
    if (machine()) out_ << r.dump() << "\n";
  }
  Report finish(int status) { return {status, out_.str()}; }

private:
  OutputFormat format_;
  std::ostringstream out_;
};

std::string side_name(InequalitySide side) { return side == InequalitySide::lower ? "lower" : "upper"; }

void write_diagnosis(Writer& w, const CuboidProblem& problem, const Diagnosis& d) {
  const auto& L = problem.lattice();
  const unsigned n = problem.arity();
  if (d.monotonicity) {
    const auto [lo, hi] = *d.monotonicity;
    w.line("monotonicity violated at " + subset_label(lo, n) + " < " + subset_label(hi, n) + ": " +
           L.label(problem.value(lo)) + " is not below " + L.label(problem.value(hi)));
    w.record({{"record", "violation"},
              {"kind", "monotonicity"},
              {"lower", subset_json(lo, n)},
              {"upper", subset_json(hi, n)},
              {"lower_value", L.label(problem.value(lo))},
              {"upper_value", L.label(problem.value(hi))}});
  }
  if (d.star) {
    const auto& s = *d.star;
    w.line("star condition violated at " + subset_label(s.subset, n) + ", k = " +
           std::to_string(s.coordinate + 1) + " (" + side_name(s.side) + "): " + L.label(s.lhs) +
           " is not below " + L.label(s.rhs));
    w.record({{"record", "violation"},
              {"kind", "star"},
              {"subset", subset_json(s.subset, n)},
              {"coordinate", s.coordinate + 1},
              {"side", side_name(s.side)},
              {"lhs", L.label(s.lhs)},
              {"rhs", L.label(s.rhs)}});
  }
}

void write_functions(Writer& w, const DistributiveLattice& lattice,
                     const std::vector<LatticePolynomial>& functions) {
  w.line(std::to_string(functions.size()) + (functions.size() == 1 ? " interpolant" : " interpolants"));
  w.record({{"record", "count"}, {"count", functions.size()}});
  for (std::size_t k = 0; k < functions.size(); ++k) {
    w.line(render_dnf_inline(lattice, functions[k]));
    w.record({{"record", "function"}, {"index", k}, {"coefficients", table_json(lattice, functions[k])}});
  }
}

}  // namespace

Report cmd_solve(const ProblemFile& file, const CommandOptions& options) {
  const CuboidProblem problem = file.cuboid();
  const auto& L = problem.lattice();
  const unsigned n = problem.arity();
  const SolutionSet sol = solve(problem);
  const BooleanAlgebra B(L);
  Writer w(options.format);

  if (!sol.feasible) {
    w.line("infeasible");
    w.record({{"record", "verdict"}, {"feasible", false}});
    write_diagnosis(w, problem, sol.diagnosis);
    return w.finish(kExitNegative);
  }

  const std::uint64_t combos = interval_combinations(problem);
  std::optional<std::size_t> count;
  if (combos <= options.cap) count = enumerate_solutions(problem, {options.cap}).size();
  if (count) {
    w.line("feasible; " + std::to_string(*count) + (*count == 1 ? " solution" : " solutions"));
    w.record({{"record", "verdict"}, {"feasible", true}, {"solutions", *count}});
  } else {
    w.line("feasible; solution count refused: " + std::to_string(combos) +
           " interval combinations exceed cap " + std::to_string(options.cap));
    w.record({{"record", "verdict"},
              {"feasible", true},
              {"solutions", nullptr},
              {"interval_combinations", combos}});
  }

  w.line("p0:");
  for (Subset s = 0; s < problem.vertex_count(); ++s) {
    w.line(subset_label(s, n) + " -> " + L.label(sol.canonical->coefficient(s)));
    w.record({{"record", "coefficient"},
              {"polynomial", "p0"},
              {"subset", subset_json(s, n)},
              {"value", L.label(sol.canonical->coefficient(s))}});
  }
  w.line("intervals:");
  for (Subset s = 0; s < problem.vertex_count(); ++s) {
    const auto& lb = sol.lattice_bounds[s];
    const auto& bb = sol.boolean_bounds[s];
    w.line(subset_label(s, n) + " -> [" + L.label(lb.lower) + ", " + L.label(lb.upper) + "]  B: [" +
           B.label(bb.lower) + ", " + B.label(bb.upper) + "]");
    w.record({{"record", "interval"},
              {"subset", subset_json(s, n)},
              {"lower", L.label(lb.lower)},
              {"upper", L.label(lb.upper)},
              {"boolean_lower", B.label(bb.lower)},
              {"boolean_upper", B.label(bb.upper)}});
  }
  return w.finish(kExitOk);
}

Report cmd_enumerate(const ProblemFile& file, const CommandOptions& options) {
  const CuboidProblem problem = file.cuboid();
  const auto functions = enumerate_solutions(problem, {options.cap});
  Writer w(options.format);
  write_functions(w, problem.lattice(), functions);
  return w.finish(functions.empty() ? kExitNegative : kExitOk);
}

Report cmd_oracle(const ProblemFile& file, const CommandOptions& options) {
  const PartialFunction f = file.partial();
  OracleConfig config;
  config.max_function_count = options.cap;
  config.seed = options.seed;
  const auto functions = brute_interpolate(f, config);
  Writer w(options.format);
  write_functions(w, f.lattice(), functions);
  return w.finish(functions.empty() ? kExitNegative : kExitOk);
}

Report cmd_goodstein(const ProblemFile& file, const CommandOptions& options) {
  if (!file.values) throw InputError("goodstein needs a VALUES section");
  const auto& L = file.lattice;
  const unsigned n = file.arity;
  const GoodsteinResult result = goodstein(L, n, *file.values);
  Writer w(options.format);
  if (!result.polynomial) {
    const auto [lo, hi] = *result.violation;
    w.line("not monotone: " + subset_label(lo, n) + " < " + subset_label(hi, n) + ": " +
           L.label((*file.values)[lo]) + " is not below " + L.label((*file.values)[hi]));
    w.record({{"record", "violation"},
              {"kind", "monotonicity"},
              {"lower", subset_json(lo, n)},
              {"upper", subset_json(hi, n)}});
    return w.finish(kExitNegative);
  }
  w.line("monotone; unique interpolant");
  w.record({{"record", "verdict"}, {"monotone", true}});
  for (Subset s = 0; s < subset_count(n); ++s) {
    w.line(subset_label(s, n) + " -> " + L.label(result.polynomial->coefficient(s)));
    w.record({{"record", "coefficient"},
              {"subset", subset_json(s, n)},
              {"value", L.label(result.polynomial->coefficient(s))}});
  }
  return w.finish(kExitOk);
}

Report cmd_rg(const ProblemFile& file, const CommandOptions& options) {
  const PartialFunction f = file.partial();
  const auto& L = f.lattice();
  const auto rg = check_rg(f);
  const auto mono = check_monotone(f);
  Writer w(options.format);
  if (rg.holds()) {
    w.line("RG condition: holds");
    w.record({{"record", "rg"}, {"holds", true}});
  } else {
    const auto [a, b] = *rg.violation;
    w.line("RG condition: violated at " + render_point(L, f.point(a)) + " vs " +
           render_point(L, f.point(b)));
    w.record({{"record", "rg"},
              {"holds", false},
              {"first", point_json(L, f.point(a))},
              {"second", point_json(L, f.point(b))}});
  }
  if (mono.holds()) {
    w.line("monotone on D: yes");
  } else {
    const auto [a, b] = *mono.violation;
    w.line("monotone on D: no, " + render_point(L, f.point(a)) + " vs " + render_point(L, f.point(b)));
  }
  w.record({{"record", "monotone"}, {"holds", mono.holds()}});
  if (!L.is_chain()) {
    w.line("note: the lattice is not a chain; the RG condition is advisory here");
    w.record({{"record", "note"}, {"advisory", true}});
  }
  return w.finish(rg.holds() ? kExitOk : kExitNegative);
}

Report cmd_eval(const ProblemFile& file, const CommandOptions& options) {
  const auto& L = file.lattice;
  LatticePolynomial p;
  if (file.polynomial)
    p = file.poly();
  else if (file.values)
    p = LatticePolynomial(file.arity, *file.values);
  else
    throw InputError("eval needs a POLY or VALUES section");

  std::vector<std::pair<Point, std::optional<LatticeElement>>> targets;
  if (file.bounds && file.values) {
    const CuboidProblem problem = file.cuboid();
    for (Subset s = 0; s < problem.vertex_count(); ++s)
      targets.emplace_back(problem.vertex(s), problem.value(s));
  }
  if (file.points)
    for (const auto& [x, v] : *file.points) targets.emplace_back(x, v);
  if (targets.empty() && file.values)
    for (Subset s = 0; s < subset_count(file.arity); ++s)
      targets.emplace_back(characteristic_point(file.arity, s, L.bottom(), L.top()),
                           (*file.values)[s]);

  Writer w(options.format);
  int status = kExitOk;
  for (const auto& [x, expected] : targets) {
    const LatticeElement y = evaluate<LatticeElement>(p, x);
    std::string text = render_point(L, x) + " -> " + L.label(y);
    json r = {{"record", "value"}, {"point", point_json(L, x)}, {"value", L.label(y)}};
    if (expected && *expected != y) {
      text += " (expected " + L.label(*expected) + ")";
      r["expected"] = L.label(*expected);
      status = kExitNegative;
    }
    w.line(text);
    w.record(r);
  }
  return w.finish(status);
}

Report cmd_check(const ProblemFile& file, const CommandOptions& options) {
  const auto& L = file.lattice;
  const unsigned n = options.arity ? options.arity : (file.arity ? file.arity : 1);
  OracleConfig config;
  config.max_function_count = options.cap;
  config.seed = options.seed;
  const auto catalog = all_polynomial_functions(L, n, config);
  std::mt19937_64 rng(options.seed);
  Writer w(options.format);
  std::uint64_t discrepancies = 0, feasible = 0;
  for (std::uint64_t k = 0; k < options.samples; ++k) {
    const CuboidProblem problem = random_cuboid_problem(L, n, rng);
    const auto truth = brute_interpolate(PartialFunction::from_cuboid(problem), catalog);
    const SolutionSet sol = solve(problem);
    bool ok = sol.feasible == !truth.empty();
    if (ok && sol.feasible) {
      ++feasible;
      ok = enumerate_solutions(problem, {options.cap}) == truth;
    }
    if (!ok) {
      ++discrepancies;
      std::string values;
      for (Subset s = 0; s < problem.vertex_count(); ++s)
        values += (s ? "; " : "") + subset_label(s, n) + " -> " + L.label(problem.value(s));
      w.line("discrepancy at sample " + std::to_string(k) + ": " + values);
      w.record({{"record", "discrepancy"}, {"sample", k}});
    }
  }
  w.line("checked " + std::to_string(options.samples) + " random cuboid problems (n = " +
         std::to_string(n) + ", seed " + std::to_string(options.seed) + "): " +
         std::to_string(feasible) + " feasible, " + std::to_string(discrepancies) + " discrepancies");
  w.record({{"record", "check"},
            {"samples", options.samples},
            {"arity", n},
            {"seed", options.seed},
            {"feasible", feasible},
            {"discrepancies", discrepancies}});
  return w.finish(discrepancies ? kExitNegative : kExitOk);
}

Report cmd_from_utility(const UtilityBoundaryFile& file, const CommandOptions&) {
  return {kExitOk, render_problem(problem_from_utility(file))};
}

}  // namespace lpinterp
