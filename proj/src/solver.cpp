#include "lpinterp/solver.hpp"

#include <limits>

namespace lpinterp {

namespace {

bool below(LatticeElement x, LatticeElement y) noexcept { return (x.downset & ~y.downset) == 0; }
bool below(BoolElement u, BoolElement v) noexcept { return (u.bits & ~v.bits) == 0; }

LatticeElement meet(LatticeElement x, LatticeElement y) noexcept { return {x.downset & y.downset}; }
LatticeElement join(LatticeElement x, LatticeElement y) noexcept { return {x.downset | y.downset}; }

Subset bit(unsigned i) noexcept { return Subset{1} << i; }

bool is_feasible(const CuboidProblem& problem, Diagnosis* diagnosis) {
  auto mono = check_monotone(problem);
  auto star = check_star(problem);
  if (diagnosis) {
    diagnosis->monotonicity = mono.violation;
    diagnosis->star = star.violation;
  }
  return mono.holds() && star.holds();
}

std::vector<CoefficientBounds<LatticeElement>> lattice_bounds_of(
    const BooleanAlgebra& algebra, const std::vector<CoefficientBounds<BoolElement>>& bounds) {
  std::vector<CoefficientBounds<LatticeElement>> out;
  out.reserve(bounds.size());
  for (const auto& b : bounds) out.push_back({algebra.closure(b.lower), algebra.interior(b.upper)});
  return out;
}

}  // namespace

Verdict<MonotonicityWitness> check_monotone(const CuboidProblem& problem) {
  const unsigned n = problem.arity();
  for (Subset s = 0; s < problem.vertex_count(); ++s)
    for (unsigned i = 0; i < n; ++i) {
      if (s & bit(i)) continue;
      const Subset t = s | bit(i);
      if (!below(problem.value(s), problem.value(t))) return {MonotonicityWitness{s, t}};
    }
  return {};
}

Verdict<StarWitness> check_star(const CuboidProblem& problem) {
  const unsigned n = problem.arity();
  for (Subset s = 0; s < problem.vertex_count(); ++s)
    for (unsigned k = 0; k < n; ++k) {
      if (!(s & bit(k))) {
        const LatticeElement lhs = meet(problem.value(s | bit(k)), problem.low(k));
        const LatticeElement rhs = problem.value(s);
        if (!below(lhs, rhs)) return {StarWitness{s, k, InequalitySide::lower, lhs, rhs}};
      } else {
        const LatticeElement lhs = problem.value(s);
        const LatticeElement rhs = join(problem.value(s & ~bit(k)), problem.high(k));
        if (!below(lhs, rhs)) return {StarWitness{s, k, InequalitySide::upper, lhs, rhs}};
      }
    }
  return {};
}

Verdict<IteratedStarWitness> check_iterated_star(const CuboidProblem& problem) {
  const unsigned n = problem.arity();
  const DistributiveLattice& lattice = problem.lattice();
  for (Subset outer = 0; outer < problem.vertex_count(); ++outer) {
    Subset inner = 0;
    while (true) {
      const Subset diff = outer & ~inner;
      LatticeElement lows = lattice.top();
      LatticeElement highs = lattice.bottom();
      for (unsigned k = 0; k < n; ++k)
        if (diff & bit(k)) {
          lows = meet(lows, problem.low(k));
          highs = join(highs, problem.high(k));
        }
      const LatticeElement f_outer = problem.value(outer);
      const LatticeElement f_inner = problem.value(inner);
      const LatticeElement lower_lhs = meet(f_outer, lows);
      if (!below(lower_lhs, f_inner))
        return {IteratedStarWitness{inner, outer, InequalitySide::lower, lower_lhs, f_inner}};
      const LatticeElement upper_rhs = join(f_inner, highs);
      if (!below(f_outer, upper_rhs))
        return {IteratedStarWitness{inner, outer, InequalitySide::upper, f_outer, upper_rhs}};
      if (inner == outer) break;
      inner = (inner - outer) & outer;
    }
  }
  return {};
}

std::vector<CoefficientBounds<BoolElement>> compute_bounds(const CuboidProblem& problem) {
  const BooleanAlgebra algebra(problem.lattice());
  const unsigned n = problem.arity();
  std::vector<CoefficientBounds<BoolElement>> out(problem.vertex_count());
  for (Subset s = 0; s < problem.vertex_count(); ++s) {
    const BoolElement value = algebra.embed(problem.value(s));
    BoolElement lower = value;
    BoolElement upper = value;
    for (unsigned i = 0; i < n; ++i) {
      if (s & bit(i))
        upper = algebra.join(upper, algebra.complement(algebra.embed(problem.high(i))));
      else
        lower = algebra.meet(lower, algebra.complement(algebra.embed(problem.low(i))));
    }
    out[s] = {lower, upper};
  }
  return out;
}

ExtremalPolynomials extremal_polynomials(const CuboidProblem& problem) {
  Diagnosis diagnosis;
  if (!is_feasible(problem, &diagnosis)) throw InfeasibleProblem(std::move(diagnosis));
  const auto bounds = compute_bounds(problem);
  std::vector<BoolElement> lower, upper;
  for (const auto& b : bounds) {
    lower.push_back(b.lower);
    upper.push_back(b.upper);
  }
  return {BoolPolynomial(problem.arity(), std::move(lower)),
          BoolPolynomial(problem.arity(), std::move(upper))};
}

SolutionSet solve(const CuboidProblem& problem) {
  SolutionSet out;
  out.feasible = is_feasible(problem, &out.diagnosis);
  out.boolean_bounds = compute_bounds(problem);
  out.lattice_bounds = lattice_bounds_of(BooleanAlgebra(problem.lattice()), out.boolean_bounds);
  if (out.feasible) {
    LatticePolynomial p0(problem.arity(),
                         std::vector<LatticeElement>(problem.values().begin(), problem.values().end()));
    for (Subset s = 0; s < problem.vertex_count(); ++s)
      if (evaluate<LatticeElement>(p0, problem.vertex(s)) != problem.value(s))
        throw std::logic_error("canonical interpolant does not restrict to f");
    out.canonical = std::move(p0);
  }
  return out;
}

bool is_solution(const CuboidProblem& problem, const BoolPolynomial& p) {
  if (p.arity() != problem.arity()) throw UsageError("is_solution: arity mismatch");
  const BooleanAlgebra algebra(problem.lattice());
  require_in(algebra, p);
  if (!is_feasible(problem, nullptr)) return false;
  const auto bounds = compute_bounds(problem);
  const auto q = normalize_monotone(p);
  for (Subset s = 0; s < bounds.size(); ++s) {
    const BoolElement c = q.coefficient(s);
    if (!below(bounds[s].lower, c) || !below(c, bounds[s].upper)) return false;
  }
  return true;
}

bool is_solution(const CuboidProblem& problem, const LatticePolynomial& p) {
  if (p.arity() != problem.arity()) throw UsageError("is_solution: arity mismatch");
  require_in(problem.lattice(), p);
  return is_solution(problem, embed(BooleanAlgebra(problem.lattice()), p));
}

std::uint64_t interval_combinations(const CuboidProblem& problem) {
  const BooleanAlgebra algebra(problem.lattice());
  const auto bounds = lattice_bounds_of(algebra, compute_bounds(problem));
  std::uint64_t total = 1;
  for (const auto& b : bounds) {
    const std::uint64_t size = problem.lattice().interval_size(b.lower, b.upper);
    if (size == 0) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / size)
      total = std::numeric_limits<std::uint64_t>::max();
    else
      total *= size;
  }
  return total;
}

std::vector<LatticePolynomial> enumerate_solutions(const CuboidProblem& problem,
                                                   EnumerationLimits limits) {
  if (!is_feasible(problem, nullptr)) return {};
  const std::uint64_t combos = interval_combinations(problem);
  if (combos > limits.max_combinations)
    throw CapExceeded("solution enumeration needs " + std::to_string(combos) +
                          " interval combinations; cap is " +
                          std::to_string(limits.max_combinations),
                      combos);

  const DistributiveLattice& lattice = problem.lattice();
  const BooleanAlgebra algebra(lattice);
  const auto bounds = lattice_bounds_of(algebra, compute_bounds(problem));
  const unsigned n = problem.arity();
  const std::size_t count = problem.vertex_count();
  std::vector<std::vector<LatticeElement>> candidates(count);
  for (Subset s = 0; s < count; ++s) candidates[s] = lattice.interval(bounds[s].lower, bounds[s].upper);

  // Coefficients are fixed from the full subset down to the empty one, so
  // every cover superset of the current subset is already chosen and caps it.
  std::vector<LatticeElement> table(count);
  std::vector<LatticePolynomial> out;
  auto assign = [&](auto& self, std::size_t level) -> void {
    const Subset s = static_cast<Subset>(level);
    Bits cap = lattice.universe();
    for (unsigned i = 0; i < n; ++i)
      if (!(s & bit(i))) cap &= table[s | bit(i)].downset;
    for (LatticeElement c : candidates[s]) {
      if (c.downset & ~cap) continue;
      table[s] = c;
      if (level == 0)
        out.emplace_back(n, table);
      else
        self(self, level - 1);
    }
  };
  assign(assign, count - 1);
  return out;
}

GoodsteinResult goodstein(const DistributiveLattice& lattice, unsigned arity,
                          std::vector<LatticeElement> values) {
  if (lattice.size() < 2) throw InputError("interpolation on {0,1}^n needs a lattice with 0 < 1");
  std::vector<CoordinateBounds> bounds(arity, {lattice.bottom(), lattice.top()});
  const CuboidProblem problem(lattice, std::move(bounds), std::move(values));
  SolutionSet solution = solve(problem);
  if (solution.feasible) return {std::move(solution.canonical), std::nullopt};
  if (!solution.diagnosis.monotonicity)
    throw std::logic_error("star condition failed on the unit cube");
  return {std::nullopt, solution.diagnosis.monotonicity};
}

Verdict<PointPairWitness> check_rg(const PartialFunction& f) {
  const unsigned n = f.arity();
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < f.size(); ++b) {
      const LatticeElement fa = f.value(a);
      const LatticeElement fb = f.value(b);
      if (fa == fb || !below(fa, fb)) continue;
      bool found = false;
      for (unsigned i = 0; i < n && !found; ++i)
        found = below(f.point(a)[i], fa) && below(fb, f.point(b)[i]);
      if (!found) return {PointPairWitness{a, b}};
    }
  return {};
}

Verdict<PointPairWitness> check_monotone(const PartialFunction& f) {
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < f.size(); ++b) {
      if (a == b) continue;
      bool pointwise = true;
      for (unsigned i = 0; i < f.arity() && pointwise; ++i)
        pointwise = below(f.point(a)[i], f.point(b)[i]);
      if (pointwise && !below(f.value(a), f.value(b))) return {PointPairWitness{a, b}};
    }
  return {};
}

}  // namespace lpinterp
