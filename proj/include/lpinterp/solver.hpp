#pragma once

// Interpolation of partial functions given on cuboid vertices by lattice
// polynomial functions.
//
// A cuboid problem (a_i < b_i, values f(e_I)) is solvable iff f is monotone
// and satisfies, for all I and k,
//
//   f(e_{I∪{k}}) ∧ a_k  <=  f(e_I)  <=  f(e_{I∖{k}}) ∨ b_k.            (star)
//
// The solutions over the Boolean extension B are exactly the normalized DNFs
// with c⁻_I <= c_I <= c⁺_I where
//
//   c⁻_I = f(e_I) ∧ ⋀_{i∉I} a_i'      c⁺_I = f(e_I) ∨ ⋁_{i∈I} b_i'
//
// and the solutions over L are those with cl(c⁻_I) <= c_I <= int(c⁺_I).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lpinterp/boolean.hpp"
#include "lpinterp/polynomial.hpp"
#include "lpinterp/problem.hpp"

namespace lpinterp {

template <class Witness>
struct Verdict {
  std::optional<Witness> violation;
  bool holds() const noexcept { return !violation.has_value(); }
  explicit operator bool() const noexcept { return holds(); }
};

// f(e_lower) ≰ f(e_upper) although lower ⊂ upper; upper covers lower.
struct MonotonicityWitness {
  Subset lower = 0;
  Subset upper = 0;
  friend bool operator==(const MonotonicityWitness&, const MonotonicityWitness&) = default;
};

enum class InequalitySide {
  lower,  // the meet-with-a side fails
  upper,  // the join-with-b side fails
};

// The star condition fails for subset I and 0-based coordinate k: lhs ≰ rhs.
struct StarWitness {
  Subset subset = 0;
  unsigned coordinate = 0;
  InequalitySide side = InequalitySide::lower;
  LatticeElement lhs;
  LatticeElement rhs;
  friend bool operator==(const StarWitness&, const StarWitness&) = default;
};

// The iterated form fails for inner ⊆ outer: lhs ≰ rhs.
struct IteratedStarWitness {
  Subset inner = 0;
  Subset outer = 0;
  InequalitySide side = InequalitySide::lower;
  LatticeElement lhs;
  LatticeElement rhs;
  friend bool operator==(const IteratedStarWitness&, const IteratedStarWitness&) = default;
};

// Pair of domain points (by index) violating a condition.
struct PointPairWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  friend bool operator==(const PointPairWitness&, const PointPairWitness&) = default;
};

struct Diagnosis {
  std::optional<MonotonicityWitness> monotonicity;
  std::optional<StarWitness> star;
};

template <class E>
struct CoefficientBounds {
  E lower;
  E upper;
  friend bool operator==(const CoefficientBounds&, const CoefficientBounds&) = default;
};

struct SolutionSet {
  bool feasible = false;
  Diagnosis diagnosis;
  // Indexed by subset. Always filled, feasible or not.
  std::vector<CoefficientBounds<BoolElement>> boolean_bounds;
  std::vector<CoefficientBounds<LatticeElement>> lattice_bounds;
  // The polynomial with c_I = f(e_I), when feasible.
  std::optional<LatticePolynomial> canonical;
};

struct ExtremalPolynomials {
  BoolPolynomial lower;  // p⁻, the least solution over B
  BoolPolynomial upper;  // p⁺, the greatest solution over B
};

class InfeasibleProblem : public std::runtime_error {
public:
  explicit InfeasibleProblem(Diagnosis diagnosis)
      : std::runtime_error("interpolation problem has no solution"),
        diagnosis_(std::move(diagnosis)) {}
  const Diagnosis& diagnosis() const noexcept { return diagnosis_; }

private:
  Diagnosis diagnosis_;
};

struct EnumerationLimits {
  std::uint64_t max_combinations = 1'000'000;
};

Verdict<MonotonicityWitness> check_monotone(const CuboidProblem& problem);
Verdict<StarWitness> check_star(const CuboidProblem& problem);
Verdict<IteratedStarWitness> check_iterated_star(const CuboidProblem& problem);

std::vector<CoefficientBounds<BoolElement>> compute_bounds(const CuboidProblem& problem);

// Throws InfeasibleProblem when f is not monotone or violates star.
ExtremalPolynomials extremal_polynomials(const CuboidProblem& problem);

SolutionSet solve(const CuboidProblem& problem);

// Coefficient-interval membership of the normalized table of p.
bool is_solution(const CuboidProblem& problem, const LatticePolynomial& p);
bool is_solution(const CuboidProblem& problem, const BoolPolynomial& p);

// Upper bound on the number of solutions: product of the interval sizes
// |[cl(c⁻_I), int(c⁺_I)]| (saturating).
std::uint64_t interval_combinations(const CuboidProblem& problem);

// All normalized L-solutions, lexicographic in the coefficient tuple
// (c_{[n]}, ..., c_{∅}) under canonical element order. Empty when infeasible.
// Throws CapExceeded when interval_combinations exceeds the limit.
std::vector<LatticePolynomial> enumerate_solutions(const CuboidProblem& problem,
                                                   EnumerationLimits limits = {});

struct GoodsteinResult {
  std::optional<LatticePolynomial> polynomial;
  std::optional<MonotonicityWitness> violation;
};

// Interpolation on {0,1}^n: unique solution c_I = f(1_I) iff f is monotone.
GoodsteinResult goodstein(const DistributiveLattice& lattice, unsigned arity,
                          std::vector<LatticeElement> values);

// For every pair x, y in D with f(x) < f(y) some coordinate has
// x_i <= f(x) < f(y) <= y_i. Decides interpolability on finite chains; on
// other lattices it is neither necessary nor sufficient.
Verdict<PointPairWitness> check_rg(const PartialFunction& f);

// Monotonicity on an arbitrary domain: x <= y pointwise implies f(x) <= f(y).
Verdict<PointPairWitness> check_monotone(const PartialFunction& f);

}  // namespace lpinterp
