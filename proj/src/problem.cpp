#include "lpinterp/problem.hpp"

#include <set>

namespace lpinterp {

CuboidProblem::CuboidProblem(DistributiveLattice lattice, std::vector<CoordinateBounds> bounds,
                             std::vector<LatticeElement> values)
    : lattice_(std::move(lattice)), bounds_(std::move(bounds)), values_(std::move(values)) {
  if (bounds_.size() > kMaxArity)
    throw InputError("arity " + std::to_string(bounds_.size()) + " exceeds the maximum " +
                     std::to_string(kMaxArity));
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const auto& b = bounds_[i];
    if (!lattice_.contains(b.low) || !lattice_.contains(b.high))
      throw InputError("bounds of coordinate " + std::to_string(i + 1) + " are not lattice elements");
    if (!lattice_.less(b.low, b.high))
      throw InputError("coordinate " + std::to_string(i + 1) + ": need " + lattice_.label(b.low) +
                       " < " + lattice_.label(b.high));
  }
  if (values_.size() != subset_count(arity()))
    throw InputError("expected " + std::to_string(subset_count(arity())) + " values, got " +
                     std::to_string(values_.size()));
  for (LatticeElement v : values_)
    if (!lattice_.contains(v)) throw InputError("value is not a lattice element");
}

Point CuboidProblem::vertex(Subset subset) const {
  Point x(arity());
  for (unsigned i = 0; i < arity(); ++i)
    x[i] = ((subset >> i) & 1u) ? bounds_[i].high : bounds_[i].low;
  return x;
}

PartialFunction::PartialFunction(DistributiveLattice lattice, unsigned arity,
                                 std::vector<Point> points, std::vector<LatticeElement> values)
    : lattice_(std::move(lattice)),
      arity_(arity),
      points_(std::move(points)),
      values_(std::move(values)) {
  if (arity_ > kMaxArity) throw InputError("arity exceeds the supported maximum");
  if (points_.size() != values_.size()) throw InputError("each point needs exactly one value");
  std::set<Point> seen;
  for (const auto& x : points_) {
    if (x.size() != arity_)
      throw InputError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                       std::to_string(arity_));
    for (LatticeElement c : x)
      if (!lattice_.contains(c)) throw InputError("point coordinate is not a lattice element");
    if (!seen.insert(x).second) throw InputError("duplicate point in domain");
  }
  for (LatticeElement v : values_)
    if (!lattice_.contains(v)) throw InputError("value is not a lattice element");
}

PartialFunction PartialFunction::from_cuboid(const CuboidProblem& problem) {
  std::vector<Point> points;
  std::vector<LatticeElement> values(problem.values().begin(), problem.values().end());
  for (Subset s = 0; s < problem.vertex_count(); ++s) points.push_back(problem.vertex(s));
  return PartialFunction(problem.lattice(), problem.arity(), std::move(points), std::move(values));
}

bool PartialFunction::restricts_to(const LatticePolynomial& p) const {
  if (p.arity() != arity_) throw UsageError("polynomial arity does not match the domain");
  for (std::size_t k = 0; k < points_.size(); ++k)
    if (evaluate<LatticeElement>(p, points_[k]) != values_[k]) return false;
  return true;
}

}  // namespace lpinterp
