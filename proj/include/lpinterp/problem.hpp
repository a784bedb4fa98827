#pragma once

// Interpolation inputs: a partial function on the vertices of a cuboid, and a
// partial function on an arbitrary finite set of points.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lpinterp/order.hpp"
#include "lpinterp/polynomial.hpp"

namespace lpinterp {

using Point = std::vector<LatticeElement>;

// Per-coordinate pair (low, high) with low < high. Vertex e_I takes `high` in
// the coordinates of I and `low` elsewhere.
struct CoordinateBounds {
  LatticeElement low;
  LatticeElement high;
  friend bool operator==(const CoordinateBounds&, const CoordinateBounds&) = default;
};

class CuboidProblem {
public:
  // Throws InputError unless low < high in every coordinate and there are
  // exactly 2^n values, all in `lattice`.
  CuboidProblem(DistributiveLattice lattice, std::vector<CoordinateBounds> bounds,
                std::vector<LatticeElement> values);

  const DistributiveLattice& lattice() const noexcept { return lattice_; }
  unsigned arity() const noexcept { return static_cast<unsigned>(bounds_.size()); }
  std::size_t vertex_count() const noexcept { return values_.size(); }

  // Coordinates are 0-based here; subset bit i is coordinate i.
  LatticeElement low(unsigned i) const { return bounds_.at(i).low; }
  LatticeElement high(unsigned i) const { return bounds_.at(i).high; }
  std::span<const CoordinateBounds> bounds() const noexcept { return bounds_; }

  LatticeElement value(Subset subset) const { return values_.at(subset); }
  std::span<const LatticeElement> values() const noexcept { return values_; }

  Point vertex(Subset subset) const;

  friend bool operator==(const CuboidProblem&, const CuboidProblem&) = default;

private:
  DistributiveLattice lattice_;
  std::vector<CoordinateBounds> bounds_;
  std::vector<LatticeElement> values_;
};

// f : D -> L for an arbitrary finite D ⊆ L^n with pairwise distinct points.
class PartialFunction {
public:
  PartialFunction(DistributiveLattice lattice, unsigned arity, std::vector<Point> points,
                  std::vector<LatticeElement> values);

  static PartialFunction from_cuboid(const CuboidProblem& problem);

  const DistributiveLattice& lattice() const noexcept { return lattice_; }
  unsigned arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point& point(std::size_t k) const { return points_.at(k); }
  LatticeElement value(std::size_t k) const { return values_.at(k); }
  std::span<const Point> points() const noexcept { return points_; }
  std::span<const LatticeElement> values() const noexcept { return values_; }

  // True iff p agrees with f on every point of D.
  bool restricts_to(const LatticePolynomial& p) const;

  friend bool operator==(const PartialFunction&, const PartialFunction&) = default;

private:
  DistributiveLattice lattice_;
  unsigned arity_;
  std::vector<Point> points_;
  std::vector<LatticeElement> values_;
};

}  // namespace lpinterp
