#pragma once

// The Boolean algebra B generated by a finite distributive lattice L. With L
// given as downsets of its join-irreducibles, B is the full powerset of the
// irreducibles and L sits inside it as the downward-closed subsets.

#include <compare>
#include <cstddef>
#include <string>

#include "lpinterp/order.hpp"

namespace lpinterp {

struct BoolElement {
  Bits bits = 0;
  friend auto operator<=>(const BoolElement&, const BoolElement&) = default;
};

class BooleanAlgebra {
public:
  explicit BooleanAlgebra(DistributiveLattice lattice) : lattice_(std::move(lattice)) {}

  const DistributiveLattice& lattice() const noexcept { return lattice_; }

  std::size_t size() const noexcept { return std::size_t{1} << lattice_.irreducible_count(); }
  BoolElement element(std::size_t index) const;  // canonical order = bitmask value
  BoolElement bottom() const noexcept { return {0}; }
  BoolElement top() const noexcept { return {lattice_.universe()}; }
  bool contains(BoolElement u) const noexcept { return (u.bits & ~lattice_.universe()) == 0; }

  BoolElement embed(LatticeElement x) const {
    lattice_.require(x);
    return {x.downset};
  }
  bool in_lattice(BoolElement u) const noexcept { return lattice_.is_downset(u.bits); }

  BoolElement complement(BoolElement u) const;
  BoolElement meet(BoolElement u, BoolElement v) const;
  BoolElement join(BoolElement u, BoolElement v) const;
  bool leq(BoolElement u, BoolElement v) const;

  // Least element of L above u.
  LatticeElement closure(BoolElement u) const;
  // Greatest element of L below u.
  LatticeElement interior(BoolElement u) const;

  // Lattice label when u lies in L, otherwise the exact irreducible set "{i,j}".
  std::string label(BoolElement u) const;

  void require(BoolElement u) const;

private:
  DistributiveLattice lattice_;
};

}  // namespace lpinterp
