#include "lpinterp/boolean.hpp"

namespace lpinterp {

void BooleanAlgebra::require(BoolElement u) const {
  if (!contains(u))
    throw UsageError("bitmask " + std::to_string(u.bits) +
                     " is not an element of the Boolean extension");
}

BoolElement BooleanAlgebra::element(std::size_t index) const {
  if (index >= size()) throw UsageError("Boolean element index out of range");
  return {static_cast<Bits>(index)};
}

BoolElement BooleanAlgebra::complement(BoolElement u) const {
  require(u);
  return {lattice_.universe() & ~u.bits};
}

BoolElement BooleanAlgebra::meet(BoolElement u, BoolElement v) const {
  require(u);
  require(v);
  return {u.bits & v.bits};
}

BoolElement BooleanAlgebra::join(BoolElement u, BoolElement v) const {
  require(u);
  require(v);
  return {u.bits | v.bits};
}

bool BooleanAlgebra::leq(BoolElement u, BoolElement v) const {
  require(u);
  require(v);
  return (u.bits & ~v.bits) == 0;
}

LatticeElement BooleanAlgebra::closure(BoolElement u) const {
  require(u);
  return lattice_.down_closure(u.bits);
}

LatticeElement BooleanAlgebra::interior(BoolElement u) const {
  require(u);
  return lattice_.largest_downset_within(u.bits);
}

std::string BooleanAlgebra::label(BoolElement u) const {
  require(u);
  if (in_lattice(u)) return lattice_.label({u.bits});
  std::string s = "{";
  bool first = true;
  for (unsigned j = 0; j < lattice_.irreducible_count(); ++j) {
    if (!((u.bits >> j) & 1u)) continue;
    if (!first) s += ",";
    s += lattice_.irreducibles().name(j);
    first = false;
  }
  return s + "}";
}

}  // namespace lpinterp
