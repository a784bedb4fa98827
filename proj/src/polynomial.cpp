#include "lpinterp/polynomial.hpp"

namespace lpinterp {

void require_in(const DistributiveLattice& lattice, const LatticePolynomial& p) {
  for (LatticeElement c : p.coefficients()) lattice.require(c);
}

void require_in(const BooleanAlgebra& algebra, const BoolPolynomial& p) {
  for (BoolElement c : p.coefficients()) algebra.require(c);
}

std::string subset_label(Subset subset, unsigned arity) {
  std::string s = "[";
  bool first = true;
  for (unsigned i = 0; i < arity; ++i) {
    if (!((subset >> i) & 1u)) continue;
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "]";
}

}  // namespace lpinterp
