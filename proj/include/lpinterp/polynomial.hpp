#pragma once

// Lattice polynomial functions in disjunctive normal form
//
//   p(x) = join over I ⊆ [n] of ( c_I meet (meet of x_i for i in I) )
//
// over a carrier that is either the lattice L itself or its Boolean
// extension B. Coefficient tables are indexed by subset bitmask: bit i set
// means variable i+1 belongs to I.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lpinterp/boolean.hpp"
#include "lpinterp/order.hpp"

namespace lpinterp {

using Subset = std::uint32_t;

inline constexpr unsigned kMaxArity = 16;

inline constexpr Bits bits_of(LatticeElement x) noexcept { return x.downset; }
inline constexpr Bits bits_of(BoolElement u) noexcept { return u.bits; }

template <class E>
constexpr E from_bits(Bits b) noexcept {
  return E{b};
}

inline bool is_subset(Subset a, Subset b) noexcept { return (a & ~b) == 0; }
inline std::size_t subset_count(unsigned arity) { return std::size_t{1} << arity; }

template <class E>
class PolynomialDNF {
public:
  using element_type = E;

  PolynomialDNF() = default;
  PolynomialDNF(unsigned arity, std::vector<E> coefficients)
      : arity_(arity), coeffs_(std::move(coefficients)) {
    if (arity_ > kMaxArity)
      throw UsageError("arity " + std::to_string(arity_) + " exceeds the supported maximum " +
                       std::to_string(kMaxArity));
    if (coeffs_.size() != subset_count(arity_))
      throw UsageError("coefficient table needs exactly 2^n entries");
  }

  // Table with every coefficient equal to c; the constant function c.
  static PolynomialDNF constant(unsigned arity, E c) {
    return PolynomialDNF(arity, std::vector<E>(subset_count(arity), c));
  }

  unsigned arity() const noexcept { return arity_; }
  E coefficient(Subset subset) const { return coeffs_.at(subset); }
  std::span<const E> coefficients() const noexcept { return coeffs_; }

  // I ⊆ J implies c_I <= c_J.
  bool is_normalized() const noexcept {
    for (Subset s = 0; s < coeffs_.size(); ++s)
      for (unsigned i = 0; i < arity_; ++i)
        if (!((s >> i) & 1u) && (bits_of(coeffs_[s]) & ~bits_of(coeffs_[s | (Subset{1} << i)])))
          return false;
    return true;
  }

  friend bool operator==(const PolynomialDNF&, const PolynomialDNF&) = default;

private:
  unsigned arity_ = 0;
  std::vector<E> coeffs_{E{}};
};

using LatticePolynomial = PolynomialDNF<LatticeElement>;
using BoolPolynomial = PolynomialDNF<BoolElement>;

template <class E>
E evaluate(const PolynomialDNF<E>& p, std::span<const E> point) {
  const unsigned n = p.arity();
  if (point.size() != n)
    throw UsageError("point has " + std::to_string(point.size()) + " components; polynomial arity is " +
                     std::to_string(n));
  // meets[I] = meet of x_i over i in I; the empty meet is "all bits", which
  // the coefficient then cuts down to c_empty.
  const auto coeffs = p.coefficients();
  std::array<Bits, 256> small;
  std::vector<Bits> large;
  Bits* meets = small.data();
  if (coeffs.size() > small.size()) {
    large.resize(coeffs.size());
    meets = large.data();
  }
  meets[0] = ~Bits{0};
  Bits result = bits_of(coeffs[0]);
  for (Subset s = 1; s < coeffs.size(); ++s) {
    const unsigned low = static_cast<unsigned>(std::countr_zero(s));
    meets[s] = meets[s & (s - 1)] & bits_of(point[low]);
    result |= bits_of(coeffs[s]) & meets[s];
  }
  return from_bits<E>(result);
}

template <class E>
E evaluate(const PolynomialDNF<E>& p, std::initializer_list<E> point) {
  return evaluate(p, std::span<const E>(point.begin(), point.size()));
}

template <class E>
E evaluate(const PolynomialDNF<E>& p, const std::vector<E>& point) {
  return evaluate(p, std::span<const E>(point));
}

// c'_I = join of c_J over J ⊆ I: same function, monotone coefficients.
template <class E>
PolynomialDNF<E> normalize_monotone(const PolynomialDNF<E>& p) {
  std::vector<E> c(p.coefficients().begin(), p.coefficients().end());
  for (unsigned i = 0; i < p.arity(); ++i) {
    const Subset bit = Subset{1} << i;
    for (Subset s = 0; s < c.size(); ++s)
      if (s & bit) c[s] = from_bits<E>(bits_of(c[s]) | bits_of(c[s ^ bit]));
  }
  return PolynomialDNF<E>(p.arity(), std::move(c));
}

// Characteristic vector of I: top in the coordinates of I, bottom elsewhere.
template <class E>
std::vector<E> characteristic_point(unsigned arity, Subset subset, E bottom, E top) {
  std::vector<E> x(arity);
  for (unsigned i = 0; i < arity; ++i) x[i] = ((subset >> i) & 1u) ? top : bottom;
  return x;
}

// Reads c_I = p(1_I) off a black-box polynomial function over a bounded carrier.
template <class E>
PolynomialDNF<E> recover_coefficients(const std::function<E(std::span<const E>)>& black_box,
                                      unsigned arity, E bottom, E top) {
  std::vector<E> c(subset_count(arity));
  for (Subset s = 0; s < c.size(); ++s) {
    const auto x = characteristic_point(arity, s, bottom, top);
    c[s] = black_box(x);
  }
  return PolynomialDNF<E>(arity, std::move(c));
}

// Equality of induced functions. Normalized tables and polynomial functions
// correspond one to one over bounded carriers.
template <class E>
bool functions_equal(const PolynomialDNF<E>& p, const PolynomialDNF<E>& q) {
  if (p.arity() != q.arity()) throw UsageError("functions_equal: arity mismatch");
  return normalize_monotone(p) == normalize_monotone(q);
}

inline BoolPolynomial embed(const BooleanAlgebra& b, const LatticePolynomial& p) {
  std::vector<BoolElement> c;
  c.reserve(p.coefficients().size());
  for (LatticeElement x : p.coefficients()) c.push_back(b.embed(x));
  return BoolPolynomial(p.arity(), std::move(c));
}

// Throws UsageError unless every coefficient lies in the carrier.
void require_in(const DistributiveLattice& lattice, const LatticePolynomial& p);
void require_in(const BooleanAlgebra& algebra, const BoolPolynomial& p);

// Subset rendering "[1,3]" with 1-based variable indices.
std::string subset_label(Subset subset, unsigned arity);

}  // namespace lpinterp
