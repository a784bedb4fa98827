#include "lpinterp/oracle.hpp"

#include <algorithm>
#include <set>

namespace lpinterp {

namespace {

void require_positive(const OracleConfig& config) {
  if (config.max_function_count == 0) throw UsageError("oracle cap must be positive");
}

// Depth-first over subsets from [n] down to ∅; a value is admissible for I
// when it lies below every coefficient already fixed for a superset of I.
template <class E>
std::vector<PolynomialDNF<E>> monotone_tables(std::span<const E> carrier, unsigned arity,
                                              const OracleConfig& config) {
  require_positive(config);
  if (arity > kMaxArity) throw UsageError("arity exceeds the supported maximum");
  const std::size_t count = subset_count(arity);
  std::vector<E> table(count);
  std::vector<PolynomialDNF<E>> out;
  auto fill = [&](auto& self, std::size_t level) -> void {
    const Subset s = static_cast<Subset>(level);
    for (E c : carrier) {
      bool ok = true;
      for (Subset t = s + 1; t < count && ok; ++t)
        if (is_subset(s, t)) ok = (bits_of(c) & ~bits_of(table[t])) == 0;
      if (!ok) continue;
      table[s] = c;
      if (level > 0) {
        self(self, level - 1);
        continue;
      }
      if (out.size() >= config.max_function_count)
        throw CapExceeded("more than " + std::to_string(config.max_function_count) +
                              " polynomial functions",
                          out.size() + 1);
      out.emplace_back(arity, table);
    }
  };
  fill(fill, count - 1);
  return out;
}

}  // namespace

std::vector<LatticePolynomial> all_polynomial_functions(const DistributiveLattice& lattice,
                                                        unsigned arity,
                                                        const OracleConfig& config) {
  return monotone_tables<LatticeElement>(lattice.elements(), arity, config);
}

std::vector<BoolPolynomial> all_boolean_polynomial_functions(const BooleanAlgebra& algebra,
                                                             unsigned arity,
                                                             const OracleConfig& config) {
  if (algebra.size() > config.max_function_count)
    throw CapExceeded("Boolean extension too large for the oracle", algebra.size());
  std::vector<BoolElement> carrier;
  for (std::size_t k = 0; k < algebra.size(); ++k) carrier.push_back(algebra.element(k));
  return monotone_tables<BoolElement>(carrier, arity, config);
}

std::vector<LatticePolynomial> brute_interpolate(const PartialFunction& f,
                                                 std::span<const LatticePolynomial> catalog) {
  std::vector<LatticePolynomial> out;
  for (const auto& p : catalog)
    if (f.restricts_to(p)) out.push_back(p);
  return out;
}

std::vector<LatticePolynomial> brute_interpolate(const PartialFunction& f,
                                                 const OracleConfig& config) {
  const auto catalog = all_polynomial_functions(f.lattice(), f.arity(), config);
  return brute_interpolate(f, catalog);
}

std::vector<BoolPolynomial> brute_b_interpolate(const CuboidProblem& problem,
                                                std::span<const BoolPolynomial> catalog) {
  const BooleanAlgebra algebra(problem.lattice());
  std::vector<std::vector<BoolElement>> vertices;
  for (Subset s = 0; s < problem.vertex_count(); ++s) {
    std::vector<BoolElement> x;
    for (LatticeElement c : problem.vertex(s)) x.push_back(algebra.embed(c));
    vertices.push_back(std::move(x));
  }
  std::vector<BoolPolynomial> out;
  for (const auto& q : catalog) {
    if (q.arity() != problem.arity()) throw UsageError("catalog arity does not match the problem");
    bool ok = true;
    for (Subset s = 0; s < vertices.size() && ok; ++s)
      ok = evaluate<BoolElement>(q, vertices[s]) == algebra.embed(problem.value(s));
    if (ok) out.push_back(q);
  }
  return out;
}

std::vector<BoolPolynomial> brute_b_interpolate(const CuboidProblem& problem,
                                                const OracleConfig& config) {
  const auto catalog =
      all_boolean_polynomial_functions(BooleanAlgebra(problem.lattice()), problem.arity(), config);
  return brute_b_interpolate(problem, catalog);
}

// ------------------------------------------------------------ generators

namespace {

LatticeElement pick(const DistributiveLattice& lattice, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, lattice.size() - 1);
  return lattice.element(d(rng));
}

}  // namespace

CuboidProblem random_cuboid_problem(const DistributiveLattice& lattice, unsigned arity,
                                    std::mt19937_64& rng) {
  std::vector<std::pair<LatticeElement, LatticeElement>> strict;
  for (LatticeElement x : lattice.elements())
    for (LatticeElement y : lattice.elements())
      if (lattice.less(x, y)) strict.emplace_back(x, y);
  if (strict.empty()) throw UsageError("lattice has no pair a < b");
  std::uniform_int_distribution<std::size_t> d(0, strict.size() - 1);
  std::vector<CoordinateBounds> bounds;
  for (unsigned i = 0; i < arity; ++i) {
    const auto& [a, b] = strict[d(rng)];
    bounds.push_back({a, b});
  }
  std::vector<LatticeElement> values;
  for (std::size_t s = 0; s < subset_count(arity); ++s) values.push_back(pick(lattice, rng));
  return CuboidProblem(lattice, std::move(bounds), std::move(values));
}

PartialFunction random_partial_function(const DistributiveLattice& lattice, unsigned arity,
                                        std::size_t max_points, std::mt19937_64& rng) {
  std::uint64_t universe = 1;
  for (unsigned i = 0; i < arity; ++i) universe *= lattice.size();
  const std::size_t limit = static_cast<std::size_t>(std::min<std::uint64_t>(max_points, universe));
  std::uniform_int_distribution<std::size_t> size_dist(1, std::max<std::size_t>(limit, 1));
  const std::size_t target = size_dist(rng);
  std::set<Point> chosen;
  std::vector<Point> points;
  while (points.size() < target) {
    Point x;
    for (unsigned i = 0; i < arity; ++i) x.push_back(pick(lattice, rng));
    if (chosen.insert(x).second) points.push_back(std::move(x));
  }
  std::vector<LatticeElement> values;
  for (std::size_t k = 0; k < points.size(); ++k) values.push_back(pick(lattice, rng));
  return PartialFunction(lattice, arity, std::move(points), std::move(values));
}

LatticePolynomial random_polynomial(const DistributiveLattice& lattice, unsigned arity,
                                    std::mt19937_64& rng) {
  std::vector<LatticeElement> c;
  for (std::size_t s = 0; s < subset_count(arity); ++s) c.push_back(pick(lattice, rng));
  return LatticePolynomial(arity, std::move(c));
}

}  // namespace lpinterp
