#pragma once

// Helpers shared by the unit, property and acceptance suites.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpinterp/boolean.hpp"
#include "lpinterp/format.hpp"
#include "lpinterp/oracle.hpp"
#include "lpinterp/polynomial.hpp"
#include "lpinterp/problem.hpp"
#include "lpinterp/solver.hpp"

namespace testing {

using namespace lpinterp;

inline constexpr std::uint64_t kSeed = 20100101;

inline DistributiveLattice lattice(std::string_view description) {
  return build_lattice(parse_lattice_description(description));
}

inline LatticeElement el(const DistributiveLattice& L, std::string_view label) {
  return L.resolve(label);
}

inline CuboidProblem cuboid(const DistributiveLattice& L,
                            std::vector<std::pair<std::string, std::string>> bounds,
                            std::vector<std::string> values) {
  std::vector<CoordinateBounds> b;
  for (const auto& [lo, hi] : bounds) b.push_back({el(L, lo), el(L, hi)});
  std::vector<LatticeElement> v;
  for (const auto& label : values) v.push_back(el(L, label));
  return CuboidProblem(L, std::move(b), std::move(v));
}

inline LatticePolynomial poly(const DistributiveLattice& L, unsigned arity,
                              std::vector<std::string> coefficients) {
  std::vector<LatticeElement> c;
  for (const auto& label : coefficients) c.push_back(el(L, label));
  return LatticePolynomial(arity, std::move(c));
}

inline std::filesystem::path fixture_dir() { return LPI_FIXTURE_DIR; }

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline ProblemFile fixture(std::string_view name) {
  const auto path = fixture_dir() / name;
  return parse_problem(read_text(path), path.parent_path());
}

inline std::vector<std::pair<LatticeElement, LatticeElement>> strict_pairs(
    const DistributiveLattice& L) {
  std::vector<std::pair<LatticeElement, LatticeElement>> out;
  for (LatticeElement x : L.elements())
    for (LatticeElement y : L.elements())
      if (L.less(x, y)) out.emplace_back(x, y);
  return out;
}

// Number of cuboid problems of the given arity: (#strict pairs)^n * |L|^(2^n).
inline std::uint64_t cuboid_case_count(const DistributiveLattice& L, unsigned arity) {
  std::uint64_t count = 1;
  const auto pairs = strict_pairs(L).size();
  for (unsigned i = 0; i < arity; ++i) count *= pairs;
  for (std::size_t s = 0; s < subset_count(arity); ++s) count *= L.size();
  return count;
}

// Visits every cuboid problem (all bounds, all value tables) in a fixed order.
inline void for_each_cuboid(const DistributiveLattice& L, unsigned arity,
                            const std::function<void(const CuboidProblem&)>& visit) {
  const auto pairs = strict_pairs(L);
  const std::size_t vertices = subset_count(arity);
  std::vector<std::size_t> bound_idx(arity, 0);
  while (true) {
    std::vector<CoordinateBounds> bounds;
    for (unsigned i = 0; i < arity; ++i)
      bounds.push_back({pairs[bound_idx[i]].first, pairs[bound_idx[i]].second});
    std::vector<std::size_t> value_idx(vertices, 0);
    while (true) {
      std::vector<LatticeElement> values;
      for (std::size_t s = 0; s < vertices; ++s) values.push_back(L.element(value_idx[s]));
      visit(CuboidProblem(L, bounds, std::move(values)));
      std::size_t k = 0;
      while (k < vertices && ++value_idx[k] == L.size()) value_idx[k++] = 0;
      if (k == vertices) break;
    }
    unsigned i = 0;
    while (i < arity && ++bound_idx[i] == pairs.size()) bound_idx[i++] = 0;
    if (i == arity) break;
  }
}

// Exhaustive below `exhaustive_limit` cases, else `samples` seeded random draws.
inline std::uint64_t for_each_case(const DistributiveLattice& L, unsigned arity,
                                   std::uint64_t exhaustive_limit, std::uint64_t samples,
                                   std::uint64_t seed,
                                   const std::function<void(const CuboidProblem&)>& visit) {
  if (cuboid_case_count(L, arity) <= exhaustive_limit) {
    for_each_cuboid(L, arity, visit);
    return cuboid_case_count(L, arity);
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t k = 0; k < samples; ++k) visit(random_cuboid_problem(L, arity, rng));
  return samples;
}

// All points of carrier^arity, in odometer order.
template <class E>
std::vector<std::vector<E>> all_points(const std::vector<E>& carrier, unsigned arity) {
  std::vector<std::vector<E>> out;
  std::vector<std::size_t> idx(arity, 0);
  while (true) {
    std::vector<E> x;
    for (unsigned i = 0; i < arity; ++i) x.push_back(carrier[idx[i]]);
    out.push_back(std::move(x));
    unsigned i = 0;
    while (i < arity && ++idx[i] == carrier.size()) idx[i++] = 0;
    if (i == arity) break;
  }
  return out;
}

inline std::vector<LatticeElement> carrier(const DistributiveLattice& L) {
  return {L.elements().begin(), L.elements().end()};
}

inline std::vector<BoolElement> carrier(const BooleanAlgebra& B) {
  std::vector<BoolElement> out;
  for (std::size_t k = 0; k < B.size(); ++k) out.push_back(B.element(k));
  return out;
}

// The lattices of the solver/oracle equivalence family.
inline std::vector<std::pair<std::string, DistributiveLattice>> equivalence_family() {
  std::vector<std::pair<std::string, DistributiveLattice>> out;
  for (const char* term : {"chain(2)", "chain(3)", "chain(4)", "chain(5)", "boolean(2)",
                           "boolean(3)", "poset(x<y, x<z)"})
    out.emplace_back(term, lattice(term));
  return out;
}

}  // namespace testing
