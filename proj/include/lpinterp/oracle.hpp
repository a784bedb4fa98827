#pragma once

// Brute-force ground truth. Enumerates every polynomial function over a small
// lattice (or its Boolean extension) as a normalized coefficient table and
// filters by evaluation. Uses only order, Boolean and polynomial primitives;
// nothing here depends on the solver.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "lpinterp/boolean.hpp"
#include "lpinterp/polynomial.hpp"
#include "lpinterp/problem.hpp"

namespace lpinterp {

struct OracleConfig {
  std::uint64_t max_function_count = 1'000'000;
  std::uint64_t seed = 20100101;
};

// Every monotone coefficient table c : 2^[n] -> L exactly once, in
// lexicographic order of (c_{[n]}, ..., c_{∅}) with canonical element order,
// so c_∅ varies fastest. Throws CapExceeded past max_function_count.
std::vector<LatticePolynomial> all_polynomial_functions(const DistributiveLattice& lattice,
                                                        unsigned arity,
                                                        const OracleConfig& config = {});

// Same over the Boolean extension, elements ordered by bitmask value.
std::vector<BoolPolynomial> all_boolean_polynomial_functions(const BooleanAlgebra& algebra,
                                                             unsigned arity,
                                                             const OracleConfig& config = {});

std::vector<LatticePolynomial> brute_interpolate(const PartialFunction& f,
                                                 const OracleConfig& config = {});
// Filters a precomputed catalog (from all_polynomial_functions).
std::vector<LatticePolynomial> brute_interpolate(const PartialFunction& f,
                                                 std::span<const LatticePolynomial> catalog);

std::vector<BoolPolynomial> brute_b_interpolate(const CuboidProblem& problem,
                                                const OracleConfig& config = {});
std::vector<BoolPolynomial> brute_b_interpolate(const CuboidProblem& problem,
                                                std::span<const BoolPolynomial> catalog);

// Seeded generators for sampled suites.
CuboidProblem random_cuboid_problem(const DistributiveLattice& lattice, unsigned arity,
                                    std::mt19937_64& rng);
PartialFunction random_partial_function(const DistributiveLattice& lattice, unsigned arity,
                                        std::size_t max_points, std::mt19937_64& rng);
LatticePolynomial random_polynomial(const DistributiveLattice& lattice, unsigned arity,
                                    std::mt19937_64& rng);

}  // namespace lpinterp
