#pragma once

// Line-oriented text formats.
//
// Lattice description: one construction term followed by optional label lines
//
//   chain(4) | boolean(2) | boolean(a, b) | poset(x<y, x<z) | product(T, T, ...)
//   label <element> <new-name>
//
// Problem file: sections introduced by a keyword on its own line, '#' starts
// a comment.
//
//   LATTICE            (or: LATTICE FILE <path>)
//   ARITY <n>
//   BOUNDS             one line "a_i b_i" per coordinate
//   VALUES             "[i,j,...] -> v", one line per subset, 1-based indices
//   POINTS             "(x_1,...,x_n) -> v"
//   POLY               "[i,j,...] -> c", omitted subsets default to 0
//
// Utility boundary file: LATTICE, then CRITERIA (one line "worst best" per
// criterion, the scores of its bottom and top grade) and UTILITY (the
// utility at each boundary profile, keyed like VALUES).

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpinterp/order.hpp"
#include "lpinterp/polynomial.hpp"
#include "lpinterp/problem.hpp"

namespace lpinterp {

struct LatticeDescription {
  LatticeSpec spec;
  std::vector<std::pair<std::string, std::string>> labels;  // (element ref, new name)
};

LatticeSpec parse_lattice_term(std::string_view text);
std::string render_lattice_term(const LatticeSpec& spec);

LatticeDescription parse_lattice_description(std::string_view text);
std::string render_lattice_description(const LatticeDescription& description);
DistributiveLattice build_lattice(const LatticeDescription& description, LatticeLimits limits = {});

struct ProblemFile {
  LatticeDescription lattice_description;
  DistributiveLattice lattice;
  unsigned arity = 0;
  std::optional<std::vector<CoordinateBounds>> bounds;
  std::optional<std::vector<LatticeElement>> values;  // indexed by subset
  std::optional<std::vector<std::pair<Point, LatticeElement>>> points;
  std::optional<std::vector<LatticeElement>> polynomial;  // raw table, indexed by subset

  bool has_cuboid() const { return bounds && values; }
  CuboidProblem cuboid() const;        // throws InputError without BOUNDS and VALUES
  PartialFunction partial() const;     // POINTS when present, otherwise the cuboid
  LatticePolynomial poly() const;      // throws InputError without POLY
};

// `lattice_override`, when given, replaces (or supplies) the LATTICE section.
// `base_dir` resolves "LATTICE FILE" paths.
ProblemFile parse_problem(std::string_view text, const std::filesystem::path& base_dir = {},
                          std::optional<std::string_view> lattice_override = std::nullopt,
                          LatticeLimits limits = {});
std::string render_problem(const ProblemFile& problem);

struct UtilityBoundaryFile {
  LatticeDescription lattice_description;
  DistributiveLattice lattice;
  std::vector<std::pair<LatticeElement, LatticeElement>> criteria;  // (worst score, best score)
  std::vector<LatticeElement> utility;                              // indexed by subset
};

UtilityBoundaryFile parse_utility(std::string_view text, const std::filesystem::path& base_dir = {},
                                  std::optional<std::string_view> lattice_override = std::nullopt,
                                  LatticeLimits limits = {});
// Cuboid problem with bounds (worst, best) per criterion and values the
// utility at the profile that is best exactly on I. Throws InputError when
// some worst < best fails.
ProblemFile problem_from_utility(const UtilityBoundaryFile& file);

std::string render_point(const DistributiveLattice& lattice, std::span<const LatticeElement> x);
// "[] -> c; [1] -> c; ..." on one line.
std::string render_dnf_inline(const DistributiveLattice& lattice, const LatticePolynomial& p);
// One "[I] -> c" line per subset in binary-counter order.
std::string render_dnf(const DistributiveLattice& lattice, const LatticePolynomial& p);

}  // namespace lpinterp
