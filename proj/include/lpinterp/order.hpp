#pragma once

// Finite posets and finite distributive lattices in Birkhoff form: every
// lattice element is a downset of the poset of join-irreducibles, stored as a
// bitmask over irreducible indices. Meet and join are intersection and union.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lpinterp/errors.hpp"

namespace lpinterp {

using Bits = std::uint32_t;

// Hard ceiling imposed by the 32-bit element representation.
inline constexpr unsigned kIrreducibleCeiling = 30;

struct LatticeElement {
  Bits downset = 0;
  friend auto operator<=>(const LatticeElement&, const LatticeElement&) = default;
};

struct LatticeLimits {
  unsigned max_irreducibles = 20;
  std::size_t max_elements = std::size_t{1} << 20;
};

class Poset {
public:
  Poset() = default;

  // Builds the order from cover pairs (lower, upper) by transitive closure.
  // Throws InputError naming the cycle if the cover pairs are cyclic.
  static Poset from_covers(std::vector<std::string> names,
                           std::span<const std::pair<unsigned, unsigned>> covers);

  std::size_t size() const noexcept { return names_.size(); }
  bool leq(unsigned i, unsigned j) const { return (down_.at(j) >> i) & 1u; }
  // Mask of all elements below (resp. above) i, including i.
  Bits down(unsigned i) const { return down_.at(i); }
  Bits up(unsigned i) const { return up_.at(i); }
  const std::string& name(unsigned i) const { return names_.at(i); }
  std::optional<unsigned> find(std::string_view name) const;
  bool is_chain() const;

private:
  std::vector<std::string> names_;
  std::vector<Bits> down_;
  std::vector<Bits> up_;
};

class DistributiveLattice {
public:
  // The lattice of downsets of `irreducibles`. Default element labels: "0"
  // for bottom, the irreducible's name for its principal downset, "1" for a
  // top that is not join-irreducible, and "{i,j,...}" otherwise.
  explicit DistributiveLattice(Poset irreducibles, LatticeLimits limits = {});

  // Copy of this lattice with some element labels replaced. Labels must stay
  // unique and must not contain separator characters.
  DistributiveLattice relabeled(
      std::span<const std::pair<LatticeElement, std::string>> labels) const;

  const Poset& irreducibles() const noexcept { return data_->poset; }
  unsigned irreducible_count() const noexcept {
    return static_cast<unsigned>(data_->poset.size());
  }
  Bits universe() const noexcept { return data_->universe; }
  std::size_t size() const noexcept { return data_->elements.size(); }

  LatticeElement bottom() const noexcept { return {0}; }
  LatticeElement top() const noexcept { return {data_->universe}; }

  // All elements in canonical order (ascending bitmask value, which is a
  // linear extension of the lattice order).
  std::span<const LatticeElement> elements() const noexcept { return data_->elements; }
  LatticeElement element(std::size_t index) const { return data_->elements.at(index); }
  std::size_t index_of(LatticeElement x) const;
  bool contains(LatticeElement x) const noexcept;
  bool is_downset(Bits bits) const noexcept;

  LatticeElement meet(LatticeElement x, LatticeElement y) const;
  LatticeElement join(LatticeElement x, LatticeElement y) const;
  bool leq(LatticeElement x, LatticeElement y) const;
  bool less(LatticeElement x, LatticeElement y) const { return x != y && leq(x, y); }

  LatticeElement principal(unsigned irreducible) const;
  // Smallest downset containing `bits`.
  LatticeElement down_closure(Bits bits) const noexcept;
  // Largest downset contained in `bits`.
  LatticeElement largest_downset_within(Bits bits) const noexcept;

  // Elements x with lo <= x <= hi, in canonical order.
  std::vector<LatticeElement> interval(LatticeElement lo, LatticeElement hi) const;
  std::uint64_t interval_size(LatticeElement lo, LatticeElement hi) const;

  bool is_chain() const { return data_->poset.is_chain(); }

  const std::string& label(LatticeElement x) const;
  // Resolves a label, or the set notation "{i,j}" over irreducible names
  // (meaning the join of the named irreducibles).
  std::optional<LatticeElement> find(std::string_view text) const;
  LatticeElement resolve(std::string_view text) const;  // throws InputError

  // Throws UsageError unless x belongs to this lattice.
  void require(LatticeElement x) const;

  friend bool operator==(const DistributiveLattice& a, const DistributiveLattice& b);

private:
  struct Data {
    Poset poset;
    Bits universe = 0;
    std::vector<LatticeElement> elements;
    std::vector<std::int32_t> index;  // bitmask -> canonical index, -1 if not a downset
    std::vector<std::string> labels;  // by canonical index
  };
  explicit DistributiveLattice(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static void check_labels(const std::vector<std::string>& labels);

  std::shared_ptr<const Data> data_;
};

struct LatticeSpec;

struct ChainSpec {
  unsigned length = 0;
};
struct BooleanSpec {
  unsigned atoms = 0;
  std::vector<std::string> names;  // optional; defaults a, b, c, ...
};
struct DownsetsSpec {
  std::vector<std::string> names;
  std::vector<std::pair<unsigned, unsigned>> covers;
};
struct ProductSpec {
  std::vector<LatticeSpec> factors;
};

// Description of a lattice construction; parsed from the text format.
struct LatticeSpec {
  using Chain = ChainSpec;
  using Boolean = BooleanSpec;
  using Downsets = DownsetsSpec;
  using Product = ProductSpec;
  std::variant<Chain, Boolean, Downsets, Product> node;
};

DistributiveLattice chain(unsigned length, LatticeLimits limits = {});
DistributiveLattice boolean_lattice(unsigned atoms, LatticeLimits limits = {});
DistributiveLattice downsets_of(Poset poset, LatticeLimits limits = {});
DistributiveLattice product(std::span<const DistributiveLattice> factors,
                            LatticeLimits limits = {});
DistributiveLattice build_lattice(const LatticeSpec& spec, LatticeLimits limits = {});

// Poset underlying a construction, before the lattice is materialized.
Poset irreducible_poset(const LatticeSpec& spec);

}  // namespace lpinterp
