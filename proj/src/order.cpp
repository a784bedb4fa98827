#include "lpinterp/order.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace lpinterp {

namespace {

constexpr std::string_view kReservedChars = " \t,()[]{}<>#=;:\"";

bool valid_name(std::string_view name) {
  return !name.empty() && name.find_first_of(kReservedChars) == std::string_view::npos;
}

template <class F>
void for_each_bit(Bits bits, F&& f) {
  while (bits) {
    unsigned i = static_cast<unsigned>(std::countr_zero(bits));
    f(i);
    bits &= bits - 1;
  }
}

}  // namespace

// ---------------------------------------------------------------- Poset

Poset Poset::from_covers(std::vector<std::string> names,
                         std::span<const std::pair<unsigned, unsigned>> covers) {
  const std::size_t n = names.size();
  if (n > kIrreducibleCeiling)
    throw InputError("poset has " + std::to_string(n) + " elements; at most " +
                     std::to_string(kIrreducibleCeiling) + " supported");
  for (const auto& name : names)
    if (!valid_name(name)) throw InputError("invalid poset element name '" + name + "'");
  {
    std::set<std::string> seen;
    for (const auto& name : names)
      if (!seen.insert(name).second) throw InputError("duplicate poset element '" + name + "'");
  }

  std::vector<std::vector<unsigned>> succ(n);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw InputError("cover pair refers to unknown element");
    succ[lo].push_back(hi);
  }

  // Cycle search over the cover graph.
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<unsigned> stack;
  auto dfs = [&](auto& self, unsigned v) -> void {
    state[v] = 1;
    stack.push_back(v);
    for (unsigned w : succ[v]) {
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        std::string cycle;
        for (; it != stack.end(); ++it) cycle += names[*it] + " < ";
        cycle += names[w];
        throw InputError("cyclic cover pairs: " + cycle);
      }
      if (state[w] == 0) self(self, w);
    }
    stack.pop_back();
    state[v] = 2;
  };
  for (unsigned v = 0; v < n; ++v)
    if (state[v] == 0) dfs(dfs, v);

  Poset p;
  p.names_ = std::move(names);
  p.down_.assign(n, 0);
  for (unsigned v = 0; v < n; ++v) p.down_[v] = Bits{1} << v;
  // Warshall closure on the "below" relation.
  for (auto [lo, hi] : covers) p.down_[hi] |= Bits{1} << lo;
  for (unsigned k = 0; k < n; ++k)
    for (unsigned v = 0; v < n; ++v)
      if ((p.down_[v] >> k) & 1u) p.down_[v] |= p.down_[k];
  p.up_.assign(n, 0);
  for (unsigned v = 0; v < n; ++v)
    for_each_bit(p.down_[v], [&](unsigned u) { p.up_[u] |= Bits{1} << v; });
  return p;
}

std::optional<unsigned> Poset::find(std::string_view name) const {
  for (unsigned i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool Poset::is_chain() const {
  for (unsigned i = 0; i < size(); ++i)
    for (unsigned j = i + 1; j < size(); ++j)
      if (!leq(i, j) && !leq(j, i)) return false;
  return true;
}

// ---------------------------------------------------- DistributiveLattice

DistributiveLattice::DistributiveLattice(Poset irreducibles, LatticeLimits limits) {
  const unsigned m = static_cast<unsigned>(irreducibles.size());
  const unsigned cap = std::min(limits.max_irreducibles, kIrreducibleCeiling);
  if (m > cap)
    throw CapExceeded("lattice has " + std::to_string(m) + " join-irreducibles; limit is " +
                          std::to_string(cap),
                      m);

  auto data = std::make_shared<Data>();
  data->poset = std::move(irreducibles);
  data->universe = m == 0 ? 0 : static_cast<Bits>((std::uint64_t{1} << m) - 1);
  const std::uint64_t masks = std::uint64_t{1} << m;
  data->index.assign(masks, -1);
  for (std::uint64_t raw = 0; raw < masks; ++raw) {
    const Bits bits = static_cast<Bits>(raw);
    bool closed = true;
    for_each_bit(bits, [&](unsigned j) {
      if ((data->poset.down(j) & ~bits) != 0) closed = false;
    });
    if (!closed) continue;
    if (data->elements.size() >= limits.max_elements)
      throw CapExceeded("lattice has more than " + std::to_string(limits.max_elements) +
                            " elements",
                        data->elements.size() + 1);
    data->index[bits] = static_cast<std::int32_t>(data->elements.size());
    data->elements.push_back({bits});
  }

  data->labels.reserve(data->elements.size());
  for (LatticeElement x : data->elements) {
    if (x.downset == 0) {
      data->labels.emplace_back("0");
      continue;
    }
    // Join-irreducible iff it is a principal downset.
    std::optional<unsigned> generator;
    for (unsigned j = 0; j < m; ++j)
      if (data->poset.down(j) == x.downset) generator = j;
    if (generator) {
      data->labels.push_back(data->poset.name(*generator));
    } else if (x.downset == data->universe) {
      data->labels.emplace_back("1");
    } else {
      std::string s = "{";
      bool first = true;
      for_each_bit(x.downset, [&](unsigned j) {
        if (!first) s += ",";
        s += data->poset.name(j);
        first = false;
      });
      data->labels.push_back(s + "}");
    }
  }
  check_labels(data->labels);
  data_ = std::move(data);
}

void DistributiveLattice::check_labels(const std::vector<std::string>& labels) {
  std::set<std::string_view> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw InputError("duplicate element label '" + l +
                       "'; rename irreducibles or add label lines");
}

DistributiveLattice DistributiveLattice::relabeled(
    std::span<const std::pair<LatticeElement, std::string>> labels) const {
  auto data = std::make_shared<Data>(*data_);
  for (const auto& [x, name] : labels) {
    require(x);
    if (!valid_name(name) || name.front() == '{')
      throw InputError("invalid element label '" + name + "'");
    data->labels[index_of(x)] = name;
  }
  check_labels(data->labels);
  return DistributiveLattice(std::move(data));
}

std::size_t DistributiveLattice::index_of(LatticeElement x) const {
  require(x);
  return static_cast<std::size_t>(data_->index[x.downset]);
}

bool DistributiveLattice::contains(LatticeElement x) const noexcept {
  return (x.downset & ~data_->universe) == 0 && data_->index[x.downset] >= 0;
}

bool DistributiveLattice::is_downset(Bits bits) const noexcept {
  return (bits & ~data_->universe) == 0 && data_->index[bits] >= 0;
}

void DistributiveLattice::require(LatticeElement x) const {
  if (!contains(x))
    throw UsageError("bitmask " + std::to_string(x.downset) + " is not an element of this lattice");
}

LatticeElement DistributiveLattice::meet(LatticeElement x, LatticeElement y) const {
  require(x);
  require(y);
  return {x.downset & y.downset};
}

LatticeElement DistributiveLattice::join(LatticeElement x, LatticeElement y) const {
  require(x);
  require(y);
  return {x.downset | y.downset};
}

bool DistributiveLattice::leq(LatticeElement x, LatticeElement y) const {
  require(x);
  require(y);
  return (x.downset & ~y.downset) == 0;
}

LatticeElement DistributiveLattice::principal(unsigned irreducible) const {
  if (irreducible >= irreducible_count()) throw UsageError("irreducible index out of range");
  return {data_->poset.down(irreducible)};
}

LatticeElement DistributiveLattice::down_closure(Bits bits) const noexcept {
  Bits out = 0;
  for_each_bit(bits & data_->universe, [&](unsigned j) { out |= data_->poset.down(j); });
  return {out};
}

LatticeElement DistributiveLattice::largest_downset_within(Bits bits) const noexcept {
  // j survives iff everything below j is inside `bits`.
  Bits out = 0;
  for_each_bit(bits & data_->universe, [&](unsigned j) {
    if ((data_->poset.down(j) & ~bits) == 0) out |= Bits{1} << j;
  });
  return {out};
}

std::vector<LatticeElement> DistributiveLattice::interval(LatticeElement lo,
                                                          LatticeElement hi) const {
  require(lo);
  require(hi);
  std::vector<LatticeElement> out;
  if ((lo.downset & ~hi.downset) != 0) return out;
  const Bits free = hi.downset & ~lo.downset;
  // Enumerate subsets of `free` in ascending order.
  Bits sub = 0;
  while (true) {
    if (is_downset(lo.downset | sub)) out.push_back({lo.downset | sub});
    if (sub == free) break;
    sub = (sub - free) & free;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t DistributiveLattice::interval_size(LatticeElement lo, LatticeElement hi) const {
  return interval(lo, hi).size();
}

const std::string& DistributiveLattice::label(LatticeElement x) const {
  return data_->labels[index_of(x)];
}

std::optional<LatticeElement> DistributiveLattice::find(std::string_view text) const {
  for (std::size_t i = 0; i < data_->labels.size(); ++i)
    if (data_->labels[i] == text) return data_->elements[i];
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
    std::string_view body = text.substr(1, text.size() - 2);
    Bits bits = 0;
    while (!body.empty()) {
      auto comma = body.find(',');
      std::string_view tok = body.substr(0, comma);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      auto j = data_->poset.find(tok);
      if (!j) return std::nullopt;
      bits |= Bits{1} << *j;
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return down_closure(bits);
  }
  return std::nullopt;
}

LatticeElement DistributiveLattice::resolve(std::string_view text) const {
  if (auto x = find(text)) return *x;
  throw InputError("unknown lattice element '" + std::string(text) + "'");
}

bool operator==(const DistributiveLattice& a, const DistributiveLattice& b) {
  if (a.data_ == b.data_) return true;
  if (a.irreducible_count() != b.irreducible_count()) return false;
  for (unsigned j = 0; j < a.irreducible_count(); ++j)
    if (a.irreducibles().down(j) != b.irreducibles().down(j)) return false;
  return a.data_->labels == b.data_->labels;
}

// ----------------------------------------------------------- builders

namespace {

std::string atom_name(unsigned i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i + 1);
}

// Irreducibles of a product lattice: the disjoint union of the factors'
// irreducible posets, names prefixed with the 1-based factor number.
Poset disjoint_union(std::span<const Poset> factors) {
  if (factors.empty()) throw InputError("product needs at least one factor");
  std::vector<std::string> names;
  std::vector<std::pair<unsigned, unsigned>> covers;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Poset& f = factors[k];
    const unsigned offset = static_cast<unsigned>(names.size());
    if (offset + f.size() > kIrreducibleCeiling)
      throw CapExceeded("product has too many join-irreducibles", offset + f.size());
    for (unsigned i = 0; i < f.size(); ++i) {
      names.push_back(std::to_string(k + 1) + "." + f.name(i));
      for (unsigned j = 0; j < f.size(); ++j)
        if (i != j && f.leq(i, j)) covers.emplace_back(offset + i, offset + j);
    }
  }
  return Poset::from_covers(std::move(names), covers);
}

}  // namespace

Poset irreducible_poset(const LatticeSpec& spec) {
  struct Visitor {
    Poset operator()(const LatticeSpec::Chain& c) const {
      if (c.length == 0) throw InputError("chain length must be at least 1");
      if (c.length - 1 > kIrreducibleCeiling)
        throw CapExceeded("chain(" + std::to_string(c.length) + ") is too long", c.length);
      std::vector<std::string> names;
      std::vector<std::pair<unsigned, unsigned>> covers;
      for (unsigned i = 0; i + 1 < c.length; ++i) {
        names.push_back(std::to_string(i + 1));
        if (i > 0) covers.emplace_back(i - 1, i);
      }
      return Poset::from_covers(std::move(names), covers);
    }
    Poset operator()(const LatticeSpec::Boolean& b) const {
      if (b.atoms > kIrreducibleCeiling)
        throw CapExceeded("boolean(" + std::to_string(b.atoms) + ") is too large", b.atoms);
      std::vector<std::string> names = b.names;
      if (names.empty())
        for (unsigned i = 0; i < b.atoms; ++i) names.push_back(atom_name(i));
      if (names.size() != b.atoms) throw InputError("boolean: atom name count mismatch");
      return Poset::from_covers(std::move(names), {});
    }
    Poset operator()(const LatticeSpec::Downsets& d) const {
      return Poset::from_covers(d.names, d.covers);
    }
    Poset operator()(const LatticeSpec::Product& p) const {
      std::vector<Poset> factors;
      for (const auto& f : p.factors) factors.push_back(irreducible_poset(f));
      return disjoint_union(factors);
    }
  };
  return std::visit(Visitor{}, spec.node);
}

DistributiveLattice build_lattice(const LatticeSpec& spec, LatticeLimits limits) {
  return DistributiveLattice(irreducible_poset(spec), limits);
}

DistributiveLattice chain(unsigned length, LatticeLimits limits) {
  return build_lattice({LatticeSpec::Chain{length}}, limits);
}

DistributiveLattice boolean_lattice(unsigned atoms, LatticeLimits limits) {
  return build_lattice({LatticeSpec::Boolean{atoms, {}}}, limits);
}

DistributiveLattice downsets_of(Poset poset, LatticeLimits limits) {
  return DistributiveLattice(std::move(poset), limits);
}

DistributiveLattice product(std::span<const DistributiveLattice> factors, LatticeLimits limits) {
  std::vector<Poset> posets;
  for (const auto& f : factors) posets.push_back(f.irreducibles());
  return DistributiveLattice(disjoint_union(posets), limits);
}

}  // namespace lpinterp
