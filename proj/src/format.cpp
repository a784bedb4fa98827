#include "lpinterp/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace lpinterp {

namespace {

constexpr std::string_view kNameStops = " \t\r\n,()[]{}<>#=;:\"";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<unsigned> parse_unsigned(std::string_view s) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    s = trim(s);
    if (s.empty()) break;
    std::size_t end = 0;
    while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
    out.push_back(s.substr(0, end));
    s.remove_prefix(end);
  }
  return out;
}

InputError line_error(std::size_t line, const std::string& message) {
  return InputError("line " + std::to_string(line) + ": " + message);
}

// ------------------------------------------------------- lattice terms

class TermParser {
public:
  explicit TermParser(std::string_view text) : text_(text) {}

  LatticeSpec parse() {
    LatticeSpec spec = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return spec;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("lattice term: " + what + " at column " + std::to_string(pos_ + 1) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string name() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && kNameStops.find(text_[pos_]) == std::string_view::npos) ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  LatticeSpec term() {
    const std::string head = name();
    expect('(');
    LatticeSpec spec;
    if (head == "chain") {
      auto k = parse_unsigned(name());
      if (!k) fail("chain expects a length");
      spec.node = LatticeSpec::Chain{*k};
      expect(')');
    } else if (head == "boolean") {
      std::vector<std::string> args;
      if (!accept(')')) {
        do args.push_back(name());
        while (accept(','));
        expect(')');
      }
      LatticeSpec::Boolean b;
      if (args.size() == 1 && parse_unsigned(args[0])) {
        b.atoms = *parse_unsigned(args[0]);
      } else {
        b.atoms = static_cast<unsigned>(args.size());
        b.names = std::move(args);
      }
      spec.node = std::move(b);
    } else if (head == "poset") {
      LatticeSpec::Downsets d;
      auto index = [&](const std::string& n) {
        auto it = std::find(d.names.begin(), d.names.end(), n);
        if (it != d.names.end()) return static_cast<unsigned>(it - d.names.begin());
        d.names.push_back(n);
        return static_cast<unsigned>(d.names.size() - 1);
      };
      if (!accept(')')) {
        do {
          unsigned prev = index(name());
          while (accept('<')) {
            unsigned next = index(name());
            d.covers.emplace_back(prev, next);
            prev = next;
          }
        } while (accept(','));
        expect(')');
      }
      spec.node = std::move(d);
    } else if (head == "product") {
      LatticeSpec::Product p;
      do p.factors.push_back(term());
      while (accept(','));
      expect(')');
      spec.node = std::move(p);
    } else {
      fail("unknown constructor '" + head + "'");
    }
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_poset_compact(const LatticeSpec::Downsets& d) {
  std::vector<bool> used(d.names.size(), false);
  std::vector<std::string> items;
  for (auto [lo, hi] : d.covers) {
    items.push_back(d.names[lo] + "<" + d.names[hi]);
    used[lo] = used[hi] = true;
  }
  for (std::size_t i = 0; i < d.names.size(); ++i)
    if (!used[i]) items.push_back(d.names[i]);
  std::string s = "poset(";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + ")";
}

std::string render_poset(const LatticeSpec::Downsets& d) {
  std::string compact = render_poset_compact(d);
  const auto reparsed = std::get<LatticeSpec::Downsets>(parse_lattice_term(compact).node);
  if (reparsed.names == d.names) return compact;
  // Name order matters for the element labels; list every name up front.
  std::string s = "poset(";
  for (std::size_t i = 0; i < d.names.size(); ++i) s += (i ? ", " : "") + d.names[i];
  for (auto [lo, hi] : d.covers) s += ", " + d.names[lo] + "<" + d.names[hi];
  return s + ")";
}

// ----------------------------------------------------------- sections

struct Line {
  std::size_t number;
  std::string_view text;
};

struct Section {
  std::size_t header_line = 0;
  std::vector<std::string_view> args;
  std::vector<Line> lines;
};

using Sections = std::map<std::string, Section>;

Sections split_sections(std::string_view text, std::initializer_list<std::string_view> keywords) {
  Sections sections;
  Section* current = nullptr;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    const auto words = split_ws(line);
    if (std::find(keywords.begin(), keywords.end(), words[0]) != keywords.end()) {
      const std::string key(words[0]);
      if (sections.count(key)) throw line_error(number, "duplicate section " + key);
      Section& sec = sections[key];
      sec.header_line = number;
      sec.args.assign(words.begin() + 1, words.end());
      current = &sec;
      continue;
    }
    if (!current) throw line_error(number, "text before the first section: '" + std::string(line) + "'");
    current->lines.push_back({number, line});
  }
  return sections;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LatticeDescription description_from_lines(const std::vector<Line>& lines) {
  LatticeDescription out;
  bool have_term = false;
  for (const auto& [number, raw] : lines) {
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!have_term) {
      try {
        out.spec = parse_lattice_term(line);
      } catch (const InputError& e) {
        throw line_error(number, e.what());
      }
      have_term = true;
      continue;
    }
    const auto words = split_ws(line);
    if (words.size() != 3 || words[0] != "label")
      throw line_error(number, "expected 'label <element> <name>'");
    out.labels.emplace_back(std::string(words[1]), std::string(words[2]));
  }
  if (!have_term) throw InputError("empty lattice description");
  return out;
}

// Materializes the lattice; errors such as unknown label references point at
// the LATTICE header since the description keeps no per-label line numbers.
DistributiveLattice section_lattice(const Sections& sections, const LatticeDescription& description,
                                    bool overridden, LatticeLimits limits) {
  const auto it = sections.find("LATTICE");
  if (overridden || it == sections.end()) return build_lattice(description, limits);
  try {
    return build_lattice(description, limits);
  } catch (const InputError& e) {
    throw line_error(it->second.header_line, std::string("lattice: ") + e.what());
  }
}

LatticeDescription lattice_section(const Sections& sections, const std::filesystem::path& base_dir,
                                   std::optional<std::string_view> lattice_override) {
  if (lattice_override) return parse_lattice_description(*lattice_override);
  auto it = sections.find("LATTICE");
  if (it == sections.end()) throw InputError("missing LATTICE section");
  const Section& s = it->second;
  if (!s.args.empty()) {
    if (s.args.size() != 2 || s.args[0] != "FILE")
      throw line_error(s.header_line, "expected 'LATTICE' or 'LATTICE FILE <path>'");
    if (!s.lines.empty())
      throw line_error(s.lines.front().number, "LATTICE FILE section takes no body");
    return parse_lattice_description(read_file(base_dir / std::filesystem::path(std::string(s.args[1]))));
  }
  if (s.lines.empty()) throw line_error(s.header_line, "empty lattice description");
  return description_from_lines(s.lines);
}

LatticeElement resolve_at(const DistributiveLattice& lattice, std::string_view token, std::size_t line) {
  if (auto x = lattice.find(token)) return *x;
  throw line_error(line, "unknown lattice element '" + std::string(token) + "'");
}

std::pair<std::string_view, std::string_view> split_arrow(const Line& line) {
  const auto arrow = line.text.find("->");
  if (arrow == std::string_view::npos) throw line_error(line.number, "expected '<key> -> <value>'");
  auto key = trim(line.text.substr(0, arrow));
  auto value = trim(line.text.substr(arrow + 2));
  if (value.empty() || split_ws(value).size() != 1)
    throw line_error(line.number, "expected a single element after '->'");
  return {key, value};
}

Subset parse_subset_key(std::string_view key, std::size_t line) {
  if (key.size() < 2 || key.front() != '[' || key.back() != ']')
    throw line_error(line, "subset key must look like [1,3], got '" + std::string(key) + "'");
  std::string_view body = trim(key.substr(1, key.size() - 2));
  Subset s = 0;
  unsigned last = 0;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto tok = trim(body.substr(0, comma));
    auto idx = parse_unsigned(tok);
    if (!idx || *idx == 0 || *idx > kMaxArity)
      throw line_error(line, "bad subset index '" + std::string(tok) + "'");
    if (*idx <= last) throw line_error(line, "subset indices must be strictly increasing");
    last = *idx;
    s |= Subset{1} << (*idx - 1);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return s;
}

unsigned highest_index(Subset s) {
  unsigned h = 0;
  for (unsigned i = 0; i < 32; ++i)
    if ((s >> i) & 1u) h = i + 1;
  return h;
}

std::vector<std::pair<Subset, Line>> subset_entries(const Section& section) {
  std::vector<std::pair<Subset, Line>> out;
  for (const auto& line : section.lines) {
    auto [key, value] = split_arrow(line);
    out.emplace_back(parse_subset_key(key, line.number), Line{line.number, value});
  }
  return out;
}

std::vector<LatticeElement> subset_table(const DistributiveLattice& lattice, const Section& section,
                                         unsigned arity, bool complete, const char* what) {
  const std::size_t count = subset_count(arity);
  std::vector<std::optional<LatticeElement>> table(count);
  for (const auto& [s, value] : subset_entries(section)) {
    if (highest_index(s) > arity)
      throw line_error(value.number, std::string(what) + " key uses a coordinate beyond arity " +
                                         std::to_string(arity));
    if (table[s]) throw line_error(value.number, std::string("duplicate ") + what + " key");
    table[s] = resolve_at(lattice, value.text, value.number);
  }
  std::vector<LatticeElement> out(count, lattice.bottom());
  for (Subset s = 0; s < count; ++s) {
    if (table[s])
      out[s] = *table[s];
    else if (complete)
      throw line_error(section.header_line, std::string(what) + " has no entry for " +
                                                subset_label(s, arity) + " (need all " +
                                                std::to_string(count) + ")");
  }
  return out;
}

Point parse_point(const DistributiveLattice& lattice, std::string_view text, std::size_t line) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw line_error(line, "point must look like (x,y), got '" + std::string(text) + "'");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  Point x;
  // Set-notation elements contain commas; split on commas outside braces.
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '{') ++depth;
    if (i < body.size() && body[i] == '}' && depth) --depth;
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      const auto tok = trim(body.substr(start, i - start));
      if (tok.empty()) {
        if (i == body.size() && x.empty()) break;
        throw line_error(line, "empty point coordinate");
      }
      x.push_back(resolve_at(lattice, tok, line));
      start = i + 1;
    }
  }
  return x;
}

std::vector<std::pair<LatticeElement, LatticeElement>> pair_lines(const DistributiveLattice& lattice,
                                                                  const Section& section) {
  std::vector<std::pair<LatticeElement, LatticeElement>> out;
  for (const auto& line : section.lines) {
    const auto words = split_ws(line.text);
    if (words.size() != 2) throw line_error(line.number, "expected two elements '<low> <high>'");
    out.emplace_back(resolve_at(lattice, words[0], line.number),
                     resolve_at(lattice, words[1], line.number));
  }
  return out;
}

void render_table(std::ostringstream& out, const DistributiveLattice& lattice,
                  std::span<const LatticeElement> table, unsigned arity) {
  for (Subset s = 0; s < table.size(); ++s)
    out << subset_label(s, arity) << " -> " << lattice.label(table[s]) << "\n";
}

}  // namespace

// ------------------------------------------------------------ public API

LatticeSpec parse_lattice_term(std::string_view text) { return TermParser(text).parse(); }

std::string render_lattice_term(const LatticeSpec& spec) {
  struct Visitor {
    std::string operator()(const LatticeSpec::Chain& c) const {
      return "chain(" + std::to_string(c.length) + ")";
    }
    std::string operator()(const LatticeSpec::Boolean& b) const {
      if (b.names.empty()) return "boolean(" + std::to_string(b.atoms) + ")";
      std::string s = "boolean(";
      for (std::size_t i = 0; i < b.names.size(); ++i) s += (i ? ", " : "") + b.names[i];
      return s + ")";
    }
    std::string operator()(const LatticeSpec::Downsets& d) const { return render_poset(d); }
    std::string operator()(const LatticeSpec::Product& p) const {
      std::string s = "product(";
      for (std::size_t i = 0; i < p.factors.size(); ++i)
        s += (i ? ", " : "") + render_lattice_term(p.factors[i]);
      return s + ")";
    }
  };
  return std::visit(Visitor{}, spec.node);
}

LatticeDescription parse_lattice_description(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    lines.push_back({++number, text.substr(0, end)});
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
  }
  return description_from_lines(lines);
}

std::string render_lattice_description(const LatticeDescription& description) {
  std::string s = render_lattice_term(description.spec) + "\n";
  for (const auto& [ref, name] : description.labels) s += "label " + ref + " " + name + "\n";
  return s;
}

DistributiveLattice build_lattice(const LatticeDescription& description, LatticeLimits limits) {
  DistributiveLattice base = build_lattice(description.spec, limits);
  if (description.labels.empty()) return base;
  std::vector<std::pair<LatticeElement, std::string>> labels;
  for (const auto& [ref, name] : description.labels) labels.emplace_back(base.resolve(ref), name);
  return base.relabeled(labels);
}

CuboidProblem ProblemFile::cuboid() const {
  if (!bounds) throw InputError("this command needs a BOUNDS section");
  if (!values) throw InputError("this command needs a VALUES section");
  return CuboidProblem(lattice, *bounds, *values);
}

PartialFunction ProblemFile::partial() const {
  if (points) {
    std::vector<Point> xs;
    std::vector<LatticeElement> vs;
    for (const auto& [x, v] : *points) {
      xs.push_back(x);
      vs.push_back(v);
    }
    return PartialFunction(lattice, arity, std::move(xs), std::move(vs));
  }
  return PartialFunction::from_cuboid(cuboid());
}

LatticePolynomial ProblemFile::poly() const {
  if (!polynomial) throw InputError("this command needs a POLY section");
  return LatticePolynomial(arity, *polynomial);
}

ProblemFile parse_problem(std::string_view text, const std::filesystem::path& base_dir,
                          std::optional<std::string_view> lattice_override, LatticeLimits limits) {
  const Sections sections =
      split_sections(text, {"LATTICE", "ARITY", "BOUNDS", "VALUES", "POINTS", "POLY"});
  ProblemFile out{lattice_section(sections, base_dir, lattice_override), chain(1), 0, {}, {}, {}, {}};
  out.lattice = section_lattice(sections, out.lattice_description, lattice_override.has_value(), limits);
  const DistributiveLattice& lattice = out.lattice;

  // Arity: explicit, else from BOUNDS, POINTS, or the largest subset index.
  std::optional<unsigned> arity;
  if (auto it = sections.find("ARITY"); it != sections.end()) {
    const Section& s = it->second;
    if (s.args.size() != 1 || !s.lines.empty() || !parse_unsigned(s.args[0]))
      throw line_error(s.header_line, "expected 'ARITY <n>'");
    arity = *parse_unsigned(s.args[0]);
    if (*arity > kMaxArity) throw line_error(s.header_line, "arity exceeds the supported maximum");
  }
  for (const char* key : {"BOUNDS", "VALUES", "POINTS", "POLY"})
    if (auto it = sections.find(key); it != sections.end() && !it->second.args.empty())
      throw line_error(it->second.header_line, std::string(key) + " takes no arguments");

  if (auto it = sections.find("BOUNDS"); it != sections.end()) {
    const auto pairs = pair_lines(lattice, it->second);
    if (arity && *arity != pairs.size())
      throw line_error(it->second.header_line, "BOUNDS has " + std::to_string(pairs.size()) +
                                                   " lines but arity is " + std::to_string(*arity));
    arity = static_cast<unsigned>(pairs.size());
    std::vector<CoordinateBounds> bounds;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [a, b] = pairs[i];
      if (!lattice.less(a, b))
        throw line_error(it->second.lines[i].number,
                         "need " + lattice.label(a) + " < " + lattice.label(b));
      bounds.push_back({a, b});
    }
    out.bounds = std::move(bounds);
  }
  if (auto it = sections.find("POINTS"); it != sections.end()) {
    std::vector<std::pair<Point, LatticeElement>> points;
    for (const auto& line : it->second.lines) {
      auto [key, value] = split_arrow(line);
      Point x = parse_point(lattice, key, line.number);
      if (arity && x.size() != *arity)
        throw line_error(line.number, "point has " + std::to_string(x.size()) +
                                          " coordinates, expected " + std::to_string(*arity));
      arity = static_cast<unsigned>(x.size());
      points.emplace_back(std::move(x), resolve_at(lattice, value, line.number));
    }
    out.points = std::move(points);
  }
  if (!arity) {
    unsigned h = 0;
    for (const char* key : {"VALUES", "POLY"})
      if (auto it = sections.find(key); it != sections.end())
        for (const auto& [s, line] : subset_entries(it->second)) h = std::max(h, highest_index(s));
    arity = h;
  }
  out.arity = *arity;

  if (auto it = sections.find("VALUES"); it != sections.end())
    out.values = subset_table(lattice, it->second, out.arity, true, "VALUES");
  if (auto it = sections.find("POLY"); it != sections.end())
    out.polynomial = subset_table(lattice, it->second, out.arity, false, "POLY");
  if (out.points) out.partial();  // validates distinct points
  return out;
}

std::string render_problem(const ProblemFile& problem) {
  const DistributiveLattice& lattice = problem.lattice;
  std::ostringstream out;
  out << "LATTICE\n" << render_lattice_description(problem.lattice_description);
  out << "ARITY " << problem.arity << "\n";
  if (problem.bounds) {
    out << "BOUNDS\n";
    for (const auto& b : *problem.bounds)
      out << lattice.label(b.low) << " " << lattice.label(b.high) << "\n";
  }
  if (problem.values) {
    out << "VALUES\n";
    render_table(out, lattice, *problem.values, problem.arity);
  }
  if (problem.points) {
    out << "POINTS\n";
    for (const auto& [x, v] : *problem.points)
      out << render_point(lattice, x) << " -> " << lattice.label(v) << "\n";
  }
  if (problem.polynomial) {
    out << "POLY\n";
    render_table(out, lattice, *problem.polynomial, problem.arity);
  }
  return out.str();
}

UtilityBoundaryFile parse_utility(std::string_view text, const std::filesystem::path& base_dir,
                                  std::optional<std::string_view> lattice_override,
                                  LatticeLimits limits) {
  const Sections sections = split_sections(text, {"LATTICE", "CRITERIA", "UTILITY"});
  UtilityBoundaryFile out{lattice_section(sections, base_dir, lattice_override), chain(1), {}, {}};
  out.lattice = section_lattice(sections, out.lattice_description, lattice_override.has_value(), limits);
  auto crit = sections.find("CRITERIA");
  if (crit == sections.end()) throw InputError("missing CRITERIA section");
  auto util = sections.find("UTILITY");
  if (util == sections.end()) throw InputError("missing UTILITY section");
  out.criteria = pair_lines(out.lattice, crit->second);
  if (out.criteria.size() > kMaxArity)
    throw line_error(crit->second.header_line, "too many criteria");
  out.utility = subset_table(out.lattice, util->second,
                             static_cast<unsigned>(out.criteria.size()), true, "UTILITY");
  return out;
}

ProblemFile problem_from_utility(const UtilityBoundaryFile& file) {
  ProblemFile out{file.lattice_description, file.lattice, 0, {}, {}, {}, {}};
  out.arity = static_cast<unsigned>(file.criteria.size());
  std::vector<CoordinateBounds> bounds;
  for (std::size_t i = 0; i < file.criteria.size(); ++i) {
    const auto [lo, hi] = file.criteria[i];
    if (!file.lattice.less(lo, hi))
      throw InputError("criterion " + std::to_string(i + 1) + ": worst score " + file.lattice.label(lo) +
                       " is not strictly below best score " + file.lattice.label(hi) +
                       " (degenerate coordinate)");
    bounds.push_back({lo, hi});
  }
  out.bounds = std::move(bounds);
  out.values = file.utility;
  return out;
}

std::string render_point(const DistributiveLattice& lattice, std::span<const LatticeElement> x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + lattice.label(x[i]);
  return s + ")";
}

std::string render_dnf_inline(const DistributiveLattice& lattice, const LatticePolynomial& p) {
  std::string s;
  for (Subset i = 0; i < p.coefficients().size(); ++i)
    s += (i ? "; " : "") + subset_label(i, p.arity()) + " -> " + lattice.label(p.coefficient(i));
  return s;
}

std::string render_dnf(const DistributiveLattice& lattice, const LatticePolynomial& p) {
  std::ostringstream out;
  render_table(out, lattice, p.coefficients(), p.arity());
  return out.str();
}

}  // namespace lpinterp
