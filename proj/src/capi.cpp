#include "lpinterp/lpinterp.h"

#include <exception>
#include <memory>
#include <new>
#include <string>

#include "lpinterp/commands.hpp"
#include "lpinterp/format.hpp"
#include "lpinterp/solver.hpp"

using namespace lpinterp;

struct lpi_lattice {
  DistributiveLattice lattice;
};

struct lpi_problem {
  ProblemFile file;
  lpi_lattice lattice;
};

struct lpi_solution {
  DistributiveLattice lattice;
  unsigned arity;
  SolutionSet solution;
};

struct lpi_text {
  std::string data;
};

namespace {

thread_local std::string last_error;

lpi_status fail(lpi_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Maps exceptions escaping the C++ core onto status codes.
template <class F>
lpi_status guarded(F&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const CapExceeded& e) {
    return fail(LPI_CAP_EXCEEDED, e.what());
  } catch (const InputError& e) {
    return fail(LPI_INPUT_ERROR, e.what());
  } catch (const UsageError& e) {
    return fail(LPI_INPUT_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LPI_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(LPI_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(LPI_INTERNAL_ERROR, "unknown error");
  }
}

lpi_status null_argument(const char* name) {
  return fail(LPI_INPUT_ERROR, std::string("null argument: ") + name);
}

LatticeElement element_at(const DistributiveLattice& lattice, size_t index) {
  if (index >= lattice.size())
    throw UsageError("element index " + std::to_string(index) + " out of range");
  return lattice.element(index);
}

lpi_status emit(std::string data, lpi_text** out) {
  *out = new lpi_text{std::move(data)};
  return LPI_OK;
}

}  // namespace

extern "C" {

const char* lpi_version(void) { return "1.0.0"; }

const char* lpi_last_error(void) { return last_error.c_str(); }

void lpi_options_init(lpi_options* options) {
  if (!options) return;
  const CommandOptions defaults;
  options->cap = defaults.cap;
  options->seed = defaults.seed;
  options->samples = defaults.samples;
  options->arity = defaults.arity;
  options->format = LPI_FORMAT_TEXT;
}

lpi_status lpi_lattice_parse(const char* description, lpi_lattice** out) {
  if (!description) return null_argument("description");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new lpi_lattice{build_lattice(parse_lattice_description(description))};
    return LPI_OK;
  });
}

void lpi_lattice_free(lpi_lattice* lattice) { delete lattice; }

size_t lpi_lattice_size(const lpi_lattice* lattice) { return lattice ? lattice->lattice.size() : 0; }

unsigned lpi_lattice_irreducible_count(const lpi_lattice* lattice) {
  return lattice ? lattice->lattice.irreducible_count() : 0;
}

int lpi_lattice_is_chain(const lpi_lattice* lattice) {
  return lattice && lattice->lattice.is_chain() ? 1 : 0;
}

const char* lpi_lattice_label(const lpi_lattice* lattice, size_t index) {
  if (!lattice || index >= lattice->lattice.size()) return nullptr;
  return lattice->lattice.label(lattice->lattice.element(index)).c_str();
}

lpi_status lpi_lattice_find(const lpi_lattice* lattice, const char* label, size_t* index) {
  if (!lattice) return null_argument("lattice");
  if (!label) return null_argument("label");
  if (!index) return null_argument("index");
  return guarded([&] {
    *index = lattice->lattice.index_of(lattice->lattice.resolve(label));
    return LPI_OK;
  });
}

lpi_status lpi_lattice_meet(const lpi_lattice* lattice, size_t x, size_t y, size_t* out) {
  if (!lattice) return null_argument("lattice");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& L = lattice->lattice;
    *out = L.index_of(L.meet(element_at(L, x), element_at(L, y)));
    return LPI_OK;
  });
}

lpi_status lpi_lattice_join(const lpi_lattice* lattice, size_t x, size_t y, size_t* out) {
  if (!lattice) return null_argument("lattice");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& L = lattice->lattice;
    *out = L.index_of(L.join(element_at(L, x), element_at(L, y)));
    return LPI_OK;
  });
}

lpi_status lpi_lattice_leq(const lpi_lattice* lattice, size_t x, size_t y, int* out) {
  if (!lattice) return null_argument("lattice");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& L = lattice->lattice;
    *out = L.leq(element_at(L, x), element_at(L, y)) ? 1 : 0;
    return LPI_OK;
  });
}

lpi_status lpi_evaluate(const lpi_lattice* lattice, unsigned arity, const size_t* coeffs,
                        const size_t* point, size_t* out) {
  if (!lattice) return null_argument("lattice");
  if (!coeffs) return null_argument("coeffs");
  if (!point && arity > 0) return null_argument("point");
  if (!out) return null_argument("out");
  return guarded([&] {
    if (arity > kMaxArity) throw UsageError("arity exceeds the supported maximum");
    const auto& L = lattice->lattice;
    std::vector<LatticeElement> c;
    for (size_t s = 0; s < subset_count(arity); ++s) c.push_back(element_at(L, coeffs[s]));
    Point x;
    for (unsigned i = 0; i < arity; ++i) x.push_back(element_at(L, point[i]));
    *out = L.index_of(evaluate<LatticeElement>(LatticePolynomial(arity, std::move(c)), x));
    return LPI_OK;
  });
}

lpi_status lpi_problem_parse(const char* text, const char* base_dir,
                             const char* lattice_description, lpi_problem** out) {
  if (!out) return null_argument("out");
  if (!text && !lattice_description) return null_argument("text");
  return guarded([&] {
    std::optional<std::string_view> override_text;
    if (lattice_description) override_text = lattice_description;
    ProblemFile file = parse_problem(text ? std::string_view(text) : std::string_view("LATTICE\n"),
                                     base_dir ? std::filesystem::path(base_dir) : std::filesystem::path(),
                                     override_text);
    DistributiveLattice lattice = file.lattice;
    *out = new lpi_problem{std::move(file), lpi_lattice{std::move(lattice)}};
    return LPI_OK;
  });
}

void lpi_problem_free(lpi_problem* problem) { delete problem; }

unsigned lpi_problem_arity(const lpi_problem* problem) { return problem ? problem->file.arity : 0; }

const lpi_lattice* lpi_problem_lattice(const lpi_problem* problem) {
  return problem ? &problem->lattice : nullptr;
}

lpi_status lpi_problem_render(const lpi_problem* problem, lpi_text** out) {
  if (!problem) return null_argument("problem");
  if (!out) return null_argument("out");
  return guarded([&] { return emit(render_problem(problem->file), out); });
}

lpi_status lpi_solve(const lpi_problem* problem, lpi_solution** out) {
  if (!problem) return null_argument("problem");
  if (!out) return null_argument("out");
  return guarded([&] {
    const CuboidProblem cuboid = problem->file.cuboid();
    *out = new lpi_solution{cuboid.lattice(), cuboid.arity(), solve(cuboid)};
    return LPI_OK;
  });
}

void lpi_solution_free(lpi_solution* solution) { delete solution; }

int lpi_solution_feasible(const lpi_solution* solution) {
  return solution && solution->solution.feasible ? 1 : 0;
}

unsigned lpi_solution_arity(const lpi_solution* solution) { return solution ? solution->arity : 0; }

lpi_status lpi_solution_interval(const lpi_solution* solution, uint32_t subset, size_t* lower,
                                 size_t* upper) {
  if (!solution) return null_argument("solution");
  if (!lower || !upper) return null_argument("lower/upper");
  return guarded([&] {
    const auto& bounds = solution->solution.lattice_bounds;
    if (subset >= bounds.size()) throw UsageError("subset out of range");
    *lower = solution->lattice.index_of(bounds[subset].lower);
    *upper = solution->lattice.index_of(bounds[subset].upper);
    return LPI_OK;
  });
}

lpi_status lpi_solution_canonical(const lpi_solution* solution, uint32_t subset,
                                  size_t* coefficient) {
  if (!solution) return null_argument("solution");
  if (!coefficient) return null_argument("coefficient");
  return guarded([&] {
    const auto& p0 = solution->solution.canonical;
    if (!p0) return fail(LPI_NEGATIVE, "problem is infeasible; no canonical solution");
    if (subset >= p0->coefficients().size()) throw UsageError("subset out of range");
    *coefficient = solution->lattice.index_of(p0->coefficient(subset));
    return LPI_OK;
  });
}

lpi_status lpi_solution_monotonicity_witness(const lpi_solution* solution, uint32_t* lower,
                                             uint32_t* upper) {
  if (!solution) return null_argument("solution");
  if (!lower || !upper) return null_argument("lower/upper");
  const auto& w = solution->solution.diagnosis.monotonicity;
  if (!w) return LPI_NEGATIVE;
  *lower = w->lower;
  *upper = w->upper;
  return LPI_OK;
}

lpi_status lpi_solution_star_witness(const lpi_solution* solution, uint32_t* subset,
                                     unsigned* coordinate) {
  if (!solution) return null_argument("solution");
  if (!subset || !coordinate) return null_argument("subset/coordinate");
  const auto& w = solution->solution.diagnosis.star;
  if (!w) return LPI_NEGATIVE;
  *subset = w->subset;
  *coordinate = w->coordinate + 1;
  return LPI_OK;
}

lpi_status lpi_count_solutions(const lpi_problem* problem, uint64_t cap, uint64_t* count) {
  if (!problem) return null_argument("problem");
  if (!count) return null_argument("count");
  return guarded([&] {
    *count = enumerate_solutions(problem->file.cuboid(), {cap}).size();
    return LPI_OK;
  });
}

lpi_status lpi_run(lpi_command command, const lpi_problem* problem, const lpi_options* options,
                   lpi_text** out) {
  if (!problem) return null_argument("problem");
  if (!out) return null_argument("out");
  return guarded([&] {
    CommandOptions opts;
    if (options) {
      opts.cap = options->cap;
      opts.seed = options->seed;
      opts.samples = options->samples;
      opts.arity = options->arity;
      opts.format = options->format == LPI_FORMAT_MACHINE ? OutputFormat::machine : OutputFormat::text;
    }
    if (opts.cap == 0) throw UsageError("cap must be positive");
    Report report;
    switch (command) {
      case LPI_CMD_SOLVE: report = cmd_solve(problem->file, opts); break;
      case LPI_CMD_ENUMERATE: report = cmd_enumerate(problem->file, opts); break;
      case LPI_CMD_ORACLE: report = cmd_oracle(problem->file, opts); break;
      case LPI_CMD_GOODSTEIN: report = cmd_goodstein(problem->file, opts); break;
      case LPI_CMD_RG: report = cmd_rg(problem->file, opts); break;
      case LPI_CMD_EVAL: report = cmd_eval(problem->file, opts); break;
      case LPI_CMD_CHECK: report = cmd_check(problem->file, opts); break;
      default: throw UsageError("unknown command");
    }
    emit(std::move(report.output), out);
    return static_cast<lpi_status>(report.status);
  });
}

lpi_status lpi_from_utility(const char* text, const char* base_dir,
                            const char* lattice_description, lpi_text** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::optional<std::string_view> override_text;
    if (lattice_description) override_text = lattice_description;
    const UtilityBoundaryFile file =
        parse_utility(text, base_dir ? std::filesystem::path(base_dir) : std::filesystem::path(),
                      override_text);
    return emit(cmd_from_utility(file, {}).output, out);
  });
}

const char* lpi_text_data(const lpi_text* text) { return text ? text->data.c_str() : ""; }

size_t lpi_text_size(const lpi_text* text) { return text ? text->data.size() : 0; }

void lpi_text_free(lpi_text* text) { delete text; }

}  // extern "C"
