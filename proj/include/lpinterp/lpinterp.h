/*
 * C interface to lpinterp: interpolation of partial functions on finite
 * distributive lattices by lattice polynomial functions.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Lattice elements are addressed by their
 * canonical index (0 = bottom, size-1 = top). Subsets of variables are
 * bitmasks: bit i set means variable i+1 is in the subset.
 *
 * Every fallible call returns an lpi_status. On LPI_INPUT_ERROR,
 * LPI_CAP_EXCEEDED and LPI_INTERNAL_ERROR, lpi_last_error() describes the
 * failure for the calling thread.
 */
#ifndef LPINTERP_H
#define LPINTERP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LPINTERP_BUILDING)
#    define LPI_API __declspec(dllexport)
#  else
#    define LPI_API __declspec(dllimport)
#  endif
#else
#  define LPI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lpi_status {
  LPI_OK = 0,
  LPI_NEGATIVE = 1,       /* infeasible / condition violated / no interpolant */
  LPI_INPUT_ERROR = 2,    /* malformed input or invalid arguments */
  LPI_CAP_EXCEEDED = 3,
  LPI_INTERNAL_ERROR = 4
} lpi_status;

typedef enum lpi_format { LPI_FORMAT_TEXT = 0, LPI_FORMAT_MACHINE = 1 } lpi_format;

typedef enum lpi_command {
  LPI_CMD_SOLVE = 0,
  LPI_CMD_ENUMERATE,
  LPI_CMD_ORACLE,
  LPI_CMD_GOODSTEIN,
  LPI_CMD_RG,
  LPI_CMD_EVAL,
  LPI_CMD_CHECK
} lpi_command;

typedef struct lpi_options {
  uint64_t cap;
  uint64_t seed;
  uint64_t samples;
  unsigned arity;
  lpi_format format;
} lpi_options;

typedef struct lpi_lattice lpi_lattice;
typedef struct lpi_problem lpi_problem;
typedef struct lpi_solution lpi_solution;
typedef struct lpi_text lpi_text;

LPI_API const char* lpi_version(void);
LPI_API const char* lpi_last_error(void);
LPI_API void lpi_options_init(lpi_options* options);

/* Lattices, from the text description (e.g. "chain(4)" or "boolean(a, b)"). */
LPI_API lpi_status lpi_lattice_parse(const char* description, lpi_lattice** out);
LPI_API void lpi_lattice_free(lpi_lattice* lattice);
LPI_API size_t lpi_lattice_size(const lpi_lattice* lattice);
LPI_API unsigned lpi_lattice_irreducible_count(const lpi_lattice* lattice);
LPI_API int lpi_lattice_is_chain(const lpi_lattice* lattice);
/* Borrowed pointer valid while the lattice lives; NULL when out of range. */
LPI_API const char* lpi_lattice_label(const lpi_lattice* lattice, size_t index);
LPI_API lpi_status lpi_lattice_find(const lpi_lattice* lattice, const char* label, size_t* index);
LPI_API lpi_status lpi_lattice_meet(const lpi_lattice* lattice, size_t x, size_t y, size_t* out);
LPI_API lpi_status lpi_lattice_join(const lpi_lattice* lattice, size_t x, size_t y, size_t* out);
LPI_API lpi_status lpi_lattice_leq(const lpi_lattice* lattice, size_t x, size_t y, int* out);

/* Evaluates the DNF with coefficient indices coeffs[0 .. 2^arity) at point[0 .. arity). */
LPI_API lpi_status lpi_evaluate(const lpi_lattice* lattice, unsigned arity, const size_t* coeffs,
                                const size_t* point, size_t* out);

/*
 * Problem files. `text` may be NULL when `lattice_description` is given, in
 * which case the problem carries only the lattice. `lattice_description`,
 * when non-NULL, replaces the LATTICE section. `base_dir` (may be NULL)
 * resolves "LATTICE FILE" references.
 */
LPI_API lpi_status lpi_problem_parse(const char* text, const char* base_dir,
                                     const char* lattice_description, lpi_problem** out);
LPI_API void lpi_problem_free(lpi_problem* problem);
LPI_API unsigned lpi_problem_arity(const lpi_problem* problem);
/* Borrowed; owned by the problem. */
LPI_API const lpi_lattice* lpi_problem_lattice(const lpi_problem* problem);
/* Canonical re-rendering of the problem file. */
LPI_API lpi_status lpi_problem_render(const lpi_problem* problem, lpi_text** out);

/* Solving a cuboid problem. LPI_OK also for infeasible problems. */
LPI_API lpi_status lpi_solve(const lpi_problem* problem, lpi_solution** out);
LPI_API void lpi_solution_free(lpi_solution* solution);
LPI_API int lpi_solution_feasible(const lpi_solution* solution);
LPI_API unsigned lpi_solution_arity(const lpi_solution* solution);
LPI_API lpi_status lpi_solution_interval(const lpi_solution* solution, uint32_t subset,
                                         size_t* lower, size_t* upper);
LPI_API lpi_status lpi_solution_canonical(const lpi_solution* solution, uint32_t subset,
                                          size_t* coefficient);
/* Monotonicity witness (lower subset, covering upper subset); LPI_NEGATIVE when none. */
LPI_API lpi_status lpi_solution_monotonicity_witness(const lpi_solution* solution,
                                                     uint32_t* lower, uint32_t* upper);
/* Star witness (subset, 1-based coordinate); LPI_NEGATIVE when none. */
LPI_API lpi_status lpi_solution_star_witness(const lpi_solution* solution, uint32_t* subset,
                                             unsigned* coordinate);
LPI_API lpi_status lpi_count_solutions(const lpi_problem* problem, uint64_t cap, uint64_t* count);

/* Runs a command and renders its report. The status doubles as exit code. */
LPI_API lpi_status lpi_run(lpi_command command, const lpi_problem* problem,
                           const lpi_options* options, lpi_text** out);
/* Converts a utility boundary file into problem file text. */
LPI_API lpi_status lpi_from_utility(const char* text, const char* base_dir,
                                    const char* lattice_description, lpi_text** out);

LPI_API const char* lpi_text_data(const lpi_text* text);
LPI_API size_t lpi_text_size(const lpi_text* text);
LPI_API void lpi_text_free(lpi_text* text);

#ifdef __cplusplus
}
#endif

#endif /* LPINTERP_H */
