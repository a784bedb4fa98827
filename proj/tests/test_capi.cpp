// Exercises the shared library through its C interface only.

#include <cstring>
#include <string>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lpinterp/lpinterp.h"

namespace {

const char* kChainSample = "LATTICE\nchain(4)\nBOUNDS\n1 2\nVALUES\n[] -> 1\n[1] -> 2\n";

lpi_problem* parse(const char* text, const char* lattice = nullptr) {
  lpi_problem* p = nullptr;
  REQUIRE(lpi_problem_parse(text, nullptr, lattice, &p) == LPI_OK);
  return p;
}

}  // namespace

TEST_CASE("lattice handles") {
  lpi_lattice* L = nullptr;
  REQUIRE(lpi_lattice_parse("boolean(2)", &L) == LPI_OK);
  CHECK(lpi_lattice_size(L) == 4);
  CHECK(lpi_lattice_irreducible_count(L) == 2);
  CHECK(lpi_lattice_is_chain(L) == 0);
  size_t a = 0, b = 0, out = 0;
  REQUIRE(lpi_lattice_find(L, "a", &a) == LPI_OK);
  REQUIRE(lpi_lattice_find(L, "b", &b) == LPI_OK);
  REQUIRE(lpi_lattice_meet(L, a, b, &out) == LPI_OK);
  CHECK(std::string(lpi_lattice_label(L, out)) == "0");
  REQUIRE(lpi_lattice_join(L, a, b, &out) == LPI_OK);
  CHECK(std::string(lpi_lattice_label(L, out)) == "1");
  int leq = -1;
  REQUIRE(lpi_lattice_leq(L, a, b, &leq) == LPI_OK);
  CHECK(leq == 0);
  CHECK(lpi_lattice_label(L, 4) == nullptr);
  CHECK(lpi_lattice_meet(L, 0, 9, &out) == LPI_INPUT_ERROR);
  CHECK(std::strlen(lpi_last_error()) > 0);
  CHECK(lpi_lattice_find(L, "zzz", &out) == LPI_INPUT_ERROR);
  lpi_lattice_free(L);
}

TEST_CASE("lattice parse errors") {
  lpi_lattice* L = nullptr;
  CHECK(lpi_lattice_parse("poset(x<y<x)", &L) == LPI_INPUT_ERROR);
  CHECK(std::string(lpi_last_error()).find("cyclic") != std::string::npos);
  CHECK(lpi_lattice_parse("boolean(25)", &L) == LPI_CAP_EXCEEDED);
  CHECK(lpi_lattice_parse(nullptr, &L) == LPI_INPUT_ERROR);
}

TEST_CASE("evaluation") {
  lpi_lattice* L = nullptr;
  REQUIRE(lpi_lattice_parse("chain(4)", &L) == LPI_OK);
  const size_t coeffs[] = {1, 3};
  const size_t point[] = {2};
  size_t out = 0;
  REQUIRE(lpi_evaluate(L, 1, coeffs, point, &out) == LPI_OK);
  CHECK(out == 2);
  lpi_lattice_free(L);
}

TEST_CASE("solving through handles") {
  lpi_problem* p = parse(kChainSample);
  CHECK(lpi_problem_arity(p) == 1);
  CHECK(lpi_lattice_size(lpi_problem_lattice(p)) == 4);
  lpi_solution* s = nullptr;
  REQUIRE(lpi_solve(p, &s) == LPI_OK);
  CHECK(lpi_solution_feasible(s) == 1);
  CHECK(lpi_solution_arity(s) == 1);
  size_t lo = 9, hi = 9, c = 9;
  REQUIRE(lpi_solution_interval(s, 0, &lo, &hi) == LPI_OK);
  CHECK(lo == 0);
  CHECK(hi == 1);
  REQUIRE(lpi_solution_interval(s, 1, &lo, &hi) == LPI_OK);
  CHECK(lo == 2);
  CHECK(hi == 3);
  REQUIRE(lpi_solution_canonical(s, 1, &c) == LPI_OK);
  CHECK(c == 2);
  CHECK(lpi_solution_interval(s, 2, &lo, &hi) == LPI_INPUT_ERROR);
  uint32_t lower = 0, upper = 0;
  CHECK(lpi_solution_monotonicity_witness(s, &lower, &upper) == LPI_NEGATIVE);
  uint64_t count = 0;
  REQUIRE(lpi_count_solutions(p, 100, &count) == LPI_OK);
  CHECK(count == 4);
  CHECK(lpi_count_solutions(p, 3, &count) == LPI_CAP_EXCEEDED);
  lpi_solution_free(s);
  lpi_problem_free(p);
}

TEST_CASE("infeasible problems report witnesses") {
  lpi_problem* p = parse("LATTICE\nchain(4)\nBOUNDS\n1 2\nVALUES\n[] -> 1\n[1] -> 3\n");
  lpi_solution* s = nullptr;
  REQUIRE(lpi_solve(p, &s) == LPI_OK);
  CHECK(lpi_solution_feasible(s) == 0);
  uint32_t subset = 0;
  unsigned coordinate = 0;
  REQUIRE(lpi_solution_star_witness(s, &subset, &coordinate) == LPI_OK);
  CHECK(subset == 1);
  CHECK(coordinate == 1);
  size_t c = 0;
  CHECK(lpi_solution_canonical(s, 0, &c) == LPI_NEGATIVE);
  lpi_solution_free(s);
  lpi_problem_free(p);
}

TEST_CASE("running commands") {
  lpi_problem* p = parse(kChainSample);
  lpi_options options;
  lpi_options_init(&options);
  lpi_text* text = nullptr;
  REQUIRE(lpi_run(LPI_CMD_ENUMERATE, p, &options, &text) == LPI_OK);
  const std::string enumerated(lpi_text_data(text), lpi_text_size(text));
  lpi_text_free(text);
  REQUIRE(lpi_run(LPI_CMD_ORACLE, p, &options, &text) == LPI_OK);
  CHECK(std::string(lpi_text_data(text)) == enumerated);
  lpi_text_free(text);
  CHECK(enumerated.rfind("4 interpolants\n", 0) == 0);

  options.cap = 2;
  text = nullptr;
  CHECK(lpi_run(LPI_CMD_ENUMERATE, p, &options, &text) == LPI_CAP_EXCEEDED);
  CHECK(text == nullptr);

  REQUIRE(lpi_problem_render(p, &text) == LPI_OK);
  lpi_problem* again = parse(lpi_text_data(text));
  lpi_text_free(text);
  CHECK(lpi_problem_arity(again) == 1);
  lpi_problem_free(again);
  lpi_problem_free(p);
}

TEST_CASE("negative verdicts come back with a report") {
  lpi_problem* p = parse("LATTICE\nboolean(2)\nARITY 1\nPOINTS\n(a) -> b\n(b) -> a\n");
  lpi_text* text = nullptr;
  REQUIRE(lpi_run(LPI_CMD_ORACLE, p, nullptr, &text) == LPI_NEGATIVE);
  CHECK(std::string(lpi_text_data(text)) == "0 interpolants\n");
  lpi_text_free(text);
  lpi_problem_free(p);
}

TEST_CASE("problems from a lattice alone") {
  lpi_problem* p = parse(nullptr, "chain(3)");
  lpi_options options;
  lpi_options_init(&options);
  options.samples = 20;
  lpi_text* text = nullptr;
  CHECK(lpi_run(LPI_CMD_CHECK, p, &options, &text) == LPI_OK);
  lpi_text_free(text);
  lpi_problem_free(p);
  lpi_problem* none = nullptr;
  CHECK(lpi_problem_parse(nullptr, nullptr, nullptr, &none) == LPI_INPUT_ERROR);
}

TEST_CASE("utility conversion") {
  lpi_text* text = nullptr;
  REQUIRE(lpi_from_utility("LATTICE\nchain(4)\nCRITERIA\n1 2\nUTILITY\n[] -> 1\n[1] -> 2\n", nullptr,
                           nullptr, &text) == LPI_OK);
  CHECK(std::string(lpi_text_data(text)).find("BOUNDS\n1 2\n") != std::string::npos);
  lpi_text_free(text);
  CHECK(lpi_from_utility("LATTICE\nchain(4)\nCRITERIA\n2 2\nUTILITY\n[] -> 1\n[1] -> 2\n", nullptr,
                         nullptr, &text) == LPI_INPUT_ERROR);
  CHECK(std::string(lpi_last_error()).find("degenerate") != std::string::npos);
}

TEST_CASE("null handles are harmless") {
  lpi_lattice_free(nullptr);
  lpi_problem_free(nullptr);
  lpi_solution_free(nullptr);
  lpi_text_free(nullptr);
  CHECK(lpi_lattice_size(nullptr) == 0);
  CHECK(std::string(lpi_text_data(nullptr)).empty());
  CHECK(std::string(lpi_version()).size() > 0);
}
