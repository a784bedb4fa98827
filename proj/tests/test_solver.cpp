#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

CuboidProblem chain_sample() {
  return cuboid(lattice("chain(4)"), {{"1", "2"}}, {"1", "2"});
}

BoolElement bits(unsigned b) { return BoolElement{b}; }

}  // namespace

TEST_CASE("monotonicity on a cuboid") {
  const auto L = lattice("chain(4)");
  const auto not_monotone = check_monotone(cuboid(L, {{"1", "2"}}, {"2", "1"}));
  REQUIRE_FALSE(not_monotone.holds());
  CHECK(not_monotone.violation->lower == 0);
  CHECK(not_monotone.violation->upper == 1);
  CHECK(check_monotone(cuboid(L, {{"0", "3"}, {"1", "2"}}, {"2", "2", "2", "2"})).holds());
  const auto D = lattice("boolean(2)");
  CHECK(check_monotone(cuboid(D, {{"0", "b"}}, {"a", "1"})).holds());
}

TEST_CASE("star condition") {
  const auto L = lattice("chain(4)");
  const auto g = check_star(cuboid(L, {{"1", "2"}}, {"1", "3"}));
  REQUIRE_FALSE(g.holds());
  CHECK(g.violation->subset == 1);
  CHECK(g.violation->coordinate == 0);
  CHECK(g.violation->side == InequalitySide::upper);
  CHECK(g.violation->lhs == el(L, "3"));
  CHECK(g.violation->rhs == el(L, "2"));
  CHECK(check_star(cuboid(L, {{"1", "2"}}, {"2", "1"})).holds());
  // With bottom/top bounds the condition is vacuous.
  const auto D = lattice("boolean(2)");
  for_each_cuboid(D, 1, [&](const CuboidProblem& p) {
    if (p.low(0) == D.bottom() && p.high(0) == D.top()) CHECK(check_star(p).holds());
  });
}

TEST_CASE("iterated star condition") {
  const auto L = lattice("chain(4)");
  const auto g = check_iterated_star(cuboid(L, {{"1", "2"}}, {"1", "3"}));
  REQUIRE_FALSE(g.holds());
  CHECK(g.violation->inner == 0);
  CHECK(g.violation->outer == 1);
  CHECK(check_iterated_star(chain_sample()).holds());
}

TEST_CASE("coefficient bounds of the chain sample") {
  const auto b = compute_bounds(chain_sample());
  REQUIRE(b.size() == 2);
  CHECK(b[0].lower == bits(0b000));
  CHECK(b[0].upper == bits(0b001));
  CHECK(b[1].lower == bits(0b011));
  CHECK(b[1].upper == bits(0b111));
}

TEST_CASE("bounds collapse on the Boolean cube") {
  const auto D = lattice("boolean(2)");
  const BooleanAlgebra B(D);
  const auto p = cuboid(D, {{"0", "1"}, {"0", "1"}}, {"0", "a", "b", "1"});
  const auto bounds = compute_bounds(p);
  for (Subset s = 0; s < 4; ++s) {
    CHECK(bounds[s].lower == B.embed(p.value(s)));
    CHECK(bounds[s].upper == B.embed(p.value(s)));
  }
  const auto ext = extremal_polynomials(p);
  CHECK(ext.lower == ext.upper);
  CHECK(ext.lower == embed(B, *solve(p).canonical));
}

TEST_CASE("full subset lower bound is the top value") {
  const auto L = lattice("poset(x<y, x<z)");
  std::mt19937_64 rng(kSeed);
  for (int k = 0; k < 200; ++k) {
    const auto p = random_cuboid_problem(L, 2, rng);
    CHECK(compute_bounds(p)[3].lower == BooleanAlgebra(L).embed(p.value(3)));
  }
}

TEST_CASE("extremal polynomials of the chain sample") {
  const auto p = chain_sample();
  const auto& L = p.lattice();
  const BooleanAlgebra B(L);
  const auto ext = extremal_polynomials(p);
  const auto e = [&](const char* label) { return B.embed(el(L, label)); };
  for (auto x : L.elements()) {
    CHECK(evaluate(ext.lower, {B.embed(x)}) == B.meet(e("2"), B.embed(x)));
    CHECK(evaluate(ext.upper, {B.embed(x)}) == B.join(e("1"), B.embed(x)));
  }
  CHECK(evaluate(ext.lower, {e("1")}) == e("1"));
  CHECK(evaluate(ext.lower, {e("2")}) == e("2"));
  CHECK(evaluate(ext.upper, {e("1")}) == e("1"));
  CHECK(evaluate(ext.upper, {e("2")}) == e("2"));
}

TEST_CASE("constant functions sit between the extremal solutions") {
  const auto L = lattice("poset(x<y, x<z)");
  const BooleanAlgebra B(L);
  for (auto m : L.elements()) {
    std::vector<CoordinateBounds> bounds{{el(L, "x"), el(L, "{x,y}")}, {L.bottom(), el(L, "{x,z}")}};
    const CuboidProblem p(L, bounds, std::vector<LatticeElement>(4, m));
    REQUIRE(check_star(p).holds());
    const auto ext = extremal_polynomials(p);
    for (const auto& x : all_points(carrier(B), 2)) {
      CHECK(B.leq(evaluate(ext.lower, x), B.embed(m)));
      CHECK(B.leq(B.embed(m), evaluate(ext.upper, x)));
    }
  }
}

TEST_CASE("infeasible problems have no extremal polynomials") {
  const auto L = lattice("chain(4)");
  CHECK_THROWS_AS(extremal_polynomials(cuboid(L, {{"1", "2"}}, {"2", "1"})), InfeasibleProblem);
}

TEST_CASE("solving the chain sample") {
  const auto p = chain_sample();
  const auto& L = p.lattice();
  const auto sol = solve(p);
  REQUIRE(sol.feasible);
  CHECK(sol.lattice_bounds[0].lower == el(L, "0"));
  CHECK(sol.lattice_bounds[0].upper == el(L, "1"));
  CHECK(sol.lattice_bounds[1].lower == el(L, "2"));
  CHECK(sol.lattice_bounds[1].upper == el(L, "3"));
  CHECK(*sol.canonical == poly(L, 1, {"1", "2"}));
  CHECK(is_solution(p, *sol.canonical));
  CHECK(is_solution(p, poly(L, 1, {"0", "3"})));
  CHECK_FALSE(is_solution(p, poly(L, 1, {"2", "2"})));
  CHECK(evaluate(poly(L, 1, {"2", "2"}), {el(L, "1")}) != el(L, "1"));
  CHECK(interval_combinations(p) == 4);
  const auto all = enumerate_solutions(p);
  REQUIRE(all.size() == 4);
  CHECK(all[0] == poly(L, 1, {"0", "2"}));
  CHECK(all[1] == poly(L, 1, {"1", "2"}));
  CHECK(all[2] == poly(L, 1, {"0", "3"}));
  CHECK(all[3] == poly(L, 1, {"1", "3"}));
}

TEST_CASE("the diamond on D = {0, b}") {
  const auto D = lattice("boolean(2)");
  const auto f = solve(cuboid(D, {{"0", "b"}}, {"b", "a"}));
  CHECK_FALSE(f.feasible);
  REQUIRE(f.diagnosis.monotonicity);
  CHECK(f.diagnosis.monotonicity->lower == 0);
  CHECK(f.diagnosis.monotonicity->upper == 1);
  const auto g = cuboid(D, {{"0", "b"}}, {"a", "1"});
  CHECK(solve(g).feasible);
  const auto x_or_a = poly(D, 1, {"a", "1"});
  CHECK(is_solution(g, x_or_a));
  const auto all = enumerate_solutions(g);
  CHECK(std::find(all.begin(), all.end(), x_or_a) != all.end());
}

TEST_CASE("wrong values are never solutions") {
  const auto p = chain_sample();
  const auto& L = p.lattice();
  for (const auto& q : all_polynomial_functions(L, 1)) {
    const bool matches = evaluate(q, {el(L, "1")}) == el(L, "1") && evaluate(q, {el(L, "2")}) == el(L, "2");
    CHECK(is_solution(p, q) == matches);
  }
}

TEST_CASE("infeasible problems enumerate nothing") {
  const auto L = lattice("chain(4)");
  CHECK(enumerate_solutions(cuboid(L, {{"1", "2"}}, {"1", "3"})).empty());
}

TEST_CASE("enumeration respects the cap") {
  const auto L = lattice("chain(5)");
  const auto p = cuboid(L, {{"1", "3"}, {"1", "2"}}, {"1", "3", "1", "3"});
  REQUIRE(solve(p).feasible);
  const auto total = interval_combinations(p);
  REQUIRE(total > 1);
  CHECK_THROWS_AS(enumerate_solutions(p, {total - 1}), CapExceeded);
  CHECK_NOTHROW(enumerate_solutions(p, {total}));
}

TEST_CASE("unique interpolant on the Boolean cube of the diamond") {
  const auto D = lattice("boolean(2)");
  const auto r = goodstein(D, 2, {el(D, "0"), el(D, "a"), el(D, "b"), el(D, "1")});
  REQUIRE(r.polynomial);
  const auto a = el(D, "a"), b = el(D, "b");
  for (auto x : D.elements())
    for (auto y : D.elements())
      CHECK(evaluate(*r.polynomial, {x, y}) == D.join(D.meet(a, x), D.meet(b, y)));
  const auto constant = goodstein(D, 2, std::vector<LatticeElement>(4, a));
  REQUIRE(constant.polynomial);
  CHECK(*constant.polynomial == LatticePolynomial::constant(2, a));
  const auto reversed = goodstein(D, 1, {a, D.bottom()});
  CHECK_FALSE(reversed.polynomial);
  REQUIRE(reversed.violation);
  CHECK(reversed.violation->lower == 0);
  CHECK(reversed.violation->upper == 1);
  CHECK_THROWS_AS(goodstein(lattice("chain(1)"), 1, {}), InputError);
}

TEST_CASE("RG condition on the diamond") {
  const auto D = lattice("boolean(2)");
  const auto f = PartialFunction::from_cuboid(cuboid(D, {{"0", "b"}}, {"b", "a"}));
  CHECK(check_rg(f).holds());
  const auto g = PartialFunction::from_cuboid(cuboid(D, {{"0", "b"}}, {"a", "1"}));
  const auto rg = check_rg(g);
  REQUIRE_FALSE(rg.holds());
  CHECK(rg.violation->first == 0);
  CHECK(rg.violation->second == 1);
}

TEST_CASE("RG condition holds for constants on a chain") {
  const auto L = lattice("chain(5)");
  std::mt19937_64 rng(kSeed);
  for (int k = 0; k < 100; ++k) {
    const auto f = random_partial_function(L, 2, 6, rng);
    const PartialFunction constant(L, 2, {f.points().begin(), f.points().end()},
                                   std::vector<LatticeElement>(f.size(), el(L, "2")));
    CHECK(check_rg(constant).holds());
  }
}

TEST_CASE("monotonicity on an arbitrary domain") {
  const auto D = lattice("boolean(2)");
  const PartialFunction f(D, 1, {{el(D, "a")}, {el(D, "b")}}, {el(D, "b"), el(D, "a")});
  CHECK(check_monotone(f).holds());
  const PartialFunction g(D, 1, {{el(D, "0")}, {el(D, "b")}}, {el(D, "b"), el(D, "a")});
  CHECK_FALSE(check_monotone(g).holds());
}

TEST_CASE("problem validation") {
  const auto L = lattice("chain(4)");
  CHECK_THROWS_AS(cuboid(L, {{"2", "2"}}, {"1", "1"}), InputError);
  CHECK_THROWS_AS(cuboid(L, {{"2", "1"}}, {"1", "1"}), InputError);
  CHECK_THROWS_AS(cuboid(L, {{"1", "2"}}, {"1"}), InputError);
  CHECK_THROWS_AS(PartialFunction(L, 1, {{L.top()}, {L.top()}}, {L.top(), L.top()}), InputError);
}
