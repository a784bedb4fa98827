#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

// Brute-force closure and interior: meet of all lattice elements above, join
// of all lattice elements below.
LatticeElement brute_closure(const BooleanAlgebra& B, BoolElement u) {
  const auto& L = B.lattice();
  LatticeElement out = L.top();
  for (auto x : L.elements())
    if (B.leq(u, B.embed(x))) out = L.meet(out, x);
  return out;
}

LatticeElement brute_interior(const BooleanAlgebra& B, BoolElement u) {
  const auto& L = B.lattice();
  LatticeElement out = L.bottom();
  for (auto x : L.elements())
    if (B.leq(B.embed(x), u)) out = L.join(out, x);
  return out;
}

}  // namespace

TEST_CASE("embedding on chain(4) and the diamond") {
  const auto L = lattice("chain(4)");
  const BooleanAlgebra B(L);
  CHECK(B.size() == 8);
  CHECK(B.embed(el(L, "2")).bits == 0b011);
  const auto D = lattice("boolean(2)");
  CHECK(BooleanAlgebra(D).embed(el(D, "a")).bits == 0b01);
}

TEST_CASE("complement on chain(4)") {
  const auto L = lattice("chain(4)");
  const BooleanAlgebra B(L);
  CHECK(B.complement(B.embed(el(L, "1"))).bits == 0b110);
  CHECK(B.complement(B.bottom()) == B.top());
}

TEST_CASE("closure and interior on chain(4)") {
  const auto L = lattice("chain(4)");
  const BooleanAlgebra B(L);
  CHECK(B.closure(BoolElement{0b010}) == el(L, "2"));
  CHECK(B.interior(BoolElement{0b110}) == el(L, "0"));
  CHECK(B.closure(B.bottom()) == L.bottom());
  CHECK(B.interior(B.top()) == L.top());
  CHECK(B.closure(BoolElement{0b010}) == brute_closure(B, BoolElement{0b010}));
  CHECK(B.interior(BoolElement{0b110}) == brute_interior(B, BoolElement{0b110}));
}

TEST_CASE("labels of elements outside the lattice") {
  const auto L = lattice("chain(4)");
  const BooleanAlgebra B(L);
  CHECK(B.label(B.embed(el(L, "2"))) == "2");
  CHECK(B.label(BoolElement{0b110}) == "{2,3}");
  CHECK_THROWS_AS(B.require(BoolElement{0b1000}), UsageError);
}

TEST_CASE("Boolean and closure laws hold exhaustively") {
  for (const char* term : {"chain(2)", "chain(4)", "boolean(3)", "poset(x<y, x<z)",
                           "product(chain(3), chain(2))", "poset(a<c, b<c, b<d)"}) {
    CAPTURE(term);
    const auto L = lattice(term);
    const BooleanAlgebra B(L);
    const auto U = carrier(B);
    int failures = 0;
    for (auto u : U) {
      const auto nu = B.complement(u);
      failures += B.complement(nu) != u;
      failures += B.meet(u, nu) != B.bottom();
      failures += B.join(u, nu) != B.top();
      const auto cu = B.closure(u), iu = B.interior(u);
      failures += cu != brute_closure(B, u);
      failures += iu != brute_interior(B, u);
      failures += !B.leq(u, B.embed(cu));
      failures += !B.leq(B.embed(iu), u);
      failures += B.closure(B.embed(cu)) != cu;
      failures += B.interior(B.embed(iu)) != iu;
      for (auto v : U) {
        failures += B.complement(B.meet(u, v)) != B.join(nu, B.complement(v));
        failures += B.leq(u, v) != (B.meet(u, v) == u);
        if (B.leq(u, v)) {
          failures += !L.leq(B.closure(u), B.closure(v));
          failures += !L.leq(B.interior(u), B.interior(v));
        }
        for (auto w : U)
          failures += B.meet(u, B.join(v, w)) != B.join(B.meet(u, v), B.meet(u, w));
      }
      for (auto x : L.elements()) {
        failures += B.leq(B.embed(x), u) != L.leq(x, iu);
        failures += B.leq(u, B.embed(x)) != L.leq(cu, x);
      }
    }
    for (auto x : L.elements()) {
      failures += B.closure(B.embed(x)) != x;
      failures += B.interior(B.embed(x)) != x;
      for (auto y : L.elements()) {
        failures += B.embed(L.meet(x, y)) != B.meet(B.embed(x), B.embed(y));
        failures += B.embed(L.join(x, y)) != B.join(B.embed(x), B.embed(y));
        failures += L.leq(x, y) != B.leq(B.embed(x), B.embed(y));
      }
    }
    CHECK(failures == 0);
  }
}
