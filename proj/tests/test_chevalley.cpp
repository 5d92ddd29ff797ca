#include <cstdlib>
#include <memory>

#include "chss/chevalley.hpp"
#include "doctest.h"

using namespace chss;

namespace {
Chevalley make(const char* name) {
  auto rs = std::make_shared<RootSystem>(RootSystem::build(parse_lie_type(name)));
  return Chevalley::build(rs);
}
}  // namespace

TEST_CASE("structure constant identities hold across families") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5"}) {
    CAPTURE(name);
    Chevalley ch = make(name);
    CHECK_NOTHROW(ch.verify());
  }
}

TEST_CASE("structure constant identities hold for E6 (full) and E7 (sampled)") {
  CHECK_NOTHROW(make("E6").verify());
  CHECK_NOTHROW(make("E7").verify(100000));
}

TEST_CASE("pinned constants in rank 2") {
  // B2 with roots sorted by (height, lex): id0 = α₂, id1 = α₁,
  // id2 = α₁+α₂, id3 = α₁+2α₂.
  Chevalley b2 = make("B2");
  const RootSystem& rs = b2.rs();
  REQUIRE(rs.simple_id(1) == 0);
  REQUIRE(rs.simple_id(0) == 1);
  CHECK(b2.n_const(0, 1) == 1);   // N(α₂, α₁) = +1   (extraspecial for α₁+α₂)
  CHECK(b2.n_const(1, 0) == -1);
  CHECK(b2.n_const(0, 2) == 2);   // N(α₂, α₁+α₂) = +2 (extraspecial for α₁+2α₂)
  CHECK(b2.n_const(2, 0) == -2);
  CHECK(b2.n_const(1, 2) == 0);   // α₁ + (α₁+α₂) is not a root
  CHECK_THROWS_AS(b2.n_const(0, rs.negate(0)), internal_error);

  Chevalley a2 = make("A2");
  // A2: the only positive constant is on the extraspecial pair (α₂, α₁).
  CHECK(a2.n_const(0, 1) == 1);
  CHECK(a2.n_const(1, 0) == -1);
}

TEST_CASE("extraspecial pairs decompose with a simple first member") {
  for (const char* name : {"B3", "C3", "D4", "E6"}) {
    CAPTURE(name);
    Chevalley ch = make(name);
    const RootSystem& rs = ch.rs();
    for (int g = 0; g < rs.num_pos; ++g) {
      if (rs.height(g) < 2) continue;
      auto [a, b] = ch.extraspecial(g);
      CHECK(rs.height(a) == 1);
      CHECK(rs.index_of(rs.root(a) + rs.root(b)) == g);
      CHECK(ch.n_const(a, b) > 0);  // positive sign on the extraspecial pair
    }
  }
}

TEST_CASE("magnitudes: simply-laced constants are ±1, doubly-laced reach ±2") {
  Chevalley a3 = make("A3");
  for (int x = 0; x < a3.rs().num_roots(); ++x)
    for (int y = 0; y < a3.rs().num_roots(); ++y) {
      if (a3.rs().negate(x) == y) continue;
      CHECK(std::abs(a3.n_const(x, y)) <= 1);
    }
  Chevalley b3 = make("B3");
  int maxabs = 0;
  for (int x = 0; x < b3.rs().num_roots(); ++x)
    for (int y = 0; y < b3.rs().num_roots(); ++y) {
      if (b3.rs().negate(x) == y) continue;
      maxabs = std::max(maxabs, std::abs(b3.n_const(x, y)));
    }
  CHECK(maxabs == 2);
}

TEST_CASE("rescaled bases keep magnitudes and the coroot identity") {
  Chevalley ch = make("C3");
  const RootSystem& rs = ch.rs();
  ScaledChevalley id(ch);
  ScaledChevalley sc = ScaledChevalley::random_signs(ch, 0xabcdef12345ull);
  bool any_flip = false;
  for (int x = 0; x < rs.num_roots(); ++x) {
    for (int y = 0; y < rs.num_roots(); ++y) {
      if (rs.negate(x) == y) continue;
      CHECK(id.n(x, y) == Rat(ch.n_const(x, y)));
      Rat v = sc.n(x, y);
      CHECK(boost::multiprecision::abs(v) ==
            boost::multiprecision::abs(Rat(ch.n_const(x, y))));
      if (v != Rat(ch.n_const(x, y))) any_flip = true;
      int s = rs.sum_id(x, y);
      if (s < 0) continue;
      int z = rs.negate(s);
      // Coroot identity survives rescaling: N'(x,y)z^∨ + N'(y,z)x^∨ + N'(z,x)y^∨ = 0.
      for (int i = 0; i < rs.rank; ++i) {
        Rat acc = sc.n(x, y) * Rat(2 * rs.root(z)[i]) / rs.inner(z, z) +
                  sc.n(y, z) * Rat(2 * rs.root(x)[i]) / rs.inner(x, x) +
                  sc.n(z, x) * Rat(2 * rs.root(y)[i]) / rs.inner(y, y);
        CHECK(acc == Rat(0));
      }
    }
  }
  CHECK(any_flip);  // the random scaling actually flipped something
}
