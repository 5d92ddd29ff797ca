#include <algorithm>
#include <set>

#include "chss/root_system.hpp"
#include "doctest.h"

using namespace chss;

TEST_CASE("Lie type parsing and rank bounds") {
  CHECK(parse_lie_type("A5").name() == "A5");
  CHECK(parse_lie_type("e6").name() == "E6");
  CHECK(parse_lie_type("E7").rank == 7);
  CHECK(parse_lie_type("B2").valid());
  CHECK_THROWS_AS(parse_lie_type("E8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("B1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("C2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("D3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("A0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("F4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("A13"), std::invalid_argument);  // beyond kMaxRank
  CHECK(parse_lie_type("A1").simply_laced());
  CHECK_FALSE(parse_lie_type("B3").simply_laced());
  CHECK_FALSE(parse_lie_type("C3").simply_laced());
  CHECK(parse_lie_type("D4").simply_laced());
}

TEST_CASE("positive root counts across families") {
  struct Case {
    const char* name;
    int count;
  };
  const Case cases[] = {{"A1", 1},  {"A2", 3},  {"A5", 15}, {"A10", 55}, {"B2", 4},
                        {"B3", 9},  {"B9", 81}, {"C3", 9},  {"C7", 49},  {"D4", 12},
                        {"D5", 20}, {"D8", 56}, {"E6", 36}, {"E7", 63}};
  for (const auto& c : cases) {
    CAPTURE(c.name);
    RootSystem rs = RootSystem::build(parse_lie_type(c.name));
    CHECK(rs.num_pos == c.count);
    CHECK(rs.num_roots() == 2 * c.count);
    // All roots distinct, negatives mirrored.
    std::set<Root> uniq(rs.all_roots().begin(), rs.all_roots().end());
    CHECK(static_cast<int>(uniq.size()) == rs.num_roots());
    for (int i = 0; i < rs.num_pos; ++i) {
      CHECK(rs.root(i + rs.num_pos) == -rs.root(i));
      CHECK(rs.negate(i) == i + rs.num_pos);
      CHECK(rs.negate(i + rs.num_pos) == i);
      CHECK(rs.root(i).height() > 0);
    }
    // Sorted by height.
    for (int i = 0; i + 1 < rs.num_pos; ++i) CHECK(rs.height(i) <= rs.height(i + 1));
    // index_of round-trip.
    for (int i = 0; i < rs.num_roots(); ++i) CHECK(rs.index_of(rs.root(i)) == i);
  }
}

TEST_CASE("simple roots, form normalization, and lengths") {
  for (const char* name : {"A3", "B3", "C3", "D4", "E6", "E7"}) {
    CAPTURE(name);
    RootSystem rs = RootSystem::build(parse_lie_type(name));
    Rat longest(0);
    for (int i = 0; i < rs.rank; ++i) {
      int id = rs.simple_id(i);
      CHECK(rs.root(id).height() == 1);
      CHECK(rs.root(id)[i] == 1);
      CHECK(rs.simple_node_of(id) == i);
      longest = std::max(longest, rs.inner(id, id));
    }
    CHECK(longest == Rat(2));  // long roots have square length 2
  }
  RootSystem b3 = RootSystem::build(parse_lie_type("B3"));
  CHECK(b3.inner(b3.simple_id(2), b3.simple_id(2)) == Rat(1));  // short simple root
  CHECK(b3.inner(b3.simple_id(0), b3.simple_id(0)) == Rat(2));
  RootSystem c3 = RootSystem::build(parse_lie_type("C3"));
  CHECK(c3.inner(c3.simple_id(2), c3.simple_id(2)) == Rat(2));  // long simple root
  CHECK(c3.inner(c3.simple_id(0), c3.simple_id(0)) == Rat(1));
}

TEST_CASE("Cartan matrix shape at the asymmetric edge") {
  RootSystem b4 = RootSystem::build(parse_lie_type("B4"));
  CHECK(b4.cartan(3, 2) == -2);  // ⟨α_3, α_4^∨⟩
  CHECK(b4.cartan(2, 3) == -1);
  RootSystem c4 = RootSystem::build(parse_lie_type("C4"));
  CHECK(c4.cartan(2, 3) == -2);  // ⟨α_4, α_3^∨⟩
  CHECK(c4.cartan(3, 2) == -1);
  RootSystem d5 = RootSystem::build(parse_lie_type("D5"));
  CHECK(d5.cartan(2, 4) == -1);  // fork α_3 — α_5
  CHECK(d5.cartan(3, 4) == 0);
  RootSystem e6 = RootSystem::build(parse_lie_type("E6"));
  CHECK(e6.cartan(1, 3) == -1);  // node 2 attaches to node 4
  CHECK(e6.cartan(1, 2) == 0);
  CHECK(e6.cartan(0, 2) == -1);  // chain 1—3
  CHECK(e6.cartan(0, 1) == 0);
}

TEST_CASE("highest roots") {
  auto coeffs = [](const RootSystem& rs) {
    std::vector<int> v;
    const Root& h = rs.root(rs.highest_root_id());
    for (int i = 0; i < rs.rank; ++i) v.push_back(h[i]);
    return v;
  };
  CHECK(coeffs(RootSystem::build(parse_lie_type("A4"))) == std::vector<int>{1, 1, 1, 1});
  CHECK(coeffs(RootSystem::build(parse_lie_type("B3"))) == std::vector<int>{1, 2, 2});
  CHECK(coeffs(RootSystem::build(parse_lie_type("C3"))) == std::vector<int>{2, 2, 1});
  CHECK(coeffs(RootSystem::build(parse_lie_type("D5"))) == std::vector<int>{1, 2, 2, 1, 1});
  CHECK(coeffs(RootSystem::build(parse_lie_type("E6"))) ==
        std::vector<int>{1, 2, 2, 3, 2, 1});
  CHECK(coeffs(RootSystem::build(parse_lie_type("E7"))) ==
        std::vector<int>{2, 2, 3, 4, 3, 2, 1});
}

TEST_CASE("reflections and root strings") {
  for (const char* name : {"A3", "B3", "C3", "D4", "E6"}) {
    CAPTURE(name);
    RootSystem rs = RootSystem::build(parse_lie_type(name));
    for (int b = 0; b < rs.num_roots(); ++b) {
      for (int a = 0; a < rs.num_roots(); ++a) {
        // σ_α is an involution preserving Δ.
        int rb = rs.reflect_id(b, a);
        CHECK(rs.reflect_id(rb, a) == b);
        if (a == b) CHECK(rs.reflect_id(a, a) == rs.negate(a));
        if (rs.negate(a) == b || a == b) continue;
        // p − q = ⟨β, α^∨⟩ (for β ≠ ±α).
        CHECK(rs.string_down(b, a) - rs.string_up(b, a) == rs.pairing(b, a));
        // String length bounded by 3 steps for these types (no G2).
        CHECK(rs.string_down(b, a) + rs.string_up(b, a) <= 3);
      }
    }
  }
}

TEST_CASE("reflect_simple agrees with reflect on root-lattice weights") {
  RootSystem rs = RootSystem::build(parse_lie_type("B3"));
  for (int b = 0; b < rs.num_roots(); ++b) {
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(rs.reflect_simple(rs.root(b), i) == rs.reflect(rs.root(b), rs.root(rs.simple_id(i))));
    }
  }
}

TEST_CASE("invariant form is Weyl-invariant") {
  for (const char* name : {"B3", "C4", "D4", "E6"}) {
    CAPTURE(name);
    RootSystem rs = RootSystem::build(parse_lie_type(name));
    for (int x = 0; x < rs.num_roots(); x += 3) {
      for (int y = 0; y < rs.num_roots(); y += 5) {
        for (int i = 0; i < rs.rank; ++i) {
          Root sx = rs.reflect_simple(rs.root(x), i);
          Root sy = rs.reflect_simple(rs.root(y), i);
          CHECK(rs.inner(sx, sy) == rs.inner(x, y));
        }
      }
    }
  }
}
