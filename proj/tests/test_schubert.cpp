#include <map>
#include <set>
#include <utility>
#include <vector>

#include "chss/schubert.hpp"
#include "chss/tables.hpp"
#include "doctest.h"

using namespace chss;

namespace {

ChssSpace make(const char* t, int node) { return ChssSpace::build(parse_lie_type(t), node); }

SchubertDescriptor desc(int a, std::vector<int> J, int dim) {
  return SchubertDescriptor{a, node_set_from(J), dim};
}

using PartitionOfIds = std::set<std::vector<int>>;
PartitionOfIds as_set(const std::vector<std::vector<int>>& parts) {
  return PartitionOfIds(parts.begin(), parts.end());
}

}  // namespace

TEST_CASE("classification of the six cells of Gr(2,4)") {
  ChssSpace x = make("A3", 2);
  // g₁ positions in (height, lex) order: 0 = α₂, 1 = α₂+α₃, 2 = α₁+α₂,
  // 3 = α₁+α₂+α₃.
  REQUIRE(x.g1_root(0) == x.rs().simple_id(1));
  CHECK(classify(x, 0b0000) == desc(0, {}, 0));
  CHECK(classify(x, 0b0001) == desc(0, {1, 3}, 1));
  CHECK(classify(x, 0b0011) == desc(0, {1}, 2));
  CHECK(classify(x, 0b0101) == desc(0, {3}, 2));
  CHECK(classify(x, 0b0111) == desc(1, {1, 3}, 3));
  CHECK(classify(x, 0b1111) == desc(0, {}, 4));
  CHECK_THROWS_AS(classify(x, 0b1000), std::invalid_argument);

  CHECK(desc(0, {1}, 2).smooth());
  CHECK(desc(0, {1}, 2).proper());
  CHECK_FALSE(desc(1, {1, 3}, 3).smooth());
  CHECK_FALSE(desc(0, {}, 4).proper());
}

TEST_CASE("exceptional catalog rows: invariants, dimensions, duals") {
  for (bool seven : {false, true}) {
    ChssSpace x = seven ? make("E7", 7) : make("E6", 6);
    const auto& rows = seven ? exceptional_rows_e7() : exceptional_rows_e6();
    for (const auto& row : rows) {
      CAPTURE(x.name());
      CAPTURE(row.word);
      HasseElt w = delta_from_word(x, parse_word(row.word));
      SchubertDescriptor d = classify(x, w.delta);
      CHECK(d == desc(row.a, row.J, row.dim));
      SchubertDescriptor ds = dual_descriptor(x, d);
      CHECK(ds == desc(row.a_star, row.J_star, x.dim() - row.dim));
      CHECK(classify(x, dual(x, w).delta) == ds);
    }
  }
}

TEST_CASE("a 14-dimensional cell of Gr(5,11)") {
  ChssSpace x = make("A10", 5);
  Bits b = bits_from_aJ(x, 1, node_set_from({1, 3, 7, 10}));
  CHECK(popcount(b) == 14);
  SchubertDescriptor d = classify(x, b);
  CHECK(d == desc(1, {1, 3, 7, 10}, 14));
  CHECK(dual_descriptor(x, d) == desc(2, {2, 4, 6, 9}, 16));

  // Conjugating by the diagram flip lands in Gr(6,11) with reflected J.
  ChssSpace y = make("A10", 6);
  NodePerm flip = diagram_automorphisms(x.type)[1];
  CHECK(conjugate_descriptor(d, flip) == desc(1, {1, 4, 8, 10}, 14));
  CHECK(conjugate_descriptor(dual_descriptor(x, d), flip) == desc(2, {2, 5, 7, 9}, 16));
  HasseElt w{b, popcount(b), {}};
  CHECK(classify(y, conjugate(x, y, flip, w).delta) == desc(1, {1, 4, 8, 10}, 14));
}

TEST_CASE("classification is a bijection onto the realizable invariant pairs") {
  for (auto [t, node] : std::vector<std::pair<const char*, int>>{
           {"A3", 1},
           {"A3", 2},
           {"A4", 2},
           {"A5", 2},
           {"A5", 3},
           {"B3", 1},
           {"B4", 1},
           {"C3", 3},
           {"C4", 4},
           {"C5", 5},
           {"D4", 1},
           {"D5", 1},
           {"D4", 4},
           {"D5", 5},
           {"D5", 4},
           {"D6", 6},
           {"E6", 6},
           {"E7", 7},
       }) {
    CAPTURE(t);
    CAPTURE(node);
    ChssSpace x = make(t, node);
    auto elts = enumerate_hasse(x);

    std::set<std::pair<int, NodeSet>> image;
    for (const auto& w : elts) {
      SchubertDescriptor d = classify(x, w.delta);
      CHECK(d.dim == w.length);
      if (w.length == 0 || w.length == x.dim()) {
        CHECK_FALSE(d.proper());
        continue;
      }
      REQUIRE(d.proper());
      // Injectivity + exact reconstruction from the invariants.
      CHECK(image.insert({d.a, d.J}).second);
      CHECK(bits_from_aJ(x, d.a, d.J) == w.delta);
      // The dual invariants are the invariants of the dual cell, and duality
      // is an involution on descriptors.
      SchubertDescriptor ds = dual_descriptor(x, d);
      CHECK(classify(x, dual_bits(x, w.delta)) == ds);
      CHECK(dual_descriptor(x, ds) == d);
      CHECK(d.dim + ds.dim == x.dim());
    }
    CHECK(image.size() == elts.size() - 2);

    std::set<std::pair<int, NodeSet>> predicted;
    for (NodeSet J = 1; J < (NodeSet(1) << x.rank()); ++J) {
      if (J & ~x.i_p()) continue;
      for (int a = 0; a <= alpha_tilde_zw(x, J); ++a)
        if (is_realizable(x, a, J)) predicted.insert({a, J});
    }
    CHECK(image == predicted);
  }
}

TEST_CASE("highest-root evaluation matches the per-family case formula") {
  for (auto [t, node] : std::vector<std::pair<const char*, int>>{
           {"A5", 3}, {"A6", 2}, {"B4", 1}, {"B5", 1}, {"C4", 4}, {"C5", 5},
           {"D5", 1}, {"D6", 1}, {"D5", 5}, {"D6", 6}, {"D6", 5}}) {
    CAPTURE(t);
    CAPTURE(node);
    ChssSpace x = make(t, node);
    for (NodeSet J = 1; J < (NodeSet(1) << x.rank()); ++J) {
      if (J & ~x.i_p()) continue;
      CHECK(alpha_tilde_zw(x, J) == alpha_tilde_zw_cases(x, J));
    }
  }
}

TEST_CASE("building a cell from its invariants") {
  ChssSpace c3 = make("C3", 3);
  auto r = schubert_from_aJ(c3, 1, node_set_from({2}));
  CHECK(r.canonical_input);
  CHECK(r.canonical == desc(1, {2}, r.w.length));
  CHECK(classify(c3, r.w.delta) == r.canonical);

  ChssSpace d4 = make("D4", 1);
  CHECK(schubert_from_aJ(d4, 1, node_set_from({2})).canonical_input);

  // (1, {2,3}) on the odd quadric is a valid ideal recipe but not the
  // canonical invariants of the cell it builds.
  ChssSpace b3 = make("B3", 1);
  auto nc = schubert_from_aJ(b3, 1, node_set_from({2, 3}));
  CHECK_FALSE(nc.canonical_input);
  CHECK(nc.canonical == desc(0, {3}, 2));
  CHECK(classify(b3, nc.w.delta) == nc.canonical);

  CHECK_THROWS_AS(schubert_from_aJ(c3, 0, node_set_from({3})), std::invalid_argument);
  CHECK_THROWS_AS(schubert_from_aJ(c3, 3, node_set_from({2})), std::invalid_argument);
  CHECK_THROWS_AS(bits_from_aJ(c3, -1, node_set_from({2})), std::invalid_argument);
}

TEST_CASE("realizability spot checks") {
  ChssSpace b4 = make("B4", 1);
  CHECK(is_realizable(b4, 0, node_set_from({2})));
  CHECK(is_realizable(b4, 1, node_set_from({3})));
  CHECK_FALSE(is_realizable(b4, 1, node_set_from({2, 3})));
  CHECK_FALSE(is_realizable(b4, 2, node_set_from({2})));

  ChssSpace c4 = make("C4", 4);
  CHECK(is_realizable(c4, 1, node_set_from({2})));
  CHECK_FALSE(is_realizable(c4, 2, node_set_from({2})));
  CHECK(is_realizable(c4, 1, node_set_from({1, 3})));
  CHECK(is_realizable(c4, 2, node_set_from({1, 3})));

  ChssSpace d6 = make("D6", 6);
  CHECK(is_realizable(d6, 2, node_set_from({2, 4})));
  CHECK(is_realizable(d6, 1, node_set_from({2, 4})));
  CHECK_FALSE(is_realizable(d6, 1, node_set_from({2, 3})));

  ChssSpace e6 = make("E6", 6);
  CHECK(is_realizable(e6, 1, node_set_from({4})));
  CHECK(is_realizable(e6, 0, node_set_from({1})));
}

TEST_CASE("graded pieces split into components matching the connectivity oracle") {
  for (auto [t, node] : std::vector<std::pair<const char*, int>>{
           {"A4", 2}, {"B3", 1}, {"C3", 3}, {"D5", 5}, {"E6", 6}}) {
    CAPTURE(t);
    CAPTURE(node);
    ChssSpace x = make(t, node);
    std::set<NodeSet> seen;
    for (const auto& w : enumerate_hasse(x)) {
      SchubertDescriptor d = classify(x, w.delta);
      if (!d.proper() || !seen.insert(d.J).second) continue;
      // g₁ pieces.
      for (int c = 0; c <= alpha_tilde_zw(x, d.J); ++c) {
        auto comps = g1_components(x, d.J, c);
        std::vector<int> ids;
        for (const auto& comp : comps) ids.insert(ids.end(), comp.begin(), comp.end());
        CHECK(as_set(comps) == as_set(components_by_connectivity(x, d.J, ids)));
        for (const auto& comp : comps) {
          int hi = component_highest(x, d.J, comp);
          int lo = component_lowest(x, d.J, comp);
          CHECK(is_component_highest(x, d.J, hi));
          CHECK(is_component_lowest(x, d.J, lo));
          int n_hi = 0, n_lo = 0;
          for (int id : comp) {
            n_hi += is_component_highest(x, d.J, id) ? 1 : 0;
            n_lo += is_component_lowest(x, d.J, id) ? 1 : 0;
          }
          CHECK(n_hi == 1);
          CHECK(n_lo == 1);
        }
      }
      // g₀ at grade −1: one component per j ∈ J, with highest weight −α_j.
      auto neg = g0_components(x, d.J, -1);
      std::set<int> expected;
      for (int j : nodes_of(d.J)) expected.insert(x.rs().negate(x.rs().simple_id(j - 1)));
      CHECK(neg.size() == expected.size());
      std::set<int> got;
      for (const auto& comp : neg) {
        CHECK(as_set({comp}) ==
              as_set(components_by_connectivity(x, d.J, comp)));
        got.insert(component_highest(x, d.J, comp));
      }
      CHECK(got == expected);
      CHECK_THROWS_AS(g0_components(x, d.J, 0), std::invalid_argument);
    }
  }
}
