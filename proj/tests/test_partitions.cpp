#include <algorithm>
#include <set>
#include <vector>

#include "chss/partitions.hpp"
#include "doctest.h"

using namespace chss;

namespace {

ChssSpace make(const char* t, int node) { return ChssSpace::build(parse_lie_type(t), node); }

Partition pp(int i, int n_plus_1, const std::vector<int>& parts) {
  return partition_from_parts(i, n_plus_1, parts);
}

// Independent transpose: column lengths of the diagram.
Partition transpose_oracle(const Partition& pi) {
  std::vector<int> parts = pi.parts(), out;
  for (int c = 1; !parts.empty() && c <= parts[0]; ++c) {
    int count = 0;
    for (int p : parts) count += (p >= c) ? 1 : 0;
    out.push_back(count);
  }
  return pp(pi.width(), pi.n_plus_1, out);
}

// Independent complement: box minus diagram, rotated half a turn.
Partition complement_oracle(const Partition& pi) {
  std::vector<int> padded = pi.parts();
  padded.resize(static_cast<std::size_t>(pi.height()), 0);
  std::vector<int> out;
  for (int k = pi.height() - 1; k >= 0; --k)
    out.push_back(pi.width() - padded[static_cast<std::size_t>(k)]);
  return pp(pi.i, pi.n_plus_1, out);
}

SchubertDescriptor desc(int a, std::vector<int> J, int dim) {
  return SchubertDescriptor{a, node_set_from(J), dim};
}

}  // namespace

TEST_CASE("construction, parsing and printing") {
  Partition pi = pp(5, 11, {6, 4, 4, 1, 1, 0, 0});
  CHECK(pi.runs == std::vector<std::pair<int, int>>{{6, 1}, {4, 2}, {1, 2}});
  CHECK(pi.size() == 16);
  CHECK(pi.num_rows() == 5);
  CHECK(pi.parts() == std::vector<int>{6, 4, 4, 1, 1});
  CHECK(partition_str(pi) == "6 4^2 1^2");
  CHECK(parse_partition(5, 11, "6,4,4,1,1") == pi);
  CHECK(parse_partition(5, 11, "6 4^2 1^2") == pi);
  CHECK(parse_partition(5, 11, "0") == pp(5, 11, {}));
  CHECK(parse_partition(5, 11, "") == pp(5, 11, {}));
  CHECK(partition_str(pp(5, 11, {})) == "0");
  CHECK(pp(2, 4, {2, 2}).full_rectangle());

  CHECK_THROWS_AS(pp(5, 11, {4, 6}), std::invalid_argument);    // increasing
  CHECK_THROWS_AS(pp(5, 11, {7}), std::invalid_argument);       // too wide
  CHECK_THROWS_AS(pp(2, 4, {2, 1, 1}), std::invalid_argument);  // too tall
  CHECK_THROWS_AS(pp(0, 4, {}), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition(5, 11, "6 4^x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition(5, 11, "banana"), std::invalid_argument);
}

TEST_CASE("the running quadruple in the 5x6 box") {
  Partition pi = parse_partition(5, 11, "6 4^2 1^2");
  CHECK(dual(pi) == parse_partition(5, 11, "5^2 2^2"));
  CHECK(conjugate(pi) == parse_partition(6, 11, "5 3^3 1^2"));
  CHECK(conjugate(dual(pi)) == parse_partition(6, 11, "4^2 2^3"));

  CHECK(suit_of(pi) == Suit::Spade);
  CHECK(suit_of(conjugate(pi)) == Suit::Spade);
  CHECK(suit_of(dual(pi)) == Suit::Club);
  CHECK(suit_of(conjugate(dual(pi))) == Suit::Club);
  CHECK(suit_name(Suit::Heart) == "heart");
}

TEST_CASE("conjugate and dual identities over exhaustive small boxes") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      auto all = enumerate_partitions(i, n + 1);
      for (const Partition& pi : all) {
        Partition conj = conjugate(pi), star = dual(pi);
        CHECK(conj == transpose_oracle(pi));
        CHECK(star == complement_oracle(pi));
        CHECK(conjugate(conj) == pi);
        CHECK(dual(star) == pi);
        CHECK(conjugate(star) == dual(conj));
        CHECK(conj.size() == pi.size());
        CHECK(pi.size() + star.size() == i * (n + 1 - i));
        // Suit behavior: transposing swaps ♥ ↔ ♦; complementing swaps ♠ ↔ ♣.
        Suit s = suit_of(pi);
        Suit expect_conj = s == Suit::Heart    ? Suit::Diamond
                           : s == Suit::Diamond ? Suit::Heart
                                                : s;
        Suit expect_star = s == Suit::Spade  ? Suit::Club
                           : s == Suit::Club ? Suit::Spade
                                             : s;
        CHECK(suit_of(conj) == expect_conj);
        CHECK(suit_of(star) == expect_star);
      }
    }
  }
}

TEST_CASE("invariants of named partitions") {
  CHECK(aJ_from_partition(parse_partition(5, 11, "6 4^2 1^2")) == desc(1, {1, 3, 7, 10}, 14));
  // One row filling the box: the previous hyperplane-section cell.
  CHECK(aJ_from_partition(parse_partition(3, 6, "3")) == desc(0, {1}, 6));
  // One short row.
  CHECK(aJ_from_partition(parse_partition(3, 6, "2")) == desc(1, {1, 4}, 7));
  CHECK(aJ_from_partition(parse_partition(2, 4, "1")) == desc(1, {1, 3}, 3));
  // Improper cells carry no invariants.
  CHECK(aJ_from_partition(parse_partition(2, 4, "0")) == desc(0, {}, 4));
  CHECK(aJ_from_partition(parse_partition(2, 4, "2^2")) == desc(0, {}, 0));
}

TEST_CASE("partition dictionary matches the Hasse-level classification") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      ChssSpace x = make(("A" + std::to_string(n)).c_str(), i);
      ChssSpace xc = make(("A" + std::to_string(n)).c_str(), n + 1 - i);
      NodePerm flip = diagram_automorphisms(x.type).back();
      auto all = enumerate_partitions(i, n + 1);
      auto hasse = enumerate_hasse(x);
      REQUIRE(all.size() == hasse.size());

      std::set<Bits> cells;
      for (const Partition& pi : all) {
        Bits b = bits_from_partition(x, pi);
        CHECK(cells.insert(b).second);
        SchubertDescriptor d = aJ_from_partition(pi);
        CHECK(d == classify(x, b));
        CHECK(partition_from_bits(x, b) == pi);
        // The dual partition indexes the dual cell; the conjugate partition
        // indexes the conjugate cell on the mirrored marking.
        CHECK(bits_from_partition(x, dual(pi)) == dual_bits(x, b));
        HasseElt w{b, popcount(b), {}};
        CHECK(bits_from_partition(xc, conjugate(pi)) == conjugate(x, xc, flip, w).delta);
        if (d.proper()) {
          CHECK(partition_from_aJ(x, d.a, d.J) == pi);
          CHECK(aJ_from_partition(dual(pi)) == dual_descriptor(x, d));
          CHECK(aJ_from_partition(conjugate(pi)) == conjugate_descriptor(d, flip));
          // Suit against the shape of the invariants: p = |J|, q = #{j < 𝚒}.
          int p = popcount(d.J), q = 0;
          for (int j : nodes_of(d.J)) q += (j < i) ? 1 : 0;
          switch (suit_of(pi)) {
            case Suit::Spade: CHECK((p == 2 * d.a + 2 && q == d.a + 1)); break;
            case Suit::Heart: CHECK((p == 2 * d.a + 1 && q == d.a + 1)); break;
            case Suit::Diamond: CHECK((p == 2 * d.a + 1 && q == d.a)); break;
            case Suit::Club: CHECK((p == 2 * d.a && q == d.a)); break;
          }
        }
      }
      std::set<Bits> from_hasse;
      for (const auto& w : hasse) from_hasse.insert(w.delta);
      CHECK(cells == from_hasse);
    }
  }
}

TEST_CASE("round-trip through invariants on the 3x5 box") {
  ChssSpace x = make("A7", 3);
  for (const Partition& pi : enumerate_partitions(3, 8)) {
    SchubertDescriptor d = aJ_from_partition(pi);
    if (d.proper()) CHECK(partition_from_aJ(x, d.a, d.J) == pi);
  }
  // The cell with invariants (0, {𝚒−1}) is cut out by a coordinate subspace:
  // its partition stacks full-width rows.
  Partition col = partition_from_aJ(x, 0, node_set_from({2}));
  CHECK(col == parse_partition(3, 8, "5^2"));
  CHECK(aJ_from_partition(col) == desc(0, {2}, 5));
}

TEST_CASE("rejected inversions") {
  ChssSpace a3 = make("A3", 2);
  CHECK_THROWS_AS(partition_from_aJ(a3, 1, node_set_from({1})), std::invalid_argument);
  CHECK_THROWS_AS(partition_from_aJ(a3, 0, 0), std::invalid_argument);
  ChssSpace c3 = make("C3", 3);
  CHECK_THROWS_AS(partition_from_aJ(c3, 1, node_set_from({2})), std::invalid_argument);
  CHECK_THROWS_AS(bits_from_partition(a3, pp(2, 5, {1})), std::invalid_argument);
}

TEST_CASE("graded components of the 14-dimensional example cell") {
  ChssSpace x = make("A10", 5);
  NodeSet J = node_set_from({1, 3, 7, 10});
  auto dims = [&](int c) {
    std::multiset<std::size_t> out;
    for (const auto& comp : g1_components(x, J, c)) out.insert(comp.size());
    return out;
  };
  CHECK(dims(0) == std::multiset<std::size_t>{4});
  CHECK(dims(1) == std::multiset<std::size_t>{4, 6});
}
