// Reviewed reference data.  Keep this file free of any logic beyond literal
// row predicates: rows are transcribed once and consumed by tests and the
// `tables` command.

#include "chss/tables.hpp"

#include "chss/partitions.hpp"

namespace chss {

const std::vector<ExceptionalRow>& exceptional_rows_e6() {
  static const std::vector<ExceptionalRow> rows = {
      {"6542", 0, {3}, 4, 1, {3}},
      {"65431", 0, {2}, 5, 1, {5}},
      {"65432413", 1, {4}, 8, 1, {4}},
      {"65432456", 0, {1}, 8, 0, {1}},
      {"65432451342", 1, {5}, 11, 0, {2}},
      {"654324561345", 1, {3}, 12, 0, {3}},
  };
  return rows;
}

const std::vector<ExceptionalRow>& exceptional_rows_e7() {
  static const std::vector<ExceptionalRow> rows = {
      {"76542", 0, {3}, 5, 2, {5}},
      {"765431", 0, {2}, 6, 1, {2}},
      {"765432413", 1, {4}, 9, 2, {4}},
      {"7654324567", 0, {1}, 10, 1, {6}},
      {"765432451342", 1, {5}, 12, 1, {3}},
      {"7654324561345", 2, {3, 6}, 13, 2, {1, 5}},
      {"76543245671342", 2, {1, 5}, 14, 2, {3, 6}},
      {"765432456713456", 1, {3}, 15, 1, {5}},
      {"76543245613452431", 1, {6}, 17, 0, {1}},
      {"765432456713456245", 2, {4}, 18, 1, {4}},
      {"765432456713456245342", 1, {2}, 21, 0, {2}},
      {"7654324567134562453413", 2, {5}, 22, 0, {3}},
  };
  return rows;
}

const std::vector<SuitRow>& suit_rows() {
  // (𝗉, 𝗊) = (2𝖺 + p_offset, 𝖺 + q_offset) per suit.
  static const std::vector<SuitRow> rows = {
      {static_cast<int>(Suit::Spade), 2, 1},
      {static_cast<int>(Suit::Heart), 1, 1},
      {static_cast<int>(Suit::Diamond), 1, 0},
      {static_cast<int>(Suit::Club), 0, 0},
  };
  return rows;
}

bool golden_smooth_hplus(const ChssSpace& x, int a, NodeSet J) {
  if (a != 0) return false;  // smooth cells have 𝖺 = 0
  const int n = x.type.rank;
  const int i = x.node;
  const std::vector<int> js = nodes_of(J);
  switch (x.type.family) {
    case Family::A: {
      if (i == 1 || i == n) return false;  // projective space: no proper row
      // Maximal linear subspaces: 𝙹 = {𝚒−1} or {𝚒+1}.
      if (js.size() == 1 && (js[0] == i - 1 || js[0] == i + 1)) return true;
      // Sub-Grassmannians: 𝙹 = {𝚓₁, 𝚓₂} with 𝚒 − 𝚓₁ > 1 and 𝚓₂ − 𝚒 > 1,
      // where a missing endpoint defaults to the sentinel 𝚓₁ = 0 / 𝚓₂ = n+1.
      if (js.empty() || js.size() > 2) return false;
      int j1 = 0, j2 = n + 1;
      for (int j : js) (j < i ? j1 : j2) = j;
      if (js.size() == 2 && !(js[0] < i && i < js[1])) return false;
      return i - j1 > 1 && j2 - i > 1;
    }
    case Family::B:
      return false;  // odd quadric: no proper cell satisfies H₊
    case Family::C:
      // Linear spaces ℙ^𝚓 in the Lagrangian Grassmannian.
      return js.size() == 1 && js[0] < n - 1;
    case Family::D:
      if (i == 1) {
        // Even quadric: the two rulings of maximal linear spaces.
        return js.size() == 1 && (js[0] == n - 1 || js[0] == n);
      }
      // Spinor variety: one singleton row per node except n−2.
      return js.size() == 1 && js[0] <= n - 1 && js[0] != n - 2;
    case Family::E6:
    case Family::E7:
      return js.size() == 1 && js[0] <= 3;
  }
  return false;
}

}  // namespace chss
