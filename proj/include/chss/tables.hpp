#pragma once

#include <string>
#include <vector>

#include "chss/chss_space.hpp"

namespace chss {

// One row of the exceptional-space catalogs: a Schubert cell given by a
// reduced word together with its invariants and those of its Poincaré dual.
// The listed cells are exactly the proper cells satisfying the first-order
// rigidity condition H₊ (checked end-to-end by the test suite).
struct ExceptionalRow {
  std::string word;  // digit word; leftmost reflection applied first
  int a = 0;
  std::vector<int> J;
  int dim = 0;
  int a_star = 0;
  std::vector<int> J_star;
};

// E6/P6 — 6 rows.
const std::vector<ExceptionalRow>& exceptional_rows_e6();
// E7/P7 — 12 rows.
const std::vector<ExceptionalRow>& exceptional_rows_e7();

// Suit ↔ (𝗉, 𝗊) dictionary for Grassmannian cells: a partition of suit `suit`
// and invariant 𝖺 has 𝗉 = |𝙹| = 2𝖺 + p_offset and 𝗊 = #{𝚓 ∈ 𝙹 : 𝚓 < 𝚒} =
// 𝖺 + q_offset.
struct SuitRow {
  int suit;  // matches the Suit enumeration order: spade, heart, diamond, club
  int p_offset;
  int q_offset;
};
const std::vector<SuitRow>& suit_rows();

// Smooth Schubert varieties satisfying H₊, as row predicates on the
// invariants (𝖺 = 0 forced by smoothness; the rows constrain 𝙹).
bool golden_smooth_hplus(const ChssSpace& x, int a, NodeSet J);

// ---------------------------------------------------------------------------
// Table reproduction: regenerate each catalog from first principles and diff
// it against the frozen rows above (and, for the predicate tables, against
// the closed-form classifiers).  A clean run returns no diffs.
// ---------------------------------------------------------------------------

enum class TableId { bigone, suit, e6, e7, sm, hplus };

TableId parse_table_id(const std::string& s);  // case-insensitive; throws
const char* table_id_name(TableId id);

struct TableCheck {
  TableId id{};
  std::string rendered;            // markdown rendering of the regenerated table
  std::vector<std::string> diffs;  // cell-level mismatches (empty on success)
  bool match() const { return diffs.empty(); }
};

TableCheck run_table(TableId id, int jobs = 1);

}  // namespace chss
