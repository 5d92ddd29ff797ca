#pragma once

#include <utility>
#include <vector>

#include "chss/chss_space.hpp"
#include "chss/schubert.hpp"

namespace chss {

// ---------------------------------------------------------------------------
// First-order rigidity conditions H₁, H₂ for a proper Schubert cell with
// invariants (𝖺, 𝙹).  Both are decided by pure root arithmetic.
//
// H₁ fails exactly when some pair (β, γ) obstructs: β = α_j with j ∈ 𝙹, and
// γ a component-highest root of g_{1,𝖺}, such that
//     γ − β ∉ Δ,   γ + β ∈ Δ,   { α ∈ Δ(g_{1,𝖺}) : α + β ∈ Δ } = {γ}.
//
// H₂ fails exactly when some pair (ε, γ) obstructs: ε component-highest in
// g_{1,𝖺−1}, γ component-highest in g_{1,𝖺}, such that
//     ε − γ ∈ Δ   and   { α ∈ Δ(g_{1,𝖺}) : ε − α ∈ Δ } = {γ}.
// H₂ is vacuously true when 𝖺 = 0 (there is no g_{1,−1}).
//
// H₊ := H₁ ∧ H₂.  Cells with H₊ are exactly the ones whose first-order
// obstruction spaces vanish; they are catalogued in closed form per family.
// ---------------------------------------------------------------------------

// A failing pair of root ids: (β, γ) for H₁, (ε, γ) for H₂.
using WitnessPair = std::pair<int, int>;

struct RigidityVerdict {
  bool h1 = false;
  bool h2 = false;
  bool h_plus = false;                    // h1 && h2
  std::vector<WitnessPair> h1_witnesses;  // nonempty iff !h1
  std::vector<WitnessPair> h2_witnesses;  // nonempty iff !h2
};

// Decide H₁ / H₂ for a proper cell; std::invalid_argument on improper input
// (the point and the full space carry no verdict).
std::pair<bool, std::vector<WitnessPair>> check_h1(const ChssSpace& x, Bits delta_w);
std::pair<bool, std::vector<WitnessPair>> check_h2(const ChssSpace& x, Bits delta_w);
RigidityVerdict rigidity_verdict(const ChssSpace& x, Bits delta_w);

struct HplusEntry {
  HasseElt elt;
  SchubertDescriptor desc;
  RigidityVerdict verdict;
};

// Verdicts for every proper cell of x, in Hasse enumeration order.
std::vector<HplusEntry> hplus_catalog(const ChssSpace& x);

// Closed-form H₊ predicate on the invariants (𝖺, 𝙹) of a realizable cell of
// a *classical* space; throws std::invalid_argument for exceptional spaces
// (where the catalog itself is the reference) and for non-realizable
// descriptors.
//
// Every applicable formulation is evaluated — the gap conditions on
// 𝙹 ∪ {sentinels}, the orthogonal-set conditions on 𝙳 = 𝙹 ∪ {𝚒} and its
// dual 𝙳* = 𝙹* ∪ {𝚒}, for Grassmannians the partition-multiplicity
// conditions, and for D_n/P_n a second indexing of the gap conditions — and
// they are asserted to agree (std::logic_error otherwise).  The common value
// is returned.
bool closed_form_hplus(const ChssSpace& x, const SchubertDescriptor& d);

// True when no two distinct nodes of S are adjacent in the Dynkin diagram
// (adjacency = nonzero off-diagonal Cartan entry).  Note that in D_n the two
// fork nodes n−1 and n are *not* adjacent: both attach to n−2.
bool orthogonal_nodes(const RootSystem& rs, NodeSet S);

}  // namespace chss
