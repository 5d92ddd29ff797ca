#pragma once

#include <vector>

#include "chss/chss_space.hpp"

namespace chss {

// ---------------------------------------------------------------------------
// The (𝖺, 𝙹) classification of Schubert cells.
//
// For a cell Δ(w) ⊆ Δ(g₁):
//   𝙹(w) = { j ∈ I_𝔭 : ∃α ∈ Δ(w) with α+α_j ∈ Δ(g₁)∖Δ(w) }
//   𝖺(w) = max{ α(Z_𝙹) : α ∈ Δ(w) }        (0 when Δ(w) = ∅)
// and the cell is recovered as Δ(w) = { α ∈ Δ(g₁) : α(Z_𝙹) ≤ 𝖺 }.
// Improper cells (point, full space) get (0, ∅).
// ---------------------------------------------------------------------------
struct SchubertDescriptor {
  int a = 0;
  NodeSet J = 0;
  int dim = 0;

  bool smooth() const { return a == 0; }
  bool proper() const { return J != 0; }
  friend bool operator==(const SchubertDescriptor& x, const SchubertDescriptor& y) {
    return x.a == y.a && x.J == y.J && x.dim == y.dim;
  }
};

SchubertDescriptor classify(const ChssSpace& x, Bits delta_w);

// The unique ideal with the given invariants: Δ = {α ∈ Δ(g₁) : α(Z_J) ≤ a}.
Bits bits_from_aJ(const ChssSpace& x, int a, NodeSet J);

struct AJBuildResult {
  HasseElt w;
  SchubertDescriptor canonical;  // classify(w.delta)
  bool canonical_input = false;  // canonical matches the requested (a, J)
};
// Build the cell for (a, J).  Succeeds for any 0 ≤ a ≤ α̃(Z_J); when (a, J)
// is not realizable the result reports canonical_input = false and carries
// the canonical descriptor of the constructed cell.
AJBuildResult schubert_from_aJ(const ChssSpace& x, int a, NodeSet J);

// Does some (necessarily unique) proper cell have invariants exactly (a, J)?
// Classical families are decided by closed-form row predicates; E6/E7 by
// membership in the classified enumeration.
bool is_realizable(const ChssSpace& x, int a, NodeSet J);

// α̃(Z_J) for the highest root α̃ (evaluated from its coefficients).
int alpha_tilde_zw(const ChssSpace& x, NodeSet J);
// The same number from the per-family case list (classical families only;
// used as a cross-check).
int alpha_tilde_zw_cases(const ChssSpace& x, NodeSet J);

// Poincaré-dual invariants: 𝖺* = α̃(Z_J) − 𝖺 − 1, 𝙹* = {j* : j ∈ 𝙹}.
// Requires a proper descriptor.
SchubertDescriptor dual_descriptor(const ChssSpace& x, const SchubertDescriptor& d);

// Conjugate invariants under a diagram automorphism: (𝖺, φ(𝙹)).
SchubertDescriptor conjugate_descriptor(const SchubertDescriptor& d, const NodePerm& phi);

// ---------------------------------------------------------------------------
// Irreducible g_{0,0}-submodules of the Z_J-graded pieces.
//
// The piece g_{1,c} (roots of Δ(g₁) with α(Z_J) = c) splits into components;
// roots belong to the same component exactly when they share the full
// per-node signature (α(Z_j))_{j∈J}.  An independent characterization —
// connectivity under α ↦ α ± α_k for k ∈ I_𝔭∖J — is provided as an oracle.
// ---------------------------------------------------------------------------

// Components of g_{1,c}, each a sorted list of root ids; deterministic order.
std::vector<std::vector<int>> g1_components(const ChssSpace& x, NodeSet J, int c);
// Components of g_{0,c} for c ≠ 0 (root ids from Δ(g₀), either sign).
std::vector<std::vector<int>> g0_components(const ChssSpace& x, NodeSet J, int c);
// Oracle: partition of `root_ids` into classes connected by ±α_k moves,
// k ∈ I_𝔭∖J, staying inside `root_ids`.
std::vector<std::vector<int>> components_by_connectivity(const ChssSpace& x, NodeSet J,
                                                         std::vector<int> root_ids);

// Extremal vectors of a component: no raise (resp. lower) by α_k, k ∈ I_𝔭∖J,
// stays in the root system.
bool is_component_highest(const ChssSpace& x, NodeSet J, int root_id);
bool is_component_lowest(const ChssSpace& x, NodeSet J, int root_id);
// The unique extremal root of a component (throws if not unique).
int component_highest(const ChssSpace& x, NodeSet J, const std::vector<int>& component);
int component_lowest(const ChssSpace& x, NodeSet J, const std::vector<int>& component);

}  // namespace chss
