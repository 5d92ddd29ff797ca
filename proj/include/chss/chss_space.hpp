#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chss/chevalley.hpp"
#include "chss/root_system.hpp"
#include "chss/util.hpp"

namespace chss {

// A set of Dynkin-diagram nodes; bit j−1 stands for the (1-based) node j.
using NodeSet = uint32_t;

NodeSet node_set_from(const std::vector<int>& nodes);
std::vector<int> nodes_of(NodeSet s);
std::string node_set_str(NodeSet s);  // "{1,3,7}" or "{}"

// A node relabeling (diagram automorphism): perm[j] is the image of node j,
// entries 1..rank used, index 0 unused.
using NodePerm = std::vector<int>;

// ---------------------------------------------------------------------------
// An irreducible compact Hermitian symmetric space G/P_𝚒: a simple Lie
// algebra with one marked node whose induced grading is g₋₁ ⊕ g₀ ⊕ g₁.
// Supported spaces:
//   A_n/P_𝚒 (any 𝚒) — Gr(𝚒, n+1)          B_n/P_1 — odd quadric
//   C_n/P_n — Lagrangian Grassmannian       D_n/P_1 — even quadric
//   D_n/P_{n−1}, D_n/P_n — spinor variety   E6/P_1, E6/P_6 — Cayley plane
//   E7/P_7 — Freudenthal variety
// ---------------------------------------------------------------------------
class ChssSpace {
 public:
  static bool is_chss(LieType t, int node);  // node is 1-based
  static ChssSpace build(LieType t, int node);

  LieType type{};
  int node = 0;  // 1-based marked node 𝚒

  const RootSystem& rs() const { return *rs_; }
  std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
  const Chevalley& chev() const { return *chev_; }
  int rank() const { return type.rank; }
  int node0() const { return node - 1; }
  std::string name() const;        // "A10/P5"
  std::string model_name() const;  // "Gr(5,11)", "Q7", "LG(3,6)", ...

  // Δ(g₁), ordered by the ambient (height, lex) root order; `pos` below
  // always refers to an index into this list (= a bit in a cell bitset).
  int num_g1() const { return static_cast<int>(g1_ids_.size()); }
  int dim() const { return num_g1(); }
  int g1_root(int pos) const { return g1_ids_[static_cast<std::size_t>(pos)]; }
  int g1_pos(int root_id) const { return g1_pos_of_id_[static_cast<std::size_t>(root_id)]; }
  Bits all_bits() const { return num_g1() >= 32 ? ~Bits(0) : ((Bits(1) << num_g1()) - 1); }

  // α(Z_𝚒): the grading by the marked node (coefficient of α_𝚒).
  int zi(int root_id) const { return rs_->root(root_id)[node0()]; }
  // α(Z_J) = Σ_{j∈J} (coefficient of α_j).
  int zj(int root_id, NodeSet J) const;

  NodeSet i_p() const;  // the unmarked nodes I_𝔭

  // Covering relation of Δ(g₁): α ⋖ α+α_j (positions).
  const std::vector<std::vector<int>>& lower_covers() const { return lower_covers_; }
  const std::vector<std::vector<int>>& upper_covers() const { return upper_covers_; }

  // Longest element of the parabolic Weyl group W_𝔭 = ⟨σ_j : j ≠ 𝚒⟩, as a
  // permutation of root ids.
  int w0p_apply(int root_id) const { return w0p_[static_cast<std::size_t>(root_id)]; }
  Root w0p_apply(const Root& a) const;
  // The induced involution j ↦ j* of the unmarked nodes: α_{j*} = −w⁰_𝔭(α_j).
  int star_node(int j) const;  // 1-based in, 1-based out

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::shared_ptr<const Chevalley> chev_;
  std::vector<int> g1_ids_;
  std::vector<int> g1_pos_of_id_;
  std::vector<std::vector<int>> lower_covers_, upper_covers_;
  std::vector<int> w0p_;
};

// ---------------------------------------------------------------------------
// Hasse diagram: the Schubert cells of a CHSS, one per lower order ideal of
// Δ(g₁).  The bitset over g₁ positions is the canonical representation.
// ---------------------------------------------------------------------------
struct HasseElt {
  Bits delta = 0;
  int length = 0;
  std::vector<int> word;  // optional reduced word (1-based), as given by caller
};

// Is `s` a lower order ideal of Δ(g₁)?
bool is_ideal(const ChssSpace& x, Bits s);

// All lower order ideals, sorted by (length, bit value).  BFS over the cover
// relation.
std::vector<HasseElt> enumerate_hasse(const ChssSpace& x);

// Test oracle: filter all 2^N subsets by the ideal property (N ≤ 20).
std::vector<Bits> enumerate_ideals_brute(const ChssSpace& x);

// Δ(w) = wΔ⁻ ∩ Δ⁺ for w = σ_{word[0]} σ_{word[1]} ⋯ (letters 1-based, leftmost
// applied last ... i.e. w acts as the composition read left-to-right).
// Throws std::invalid_argument if the result is not contained in Δ(g₁)
// (the word does not represent a minimal coset representative).
HasseElt delta_from_word(const ChssSpace& x, const std::vector<int>& word);

// Parse a reflection word: "65432413" (one digit per letter) or
// "7,6,5" / "7 6 5" (multi-digit letters).
std::vector<int> parse_word(const std::string& s);

// Poincaré dual cell: Δ(w*) = w⁰_𝔭(Δ(g₁) ∖ Δ(w)).
HasseElt dual(const ChssSpace& x, const HasseElt& w);
Bits dual_bits(const ChssSpace& x, Bits delta_w);

// Diagram automorphisms of the Dynkin diagram as node permutations (the
// identity always included; 𝔖₃ for D4, ℤ₂ for A_n (n≥2), D_n (n>4), E6).
std::vector<NodePerm> diagram_automorphisms(LieType t);

// φ-conjugate cell: lives on the CHSS with marked node φ(𝚒);
// Δ(w') = φ(Δ(w)).  `dst` must be the space (same type, node φ(𝚒)).
HasseElt conjugate(const ChssSpace& src, const ChssSpace& dst, const NodePerm& phi,
                   const HasseElt& w);

}  // namespace chss
