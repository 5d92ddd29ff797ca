#pragma once

#include <array>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chss/chss_space.hpp"
#include "chss/linalg.hpp"
#include "chss/root_system.hpp"
#include "chss/schubert.hpp"
#include "chss/util.hpp"

namespace chss {

// ---------------------------------------------------------------------------
// First-order deformation complex of a cell.
//
// For a proper cell w the ambient algebra splits into the stabilizer-side
// subalgebra and its complement
//
//   g_w^⊥ = 𝔫_w^⊥ ⊕ g_{0,<0} ⊕ g_{1,<a},   𝔫_w = {E_{−α} : α ∈ Δ(w)},
//
// and the cochain spaces are C^k = g_w^⊥ ⊗ Λ^k 𝔫_w^*.  A basis cochain is
// X_z ⊗ f_S where z is a root of g_w^⊥ and S ⊂ Δ(w) selects the wedge of the
// duals f_α of the basis vectors E_{−α} of 𝔫_w.  The differential is the
// Lie algebra cohomology differential of 𝔫_w with values in g_w^⊥ (bracket
// term absent: 𝔫_w is abelian); its adjoint is computed through the pairing
// f_α ↔ c_α⁻¹ E_α with c_ρ = 2/(ρ,ρ), which realizes Λ𝔫_w^* inside Λg.
// Both maps preserve weights, so every kernel computation decomposes into
// small exact blocks indexed by the cochain weight.
// ---------------------------------------------------------------------------

// Basis cochain X_z ⊗ f_S: `z` is a root id of g_w^⊥; `s` holds k set bits
// selecting positions in CochainComplex::dw() (the ascending roots of Δ(w)).
struct CochainLabel {
  int z = 0;
  Bits s = 0;
  friend bool operator==(const CochainLabel&, const CochainLabel&) = default;
};

// Sparse column: (row index, coefficient), rows ascending.
using SparseCol = std::vector<std::pair<int, Rat>>;

class CochainComplex {
 public:
  // Throws std::invalid_argument if the cell has no proper classification.
  CochainComplex(const ChssSpace& x, Bits w);

  const ChssSpace& space() const { return x_; }
  Bits cell() const { return w_; }
  const SchubertDescriptor& descriptor() const { return desc_; }

  // Δ(w) as ascending root ids; position p stands for the dual f of E_{−dw[p]}.
  const std::vector<int>& dw() const { return dw_; }
  // Roots of g_w^⊥, ascending ids.
  const std::vector<int>& perp_roots() const { return perp_; }
  bool in_perp(int root_id) const { return in_perp_[static_cast<std::size_t>(root_id)] != 0; }

  // Basis labels of C^k, k ∈ {0,1,2}.
  const std::vector<CochainLabel>& labels(int k) const { return labels_[static_cast<std::size_t>(k)]; }
  int label_index(int k, const CochainLabel& l) const;  // −1 if absent

  // Weight of X_z ⊗ f_S (z plus the selected Δ(w) roots), as a coefficient
  // vector over the simple roots; and the two grading functionals of it.
  Root weight_of(const CochainLabel& l) const;
  int zi_of(const Root& weight) const { return weight[x_.node0()]; }
  int zw_of(const Root& weight) const;

  // Diagonal of the invariant positive form: ⟨X_z⊗f_S, X_z⊗f_S⟩ = c_z·∏_{β∈S} c_β⁻¹.
  Rat gram_of(const CochainLabel& l) const;

  // Differential ∂_k : C^k → C^{k+1} (k ∈ {0,1}) as a sparse column.
  SparseCol d(int k, int col) const;
  // Adjoint ∂*_k : C^k → C^{k−1} (k ∈ {1,2}).
  SparseCol dstar(int k, int col) const;
  // Raising action of the simple root vector at `node` ∈ I_𝔭 on C^k
  // (module part bracket-then-project, coadjoint part on each wedge factor).
  SparseCol raise(int k, int node, int col) const;

 private:
  ChssSpace x_;
  Bits w_ = 0;
  SchubertDescriptor desc_;
  std::vector<int> dw_;
  std::vector<int> perp_;
  std::vector<char> in_perp_;
  std::array<std::vector<CochainLabel>, 3> labels_;
  std::array<std::unordered_map<uint64_t, int>, 3> index_;
};

// One weight block of the harmonic space 𝓗¹ = ker ∂¹ ∩ ker ∂*¹.
struct HarmonicBlock {
  Root weight;
  int zi = 0;  // weight against Z_i
  int zw = 0;  // weight against Z_w = Σ_{j∈J} Z_j
  std::vector<int> frame;                 // C¹ label indices carrying this weight
  std::vector<std::vector<Rat>> basis;    // harmonic vectors, coordinates over `frame`
  int dim() const { return static_cast<int>(basis.size()); }
};

struct Harmonics1 {
  std::vector<HarmonicBlock> blocks;  // nonzero blocks, ascending weight
  int total_dim() const;
  int dim_at(int zi, int zw) const;
};

// Full harmonic space, one exact kernel per weight.
Harmonics1 harmonic1(const CochainComplex& cx);
// Restriction to one Z_i-degree, resp. one (Z_i, Z_w)-bidegree.
Harmonics1 harmonic1_degree(const CochainComplex& cx, int zi);
Harmonics1 harmonic1_bidegree(const CochainComplex& cx, int zi, int zw);

// Dimensions of the two obstruction blocks: bidegrees (1, a−1) and (2, 2a−1).
int h1_block_dim(const ChssSpace& x, Bits w);
int h2_block_dim(const ChssSpace& x, Bits w);
// Vanishing verdicts used as the oracle for the combinatorial tests.
bool laplacian_h1(const ChssSpace& x, Bits w);
bool laplacian_h2(const ChssSpace& x, Bits w);

// Cross-check of the combinatorial first-order tests against the harmonic
// oracle.  The first test must agree unconditionally; the second is only
// asserted when the first holds (its combinatorial form presupposes that).
// Disagreement throws internal_error.
struct HEquivalenceReport {
  SchubertDescriptor desc;
  bool comb_h1 = false;
  bool lap_h1 = false;
  bool comb_h2 = false;
  bool lap_h2 = false;
  bool h2_checked = false;
  bool h1_agree = false;
  bool h2_agree = false;
  bool ok() const { return h1_agree && h2_agree; }
};
HEquivalenceReport verify_h_equivalences(const ChssSpace& x, Bits w);

// Highest weights (with multiplicity, ascending) of the Z_i-degree-0 part of
// 𝓗¹: per weight block, the joint kernel of the raising maps for all simple
// roots of g_{0,0} (nodes I_𝔭 ∖ J).  Improper cells have no obstruction
// space and yield the empty list.
std::vector<Root> h1_degree0_summands(const ChssSpace& x, Bits w);

// Dense assemblies for property checks on small cells.
RatMat dense_d(const CochainComplex& cx, int k);      // k ∈ {0,1}
RatMat dense_dstar(const CochainComplex& cx, int k);  // k ∈ {1,2}
std::vector<Rat> gram_diagonal(const CochainComplex& cx, int k);

}  // namespace chss
