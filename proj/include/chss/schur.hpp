#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chss/chevalley.hpp"
#include "chss/chss_space.hpp"
#include "chss/schubert.hpp"
#include "chss/util.hpp"

namespace chss {

// A pair (γ, β) feeding the degree-zero obstruction space and the span
// membership test: γ is the highest root of an irreducible g_{0,0}-piece of
// a graded slice g_{1,c} with c ≤ a (the slices spanning 𝔫_w⁺), β the lowest
// root of a piece of a slice g_{1,b} with b > a (the slices dual to 𝔫_w^⊥),
// and γ−β is not a root.  s = (β−γ)(Z_w) ≥ 1 is the number of degree-one
// lowering steps needed to reach the weight of ξ·v_w from v_w; whenever the
// weight space below is nonzero, β−γ is a sum of s ≥ 2 such steps (an s = 1
// pair would need β−γ itself to be a root, which the pair condition rules
// out), so s = 1 pairs never produce witnesses.
struct PiPair {
  int gamma = 0;  // root id
  int beta = 0;   // root id
  int s = 0;      // grading gap (β−γ)(Z_w)
  friend bool operator==(const PiPair&, const PiPair&) = default;
};

// All such pairs, sorted by (γ, β); empty for cells without a proper
// classification (the point and the full space have no obstruction space).
std::vector<PiPair> pi_set(const ChssSpace& x, Bits w);

// A vector in Λ^{|w|} g_{−1}, stored sparsely.  Each key is a set of
// g₁-positions {p₁ < … < p_k}; the monomial is E_{−μ_{p₁}} ∧ … ∧ E_{−μ_{p_k}}
// with factors in ascending position order.  Every space in the catalog has
// dim g₁ ≤ 31, so a key fits in one Bits word.  Entries are nonzero.
using WedgeVector = std::map<Bits, Rat>;

// The image of the cell's wedge vector v_w = E_{−γ₁} ∧ … ∧ E_{−γ_{|w|}}
// (factors the roots of Δ(w) in ascending position order) under
// ξ = E_{−β} ⊗ E_γ acting as exterior-substitution: ξ·v_w = E_{−β} ∧ (E_γ ⌟
// v_w).  Always a single monomial with coefficient ±1; its weight is
// −⟨w⟩ − (β − γ) where ⟨w⟩ is the sum of the roots of Δ(w).
WedgeVector xi_v(const ChssSpace& x, Bits w, const PiPair& p);

inline constexpr std::uint64_t kDefaultSpanBound = 1'000'000;

// Spanning set of the weight-(−⟨w⟩ − (β−γ)) space of the g₀-submodule of
// Λ^{|w|} g_{−1} generated by v_w: all vectors E_{−φ_s}·…·E_{−φ_1}·v_w over
// ordered sequences (φ_1, …, φ_s) of positive g₀-roots of J-degree one with
// φ_1 + … + φ_s = β − γ.  Branches whose partial image vanishes are pruned;
// `sequences` counts the surviving completed sequences, and the enumeration
// aborts (incomplete `vectors`) once that count exceeds `bound`.  Pass a
// ScaledChevalley to evaluate in a rescaled root-vector basis.
struct SpanSet {
  std::vector<WedgeVector> vectors;  // deduplicated, zero vectors dropped
  std::uint64_t sequences = 0;
  bool aborted = false;
};
SpanSet weight_space_span(const ChssSpace& x, Bits w, const PiPair& p,
                          std::uint64_t bound = kDefaultSpanBound,
                          const ScaledChevalley* cv = nullptr);

enum class Tri { no, yes, indeterminate };

// Verdict of the Schur-rigidity linear test on one cell: `equal == yes`
// means no pair (γ, β) places ξ·v_w inside the weight space above, so the
// Schur system has no extra integral varieties.  A pair that does is a
// witness (`equal == no`).  If some pair's span enumeration aborted and no
// witness was found elsewhere, the verdict is `indeterminate` — never a
// silent yes/no.
struct SchurVerdict {
  Tri equal = Tri::yes;
  std::vector<PiPair> witnesses;  // pairs with ξ·v_w inside the span
  std::vector<PiPair> aborted;    // pairs whose enumeration hit the bound
};
SchurVerdict schur_equal(const ChssSpace& x, Bits w,
                         std::uint64_t span_bound = kDefaultSpanBound,
                         const ScaledChevalley* cv = nullptr);

// Cells for which Λ^{|w|} g_{−1} is an irreducible g₀-module, so the Schur
// system is linearly trivial and the membership verdict carries no geometric
// content: single-root cells, every cell of projective space (type A with an
// end node marked) and of the odd quadric B_n/P_1, and every cell of the
// even quadric D_n/P_1 except the middle-dimensional ones (|w| = n−1).
bool triviality_filter(const ChssSpace& x, Bits w);

// Cross-check of the s = 2 reduction on one cell of a type A, C, or D space
// (throws std::invalid_argument otherwise): the full membership test over
// all pairs must agree with its restriction to pairs with s = 2, and on each
// s = 2 pair the direct linear-algebra verdict must match the closed-form
// root-existence criterion (ξ·v_w lies in the span iff there do NOT exist
// distinct ν, μ ∈ Δ(g_{1,a}) with ν+φ₁ and μ+φ₂ distinct roots, where
// {φ₁, φ₂} is the canonical decomposition of β−γ into J-degree-one roots).
struct ReductionReport {
  int pairs = 0;
  int s2_pairs = 0;
  bool full_member = false;  // some pair witnesses membership
  bool s2_member = false;    // some s = 2 pair witnesses membership
  bool aborted = false;      // some span enumeration hit the bound
  std::vector<PiPair> closed_form_mismatches;
  bool reduction_agrees() const { return full_member == s2_member; }
  bool ok() const {
    return !aborted && reduction_agrees() && closed_form_mismatches.empty();
  }
};
ReductionReport reduction_check(const ChssSpace& x, Bits w,
                                std::uint64_t span_bound = kDefaultSpanBound);

}  // namespace chss
