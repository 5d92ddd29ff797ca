#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "chss/root_system.hpp"
#include "chss/util.hpp"

namespace chss {

// ---------------------------------------------------------------------------
// Chevalley structure constants N(x,y), defined by [X_x, X_y] = N(x,y)·X_{x+y}
// for roots x, y with x+y a root, together with [X_α, X_{−α}] = H_α (coroot)
// and [H, X_α] = α(H)·X_α.
//
// Sign convention: for each positive non-simple γ, its extraspecial pair is
// the decomposition γ = α + β with α minimal in the (height, lex) root order
// (α is always simple); we set N(α,β) = +(p+1) where p is the largest k with
// β − kα a root.  All other constants follow from antisymmetry, the rule
// N(−x,−y) = −N(x,y), the zero-sum relation
//     N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y)   (x+y+z = 0),
// and the four-term (Jacobi) identity
//     N(x,y)N(x+y,z) + N(y,z)N(y+z,x) + N(z,x)N(z+x,y) = 0.
// ---------------------------------------------------------------------------
class Chevalley {
 public:
  static Chevalley build(std::shared_ptr<const RootSystem> rs);

  const RootSystem& rs() const { return *rs_; }
  std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }

  // N(x,y) for root ids.  Returns 0 when root(x)+root(y) is not a root.
  // Throws internal_error when y = −x (the bracket is a Cartan element).
  int n_const(int x, int y) const {
    if (rs_->negate(x) == y) throw internal_error("n_const on opposite roots");
    return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(2 * rs_->num_pos) +
                  static_cast<std::size_t>(y)];
  }

  // The extraspecial decomposition γ = α + β (ids), γ a positive non-simple
  // root.
  std::pair<int, int> extraspecial(int gamma_id) const;

  // Exhaustive identity checks; throws internal_error on any violation.
  //  * antisymmetry and negation rules on all pairs
  //  * |N(x,y)| = p+1 (root-string length) on all pairs
  //  * coroot Jacobi identity on all zero-sum triples
  //  * four-term identity: full when |Δ⁺| ≤ 40, else `samples` random
  //    triples (seeded, deterministic)
  void verify(std::size_t samples = 200000) const;
  // Four-term identity over all root triples (expensive for E7).
  void verify_four_term_full() const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> table_;  // (2m)² dense, 0 where x+y is not a root

  int& at(int x, int y) {
    return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(2 * rs_->num_pos) +
                  static_cast<std::size_t>(y)];
  }
};

// A rescaled root-vector basis X'_α = λ_α·X_α with λ_{−α} = 1/λ_α (so that
// [X'_α, X'_{−α}] = H_α still holds).  Structure constants become
// N'(x,y) = N(x,y)·λ_x·λ_y/λ_{x+y}.  Used to confirm decision procedures do
// not depend on the sign/scale choices hidden in the Chevalley table.
class ScaledChevalley {
 public:
  // Identity scaling.
  explicit ScaledChevalley(const Chevalley& base);
  // lambda_pos[i] is the scale on positive root id i; must be nonzero.
  ScaledChevalley(const Chevalley& base, std::vector<Rat> lambda_pos);
  // Random ±1 signs on positive roots (deterministic in seed).
  static ScaledChevalley random_signs(const Chevalley& base, uint64_t seed);

  const RootSystem& rs() const { return base_->rs(); }
  const Chevalley& base() const { return *base_; }

  Rat n(int x, int y) const {
    int n0 = base_->n_const(x, y);
    if (n0 == 0) return Rat(0);
    int s = rs().sum_id(x, y);
    return Rat(n0) * lambda_[static_cast<std::size_t>(x)] * lambda_[static_cast<std::size_t>(y)] /
           lambda_[static_cast<std::size_t>(s)];
  }

 private:
  const Chevalley* base_;
  std::vector<Rat> lambda_;  // over all 2m root ids
};

}  // namespace chss
