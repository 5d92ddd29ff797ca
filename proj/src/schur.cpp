#include "chss/schur.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

namespace chss {

namespace {

// Row-echelon accumulator over sparse wedge vectors.  Each stored row is
// normalized to leading coefficient 1 at its pivot, the smallest key, so
// reducing against a row only touches keys at or above the pivot.
class SparseBasis {
 public:
  void reduce(WedgeVector& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      if (it->second == 0) {
        it = v.erase(it);
        continue;
      }
      const auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Bits pivot = it->first;
      const Rat c = it->second;
      for (const auto& [k, coef] : row->second) v[k] -= c * coef;
      it = v.erase(v.find(pivot));  // coefficient is now exactly zero
    }
  }

  // Returns true when v is independent of the rows seen so far.
  bool insert(WedgeVector v) {
    reduce(v);
    for (auto it = v.begin(); it != v.end();)
      it = (it->second == 0) ? v.erase(it) : std::next(it);
    if (v.empty()) return false;
    const Rat lead = v.begin()->second;
    for (auto& [k, c] : v) c /= lead;
    const Bits pivot = v.begin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(WedgeVector v) const {
    reduce(v);
    for (const auto& [k, c] : v)
      if (c != 0) return false;
    return true;
  }

 private:
  std::map<Bits, WedgeVector> rows_;
};

// The action of the g₀ lowering operator E_{−φ} (φ a positive g₀-root of
// J-degree one) on Λ^k g_{−1} as a derivation: in each monomial, each factor
// E_{−μ} maps to N(−φ,−μ)·E_{−(φ+μ)} when φ+μ is a root, with the sign of
// re-sorting the moved factor back into ascending position order.
WedgeVector apply_lowering(const ChssSpace& x, const WedgeVector& v, int phi,
                           const ScaledChevalley* cv) {
  const RootSystem& rs = x.rs();
  const Chevalley& ch = x.chev();
  const int mphi = rs.negate(phi);
  WedgeVector out;
  for (const auto& [key, c] : v) {
    for_each_bit(key, [&](int pos) {
      const int mu = x.g1_root(pos);
      const int nu = rs.sum_id(phi, mu);
      if (nu < 0) return;
      const int npos = x.g1_pos(nu);
      if (has_bit(key, npos)) return;
      const Rat n = cv ? cv->n(mphi, rs.negate(mu))
                       : Rat(ch.n_const(mphi, rs.negate(mu)));
      const int lo = pos < npos ? pos : npos;
      const int hi = pos < npos ? npos : pos;
      const Bits between =
          key & ((Bits{1} << hi) - 1) & ~((Bits{1} << (lo + 1)) - 1);
      Rat term = c * n;
      if (std::popcount(between) & 1) term = -term;
      out[with_bit(without_bit(key, pos), npos)] += term;
    });
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

std::vector<PiPair> pi_set(const ChssSpace& x, Bits w) {
  const SchubertDescriptor d = classify(x, w);
  if (!d.proper()) return {};
  const RootSystem& rs = x.rs();
  const int top = alpha_tilde_zw(x, d.J);

  std::vector<int> gammas;
  for (int c = 0; c <= d.a; ++c)
    for (const auto& comp : g1_components(x, d.J, c))
      gammas.push_back(component_highest(x, d.J, comp));

  std::vector<int> betas;
  for (int b = d.a + 1; b <= top; ++b)
    for (const auto& comp : g1_components(x, d.J, b))
      betas.push_back(component_lowest(x, d.J, comp));

  std::vector<PiPair> out;
  for (int g : gammas)
    for (int bt : betas)
      if (rs.index_of(rs.root(g) - rs.root(bt)) < 0)
        out.push_back({g, bt, x.zj(bt, d.J) - x.zj(g, d.J)});
  std::sort(out.begin(), out.end(), [](const PiPair& a, const PiPair& b) {
    return a.gamma != b.gamma ? a.gamma < b.gamma : a.beta < b.beta;
  });
  return out;
}

WedgeVector xi_v(const ChssSpace& x, Bits w, const PiPair& p) {
  const int gp = x.g1_pos(p.gamma);
  const int bp = x.g1_pos(p.beta);
  if (gp < 0 || bp < 0 || !has_bit(w, gp) || has_bit(w, bp))
    throw std::invalid_argument("xi_v: pair does not fit the cell");
  const Bits contracted = without_bit(w, gp);
  const int sgn = bits_below(w, gp) + bits_below(contracted, bp);
  WedgeVector v;
  v[with_bit(contracted, bp)] = (sgn & 1) ? Rat(-1) : Rat(1);
  return v;
}

SpanSet weight_space_span(const ChssSpace& x, Bits w, const PiPair& p,
                          std::uint64_t bound, const ScaledChevalley* cv) {
  const RootSystem& rs = x.rs();
  const SchubertDescriptor d = classify(x, w);
  if (!d.proper())
    throw std::invalid_argument("weight_space_span: cell must be proper");
  const int s = x.zj(p.beta, d.J) - x.zj(p.gamma, d.J);
  if (s != p.s) throw internal_error("weight_space_span: stale pair");
  const Root target = rs.root(p.beta) - rs.root(p.gamma);

  std::vector<int> cands;
  for (int id = 0; id < rs.num_pos; ++id)
    if (x.zi(id) == 0 && x.zj(id, d.J) == 1) cands.push_back(id);

  SpanSet out;
  std::set<WedgeVector> dedup;
  const WedgeVector base{{w, Rat(1)}};

  // Depth-first over ordered sequences (φ_1, …, φ_s).  The remaining weight
  // stays coefficientwise nonnegative on every viable branch, and branches
  // whose partial image already vanishes contribute nothing.
  std::function<void(const Root&, const WedgeVector&, int)> rec =
      [&](const Root& rem, const WedgeVector& cur, int depth) {
        if (out.aborted) return;
        if (depth == s) {
          if (!rem.is_zero()) return;
          if (++out.sequences > bound) {
            out.aborted = true;
            return;
          }
          dedup.insert(cur);
          return;
        }
        for (int phi : cands) {
          const Root r2 = rem - rs.root(phi);
          bool feasible = true;
          for (int i = 0; i < r2.n; ++i)
            if (r2[i] < 0) {
              feasible = false;
              break;
            }
          if (!feasible) continue;
          const WedgeVector nxt = apply_lowering(x, cur, phi, cv);
          if (nxt.empty()) continue;
          rec(r2, nxt, depth + 1);
          if (out.aborted) return;
        }
      };
  rec(target, base, 0);
  out.vectors.assign(dedup.begin(), dedup.end());
  return out;
}

SchurVerdict schur_equal(const ChssSpace& x, Bits w, std::uint64_t span_bound,
                         const ScaledChevalley* cv) {
  SchurVerdict out;
  for (const PiPair& p : pi_set(x, w)) {
    const SpanSet span = weight_space_span(x, w, p, span_bound, cv);
    if (span.aborted) {
      out.aborted.push_back(p);
      continue;
    }
    SparseBasis basis;
    for (const auto& v : span.vectors) basis.insert(v);
    if (basis.contains(xi_v(x, w, p))) out.witnesses.push_back(p);
  }
  if (!out.witnesses.empty())
    out.equal = Tri::no;
  else if (!out.aborted.empty())
    out.equal = Tri::indeterminate;
  else
    out.equal = Tri::yes;
  return out;
}

bool triviality_filter(const ChssSpace& x, Bits w) {
  const int len = std::popcount(w);
  if (len == 1) return true;
  const int n = x.type.rank;
  switch (x.type.family) {
    case Family::A:  // projective space when an end node is marked
      return x.node == 1 || x.node == n;
    case Family::B:  // odd-dimensional quadric
      return x.node == 1;
    case Family::D:  // even quadric, except its middle-dimensional cells
      return x.node == 1 && len != n - 1;
    default:
      return false;
  }
}

ReductionReport reduction_check(const ChssSpace& x, Bits w,
                                std::uint64_t span_bound) {
  const Family f = x.type.family;
  if (f != Family::A && f != Family::C && f != Family::D)
    throw std::invalid_argument("reduction_check: defined for types A, C, D");
  const RootSystem& rs = x.rs();
  const SchubertDescriptor d = classify(x, w);
  ReductionReport rep;
  if (!d.proper()) return rep;

  std::vector<int> cands;
  for (int id = 0; id < rs.num_pos; ++id)
    if (x.zi(id) == 0 && x.zj(id, d.J) == 1) cands.push_back(id);
  std::vector<int> slice_a;
  for (int pos = 0; pos < x.num_g1(); ++pos)
    if (x.zj(x.g1_root(pos), d.J) == d.a) slice_a.push_back(x.g1_root(pos));

  for (const PiPair& p : pi_set(x, w)) {
    ++rep.pairs;
    const SpanSet span = weight_space_span(x, w, p, span_bound, nullptr);
    if (span.aborted) {
      rep.aborted = true;
      continue;
    }
    SparseBasis basis;
    for (const auto& v : span.vectors) basis.insert(v);
    const bool member = basis.contains(xi_v(x, w, p));
    rep.full_member = rep.full_member || member;
    if (p.s != 2) continue;
    ++rep.s2_pairs;
    rep.s2_member = rep.s2_member || member;

    // Canonical decomposition β−γ = φ₁+φ₂ over J-degree-one roots: among all
    // unordered decompositions pick the one minimizing the larger height
    // (two simple roots when available, the balanced pair otherwise).
    const Root target = rs.root(p.beta) - rs.root(p.gamma);
    int phi1 = -1, phi2 = -1;
    std::pair<int, int> best{std::numeric_limits<int>::max(), 0};
    for (std::size_t i = 0; i < cands.size(); ++i)
      for (std::size_t j = i; j < cands.size(); ++j) {
        if (!(rs.root(cands[i]) + rs.root(cands[j]) == target)) continue;
        const int h1 = rs.root(cands[i]).height();
        const int h2 = rs.root(cands[j]).height();
        const std::pair<int, int> h{std::max(h1, h2), std::min(h1, h2)};
        if (h < best) {
          best = h;
          phi1 = cands[i];
          phi2 = cands[j];
        }
      }

    // ξ·v_w escapes the span exactly when some pair of distinct top-slice
    // roots ν, μ raises to distinct roots ν+φ₁, μ+φ₂; with no decomposition
    // at all the weight space is zero and membership fails outright.
    bool closed_member = false;
    if (phi1 >= 0) {
      bool independent = false;
      for (int nu : slice_a) {
        for (int mu : slice_a) {
          if (nu == mu) continue;
          const int snu = rs.sum_id(nu, phi1);
          const int smu = rs.sum_id(mu, phi2);
          if (snu >= 0 && smu >= 0 && snu != smu) {
            independent = true;
            break;
          }
        }
        if (independent) break;
      }
      closed_member = !independent;
    }
    if (member != closed_member) rep.closed_form_mismatches.push_back(p);
  }
  return rep;
}

}  // namespace chss
