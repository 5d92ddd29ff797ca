#include "chss/rigidity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "chss/partitions.hpp"

namespace chss {

namespace {

// Root ids of Δ(g₁) with grade α(Z_J) == c.
std::vector<int> grade_slice(const ChssSpace& x, NodeSet J, int c) {
  std::vector<int> out;
  for (int pos = 0; pos < x.num_g1(); ++pos) {
    int rid = x.g1_root(pos);
    if (x.zj(rid, J) == c) out.push_back(rid);
  }
  return out;
}

}  // namespace

std::pair<bool, std::vector<WitnessPair>> check_h1(const ChssSpace& x, Bits delta_w) {
  SchubertDescriptor d = classify(x, delta_w);
  if (!d.proper()) throw std::invalid_argument("H1 is defined for proper cells only");
  const RootSystem& rs = x.rs();
  const std::vector<int> grade_a = grade_slice(x, d.J, d.a);

  std::vector<WitnessPair> witnesses;
  for (int j : nodes_of(d.J)) {
    const int beta = rs.simple_id(j - 1);
    // S(β) = { α of grade 𝖺 : α + β ∈ Δ }; a failure needs S(β) = {γ}.
    int gamma = -1;
    int count = 0;
    for (int alpha : grade_a) {
      if (rs.sum_id(alpha, beta) >= 0) {
        gamma = alpha;
        if (++count > 1) break;
      }
    }
    if (count != 1) continue;
    if (rs.index_of(rs.root(gamma) - rs.root(beta)) >= 0) continue;  // γ−β ∈ Δ: no failure
    if (!is_component_highest(x, d.J, gamma)) continue;
    witnesses.emplace_back(beta, gamma);
  }
  return {witnesses.empty(), witnesses};
}

std::pair<bool, std::vector<WitnessPair>> check_h2(const ChssSpace& x, Bits delta_w) {
  SchubertDescriptor d = classify(x, delta_w);
  if (!d.proper()) throw std::invalid_argument("H2 is defined for proper cells only");
  if (d.a == 0) return {true, {}};  // no g_{1,𝖺−1}: vacuous
  const RootSystem& rs = x.rs();
  const std::vector<int> grade_a = grade_slice(x, d.J, d.a);

  std::vector<WitnessPair> witnesses;
  for (const std::vector<int>& comp : g1_components(x, d.J, d.a - 1)) {
    const int eps = component_highest(x, d.J, comp);
    // S(ε) = { α of grade 𝖺 : ε − α ∈ Δ }; a failure needs S(ε) = {γ}.
    int gamma = -1;
    int count = 0;
    for (int alpha : grade_a) {
      if (rs.index_of(rs.root(eps) - rs.root(alpha)) >= 0) {
        gamma = alpha;
        if (++count > 1) break;
      }
    }
    if (count != 1) continue;
    if (!is_component_highest(x, d.J, gamma)) continue;
    witnesses.emplace_back(eps, gamma);
  }
  return {witnesses.empty(), witnesses};
}

RigidityVerdict rigidity_verdict(const ChssSpace& x, Bits delta_w) {
  RigidityVerdict v;
  auto [ok1, w1] = check_h1(x, delta_w);
  auto [ok2, w2] = check_h2(x, delta_w);
  v.h1 = ok1;
  v.h2 = ok2;
  v.h_plus = ok1 && ok2;
  v.h1_witnesses = std::move(w1);
  v.h2_witnesses = std::move(w2);
  return v;
}

std::vector<HplusEntry> hplus_catalog(const ChssSpace& x) {
  std::vector<HplusEntry> out;
  for (const HasseElt& e : enumerate_hasse(x)) {
    SchubertDescriptor d = classify(x, e.delta);
    if (!d.proper()) continue;
    out.push_back({e, d, rigidity_verdict(x, e.delta)});
  }
  return out;
}

bool orthogonal_nodes(const RootSystem& rs, NodeSet S) {
  const std::vector<int> nodes = nodes_of(S);
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (rs.cartan(nodes[a] - 1, nodes[b] - 1) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Closed-form predicates.  Conventions shared by all families:
//   𝙹 = {𝚓₁ < ⋯ < 𝚓_𝗉} with sentinels 𝚓₀ := 0 and 𝚓_{𝗉+1} := 1 + max(I_𝔭);
//   for A_n/P_𝚒 (𝚒 < n) the right sentinel is n+1, for C_n/P_n and D_n/P_n
//   it is n.  A "gap at ℓ" is 𝚓_ℓ − 𝚓_{ℓ−1}.
// ---------------------------------------------------------------------------

namespace {

std::vector<int> with_sentinels(NodeSet J, int right) {
  std::vector<int> v = nodes_of(J);
  v.insert(v.begin(), 0);
  v.push_back(right);
  return v;
}

// 1 < 𝚓_ℓ − 𝚓_{ℓ−1} for every ℓ in [lo, hi].
bool gaps_exceed_one(const std::vector<int>& j, int lo, int hi) {
  for (int l = lo; l <= hi; ++l)
    if (j[static_cast<std::size_t>(l)] - j[static_cast<std::size_t>(l - 1)] <= 1) return false;
  return true;
}

NodeSet nodes_below(int i) { return (NodeSet{1} << (i - 1)) - 1; }      // {1, …, i−1}
NodeSet nodes_upto(int i) { return (NodeSet{1} << i) - 1; }             // {1, …, i}

bool has_node(NodeSet S, int j) { return (S >> (j - 1)) & 1u; }

// Which of the four realizable (𝗉, 𝗊) patterns (𝗊 = #{𝚓 ∈ 𝙹 : 𝚓 < 𝚒}) the
// descriptor matches: ♠ (2𝖺+2, 𝖺+1), ♥ (2𝖺+1, 𝖺+1), ♦ (2𝖺+1, 𝖺), ♣ (2𝖺, 𝖺).
// This is the same four-way split as the partition suits.
Suit suit_A(const ChssSpace& x, const SchubertDescriptor& d) {
  const std::vector<int> js = nodes_of(d.J);
  const int p = static_cast<int>(js.size());
  const int q = static_cast<int>(std::count_if(js.begin(), js.end(),
                                               [&](int j) { return j < x.node; }));
  if (p == 2 * d.a + 2 && q == d.a + 1) return Suit::Spade;
  if (p == 2 * d.a + 1 && q == d.a + 1) return Suit::Heart;
  if (p == 2 * d.a + 1 && q == d.a) return Suit::Diamond;
  if (p == 2 * d.a && q == d.a) return Suit::Club;
  throw std::logic_error("realizable Grassmannian descriptor matches no (p,q) pattern");
}

// --- A_n/P_𝚒, 1 < 𝚒 < n: gap form -----------------------------------------
bool hplus_A_gaps(const ChssSpace& x, const SchubertDescriptor& d) {
  const int n = x.rank();
  const int i = x.node;
  const std::vector<int> j = with_sentinels(d.J, n + 1);
  const int p = static_cast<int>(j.size()) - 2;
  const int q = static_cast<int>(std::count_if(j.begin(), j.end(),
                                               [&](int v) { return 0 < v && v < i; }));
  switch (suit_A(x, d)) {
    case Suit::Spade:
      return gaps_exceed_one(j, 2, p) && i - j[static_cast<std::size_t>(q)] > 1 &&
             j[static_cast<std::size_t>(q + 1)] - i > 1;
    case Suit::Heart:
      return gaps_exceed_one(j, 2, p + 1) && j[static_cast<std::size_t>(q + 1)] - i > 1;
    case Suit::Diamond:
      return gaps_exceed_one(j, 1, p) && i - j[static_cast<std::size_t>(q)] > 1;
    case Suit::Club:
      return gaps_exceed_one(j, 1, p + 1);
  }
  return false;  // unreachable
}

// --- A_n/P_𝚒: orthogonal-set form ------------------------------------------
bool hplus_A_orth(const ChssSpace& x, const SchubertDescriptor& d) {
  const RootSystem& rs = x.rs();
  const int i = x.node;
  const NodeSet D = d.J | node_set_from({i});
  const NodeSet Dstar = dual_descriptor(x, d).J | node_set_from({i});
  switch (suit_A(x, d)) {
    case Suit::Spade:
      return orthogonal_nodes(rs, D);
    case Suit::Heart:
      return orthogonal_nodes(rs, D & nodes_below(i)) &&
             orthogonal_nodes(rs, D & ~nodes_below(i)) &&
             orthogonal_nodes(rs, Dstar & ~nodes_below(i));
    case Suit::Diamond:
      return orthogonal_nodes(rs, D & ~nodes_upto(i)) &&
             orthogonal_nodes(rs, D & nodes_upto(i)) &&
             orthogonal_nodes(rs, Dstar & nodes_upto(i));
    case Suit::Club:
      return orthogonal_nodes(rs, Dstar);
  }
  return false;  // unreachable
}

// --- A_n/P_𝚒: partition-multiplicity form ----------------------------------
// With π = (p₁^{q₁},…,p_r^{q_r}) and conjugate π' = (…^{q'_ℓ}…):
//   1 < q_ℓ and 1 < q'_ℓ for all 2 ≤ ℓ ≤ r, plus per suit:
//   ♥ 1 < q'₁;  ♦ 1 < q₁;  ♣ both;  ♠ nothing more.
bool hplus_A_partition(const ChssSpace& x, const SchubertDescriptor& d) {
  const Partition pi = partition_from_aJ(x, d.a, d.J);
  const Partition conj = conjugate(pi);
  if (pi.r() != conj.r()) throw std::logic_error("conjugate changed the number of runs");
  for (int l = 2; l <= pi.r(); ++l) {
    if (pi.runs[static_cast<std::size_t>(l - 1)].second <= 1) return false;
    if (conj.runs[static_cast<std::size_t>(l - 1)].second <= 1) return false;
  }
  const bool q1_big = pi.runs.front().second > 1;
  const bool q1conj_big = conj.runs.front().second > 1;
  switch (suit_of(pi)) {
    case Suit::Spade: return true;
    case Suit::Heart: return q1conj_big;
    case Suit::Diamond: return q1_big;
    case Suit::Club: return q1_big && q1conj_big;
  }
  return false;  // unreachable
}

// --- C_n/P_n: gap form ------------------------------------------------------
bool hplus_C_gaps(const ChssSpace& x, const SchubertDescriptor& d) {
  const int n = x.rank();
  const std::vector<int> j = with_sentinels(d.J, n);
  const int p = static_cast<int>(j.size()) - 2;
  if (p == d.a) return gaps_exceed_one(j, 1, p);
  if (p == d.a + 1) return gaps_exceed_one(j, 2, p + 1);
  throw std::logic_error("realizable Lagrangian descriptor has p outside {a, a+1}");
}

// --- C_n/P_n: orthogonal-set form -------------------------------------------
bool hplus_C_orth(const ChssSpace& x, const SchubertDescriptor& d) {
  const RootSystem& rs = x.rs();
  const int n = x.rank();
  const int p = static_cast<int>(nodes_of(d.J).size());
  const NodeSet D = d.J | node_set_from({n});
  const NodeSet Dstar = dual_descriptor(x, d).J | node_set_from({n});
  if (p == d.a) return orthogonal_nodes(rs, Dstar);
  return orthogonal_nodes(rs, D);
}

// --- D_n/P_n: primary gap form ----------------------------------------------
// Group (i):  [𝗉 = 𝖺, n−1 ∉ 𝙹] or [𝗉 = 𝖺+1, n−1 ∈ 𝙹]:
//             gaps > 1 at 1 ≤ ℓ ≤ 𝗉 and 𝚓_𝗌 − 𝚓_{𝗌−1} > 2 at 𝗌 = ⌈(𝗉+1)/2⌉.
// Group (ii): 𝗉 = 𝖺+1, n−1 ∉ 𝙹:
//             gaps > 1 at 2 ≤ ℓ ≤ 𝗉 and 𝚓_{𝗌+1} − 𝚓_𝗌 > 2 at 𝗌 = ⌈𝗉/2⌉.
// The remaining realizable shape (𝗉 = 𝖺+2, n−1 ∈ 𝙹) always fails.
bool hplus_Dn_gaps(const ChssSpace& x, const SchubertDescriptor& d, NodeSet J) {
  const int n = x.rank();
  const std::vector<int> j = with_sentinels(J, n);
  const int p = static_cast<int>(j.size()) - 2;
  const bool has_pen = has_node(J, n - 1);
  if ((p == d.a && !has_pen) || (p == d.a + 1 && has_pen)) {
    const int s = (p + 2) / 2;  // ⌈(𝗉+1)/2⌉
    return gaps_exceed_one(j, 1, p) &&
           j[static_cast<std::size_t>(s)] - j[static_cast<std::size_t>(s - 1)] > 2;
  }
  if (p == d.a + 1 && !has_pen) {
    const int s = (p + 1) / 2;  // ⌈𝗉/2⌉
    return gaps_exceed_one(j, 2, p) &&
           j[static_cast<std::size_t>(s + 1)] - j[static_cast<std::size_t>(s)] > 2;
  }
  return false;
}

// --- D_n/P_n: alternate indexing of the same conditions ----------------------
// Stated per parity of 𝖺 with 𝗋 = ⌈𝖺/2⌉ (n−1 ∉ 𝙹) or 𝗋 = ⌊𝖺/2⌋ (n−1 ∈ 𝙹):
//   𝖺 = 0:               H₊ ⟺ 𝙹 a singleton other than {n−2};
//   n−1 ∉ 𝙹, 𝖺 > 0:      gaps > 1 at 𝗉−𝖺 < ℓ ≤ 𝗉 and 𝚓_{𝗉−𝗋+1} − 𝚓_{𝗉−𝗋} > 2;
//   n−1 ∈ 𝙹, 𝖺 > 0:      |𝙹| = 𝖺+1, gaps > 1 at 1 ≤ ℓ ≤ 𝗉, 𝚓_{𝗉−𝗋} − 𝚓_{𝗉−𝗋−1} > 2.
// (At 𝖺 = 0 the realizable shapes are {𝚓} and {𝚓, n−1}; the pair shape has
// |𝙹| = 𝖺+2 and always admits an obstructing pair, so only singletons can
// qualify.)
bool hplus_Dn_gaps_alt(const ChssSpace& x, const SchubertDescriptor& d, NodeSet J) {
  const int n = x.rank();
  const std::vector<int> j = with_sentinels(J, n);
  const int p = static_cast<int>(j.size()) - 2;
  const bool has_pen = has_node(J, n - 1);
  if (d.a == 0) return p == 1 && j[1] != n - 2;
  if (!has_pen) {
    const int r = (d.a + 1) / 2;  // 𝖺 = 2𝗋−1 or 2𝗋
    return gaps_exceed_one(j, p - d.a + 1, p) &&
           j[static_cast<std::size_t>(p - r + 1)] - j[static_cast<std::size_t>(p - r)] > 2;
  }
  if (p != d.a + 1) return false;
  const int r = d.a / 2;  // 𝖺 = 2𝗋 or 2𝗋+1
  return gaps_exceed_one(j, 1, p) &&
         j[static_cast<std::size_t>(p - r)] - j[static_cast<std::size_t>(p - r - 1)] > 2;
}

// --- D_n/P_n: orthogonal-set form --------------------------------------------
bool hplus_Dn_orth(const ChssSpace& x, const SchubertDescriptor& d, NodeSet J) {
  const RootSystem& rs = x.rs();
  const int n = x.rank();
  const std::vector<int> j = with_sentinels(J, n);
  const int p = static_cast<int>(j.size()) - 2;
  const bool has_pen = has_node(J, n - 1);
  if (!orthogonal_nodes(rs, J)) return false;
  if ((p == d.a && !has_pen) || (p == d.a + 1 && has_pen)) {
    const int s = (p + 2) / 2;
    return !has_node(J, 1) &&
           j[static_cast<std::size_t>(s)] - j[static_cast<std::size_t>(s - 1)] > 2;
  }
  if (p == d.a + 1 && !has_pen) {
    const int s = (p + 1) / 2;
    return j[static_cast<std::size_t>(s + 1)] - j[static_cast<std::size_t>(s)] > 2;
  }
  return false;
}

bool agree_or_throw(std::initializer_list<bool> forms, const char* family) {
  bool first = *forms.begin();
  for (bool f : forms)
    if (f != first)
      throw std::logic_error(std::string("H+ formulations disagree for ") + family);
  return first;
}

}  // namespace

bool closed_form_hplus(const ChssSpace& x, const SchubertDescriptor& d) {
  if (x.type.family == Family::E6 || x.type.family == Family::E7)
    throw std::invalid_argument("no closed form for exceptional spaces; use the catalog");
  if (!is_realizable(x, d.a, d.J))
    throw std::invalid_argument("descriptor is not realizable here");
  const int n = x.rank();

  switch (x.type.family) {
    case Family::A: {
      // Projective space (𝚒 = 1 or 𝚒 = n): every proper cell is a linear
      // subspace whose single escape node admits an obstructing pair, so no
      // proper cell qualifies.
      if (x.node == 1 || x.node == n) return false;
      return agree_or_throw(
          {hplus_A_gaps(x, d), hplus_A_orth(x, d), hplus_A_partition(x, d)}, "A_n/P_i");
    }
    case Family::B:
      return false;  // no proper cell of the odd quadric qualifies
    case Family::C:
      return agree_or_throw({hplus_C_gaps(x, d), hplus_C_orth(x, d)}, "C_n/P_n");
    case Family::D: {
      if (x.node == 1)  // even quadric: only the two maximal linear subspaces
        return d.a == 0 && (d.J == node_set_from({n - 1}) || d.J == node_set_from({n}));
      // Spinor varieties: D_n/P_{n−1} is carried to D_n/P_n by the diagram
      // swap n−1 ↔ n, which fixes the invariant 𝖺 and relabels 𝙹.
      NodeSet J = d.J;
      if (x.node == n - 1) {
        NodeSet swapped = J & ~(node_set_from({n - 1}) | node_set_from({n}));
        if (has_node(J, n)) swapped |= node_set_from({n - 1});
        if (has_node(J, n - 1)) swapped |= node_set_from({n});
        J = swapped;
      }
      return agree_or_throw({hplus_Dn_gaps(x, d, J), hplus_Dn_gaps_alt(x, d, J),
                             hplus_Dn_orth(x, d, J)},
                            "D_n/P_n");
    }
    default:
      throw std::invalid_argument("unsupported family");
  }
}

}  // namespace chss
