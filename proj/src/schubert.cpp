#include "chss/schubert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chss {

SchubertDescriptor classify(const ChssSpace& x, Bits delta_w) {
  const RootSystem& rs = x.rs();
  int N = x.num_g1();
  if (!is_ideal(x, delta_w)) throw std::invalid_argument("classify: not a lower order ideal");

  NodeSet J = 0;
  for (int j = 1; j <= x.rank(); ++j) {
    if (j == x.node) continue;
    bool escapes = false;
    for (int p = 0; p < N && !escapes; ++p) {
      if (!has_bit(delta_w, p)) continue;
      Root up = rs.root(x.g1_root(p));
      up[j - 1] = static_cast<int16_t>(up[j - 1] + 1);
      int uid = rs.index_of(up);
      if (uid < 0) continue;
      int q = x.g1_pos(uid);
      if (q >= 0 && !has_bit(delta_w, q)) escapes = true;
    }
    if (escapes) J |= NodeSet(1) << (j - 1);
  }

  int a = 0;
  for (int p = 0; p < N; ++p)
    if (has_bit(delta_w, p)) a = std::max(a, x.zj(x.g1_root(p), J));

  SchubertDescriptor d{a, J, popcount(delta_w)};
  if (J == 0) {
    if (delta_w != 0 && delta_w != x.all_bits())
      throw internal_error("empty J on a proper cell");
  } else {
    if (bits_from_aJ(x, a, J) != delta_w)
      throw internal_error("reconstruction from (a,J) failed");
  }
  return d;
}

Bits bits_from_aJ(const ChssSpace& x, int a, NodeSet J) {
  if ((J & ~x.i_p()) != 0) throw std::invalid_argument("J must avoid the marked node");
  if (a < 0) throw std::invalid_argument("need a >= 0");
  Bits out = 0;
  for (int p = 0; p < x.num_g1(); ++p)
    if (x.zj(x.g1_root(p), J) <= a) out = with_bit(out, p);
  return out;
}

AJBuildResult schubert_from_aJ(const ChssSpace& x, int a, NodeSet J) {
  if ((J & ~x.i_p()) != 0) throw std::invalid_argument("J must avoid the marked node");
  if (a < 0 || a > alpha_tilde_zw(x, J))
    throw std::invalid_argument("need 0 <= a <= (highest root)(Z_J)");
  AJBuildResult r;
  r.w.delta = bits_from_aJ(x, a, J);
  r.w.length = popcount(r.w.delta);
  r.canonical = classify(x, r.w.delta);
  r.canonical_input = (r.canonical.a == a && r.canonical.J == J);
  return r;
}

int alpha_tilde_zw(const ChssSpace& x, NodeSet J) {
  return x.zj(x.rs().highest_root_id(), J);
}

int alpha_tilde_zw_cases(const ChssSpace& x, NodeSet J) {
  int n = x.rank();
  int p = popcount(J);
  auto contains = [&](int j) { return (J & (NodeSet(1) << (j - 1))) != 0; };
  switch (x.type.family) {
    case Family::A: return p;
    case Family::B: return 2 * p;
    case Family::C: return 2 * p;
    case Family::D: {
      // 𝙸 = {1, n−1, n} ∖ {𝚒}; α̃(Z_J) = 2|𝙹|, minus 1 per element of 𝙸∩𝙹.
      std::vector<int> I;
      for (int j : {1, n - 1, n})
        if (j != x.node) I.push_back(j);
      int cut = 0;
      for (int j : I)
        if (contains(j)) ++cut;
      if (cut == 0) return 2 * p;
      if (cut == static_cast<int>(I.size())) return 2 * p - 2;
      return 2 * p - 1;
    }
    default: throw std::invalid_argument("case formula is classical-only");
  }
}

namespace {

// Table row predicates for the classical families.  J is given as the sorted
// node list, p = |J|.
bool realizable_A(int n, int i, int a, const std::vector<int>& J) {
  int p = static_cast<int>(J.size());
  int q = 0;
  for (int j : J)
    if (j < i) ++q;
  (void)n;
  return (p == 2 * a && q == a) || (p == 2 * a + 1 && q == a) ||
         (p == 2 * a + 1 && q == a + 1) || (p == 2 * a + 2 && q == a + 1);
}

bool realizable_B(int a, const std::vector<int>& J) {
  return J.size() == 1 && (a == 0 || a == 1);
}

bool realizable_D_P1(int n, int a, const std::vector<int>& J) {
  int p = static_cast<int>(J.size());
  bool middle = (p == 2 && J[0] == n - 1 && J[1] == n);
  if (a == 0) return p == 1 || middle;
  if (a == 1) return (p == 1 && J[0] <= n - 2) || middle;
  return false;
}

bool realizable_C(int a, const std::vector<int>& J) {
  int p = static_cast<int>(J.size());
  return p >= 1 && (p == a || p == a + 1);
}

// D_n/P_n rows; J ⊆ {1,…,n−1} sorted, with j₀ := 0 and j_{p+1} := n.
bool realizable_D_Pn(int n, int a, const std::vector<int>& J) {
  int p = static_cast<int>(J.size());
  if (p == 0) return false;
  bool has_nm1 = std::find(J.begin(), J.end(), n - 1) != J.end();
  auto jat = [&](int idx) {  // 1-based with the two conventions
    if (idx == 0) return 0;
    if (idx == p + 1) return n;
    return J[static_cast<std::size_t>(idx - 1)];
  };
  // Group 1: p = a (n−1 ∉ J) or p = a+1 (n−1 ∈ J); gap j_s − j_{s−1} ≥ 2 at
  // s = ⌈(p+1)/2⌉.
  if ((p == a && !has_nm1) || (p == a + 1 && has_nm1)) {
    if (a > n - 3) return false;
    int s = (p + 2) / 2;
    return jat(s) - jat(s - 1) >= 2;
  }
  // Group 2: p = a+1 (n−1 ∉ J) or p = a+2 (n−1 ∈ J); gap j_{s+1} − j_s ≥ 2 at
  // s = ⌈p/2⌉.
  if ((p == a + 1 && !has_nm1) || (p == a + 2 && has_nm1)) {
    if (a > n - 4) return false;
    int s = (p + 1) / 2;
    return jat(s + 1) - jat(s) >= 2;
  }
  return false;
}

}  // namespace

bool is_realizable(const ChssSpace& x, int a, NodeSet J) {
  if (a < 0 || J == 0) return false;
  if ((J & ~x.i_p()) != 0) return false;
  std::vector<int> Jv = nodes_of(J);
  int n = x.rank();
  switch (x.type.family) {
    case Family::A: return realizable_A(n, x.node, a, Jv);
    case Family::B: return realizable_B(a, Jv);
    case Family::C: return realizable_C(a, Jv);
    case Family::D:
      if (x.node == 1) return realizable_D_P1(n, a, Jv);
      if (x.node == n) return realizable_D_Pn(n, a, Jv);
      {
        // Spinor variety marked at n−1: relabel through the swap n−1 ↔ n.
        std::vector<int> Jm;
        for (int j : Jv) Jm.push_back(j == n ? n - 1 : j);
        std::sort(Jm.begin(), Jm.end());
        return realizable_D_Pn(n, a, Jm);
      }
    case Family::E6:
    case Family::E7: {
      for (const HasseElt& w : enumerate_hasse(x)) {
        SchubertDescriptor d = classify(x, w.delta);
        if (d.proper() && d.a == a && d.J == J) return true;
      }
      return false;
    }
  }
  return false;
}

SchubertDescriptor dual_descriptor(const ChssSpace& x, const SchubertDescriptor& d) {
  if (!d.proper()) throw std::invalid_argument("dual_descriptor: improper descriptor");
  int az = alpha_tilde_zw(x, d.J);
  SchubertDescriptor out;
  out.a = az - d.a - 1;
  out.J = 0;
  for (int j : nodes_of(d.J)) out.J |= NodeSet(1) << (x.star_node(j) - 1);
  out.dim = x.dim() - d.dim;
  return out;
}

SchubertDescriptor conjugate_descriptor(const SchubertDescriptor& d, const NodePerm& phi) {
  SchubertDescriptor out = d;
  out.J = 0;
  for (int j : nodes_of(d.J)) {
    int pj = phi[static_cast<std::size_t>(j)];
    out.J |= NodeSet(1) << (pj - 1);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> group_by_signature(const ChssSpace& x, NodeSet J,
                                                 const std::vector<int>& ids) {
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int id : ids) {
    std::vector<int> sig;
    for (int j : nodes_of(J)) sig.push_back(x.rs().root(id)[j - 1]);
    groups[sig].push_back(id);
  }
  std::vector<std::vector<int>> out;
  for (auto& [sig, g] : groups) {
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> g1_components(const ChssSpace& x, NodeSet J, int c) {
  std::vector<int> ids;
  for (int p = 0; p < x.num_g1(); ++p) {
    int id = x.g1_root(p);
    if (x.zj(id, J) == c) ids.push_back(id);
  }
  return group_by_signature(x, J, ids);
}

std::vector<std::vector<int>> g0_components(const ChssSpace& x, NodeSet J, int c) {
  if (c == 0) throw std::invalid_argument("g0_components: grade 0 piece is not a sum of root spaces only");
  std::vector<int> ids;
  const RootSystem& rs = x.rs();
  for (int id = 0; id < rs.num_roots(); ++id) {
    if (x.zi(id) != 0) continue;
    if (x.zj(id, J) == c) ids.push_back(id);
  }
  return group_by_signature(x, J, ids);
}

std::vector<std::vector<int>> components_by_connectivity(const ChssSpace& x, NodeSet J,
                                                         std::vector<int> root_ids) {
  const RootSystem& rs = x.rs();
  std::sort(root_ids.begin(), root_ids.end());
  std::vector<int> parent(root_ids.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  auto index_in = [&](int id) {
    auto it = std::lower_bound(root_ids.begin(), root_ids.end(), id);
    if (it == root_ids.end() || *it != id) return -1;
    return static_cast<int>(it - root_ids.begin());
  };
  for (std::size_t i = 0; i < root_ids.size(); ++i) {
    for (int k = 1; k <= x.rank(); ++k) {
      if (k == x.node || (J & (NodeSet(1) << (k - 1)))) continue;
      for (int sgn : {+1, -1}) {
        Root r = rs.root(root_ids[i]);
        r[k - 1] = static_cast<int16_t>(r[k - 1] + sgn);
        int id = rs.index_of(r);
        if (id < 0) continue;
        int j = index_in(id);
        if (j < 0) continue;
        int a = find(static_cast<int>(i)), b = find(j);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < root_ids.size(); ++i)
    groups[find(static_cast<int>(i))].push_back(root_ids[i]);
  std::vector<std::vector<int>> out;
  for (auto& [rep, g] : groups) out.push_back(std::move(g));
  // Deterministic order: by smallest root id.
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return out;
}

bool is_component_highest(const ChssSpace& x, NodeSet J, int root_id) {
  const RootSystem& rs = x.rs();
  for (int k = 1; k <= x.rank(); ++k) {
    if (k == x.node || (J & (NodeSet(1) << (k - 1)))) continue;
    Root r = rs.root(root_id);
    r[k - 1] = static_cast<int16_t>(r[k - 1] + 1);
    if (rs.index_of(r) >= 0) return false;
  }
  return true;
}

bool is_component_lowest(const ChssSpace& x, NodeSet J, int root_id) {
  const RootSystem& rs = x.rs();
  for (int k = 1; k <= x.rank(); ++k) {
    if (k == x.node || (J & (NodeSet(1) << (k - 1)))) continue;
    Root r = rs.root(root_id);
    r[k - 1] = static_cast<int16_t>(r[k - 1] - 1);
    if (rs.index_of(r) >= 0) return false;
  }
  return true;
}

int component_highest(const ChssSpace& x, NodeSet J, const std::vector<int>& component) {
  int found = -1;
  for (int id : component) {
    if (!is_component_highest(x, J, id)) continue;
    if (found >= 0) throw internal_error("component has two highest roots");
    found = id;
  }
  if (found < 0) throw internal_error("component has no highest root");
  return found;
}

int component_lowest(const ChssSpace& x, NodeSet J, const std::vector<int>& component) {
  int found = -1;
  for (int id : component) {
    if (!is_component_lowest(x, J, id)) continue;
    if (found >= 0) throw internal_error("component has two lowest roots");
    found = id;
  }
  if (found < 0) throw internal_error("component has no lowest root");
  return found;
}

}  // namespace chss
