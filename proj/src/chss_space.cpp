#include "chss/chss_space.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace chss {

NodeSet node_set_from(const std::vector<int>& nodes) {
  NodeSet s = 0;
  for (int j : nodes) {
    if (j < 1 || j > 32) throw std::invalid_argument("node out of range");
    s |= NodeSet(1) << (j - 1);
  }
  return s;
}

std::vector<int> nodes_of(NodeSet s) {
  std::vector<int> v;
  for (int j = 1; j <= 32 && s; ++j)
    if (s & (NodeSet(1) << (j - 1))) v.push_back(j);
  return v;
}

std::string node_set_str(NodeSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int j : nodes_of(s)) {
    if (!first) os << ',';
    os << j;
    first = false;
  }
  os << '}';
  return os.str();
}

bool ChssSpace::is_chss(LieType t, int node) {
  if (!t.valid() || node < 1 || node > t.rank) return false;
  int n = t.rank;
  switch (t.family) {
    case Family::A: return true;
    case Family::B: return node == 1;
    case Family::C: return node == n;
    case Family::D: return node == 1 || node == n - 1 || node == n;
    case Family::E6: return node == 1 || node == 6;
    case Family::E7: return node == 7;
  }
  return false;
}

ChssSpace ChssSpace::build(LieType t, int node) {
  if (!is_chss(t, node))
    throw std::invalid_argument("not a compact Hermitian symmetric space: " + t.name() +
                                "/P" + std::to_string(node));
  ChssSpace x;
  x.type = t;
  x.node = node;
  x.rs_ = std::make_shared<RootSystem>(RootSystem::build(t));
  x.chev_ = std::make_shared<Chevalley>(Chevalley::build(x.rs_));
  const RootSystem& rs = *x.rs_;

  // |1|-gradedness: each positive root has marked coefficient 0 or 1.
  x.g1_pos_of_id_.assign(static_cast<std::size_t>(rs.num_roots()), -1);
  for (int id = 0; id < rs.num_pos; ++id) {
    int c = rs.root(id)[x.node0()];
    if (c < 0 || c > 1) throw internal_error("grading depth exceeds 1 at " + x.name());
    if (c == 1) {
      x.g1_pos_of_id_[static_cast<std::size_t>(id)] = static_cast<int>(x.g1_ids_.size());
      x.g1_ids_.push_back(id);
    }
  }
  if (x.num_g1() > 31) throw internal_error("g1 too large for bitset cells");

  // Covers: α ⋖ α + α_j within Δ(g₁).
  int N = x.num_g1();
  x.lower_covers_.assign(static_cast<std::size_t>(N), {});
  x.upper_covers_.assign(static_cast<std::size_t>(N), {});
  for (int p = 0; p < N; ++p) {
    for (int j = 0; j < rs.rank; ++j) {
      Root up = rs.root(x.g1_ids_[static_cast<std::size_t>(p)]);
      up[j] = static_cast<int16_t>(up[j] + 1);
      int uid = rs.index_of(up);
      if (uid < 0) continue;
      int up_pos = x.g1_pos_of_id_[static_cast<std::size_t>(uid)];
      if (up_pos < 0) continue;  // left Δ(g₁) (only possible via the marked node)
      x.upper_covers_[static_cast<std::size_t>(p)].push_back(up_pos);
      x.lower_covers_[static_cast<std::size_t>(up_pos)].push_back(p);
    }
  }

  // w⁰_𝔭: greedily append simple reflections from I_𝔭 while some α_j
  // (j ∈ I_𝔭) still maps to a positive root.
  int nr = rs.num_roots();
  x.w0p_.resize(static_cast<std::size_t>(nr));
  for (int v = 0; v < nr; ++v) x.w0p_[static_cast<std::size_t>(v)] = v;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int j = 0; j < rs.rank; ++j) {
      if (j == x.node0()) continue;
      int img = x.w0p_[static_cast<std::size_t>(rs.simple_id(j))];
      if (!rs.is_positive(img)) continue;
      // w := w·σ_j, i.e. new(v) = w(σ_j v).
      std::vector<int> next(static_cast<std::size_t>(nr));
      for (int v = 0; v < nr; ++v)
        next[static_cast<std::size_t>(v)] =
            x.w0p_[static_cast<std::size_t>(rs.reflect_id(v, rs.simple_id(j)))];
      x.w0p_ = std::move(next);
      progress = true;
    }
  }
  // Longest-element sanity: involution, and all of Δ⁺(g₀) lands in Δ⁻.
  for (int v = 0; v < nr; ++v)
    if (x.w0p_[static_cast<std::size_t>(x.w0p_[static_cast<std::size_t>(v)])] != v)
      throw internal_error("w0p is not an involution");
  for (int id = 0; id < rs.num_pos; ++id) {
    bool g0 = rs.root(id)[x.node0()] == 0;
    int img = x.w0p_[static_cast<std::size_t>(id)];
    if (g0 && rs.is_positive(img)) throw internal_error("w0p keeps a g0 root positive");
    if (!g0 && !rs.is_positive(img)) throw internal_error("w0p flips a g1 root");
  }
  return x;
}

std::string ChssSpace::name() const {
  return type.name() + "/P" + std::to_string(node);
}

std::string ChssSpace::model_name() const {
  int n = rank();
  std::ostringstream os;
  switch (type.family) {
    case Family::A: os << "Gr(" << node << "," << n + 1 << ")"; break;
    case Family::B: os << "Q" << 2 * n - 1; break;
    case Family::C: os << "LG(" << n << "," << 2 * n << ")"; break;
    case Family::D:
      if (node == 1) os << "Q" << 2 * n - 2;
      else os << "S" << n;
      break;
    case Family::E6: os << "OP2"; break;
    case Family::E7: os << "Freudenthal"; break;
  }
  return os.str();
}

int ChssSpace::zj(int root_id, NodeSet J) const {
  int s = 0;
  const Root& r = rs_->root(root_id);
  for (NodeSet rest = J; rest;) {
    int b = std::countr_zero(rest);
    rest &= rest - 1;
    s += r[b];
  }
  return s;
}

NodeSet ChssSpace::i_p() const {
  NodeSet all = (rank() >= 32) ? ~NodeSet(0) : ((NodeSet(1) << rank()) - 1);
  return all & ~(NodeSet(1) << node0());
}

Root ChssSpace::w0p_apply(const Root& a) const {
  int id = rs_->index_of(a);
  if (id < 0) throw std::invalid_argument("w0p_apply: not a root");
  return rs_->root(w0p_apply(id));
}

int ChssSpace::star_node(int j) const {
  if (j < 1 || j > rank() || j == node) throw std::invalid_argument("star_node: need j in I_p");
  int img = w0p_apply(rs_->simple_id(j - 1));
  int neg = rs_->negate(img);
  int node0 = rs_->simple_node_of(neg);
  if (node0 < 0) throw internal_error("star of a simple root is not simple");
  return node0 + 1;
}

bool is_ideal(const ChssSpace& x, Bits s) {
  int N = x.num_g1();
  for (int p = 0; p < N; ++p) {
    if (!has_bit(s, p)) continue;
    for (int q : x.lower_covers()[static_cast<std::size_t>(p)])
      if (!has_bit(s, q)) return false;
  }
  return true;
}

std::vector<HasseElt> enumerate_hasse(const ChssSpace& x) {
  int N = x.num_g1();
  std::unordered_set<Bits> seen;
  std::deque<Bits> queue;
  seen.insert(0);
  queue.push_back(0);
  while (!queue.empty()) {
    Bits s = queue.front();
    queue.pop_front();
    for (int p = 0; p < N; ++p) {
      if (has_bit(s, p)) continue;
      bool can = true;
      for (int q : x.lower_covers()[static_cast<std::size_t>(p)])
        if (!has_bit(s, q)) {
          can = false;
          break;
        }
      if (!can) continue;
      Bits t = with_bit(s, p);
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  std::vector<Bits> all(seen.begin(), seen.end());
  std::sort(all.begin(), all.end(), [](Bits a, Bits b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  std::vector<HasseElt> out;
  out.reserve(all.size());
  for (Bits s : all) out.push_back(HasseElt{s, popcount(s), {}});
  return out;
}

std::vector<Bits> enumerate_ideals_brute(const ChssSpace& x) {
  int N = x.num_g1();
  if (N > 20) throw std::invalid_argument("brute-force ideal filter limited to 20 bits");
  std::vector<Bits> out;
  for (Bits s = 0; s < (Bits(1) << N); ++s)
    if (is_ideal(x, s)) out.push_back(s);
  std::sort(out.begin(), out.end(), [](Bits a, Bits b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return out;
}

HasseElt delta_from_word(const ChssSpace& x, const std::vector<int>& word) {
  const RootSystem& rs = x.rs();
  for (int j : word)
    if (j < 1 || j > rs.rank) throw std::invalid_argument("word letter out of range");
  // Δ(w) = wΔ⁻ ∩ Δ⁺ with w(ν) = σ_{word[0]}(σ_{word[1]}(…σ_{word[k−1]}(ν)…)).
  Bits delta = 0;
  for (int id = rs.num_pos; id < rs.num_roots(); ++id) {
    Root r = rs.root(id);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      r = rs.reflect_simple(r, *it - 1);
    int img = rs.index_of(r);
    if (img < 0) throw internal_error("reflection left the root system");
    if (!rs.is_positive(img)) continue;
    int pos = x.g1_pos(img);
    if (pos < 0)
      throw std::invalid_argument("word is not a minimal coset representative (Δ(w) ⊄ Δ(g₁))");
    delta = with_bit(delta, pos);
  }
  if (!is_ideal(x, delta)) throw internal_error("word produced a non-ideal Δ(w)");
  // For reduced words, cross-check against the prefix formula
  // Δ(w) = {α_{j₁}, σ_{j₁}α_{j₂}, σ_{j₁}σ_{j₂}α_{j₃}, …}.
  if (static_cast<int>(word.size()) == popcount(delta)) {
    Bits alt = 0;
    for (std::size_t k = 0; k < word.size(); ++k) {
      Root r{};
      r.n = static_cast<int16_t>(rs.rank);
      r[word[k] - 1] = 1;
      for (std::size_t l = k; l-- > 0;) r = rs.reflect_simple(r, word[l] - 1);
      int id = rs.index_of(r);
      int pos = id >= 0 ? x.g1_pos(id) : -1;
      if (pos < 0) throw internal_error("prefix formula left Δ(g₁)");
      alt = with_bit(alt, pos);
    }
    if (alt != delta) throw internal_error("prefix formula disagrees with wΔ⁻ ∩ Δ⁺");
  }
  return HasseElt{delta, popcount(delta), word};
}

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> out;
  if (s.find(',') != std::string::npos || s.find(' ') != std::string::npos) {
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) {
        out.push_back(std::stoi(cur));
        cur.clear();
      }
    };
    for (char ch : s) {
      if (ch == ',' || ch == ' ') flush();
      else if (std::isdigit(static_cast<unsigned char>(ch))) cur.push_back(ch);
      else throw std::invalid_argument("bad character in word: " + s);
    }
    flush();
    return out;
  }
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("bad character in word: " + s);
    out.push_back(ch - '0');
  }
  return out;
}

Bits dual_bits(const ChssSpace& x, Bits delta_w) {
  Bits out = 0;
  for (int p = 0; p < x.num_g1(); ++p) {
    if (has_bit(delta_w, p)) continue;
    int img = x.w0p_apply(x.g1_root(p));
    int q = x.g1_pos(img);
    if (q < 0) throw internal_error("w0p left Δ(g₁)");
    out = with_bit(out, q);
  }
  return out;
}

HasseElt dual(const ChssSpace& x, const HasseElt& w) {
  Bits d = dual_bits(x, w.delta);
  if (!is_ideal(x, d)) throw internal_error("dual cell is not an ideal");
  return HasseElt{d, popcount(d), {}};
}

std::vector<NodePerm> diagram_automorphisms(LieType t) {
  int n = t.rank;
  auto identity = [&] {
    NodePerm p(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) p[static_cast<std::size_t>(j)] = j;
    return p;
  };
  std::vector<NodePerm> out{identity()};
  switch (t.family) {
    case Family::A:
      if (n >= 2) {
        NodePerm p = identity();
        for (int j = 1; j <= n; ++j) p[static_cast<std::size_t>(j)] = n + 1 - j;
        out.push_back(p);
      }
      break;
    case Family::D:
      if (n == 4) {
        // 𝔖₃ on the outer nodes {1, 3, 4}.
        const int perms[5][3] = {{1, 4, 3}, {3, 1, 4}, {3, 4, 1}, {4, 1, 3}, {4, 3, 1}};
        for (const auto& q : perms) {
          NodePerm p = identity();
          p[1] = q[0];
          p[3] = q[1];
          p[4] = q[2];
          out.push_back(p);
        }
      } else {
        NodePerm p = identity();
        p[static_cast<std::size_t>(n - 1)] = n;
        p[static_cast<std::size_t>(n)] = n - 1;
        out.push_back(p);
      }
      break;
    case Family::E6: {
      NodePerm p = identity();
      p[1] = 6;
      p[6] = 1;
      p[3] = 5;
      p[5] = 3;
      out.push_back(p);
      break;
    }
    default: break;
  }
  return out;
}

HasseElt conjugate(const ChssSpace& src, const ChssSpace& dst, const NodePerm& phi,
                   const HasseElt& w) {
  int n = src.rank();
  if (dst.type.family != src.type.family || dst.rank() != n)
    throw std::invalid_argument("conjugate: mismatched spaces");
  if (static_cast<int>(phi.size()) != n + 1)
    throw std::invalid_argument("conjugate: bad node permutation size");
  // Verify φ is a diagram automorphism: it must preserve the Cartan matrix.
  const RootSystem& rs = src.rs();
  std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
  for (int j = 1; j <= n; ++j) {
    int pj = phi[static_cast<std::size_t>(j)];
    if (pj < 1 || pj > n || seen[static_cast<std::size_t>(pj)])
      throw std::invalid_argument("conjugate: not a node permutation");
    seen[static_cast<std::size_t>(pj)] = 1;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (rs.cartan(i - 1, j - 1) !=
          rs.cartan(phi[static_cast<std::size_t>(i)] - 1, phi[static_cast<std::size_t>(j)] - 1))
        throw std::invalid_argument("conjugate: not a diagram automorphism");
  if (phi[static_cast<std::size_t>(src.node)] != dst.node)
    throw std::invalid_argument("conjugate: target space must be marked at the image node");

  Bits out = 0;
  for (int p = 0; p < src.num_g1(); ++p) {
    if (!has_bit(w.delta, p)) continue;
    const Root& r = rs.root(src.g1_root(p));
    Root img{};
    img.n = static_cast<int16_t>(n);
    for (int j = 1; j <= n; ++j)
      img[phi[static_cast<std::size_t>(j)] - 1] = r[j - 1];
    int id = dst.rs().index_of(img);
    int q = id >= 0 ? dst.g1_pos(id) : -1;
    if (q < 0) throw internal_error("conjugate image left Δ(g₁)");
    out = with_bit(out, q);
  }
  if (!is_ideal(dst, out)) throw internal_error("conjugate cell is not an ideal");
  return HasseElt{out, popcount(out), {}};
}

}  // namespace chss
