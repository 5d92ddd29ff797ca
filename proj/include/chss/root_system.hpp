#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chss/util.hpp"

namespace chss {

enum class Family { A, B, C, D, E6, E7 };

std::string family_name(Family f);
// Parse "A".."E7" style family token (case-insensitive).  nullopt on failure.
std::optional<Family> parse_family(const std::string& s);

struct LieType {
  Family family;
  int rank;

  // Rank bounds: A n≥1, B n≥2, C n≥3, D n≥4, E6/E7 fixed.
  bool valid() const;
  std::string name() const;  // "A5", "E6", ...
  bool simply_laced() const;
};

// Parse "A5", "D8", "E7"... throws std::invalid_argument on bad input.
LieType parse_lie_type(const std::string& s);

constexpr int kMaxRank = 12;

// A root written over the simple-root basis.  Also used for general integer
// weight vectors (e.g. sums of roots) where noted.
struct Root {
  std::array<int16_t, kMaxRank> c{};
  int16_t n = 0;  // rank of the ambient system

  int16_t& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  int16_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  int height() const {
    int h = 0;
    for (int i = 0; i < n; ++i) h += c[static_cast<std::size_t>(i)];
    return h;
  }
  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (c[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  }
  friend Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (int i = 0; i < a.n; ++i) r.c[static_cast<std::size_t>(i)] += b.c[static_cast<std::size_t>(i)];
    return r;
  }
  friend Root operator-(const Root& a, const Root& b) {
    Root r = a;
    for (int i = 0; i < a.n; ++i) r.c[static_cast<std::size_t>(i)] -= b.c[static_cast<std::size_t>(i)];
    return r;
  }
  friend Root operator-(const Root& a) {
    Root r = a;
    for (int i = 0; i < a.n; ++i) r.c[static_cast<std::size_t>(i)] = -r.c[static_cast<std::size_t>(i)];
    return r;
  }
  friend bool operator==(const Root& a, const Root& b) {
    if (a.n != b.n) return false;
    for (int i = 0; i < a.n; ++i)
      if (a.c[static_cast<std::size_t>(i)] != b.c[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  friend bool operator<(const Root& a, const Root& b) {  // plain lexicographic
    for (int i = 0; i < a.n; ++i) {
      if (a.c[static_cast<std::size_t>(i)] != b.c[static_cast<std::size_t>(i)])
        return a.c[static_cast<std::size_t>(i)] < b.c[static_cast<std::size_t>(i)];
    }
    return false;
  }
  std::string str() const;  // e.g. "(1,1,2,1)"
};

struct RootHash {
  std::size_t operator()(const Root& r) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (int i = 0; i < r.n; ++i) {
      h ^= static_cast<uint64_t>(static_cast<uint16_t>(r.c[static_cast<std::size_t>(i)]));
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// ---------------------------------------------------------------------------
// RootSystem: all roots, the invariant form, reflections, root strings.
//
// Conventions (fixed project-wide):
//  * Bourbaki numbering of simple roots, 1-based in the public API
//    (node arguments j ∈ {1..n}); 0-based internally for coefficients.
//  * cartan(i,j) = ⟨α_j, α_i^∨⟩ = 2(α_i,α_j)/(α_i,α_i).
//  * The bilinear form is the symmetrized Cartan form with long roots of
//    square-length 2.
//  * Roots are indexed 0..2m−1 with the m positive roots first, sorted by
//    (height, lex); root id+m is the negative of root id.
// ---------------------------------------------------------------------------
class RootSystem {
 public:
  static RootSystem build(LieType t);

  LieType type;
  int rank = 0;
  int num_pos = 0;

  const std::vector<Root>& all_roots() const { return roots_; }
  const Root& root(int id) const { return roots_[static_cast<std::size_t>(id)]; }
  int num_roots() const { return 2 * num_pos; }

  bool is_positive(int id) const { return id < num_pos; }
  int negate(int id) const { return id < num_pos ? id + num_pos : id - num_pos; }

  // -1 when the vector is not a root.
  int index_of(const Root& r) const;
  bool is_root(const Root& r) const { return index_of(r) >= 0; }

  // id of root(x)+root(y) or -1.
  int sum_id(int x, int y) const { return index_of(root(x) + root(y)); }
  // id of root(x)-root(y) or -1.
  int diff_id(int x, int y) const { return index_of(root(x) - root(y)); }

  int height(int id) const { return root(id).height(); }

  // Simple root ids (0-based node index).
  int simple_id(int i) const { return simple_ids_[static_cast<std::size_t>(i)]; }
  // 0-based node of a simple root id, or -1.
  int simple_node_of(int id) const;

  int highest_root_id() const { return highest_root_id_; }

  // Cartan matrix entry ⟨α_j, α_i^∨⟩ (0-based i,j).
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  // Symmetrizer d_i = (α_i,α_i)/2; d·cartan is symmetric.
  const std::vector<Rat>& symmetrizer() const { return sym_; }

  // Invariant form (α,β); long roots have (α,α) = 2.
  Rat inner(const Root& a, const Root& b) const;
  Rat inner(int x, int y) const { return inner(root(x), root(y)); }

  // ⟨β, α^∨⟩ = 2(β,α)/(α,α); always an integer for roots.
  int pairing(const Root& beta, const Root& alpha) const;
  int pairing(int beta, int alpha) const { return pairing(root(beta), root(alpha)); }

  // Reflection σ_α(β) = β − ⟨β,α^∨⟩α.
  Root reflect(const Root& beta, const Root& alpha) const;
  int reflect_id(int beta, int alpha) const;
  // Simple reflection σ_{node} (0-based node).
  Root reflect_simple(const Root& beta, int node) const;

  // Root-string length downward: p = max{k ≥ 0 : β − kα ∈ Δ}.
  int string_down(int beta, int alpha) const;
  // Upward: q = max{k ≥ 0 : β + kα ∈ Δ}.
  int string_up(int beta, int alpha) const;

  std::string root_str(int id) const { return root(id).str(); }

 private:
  std::vector<Root> roots_;
  std::unordered_map<Root, int, RootHash> index_;
  std::array<std::array<int, kMaxRank>, kMaxRank> cartan_{};
  std::vector<Rat> sym_;
  std::vector<int> simple_ids_;
  int highest_root_id_ = -1;
  // Cached (α_i, α_j) over simple roots.
  std::array<std::array<Rat, kMaxRank>, kMaxRank> gram_{};
};

// Closed-form |Δ⁺| per type (test oracle).
int positive_root_count(LieType t);

}  // namespace chss
