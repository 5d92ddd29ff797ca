#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chss/schubert.hpp"

namespace chss {

// ---------------------------------------------------------------------------
// Young diagrams in the 𝚒 × (n+1−𝚒) rectangle: the classical indexing of the
// Schubert varieties of Gr(𝚒, n+1) = A_n/P_𝚒.  Stored run-length:
// π = (p₁^{q₁}, …, p_r^{q_r}) with p₁ > ⋯ > p_r ≥ 1, q_ℓ ≥ 1, p₁ ≤ n+1−𝚒 and
// q₁+⋯+q_r ≤ 𝚒.  X_π has codimension |π| in Gr(𝚒, n+1): the empty partition
// is the whole space and the full rectangle is the point.
// ---------------------------------------------------------------------------
struct Partition {
  int i = 0;                              // 1 ≤ 𝚒 ≤ n
  int n_plus_1 = 0;                       // ambient n+1
  std::vector<std::pair<int, int>> runs;  // (part, multiplicity)

  int width() const { return n_plus_1 - i; }  // box columns, n+1−𝚒
  int height() const { return i; }            // box rows, 𝚒
  int r() const { return static_cast<int>(runs.size()); }
  int num_rows() const;  // q₁+⋯+q_r  (= largest part of the conjugate)
  int size() const;      // |π|
  bool empty() const { return runs.empty(); }
  bool full_rectangle() const;
  std::vector<int> parts() const;  // expanded, no trailing zeros

  friend bool operator==(const Partition& x, const Partition& y) {
    return x.i == y.i && x.n_plus_1 == y.n_plus_1 && x.runs == y.runs;
  }
  friend bool operator!=(const Partition& x, const Partition& y) { return !(x == y); }
};

// Build from a weakly decreasing parts list (zero entries allowed; normalized
// away).  Throws std::invalid_argument if the list does not fit the box.
Partition partition_from_parts(int i, int n_plus_1, const std::vector<int>& parts);

// Parse "6,4,4,1,1" or run-length "6 4^2 1^2"; "0" and "" denote the empty
// partition.
Partition parse_partition(int i, int n_plus_1, const std::string& text);
// Canonical run-length text, e.g. "6 4^2 1^2"; the empty partition is "0".
std::string partition_str(const Partition& pi);

// The four-way split by whether the first row spans the box (p₁ = n+1−𝚒)
// and/or the first column does (number of rows = 𝚒):
//   ♠ both, ♥ row only, ♦ column only, ♣ neither.
enum class Suit { Spade, Heart, Diamond, Club };
Suit suit_of(const Partition& pi);
std::string suit_name(Suit s);  // "spade", "heart", "diamond", "club"

// Transpose of the diagram; lives in 𝙿(n+1−𝚒, n+1).
Partition conjugate(const Partition& pi);

// Complement in the rectangle rotated by 180°; same box.  X_{π*} is the
// Poincaré dual of X_π, and |π| + |π*| = 𝚒(n+1−𝚒).
Partition dual(const Partition& pi);

// All of 𝙿(𝚒, n+1) — binomial(n+1, 𝚒) elements — sorted by (size, parts).
std::vector<Partition> enumerate_partitions(int i, int n_plus_1);

// Invariants of X_π: dim = |π*|; 𝖺 = (number of distinct part sizes of π*)−1;
// 𝙹 = ({q₁, q₁+q₂, …, q₁+⋯+q_r} ∪ {n+1−p₁, …, n+1−p_r}) ∖ {𝚒}.
// The improper cells (empty partition, full rectangle) get (0, ∅).
SchubertDescriptor aJ_from_partition(const Partition& pi);

// Inverse of aJ_from_partition on realizable proper pairs; throws
// std::invalid_argument for anything else or when x is not an A_n/P_𝚒 space.
Partition partition_from_aJ(const ChssSpace& x, int a, NodeSet J);

// Bridge to the Hasse layer: Δ(w) of X_π consists of the grid roots
// α_{𝚒−r+1} + ⋯ + α_{𝚒+c−1} over the boxes (r,c) of π*.
Bits bits_from_partition(const ChssSpace& x, const Partition& pi);
Partition partition_from_bits(const ChssSpace& x, Bits delta);

}  // namespace chss
