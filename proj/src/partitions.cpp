#include "chss/partitions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chss {

namespace {

void validate(const Partition& pi) {
  if (pi.i < 1 || pi.n_plus_1 <= pi.i)
    throw std::invalid_argument("partition box needs 1 <= i <= n");
  int prev = pi.width() + 1;
  int rows = 0;
  for (auto [p, q] : pi.runs) {
    if (p < 1 || q < 1 || p >= prev)
      throw std::invalid_argument("runs need strictly decreasing parts within the box");
    prev = p;
    rows += q;
  }
  if (rows > pi.height()) throw std::invalid_argument("partition has more rows than the box");
}

// p_ℓ with the conventions p_{r+1} = 0 (1-based ℓ).
int part_at(const Partition& pi, int l) {
  return l <= pi.r() ? pi.runs[static_cast<std::size_t>(l - 1)].first : 0;
}
int mult_at(const Partition& pi, int l) {
  return pi.runs[static_cast<std::size_t>(l - 1)].second;
}

}  // namespace

int Partition::num_rows() const {
  int rows = 0;
  for (auto [p, q] : runs) rows += q;
  return rows;
}

int Partition::size() const {
  int total = 0;
  for (auto [p, q] : runs) total += p * q;
  return total;
}

bool Partition::full_rectangle() const {
  return r() == 1 && runs[0].first == width() && runs[0].second == height();
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  for (auto [p, q] : runs) out.insert(out.end(), static_cast<std::size_t>(q), p);
  return out;
}

Partition partition_from_parts(int i, int n_plus_1, const std::vector<int>& parts) {
  Partition pi;
  pi.i = i;
  pi.n_plus_1 = n_plus_1;
  int prev = -1;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("negative part");
    if (prev >= 0 && p > prev) throw std::invalid_argument("parts must be weakly decreasing");
    prev = p;
    if (p == 0) continue;
    if (!pi.runs.empty() && pi.runs.back().first == p)
      ++pi.runs.back().second;
    else
      pi.runs.push_back({p, 1});
  }
  validate(pi);
  return pi;
}

Partition parse_partition(int i, int n_plus_1, const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream stream(normalized);
  while (stream >> token) {
    std::size_t caret = token.find('^');
    std::size_t pos = 0;
    int p = 0, q = 1;
    try {
      p = std::stoi(token.substr(0, caret), &pos);
      if (pos != (caret == std::string::npos ? token.size() : caret))
        throw std::invalid_argument("trailing characters");
      if (caret != std::string::npos) {
        q = std::stoi(token.substr(caret + 1), &pos);
        if (caret + 1 + pos != token.size()) throw std::invalid_argument("trailing characters");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition token: " + token);
    }
    if (q < 1) throw std::invalid_argument("bad multiplicity in: " + token);
    parts.insert(parts.end(), static_cast<std::size_t>(q), p);
  }
  return partition_from_parts(i, n_plus_1, parts);
}

std::string partition_str(const Partition& pi) {
  if (pi.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto [p, q] : pi.runs) {
    if (!first) out << ' ';
    first = false;
    out << p;
    if (q > 1) out << '^' << q;
  }
  return out.str();
}

Suit suit_of(const Partition& pi) {
  bool row_full = !pi.empty() && pi.runs.front().first == pi.width();
  bool col_full = pi.num_rows() == pi.height();
  if (row_full && col_full) return Suit::Spade;
  if (row_full) return Suit::Heart;
  if (col_full) return Suit::Diamond;
  return Suit::Club;
}

std::string suit_name(Suit s) {
  switch (s) {
    case Suit::Spade: return "spade";
    case Suit::Heart: return "heart";
    case Suit::Diamond: return "diamond";
    case Suit::Club: return "club";
  }
  throw internal_error("bad suit");
}

Partition conjugate(const Partition& pi) {
  validate(pi);
  Partition out;
  out.i = pi.width();
  out.n_plus_1 = pi.n_plus_1;
  const int r = pi.r();
  for (int l = 1; l <= r; ++l) {
    int p = 0;
    for (int m = 1; m <= r - l + 1; ++m) p += mult_at(pi, m);
    int q = part_at(pi, r - l + 1) - part_at(pi, r - l + 2);
    out.runs.push_back({p, q});
  }
  validate(out);
  return out;
}

Partition dual(const Partition& pi) {
  validate(pi);
  const int w = pi.width();
  Partition out;
  out.i = pi.i;
  out.n_plus_1 = pi.n_plus_1;
  if (pi.empty()) {
    out.runs.push_back({w, pi.height()});
    return out;
  }
  if (pi.full_rectangle()) return out;

  const Suit s = suit_of(pi);
  const int r = pi.r();
  const int r_star = s == Suit::Spade ? r - 1 : (s == Suit::Club ? r + 1 : r);
  const bool col_full = (s == Suit::Spade || s == Suit::Diamond);
  for (int l = 1; l <= r_star; ++l) {
    int p = 0, q = 0;
    if (!col_full) {
      // π misses some rows of the box, so the first row of π* spans it.
      if (l == 1) {
        p = w;
        q = pi.height() - pi.num_rows();
      } else if (l == r + 1) {
        p = w - part_at(pi, 1);
        q = mult_at(pi, 1);
      } else if (l == r) {
        p = w - part_at(pi, 2);
        q = mult_at(pi, 2);
      } else {
        p = w - part_at(pi, r - l + 2);
        q = mult_at(pi, r - l + 2);
      }
    } else {
      if (l == 1) {
        p = w - part_at(pi, r);
        q = mult_at(pi, r);
      } else if (l == r && s == Suit::Diamond) {
        p = w - part_at(pi, 1);
        q = mult_at(pi, 1);
      } else {
        p = w - part_at(pi, r - l + 1);
        q = mult_at(pi, r - l + 1);
      }
    }
    out.runs.push_back({p, q});
  }
  validate(out);
  return out;
}

std::vector<Partition> enumerate_partitions(int i, int n_plus_1) {
  std::vector<Partition> out;
  std::vector<int> parts;
  const int w = n_plus_1 - i;
  auto rec = [&](auto&& self, int max_part, int rows_left) -> void {
    out.push_back(partition_from_parts(i, n_plus_1, parts));
    if (rows_left == 0) return;
    for (int p = std::min(max_part, w); p >= 1; --p) {
      parts.push_back(p);
      self(self, p, rows_left - 1);
      parts.pop_back();
    }
  };
  rec(rec, w, i);
  std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.parts() < y.parts();
  });
  return out;
}

SchubertDescriptor aJ_from_partition(const Partition& pi) {
  validate(pi);
  const Partition star = dual(pi);
  SchubertDescriptor d;
  d.dim = star.size();
  if (pi.empty() || pi.full_rectangle()) return d;
  d.a = star.r() - 1;
  std::set<int> nodes;
  int acc = 0;
  for (auto [p, q] : pi.runs) {
    acc += q;
    nodes.insert(acc);
    nodes.insert(pi.n_plus_1 - p);
  }
  nodes.erase(pi.i);
  d.J = node_set_from(std::vector<int>(nodes.begin(), nodes.end()));
  if (!d.proper()) throw internal_error("proper partition produced empty J");
  return d;
}

namespace {

void require_matching_box(const ChssSpace& x, int i, int n_plus_1) {
  if (x.type.family != Family::A || x.type.rank != n_plus_1 - 1 || x.node != i)
    throw std::invalid_argument("partition box does not match the space");
}

}  // namespace

Partition partition_from_aJ(const ChssSpace& x, int a, NodeSet J) {
  if (x.type.family != Family::A)
    throw std::invalid_argument("partition indexing is specific to A_n/P_i");
  if (!is_realizable(x, a, J)) throw std::invalid_argument("no cell has these invariants");
  Partition pi = partition_from_bits(x, bits_from_aJ(x, a, J));
  SchubertDescriptor d = aJ_from_partition(pi);
  if (d.a != a || d.J != J) throw internal_error("partition/invariant round-trip failed");
  return pi;
}

Bits bits_from_partition(const ChssSpace& x, const Partition& pi) {
  validate(pi);
  require_matching_box(x, pi.i, pi.n_plus_1);
  const std::vector<int> lam = dual(pi).parts();
  Bits out = 0;
  for (int row = 1; row <= static_cast<int>(lam.size()); ++row) {
    for (int col = 1; col <= lam[static_cast<std::size_t>(row - 1)]; ++col) {
      Root root;
      root.n = static_cast<int16_t>(x.rank());
      for (int node = pi.i - row + 1; node <= pi.i + col - 1; ++node)
        root.c[static_cast<std::size_t>(node - 1)] = 1;
      out = with_bit(out, x.g1_pos(x.rs().index_of(root)));
    }
  }
  return out;
}

Partition partition_from_bits(const ChssSpace& x, Bits delta) {
  if (x.type.family != Family::A)
    throw std::invalid_argument("partition indexing is specific to A_n/P_i");
  if (!is_ideal(x, delta)) throw std::invalid_argument("not a lower order ideal");
  const int i = x.node;
  std::vector<int> lam(static_cast<std::size_t>(i), 0);
  int boxes = 0;
  for_each_bit(delta, [&](int pos) {
    const Root& root = x.rs().root(x.g1_root(pos));
    int lo = 0, hi = 0;
    for (int node = 1; node <= x.rank(); ++node)
      if (root[node - 1] != 0) {
        if (lo == 0) lo = node;
        hi = node;
      }
    int row = i - lo + 1, col = hi - i + 1;
    lam[static_cast<std::size_t>(row - 1)] = std::max(lam[static_cast<std::size_t>(row - 1)], col);
    ++boxes;
  });
  int total = 0;
  for (int v : lam) total += v;
  if (total != boxes) throw internal_error("ideal is not of Young-diagram shape");
  // lam is π*; complement it (rotated) to recover π.
  std::vector<int> parts;
  for (int row = i; row >= 1; --row) parts.push_back(x.rank() + 1 - i - lam[static_cast<std::size_t>(row - 1)]);
  Partition pi = partition_from_parts(i, x.rank() + 1, parts);
  if (bits_from_partition(x, pi) != delta) throw internal_error("partition/bits round-trip failed");
  return pi;
}

}  // namespace chss
