#include "chss/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace chss {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
  }
  throw internal_error("bad family");
}

std::optional<Family> parse_family(const std::string& s) {
  std::string u;
  for (char ch : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (u == "A") return Family::A;
  if (u == "B") return Family::B;
  if (u == "C") return Family::C;
  if (u == "D") return Family::D;
  if (u == "E6") return Family::E6;
  if (u == "E7") return Family::E7;
  return std::nullopt;
}

bool LieType::valid() const {
  if (rank > kMaxRank) return false;
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E6: return rank == 6;
    case Family::E7: return rank == 7;
  }
  return false;
}

std::string LieType::name() const {
  switch (family) {
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    default: return family_name(family) + std::to_string(rank);
  }
}

bool LieType::simply_laced() const {
  return family == Family::A || family == Family::D || family == Family::E6 ||
         family == Family::E7;
}

LieType parse_lie_type(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty Lie type");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::string digits = s.substr(1);
  if (digits.empty()) throw std::invalid_argument("Lie type needs a rank: " + s);
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("bad Lie type: " + s);
  int n = std::stoi(digits);
  LieType t{};
  switch (f) {
    case 'A': t = {Family::A, n}; break;
    case 'B': t = {Family::B, n}; break;
    case 'C': t = {Family::C, n}; break;
    case 'D': t = {Family::D, n}; break;
    case 'E':
      if (n == 6) t = {Family::E6, 6};
      else if (n == 7) t = {Family::E7, 7};
      else throw std::invalid_argument("unsupported exceptional type: " + s);
      break;
    default: throw std::invalid_argument("bad Lie type: " + s);
  }
  if (!t.valid()) throw std::invalid_argument("rank out of range for " + s);
  return t;
}

std::string Root::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < n; ++i) {
    if (i) os << ',';
    os << static_cast<int>(c[static_cast<std::size_t>(i)]);
  }
  os << ')';
  return os.str();
}

namespace {

// Fill the Cartan matrix C[i][j] = ⟨α_j, α_i^∨⟩, 0-based, Bourbaki numbering.
void fill_cartan(LieType t, std::array<std::array<int, kMaxRank>, kMaxRank>& C) {
  int n = t.rank;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i == j) ? 2 : 0;
  auto link = [&](int i, int j) {  // simple edge (0-based)
    C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    C[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      // α_n short: ⟨α_{n-1}, α_n^∨⟩ = −2.
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      C[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 2)] = -2;
      C[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 1)] = -1;
      break;
    case Family::C:
      // α_n long: ⟨α_n, α_{n-1}^∨⟩ = −2.
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      C[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 1)] = -2;
      C[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 2)] = -1;
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E6:
      // Chain 1−3−4−5−6 with node 2 attached to 4.
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      link(1, 3);
      break;
    case Family::E7:
      // Chain 1−3−4−5−6−7 with node 2 attached to 4.
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      link(1, 3);
      break;
  }
}

}  // namespace

RootSystem RootSystem::build(LieType t) {
  if (!t.valid()) throw std::invalid_argument("invalid Lie type " + t.name());
  RootSystem rs;
  rs.type = t;
  rs.rank = t.rank;
  int n = t.rank;
  fill_cartan(t, rs.cartan_);

  // Symmetrizer: d_i = (α_i,α_i)/2, normalized so long roots have d = 1.
  rs.sym_.assign(static_cast<std::size_t>(n), Rat(1));
  if (t.family == Family::B) {
    rs.sym_[static_cast<std::size_t>(n - 1)] = Rat(1, 2);  // α_n short
  } else if (t.family == Family::C) {
    for (int i = 0; i + 1 < n; ++i) rs.sym_[static_cast<std::size_t>(i)] = Rat(1, 2);  // α_n long
  }

  // Gram matrix over simple roots: (α_i,α_j) = d_i·C[i][j].
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rs.gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          rs.sym_[static_cast<std::size_t>(i)] *
          Rat(rs.cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  // Sanity: symmetric.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          rs.gram_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw internal_error("asymmetric Gram matrix for " + t.name());

  // Generate all positive roots by closing the simple roots under root
  // strings: for a known positive root β and simple α_i, β + kα_i is a root
  // for 0 ≤ k ≤ q where q = p − ⟨β, α_i^∨⟩ and p is the string-down length.
  std::vector<Root> pos;
  std::unordered_map<Root, int, RootHash> seen;
  for (int i = 0; i < n; ++i) {
    Root r{};
    r.n = static_cast<int16_t>(n);
    r[i] = 1;
    pos.push_back(r);
    seen.emplace(r, i);
  }
  std::size_t head = 0;
  while (head < pos.size()) {
    Root beta = pos[head++];
    for (int i = 0; i < n; ++i) {
      Root alpha{};
      alpha.n = static_cast<int16_t>(n);
      alpha[i] = 1;
      // p = how far beta − kα_i stays a root (or beta itself for k=0).
      int p = 0;
      Root down = beta - alpha;
      while (!down.is_zero() && seen.count(down)) {
        ++p;
        down = down - alpha;
      }
      // ⟨β, α_i^∨⟩ = Σ_j C[i][j]·β_j.
      int pair = 0;
      for (int j = 0; j < n; ++j)
        pair += rs.cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                beta[j];
      int q = p - pair;
      Root up = beta + alpha;
      for (int k = 1; k <= q; ++k) {
        if (!seen.count(up)) {
          seen.emplace(up, static_cast<int>(pos.size()));
          pos.push_back(up);
        }
        up = up + alpha;
      }
    }
  }

  // Expected cardinality as an internal invariant.
  if (static_cast<int>(pos.size()) != positive_root_count(t))
    throw internal_error("positive root count mismatch for " + t.name());

  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a < b;
  });

  rs.num_pos = static_cast<int>(pos.size());
  rs.roots_ = pos;
  rs.roots_.reserve(static_cast<std::size_t>(2 * rs.num_pos));
  for (int i = 0; i < rs.num_pos; ++i) rs.roots_.push_back(-pos[static_cast<std::size_t>(i)]);
  rs.index_.clear();
  for (int i = 0; i < 2 * rs.num_pos; ++i) rs.index_.emplace(rs.roots_[static_cast<std::size_t>(i)], i);

  rs.simple_ids_.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    Root r{};
    r.n = static_cast<int16_t>(n);
    r[i] = 1;
    rs.simple_ids_[static_cast<std::size_t>(i)] = rs.index_.at(r);
  }

  // Highest root: unique positive root of maximal height; verify no α_i can
  // be added.
  rs.highest_root_id_ = rs.num_pos - 1;
  const Root& hi = rs.roots_[static_cast<std::size_t>(rs.highest_root_id_)];
  if (rs.num_pos >= 2 &&
      rs.roots_[static_cast<std::size_t>(rs.num_pos - 2)].height() == hi.height())
    throw internal_error("highest root is not unique for " + t.name());
  for (int i = 0; i < n; ++i) {
    Root alpha{};
    alpha.n = static_cast<int16_t>(n);
    alpha[i] = 1;
    if (rs.index_.count(hi + alpha))
      throw internal_error("highest root admits a raise for " + t.name());
  }
  return rs;
}

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::simple_node_of(int id) const {
  const Root& r = root(id);
  if (r.height() != 1) return -1;
  for (int i = 0; i < rank; ++i)
    if (r[i] == 1) return i;
  return -1;
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
  Rat s(0);
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (b[j] == 0) continue;
      s += Rat(a[i]) * Rat(b[j]) * gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return s;
}

int RootSystem::pairing(const Root& beta, const Root& alpha) const {
  Rat val = 2 * inner(beta, alpha) / inner(alpha, alpha);
  Rat num = boost::multiprecision::numerator(val);
  Rat den = boost::multiprecision::denominator(val);
  if (den != 1) throw internal_error("non-integral Cartan pairing");
  if (num < Rat(-1000000) || num > Rat(1000000)) throw internal_error("pairing overflow");
  return static_cast<int>(num.convert_to<long long>());
}

Root RootSystem::reflect(const Root& beta, const Root& alpha) const {
  int k = pairing(beta, alpha);
  Root r = beta;
  for (int i = 0; i < rank; ++i) r[i] = static_cast<int16_t>(r[i] - k * alpha[i]);
  return r;
}

int RootSystem::reflect_id(int beta, int alpha) const {
  int id = index_of(reflect(root(beta), root(alpha)));
  if (id < 0) throw internal_error("reflection left the root system");
  return id;
}

Root RootSystem::reflect_simple(const Root& beta, int node) const {
  // ⟨β, α_node^∨⟩ from the Cartan matrix (valid for arbitrary weights β in
  // the root lattice).
  int k = 0;
  for (int j = 0; j < rank; ++j)
    k += cartan_[static_cast<std::size_t>(node)][static_cast<std::size_t>(j)] * beta[j];
  Root r = beta;
  r[node] = static_cast<int16_t>(r[node] - k);
  return r;
}

int RootSystem::string_down(int beta, int alpha) const {
  int p = 0;
  Root r = root(beta) - root(alpha);
  while (!r.is_zero() && index_.count(r)) {
    ++p;
    r = r - root(alpha);
  }
  return p;
}

int RootSystem::string_up(int beta, int alpha) const {
  int q = 0;
  Root r = root(beta) + root(alpha);
  while (!r.is_zero() && index_.count(r)) {
    ++q;
    r = r + root(alpha);
  }
  return q;
}

int positive_root_count(LieType t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E6: return 36;
    case Family::E7: return 63;
  }
  throw internal_error("bad family");
}

}  // namespace chss
