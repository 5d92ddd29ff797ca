#include "chss/chevalley.hpp"

#include <cstdlib>
#include <string>

namespace chss {

namespace {

// Resolve N(x,y) for an arbitrary sign pattern from the positive×positive
// block of `table` (assumed filled for all positive pairs whose sum has
// height ≤ the height of root(x)+root(y)).  Rules used:
//   N(y,x) = −N(x,y);  N(−x,−y) = −N(x,y);
//   x+y+z = 0  ⇒  N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y).
Rat resolve(const RootSystem& rs, const std::vector<int>& table, int x, int y) {
  const int m = rs.num_pos;
  auto pos_entry = [&](int a, int b) -> Rat {
    return Rat(table[static_cast<std::size_t>(a) * static_cast<std::size_t>(2 * m) +
                     static_cast<std::size_t>(b)]);
  };
  if (rs.negate(x) == y) throw internal_error("resolve on opposite roots");
  int s = rs.sum_id(x, y);
  if (s < 0) return Rat(0);
  bool px = rs.is_positive(x), py = rs.is_positive(y);
  if (px && py) return pos_entry(x, y);
  if (!px && !py) return -pos_entry(rs.negate(x), rs.negate(y));
  if (!px) return -resolve(rs, table, y, x);
  // x positive, y negative, x+y = root s.
  int z = rs.negate(s);
  if (rs.is_positive(s)) {
    // (y, z) are both negative; N(y,z) = −N(−y,−z) with (−y) + (−z) = x.
    Rat nyz = -pos_entry(rs.negate(y), s);
    return rs.inner(z, z) / rs.inner(x, x) * nyz;
  }
  // s negative ⇒ z positive; (z, x) both positive with z + x = −y.
  Rat nzx = pos_entry(z, x);
  return rs.inner(z, z) / rs.inner(y, y) * nzx;
}

int rat_to_int(const Rat& v, const char* what) {
  if (boost::multiprecision::denominator(v) != 1)
    throw internal_error(std::string("non-integral structure constant in ") + what);
  auto num = boost::multiprecision::numerator(v);
  if (num < -1000000 || num > 1000000)
    throw internal_error(std::string("structure constant overflow in ") + what);
  return static_cast<int>(num.convert_to<long long>());
}

}  // namespace

Chevalley Chevalley::build(std::shared_ptr<const RootSystem> rs_in) {
  Chevalley ch;
  ch.rs_ = std::move(rs_in);
  const RootSystem& rs = *ch.rs_;
  const int m = rs.num_pos;
  ch.table_.assign(static_cast<std::size_t>(2 * m) * static_cast<std::size_t>(2 * m), 0);

  // Fill positive pairs in increasing height of the sum.  Roots are already
  // sorted by (height, lex), so iterating sums in id order works.
  for (int g = 0; g < m; ++g) {
    const Root& gamma = rs.root(g);
    if (gamma.height() < 2) continue;
    // Extraspecial pair: minimal α in root order with γ − α ∈ Δ⁺ (α is then
    // always simple, since height-1 roots come first).
    int a1 = -1, b1 = -1;
    for (int a = 0; a < m; ++a) {
      int b = rs.index_of(gamma - rs.root(a));
      if (b >= 0 && b < m) {
        a1 = a;
        b1 = b;
        break;
      }
    }
    if (a1 < 0 || rs.root(a1).height() != 1)
      throw internal_error("extraspecial pair not found or not simple");
    int p = rs.string_down(b1, a1);
    ch.at(a1, b1) = p + 1;
    ch.at(b1, a1) = -(p + 1);

    // Remaining decompositions γ = α₂ + β₂ via the four-term identity on
    // (x, y, z) = (−α₂, α₁, β₁), whose pairwise sums avoid 0 and whose total
    // is β₂:
    //   N(−α₂,α₁)N(α₁−α₂,β₁) + N(α₁,β₁)N(γ,−α₂) + N(β₁,−α₂)N(β₁−α₂,α₁) = 0.
    for (int a2 = a1 + 1; a2 < m; ++a2) {
      if (a2 == b1) continue;
      int b2 = rs.index_of(gamma - rs.root(a2));
      if (b2 < 0 || b2 >= m || b2 < a2) continue;  // each unordered pair once
      Rat t1(0), t3(0);
      Rat r1 = resolve(rs, ch.table_, rs.negate(a2), a1);
      if (r1 != 0) {
        int d = rs.index_of(rs.root(a1) - rs.root(a2));
        if (d < 0) throw internal_error("four-term bookkeeping (a1-a2)");
        t1 = r1 * resolve(rs, ch.table_, d, b1);
      }
      Rat r3 = resolve(rs, ch.table_, b1, rs.negate(a2));
      if (r3 != 0) {
        int e = rs.index_of(rs.root(b1) - rs.root(a2));
        if (e < 0) throw internal_error("four-term bookkeeping (b1-a2)");
        t3 = r3 * resolve(rs, ch.table_, e, a1);
      }
      // N(γ,−α₂) = −(T1+T3)/N(α₁,β₁), then transport along the zero-sum
      // triple (α₂, β₂, −γ): N(α₂,β₂) = −N(γ,−α₂)·(γ,γ)/(β₂,β₂).
      Rat n_g_ma2 = -(t1 + t3) / Rat(p + 1);
      Rat val = -n_g_ma2 * rs.inner(g, g) / rs.inner(b2, b2);
      int n = rat_to_int(val, "positive-pair fill");
      if (n == 0) throw internal_error("vanishing structure constant on a root pair");
      ch.at(a2, b2) = n;
      ch.at(b2, a2) = -n;
    }
  }

  // Extend to the full table.
  for (int x = 0; x < 2 * m; ++x) {
    for (int y = 0; y < 2 * m; ++y) {
      if (rs.negate(x) == y) continue;
      if (rs.is_positive(x) && rs.is_positive(y)) continue;
      if (rs.sum_id(x, y) < 0) continue;
      ch.at(x, y) = rat_to_int(resolve(rs, ch.table_, x, y), "table extension");
    }
  }
  return ch;
}

std::pair<int, int> Chevalley::extraspecial(int gamma_id) const {
  const RootSystem& rs = *rs_;
  if (!rs.is_positive(gamma_id) || rs.root(gamma_id).height() < 2)
    throw std::invalid_argument("extraspecial: need a positive non-simple root");
  const Root& gamma = rs.root(gamma_id);
  for (int a = 0; a < rs.num_pos; ++a) {
    int b = rs.index_of(gamma - rs.root(a));
    if (b >= 0 && b < rs.num_pos) return {a, b};
  }
  throw internal_error("extraspecial pair not found");
}

void Chevalley::verify(std::size_t samples) const {
  const RootSystem& rs = *rs_;
  const int nr = 2 * rs.num_pos;

  // Pairwise identities.
  for (int x = 0; x < nr; ++x) {
    for (int y = 0; y < nr; ++y) {
      if (rs.negate(x) == y) continue;
      int n = n_const(x, y);
      if (n != -n_const(y, x)) throw internal_error("antisymmetry failed");
      if (n != -n_const(rs.negate(x), rs.negate(y))) throw internal_error("negation rule failed");
      int s = rs.sum_id(x, y);
      if (s < 0) {
        if (n != 0) throw internal_error("nonzero constant on a non-root sum");
      } else {
        int p = rs.string_down(y, x);
        if (std::abs(n) != p + 1) throw internal_error("|N| != p+1 on a root pair");
      }
    }
  }

  // Coroot Jacobi: x+y+z = 0 ⇒ N(x,y)·z^∨ + N(y,z)·x^∨ + N(z,x)·y^∨ = 0.
  for (int x = 0; x < nr; ++x) {
    for (int y = 0; y < nr; ++y) {
      if (rs.negate(x) == y) continue;
      int s = rs.sum_id(x, y);
      if (s < 0) continue;
      int z = rs.negate(s);
      Rat nxy(n_const(x, y)), nyz(n_const(y, z)), nzx(n_const(z, x));
      for (int i = 0; i < rs.rank; ++i) {
        Rat acc = nxy * Rat(2 * rs.root(z)[i]) / rs.inner(z, z) +
                  nyz * Rat(2 * rs.root(x)[i]) / rs.inner(x, x) +
                  nzx * Rat(2 * rs.root(y)[i]) / rs.inner(y, y);
        if (acc != 0) throw internal_error("coroot Jacobi identity failed");
      }
    }
  }

  if (rs.num_pos <= 40) {
    verify_four_term_full();
  } else {
    XorShift64 rng(0x5eed5eed5eedull);
    for (std::size_t it = 0; it < samples; ++it) {
      int x = static_cast<int>(rng.below(static_cast<uint64_t>(nr)));
      int y = static_cast<int>(rng.below(static_cast<uint64_t>(nr)));
      int z = static_cast<int>(rng.below(static_cast<uint64_t>(nr)));
      if (rs.negate(x) == y || rs.negate(y) == z || rs.negate(z) == x) continue;
      if (rs.index_of(rs.root(x) + rs.root(y) + rs.root(z)) < 0) continue;
      long long t1 = 0, t2 = 0, t3 = 0;
      int sxy = rs.sum_id(x, y), syz = rs.sum_id(y, z), szx = rs.sum_id(z, x);
      if (sxy >= 0) t1 = static_cast<long long>(n_const(x, y)) * n_const(sxy, z);
      if (syz >= 0) t2 = static_cast<long long>(n_const(y, z)) * n_const(syz, x);
      if (szx >= 0) t3 = static_cast<long long>(n_const(z, x)) * n_const(szx, y);
      if (t1 + t2 + t3 != 0) throw internal_error("four-term identity failed (sampled)");
    }
  }
}

void Chevalley::verify_four_term_full() const {
  const RootSystem& rs = *rs_;
  const int nr = 2 * rs.num_pos;
  for (int x = 0; x < nr; ++x) {
    for (int y = 0; y < nr; ++y) {
      if (rs.negate(x) == y) continue;
      Root xy = rs.root(x) + rs.root(y);
      for (int z = 0; z < nr; ++z) {
        if (rs.negate(y) == z || rs.negate(z) == x) continue;
        if (rs.index_of(xy + rs.root(z)) < 0) continue;
        long long t1 = 0, t2 = 0, t3 = 0;
        int sxy = rs.sum_id(x, y), syz = rs.sum_id(y, z), szx = rs.sum_id(z, x);
        if (sxy >= 0) t1 = static_cast<long long>(n_const(x, y)) * n_const(sxy, z);
        if (syz >= 0) t2 = static_cast<long long>(n_const(y, z)) * n_const(syz, x);
        if (szx >= 0) t3 = static_cast<long long>(n_const(z, x)) * n_const(szx, y);
        if (t1 + t2 + t3 != 0) throw internal_error("four-term identity failed");
      }
    }
  }
}

ScaledChevalley::ScaledChevalley(const Chevalley& base) : base_(&base) {
  lambda_.assign(static_cast<std::size_t>(2 * base.rs().num_pos), Rat(1));
}

ScaledChevalley::ScaledChevalley(const Chevalley& base, std::vector<Rat> lambda_pos)
    : base_(&base) {
  const int m = base.rs().num_pos;
  if (static_cast<int>(lambda_pos.size()) != m)
    throw std::invalid_argument("scale vector must cover the positive roots");
  lambda_.assign(static_cast<std::size_t>(2 * m), Rat(1));
  for (int i = 0; i < m; ++i) {
    if (lambda_pos[static_cast<std::size_t>(i)] == 0)
      throw std::invalid_argument("zero scale factor");
    lambda_[static_cast<std::size_t>(i)] = lambda_pos[static_cast<std::size_t>(i)];
    lambda_[static_cast<std::size_t>(i + m)] = Rat(1) / lambda_pos[static_cast<std::size_t>(i)];
  }
}

ScaledChevalley ScaledChevalley::random_signs(const Chevalley& base, uint64_t seed) {
  XorShift64 rng(seed);
  const int m = base.rs().num_pos;
  std::vector<Rat> lam(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) lam[static_cast<std::size_t>(i)] = (rng.next() & 1) ? Rat(1) : Rat(-1);
  return ScaledChevalley(base, std::move(lam));
}

}  // namespace chss
