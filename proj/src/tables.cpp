#include "chss/tables.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "chss/partitions.hpp"
#include "chss/rigidity.hpp"
#include "chss/schubert.hpp"
#include "chss/util.hpp"

namespace chss {

namespace {

using AJ = std::pair<int, NodeSet>;

std::string nodes_str(NodeSet s) {
  std::string out = "{";
  bool first = true;
  for (int j : nodes_of(s)) {
    if (!first) out += ",";
    out += std::to_string(j);
    first = false;
  }
  return out + "}";
}

std::string aj_str(const AJ& p) {
  return "(" + std::to_string(p.first) + "," + nodes_str(p.second) + ")";
}

bool is_identity(const NodePerm& phi) {
  for (std::size_t j = 0; j < phi.size(); ++j)
    if (phi[j] != static_cast<int>(j)) return false;
  return true;
}

// All invariant pairs (𝖺, 𝙹) the closed-form classifier accepts, candidates
// ranging over subsets of the unmarked nodes and 0 ≤ 𝖺 ≤ α̃(Z_𝙹).
std::set<AJ> realizable_pairs(const ChssSpace& x) {
  std::set<AJ> out;
  const int n = x.type.rank;
  const NodeSet marked = NodeSet(1) << (x.node - 1);
  for (NodeSet J = 1; J < (NodeSet(1) << n); ++J) {
    if (J & marked) continue;
    int amax = alpha_tilde_zw(x, J);
    for (int a = 0; a <= amax; ++a)
      if (is_realizable(x, a, J)) out.insert({a, J});
  }
  return out;
}

// Invariant pairs of the proper cells, brute-force enumeration.  Also checks
// injectivity and the reconstruction identity Δ(w) = {α : α(Z_𝙹) ≤ 𝖺}.
std::set<AJ> enumerated_pairs(const ChssSpace& x, std::vector<std::string>& diffs) {
  std::set<AJ> out;
  for (const HasseElt& w : enumerate_hasse(x)) {
    SchubertDescriptor d = classify(x, w.delta);
    if (!d.proper()) continue;
    AJ key{d.a, d.J};
    if (!out.insert(key).second)
      diffs.push_back(x.name() + ": invariants " + aj_str(key) +
                      " reached by two distinct cells (classification not injective)");
    if (bits_from_aJ(x, d.a, d.J) != w.delta)
      diffs.push_back(x.name() + ": cell " + bits_to_hex(w.delta) +
                      " is not recovered from its invariants " + aj_str(key));
  }
  return out;
}

void diff_sets(const std::string& space, const std::set<AJ>& got, const std::set<AJ>& want,
               const std::string& what, std::vector<std::string>& diffs) {
  for (const AJ& p : got)
    if (!want.count(p))
      diffs.push_back(space + ": " + what + " " + aj_str(p) + " not matched by the table row");
  for (const AJ& p : want)
    if (!got.count(p))
      diffs.push_back(space + ": table row expects " + what + " " + aj_str(p) +
                      " but enumeration does not produce it");
}

std::vector<ChssSpace> classical_sweep() {
  std::vector<ChssSpace> out;
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) out.push_back(ChssSpace::build({Family::A, n}, i));
  for (int n = 2; n <= 6; ++n) out.push_back(ChssSpace::build({Family::B, n}, 1));
  for (int n = 3; n <= 6; ++n) out.push_back(ChssSpace::build({Family::C, n}, n));
  for (int n = 4; n <= 7; ++n) out.push_back(ChssSpace::build({Family::D, n}, 1));
  for (int n = 4; n <= 7; ++n) out.push_back(ChssSpace::build({Family::D, n}, n));
  return out;
}

// --- the exceptional catalogs (frozen word rows) ----------------------------

void run_exceptional(TableCheck& tc, const ChssSpace& x,
                     const std::vector<ExceptionalRow>& rows) {
  std::map<Bits, SchubertDescriptor> hset;
  for (const HplusEntry& e : hplus_catalog(x))
    if (e.verdict.h_plus) hset.emplace(e.elt.delta, e.desc);

  std::map<Bits, const ExceptionalRow*> word_of;
  for (const ExceptionalRow& row : rows) {
    HasseElt w;
    try {
      w = delta_from_word(x, parse_word(row.word));
    } catch (const std::invalid_argument& e) {
      tc.diffs.push_back(x.name() + " row " + row.word + ": bad word (" + e.what() + ")");
      continue;
    }
    SchubertDescriptor d = classify(x, w.delta);
    auto cell = [&](const std::string& col, const std::string& got, const std::string& want) {
      if (got != want)
        tc.diffs.push_back(x.name() + " row " + row.word + ": " + col + " regenerated " +
                           got + ", listed " + want);
    };
    cell("a", std::to_string(d.a), std::to_string(row.a));
    cell("J", nodes_str(d.J), nodes_str(node_set_from(row.J)));
    cell("dim", std::to_string(d.dim), std::to_string(row.dim));
    if (w.length != row.dim)
      tc.diffs.push_back(x.name() + " row " + row.word + ": word length " +
                         std::to_string(w.length) + " differs from dim " +
                         std::to_string(row.dim));
    if (d.proper()) {
      SchubertDescriptor ds = dual_descriptor(x, d);
      cell("a*", std::to_string(ds.a), std::to_string(row.a_star));
      cell("J*", nodes_str(ds.J), nodes_str(node_set_from(row.J_star)));
    } else {
      tc.diffs.push_back(x.name() + " row " + row.word + ": cell is not proper");
    }
    if (!hset.count(w.delta))
      tc.diffs.push_back(x.name() + " row " + row.word + ": cell does not satisfy H+");
    if (!word_of.emplace(w.delta, &row).second)
      tc.diffs.push_back(x.name() + " row " + row.word + ": duplicate of an earlier row");
  }
  for (const auto& [delta, d] : hset)
    if (!word_of.count(delta))
      tc.diffs.push_back(x.name() + ": H+ cell (" + std::to_string(d.a) + "," +
                         nodes_str(d.J) + ",dim " + std::to_string(d.dim) +
                         ") is missing from the table");

  std::vector<std::pair<Bits, SchubertDescriptor>> sorted(hset.begin(), hset.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& p, const auto& q) {
    if (p.second.dim != q.second.dim) return p.second.dim < q.second.dim;
    return nodes_of(p.second.J) < nodes_of(q.second.J);
  });
  std::ostringstream out;
  out << "# " << x.name() << " cells satisfying H+\n\n";
  out << "| word | a | J | dim | a* | J* |\n|---|---|---|---|---|---|\n";
  for (const auto& [delta, d] : sorted) {
    SchubertDescriptor ds = dual_descriptor(x, d);
    auto it = word_of.find(delta);
    out << "| " << (it != word_of.end() ? it->second->word : std::string("?")) << " | "
        << d.a << " | " << nodes_str(d.J) << " | " << d.dim << " | " << ds.a << " | "
        << nodes_str(ds.J) << " |\n";
  }
  tc.rendered = out.str();
}

// --- suit dictionary ---------------------------------------------------------

void run_suit(TableCheck& tc) {
  std::map<int, SuitRow> by_suit;
  for (const SuitRow& r : suit_rows()) by_suit[r.suit] = r;

  long checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      ChssSpace x = ChssSpace::build({Family::A, n}, i);
      for (const Partition& pi : enumerate_partitions(i, n + 1)) {
        if (pi.empty() || pi.full_rectangle()) continue;
        SchubertDescriptor d = aJ_from_partition(pi);
        const SuitRow& row = by_suit.at(static_cast<int>(suit_of(pi)));
        int p = popcount(d.J);
        int q = 0;
        for (int j : nodes_of(d.J))
          if (j < i) ++q;
        ++checked;
        if (p != 2 * d.a + row.p_offset)
          tc.diffs.push_back(x.name() + " shape " + partition_str(pi) + " (" +
                             suit_name(suit_of(pi)) + "): p = " + std::to_string(p) +
                             ", row gives 2a+" + std::to_string(row.p_offset) + " = " +
                             std::to_string(2 * d.a + row.p_offset));
        if (q != d.a + row.q_offset)
          tc.diffs.push_back(x.name() + " shape " + partition_str(pi) + " (" +
                             suit_name(suit_of(pi)) + "): q = " + std::to_string(q) +
                             ", row gives a+" + std::to_string(row.q_offset) + " = " +
                             std::to_string(d.a + row.q_offset));
      }
    }
  }

  std::ostringstream out;
  out << "# Suits versus (p,q)\n\n| suit | p | q |\n|---|---|---|\n";
  static const char* kP[] = {"2a+2", "2a+1", "2a+1", "2a"};
  static const char* kQ[] = {"a+1", "a+1", "a", "a"};
  for (const SuitRow& r : suit_rows())
    out << "| " << suit_name(static_cast<Suit>(r.suit)) << " | " << kP[r.suit] << " | "
        << kQ[r.suit] << " |\n";
  out << "\nverified over " << checked << " proper shapes with i <= n <= 6\n";
  tc.rendered = out.str();
}

// --- the classification table ------------------------------------------------

void run_bigone(TableCheck& tc) {
  std::ostringstream out;
  out << "# Invariants (a,J) of proper cells\n\n";
  out << "| space | proper cells | invariant pairs | status |\n|---|---|---|---|\n";
  for (const ChssSpace& x : classical_sweep()) {
    std::size_t before = tc.diffs.size();
    std::set<AJ> got = enumerated_pairs(x, tc.diffs);
    std::set<AJ> want = realizable_pairs(x);
    diff_sets(x.name(), got, want, "proper cell", tc.diffs);
    out << "| " << x.name() << " | " << got.size() << " | " << want.size() << " | "
        << (tc.diffs.size() == before ? "ok" : "MISMATCH") << " |\n";
  }
  tc.rendered = out.str();
}

// --- smooth cells satisfying H+ ----------------------------------------------

void run_sm(TableCheck& tc) {
  std::vector<ChssSpace> spaces = classical_sweep();
  spaces.push_back(ChssSpace::build({Family::E6, 6}, 6));
  spaces.push_back(ChssSpace::build({Family::E7, 7}, 7));

  std::ostringstream out;
  out << "# Smooth cells satisfying H+\n\n| space | cells | status |\n|---|---|---|\n";
  for (const ChssSpace& x : spaces) {
    std::size_t before = tc.diffs.size();
    std::set<AJ> got;
    for (const HplusEntry& e : hplus_catalog(x))
      if (e.desc.smooth() && e.verdict.h_plus) got.insert({e.desc.a, e.desc.J});

    std::set<AJ> want;
    const int n = x.type.rank;
    const NodeSet marked = NodeSet(1) << (x.node - 1);
    for (NodeSet J = 1; J < (NodeSet(1) << n); ++J) {
      if (J & marked) continue;
      if (is_realizable(x, 0, J) && golden_smooth_hplus(x, 0, J)) want.insert({0, J});
    }
    diff_sets(x.name(), got, want, "smooth H+ cell", tc.diffs);

    std::string cells;
    for (const AJ& p : got) {
      if (!cells.empty()) cells += " ";
      cells += nodes_str(p.second);
    }
    out << "| " << x.name() << " | " << (cells.empty() ? "-" : cells) << " | "
        << (tc.diffs.size() == before ? "ok" : "MISMATCH") << " |\n";
  }
  tc.rendered = out.str();
}

// --- cells satisfying H+ -------------------------------------------------------

void run_hplus(TableCheck& tc) {
  std::vector<ChssSpace> spaces = classical_sweep();
  spaces.push_back(ChssSpace::build({Family::E6, 6}, 6));
  spaces.push_back(ChssSpace::build({Family::E7, 7}, 7));

  // Brute-force H₊ sets, one per space, so closure checks can cross spaces.
  std::map<std::string, std::set<AJ>> brute;
  for (const ChssSpace& x : spaces) {
    std::set<AJ>& s = brute[x.name()];
    for (const HplusEntry& e : hplus_catalog(x))
      if (e.verdict.h_plus) s.insert({e.desc.a, e.desc.J});
  }

  std::ostringstream out;
  out << "# Cells satisfying H+\n\n| space | H+ cells | status |\n|---|---|---|\n";
  for (const ChssSpace& x : spaces) {
    std::size_t before = tc.diffs.size();
    const std::set<AJ>& got = brute.at(x.name());

    std::set<AJ> want;
    const Family fam = x.type.family;
    if (fam == Family::E6 || fam == Family::E7) {
      for (const ExceptionalRow& row : fam == Family::E6 ? exceptional_rows_e6()
                                                         : exceptional_rows_e7())
        want.insert({row.a, node_set_from(row.J)});
    } else {
      for (const AJ& p : realizable_pairs(x)) {
        SchubertDescriptor d{p.first, p.second, popcount(bits_from_aJ(x, p.first, p.second))};
        if (closed_form_hplus(x, d)) want.insert(p);
      }
    }
    diff_sets(x.name(), got, want, "H+ cell", tc.diffs);

    // Closure under Poincaré duality and diagram symmetries.
    for (const AJ& p : got) {
      SchubertDescriptor d{p.first, p.second, popcount(bits_from_aJ(x, p.first, p.second))};
      SchubertDescriptor ds = dual_descriptor(x, d);
      if (!got.count({ds.a, ds.J}))
        tc.diffs.push_back(x.name() + ": dual of H+ cell " + aj_str(p) + " fails H+");
      for (const NodePerm& phi : diagram_automorphisms(x.type)) {
        if (is_identity(phi)) continue;
        SchubertDescriptor cd = conjugate_descriptor(d, phi);
        std::string target =
            x.type.name() + "/P" + std::to_string(phi[static_cast<std::size_t>(x.node)]);
        auto it = brute.find(target);
        if (it == brute.end()) continue;  // image space not in this sweep
        if (!it->second.count({cd.a, cd.J}))
          tc.diffs.push_back(x.name() + ": conjugate of H+ cell " + aj_str(p) + " in " +
                             target + " fails H+");
      }
    }

    out << "| " << x.name() << " | " << got.size() << " | "
        << (tc.diffs.size() == before ? "ok" : "MISMATCH") << " |\n";
  }
  tc.rendered = out.str();
}

}  // namespace

TableId parse_table_id(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "bigone") return TableId::bigone;
  if (t == "suit") return TableId::suit;
  if (t == "e6") return TableId::e6;
  if (t == "e7") return TableId::e7;
  if (t == "sm") return TableId::sm;
  if (t == "hplus" || t == "h+") return TableId::hplus;
  throw std::invalid_argument("unknown table id: " + s +
                              " (expected bigone, suit, E6, E7, sm, or Hplus)");
}

const char* table_id_name(TableId id) {
  switch (id) {
    case TableId::bigone: return "bigone";
    case TableId::suit: return "suit";
    case TableId::e6: return "E6";
    case TableId::e7: return "E7";
    case TableId::sm: return "sm";
    default: return "Hplus";
  }
}

TableCheck run_table(TableId id, int /*jobs*/) {
  TableCheck tc;
  tc.id = id;
  switch (id) {
    case TableId::e6:
      run_exceptional(tc, ChssSpace::build({Family::E6, 6}, 6), exceptional_rows_e6());
      break;
    case TableId::e7:
      run_exceptional(tc, ChssSpace::build({Family::E7, 7}, 7), exceptional_rows_e7());
      break;
    case TableId::suit:
      run_suit(tc);
      break;
    case TableId::bigone:
      run_bigone(tc);
      break;
    case TableId::sm:
      run_sm(tc);
      break;
    case TableId::hplus:
      run_hplus(tc);
      break;
  }
  return tc;
}

}  // namespace chss
