// chss — Schubert cells of compact Hermitian symmetric spaces: classification
// by the invariants (a, J), first-order rigidity (H1/H2), Schur-module
// membership, catalog reports, and reference-table reproduction.
//
// Exit codes: 0 success (tables: match), 1 verified mismatch or internal
// assertion, 2 usage or input error.

#include <algorithm>
#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chss/chss_space.hpp"
#include "chss/partitions.hpp"
#include "chss/report.hpp"
#include "chss/rigidity.hpp"
#include "chss/schubert.hpp"
#include "chss/schur.hpp"
#include "chss/tables.hpp"
#include "chss/util.hpp"

namespace {

using namespace chss;

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

// Parse "a;{j,k,...}" (whitespace tolerated, braces optional).
std::pair<int, NodeSet> parse_aJ(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("expected \"a;{j,k}\" for --aJ, got: " + text);
  std::string a_part = text.substr(0, semi);
  std::string j_part = text.substr(semi + 1);
  int a = 0;
  try {
    std::size_t used = 0;
    a = std::stoi(a_part, &used);
    while (used < a_part.size() && std::isspace(static_cast<unsigned char>(a_part[used])))
      ++used;
    if (used != a_part.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad a in --aJ: " + a_part);
  }
  if (a < 0) throw std::invalid_argument("a must be nonnegative, got " + a_part);
  NodeSet J = 0;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    int j = std::stoi(digits);
    if (j < 1 || j > 31) throw std::invalid_argument("node out of range in --aJ: " + digits);
    J |= NodeSet(1) << (j - 1);
    digits.clear();
  };
  for (char c : j_part) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (c == '{' || c == '}' || c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      throw std::invalid_argument(std::string("unexpected character in --aJ: ") + c);
    }
  }
  flush();
  return {a, J};
}

// Per-family description of which (a, J) occur as invariants of proper cells.
std::string realizability_hint(const ChssSpace& x) {
  const int n = x.type.rank;
  switch (x.type.family) {
    case Family::A:
      return "for " + x.name() + " = " + x.model_name() +
             ", proper cells have p = |J| and q = #{j in J : j < " + std::to_string(x.node) +
             "} with (p, q) one of (2a, a), (2a+1, a), (2a+1, a+1), (2a+2, a+1)";
    case Family::B:
      return "for the odd quadric " + x.name() +
             ", proper cells have J = {j} a single node and a <= 1";
    case Family::C:
      return "for the Lagrangian Grassmannian " + x.name() +
             ", proper cells have |J| = a or a+1";
    case Family::D:
      if (x.node == 1)
        return "for the even quadric " + x.name() +
               ", proper cells have a = 0 with J = {j} or {" + std::to_string(n - 1) + "," +
               std::to_string(n) + "}, or a = 1 with J = {j}, j <= " + std::to_string(n - 2) +
               ", or J = {" + std::to_string(n - 1) + "," + std::to_string(n) + "}";
      return "for the spinor variety " + x.name() +
             ", proper cells have |J| = a, a+1, or a+2 subject to the gap conditions on "
             "consecutive elements of J; run `chss catalog` to list the realizable pairs";
    default:
      return "run `chss catalog " + x.type.name() + " " + std::to_string(x.node) +
             "` to list the realizable invariant pairs";
  }
}

ChssSpace build_space(const std::string& type, int node) {
  return ChssSpace::build(parse_lie_type(type), node);  // throws std::invalid_argument
}

HasseElt elt_for_delta(const ChssSpace& x, Bits delta) {
  for (const HasseElt& w : enumerate_with_words(x))
    if (w.delta == delta) return w;
  throw internal_error("cell " + bits_to_hex(delta) + " missing from the Hasse enumeration");
}

struct CellInput {
  std::string word, aJ, partition;

  int forms() const {
    return int(!word.empty()) + int(!aJ.empty()) + int(!partition.empty());
  }

  HasseElt resolve(const ChssSpace& x) const {
    if (forms() != 1)
      throw std::invalid_argument(
          "give exactly one of --word, --aJ, --partition to identify the cell");
    if (!word.empty()) return delta_from_word(x, parse_word(word));
    if (!partition.empty()) {
      if (x.type.family != Family::A)
        throw std::invalid_argument("--partition applies to Grassmannians (family A) only");
      Partition pi = parse_partition(x.node, x.type.rank + 1, partition);
      return elt_for_delta(x, bits_from_partition(x, pi));
    }
    auto [a, J] = parse_aJ(aJ);
    if (J != 0 && !is_realizable(x, a, J))
      throw std::invalid_argument("invariants (" + std::to_string(a) + ", " + nodes_str(J) +
                                  ") are not realizable by a proper cell: " +
                                  realizability_hint(x));
    if (J != 0 && a > alpha_tilde_zw(x, J))
      throw std::invalid_argument("a exceeds the highest grade for J = " + nodes_str(J));
    return elt_for_delta(x, bits_from_aJ(x, a, J));
  }
};

void print_record(const ChssSpace& x, const Record& rec, const Config& cfg) {
  if (!rec.proper)
    std::cerr << "note: not a proper cell (the point or the full space); rigidity and "
                 "membership verdicts do not apply\n";
  if (cfg.format == Format::md) {
    std::cout << record_text(x, rec);
    return;
  }
  Report r;
  r.space = x.name();
  r.with_schur = cfg.with_schur;
  r.span_bound = cfg.span_bound;
  r.generated_at = "";  // single-record output: no timestamp churn
  r.records.push_back(rec);
  std::cout << emit(r, cfg.format);
}

struct Opts {
  std::string type;
  int node = 0;
  std::string format = "md";
  std::string cache_dir;
  bool no_cache = false;
  std::uint64_t span_bound = kDefaultSpanBound;
  int jobs = 1;
  bool with_schur = false;
  CellInput cell;
  std::string table;
  std::string parts;
  std::string aJ;
  bool all = false;

  Config config() const {
    Config cfg;
    cfg.format = parse_format(format);
    cfg.span_bound = span_bound;
    cfg.jobs = jobs;
    cfg.cache_dir = cache_dir;
    cfg.no_cache = no_cache;
    cfg.with_schur = with_schur;
    cfg.normalize();
    return cfg;
  }
};

void add_space_args(CLI::App* sub, Opts& o) {
  sub->add_option("type", o.type, "Lie type, e.g. A5, D6, E7")->required();
  sub->add_option("node", o.node, "marked node (1-based)")->required();
}

void add_cell_args(CLI::App* sub, Opts& o) {
  sub->add_option("--word", o.cell.word, "reduced word, e.g. 65431 or \"10 9 8\"");
  sub->add_option("--aJ", o.cell.aJ, "invariants, e.g. \"1;{1,4}\"");
  sub->add_option("--partition", o.cell.partition, "shape, e.g. \"6 4^2 1^2\" (family A)");
}

void print_partition_block(const ChssSpace& x, const Partition& pi, std::ostream& out) {
  SchubertDescriptor d = aJ_from_partition(pi);
  out << "shape: " << partition_str(pi) << "\n";
  if (pi.empty() || pi.full_rectangle()) {
    out << "note: not a proper cell (the " << (pi.empty() ? "point" : "full space") << ")\n";
    return;
  }
  out << "suit: " << suit_name(suit_of(pi)) << "\n";
  out << "a: " << d.a << "\nJ: " << nodes_str(d.J) << "\ndim: " << d.dim << "\n";
  Partition pd = dual(pi);
  SchubertDescriptor dd = aJ_from_partition(pd);
  out << "dual shape: " << partition_str(pd) << "  (a=" << dd.a << " J=" << nodes_str(dd.J)
      << ")\n";
  Partition pc = conjugate(pi);
  SchubertDescriptor dc = aJ_from_partition(pc);
  out << "conjugate shape: " << partition_str(pc) << "  in Gr(" << pc.i << ","
      << pc.n_plus_1 << ")  (a=" << dc.a << " J=" << nodes_str(dc.J) << ")\n";
  Partition pdc = conjugate(pd);
  out << "dual conjugate shape: " << partition_str(pdc) << "  in Gr(" << pdc.i << ","
      << pdc.n_plus_1 << ")\n";
}

int run(int argc, char** argv) {
  CLI::App app{
      "Schubert cells of compact Hermitian symmetric spaces: invariants, rigidity, "
      "reports"};
  app.require_subcommand(1);
  Opts o;
  int exit_code = 0;

  CLI::App* cat = app.add_subcommand("catalog", "enumerate every cell with its record");
  add_space_args(cat, o);
  cat->add_option("--format", o.format, "json | csv | md (default md)");
  cat->add_flag("--schur", o.with_schur, "add the wedge-membership column");
  cat->add_option("--span-bound", o.span_bound, "abort threshold for membership spans");
  cat->add_option("--jobs", o.jobs, "worker threads");
  cat->add_option("--cache", o.cache_dir, "cache directory (also $CHSS_CACHE_DIR)");
  cat->add_flag("--no-cache", o.no_cache, "ignore any cache");
  cat->callback([&] {
    ChssSpace x = build_space(o.type, o.node);
    std::cout << emit(build_report(x, o.config()), o.config().format);
  });

  CLI::App* cls = app.add_subcommand("classify", "invariants (a, J) and duals of one cell");
  add_space_args(cls, o);
  add_cell_args(cls, o);
  cls->add_option("--format", o.format, "json | csv | md (default md)");
  cls->callback([&] {
    ChssSpace x = build_space(o.type, o.node);
    HasseElt w = o.cell.resolve(x);
    Config cfg = o.config();
    print_record(x, build_record(x, w, cfg), cfg);
  });

  CLI::App* rig = app.add_subcommand("rigidity", "first-order conditions H1, H2 for one cell");
  add_space_args(rig, o);
  add_cell_args(rig, o);
  rig->add_option("--format", o.format, "json | csv | md (default md)");
  rig->callback([&] {
    ChssSpace x = build_space(o.type, o.node);
    HasseElt w = o.cell.resolve(x);
    if (!classify(x, w.delta).proper())
      throw std::invalid_argument("rigidity applies to proper cells only");
    Config cfg = o.config();
    print_record(x, build_record(x, w, cfg), cfg);
  });

  CLI::App* sch = app.add_subcommand("schur", "wedge-module membership verdict for one cell");
  add_space_args(sch, o);
  add_cell_args(sch, o);
  sch->add_option("--format", o.format, "json | csv | md (default md)");
  sch->add_option("--span-bound", o.span_bound, "abort threshold for membership spans");
  sch->callback([&] {
    ChssSpace x = build_space(o.type, o.node);
    HasseElt w = o.cell.resolve(x);
    if (!classify(x, w.delta).proper())
      throw std::invalid_argument("the membership test applies to proper cells only");
    Config cfg = o.config();
    cfg.with_schur = true;
    print_record(x, build_record(x, w, cfg), cfg);
  });

  CLI::App* tab = app.add_subcommand("tables", "regenerate a reference table and diff it");
  tab->add_option("id", o.table, "bigone | suit | E6 | E7 | sm | Hplus")->required();
  tab->add_option("--jobs", o.jobs, "worker threads");
  tab->callback([&] {
    TableCheck tc = run_table(parse_table_id(o.table), o.jobs);
    std::cout << tc.rendered;
    if (!tc.match()) {
      std::cerr << "table " << table_id_name(tc.id) << ": " << tc.diffs.size()
                << " cell-level difference(s)\n";
      for (const std::string& d : tc.diffs) std::cerr << "  " << d << "\n";
      exit_code = 1;
    }
  });

  CLI::App* par = app.add_subcommand("partition", "Grassmannian shape dictionary");
  add_space_args(par, o);
  par->add_option("--parts", o.parts, "shape, e.g. \"6 4^2 1^2\" or \"6,4,4,1,1\"");
  par->add_option("--aJ", o.aJ, "invariants, e.g. \"1;{1,4}\"");
  par->add_flag("--all", o.all, "list every shape of the space");
  par->callback([&] {
    ChssSpace x = build_space(o.type, o.node);
    if (x.type.family != Family::A)
      throw std::invalid_argument("the shape dictionary applies to family A only");
    int chosen = int(!o.parts.empty()) + int(!o.aJ.empty()) + int(o.all);
    if (chosen != 1)
      throw std::invalid_argument("give exactly one of --parts, --aJ, --all");
    if (o.all) {
      std::cout << "| shape | suit | a | J | dim |\n|---|---|---|---|---|\n";
      for (const Partition& pi : enumerate_partitions(x.node, x.type.rank + 1)) {
        SchubertDescriptor d = aJ_from_partition(pi);
        bool proper = !pi.empty() && !pi.full_rectangle();
        std::cout << "| " << partition_str(pi) << " | "
                  << (proper ? suit_name(suit_of(pi)) : "-") << " | " << d.a << " | "
                  << nodes_str(d.J) << " | " << d.dim << " |\n";
      }
      return;
    }
    Partition pi = !o.parts.empty()
                       ? parse_partition(x.node, x.type.rank + 1, o.parts)
                       : [&] {
                           auto [a, J] = parse_aJ(o.aJ);
                           return partition_from_aJ(x, a, J);  // throws if not realizable
                         }();
    print_partition_block(x, pi, std::cout);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const chss::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
