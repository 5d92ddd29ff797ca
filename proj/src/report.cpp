#include "chss/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "chss/partitions.hpp"
#include "chss/util.hpp"
#include "json.hpp"

namespace chss {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Bump to invalidate cached catalogs when record contents change.
constexpr const char* kCodeVersion = "1";

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

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

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "";
  bool single_digit = std::all_of(word.begin(), word.end(), [](int l) { return l <= 9; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i && !single_digit) out += " ";
    out += std::to_string(word[i]);
  }
  return out;
}

const char* tri_str(Tri t) {
  switch (t) {
    case Tri::no: return "no";
    case Tri::yes: return "yes";
    default: return "indeterminate";
  }
}

Tri tri_from_str(const std::string& s) {
  if (s == "no") return Tri::no;
  if (s == "yes") return Tri::yes;
  if (s == "indeterminate") return Tri::indeterminate;
  throw std::invalid_argument("unknown membership verdict: " + s);
}

bool is_identity(const NodePerm& phi) {
  for (std::size_t j = 0; j < phi.size(); ++j)
    if (phi[j] != static_cast<int>(j)) return false;
  return true;
}

std::string iso_utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

uint64_t cache_key(const std::string& space, const Config& cfg) {
  std::string blob = space;
  blob += "|schema=" + std::to_string(kSchemaVersion);
  blob += "|code=";
  blob += kCodeVersion;
  if (cfg.with_schur) blob += "|schur-bound=" + std::to_string(cfg.span_bound);
  return fnv1a(blob);
}

// --- JSON ------------------------------------------------------------------

ordered_json record_json(const Record& rec) {
  ordered_json o;
  o["delta"] = bits_to_hex(rec.delta);
  o["word"] = rec.word;
  o["a"] = rec.a;
  o["J"] = nodes_of(rec.J);
  o["dim"] = rec.dim;
  o["smooth"] = rec.smooth;
  o["proper"] = rec.proper;
  if (rec.partition.empty())
    o["partition"] = nullptr;
  else
    o["partition"] = rec.partition;
  if (rec.proper)
    o["dual"] = ordered_json{{"a", rec.a_star}, {"J", nodes_of(rec.J_star)}};
  else
    o["dual"] = nullptr;
  ordered_json conj = ordered_json::array();
  for (const ConjugateForm& c : rec.conjugates)
    conj.push_back(ordered_json{{"space", c.space}, {"a", c.a}, {"J", nodes_of(c.J)}});
  o["conjugates"] = conj;
  if (rec.proper) {
    o["h1"] = rec.h1;
    o["h2"] = rec.h2;
    o["h_plus"] = rec.h_plus;
    o["trivial"] = rec.trivial;
  } else {
    o["h1"] = nullptr;
    o["h2"] = nullptr;
    o["h_plus"] = nullptr;
    o["trivial"] = nullptr;
  }
  if (rec.schur)
    o["schur_equal"] = tri_str(*rec.schur);
  else
    o["schur_equal"] = nullptr;
  auto pairs = [](const std::vector<WitnessPair>& ws) {
    ordered_json a = ordered_json::array();
    for (const auto& [b, g] : ws) a.push_back(ordered_json::array({b, g}));
    return a;
  };
  o["h1_witnesses"] = pairs(rec.h1_witnesses);
  o["h2_witnesses"] = pairs(rec.h2_witnesses);
  ordered_json sw = ordered_json::array();
  for (const PiPair& p : rec.schur_witnesses)
    sw.push_back(ordered_json{{"gamma", p.gamma}, {"beta", p.beta}, {"s", p.s}});
  o["schur_witnesses"] = sw;
  return o;
}

Record record_from_json(const json& o) {
  Record rec;
  rec.delta = bits_from_hex(o.at("delta").get<std::string>());
  rec.word = o.at("word").get<std::vector<int>>();
  rec.a = o.at("a").get<int>();
  rec.J = node_set_from(o.at("J").get<std::vector<int>>());
  rec.dim = o.at("dim").get<int>();
  rec.smooth = o.at("smooth").get<bool>();
  rec.proper = o.at("proper").get<bool>();
  if (!o.at("partition").is_null()) rec.partition = o.at("partition").get<std::string>();
  if (!o.at("dual").is_null()) {
    rec.a_star = o.at("dual").at("a").get<int>();
    rec.J_star = node_set_from(o.at("dual").at("J").get<std::vector<int>>());
  }
  for (const json& c : o.at("conjugates")) {
    ConjugateForm cf;
    cf.space = c.at("space").get<std::string>();
    cf.a = c.at("a").get<int>();
    cf.J = node_set_from(c.at("J").get<std::vector<int>>());
    rec.conjugates.push_back(std::move(cf));
  }
  if (!o.at("h1").is_null()) rec.h1 = o.at("h1").get<bool>();
  if (!o.at("h2").is_null()) rec.h2 = o.at("h2").get<bool>();
  if (!o.at("h_plus").is_null()) rec.h_plus = o.at("h_plus").get<bool>();
  if (!o.at("trivial").is_null()) rec.trivial = o.at("trivial").get<bool>();
  if (!o.at("schur_equal").is_null())
    rec.schur = tri_from_str(o.at("schur_equal").get<std::string>());
  for (const json& p : o.at("h1_witnesses"))
    rec.h1_witnesses.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  for (const json& p : o.at("h2_witnesses"))
    rec.h2_witnesses.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  for (const json& p : o.at("schur_witnesses")) {
    PiPair pp;
    pp.gamma = p.at("gamma").get<int>();
    pp.beta = p.at("beta").get<int>();
    pp.s = p.at("s").get<int>();
    rec.schur_witnesses.push_back(pp);
  }
  return rec;
}

// --- CSV -------------------------------------------------------------------

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string emit_csv(const Report& r) {
  std::ostringstream out;
  out << "delta,word,a,J,dim,smooth,proper,partition,a_star,J_star,"
         "h1,h2,h_plus,trivial,schur_equal,h1_witnesses,h2_witnesses,schur_witnesses\n";
  auto b = [](bool v) { return v ? "true" : "false"; };
  for (const Record& rec : r.records) {
    out << bits_to_hex(rec.delta) << ',' << csv_escape(word_str(rec.word)) << ',' << rec.a
        << ',' << csv_escape(nodes_str(rec.J)) << ',' << rec.dim << ',' << b(rec.smooth)
        << ',' << b(rec.proper) << ',' << csv_escape(rec.partition) << ',';
    if (rec.proper) out << rec.a_star;
    out << ',';
    if (rec.proper) out << csv_escape(nodes_str(rec.J_star));
    out << ',';
    if (rec.proper)
      out << b(rec.h1) << ',' << b(rec.h2) << ',' << b(rec.h_plus) << ',' << b(rec.trivial);
    else
      out << ",,,";
    out << ',';
    if (rec.schur) out << tri_str(*rec.schur);
    out << ',';
    auto pairs = [](const std::vector<WitnessPair>& ws) {
      std::string s;
      for (const auto& [x, y] : ws) {
        if (!s.empty()) s += ';';
        s += std::to_string(x) + ":" + std::to_string(y);
      }
      return s;
    };
    out << pairs(rec.h1_witnesses) << ',' << pairs(rec.h2_witnesses) << ',';
    std::string sw;
    for (const PiPair& p : rec.schur_witnesses) {
      if (!sw.empty()) sw += ';';
      sw += std::to_string(p.gamma) + ":" + std::to_string(p.beta) + ":" + std::to_string(p.s);
    }
    out << sw << '\n';
  }
  return out.str();
}

// --- markdown ----------------------------------------------------------------

std::string emit_md(const Report& r) {
  bool with_partition = std::any_of(r.records.begin(), r.records.end(),
                                    [](const Record& rec) { return !rec.partition.empty(); });
  bool with_schur = r.with_schur;
  std::ostringstream out;
  out << "# " << r.space << "\n\n";
  out << "| delta | word |";
  if (with_partition) out << " partition |";
  out << " a | J | dim | smooth | a* | J* | h1 | h2 | H+ | trivial |";
  if (with_schur) out << " schur |";
  out << "\n|---|---|";
  if (with_partition) out << "---|";
  out << "---|---|---|---|---|---|---|---|---|---|";
  if (with_schur) out << "---|";
  out << "\n";
  auto b = [](bool v) { return v ? "yes" : "no"; };
  for (const Record& rec : r.records) {
    out << "| " << bits_to_hex(rec.delta) << " | " << word_str(rec.word) << " |";
    if (with_partition) out << " " << rec.partition << " |";
    out << " " << rec.a << " | " << nodes_str(rec.J) << " | " << rec.dim << " | "
        << b(rec.smooth) << " |";
    if (rec.proper)
      out << " " << rec.a_star << " | " << nodes_str(rec.J_star) << " | " << b(rec.h1) << " | "
          << b(rec.h2) << " | " << b(rec.h_plus) << " | " << b(rec.trivial) << " |";
    else
      out << "  |  |  |  |  |  |";
    if (with_schur) {
      if (rec.schur)
        out << " " << tri_str(*rec.schur) << " |";
      else
        out << "  |";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

Format parse_format(const std::string& s) {
  std::string t = lower(s);
  if (t == "json") return Format::json;
  if (t == "csv") return Format::csv;
  if (t == "md" || t == "markdown") return Format::md;
  throw std::invalid_argument("unknown format: " + s + " (expected json, csv, or md)");
}

const char* format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    default: return "md";
  }
}

void Config::normalize() {
  if (span_bound < 1000) span_bound = 1000;
  if (jobs < 1) jobs = 1;
}

std::string effective_cache_dir(const Config& cfg) {
  if (cfg.no_cache) return "";
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  const char* env = std::getenv("CHSS_CACHE_DIR");
  return env ? env : "";
}

std::vector<HasseElt> enumerate_with_words(const ChssSpace& x) {
  std::vector<HasseElt> cells = enumerate_hasse(x);  // sorted by (length, value)
  std::map<Bits, std::vector<int>> word_of{{Bits{0}, {}}};
  for (HasseElt& w : cells) {
    if (w.delta == 0) continue;
    int drop = -1;  // a maximal box: removing it leaves an ideal
    for (int p : bit_positions(w.delta)) {
      bool maximal = true;
      for (int q : x.upper_covers()[static_cast<std::size_t>(p)])
        if (has_bit(w.delta, q)) {
          maximal = false;
          break;
        }
      if (maximal) {
        drop = p;
        break;
      }
    }
    if (drop < 0) throw internal_error("cell without a maximal box");
    auto parent = word_of.find(without_bit(w.delta, drop));
    if (parent == word_of.end()) throw internal_error("subideal missing from enumeration");
    for (int j = 1; j <= x.type.rank && w.word.empty(); ++j) {
      std::vector<int> cand = parent->second;
      cand.push_back(j);
      try {
        if (delta_from_word(x, cand).delta == w.delta) w.word = std::move(cand);
      } catch (const std::invalid_argument&) {
        // j does not extend the parent word minimally; try the next letter.
      }
    }
    if (w.word.empty()) throw internal_error("no letter extends the subideal's word");
    word_of.emplace(w.delta, w.word);
  }
  return cells;
}

std::string root_str(const RootSystem& rs, int id) {
  const Root& r = rs.root(id);
  std::string s;
  for (int k = 0; k < r.n; ++k) {
    int c = r[k];
    if (c == 0) continue;
    if (!s.empty())
      s += c > 0 ? "+" : "-";
    else if (c < 0)
      s += "-";
    int m = c < 0 ? -c : c;
    if (m != 1) s += std::to_string(m);
    s += "a" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

Record build_record(const ChssSpace& x, const HasseElt& elt, const Config& cfg) {
  Record rec;
  rec.delta = elt.delta;
  rec.word = elt.word;
  SchubertDescriptor d = classify(x, elt.delta);
  rec.a = d.a;
  rec.J = d.J;
  rec.dim = d.dim;
  rec.smooth = d.smooth();
  rec.proper = d.proper();
  if (x.type.family == Family::A)
    rec.partition = partition_str(partition_from_bits(x, elt.delta));
  if (!rec.proper) return rec;

  SchubertDescriptor ds = dual_descriptor(x, d);
  rec.a_star = ds.a;
  rec.J_star = ds.J;
  for (const NodePerm& phi : diagram_automorphisms(x.type)) {
    if (is_identity(phi)) continue;
    SchubertDescriptor cd = conjugate_descriptor(d, phi);
    ConjugateForm cf;
    cf.space = x.type.name() + "/P" + std::to_string(phi[static_cast<std::size_t>(x.node)]);
    cf.a = cd.a;
    cf.J = cd.J;
    rec.conjugates.push_back(std::move(cf));
  }
  RigidityVerdict v = rigidity_verdict(x, elt.delta);
  rec.h1 = v.h1;
  rec.h2 = v.h2;
  rec.h_plus = v.h_plus;
  rec.h1_witnesses = v.h1_witnesses;
  rec.h2_witnesses = v.h2_witnesses;
  rec.trivial = triviality_filter(x, elt.delta);
  if (cfg.with_schur) {
    SchurVerdict sv = schur_equal(x, elt.delta, cfg.span_bound);
    rec.schur = sv.equal;
    rec.schur_witnesses = sv.witnesses;
  }
  return rec;
}

Report build_report(const ChssSpace& x, const Config& cfg) {
  Config c = cfg;
  c.normalize();
  const std::string space = x.name();
  const std::string dir = effective_cache_dir(c);
  std::filesystem::path file;
  if (!dir.empty()) {
    file = std::filesystem::path(dir) /
           ("chss-" + hex64(cache_key(space, c)) + ".json");
    std::ifstream in(file);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      try {
        Report cached = parse_report_json(buf.str());
        if (cached.schema_version == kSchemaVersion && cached.space == space &&
            cached.with_schur == c.with_schur &&
            (!c.with_schur || cached.span_bound == c.span_bound))
          return cached;
      } catch (const std::invalid_argument&) {
        // Unreadable or foreign file: fall through and recompute.
      }
    }
  }

  Report r;
  r.space = space;
  r.with_schur = c.with_schur;
  r.span_bound = c.span_bound;
  std::vector<HasseElt> cells = enumerate_with_words(x);
  r.records.resize(cells.size());
  parallel_for(cells.size(), c.jobs,
               [&](std::size_t k) { r.records[k] = build_record(x, cells[k], c); });
  std::sort(r.records.begin(), r.records.end(), [](const Record& p, const Record& q) {
    if (p.dim != q.dim) return p.dim < q.dim;
    auto pj = nodes_of(p.J), qj = nodes_of(q.J);
    if (pj != qj) return pj < qj;
    return p.delta < q.delta;
  });
  r.generated_at = iso_utc_now();

  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!ec) {
      std::ofstream out(file, std::ios::trunc);
      if (out) out << emit(r, Format::json);
    }
  }
  return r;
}

std::string emit(const Report& r, Format f) {
  if (f == Format::csv) return emit_csv(r);
  if (f == Format::md) return emit_md(r);
  ordered_json jr;
  jr["schema_version"] = r.schema_version;
  jr["space"] = r.space;
  jr["generated_at"] = r.generated_at;
  jr["with_schur"] = r.with_schur;
  jr["span_bound"] = r.span_bound;
  ordered_json recs = ordered_json::array();
  for (const Record& rec : r.records) recs.push_back(record_json(rec));
  jr["records"] = recs;
  return jr.dump(2) + "\n";
}

Report parse_report_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report parse error: ") + e.what());
  }
  try {
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    r.space = j.at("space").get<std::string>();
    r.generated_at = j.at("generated_at").get<std::string>();
    r.with_schur = j.at("with_schur").get<bool>();
    r.span_bound = j.at("span_bound").get<std::uint64_t>();
    for (const json& o : j.at("records")) r.records.push_back(record_from_json(o));
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report field error: ") + e.what());
  }
}

std::string record_text(const ChssSpace& x, const Record& rec) {
  const RootSystem& rs = x.rs();
  std::ostringstream out;
  auto b = [](bool v) { return v ? "yes" : "no"; };
  out << "space: " << x.name() << "\n";
  out << "delta: " << bits_to_hex(rec.delta) << "\n";
  out << "word: " << (rec.word.empty() ? "(empty)" : word_str(rec.word)) << "\n";
  if (!rec.partition.empty()) out << "partition: " << rec.partition << "\n";
  out << "a: " << rec.a << "\n";
  out << "J: " << nodes_str(rec.J) << "\n";
  out << "dim: " << rec.dim << "\n";
  out << "smooth: " << b(rec.smooth) << "\n";
  out << "proper: " << b(rec.proper) << "\n";
  if (!rec.proper) return out.str();
  out << "dual: a=" << rec.a_star << " J=" << nodes_str(rec.J_star) << "\n";
  for (const ConjugateForm& c : rec.conjugates)
    out << "conjugate[" << c.space << "]: a=" << c.a << " J=" << nodes_str(c.J) << "\n";
  out << "h1: " << b(rec.h1) << "\n";
  out << "h2: " << b(rec.h2) << "\n";
  out << "h_plus: " << b(rec.h_plus) << "\n";
  out << "trivial: " << b(rec.trivial) << "\n";
  if (rec.schur) out << "schur_equal: " << tri_str(*rec.schur) << "\n";
  for (const auto& [beta, gamma] : rec.h1_witnesses)
    out << "h1 witness: beta=" << root_str(rs, beta) << " gamma=" << root_str(rs, gamma)
        << "\n";
  for (const auto& [eps, gamma] : rec.h2_witnesses)
    out << "h2 witness: eps=" << root_str(rs, eps) << " gamma=" << root_str(rs, gamma) << "\n";
  for (const PiPair& p : rec.schur_witnesses)
    out << "schur witness: gamma=" << root_str(rs, p.gamma)
        << " beta=" << root_str(rs, p.beta) << " s=" << p.s << "\n";
  return out.str();
}

}  // namespace chss
