#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chss/chss_space.hpp"
#include "chss/rigidity.hpp"
#include "chss/schubert.hpp"
#include "chss/schur.hpp"

namespace chss {

// ---------------------------------------------------------------------------
// Catalog reports: one record per Hasse element (improper cells included),
// serialized as JSON / CSV / markdown.  JSON output round-trips exactly:
// parse_report_json(emit(r, Format::json)) == r.
// ---------------------------------------------------------------------------

enum class Format { json, csv, md };
Format parse_format(const std::string& s);  // "json" | "csv" | "md"
const char* format_name(Format f);

// Bump when record semantics change; stale cache files are keyed out.
inline constexpr int kSchemaVersion = 1;

// Options shared by the CLI commands.
struct Config {
  Format format = Format::json;
  std::uint64_t span_bound = kDefaultSpanBound;  // floor 1000 (normalize())
  int jobs = 1;
  std::string cache_dir;   // empty: fall back to $CHSS_CACHE_DIR, else no cache
  bool no_cache = false;   // true: never read or write cache files
  bool with_schur = false; // add the wedge-membership column to catalogs

  // Clamp span_bound and jobs to their documented floors.
  void normalize();
};

// Resolved cache directory: empty when caching is disabled.
std::string effective_cache_dir(const Config& cfg);

// The same cell viewed in another marked diagram via a diagram automorphism.
struct ConjugateForm {
  std::string space;  // e.g. "A5/P2" — the image of the marked node
  int a = 0;
  NodeSet J = 0;
  friend bool operator==(const ConjugateForm&, const ConjugateForm&) = default;
};

// Everything the library can say about one cell.  Rigidity fields are
// meaningful only when `proper`; they stay at their defaults otherwise.
struct Record {
  Bits delta = 0;
  std::vector<int> word;  // a reduced word (empty for the point)
  int a = 0;
  NodeSet J = 0;
  int dim = 0;
  bool smooth = false;
  bool proper = false;
  std::string partition;  // shape in the Grassmannian dictionary (family A)
  int a_star = 0;         // Poincaré-dual invariants (proper cells)
  NodeSet J_star = 0;
  std::vector<ConjugateForm> conjugates;  // non-identity diagram symmetries
  bool h1 = false;
  bool h2 = false;
  bool h_plus = false;
  bool trivial = false;  // wedge power trivially irreducible
  std::optional<Tri> schur;  // present when requested on a proper cell
  std::vector<WitnessPair> h1_witnesses;  // (β, γ) root-id pairs
  std::vector<WitnessPair> h2_witnesses;  // (ε, γ) root-id pairs
  std::vector<PiPair> schur_witnesses;

  friend bool operator==(const Record&, const Record&) = default;
};

struct Report {
  int schema_version = kSchemaVersion;
  std::string space;         // "E6/P6"
  std::string generated_at;  // ISO-8601 UTC
  bool with_schur = false;
  std::uint64_t span_bound = kDefaultSpanBound;
  std::vector<Record> records;  // sorted by (dim, J lexicographic, delta)

  friend bool operator==(const Report&, const Report&) = default;
};

// Hasse enumeration with a reduced word attached to every cell (built
// incrementally: each cell extends a codimension-one subideal's word by the
// unique letter that adds the missing box).
std::vector<HasseElt> enumerate_with_words(const ChssSpace& x);

// One record for a single cell (word taken from elt; catalog order not
// needed).  `with_schur` adds the membership verdict on proper cells.
Record build_record(const ChssSpace& x, const HasseElt& elt, const Config& cfg);

// Full catalog of x.  Uses the cache when enabled (key: space, schema
// version, code version, schur settings); stale or foreign files are
// ignored, never served.
Report build_report(const ChssSpace& x, const Config& cfg);

std::string emit(const Report& r, Format f);
Report parse_report_json(const std::string& text);  // throws std::invalid_argument

// Human-oriented rendering of one record (multi-line "key: value").
std::string record_text(const ChssSpace& x, const Record& rec);

// Linear-combination rendering of a root, e.g. "a1+2a3+a4".
std::string root_str(const RootSystem& rs, int id);

}  // namespace chss
