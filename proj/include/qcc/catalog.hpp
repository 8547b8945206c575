// Bundled knot and tangle tables, and the on-disk invariant cache.
#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qcc/diagrams.hpp"

namespace qcc {

// QCC_DATA_DIR from the environment, else the build-time default.
std::string default_data_dir();
std::string read_file(const std::string& path);

struct KnotEntry {
  std::string name;      // "8_5", mirrors get a trailing '*'
  std::string source;    // the braid line
  std::string symmetry;  // reversible, chiral, ...
  bool is_mirror = false;
  Diagram diagram;
};

struct KnotTable {
  std::vector<KnotEntry> entries;
  const KnotEntry* find(const std::string& name) const;
  std::vector<const KnotEntry*> base() const;  // entries without mirrors, file order
};

// "knot <name> braid <strands> <word> [| <symmetry>]". Mirrors are added for
// every knot whose symmetry is not fully amphicheiral.
KnotTable parse_knot_table(const std::string& text, bool with_mirrors = true);
KnotTable load_knot_table(const std::string& path = "");

struct TangleWitness {
  std::string knot;  // may end in '*'
  std::string closure;
};

struct TangleVariant {
  std::string name, variant;
  std::optional<std::vector<std::string>> colors;  // expected coloring quandles
  std::vector<TangleWitness> witnesses;
  std::string key() const { return name + ":" + variant; }
};

struct TangleEntry {
  std::string name;
  std::string source;  // the expression, or "transcribed"
  Diagram diagram;     // orientation as written (unoriented for expressions)
};

struct ColorCheck {
  std::string tangle, variant, quandle;
  bool expected = false, actual = false;
  unsigned long long count = 0;
};

class TangleTable {
 public:
  std::vector<std::string> checkset;
  std::vector<TangleEntry> tangles;
  std::vector<TangleVariant> variants;

  const TangleEntry* find(const std::string& name) const;
  const TangleVariant* find_variant(const std::string& name, const std::string& variant) const;
  // "6_2:NWin-SWout" or "6_2" with the first listed variant
  Diagram oriented(const std::string& spec) const;
  Diagram oriented(const std::string& name, const std::string& variant) const;
  // Closure diagram of a witness line. The listed variant is tried first; if the
  // closure cannot carry it, the orientation of T that keeps NW's direction and
  // closes consistently is used instead and reported through induced.
  Diagram witness_diagram(const TangleVariant& v, const TangleWitness& w, std::string* induced = nullptr) const;
  // Every colors line against every quandle of the check set.
  std::vector<ColorCheck> check_colors() const;
};

// Strict mode runs check_colors and throws listing the disagreements.
TangleTable parse_tangle_file(const std::string& text, bool strict = false);
TangleTable load_tangle_table(const std::string& path = "", bool strict = false);

// Tab-separated lines: diagram, quandle spec, cocycle spec, multiset text.
class InvariantCache {
 public:
  InvariantCache() = default;  // memory only
  explicit InvariantCache(std::string path);
  // QCC_CACHE from the environment, or memory only when unset
  static InvariantCache from_environment();

  std::optional<std::string> get(const std::string& diagram, const std::string& qspec, const std::string& cspec) const;
  void put(const std::string& diagram, const std::string& qspec, const std::string& cspec, const std::string& value);
  size_t size() const;
  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::string& path() const { return path_; }
  std::vector<std::array<std::string, 4>> entries() const;

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::map<std::string, std::string> map_;
  std::vector<std::string> warnings_;
};

}  // namespace qcc
