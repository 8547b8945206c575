// Embedding obstructions: a tangle T sitting inside a knot K forces
// Phi(T) to be contained in Phi(K) as multisets, for every cocycle.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcc/catalog.hpp"
#include "qcc/cocycles.hpp"
#include "qcc/invariants.hpp"

namespace qcc {

struct InvariantSpec {
  std::string quandle, cocycle;
  std::string key() const { return quandle + "/" + cocycle; }
  bool operator==(const InvariantSpec& o) const { return quandle == o.quandle && cocycle == o.cocycle; }
};

// "dihedral:3/mochizuki:3"
InvariantSpec parse_invariant_spec(const std::string& text);
// A named set (prop2, prop3, example-a, ...) or a comma-separated list of specs.
std::vector<InvariantSpec> parse_spec_list(const std::string& text);
std::vector<std::string> spec_set_names();
// Resolved once per key and shared; thread-safe.
CocyclePtr resolve_spec(const InvariantSpec& s);
int spec_quandle_size(const InvariantSpec& s);

// Knot invariant, skipping the state sum when only constant colorings exist.
Multiset knot_invariant(const Diagram& k, const InvariantSpec& s, InvariantCache* cache = nullptr);

struct SpecOutcome {
  bool evaluated = false;
  bool included = false;
};

struct Verdict {
  std::string tangle, variant, knot;
  bool excluded = false;
  int witness = -1;  // index into the spec list
  std::vector<SpecOutcome> per_spec;
  std::optional<Multiset> tangle_ms, knot_ms;  // for the witness spec
  std::string line(const std::vector<InvariantSpec>& specs) const;
};

struct ScanOptions {
  bool full = false;      // evaluate every spec instead of stopping at the first exclusion
  unsigned threads = 0;   // 0: hardware concurrency
  InvariantCache* cache = nullptr;
};

// Tangle-side multisets, one per spec; nullopt marks a skipped spec.
using TangleSide = std::vector<std::optional<Multiset>>;

Verdict check_embedding_obstruction(const TangleSide& side, const std::string& tangle, const std::string& variant,
                                    const Diagram& knot, const std::vector<InvariantSpec>& specs,
                                    const ScanOptions& opt = {});
Verdict check_embedding_obstruction(const Diagram& tangle, const Diagram& knot, const std::vector<InvariantSpec>& specs,
                                    const ScanOptions& opt = {});

struct ScanReport {
  std::string tangle, variant;
  std::vector<InvariantSpec> specs;
  std::vector<std::string> notices;
  std::vector<Verdict> verdicts;

  std::vector<std::string> open() const;
  // knots that spec i alone leaves open (needs full mode or a one-spec scan)
  std::vector<std::string> open_for(size_t i) const;
  std::string lines() const;
  std::string table() const;
};

using KnotList = std::vector<std::pair<std::string, Diagram>>;
KnotList knot_list(const KnotTable& t, bool with_mirrors = false);

TangleSide tangle_side(const Diagram& tangle, const std::vector<InvariantSpec>& specs);
TangleSide disjoint_side(const std::vector<Diagram>& tangles, const std::vector<InvariantSpec>& specs,
                         std::vector<std::string>* notices = nullptr);

ScanReport scan_multisets(const TangleSide& side, const std::string& tangle, const std::string& variant,
                          const KnotList& knots, const std::vector<InvariantSpec>& specs, const ScanOptions& opt = {});
ScanReport scan_table(const Diagram& tangle, const KnotList& knots, const std::vector<InvariantSpec>& specs,
                      const ScanOptions& opt = {});
ScanReport scan_disjoint(const std::vector<Diagram>& tangles, const KnotList& knots,
                         const std::vector<InvariantSpec>& specs, const ScanOptions& opt = {});

// "8_18, 9_29, 9_38"
std::string join_names(const std::vector<std::string>& names);

}  // namespace qcc
