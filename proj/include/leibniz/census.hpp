#pragma once

#include "leibniz/automorphism.hpp"
#include "leibniz/family.hpp"
#include "leibniz/invariants.hpp"
#include "leibniz/ring.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace leibniz {

struct CensusOptions {
  Int budget = Int(100000000); // bound on |G|^(n^2) before pruning
  unsigned jobs = 1;
};

// Deterministic lexicographic stream of every well-defined bracket table on
// a finite group that satisfies the left Leibniz identity. Entries are
// pruned per-slot to the elements compatible with the presentation before
// the full identity check runs.
void enumerate_left_leibniz(const FgAbelianGroup& g,
                            const std::function<void(const LeibnizRing&)>& visit,
                            const Int& budget = Int(100000000));

std::vector<LeibnizRing> collect_left_leibniz(const FgAbelianGroup& g,
                                              const Int& budget = Int(100000000));

// Same walk without the identity filter; the visitor returns false to stop.
void enumerate_well_defined_tables(const FgAbelianGroup& g,
                                   const std::function<bool(const LeibnizRing&)>& visit,
                                   const Int& budget = Int(100000000));

struct IsoClass {
  LeibnizRing representative; // equals its own canonical form
  Int orbit_size = 0;
  InvariantReport invariants;
  bool lie = false;
  std::string family_tag; // family id, "Lie", or "Unmatched"
};

struct IsoClassCensus {
  FgAbelianGroup group;
  Int total_valid = 0;
  Int automorphism_count = 0;
  std::vector<IsoClass> classes; // sorted by canonical table
};

IsoClassCensus classify(const FgAbelianGroup& g, const CensusOptions& opts = {});

std::string census_to_string(const IsoClassCensus& census);
void census_to_file(const IsoClassCensus& census, const std::string& path);

struct LoadedCensusClass {
  Int orbit_size = 0;
  std::string family_tag;
  LeibnizRing ring;
};

struct LoadedCensus {
  FgAbelianGroup group;
  Int total_valid = 0;
  Int automorphism_count = 0;
  std::vector<LoadedCensusClass> classes;
};

LoadedCensus load_census(const std::string& path);

// For every (sigma, alpha1, alpha2, beta) in [0,k)^4, builds the
// one-torsion-one-free two-generator table and compares the generator-triple
// left Leibniz verdict with the six congruences mod k. Both directions of
// any disagreement are reported.
struct CongruenceCounterexample {
  Int sigma, alpha1, alpha2, beta;
  bool identity_holds;
  bool congruences_hold;
};

struct CongruenceReport {
  Int k;
  Int tuples_checked = 0;
  std::vector<CongruenceCounterexample> counterexamples;
};

CongruenceReport congruence_equivalence_check(const Int& k);

// True when the factor list is one of the shapes the classification
// censuses cover: [p^m], [p,p], or {p^2,p}.
bool census_covered_shape(const FgAbelianGroup& g);

// Exploratory search over the census classes for a pair of two-sided
// ideals A, B whose bracket span [A,B] is not an ideal. Findings are
// reported as data; there is no pass/fail semantics attached.
struct BracketIdealFinding {
  LeibnizRing ring;
  Subgroup a;
  Subgroup b;
  Subgroup span;
};

std::vector<BracketIdealFinding> search_bracket_ideal_counterexamples(const IsoClassCensus& census);

} // namespace leibniz
