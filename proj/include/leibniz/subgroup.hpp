#pragma once

#include "leibniz/group.hpp"
#include "leibniz/ints.hpp"
#include "leibniz/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace leibniz {

// A subgroup of an FgAbelianGroup, stored as the Hermite normal form of its
// preimage lattice in Z^n (generators stacked over the ambient relations).
// The lattice determines the subgroup and the HNF is unique per lattice, so
// two Subgroup values compare equal exactly when the subgroups are equal.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(FgAbelianGroup ambient, Mat canonical_lattice)
      : ambient_(std::move(ambient)), lattice_(std::move(canonical_lattice)) {}

  const FgAbelianGroup& ambient() const { return ambient_; }
  const Mat& lattice() const { return lattice_; }

  // Canonical generators, as normalized elements with zero rows dropped.
  std::vector<GroupElement> generators() const;

  bool operator==(const Subgroup& o) const {
    return ambient_ == o.ambient_ && lattice_ == o.lattice_;
  }
  bool operator!=(const Subgroup& o) const { return !(*this == o); }
  bool operator<(const Subgroup& o) const { return lattice_ < o.lattice_; }

  std::string str() const;

private:
  FgAbelianGroup ambient_;
  Mat lattice_;
};

Subgroup subgroup_from_generators(const FgAbelianGroup& g, const std::vector<GroupElement>& gens);
Subgroup subgroup_from_rows(const FgAbelianGroup& g, const Mat& rows);
Subgroup zero_subgroup(const FgAbelianGroup& g);
Subgroup whole_subgroup(const FgAbelianGroup& g);

bool member(const Subgroup& s, const GroupElement& x);
bool subgroup_contains(const Subgroup& outer, const Subgroup& inner);

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);

// Invariant factors of the subgroup itself (as an abstract group).
FgAbelianGroup::CanonicalShape subgroup_shape(const Subgroup& s);
Cardinal subgroup_order(const Subgroup& s);

// Quotient g/s in invariant-factor form. Infinite factors come first in the
// resulting presentation; trivial factors are dropped.
struct QuotientMap {
  FgAbelianGroup quotient;
  // Row i is the image of the i-th ambient generator in the quotient.
  std::vector<GroupElement> projection;
  // Row j is a preimage in g of the j-th quotient generator.
  std::vector<GroupElement> section;

  GroupElement apply(const FgAbelianGroup& domain, const GroupElement& x) const;
};

QuotientMap quotient_group(const FgAbelianGroup& g, const Subgroup& s);

// A homomorphism g -> h given by the images of the generators of g.
struct GroupHom {
  FgAbelianGroup domain;
  FgAbelianGroup codomain;
  std::vector<GroupElement> images; // one per generator of the domain

  GroupElement apply(const GroupElement& x) const;
};

// Throws IllDefinedMap when some d_i * images[i] != 0.
void check_well_defined(const GroupHom& f);

// { x in g : f(x) = 0 }, exact for infinite groups (no enumeration).
Subgroup kernel_subgroup(const GroupHom& f);

Subgroup torsion_subgroup(const FgAbelianGroup& g);
Subgroup p_primary_subgroup(const FgAbelianGroup& g, const Int& p);
Subgroup multiples_subgroup(const FgAbelianGroup& g, const Int& n);
// { x : n*x = 0 }
Subgroup torsion_part_subgroup(const FgAbelianGroup& g, const Int& n);

// All subgroups of a small finite group (ascending closure search).
std::vector<Subgroup> all_subgroups(const FgAbelianGroup& g, const Int& max_order = 128);

// Elements of a subgroup of a finite group.
std::vector<GroupElement> subgroup_elements(const Subgroup& s);

} // namespace leibniz
