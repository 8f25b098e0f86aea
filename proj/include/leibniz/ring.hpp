#pragma once

#include "leibniz/group.hpp"
#include "leibniz/ints.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace leibniz {

using BracketTable = std::vector<std::vector<GroupElement>>;

struct DefectWitness {
  enum class Side { Left, Right } side;
  std::size_t i, j, k;
  GroupElement defect;
};

struct ValidationReport {
  bool well_defined = false;
  bool left_leibniz = false;
  bool right_leibniz = false;
  bool symmetric = false;
  bool lie = false;
  std::vector<DefectWitness> witnesses;
};

// An additive group together with the bracket table c_ij = [e_i, e_j].
// Construction checks that the bracket respects the presentation
// (d_i * [e_i, e_j] = d_i * [e_j, e_i] = 0); the Leibniz identities are
// checked separately so a census can reject ill-defined tables cheaply.
class LeibnizRing {
public:
  LeibnizRing(FgAbelianGroup group, BracketTable table);

  const FgAbelianGroup& group() const { return group_; }
  const BracketTable& table() const { return table_; }
  std::size_t generator_count() const { return group_.generator_count(); }

  GroupElement bracket(const GroupElement& x, const GroupElement& y) const;

  // [x,[y,z]] - [[x,y],z] - [y,[x,z]]; identically zero iff left Leibniz.
  GroupElement leibnizator(const GroupElement& x, const GroupElement& y,
                           const GroupElement& z) const;
  // [x,[y,z]] - [[x,y],z] + [[x,z],y]; identically zero iff right Leibniz.
  GroupElement right_defect(const GroupElement& x, const GroupElement& y,
                            const GroupElement& z) const;

  // Each identity is additive in every slot, so vanishing on the n^3
  // generator triples is equivalent to vanishing everywhere.
  bool is_left_leibniz() const;
  bool is_right_leibniz() const;
  bool is_symmetric() const;
  // [x,x] = 0 for all x, decided on generators: zero diagonal plus
  // antisymmetric off-diagonal pairs (strictly stronger than
  // anticommutativity in the presence of 2-torsion).
  bool is_lie() const;

  ValidationReport validate() const;

  bool operator==(const LeibnizRing& o) const {
    return group_ == o.group_ && table_ == o.table_;
  }

  std::string str() const;

private:
  FgAbelianGroup group_;
  BracketTable table_;
};

// Transposed table: new [x,y] = old [y,x]. Swaps the left and right
// identities and is an involution.
LeibnizRing opposite(const LeibnizRing& r);

// The zero bracket on g.
LeibnizRing abelian_ring(const FgAbelianGroup& g);

} // namespace leibniz
