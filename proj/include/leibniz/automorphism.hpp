#pragma once

#include "leibniz/ring.hpp"

#include <cstddef>
#include <vector>

namespace leibniz {

// An additive automorphism of a finite group, as the matrix of generator
// images together with its inverse.
struct Automorphism {
  Mat fwd;
  Mat inv;
};

GroupElement apply_automorphism(const FgAbelianGroup& g, const Mat& matrix, const GroupElement& x);

// All automorphisms of a finite group, in a deterministic order. Each
// candidate matrix is kept iff it permutes the element list; the inverse is
// recovered from the permutation and the composition is checked.
std::vector<Automorphism> automorphisms(const FgAbelianGroup& g);

// The ring with bracket [x,y]' = phi([phi^-1 x, phi^-1 y]).
LeibnizRing transport(const LeibnizRing& r, const Automorphism& phi);

// Flattened row-major table, for lexicographic comparison of rings on one
// presentation.
Vec flatten_table(const LeibnizRing& r);

LeibnizRing canonical_form(const LeibnizRing& r);
LeibnizRing canonical_form(const LeibnizRing& r, const std::vector<Automorphism>& auts);

bool are_isomorphic(const LeibnizRing& a, const LeibnizRing& b);

} // namespace leibniz
