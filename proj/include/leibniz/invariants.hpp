#pragma once

#include "leibniz/ring.hpp"
#include "leibniz/subgroup.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace leibniz {

// Subgroup generated by all [a,b], a in A, b in B. Generator pairs suffice
// by biadditivity.
Subgroup bracket_subgroup(const LeibnizRing& r, const Subgroup& a, const Subgroup& b);

Subgroup derived_ideal(const LeibnizRing& r);

// Generated by the squares [x,x]; computed from the generating set
// { [e_i,e_i] } U { [e_i,e_j] + [e_j,e_i] : i < j }, which spans the same
// subgroup: every [x,x] expands into these by biadditivity, and each of
// them is a difference of squares. Requires a left Leibniz ring.
Subgroup leibniz_kernel(const LeibnizRing& r);

// { x : [x,y] = 0 for all y } and the right/two-sided variants, computed as
// exact integer kernels (valid for infinite groups).
Subgroup left_center(const LeibnizRing& r);
Subgroup right_center(const LeibnizRing& r);
Subgroup center(const LeibnizRing& r);

// { x : [y,x] = -[x,y] for all y }.
Subgroup anticenter(const LeibnizRing& r);

Subgroup lambda_ideal(const LeibnizRing& r, const Int& n);
Subgroup omega_ideal(const LeibnizRing& r, const Int& p, unsigned n);
Subgroup p_ideal(const LeibnizRing& r, const Int& p);
Subgroup torsion_ideal(const LeibnizRing& r);
Subgroup multiples_ideal(const LeibnizRing& r, const Int& n);

struct LowerCentralSeries {
  std::vector<Subgroup> terms; // gamma_1 = L first
  bool stabilized = false;
};
LowerCentralSeries lower_central_series(const LeibnizRing& r, std::size_t max_steps = 64);

// gamma series of a subgroup H inside r: gamma_1 = H, gamma_{k+1} = [H, gamma_k].
LowerCentralSeries relative_lower_central_series(const LeibnizRing& r, const Subgroup& h,
                                                 std::size_t max_steps = 64);

bool is_subring(const LeibnizRing& r, const Subgroup& s);
bool is_left_ideal(const LeibnizRing& r, const Subgroup& s);
bool is_right_ideal(const LeibnizRing& r, const Subgroup& s);
bool is_ideal(const LeibnizRing& r, const Subgroup& s);

// Factor ring by a two-sided ideal, with the projection data.
struct QuotientRing {
  LeibnizRing ring;
  QuotientMap map;
};
QuotientRing quotient_ring(const LeibnizRing& r, const Subgroup& s);

// Least subgroup containing gens and closed under the bracket.
Subgroup subring_generated(const LeibnizRing& r, const std::vector<GroupElement>& gens,
                           std::size_t max_steps = 64);

struct InvariantReport {
  Subgroup derived;
  Subgroup kernel;
  Subgroup left_center;
  Subgroup right_center;
  Subgroup center;
  Subgroup anticenter;
  LowerCentralSeries lower_central;
  Subgroup torsion;
  std::vector<std::pair<Int, Subgroup>> primary; // one entry per prime in the support
  std::vector<Int> primes;
};

InvariantReport invariant_report(const LeibnizRing& r);

} // namespace leibniz
