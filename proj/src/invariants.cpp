#include "leibniz/invariants.hpp"

#include "leibniz/errors.hpp"

#include <algorithm>

namespace leibniz {

Subgroup bracket_subgroup(const LeibnizRing& r, const Subgroup& a, const Subgroup& b) {
  if (a.ambient() != r.group() || b.ambient() != r.group())
    fail(Errc::AmbientMismatch, "bracket_subgroup: subgroups of a different group");
  std::vector<GroupElement> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(r.bracket(x, y));
  return subgroup_from_generators(r.group(), gens);
}

Subgroup derived_ideal(const LeibnizRing& r) {
  Subgroup whole = whole_subgroup(r.group());
  return bracket_subgroup(r, whole, whole);
}

Subgroup leibniz_kernel(const LeibnizRing& r) {
  if (!r.is_left_leibniz()) fail(Errc::NotLeftLeibniz, "leibniz_kernel needs a left Leibniz ring");
  const std::size_t n = r.generator_count();
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(r.table()[i][i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      gens.push_back(r.group().add(r.table()[i][j], r.table()[j][i]));
  return subgroup_from_generators(r.group(), gens);
}

namespace {

// Kernel of x |-> (f_j(x))_j where each f_j lands in the ring's group; the
// codomain is the direct sum of count copies of it.
Subgroup joint_kernel(const LeibnizRing& r,
                      const std::vector<std::vector<GroupElement>>& images_per_generator) {
  const FgAbelianGroup& g = r.group();
  const std::size_t n = g.generator_count();
  const std::size_t count = n == 0 ? 0 : images_per_generator.front().size();
  std::vector<Int> codomain_factors;
  for (std::size_t c = 0; c < count; ++c)
    for (const auto& d : g.factors()) codomain_factors.push_back(d);
  GroupHom f;
  f.domain = g;
  f.codomain = FgAbelianGroup(codomain_factors);
  for (std::size_t i = 0; i < n; ++i) {
    Vec cat;
    cat.reserve(count * n);
    for (std::size_t c = 0; c < count; ++c)
      for (const auto& v : images_per_generator[i][c].c) cat.push_back(v);
    f.images.push_back(f.codomain.normalize(cat));
  }
  return kernel_subgroup(f);
}

} // namespace

Subgroup left_center(const LeibnizRing& r) {
  const std::size_t n = r.generator_count();
  std::vector<std::vector<GroupElement>> images(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) images[i].push_back(r.table()[i][j]);
  return joint_kernel(r, images);
}

Subgroup right_center(const LeibnizRing& r) {
  const std::size_t n = r.generator_count();
  std::vector<std::vector<GroupElement>> images(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) images[i].push_back(r.table()[j][i]);
  return joint_kernel(r, images);
}

Subgroup center(const LeibnizRing& r) {
  return subgroup_intersection(left_center(r), right_center(r));
}

Subgroup anticenter(const LeibnizRing& r) {
  const std::size_t n = r.generator_count();
  std::vector<std::vector<GroupElement>> images(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      images[i].push_back(r.group().add(r.table()[i][j], r.table()[j][i]));
  Subgroup a = joint_kernel(r, images);
  if (!is_ideal(r, a)) fail(Errc::Internal, "anticenter failed the ideal check");
  return a;
}

namespace {

Subgroup checked_ideal(const LeibnizRing& r, Subgroup s, const char* what) {
  if (!is_ideal(r, s)) fail(Errc::Internal, std::string(what) + " failed the ideal check");
  return s;
}

} // namespace

Subgroup lambda_ideal(const LeibnizRing& r, const Int& n) {
  return checked_ideal(r, torsion_part_subgroup(r.group(), n), "lambda_ideal");
}

Subgroup omega_ideal(const LeibnizRing& r, const Int& p, unsigned n) {
  if (!is_prime(p)) fail(Errc::NotPrime, p.str() + " is not prime");
  // p^n-torsion elements all lie in the p-primary component.
  return checked_ideal(r, torsion_part_subgroup(r.group(), pow_int(p, n)), "omega_ideal");
}

Subgroup p_ideal(const LeibnizRing& r, const Int& p) {
  return checked_ideal(r, p_primary_subgroup(r.group(), p), "p_ideal");
}

Subgroup torsion_ideal(const LeibnizRing& r) {
  return checked_ideal(r, torsion_subgroup(r.group()), "torsion_ideal");
}

Subgroup multiples_ideal(const LeibnizRing& r, const Int& n) {
  return checked_ideal(r, multiples_subgroup(r.group(), n), "multiples_ideal");
}

LowerCentralSeries relative_lower_central_series(const LeibnizRing& r, const Subgroup& h,
                                                 std::size_t max_steps) {
  LowerCentralSeries out;
  out.terms.push_back(h);
  for (std::size_t k = 1; k < max_steps; ++k) {
    Subgroup next = bracket_subgroup(r, h, out.terms.back());
    if (next == out.terms.back()) {
      out.stabilized = true;
      break;
    }
    out.terms.push_back(std::move(next));
  }
  return out;
}

LowerCentralSeries lower_central_series(const LeibnizRing& r, std::size_t max_steps) {
  // gamma_{k+1} = [L, gamma_k]
  LowerCentralSeries out;
  Subgroup whole = whole_subgroup(r.group());
  out.terms.push_back(whole);
  for (std::size_t k = 1; k < max_steps; ++k) {
    Subgroup next = bracket_subgroup(r, whole, out.terms.back());
    if (next == out.terms.back()) {
      out.stabilized = true;
      break;
    }
    out.terms.push_back(std::move(next));
  }
  return out;
}

bool is_subring(const LeibnizRing& r, const Subgroup& s) {
  return subgroup_contains(s, bracket_subgroup(r, s, s));
}

bool is_left_ideal(const LeibnizRing& r, const Subgroup& s) {
  return is_subring(r, s) && subgroup_contains(s, bracket_subgroup(r, whole_subgroup(r.group()), s));
}

bool is_right_ideal(const LeibnizRing& r, const Subgroup& s) {
  return is_subring(r, s) && subgroup_contains(s, bracket_subgroup(r, s, whole_subgroup(r.group())));
}

bool is_ideal(const LeibnizRing& r, const Subgroup& s) {
  return is_subring(r, s) &&
         subgroup_contains(s, bracket_subgroup(r, whole_subgroup(r.group()), s)) &&
         subgroup_contains(s, bracket_subgroup(r, s, whole_subgroup(r.group())));
}

QuotientRing quotient_ring(const LeibnizRing& r, const Subgroup& s) {
  if (!is_ideal(r, s)) fail(Errc::NotAnIdeal, "quotient_ring needs a two-sided ideal");
  QuotientMap qm = quotient_group(r.group(), s);
  const std::size_t m = qm.quotient.generator_count();
  BracketTable table(m, std::vector<GroupElement>(m, qm.quotient.zero()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i][j] = qm.apply(r.group(), r.bracket(qm.section[i], qm.section[j]));
  return QuotientRing{LeibnizRing(qm.quotient, std::move(table)), std::move(qm)};
}

Subgroup subring_generated(const LeibnizRing& r, const std::vector<GroupElement>& gens,
                           std::size_t max_steps) {
  Subgroup cur = subgroup_from_generators(r.group(), gens);
  for (std::size_t step = 0; step < max_steps; ++step) {
    Subgroup next = subgroup_sum(cur, bracket_subgroup(r, cur, cur));
    if (next == cur) return cur;
    cur = std::move(next);
  }
  fail(Errc::ClosureStepLimit, "subring closure did not stabilize");
}

InvariantReport invariant_report(const LeibnizRing& r) {
  if (!r.is_left_leibniz()) fail(Errc::NotLeftLeibniz, "invariant_report needs a left Leibniz ring");
  InvariantReport rep;
  rep.derived = derived_ideal(r);
  rep.kernel = leibniz_kernel(r);
  rep.left_center = left_center(r);
  rep.right_center = right_center(r);
  rep.center = center(r);
  rep.anticenter = anticenter(r);
  rep.lower_central = lower_central_series(r);
  rep.torsion = torsion_ideal(r);
  rep.primes = prime_support(r.group());
  for (const auto& p : rep.primes) rep.primary.emplace_back(p, p_ideal(r, p));

  if (!subgroup_contains(rep.derived, rep.kernel))
    fail(Errc::Internal, "Leibniz kernel escaped the derived ideal");
  if (rep.center != subgroup_intersection(rep.left_center, rep.right_center))
    fail(Errc::Internal, "center is not the intersection of the one-sided centers");
  Subgroup sum = zero_subgroup(r.group());
  for (const auto& [p, sp] : rep.primary) sum = subgroup_sum(sum, sp);
  if (sum != rep.torsion)
    fail(Errc::Internal, "primary ideals do not sum to the torsion ideal");
  return rep;
}

} // namespace leibniz
