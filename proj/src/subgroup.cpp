#include "leibniz/subgroup.hpp"

#include "leibniz/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace leibniz {

std::vector<GroupElement> Subgroup::generators() const {
  std::vector<GroupElement> gens;
  for (const auto& row : lattice_) {
    GroupElement e = ambient_.normalize(row);
    if (!e.is_zero()) gens.push_back(std::move(e));
  }
  return gens;
}

std::string Subgroup::str() const {
  auto gens = generators();
  if (gens.empty()) return "<0>";
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i].str();
  }
  os << '>';
  return os.str();
}

Subgroup subgroup_from_rows(const FgAbelianGroup& g, const Mat& rows) {
  Mat stacked = rows;
  for (auto& row : stacked)
    if (row.size() != g.generator_count())
      fail(Errc::LengthMismatch, "generator row length does not match the group");
  Mat rel = g.relation_rows();
  stacked.insert(stacked.end(), rel.begin(), rel.end());
  if (stacked.empty()) return Subgroup(g, Mat{});
  return Subgroup(g, hermite_normal_form(stacked));
}

Subgroup subgroup_from_generators(const FgAbelianGroup& g, const std::vector<GroupElement>& gens) {
  Mat rows;
  rows.reserve(gens.size());
  for (const auto& e : gens) rows.push_back(e.c);
  return subgroup_from_rows(g, rows);
}

Subgroup zero_subgroup(const FgAbelianGroup& g) { return subgroup_from_rows(g, Mat{}); }

Subgroup whole_subgroup(const FgAbelianGroup& g) {
  return subgroup_from_rows(g, identity_mat(g.generator_count()));
}

bool member(const Subgroup& s, const GroupElement& x) {
  if (x.c.size() != s.ambient().generator_count())
    fail(Errc::LengthMismatch, "element does not live in the ambient group");
  return hnf_solve(s.lattice(), x.c).has_value();
}

bool subgroup_contains(const Subgroup& outer, const Subgroup& inner) {
  if (outer.ambient() != inner.ambient())
    fail(Errc::AmbientMismatch, "subgroups live in different ambient groups");
  for (const auto& row : inner.lattice())
    if (!hnf_solve(outer.lattice(), row).has_value()) return false;
  return true;
}

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
  if (a.ambient() != b.ambient())
    fail(Errc::AmbientMismatch, "subgroup_sum: different ambient groups");
  Mat rows = a.lattice();
  rows.insert(rows.end(), b.lattice().begin(), b.lattice().end());
  return subgroup_from_rows(a.ambient(), rows);
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
  if (a.ambient() != b.ambient())
    fail(Errc::AmbientMismatch, "subgroup_intersection: different ambient groups");
  if (a.lattice().empty()) return a; // lattice {0}: a is the zero subgroup
  if (b.lattice().empty()) return b;
  const Mat& ma = a.lattice();
  const Mat& mb = b.lattice();
  // rows (u|v) with u*ma = v*mb; the common lattice is spanned by the u*ma
  Mat stacked = ma;
  for (const auto& row : mb) {
    Vec neg(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) neg[j] = -row[j];
    stacked.push_back(std::move(neg));
  }
  Mat ker = integer_kernel(stacked);
  Mat rows;
  rows.reserve(ker.size());
  for (const auto& k : ker) {
    Vec u(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(ma.size()));
    rows.push_back(vec_mat(u, ma));
  }
  return subgroup_from_rows(a.ambient(), rows);
}

namespace {

// Invariant factors of Z^r / rowspan(C) as (rank, divisor chain).
FgAbelianGroup::CanonicalShape shape_of_presentation(std::size_t r, const Mat& c) {
  FgAbelianGroup::CanonicalShape shape;
  std::vector<Int> diag;
  if (!c.empty()) diag = smith_normal_form(c).diagonal();
  std::size_t pinned = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++pinned;
    if (d > 1) shape.torsion.push_back(d);
  }
  shape.rank = r - pinned;
  return shape;
}

} // namespace

FgAbelianGroup::CanonicalShape subgroup_shape(const Subgroup& s) {
  const Mat& basis = s.lattice();
  // Express the ambient relations in the lattice basis; the subgroup is the
  // lattice modulo those relations.
  Mat coeffs;
  for (const auto& rel : s.ambient().relation_rows()) {
    auto sol = hnf_solve(basis, rel);
    if (!sol) fail(Errc::Internal, "ambient relation escaped the subgroup lattice");
    coeffs.push_back(*sol);
  }
  return shape_of_presentation(basis.size(), coeffs);
}

Cardinal subgroup_order(const Subgroup& s) {
  auto shape = subgroup_shape(s);
  if (shape.rank > 0) return Cardinal::infinite();
  Int n = 1;
  for (const auto& d : shape.torsion) n *= d;
  return Cardinal::of(n);
}

GroupElement QuotientMap::apply(const FgAbelianGroup& domain, const GroupElement& x) const {
  (void)domain;
  Vec acc(quotient.generator_count(), 0);
  for (std::size_t i = 0; i < x.c.size(); ++i)
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += x.c[i] * projection[i].c[j];
  return quotient.normalize(acc);
}

QuotientMap quotient_group(const FgAbelianGroup& g, const Subgroup& s) {
  if (s.ambient() != g) fail(Errc::AmbientMismatch, "quotient_group: subgroup of a different group");
  const std::size_t n = g.generator_count();
  Mat right = identity_mat(n);
  std::vector<Int> diag;
  if (!s.lattice().empty()) {
    SmithForm sf = smith_normal_form(s.lattice());
    right = sf.right_transform;
    diag = sf.diagonal();
  }
  Mat right_inv = inverse_unimodular(right);

  // In coordinates y = x * R the sublattice becomes diag(d_i); factor i of
  // the quotient is Z/d_i (0 past the diagonal), with trivial factors
  // dropped and infinite factors moved to the front.
  std::vector<Int> raw(n, 0);
  for (std::size_t i = 0; i < diag.size(); ++i) raw[i] = diag[i];
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i] == 0) kept.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i] > 1) kept.push_back(i);

  std::vector<Int> qfactors;
  qfactors.reserve(kept.size());
  for (std::size_t i : kept) qfactors.push_back(raw[i]);

  QuotientMap qm;
  qm.quotient = FgAbelianGroup(qfactors);
  qm.projection.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec img(kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j) img[j] = right[i][kept[j]];
    qm.projection.push_back(qm.quotient.normalize(img));
  }
  qm.section.reserve(kept.size());
  for (std::size_t j : kept) qm.section.push_back(g.normalize(right_inv[j]));
  return qm;
}

GroupElement GroupHom::apply(const GroupElement& x) const {
  Vec acc(codomain.generator_count(), 0);
  for (std::size_t i = 0; i < x.c.size(); ++i)
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += x.c[i] * images[i].c[j];
  return codomain.normalize(acc);
}

void check_well_defined(const GroupHom& f) {
  if (f.images.size() != f.domain.generator_count())
    fail(Errc::LengthMismatch, "homomorphism needs one image per generator");
  for (std::size_t i = 0; i < f.images.size(); ++i) {
    const Int& d = f.domain.factors()[i];
    if (d == 0) continue;
    if (!f.codomain.smul(d, f.images[i]).is_zero())
      fail(Errc::IllDefinedMap, "generator " + std::to_string(i) +
                                    " of order " + d.str() + " has an image of larger order");
  }
}

Subgroup kernel_subgroup(const GroupHom& f) {
  check_well_defined(f);
  const std::size_t m = f.domain.generator_count();
  Mat stacked;
  stacked.reserve(m);
  for (const auto& img : f.images) stacked.push_back(img.c);
  Mat rel = f.codomain.relation_rows();
  stacked.insert(stacked.end(), rel.begin(), rel.end());
  Mat ker = integer_kernel(stacked);
  Mat rows;
  rows.reserve(ker.size());
  for (const auto& k : ker) rows.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(m));
  return subgroup_from_rows(f.domain, rows);
}

Subgroup torsion_subgroup(const FgAbelianGroup& g) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < g.generator_count(); ++i)
    if (g.factors()[i] != 0) gens.push_back(g.generator(i));
  return subgroup_from_generators(g, gens);
}

Subgroup p_primary_subgroup(const FgAbelianGroup& g, const Int& p) {
  if (!is_prime(p)) fail(Errc::NotPrime, p.str() + " is not prime");
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < g.generator_count(); ++i) {
    Int d = g.factors()[i];
    if (d == 0) continue;
    Int cofactor = d;
    while (cofactor % p == 0) cofactor /= p;
    if (cofactor == d) continue; // no p-part in this factor
    gens.push_back(g.smul(cofactor, g.generator(i)));
  }
  return subgroup_from_generators(g, gens);
}

Subgroup multiples_subgroup(const FgAbelianGroup& g, const Int& n) {
  if (n < 1) fail(Errc::BadParameters, "multiples_subgroup needs n >= 1");
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < g.generator_count(); ++i)
    gens.push_back(g.smul(n, g.generator(i)));
  return subgroup_from_generators(g, gens);
}

Subgroup torsion_part_subgroup(const FgAbelianGroup& g, const Int& n) {
  if (n < 1) fail(Errc::BadParameters, "torsion_part_subgroup needs n >= 1");
  GroupHom f;
  f.domain = g;
  f.codomain = g;
  for (std::size_t i = 0; i < g.generator_count(); ++i)
    f.images.push_back(g.smul(n, g.generator(i)));
  return kernel_subgroup(f);
}

std::vector<Subgroup> all_subgroups(const FgAbelianGroup& g, const Int& max_order) {
  Cardinal n = g.order();
  if (!n.finite || n.value > max_order)
    fail(Errc::BudgetExceeded, "subgroup enumeration limited to groups of order <= " + max_order.str());
  auto elements = g.enumerate_elements();
  std::set<Mat> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> frontier{zero_subgroup(g)};
  seen.insert(frontier.front().lattice());
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier) {
      out.push_back(s);
      for (const auto& x : elements) {
        if (member(s, x)) continue;
        Mat rows = s.lattice();
        rows.push_back(x.c);
        Subgroup bigger = subgroup_from_rows(g, rows);
        if (seen.insert(bigger.lattice()).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> subgroup_elements(const Subgroup& s) {
  if (!s.ambient().is_finite()) fail(Errc::InfiniteGroup, "subgroup_elements needs a finite group");
  std::vector<GroupElement> out;
  for (const auto& x : s.ambient().enumerate_elements())
    if (member(s, x)) out.push_back(x);
  return out;
}

} // namespace leibniz
