#include "leibniz/automorphism.hpp"

#include "leibniz/errors.hpp"

#include <algorithm>
#include <map>

namespace leibniz {

GroupElement apply_automorphism(const FgAbelianGroup& g, const Mat& matrix, const GroupElement& x) {
  return g.normalize(vec_mat(x.c, matrix));
}

namespace {

std::size_t element_index(const FgAbelianGroup& g, const GroupElement& x) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < g.generator_count(); ++i)
    idx = idx * static_cast<std::size_t>(g.factors()[i]) + static_cast<std::size_t>(x.c[i]);
  return idx;
}

} // namespace

std::vector<Automorphism> automorphisms(const FgAbelianGroup& g) {
  if (!g.is_finite()) fail(Errc::InfiniteGroup, "automorphism enumeration needs a finite group");
  const std::size_t n = g.generator_count();
  const auto elements = g.enumerate_elements();
  const std::size_t size = elements.size();

  // candidate images for generator i: elements annihilated by d_i
  std::vector<std::vector<GroupElement>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& x : elements)
      if (g.smul(g.factors()[i], x).is_zero()) candidates[i].push_back(x);

  std::vector<Automorphism> out;
  Mat current(n, Vec(n, 0));
  std::vector<std::size_t> perm(size), seen(size, 0);
  std::size_t stamp = 0;

  auto try_matrix = [&]() {
    ++stamp;
    for (std::size_t e = 0; e < size; ++e) {
      GroupElement img = apply_automorphism(g, current, elements[e]);
      std::size_t idx = element_index(g, img);
      if (seen[idx] == stamp) return; // not injective
      seen[idx] = stamp;
      perm[e] = idx;
    }
    // invert via the permutation: row i of the inverse is the preimage of e_i
    std::vector<std::size_t> inv_perm(size);
    for (std::size_t e = 0; e < size; ++e) inv_perm[perm[e]] = e;
    Mat inv(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      inv[i] = elements[inv_perm[element_index(g, g.generator(i))]].c;
    // composition check
    for (std::size_t i = 0; i < n; ++i) {
      GroupElement back = apply_automorphism(g, inv, apply_automorphism(g, current, g.generator(i)));
      if (back != g.generator(i)) fail(Errc::Internal, "automorphism inverse failed to compose");
    }
    out.push_back(Automorphism{current, std::move(inv)});
  };

  // depth-first product over candidate rows, deterministic order
  std::vector<std::size_t> pick(n, 0);
  std::size_t depth = 0;
  if (n == 0) {
    out.push_back(Automorphism{Mat{}, Mat{}});
    return out;
  }
  for (;;) {
    if (depth == n) {
      try_matrix();
      --depth;
      ++pick[depth];
    }
    while (pick[depth] == candidates[depth].size()) {
      pick[depth] = 0;
      if (depth == 0) return out;
      --depth;
      ++pick[depth];
    }
    current[depth] = candidates[depth][pick[depth]].c;
    ++depth;
  }
}

LeibnizRing transport(const LeibnizRing& r, const Automorphism& phi) {
  const FgAbelianGroup& g = r.group();
  const std::size_t n = r.generator_count();
  if (row_count(phi.fwd) != n || row_count(phi.inv) != n)
    fail(Errc::NotAutomorphism, "automorphism has the wrong shape for this ring");
  BracketTable t(n, std::vector<GroupElement>(n, g.zero()));
  std::vector<GroupElement> pre(n, g.zero());
  for (std::size_t i = 0; i < n; ++i) {
    pre[i] = apply_automorphism(g, phi.inv, g.generator(i));
    if (apply_automorphism(g, phi.fwd, pre[i]) != g.generator(i))
      fail(Errc::NotAutomorphism, "matrix pair is not an inverse automorphism pair");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = apply_automorphism(g, phi.fwd, r.bracket(pre[i], pre[j]));
  return LeibnizRing(g, std::move(t));
}

Vec flatten_table(const LeibnizRing& r) {
  Vec flat;
  flat.reserve(r.generator_count() * r.generator_count() * r.generator_count());
  for (const auto& row : r.table())
    for (const auto& e : row)
      for (const auto& v : e.c) flat.push_back(v);
  return flat;
}

LeibnizRing canonical_form(const LeibnizRing& r, const std::vector<Automorphism>& auts) {
  LeibnizRing best_ring = r;
  Vec best_flat = flatten_table(r);
  for (const auto& phi : auts) {
    LeibnizRing t = transport(r, phi);
    Vec flat = flatten_table(t);
    if (flat < best_flat) {
      best_flat = std::move(flat);
      best_ring = std::move(t);
    }
  }
  return best_ring;
}

LeibnizRing canonical_form(const LeibnizRing& r) {
  if (!r.group().is_finite())
    fail(Errc::InfiniteGroup, "canonical forms are defined for finite groups only");
  return canonical_form(r, automorphisms(r.group()));
}

bool are_isomorphic(const LeibnizRing& a, const LeibnizRing& b) {
  if (a.group() != b.group())
    fail(Errc::PresentationMismatch,
         "isomorphism testing expects both rings on one group presentation");
  if (!a.group().is_finite())
    fail(Errc::InfiniteGroup, "isomorphism testing is implemented for finite groups");
  auto auts = automorphisms(a.group());
  return flatten_table(canonical_form(a, auts)) == flatten_table(canonical_form(b, auts));
}

} // namespace leibniz
