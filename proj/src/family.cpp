#include "leibniz/family.hpp"

#include "leibniz/errors.hpp"

#include <sstream>

namespace leibniz {

const char* family_name(Family f) {
  switch (f) {
    case Family::L1: return "L1";
    case Family::L2: return "L2";
    case Family::L3: return "L3";
    case Family::L4: return "L4";
    case Family::L5: return "L5";
    case Family::L6: return "L6";
    case Family::L7: return "L7";
    case Family::L8: return "L8";
    case Family::L9: return "L9";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  static const Family all[] = {Family::L1, Family::L2, Family::L3, Family::L4, Family::L5,
                               Family::L6, Family::L7, Family::L8, Family::L9};
  for (Family f : all)
    if (name == family_name(f)) return f;
  return std::nullopt;
}

std::string FamilySpec::str() const {
  std::ostringstream os;
  os << family_name(family) << '(';
  switch (family) {
    case Family::L1: os << "p=" << p << ",m=" << m << ",s=" << s; break;
    case Family::L2:
    case Family::L3:
    case Family::L4:
    case Family::L5:
    case Family::L6: os << "p=" << p; break;
    case Family::L7: os << "alpha=" << alpha << ",beta=" << beta; break;
    case Family::L8: os << "k=" << k << ",beta=" << beta; break;
    case Family::L9:
      os << "k=" << k << ",sigma=" << sigma << ",alpha1=" << alpha1 << ",alpha2=" << alpha2
         << ",beta=" << beta;
      break;
  }
  os << ')';
  return os.str();
}

namespace {

void require(bool ok, const std::string& why) {
  if (!ok) fail(Errc::BadParameters, why);
}

void require_prime(const Int& p) { require(is_prime(p), "p = " + p.str() + " is not prime"); }

} // namespace

void validate_family_spec(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::L1:
      require_prime(spec.p);
      require(spec.m >= 1, "m must be >= 1");
      require(spec.s >= 0, "s must be >= 0");
      require(2 * spec.s <= spec.m, "2s <= m is violated");
      break;
    case Family::L2:
    case Family::L3:
    case Family::L4:
    case Family::L5:
    case Family::L6: require_prime(spec.p); break;
    case Family::L7:
      require(spec.alpha >= 0 && spec.beta >= 0, "alpha and beta must be >= 0");
      break;
    case Family::L8:
      require(spec.k >= 2, "k must be >= 2");
      require(spec.beta >= 1, "beta must be >= 1");
      require(spec.k % spec.beta == 0, "beta = " + spec.beta.str() + " is not a divisor of k = " + spec.k.str());
      require(spec.beta < spec.k, "beta = k gives the abelian ring; beta < k is required");
      break;
    case Family::L9: {
      require(spec.k >= 1, "k must be >= 1");
      const Int k = spec.k;
      const Int sg = mod_floor(spec.sigma, k), a1 = mod_floor(spec.alpha1, k),
                a2 = mod_floor(spec.alpha2, k), bt = mod_floor(spec.beta, k);
      require(sg * sg % k == 0, "sigma^2 != 0 (mod k)");
      require(a2 * sg % k == 0, "alpha2*sigma != 0 (mod k)");
      require(a2 * bt % k == 0, "alpha2*beta != 0 (mod k)");
      require(bt * sg % k == 0, "beta*sigma != 0 (mod k)");
      require((a2 * a2 + a2 * a1) % k == 0, "alpha2^2 + alpha2*alpha1 != 0 (mod k)");
      require(a1 * sg % k == 0, "alpha1*sigma != 0 (mod k)");
      break;
    }
  }
}

namespace {

LeibnizRing two_generator_ring(const FgAbelianGroup& g, const Vec& t00, const Vec& t01,
                               const Vec& t10, const Vec& t11) {
  BracketTable table(2, std::vector<GroupElement>(2, g.zero()));
  table[0][0] = g.normalize(t00);
  table[0][1] = g.normalize(t01);
  table[1][0] = g.normalize(t10);
  table[1][1] = g.normalize(t11);
  return LeibnizRing(g, std::move(table));
}

Subgroup span1(const FgAbelianGroup& g, const Vec& v) {
  return subgroup_from_generators(g, {g.normalize(v)});
}

Subgroup span(const FgAbelianGroup& g, const std::vector<Vec>& vs) {
  std::vector<GroupElement> gens;
  for (const auto& v : vs) gens.push_back(g.normalize(v));
  return subgroup_from_generators(g, gens);
}

} // namespace

LeibnizRing make_family(const FamilySpec& spec) {
  validate_family_spec(spec);
  switch (spec.family) {
    case Family::L1: {
      Int q = 1, s_exp = 1;
      for (Int i = 0; i < spec.m; ++i) q *= spec.p;
      for (Int i = 0; i < spec.m - spec.s; ++i) s_exp *= spec.p;
      FgAbelianGroup g({q});
      BracketTable t(1, {g.normalize({s_exp})});
      return LeibnizRing(g, std::move(t));
    }
    case Family::L2: {
      FgAbelianGroup g({spec.p, spec.p});
      return two_generator_ring(g, {0, 1}, {0, 0}, {0, 0}, {0, 0});
    }
    case Family::L3: {
      FgAbelianGroup g({spec.p, spec.p});
      return two_generator_ring(g, {0, 1}, {0, 1}, {0, 0}, {0, 0});
    }
    case Family::L4: {
      FgAbelianGroup g({spec.p * spec.p, spec.p});
      return two_generator_ring(g, {0, 1}, {0, 0}, {0, 0}, {0, 0});
    }
    case Family::L5: {
      FgAbelianGroup g({spec.p * spec.p, spec.p});
      return two_generator_ring(g, {0, 1}, {0, 1}, {0, 0}, {0, 0});
    }
    case Family::L6: {
      FgAbelianGroup g({spec.p * spec.p, spec.p});
      return two_generator_ring(g, {spec.p, 0}, {0, 1}, {0, 0}, {0, 0});
    }
    case Family::L7: {
      FgAbelianGroup g({0, 0});
      return two_generator_ring(g, {0, 0}, {0, 0}, {spec.alpha, 0}, {spec.beta, 0});
    }
    case Family::L8: {
      FgAbelianGroup g({spec.k, 0});
      return two_generator_ring(g, {0, 0}, {0, 0}, {0, 0}, {spec.beta, 0});
    }
    case Family::L9: {
      if (spec.k == 1) {
        // the torsion factor is trivial; the ring degenerates to the
        // abelian ring on one infinite generator
        return abelian_ring(FgAbelianGroup({0}));
      }
      FgAbelianGroup g({spec.k, 0});
      return two_generator_ring(g, {spec.sigma, 0}, {spec.alpha2, 0}, {spec.alpha1, 0},
                                {spec.beta, 0});
    }
  }
  fail(Errc::Internal, "unreachable");
}

FamilyClaims family_claims(const FamilySpec& spec, const LeibnizRing& ring) {
  const FgAbelianGroup& g = ring.group();
  FamilyClaims cl;
  switch (spec.family) {
    case Family::L1: {
      Int c = 1, z = 1;
      for (Int i = 0; i < spec.m - spec.s; ++i) c *= spec.p;
      for (Int i = 0; i < spec.s; ++i) z *= spec.p;
      Subgroup leib = span1(g, {c}), zeta = span1(g, {z});
      cl.leibniz_kernel = leib;
      cl.derived = leib;
      cl.left_center = zeta;
      cl.right_center = zeta;
      cl.center = zeta;
      break;
    }
    case Family::L2: {
      Subgroup b = span1(g, {0, 1});
      cl.leibniz_kernel = b;
      cl.derived = b;
      cl.center = b;
      break;
    }
    case Family::L3:
    case Family::L5: {
      Subgroup d = span1(g, {0, 1});
      cl.leibniz_kernel = d;
      cl.derived = d;
      cl.left_center = d;
      cl.right_center = zero_subgroup(g);
      cl.center = zero_subgroup(g);
      break;
    }
    case Family::L4: {
      Subgroup b = span1(g, {0, 1});
      cl.leibniz_kernel = b;
      cl.derived = b;
      cl.left_center = b;
      cl.right_center = b;
      cl.center = b;
      break;
    }
    case Family::L6:
      // no reference table is stated for this family
      break;
    case Family::L7: {
      cl.leibniz_kernel = span1(g, {spec.beta, 0});
      cl.derived = span(g, {{spec.alpha, 0}, {spec.beta, 0}});
      cl.left_center = span1(g, {1, 0});
      cl.right_center = zero_subgroup(g);
      cl.center = zero_subgroup(g);
      break;
    }
    case Family::L8: {
      Subgroup leib = span1(g, {spec.beta, 0});
      Subgroup zeta = span(g, {{1, 0}, {0, spec.k / spec.beta}});
      cl.leibniz_kernel = leib;
      cl.derived = leib;
      cl.left_center = zeta;
      cl.right_center = zeta;
      cl.center = zeta;
      break;
    }
    case Family::L9: {
      if (spec.k == 1) {
        Subgroup z = zero_subgroup(g);
        cl.leibniz_kernel = z;
        cl.derived = z;
        cl.left_center = z;
        cl.right_center = z;
        cl.center = z;
        break;
      }
      Subgroup dd =
          span(g, {{spec.sigma, 0}, {spec.alpha1, 0}, {spec.alpha2, 0}, {spec.beta, 0}});
      cl.derived = dd;
      cl.left_center = dd;
      cl.right_center = dd;
      cl.center = dd;
      cl.leibniz_kernel = span(g, {{spec.sigma, 0}, {spec.alpha1 + spec.alpha2, 0}, {spec.beta, 0}});
      break;
    }
  }
  return cl;
}

std::string FamilyVerification::summary() const {
  std::ostringstream os;
  os << spec.str() << ": left Leibniz = " << (left_leibniz ? "yes" : "NO") << '\n';
  for (const auto& cmp : comparisons) {
    os << "  " << cmp.name << ": computed " << cmp.computed.str() << " (order "
       << subgroup_order(cmp.computed).str() << ")";
    if (cmp.claimed) {
      os << ", stated " << cmp.claimed->str() << " -> " << (cmp.match ? "match" : "MISMATCH");
    } else {
      os << ", no stated form";
    }
    os << '\n';
  }
  return os.str();
}

FamilyVerification verify_family(const FamilySpec& spec) {
  FamilyVerification out;
  out.spec = spec;
  LeibnizRing ring = make_family(spec);
  out.left_leibniz = ring.is_left_leibniz();
  FamilyClaims cl = family_claims(spec, ring);

  auto add = [&](const char* name, Subgroup computed, const std::optional<Subgroup>& claimed) {
    InvariantComparison cmp;
    cmp.name = name;
    cmp.computed = std::move(computed);
    cmp.claimed = claimed;
    cmp.match = !claimed || *claimed == cmp.computed;
    out.comparisons.push_back(std::move(cmp));
  };

  add("Leib", leibniz_kernel(ring), cl.leibniz_kernel);
  add("[L,L]", derived_ideal(ring), cl.derived);
  add("left center", left_center(ring), cl.left_center);
  add("right center", right_center(ring), cl.right_center);
  add("center", center(ring), cl.center);

  out.full_match = out.left_leibniz;
  for (const auto& cmp : out.comparisons) out.full_match = out.full_match && cmp.match;
  return out;
}

namespace {

// q = p^m with p prime, or nullopt.
std::optional<std::pair<Int, Int>> prime_power(const Int& q) {
  if (q < 2) return std::nullopt;
  Int p = 2;
  while (q % p != 0) {
    ++p;
    if (p * p > q) {
      p = q;
      break;
    }
  }
  Int n = q, m = 0;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, m);
}

} // namespace

std::vector<std::pair<std::string, LeibnizRing>> family_instances_on_group(const FgAbelianGroup& g) {
  std::vector<std::pair<std::string, LeibnizRing>> out;
  const auto& f = g.factors();
  if (f.size() == 1 && f[0] >= 2) {
    auto pm = prime_power(f[0]);
    if (!pm) return out;
    auto [p, m] = *pm;
    for (Int s = 0; 2 * s <= m; ++s) {
      FamilySpec spec;
      spec.family = Family::L1;
      spec.p = p;
      spec.m = m;
      spec.s = s;
      out.emplace_back(spec.str(), make_family(spec));
    }
    return out;
  }
  if (f.size() == 2 && f[0] >= 2 && f[1] >= 2) {
    if (f[0] == f[1] && is_prime(f[0])) {
      for (Family fam : {Family::L2, Family::L3}) {
        FamilySpec spec;
        spec.family = fam;
        spec.p = f[0];
        out.emplace_back(spec.str(), make_family(spec));
      }
      return out;
    }
    // {p^2, p} in either order, built directly in this presentation
    for (int swap = 0; swap < 2; ++swap) {
      std::size_t ia = swap ? 1 : 0, ib = swap ? 0 : 1;
      if (!is_prime(f[ib]) || f[ia] != f[ib] * f[ib]) continue;
      const Int p = f[ib];
      auto unit = [&](std::size_t idx) {
        Vec v(2, 0);
        v[idx] = 1;
        return v;
      };
      auto scaled = [&](std::size_t idx, const Int& c) {
        Vec v(2, 0);
        v[idx] = c;
        return v;
      };
      Vec zero(2, 0);
      auto build = [&](Family fam, const Vec& taa, const Vec& tab) {
        BracketTable t(2, std::vector<GroupElement>(2, g.zero()));
        t[ia][ia] = g.normalize(taa);
        t[ia][ib] = g.normalize(tab);
        FamilySpec spec;
        spec.family = fam;
        spec.p = p;
        out.emplace_back(spec.str(), LeibnizRing(g, std::move(t)));
      };
      build(Family::L4, unit(ib), zero);
      build(Family::L5, unit(ib), unit(ib));
      build(Family::L6, scaled(ia, p), unit(ib));
      return out;
    }
  }
  return out;
}

} // namespace leibniz
