#include "leibniz/verification.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/ring_io.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace leibniz {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Int> prime_grid(const Int& max_p) {
  std::vector<Int> ps;
  for (Int p : {Int(2), Int(3), Int(5)})
    if (p <= max_p) ps.push_back(p);
  return ps;
}

LeibnizRing intro_ring(const Int& p) {
  FgAbelianGroup g({p, p});
  BracketTable t(2, std::vector<GroupElement>(2, g.zero()));
  t[0][0] = g.normalize({0, 1});
  t[0][1] = g.normalize({0, 1});
  return LeibnizRing(g, std::move(t));
}

struct Lines {
  std::ostringstream os;
  int shown = 0;
  int suppressed = 0;
  static constexpr int cap = 48;

  void add(const std::string& line) {
    if (shown < cap) {
      os << "  " << line << '\n';
      ++shown;
    } else {
      ++suppressed;
    }
  }
  std::string str() {
    if (suppressed) os << "  (+" << suppressed << " more)\n";
    return os.str();
  }
};

// ---------------------------------------------------------------------
// Independent brute-force oracle over int64 coefficients. Deliberately
// reimplements the bracket from the raw table instead of calling back into
// LeibnizRing::bracket, so the two verdicts come from different code paths.
// Coefficients stay below 16 and n <= 4, so int64 never overflows.
// ---------------------------------------------------------------------
struct Oracle {
  std::vector<long long> factors;
  std::size_t n = 0;
  std::vector<std::vector<long long>> table; // n*n rows of n coefficients
  std::vector<std::vector<long long>> elements;

  static Oracle from_ring(const LeibnizRing& r) {
    Oracle o;
    o.n = r.generator_count();
    for (const auto& d : r.group().factors()) o.factors.push_back(static_cast<long long>(d));
    for (const auto& row : r.table())
      for (const auto& e : row) {
        std::vector<long long> coeffs;
        for (const auto& v : e.c) coeffs.push_back(static_cast<long long>(v));
        o.table.push_back(std::move(coeffs));
      }
    std::vector<long long> cur(o.n, 0);
    for (;;) {
      o.elements.push_back(cur);
      std::size_t i = o.n;
      bool done = true;
      while (i > 0) {
        --i;
        if (++cur[i] < o.factors[i]) {
          done = false;
          break;
        }
        cur[i] = 0;
        if (i == 0) break;
      }
      if (done) break;
    }
    return o;
  }

  std::vector<long long> reduce(std::vector<long long> v) const {
    for (std::size_t i = 0; i < n; ++i) {
      v[i] %= factors[i];
      if (v[i] < 0) v[i] += factors[i];
    }
    return v;
  }

  std::vector<long long> bracket(const std::vector<long long>& x,
                                 const std::vector<long long>& y) const {
    std::vector<long long> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long long c = x[i] * y[j];
        if (c == 0) continue;
        const auto& t = table[i * n + j];
        for (std::size_t k = 0; k < n; ++k) acc[k] += c * t[k];
      }
    return reduce(std::move(acc));
  }

  std::vector<long long> sub(const std::vector<long long>& x,
                             const std::vector<long long>& y) const {
    std::vector<long long> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = x[i] - y[i];
    return reduce(std::move(r));
  }

  std::vector<long long> add(const std::vector<long long>& x,
                             const std::vector<long long>& y) const {
    std::vector<long long> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = x[i] + y[i];
    return reduce(std::move(r));
  }

  static bool zero(const std::vector<long long>& v) {
    for (long long c : v)
      if (c) return false;
    return true;
  }

  bool left_leibniz_everywhere() const {
    for (const auto& x : elements)
      for (const auto& y : elements)
        for (const auto& z : elements) {
          auto lhs = bracket(x, bracket(y, z));
          auto d = sub(sub(lhs, bracket(bracket(x, y), z)), bracket(y, bracket(x, z)));
          if (!zero(d)) return false;
        }
    return true;
  }

  bool right_leibniz_everywhere() const {
    for (const auto& x : elements)
      for (const auto& y : elements)
        for (const auto& z : elements) {
          auto lhs = bracket(x, bracket(y, z));
          auto d = add(sub(lhs, bracket(bracket(x, y), z)), bracket(bracket(x, z), y));
          if (!zero(d)) return false;
        }
    return true;
  }

  enum class CenterKind { Left, Right, Both, Anti };

  std::vector<std::vector<long long>> center_elements(CenterKind kind) const {
    std::vector<std::vector<long long>> out;
    for (const auto& x : elements) {
      bool ok = true;
      for (const auto& y : elements) {
        auto xy = bracket(x, y), yx = bracket(y, x);
        bool this_ok = true;
        switch (kind) {
          case CenterKind::Left: this_ok = zero(xy); break;
          case CenterKind::Right: this_ok = zero(yx); break;
          case CenterKind::Both: this_ok = zero(xy) && zero(yx); break;
          case CenterKind::Anti: this_ok = zero(add(xy, yx)); break;
        }
        if (!this_ok) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(x);
    }
    return out;
  }
};

std::vector<Vec> sorted_subgroup_element_coeffs(const Subgroup& s) {
  std::vector<Vec> out;
  for (const auto& e : subgroup_elements(s)) out.push_back(e.c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> sorted_oracle_coeffs(const std::vector<std::vector<long long>>& xs) {
  std::vector<Vec> out;
  for (const auto& x : xs) {
    Vec v;
    for (long long c : x) v.push_back(Int(c));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------
// criterion 1: the introductory two-generator ring is left but not right,
// and the opposite ring swaps the verdicts
// ---------------------------------------------------------------------
CriterionResult criterion_1(const VerifyOptions& /*opts*/) {
  CriterionResult res{1, "intro ring on [3,3] is left and not right Leibniz", false, 0, ""};
  LeibnizRing r = intro_ring(3);
  LeibnizRing op = opposite(r);
  auto t0 = Clock::now();
  bool left = r.is_left_leibniz(), right = r.is_right_leibniz();
  bool op_left = op.is_left_leibniz(), op_right = op.is_right_leibniz();
  res.seconds = seconds_since(t0);
  Lines out;
  out.add(std::string("ring: left=") + (left ? "yes" : "no") + " right=" + (right ? "yes" : "no"));
  out.add(std::string("opposite: left=") + (op_left ? "yes" : "no") +
          " right=" + (op_right ? "yes" : "no"));
  bool ok = left && !right && !op_left && op_right;
  bool in_budget = res.seconds < 0.001;
  if (!in_budget) out.add("exceeded the 1 ms budget");
  res.passed = ok && in_budget;
  res.details = out.str();
  return res;
}

// ---------------------------------------------------------------------
// criterion 2: the one-square ring [a,a]=b is symmetric but not Lie
// ---------------------------------------------------------------------
CriterionResult criterion_2(const VerifyOptions& opts) {
  CriterionResult res{2, "the ring [a,a]=b on [p,p] is symmetric and not Lie", false, 0, ""};
  auto t0 = Clock::now();
  Lines out;
  bool ok = true;
  for (const Int& p : prime_grid(opts.max_p)) {
    FamilySpec spec;
    spec.family = Family::L2;
    spec.p = p;
    LeibnizRing r = make_family(spec);
    ValidationReport v = r.validate();
    bool good = v.symmetric && !v.lie;
    if (!good) ok = false;
    out.add("p=" + p.str() + ": symmetric=" + (v.symmetric ? "yes" : "no") +
            " lie=" + (v.lie ? "yes" : "no"));
  }
  res.seconds = seconds_since(t0);
  res.passed = ok;
  res.details = out.str();
  return res;
}

// ---------------------------------------------------------------------
// criterion 3: family verification across the parameter grids against the
// stated closed-form tables
// ---------------------------------------------------------------------
std::vector<FamilySpec> family_grid(const VerifyOptions& opts) {
  std::vector<FamilySpec> specs;
  for (const Int& p : prime_grid(opts.max_p))
    for (Int m = 1; m <= opts.max_m; ++m)
      for (Int s = 0; 2 * s <= m; ++s) {
        FamilySpec sp;
        sp.family = Family::L1;
        sp.p = p;
        sp.m = m;
        sp.s = s;
        specs.push_back(sp);
      }
  for (Family f : {Family::L2, Family::L3, Family::L4, Family::L5, Family::L6})
    for (const Int& p : prime_grid(opts.max_p)) {
      FamilySpec sp;
      sp.family = f;
      sp.p = p;
      specs.push_back(sp);
    }
  for (Int a = 0; a <= 5; ++a)
    for (Int b = 0; b <= 5; ++b) {
      if (a == 0 && b == 0) continue;
      FamilySpec sp;
      sp.family = Family::L7;
      sp.alpha = a;
      sp.beta = b;
      specs.push_back(sp);
    }
  for (Int k = 2; k <= opts.max_k; ++k)
    for (Int beta = 1; beta < k; ++beta) {
      if (k % beta != 0) continue;
      FamilySpec sp;
      sp.family = Family::L8;
      sp.k = k;
      sp.beta = beta;
      specs.push_back(sp);
    }
  Int l9_cap = std::min(Int(12), opts.max_k);
  {
    FamilySpec sp;
    sp.family = Family::L9;
    sp.k = 1;
    specs.push_back(sp); // k = 1: the single all-zero tuple
  }
  for (Int k = 2; k <= l9_cap; ++k)
    for (Int sg = 0; sg < k; ++sg)
      for (Int a1 = 0; a1 < k; ++a1)
        for (Int a2 = 0; a2 < k; ++a2)
          for (Int bt = 0; bt < k; ++bt) {
            FamilySpec sp;
            sp.family = Family::L9;
            sp.k = k;
            sp.sigma = sg;
            sp.alpha1 = a1;
            sp.alpha2 = a2;
            sp.beta = bt;
            try {
              validate_family_spec(sp);
            } catch (const Error&) {
              continue;
            }
            specs.push_back(sp);
          }
  return specs;
}

CriterionResult criterion_3(const VerifyOptions& opts) {
  CriterionResult res{3, "family invariants match the stated closed-form tables", false, 0, ""};
  auto t0 = Clock::now();
  Lines out;
  std::size_t total = 0, matched = 0;
  for (const FamilySpec& spec : family_grid(opts)) {
    FamilyVerification v = verify_family(spec);
    ++total;
    if (v.full_match) {
      ++matched;
      continue;
    }
    if (!v.left_leibniz) {
      out.add(spec.str() + ": NOT left Leibniz");
      continue;
    }
    for (const auto& cmp : v.comparisons)
      if (!cmp.match)
        out.add(spec.str() + ": " + cmp.name + " computed " + cmp.computed.str() + " (order " +
                subgroup_order(cmp.computed).str() + "), stated " + cmp.claimed->str() +
                " (order " + subgroup_order(*cmp.claimed).str() + ")");
  }
  res.seconds = seconds_since(t0);
  bool in_budget = res.seconds < 10.0;
  std::ostringstream head;
  head << "  " << matched << " of " << total << " family instances match every stated form\n";
  res.details = head.str() + out.str();
  res.passed = (matched == total) && in_budget;
  return res;
}

// ---------------------------------------------------------------------
// criterion 4: cyclic censuses
// ---------------------------------------------------------------------
CriterionResult criterion_4(const VerifyOptions& opts) {
  CriterionResult res{4, "cyclic censuses: 1 + floor(m/2) classes, all non-Lie classes L1", false,
                      0, ""};
  auto t0 = Clock::now();
  Lines out;
  bool ok = true;
  for (const Int& p : prime_grid(std::min(opts.max_p, Int(3))))
    for (Int m = 1; m <= opts.max_m; ++m) {
      Int q = 1;
      for (Int i = 0; i < m; ++i) q *= p;
      CensusOptions copt;
      copt.jobs = opts.jobs;
      IsoClassCensus census = classify(FgAbelianGroup({q}), copt);
      std::size_t expected_classes = 1 + static_cast<std::size_t>(m / 2);
      // number of valid tables: squares c with c^2 = 0 mod p^m, i.e.
      // v_p(c) >= ceil(m/2); there are p^floor(m/2) of them
      Int expected_valid = 1;
      for (Int i = 0; i < m / 2; ++i) expected_valid *= p;

      bool counts = census.classes.size() == expected_classes && census.total_valid == expected_valid;
      std::vector<std::string> tags;
      bool structure = true;
      std::set<std::string> seen_tags;
      for (const auto& cls : census.classes) {
        if (cls.lie) continue;
        if (cls.family_tag.rfind("L1(", 0) != 0) structure = false;
        if (!seen_tags.insert(cls.family_tag).second) structure = false; // s must be unique
      }
      if (!counts || !structure) ok = false;
      out.add("[" + q.str() + "]: classes=" + std::to_string(census.classes.size()) + " (expected " +
              std::to_string(expected_classes) + "), valid=" + census.total_valid.str() +
              " (expected " + expected_valid.str() + ")" +
              (structure ? "" : " STRUCTURE MISMATCH"));
    }
  res.seconds = seconds_since(t0);
  res.passed = ok && res.seconds < 5.0;
  res.details = out.str();
  return res;
}

// ---------------------------------------------------------------------
// criterion 5: order p^2 censuses
// ---------------------------------------------------------------------
CriterionResult criterion_5(const VerifyOptions& opts) {
  CriterionResult res{5, "[p,p] censuses: every non-Lie class is L2 or L3", false, 0, ""};
  auto t0 = Clock::now();
  Lines out;
  bool ok = true;
  for (const Int& p : prime_grid(opts.max_p)) {
    CensusOptions copt;
    copt.jobs = opts.jobs;
    IsoClassCensus census = classify(FgAbelianGroup({p, p}), copt);
    // frozen counts, cross-checked against the orbit-size derivation:
    // |valid| = p^2 + (p^2-1)(p+1), in classes {0, alternating, L2, L3}
    Int expected_valid = p * p + (p * p - 1) * (p + 1);
    std::size_t unmatched = 0;
    for (const auto& cls : census.classes)
      if (cls.family_tag == "Unmatched") ++unmatched;
    bool good = unmatched == 0 && census.classes.size() == 4 && census.total_valid == expected_valid;
    if (!good) ok = false;
    out.add("[" + p.str() + "," + p.str() + "]: classes=" + std::to_string(census.classes.size()) +
            " valid=" + census.total_valid.str() + " (expected " + expected_valid.str() + ")" +
            " unmatched=" + std::to_string(unmatched));
  }
  res.seconds = seconds_since(t0);
  res.passed = ok && res.seconds < 30.0;
  res.details = out.str();
  return res;
}

// ---------------------------------------------------------------------
// criterion 6: order p^3 mixed censuses
// ---------------------------------------------------------------------
CriterionResult criterion_6(const VerifyOptions& opts) {
  CriterionResult res{6, "[p^2,p] censuses: every non-Lie class is L4, L5 or L6", false, 0, ""};
  auto t0 = Clock::now();
  Lines out;
  bool ok = true;
  for (const Int& p : prime_grid(std::min(opts.max_p, Int(3)))) {
    const Int q = p * p;
    CensusOptions copt;
    copt.jobs = opts.jobs;
    IsoClassCensus census = classify(FgAbelianGroup({q, p}), copt);
    std::size_t unmatched = 0;
    for (const auto& cls : census.classes)
      if (cls.family_tag == "Unmatched") {
        ++unmatched;
        out.add("[" + q.str() + "," + p.str() + "] unmatched class: Leib order " +
                subgroup_order(cls.invariants.kernel).str() + ", [L,L] " +
                cls.invariants.derived.str() + ", orbit " + cls.orbit_size.str());
      }
    if (unmatched != 0) ok = false;
    out.add("[" + q.str() + "," + p.str() + "]: classes=" +
            std::to_string(census.classes.size()) + " valid=" + census.total_valid.str() +
            " unmatched=" + std::to_string(unmatched));
  }
  res.seconds = seconds_since(t0);
  res.passed = ok && res.seconds < 180.0;
  res.details = out.str();
  return res;
}

// ---------------------------------------------------------------------
// criterion 7: identity <=> six congruences
// ---------------------------------------------------------------------
CriterionResult criterion_7(const VerifyOptions& opts) {
  CriterionResult res{7, "left Leibniz identity is equivalent to the six congruences", false, 0, ""};
  auto t0 = Clock::now();
  Lines out;
  bool ok = true;
  Int total = 0;
  for (Int k = 1; k <= opts.max_k; ++k) {
    CongruenceReport rep = congruence_equivalence_check(k);
    total += rep.tuples_checked;
    if (!rep.counterexamples.empty()) {
      ok = false;
      for (const auto& ce : rep.counterexamples)
        out.add("k=" + k.str() + " (" + ce.sigma.str() + "," + ce.alpha1.str() + "," +
                ce.alpha2.str() + "," + ce.beta.str() + "): identity=" +
                (ce.identity_holds ? "yes" : "no") + " congruences=" +
                (ce.congruences_hold ? "yes" : "no"));
    }
  }
  out.add(total.str() + " tuples checked, k <= " + opts.max_k.str());
  res.seconds = seconds_since(t0);
  res.passed = ok && res.seconds < 120.0;
  res.details = out.str();
  return res;
}

// ---------------------------------------------------------------------
// criterion 8: proposition suite over all census rings
// ---------------------------------------------------------------------
void check_propositions(const LeibnizRing& r, const std::string& label, Lines& out, bool& ok) {
  const FgAbelianGroup& g = r.group();
  auto complain = [&](const std::string& what) {
    ok = false;
    out.add(label + ": " + what);
  };

  const std::size_t n = r.generator_count();
  // [[a,b],c] = -[[b,a],c]
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        GroupElement ei = g.generator(i), ej = g.generator(j), ek = g.generator(k);
        GroupElement lhs = r.bracket(r.bracket(ei, ej), ek);
        GroupElement rhs = r.bracket(r.bracket(ej, ei), ek);
        if (!g.add(lhs, rhs).is_zero()) complain("[[a,b],c] != -[[b,a],c] on generators");
      }

  Subgroup zero = zero_subgroup(g);
  Subgroup whole = whole_subgroup(g);
  Subgroup leib = leibniz_kernel(r);

  // the kernel is an abelian ideal that left-annihilates the ring, with a
  // Lie quotient; and the ring is Lie exactly when the kernel vanishes
  if (!is_ideal(r, leib)) complain("Leibniz kernel is not an ideal");
  if (bracket_subgroup(r, leib, whole) != zero) complain("[Leib,L] != 0");
  QuotientRing lie_q = quotient_ring(r, leib);
  if (!lie_q.ring.is_lie()) complain("L/Leib is not Lie");
  if (r.is_lie() != (leib == zero)) complain("Lie <=> trivial kernel failed");

  Cardinal size = g.order();
  std::vector<Subgroup> ideals, subrings;
  if (size.finite && size.value <= 128) {
    for (const auto& s : all_subgroups(g)) {
      if (is_subring(r, s)) subrings.push_back(s);
      if (is_ideal(r, s)) ideals.push_back(s);
    }
  }

  if (size.finite && size.value <= 27) {
    for (const auto& h : ideals)
      if (quotient_ring(r, h).ring.is_lie() && !subgroup_contains(h, leib))
        complain("Lie quotient by " + h.str() + " does not contain the kernel");
  }

  for (const auto& h : ideals) {
    for (const auto& s : subrings)
      if (!is_subring(r, subgroup_sum(h, s))) complain("ideal + subring is not a subring");
    if (!is_ideal(r, bracket_subgroup(r, h, h))) complain("[H,H] is not an ideal");
    if (!is_subring(r, bracket_subgroup(r, whole, h))) complain("[L,H] is not a subring");
    if (!is_subring(r, bracket_subgroup(r, h, whole))) complain("[H,L] is not a subring");
    if (!is_ideal(r, subgroup_sum(bracket_subgroup(r, whole, h), bracket_subgroup(r, h, whole))))
      complain("[L,H]+[H,L] is not an ideal");

    LowerCentralSeries hs = relative_lower_central_series(r, h, 20);
    auto gamma = [&](std::size_t t) -> const Subgroup& {
      return t - 1 < hs.terms.size() ? hs.terms[t - 1] : hs.terms.back();
    };
    for (std::size_t j = 1; j <= 4; ++j) {
      if (!is_ideal(r, gamma(j))) complain("gamma_j(H) is not an ideal");
      for (std::size_t k = 1; k <= 4; ++k) {
        if (!subgroup_contains(gamma(j + k), bracket_subgroup(r, gamma(j), gamma(k))))
          complain("[gamma_j(H),gamma_k(H)] escapes gamma_{j+k}(H)");
        LowerCentralSeries nested = relative_lower_central_series(r, gamma(k), 20);
        auto nested_gamma = [&](std::size_t t) -> const Subgroup& {
          return t - 1 < nested.terms.size() ? nested.terms[t - 1] : nested.terms.back();
        };
        if (!subgroup_contains(gamma(j * k), nested_gamma(j)))
          complain("gamma_j(gamma_k(H)) escapes gamma_{jk}(H)");
      }
    }
  }

  // torsion machinery: every one of these must come back as an ideal (the
  // constructors assert it) and the torsion ideal must split over the
  // prime support
  for (Int m = 1; m <= 8; ++m) {
    lambda_ideal(r, m);
    multiples_ideal(r, m);
  }
  std::vector<Int> support = prime_support(g);
  for (const auto& p : support)
    for (unsigned e = 1; e <= 3; ++e) omega_ideal(r, p, e);
  Subgroup torsion = torsion_ideal(r);
  Subgroup acc = zero;
  std::vector<Subgroup> primaries;
  for (const auto& p : support) {
    primaries.push_back(p_ideal(r, p));
    acc = subgroup_sum(acc, primaries.back());
    if (!is_ideal(r, acc)) complain("partial primary sum is not an ideal"); // maximal pi-ideal
  }
  if (acc != torsion) complain("primary ideals do not sum to the torsion ideal");
  for (std::size_t i = 0; i < primaries.size(); ++i)
    for (std::size_t j = i + 1; j < primaries.size(); ++j)
      if (subgroup_intersection(primaries[i], primaries[j]) != zero)
        complain("primary ideals are not independent");

  Subgroup anti = anticenter(r); // ideal assertion built in
  Subgroup lc = left_center(r), rc = right_center(r), zc = center(r);
  if (!is_ideal(r, lc)) complain("left center is not an ideal");
  if (!is_subring(r, rc)) complain("right center is not a subring");
  if (!is_ideal(r, zc)) complain("center is not an ideal");

  if (r.is_symmetric()) {
    if (!is_ideal(r, rc)) complain("right center of a symmetric ring is not an ideal");
    if (!is_ideal(r, lc)) complain("left center of a symmetric ring is not an ideal");
    QuotientRing q = quotient_ring(r, zc);
    Subgroup qcenter = center(q.ring);
    for (const auto& x : rc.generators())
      if (!member(qcenter, q.map.apply(g, x)))
        complain("right center does not land in the center of L/Z");
    for (const auto& x : lc.generators())
      if (!member(qcenter, q.map.apply(g, x)))
        complain("left center does not land in the center of L/Z");
    // anticenter contains the derived ideal; a perfect symmetric ring is Lie
    Subgroup derived = derived_ideal(r);
    if (!subgroup_contains(anti, derived)) complain("anticenter misses the derived ideal");
    if (derived == whole && !r.is_lie()) complain("perfect symmetric ring is not Lie");
  }
}

std::vector<std::pair<std::string, LeibnizRing>> census_rings(const VerifyOptions& opts) {
  // every valid table the classification censuses enumerate, not just the
  // class representatives
  std::vector<std::pair<std::string, LeibnizRing>> rings;
  auto add_census = [&](const FgAbelianGroup& g) {
    std::size_t idx = 0;
    for (auto& r : collect_left_leibniz(g))
      rings.emplace_back(g.str() + "#" + std::to_string(++idx), std::move(r));
  };
  for (const Int& p : prime_grid(std::min(opts.max_p, Int(3))))
    for (Int m = 1; m <= opts.max_m; ++m) {
      Int q = 1;
      for (Int i = 0; i < m; ++i) q *= p;
      add_census(FgAbelianGroup({q}));
    }
  for (const Int& p : prime_grid(opts.max_p)) add_census(FgAbelianGroup({p, p}));
  for (const Int& p : prime_grid(std::min(opts.max_p, Int(3)))) add_census(FgAbelianGroup({p * p, p}));
  return rings;
}

CriterionResult criterion_8(const VerifyOptions& opts) {
  CriterionResult res{8, "proposition suite over every census ring", false, 0, ""};
  auto t0 = Clock::now();
  Lines out;
  bool ok = true;
  std::size_t count = 0;
  for (const auto& [label, ring] : census_rings(opts)) {
    ++count;
    check_propositions(ring, label, out, ok);
  }
  out.add(std::to_string(count) + " rings checked");
  res.seconds = seconds_since(t0);
  res.passed = ok && res.seconds < 120.0;
  res.details = out.str();
  return res;
}

// ---------------------------------------------------------------------
// criterion 9: generator-triple reductions agree with exhaustive
// element-level oracles on every group of order <= 16
// ---------------------------------------------------------------------
std::vector<std::vector<Int>> small_group_presentations(const Int& max_order) {
  // multisets of prime powers with product <= max_order, one per
  // isomorphism type
  auto is_prime_power = [](Int q) {
    if (q < 2) return false;
    Int p = 2;
    while (q % p != 0) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
  };
  std::vector<std::vector<Int>> out;
  std::vector<Int> current;
  std::function<void(Int, Int)> rec = [&](Int min_factor, Int budget) {
    if (!current.empty()) out.push_back(current);
    for (Int q = min_factor; q <= budget; ++q) {
      if (!is_prime_power(q)) continue;
      current.push_back(q);
      rec(q, budget / q);
      current.pop_back();
    }
  };
  rec(2, max_order);
  std::sort(out.begin(), out.end());
  return out;
}

CriterionResult criterion_9(const VerifyOptions& opts) {
  CriterionResult res{9, "kernel/generator methods agree with brute force on orders <= 16", false,
                      0, ""};
  auto t0 = Clock::now();
  Lines out;
  bool ok = true;
  std::mt19937_64 rng(opts.seed);
  out.add("seed: " + std::to_string(opts.seed));
  std::size_t tables_checked = 0, rings_checked = 0;

  for (const auto& factors : small_group_presentations(16)) {
    FgAbelianGroup g(factors);
    const std::size_t n = g.generator_count();

    std::vector<LeibnizRing> sample;
    for (const auto& [tag, ring] : family_instances_on_group(g)) sample.push_back(ring);
    std::size_t stream_cap = 24;
    const Int sampling_budget = Int(1) << 200; // the walk stops after stream_cap visits
    enumerate_well_defined_tables(
        g,
        [&](const LeibnizRing& r) {
          sample.push_back(r);
          return sample.size() < stream_cap;
        },
        sampling_budget);
    // random well-defined tables to cover the space beyond the stream head
    std::vector<std::vector<GroupElement>> allowed(n * n);
    auto elements = g.enumerate_elements();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& x : elements)
          if (g.smul(g.factors()[i], x).is_zero() && g.smul(g.factors()[j], x).is_zero())
            allowed[i * n + j].push_back(x);
    for (int t = 0; t < 40; ++t) {
      BracketTable table(n, std::vector<GroupElement>(n, g.zero()));
      for (std::size_t s = 0; s < n * n; ++s) {
        const auto& pool = allowed[s];
        table[s / n][s % n] = pool[rng() % pool.size()];
      }
      sample.emplace_back(g, table);
    }

    for (const auto& r : sample) {
      Oracle oracle = Oracle::from_ring(r);
      ++tables_checked;
      bool lib_left = r.is_left_leibniz();
      if (lib_left != oracle.left_leibniz_everywhere()) {
        ok = false;
        out.add(g.str() + ": left verdict disagrees for " + r.str());
      }
      if (r.is_right_leibniz() != oracle.right_leibniz_everywhere()) {
        ok = false;
        out.add(g.str() + ": right verdict disagrees for " + r.str());
      }
      if (!lib_left) continue;

      ++rings_checked;
      using CK = Oracle::CenterKind;
      const std::pair<CK, Subgroup> centers[] = {{CK::Left, left_center(r)},
                                                 {CK::Right, right_center(r)},
                                                 {CK::Both, center(r)},
                                                 {CK::Anti, anticenter(r)}};
      for (const auto& [kind, sub] : centers)
        if (sorted_subgroup_element_coeffs(sub) != sorted_oracle_coeffs(oracle.center_elements(kind))) {
          ok = false;
          out.add(g.str() + ": a center disagrees with brute force for " + r.str());
        }

      // the kernel generating set against the subgroup spanned by all |L| squares
      std::vector<GroupElement> squares;
      for (const auto& x : oracle.elements) {
        auto sq = oracle.bracket(x, x);
        Vec v;
        for (long long c : sq) v.push_back(Int(c));
        squares.push_back(g.normalize(v));
      }
      if (subgroup_from_generators(g, squares) != leibniz_kernel(r)) {
        ok = false;
        out.add(g.str() + ": square span disagrees with the kernel generating set");
      }
    }
  }
  out.add(std::to_string(tables_checked) + " tables and " + std::to_string(rings_checked) +
          " valid rings cross-checked");
  res.seconds = seconds_since(t0);
  res.passed = ok && res.seconds < 60.0;
  res.details = out.str();
  return res;
}

// ---------------------------------------------------------------------
// criterion 10: determinism of the census output
// ---------------------------------------------------------------------
CriterionResult criterion_10(const VerifyOptions& /*opts*/) {
  CriterionResult res{10, "census output is byte-identical across runs and worker counts", false, 0,
                      ""};
  auto t0 = Clock::now();
  Lines out;
  bool ok = true;
  for (const auto& factors : {std::vector<Int>{2, 2}, std::vector<Int>{9}}) {
    FgAbelianGroup g(factors);
    CensusOptions a, b;
    a.jobs = 1;
    b.jobs = 3;
    std::string sa = census_to_string(classify(g, a));
    std::string sb = census_to_string(classify(g, b));
    std::string sc = census_to_string(classify(g, a));
    if (sa != sb || sa != sc) {
      ok = false;
      out.add(g.str() + ": outputs differ between runs or job counts");
    } else {
      out.add(g.str() + ": " + std::to_string(sa.size()) + " bytes, identical across runs/jobs");
    }
  }
  res.seconds = seconds_since(t0);
  res.passed = ok;
  res.details = out.str();
  return res;
}

} // namespace

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
  switch (id) {
    case 1: return criterion_1(opts);
    case 2: return criterion_2(opts);
    case 3: return criterion_3(opts);
    case 4: return criterion_4(opts);
    case 5: return criterion_5(opts);
    case 6: return criterion_6(opts);
    case 7: return criterion_7(opts);
    case 8: return criterion_8(opts);
    case 9: return criterion_9(opts);
    case 10: return criterion_10(opts);
    default: fail(Errc::BadParameters, "criterion id must be 1..10");
  }
}

std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

std::string criterion_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name << " ("
     << r.seconds << " s)";
  return os.str();
}

} // namespace leibniz
