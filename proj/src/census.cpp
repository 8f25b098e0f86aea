#include "leibniz/census.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/ring_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace leibniz {

namespace {

struct SlotDomains {
  // allowed[i][j]: elements x with d_i x = d_j x = 0, in enumeration order
  std::vector<std::vector<std::vector<GroupElement>>> allowed;
};

SlotDomains slot_domains(const FgAbelianGroup& g) {
  const std::size_t n = g.generator_count();
  auto elements = g.enumerate_elements();
  SlotDomains out;
  out.allowed.assign(n, std::vector<std::vector<GroupElement>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& x : elements)
        if (g.smul(g.factors()[i], x).is_zero() && g.smul(g.factors()[j], x).is_zero())
          out.allowed[i][j].push_back(x);
  return out;
}

void check_budget(const FgAbelianGroup& g, const Int& budget) {
  if (!g.is_finite()) fail(Errc::InfiniteGroup, "enumeration needs a finite group");
  const std::size_t n = g.generator_count();
  Int raw = 1;
  Int size = g.order().value;
  for (std::size_t i = 0; i < n * n; ++i) {
    raw *= size;
    if (raw > budget)
      fail(Errc::BudgetExceeded, "candidate space " + size.str() + "^" + std::to_string(n * n) +
                                     " exceeds the budget " + budget.str());
  }
}

// Depth-first walk over the table slots in row-major order; the first slot
// can be restricted to a sub-range so workers can split the space without
// changing the visit order within a chunk. The visitor returns false to
// stop the walk.
void enumerate_range(const FgAbelianGroup& g, const SlotDomains& dom, std::size_t first_lo,
                     std::size_t first_hi, bool left_only,
                     const std::function<bool(const LeibnizRing&)>& visit) {
  const std::size_t n = g.generator_count();
  if (n == 0) {
    visit(abelian_ring(g));
    return;
  }
  const std::size_t slots = n * n;
  BracketTable table(n, std::vector<GroupElement>(n, g.zero()));
  std::vector<std::size_t> pick(slots, 0);

  const auto slot_list = [&](std::size_t s) -> const std::vector<GroupElement>& {
    return dom.allowed[s / n][s % n];
  };
  const auto lo_for = [&](std::size_t s) { return s == 0 ? first_lo : std::size_t(0); };
  const auto hi_for = [&](std::size_t s) { return s == 0 ? first_hi : slot_list(s).size(); };

  std::size_t depth = 0;
  pick[0] = first_lo;
  for (;;) {
    if (depth == slots) {
      LeibnizRing r(g, table);
      if (!left_only || r.is_left_leibniz())
        if (!visit(r)) return;
      --depth;
      ++pick[depth];
    }
    while (pick[depth] >= hi_for(depth)) {
      pick[depth] = lo_for(depth);
      if (depth == 0) return;
      --depth;
      ++pick[depth];
    }
    table[depth / n][depth % n] = slot_list(depth)[pick[depth]];
    ++depth;
  }
}

} // namespace

void enumerate_left_leibniz(const FgAbelianGroup& g,
                            const std::function<void(const LeibnizRing&)>& visit,
                            const Int& budget) {
  check_budget(g, budget);
  SlotDomains dom = slot_domains(g);
  const std::size_t first = g.generator_count() == 0 ? 1 : dom.allowed[0][0].size();
  enumerate_range(g, dom, 0, first, true, [&](const LeibnizRing& r) {
    visit(r);
    return true;
  });
}

void enumerate_well_defined_tables(const FgAbelianGroup& g,
                                   const std::function<bool(const LeibnizRing&)>& visit,
                                   const Int& budget) {
  check_budget(g, budget);
  SlotDomains dom = slot_domains(g);
  const std::size_t first = g.generator_count() == 0 ? 1 : dom.allowed[0][0].size();
  enumerate_range(g, dom, 0, first, false, visit);
}

std::vector<LeibnizRing> collect_left_leibniz(const FgAbelianGroup& g, const Int& budget) {
  std::vector<LeibnizRing> out;
  enumerate_left_leibniz(g, [&](const LeibnizRing& r) { out.push_back(r); }, budget);
  return out;
}

bool census_covered_shape(const FgAbelianGroup& g) {
  const auto& f = g.factors();
  auto pp = [](const Int& q) {
    if (q < 2) return false;
    Int p = 2;
    while (q % p != 0) ++p;
    Int n = q;
    while (n % p == 0) n /= p;
    return n == 1;
  };
  if (f.size() == 1) return pp(f[0]);
  if (f.size() == 2) {
    if (f[0] == f[1] && is_prime(f[0])) return true;
    if (is_prime(f[1]) && f[0] == f[1] * f[1]) return true;
    if (is_prime(f[0]) && f[1] == f[0] * f[0]) return true;
  }
  return false;
}

IsoClassCensus classify(const FgAbelianGroup& g, const CensusOptions& opts) {
  check_budget(g, opts.budget);
  const auto auts = automorphisms(g);
  SlotDomains dom = slot_domains(g);
  const std::size_t n = g.generator_count();
  const std::size_t first = n == 0 ? 1 : dom.allowed[0][0].size();

  using Orbits = std::map<Vec, std::pair<LeibnizRing, Int>>;
  const unsigned jobs = std::max(1u, opts.jobs);

  auto run_chunk = [&](std::size_t lo, std::size_t hi, Orbits& local) {
    enumerate_range(g, dom, lo, hi, true, [&](const LeibnizRing& r) {
      LeibnizRing canon = canonical_form(r, auts);
      Vec key = flatten_table(canon);
      auto it = local.find(key);
      if (it == local.end())
        local.emplace(std::move(key), std::make_pair(std::move(canon), Int(1)));
      else
        it->second.second += 1;
      return true;
    });
  };

  Orbits orbits;
  if (jobs == 1 || n == 0 || first <= 1) {
    run_chunk(0, first, orbits);
  } else {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, first));
    std::vector<Orbits> locals(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = first * w / workers, hi = first * (w + 1) / workers;
      threads.emplace_back([&, lo, hi, w] { run_chunk(lo, hi, locals[w]); });
    }
    for (auto& t : threads) t.join();
    for (auto& local : locals)
      for (auto& [key, value] : local) {
        auto it = orbits.find(key);
        if (it == orbits.end())
          orbits.emplace(key, std::move(value));
        else
          it->second.second += value.second;
      }
  }

  IsoClassCensus census;
  census.group = g;
  census.automorphism_count = Int(auts.size());
  const auto families = family_instances_on_group(g);
  std::vector<std::pair<std::string, Vec>> family_keys;
  family_keys.reserve(families.size());
  for (const auto& [tag, ring] : families)
    family_keys.emplace_back(tag, flatten_table(canonical_form(ring, auts)));

  for (auto& [key, value] : orbits) {
    census.total_valid += value.second;
    bool lie = value.first.is_lie();
    std::string tag = lie ? "Lie" : "Unmatched";
    if (!lie)
      for (const auto& [ftag, fkey] : family_keys)
        if (fkey == key) {
          tag = ftag;
          break;
        }
    census.classes.push_back(
        IsoClass{value.first, value.second, invariant_report(value.first), lie, tag});
  }
  return census;
}

namespace {

std::string cardinal_str(const Cardinal& c) { return c.str(); }

std::string factors_csv(const FgAbelianGroup& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.factors().size(); ++i) {
    if (i) os << ',';
    os << g.factors()[i];
  }
  return os.str();
}

} // namespace

std::string census_to_string(const IsoClassCensus& census) {
  std::ostringstream os;
  os << "leibniz-census v1\n";
  os << "group: " << factors_csv(census.group) << "\n";
  os << "aut_count: " << census.automorphism_count << "\n";
  os << "total_valid: " << census.total_valid << "\n";
  os << "class_count: " << census.classes.size() << "\n";
  std::size_t idx = 0;
  for (const auto& cls : census.classes) {
    ++idx;
    os << "\nclass: " << idx << "\n";
    os << "orbit_size: " << cls.orbit_size << "\n";
    os << "family: " << cls.family_tag << "\n";
    os << "leib_order: " << cardinal_str(subgroup_order(cls.invariants.kernel)) << "\n";
    os << "derived_order: " << cardinal_str(subgroup_order(cls.invariants.derived)) << "\n";
    os << "left_center_order: " << cardinal_str(subgroup_order(cls.invariants.left_center)) << "\n";
    os << "right_center_order: " << cardinal_str(subgroup_order(cls.invariants.right_center))
       << "\n";
    os << "center_order: " << cardinal_str(subgroup_order(cls.invariants.center)) << "\n";
    os << "anticenter_order: " << cardinal_str(subgroup_order(cls.invariants.anticenter)) << "\n";
    os << "gamma_orders: ";
    for (std::size_t i = 0; i < cls.invariants.lower_central.terms.size(); ++i) {
      if (i) os << ',';
      os << cardinal_str(subgroup_order(cls.invariants.lower_central.terms[i]));
    }
    os << "\n";
    os << "gamma_stabilized: " << (cls.invariants.lower_central.stabilized ? "yes" : "no") << "\n";
    os << "ring:\n" << ring_to_string(cls.representative) << "end_ring\n";
  }
  return os.str();
}

void census_to_file(const IsoClassCensus& census, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::IoError, "cannot write " + path);
  out << census_to_string(census);
}

namespace {

std::string expect_field(std::istream& in, const std::string& key) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind(key, 0) == 0) return line.substr(key.size());
    fail(Errc::ParseError, "census file: expected '" + key + "', got '" + line + "'");
  }
  fail(Errc::ParseError, "census file: missing field " + key);
}

} // namespace

LoadedCensus load_census(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != "leibniz-census v1")
    fail(Errc::ParseError, "census file: bad header");
  LoadedCensus out;
  {
    std::string factors = expect_field(in, "group: ");
    std::vector<Int> fs;
    std::stringstream ss(factors);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) fs.emplace_back(tok);
    out.group = FgAbelianGroup(fs);
  }
  out.automorphism_count = Int(expect_field(in, "aut_count: "));
  out.total_valid = Int(expect_field(in, "total_valid: "));
  Int class_count(expect_field(in, "class_count: "));
  for (Int c = 0; c < class_count; ++c) {
    expect_field(in, "class: ");
    LoadedCensusClass cls{Int(expect_field(in, "orbit_size: ")), expect_field(in, "family: "),
                          abelian_ring(out.group)};
    expect_field(in, "leib_order: ");
    expect_field(in, "derived_order: ");
    expect_field(in, "left_center_order: ");
    expect_field(in, "right_center_order: ");
    expect_field(in, "center_order: ");
    expect_field(in, "anticenter_order: ");
    expect_field(in, "gamma_orders: ");
    expect_field(in, "gamma_stabilized: ");
    expect_field(in, "ring:");
    std::ostringstream doc;
    while (std::getline(in, line) && line != "end_ring") doc << line << '\n';
    cls.ring = ring_from_document(parse_ring(doc.str()));
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::vector<BracketIdealFinding> search_bracket_ideal_counterexamples(const IsoClassCensus& census) {
  std::vector<BracketIdealFinding> findings;
  std::vector<Subgroup> subgroups = all_subgroups(census.group);
  for (const auto& cls : census.classes) {
    const LeibnizRing& r = cls.representative;
    std::vector<Subgroup> ideals;
    for (const auto& s : subgroups)
      if (is_ideal(r, s)) ideals.push_back(s);
    for (const auto& a : ideals)
      for (const auto& b : ideals) {
        Subgroup span = bracket_subgroup(r, a, b);
        if (!is_ideal(r, span)) findings.push_back({r, a, b, span});
      }
  }
  return findings;
}

CongruenceReport congruence_equivalence_check(const Int& k) {
  CongruenceReport rep;
  rep.k = k;
  if (k < 1) fail(Errc::BadParameters, "k must be >= 1");
  if (k == 1) {
    rep.tuples_checked = 1; // the zero tuple; both sides hold trivially
    return rep;
  }
  FgAbelianGroup g({k, 0});
  for (Int sigma = 0; sigma < k; ++sigma)
    for (Int a1 = 0; a1 < k; ++a1)
      for (Int a2 = 0; a2 < k; ++a2)
        for (Int beta = 0; beta < k; ++beta) {
          BracketTable t(2, std::vector<GroupElement>(2, g.zero()));
          t[0][0] = g.normalize({sigma, 0});
          t[0][1] = g.normalize({a2, 0});
          t[1][0] = g.normalize({a1, 0});
          t[1][1] = g.normalize({beta, 0});
          LeibnizRing r(g, std::move(t));
          bool identity = r.is_left_leibniz();
          bool congruences = (sigma * sigma % k == 0) && (a2 * sigma % k == 0) &&
                             (a2 * beta % k == 0) && (beta * sigma % k == 0) &&
                             ((a2 * a2 + a2 * a1) % k == 0) && (a1 * sigma % k == 0);
          rep.tuples_checked += 1;
          if (identity != congruences)
            rep.counterexamples.push_back({sigma, a1, a2, beta, identity, congruences});
        }
  return rep;
}

} // namespace leibniz
