// Command-line front end: validate ring files, report invariants, run
// isomorphism censuses, emit the reference families, and run the full
// verification suite.
//
// Exit codes: 0 success / all checks match, 1 mathematical mismatch or
// invalid ring, 2 usage, parse, or I/O error.

#include "leibniz/census.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/ring_io.hpp"
#include "leibniz/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

using namespace leibniz;
using Json = nlohmann::ordered_json;

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::IoError:
    case Errc::BadParameters:
    case Errc::InfiniteGroup:
    case Errc::BudgetExceeded:
    case Errc::LengthMismatch: return 2;
    default: return 1;
  }
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

Json subgroup_json(const Subgroup& s) {
  Json j;
  Json gens = Json::array();
  for (const auto& e : s.generators()) {
    Json v = Json::array();
    for (const auto& c : e.c) v.push_back(c.str());
    gens.push_back(v);
  }
  j["generators"] = gens;
  j["order"] = subgroup_order(s).str();
  return j;
}

std::vector<Int> parse_factor_list(const std::string& csv) {
  std::vector<Int> out;
  std::string tok;
  std::stringstream ss(csv);
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.emplace_back(tok);
  return out;
}

int cmd_check(const std::string& file, bool json) {
  RingDocument doc = load_ring(file);
  bool well_defined = true;
  std::string defect;
  try {
    LeibnizRing probe(doc.group, doc.table);
  } catch (const Error& e) {
    if (e.code() != Errc::IllDefinedBracket) throw;
    well_defined = false;
    defect = e.what();
  }
  if (!well_defined) {
    if (json) {
      Json j;
      j["well_defined"] = false;
      j["error"] = defect;
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "well-defined: no\n  " << defect << '\n';
    }
    return 1;
  }

  LeibnizRing r(doc.group, doc.table);
  ValidationReport rep = r.validate();
  if (json) {
    Json j;
    j["well_defined"] = rep.well_defined;
    j["left"] = rep.left_leibniz;
    j["right"] = rep.right_leibniz;
    j["symmetric"] = rep.symmetric;
    j["lie"] = rep.lie;
    Json ws = Json::array();
    for (const auto& w : rep.witnesses) {
      Json jw;
      jw["side"] = w.side == DefectWitness::Side::Left ? "left" : "right";
      jw["triple"] = {w.i, w.j, w.k};
      Json d = Json::array();
      for (const auto& c : w.defect.c) d.push_back(c.str());
      jw["defect"] = d;
      ws.push_back(jw);
    }
    j["witnesses"] = ws;
    j["ring"] = Json::parse(ring_to_string(r));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "well-defined: " << yesno(rep.well_defined) << '\n'
              << "left: " << yesno(rep.left_leibniz) << '\n'
              << "right: " << yesno(rep.right_leibniz) << '\n'
              << "symmetric: " << yesno(rep.symmetric) << '\n'
              << "lie: " << yesno(rep.lie) << '\n';
    std::size_t shown = 0;
    for (const auto& w : rep.witnesses) {
      if (++shown > 8) {
        std::cout << "  (+" << rep.witnesses.size() - 8 << " more witnesses)\n";
        break;
      }
      std::cout << "  " << (w.side == DefectWitness::Side::Left ? "left" : "right")
                << " defect at (e" << w.i << ",e" << w.j << ",e" << w.k
                << ") = " << w.defect.str() << '\n';
    }
  }
  return rep.left_leibniz ? 0 : 1;
}

int cmd_invariants(const std::string& file, bool json) {
  RingDocument doc = load_ring(file);
  LeibnizRing r(doc.group, doc.table);
  InvariantReport rep = invariant_report(r); // throws NotLeftLeibniz -> exit 1
  if (json) {
    Json j;
    j["group"] = Json::parse(ring_to_string(r))["group"];
    j["leibniz_kernel"] = subgroup_json(rep.kernel);
    j["derived_ideal"] = subgroup_json(rep.derived);
    j["left_center"] = subgroup_json(rep.left_center);
    j["right_center"] = subgroup_json(rep.right_center);
    j["center"] = subgroup_json(rep.center);
    j["anticenter"] = subgroup_json(rep.anticenter);
    Json gamma = Json::array();
    for (const auto& t : rep.lower_central.terms) gamma.push_back(subgroup_json(t));
    j["lower_central"] = gamma;
    j["lower_central_stabilized"] = rep.lower_central.stabilized;
    j["torsion_ideal"] = subgroup_json(rep.torsion);
    Json primary = Json::object();
    for (const auto& [p, s] : rep.primary) primary[p.str()] = subgroup_json(s);
    j["primary_ideals"] = primary;
    j["ring"] = Json::parse(ring_to_string(r));
    std::cout << j.dump(2) << '\n';
  } else {
    auto line = [&](const char* name, const Subgroup& s) {
      std::cout << name << ": " << s.str() << " order " << subgroup_order(s).str() << '\n';
    };
    std::cout << "group: " << r.group().str() << '\n';
    line("Leib", rep.kernel);
    line("[L,L]", rep.derived);
    line("left center", rep.left_center);
    line("right center", rep.right_center);
    line("center", rep.center);
    line("anticenter", rep.anticenter);
    std::cout << "gamma orders:";
    for (const auto& t : rep.lower_central.terms) std::cout << ' ' << subgroup_order(t).str();
    std::cout << (rep.lower_central.stabilized ? " (stabilized)" : " (cap reached)") << '\n';
    line("torsion ideal", rep.torsion);
    for (const auto& [p, s] : rep.primary)
      std::cout << "  " << p.str() << "-primary: " << s.str() << " order "
                << subgroup_order(s).str() << '\n';
  }
  return 0;
}

int cmd_census(const std::string& group_csv, const std::string& out_file, const std::string& budget,
               unsigned jobs, bool json, bool explore) {
  FgAbelianGroup g(parse_factor_list(group_csv));
  CensusOptions opts;
  if (!budget.empty()) opts.budget = Int(budget);
  opts.jobs = jobs;
  IsoClassCensus census = classify(g, opts);
  if (!out_file.empty()) census_to_file(census, out_file);

  std::size_t unmatched = 0;
  for (const auto& cls : census.classes)
    if (cls.family_tag == "Unmatched") ++unmatched;

  if (json) {
    Json j;
    j["group"] = group_csv;
    j["total_valid"] = census.total_valid.str();
    j["class_count"] = census.classes.size();
    Json cs = Json::array();
    for (const auto& cls : census.classes) {
      Json c;
      c["family"] = cls.family_tag;
      c["orbit_size"] = cls.orbit_size.str();
      c["leib_order"] = subgroup_order(cls.invariants.kernel).str();
      c["ring"] = Json::parse(ring_to_string(cls.representative));
      cs.push_back(c);
    }
    j["classes"] = cs;
    j["unmatched"] = unmatched;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "group " << g.str() << ": " << census.total_valid.str()
              << " left Leibniz tables in " << census.classes.size() << " classes\n";
    std::size_t idx = 0;
    for (const auto& cls : census.classes)
      std::cout << "  class " << ++idx << ": orbit " << cls.orbit_size.str() << ", "
                << cls.family_tag << '\n';
    std::cout << "unmatched: " << unmatched << '\n';
    if (!out_file.empty()) std::cout << "written: " << out_file << '\n';
  }
  if (explore) {
    auto findings = search_bracket_ideal_counterexamples(census);
    std::cout << "exploratory [A,B]-ideal search: " << findings.size() << " finding(s)\n";
    std::size_t shown = 0;
    for (const auto& f : findings) {
      if (++shown > 5) {
        std::cout << "  ...\n";
        break;
      }
      std::cout << "  A=" << f.a.str() << " B=" << f.b.str() << " [A,B]=" << f.span.str()
                << " is not an ideal in " << f.ring.str() << '\n';
    }
  }
  return (unmatched > 0 && census_covered_shape(g)) ? 1 : 0;
}

int cmd_family(const std::string& name, FamilySpec spec, const std::string& emit, bool json) {
  auto fam = family_from_name(name);
  if (!fam) fail(Errc::BadParameters, "unknown family " + name + " (expected L1..L9)");
  spec.family = *fam;
  FamilyVerification v = verify_family(spec);
  if (!emit.empty()) save_ring(make_family(spec), emit);
  if (json) {
    Json j;
    j["spec"] = spec.str();
    j["left_leibniz"] = v.left_leibniz;
    j["full_match"] = v.full_match;
    Json cs = Json::array();
    for (const auto& cmp : v.comparisons) {
      Json c;
      c["invariant"] = cmp.name;
      c["computed"] = subgroup_json(cmp.computed);
      if (cmp.claimed) c["stated"] = subgroup_json(*cmp.claimed);
      c["match"] = cmp.match;
      cs.push_back(c);
    }
    j["comparisons"] = cs;
    j["ring"] = Json::parse(ring_to_string(make_family(spec)));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << v.summary();
    if (!emit.empty()) std::cout << "written: " << emit << '\n';
  }
  return v.full_match ? 0 : 1;
}

int cmd_verify_paper(const VerifyOptions& opts) {
  std::cout << "seed: " << opts.seed << '\n';
  bool all = true;
  for (int id = 1; id <= 10; ++id) {
    CriterionResult r = run_criterion(id, opts);
    std::cout << criterion_line(r) << '\n';
    if (!r.details.empty()) std::cout << r.details;
    all = all && r.passed;
  }
  std::cout << (all ? "all criteria passed\n" : "some criteria FAILED\n");
  return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with finitely generated Leibniz rings"};
  app.require_subcommand(1);

  std::string file, group_csv, out_file, budget, emit, family_name_arg;
  bool json = false;
  unsigned jobs = 1;
  FamilySpec spec;
  VerifyOptions vopts;

  auto* check = app.add_subcommand("check", "validate a ring file");
  check->add_option("file", file)->required();
  check->add_flag("--json", json, "machine-readable output");

  auto* invariants = app.add_subcommand("invariants", "print the invariant report of a ring file");
  invariants->add_option("file", file)->required();
  invariants->add_flag("--json", json);

  auto* census = app.add_subcommand("census", "classify all left Leibniz rings on a finite group");
  census->add_option("--group", group_csv, "comma-separated factor list")->required();
  census->add_option("--out", out_file, "census output file");
  census->add_option("--budget", budget, "candidate budget (default 10^8)");
  census->add_option("--jobs", jobs, "worker threads");
  bool explore = false;
  census->add_flag("--explore", explore, "search ideal pairs whose bracket span is not an ideal");
  census->add_flag("--json", json);

  auto* family = app.add_subcommand("family", "construct and verify a reference family");
  family->add_option("name", family_name_arg, "L1..L9")->required();
  std::string p_s, m_s, s_s, k_s, alpha_s, beta_s, sigma_s, a1_s, a2_s;
  family->add_option("--p", p_s);
  family->add_option("--m", m_s);
  family->add_option("--s", s_s);
  family->add_option("--k", k_s);
  family->add_option("--alpha", alpha_s);
  family->add_option("--beta", beta_s);
  family->add_option("--sigma", sigma_s);
  family->add_option("--alpha1", a1_s);
  family->add_option("--alpha2", a2_s);
  family->add_option("--emit", emit, "write the ring file here");
  family->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify-paper", "run the complete verification suite");
  std::string maxp_s, maxm_s, maxk_s;
  verify->add_option("--max-p", maxp_s, "prime grid cap (default 5)");
  verify->add_option("--max-m", maxm_s, "cyclic exponent cap (default 4)");
  verify->add_option("--max-k", maxk_s, "congruence sweep cap (default 24)");
  verify->add_option("--seed", vopts.seed, "seed for randomized cross-checks");
  verify->add_option("--jobs", vopts.jobs, "census worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(file, json);
    if (*invariants) return cmd_invariants(file, json);
    if (*census) return cmd_census(group_csv, out_file, budget, jobs, json, explore);
    if (*family) {
      if (!p_s.empty()) spec.p = Int(p_s);
      if (!m_s.empty()) spec.m = Int(m_s);
      if (!s_s.empty()) spec.s = Int(s_s);
      if (!k_s.empty()) spec.k = Int(k_s);
      if (!alpha_s.empty()) spec.alpha = Int(alpha_s);
      if (!beta_s.empty()) spec.beta = Int(beta_s);
      if (!sigma_s.empty()) spec.sigma = Int(sigma_s);
      if (!a1_s.empty()) spec.alpha1 = Int(a1_s);
      if (!a2_s.empty()) spec.alpha2 = Int(a2_s);
      return cmd_family(family_name_arg, spec, emit, json);
    }
    if (*verify) {
      if (!maxp_s.empty()) vopts.max_p = Int(maxp_s);
      if (!maxm_s.empty()) vopts.max_m = Int(maxm_s);
      if (!maxk_s.empty()) vopts.max_k = Int(maxk_s);
      return cmd_verify_paper(vopts);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
