#pragma once

#include "leibniz/invariants.hpp"
#include "leibniz/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibniz {

enum class Family { L1, L2, L3, L4, L5, L6, L7, L8, L9 };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Parameters for the nine reference families. Only the fields a family
// uses are consulted:
//   L1: p, m, s (2s <= m)    L2..L6: p    L7: alpha, beta
//   L8: k, beta (beta | k, beta < k)
//   L9: k, sigma, alpha1, alpha2, beta (six congruences mod k)
struct FamilySpec {
  Family family = Family::L1;
  Int p = 0;
  Int m = 0;
  Int s = 0;
  Int k = 0;
  Int alpha = 0;
  Int beta = 0;
  Int sigma = 0;
  Int alpha1 = 0;
  Int alpha2 = 0;

  std::string str() const;
};

// Throws BadParameters naming the violated condition.
void validate_family_spec(const FamilySpec& spec);

LeibnizRing make_family(const FamilySpec& spec);

// The closed forms the reference tables state for this family; fields are
// absent where the tables make no claim.
struct FamilyClaims {
  std::optional<Subgroup> leibniz_kernel;
  std::optional<Subgroup> derived;
  std::optional<Subgroup> left_center;
  std::optional<Subgroup> right_center;
  std::optional<Subgroup> center;
};

FamilyClaims family_claims(const FamilySpec& spec, const LeibnizRing& ring);

struct InvariantComparison {
  std::string name;
  Subgroup computed;
  std::optional<Subgroup> claimed;
  bool match = true; // vacuously true without a claim
};

struct FamilyVerification {
  FamilySpec spec;
  bool left_leibniz = false;
  std::vector<InvariantComparison> comparisons;
  bool full_match = false; // left Leibniz and every stated claim matches
  std::string summary() const;
};

FamilyVerification verify_family(const FamilySpec& spec);

// All parameterizations of L1..L6 living on this exact presentation,
// tagged; used by the census to label isomorphism classes.
std::vector<std::pair<std::string, LeibnizRing>> family_instances_on_group(const FgAbelianGroup& g);

} // namespace leibniz
