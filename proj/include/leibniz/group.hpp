#pragma once

#include "leibniz/ints.hpp"
#include "leibniz/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace leibniz {

// Coefficient vector over the generators of an FgAbelianGroup, kept
// normalized: 0 <= c[i] < d_i on finite factors, arbitrary on infinite ones.
struct GroupElement {
  Vec c;

  bool operator==(const GroupElement& o) const { return c == o.c; }
  bool operator!=(const GroupElement& o) const { return c != o.c; }
  bool operator<(const GroupElement& o) const { return c < o.c; }
  bool is_zero() const {
    for (const auto& v : c)
      if (v != 0) return false;
    return true;
  }
  std::string str() const;
};

// Direct sum of cyclic groups; factor 0 denotes an infinite cyclic factor,
// a factor d >= 2 a cyclic factor of order d. Factor 1 is rejected.
class FgAbelianGroup {
public:
  FgAbelianGroup() = default;
  explicit FgAbelianGroup(std::vector<Int> factors);

  const std::vector<Int>& factors() const { return factors_; }
  std::size_t generator_count() const { return factors_.size(); }
  std::size_t rank() const { return rank_; }
  bool is_finite() const { return rank_ == 0; }
  Cardinal order() const;

  bool operator==(const FgAbelianGroup& o) const { return factors_ == o.factors_; }
  bool operator!=(const FgAbelianGroup& o) const { return factors_ != o.factors_; }

  GroupElement normalize(const Vec& raw) const;
  GroupElement zero() const { return GroupElement{Vec(factors_.size(), 0)}; }
  GroupElement generator(std::size_t i) const;

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement sub(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;
  GroupElement smul(const Int& k, const GroupElement& x) const;

  Cardinal element_order(const GroupElement& x) const;

  // All elements in lexicographic coefficient order. Finite groups only.
  std::vector<GroupElement> enumerate_elements() const;

  // Rows d_i * e_i for the finite factors: the relation lattice of the
  // presentation Z^n -> G.
  Mat relation_rows() const;

  // Invariant-factor shape (rank, divisor chain) for isomorphism tests
  // between differently presented groups.
  struct CanonicalShape {
    std::size_t rank = 0;
    std::vector<Int> torsion; // d_1 | d_2 | ..., all >= 2
    bool operator==(const CanonicalShape& o) const {
      return rank == o.rank && torsion == o.torsion;
    }
  };
  CanonicalShape canonical_shape() const;

  std::string str() const;

private:
  std::vector<Int> factors_;
  std::size_t rank_ = 0;
};

FgAbelianGroup make_group(const std::vector<Int>& factors);

// Primes p with a nontrivial p-primary component.
std::vector<Int> prime_support(const FgAbelianGroup& g);

} // namespace leibniz
