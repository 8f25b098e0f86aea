#include "leibniz/group.hpp"

#include "leibniz/errors.hpp"

#include <algorithm>
#include <sstream>

namespace leibniz {

std::string GroupElement::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}

FgAbelianGroup::FgAbelianGroup(std::vector<Int> factors) : factors_(std::move(factors)) {
  for (const auto& d : factors_) {
    if (d < 0) fail(Errc::NegativeFactor, "group factor must be 0 or >= 2, got " + d.str());
    if (d == 1) fail(Errc::FactorOne, "trivial factor 1 is not allowed in a presentation");
  }
  rank_ = static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), Int(0)));
}

FgAbelianGroup make_group(const std::vector<Int>& factors) { return FgAbelianGroup(factors); }

Cardinal FgAbelianGroup::order() const {
  if (rank_ > 0) return Cardinal::infinite();
  Int n = 1;
  for (const auto& d : factors_) n *= d;
  return Cardinal::of(n);
}

GroupElement FgAbelianGroup::normalize(const Vec& raw) const {
  if (raw.size() != factors_.size())
    fail(Errc::LengthMismatch, "coefficient vector has length " + std::to_string(raw.size()) +
                                   ", group has " + std::to_string(factors_.size()) + " generators");
  GroupElement e{raw};
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i] != 0) e.c[i] = mod_floor(e.c[i], factors_[i]);
  return e;
}

GroupElement FgAbelianGroup::generator(std::size_t i) const {
  GroupElement e = zero();
  e.c[i] = 1;
  return normalize(e.c);
}

GroupElement FgAbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
  Vec r(factors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = x.c[i] + y.c[i];
  return normalize(r);
}

GroupElement FgAbelianGroup::sub(const GroupElement& x, const GroupElement& y) const {
  Vec r(factors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = x.c[i] - y.c[i];
  return normalize(r);
}

GroupElement FgAbelianGroup::neg(const GroupElement& x) const {
  Vec r(factors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -x.c[i];
  return normalize(r);
}

GroupElement FgAbelianGroup::smul(const Int& k, const GroupElement& x) const {
  Vec r(factors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = k * x.c[i];
  return normalize(r);
}

Cardinal FgAbelianGroup::element_order(const GroupElement& x) const {
  Int ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (x.c[i] == 0) continue;
    if (factors_[i] == 0) return Cardinal::infinite();
    ord = lcm(ord, factors_[i] / gcd(factors_[i], x.c[i]));
  }
  return Cardinal::of(ord);
}

std::vector<GroupElement> FgAbelianGroup::enumerate_elements() const {
  if (!is_finite()) fail(Errc::InfiniteGroup, "cannot enumerate an infinite group");
  std::vector<GroupElement> out;
  Cardinal n = order();
  out.reserve(static_cast<std::size_t>(n.value));
  GroupElement cur = zero();
  for (;;) {
    out.push_back(cur);
    // mixed-radix increment, last coordinate fastest
    std::size_t i = factors_.size();
    while (i > 0) {
      --i;
      if (++cur.c[i] < factors_[i]) break;
      cur.c[i] = 0;
      if (i == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

Mat FgAbelianGroup::relation_rows() const {
  Mat rel;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] == 0) continue;
    Vec row(factors_.size(), 0);
    row[i] = factors_[i];
    rel.push_back(std::move(row));
  }
  return rel;
}

FgAbelianGroup::CanonicalShape FgAbelianGroup::canonical_shape() const {
  CanonicalShape shape;
  shape.rank = rank_;
  SmithForm sf = smith_normal_form(relation_rows());
  for (const auto& d : sf.diagonal())
    if (d > 1) shape.torsion.push_back(d);
  return shape;
}

std::string FgAbelianGroup::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ',';
    os << factors_[i];
  }
  os << ']';
  return os.str();
}

std::vector<Int> prime_support(const FgAbelianGroup& g) {
  std::vector<Int> primes;
  for (const auto& d : g.factors()) {
    Int n = d;
    for (Int p = 2; p * p <= n; ++p)
      while (n % p == 0) {
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
        n /= p;
      }
    if (n > 1 && std::find(primes.begin(), primes.end(), n) == primes.end()) primes.push_back(n);
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

} // namespace leibniz
