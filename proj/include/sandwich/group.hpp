#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sandwich {

using Rational = boost::rational<std::int64_t>;
using Elem = std::vector<int>;
using Character = std::vector<int>;

class Group {
 public:
  Group() = default;
  explicit Group(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  int order() const { return order_; }
  bool trivial() const { return factors_.empty(); }

  bool valid(const Elem& e) const;
  Elem zero() const { return Elem(factors_.size(), 0); }
  Elem add(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem scale(long long k, const Elem& x) const;

  // mixed-radix index, first coordinate most significant
  int index(const Elem& e) const;
  Elem element(int idx) const;
  std::vector<Elem> elements() const;
  std::vector<Elem> nonzero_elements() const;

  int element_order(const Elem& e) const;
  // numerator of the pairing over the common denominator exponent()
  int pairing_numerator(const Character& c, const Elem& g) const;
  Rational pairing(const Character& c, const Elem& g) const;
  int restriction_exponent(const Character& c, const Elem& h) const;
  int exponent() const { return exponent_; }

  std::vector<Elem> span(const std::vector<Elem>& gens) const;
  bool generates(const std::vector<Elem>& gens) const;

  // "Z/2xZ/8"; "1" for the trivial group
  std::string name() const;
  // "2,8"
  std::string factor_string() const;

  bool operator==(const Group& o) const { return factors_ == o.factors_; }
  bool operator<(const Group& o) const;

 private:
  std::vector<int> factors_;
  int order_ = 1;
  int exponent_ = 1;
};

Group make_group(const std::vector<int>& factors);
Group parse_group(const std::string& text);
int element_order(const Group& g, const Elem& e);
bool generates(const Group& g, const std::vector<Elem>& gens);
int restriction_exponent(const Group& g, const Character& c, const Elem& h);

std::string format_tuple(const std::vector<int>& v);

// An automorphism as a permutation of element indices.
struct Automorphism {
  std::vector<int> perm;
  std::vector<int> inverse;
  Elem apply(const Group& g, const Elem& e) const {
    return g.element(perm[g.index(e)]);
  }
};

struct AutomorphismOptions {
  int order_bound = 64;
  std::size_t count_cap = 200000;
};

// Cached per factor list; throws Capability above the bounds.
const std::vector<Automorphism>& automorphisms(
    const Group& g, const AutomorphismOptions& opt = {});

// Dual action on characters: chi -> chi o phi^{-1}.
Character dual_apply(const Group& g, const Automorphism& phi, const Character& c);

}  // namespace sandwich
