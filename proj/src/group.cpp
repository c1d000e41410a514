#include "sandwich/group.hpp"

#include "sandwich/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sandwich {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InvalidMonodromy: return "invalid-monodromy";
    case ErrorKind::DisconnectedCover: return "disconnected-cover";
    case ErrorKind::GroupMismatch: return "group-mismatch";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::Capability: return "capability";
    case ErrorKind::InternalConsistency: return "internal-consistency";
  }
  return "error";
}

Group::Group(std::vector<int> factors) : factors_(std::move(factors)) {
  for (int n : factors_)
    if (n < 2) fail(ErrorKind::InvalidInput, "group factor must be >= 2, got " + std::to_string(n));
  for (int n : factors_) {
    if (order_ > (1 << 20) / n) fail(ErrorKind::Capability, "group order too large");
    order_ *= n;
    exponent_ = std::lcm(exponent_, n);
  }
}

bool Group::operator<(const Group& o) const {
  if (order_ != o.order_) return order_ < o.order_;
  return factors_ < o.factors_;
}

bool Group::valid(const Elem& e) const {
  if (e.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] >= factors_[i]) return false;
  return true;
}

Elem Group::add(const Elem& x, const Elem& y) const {
  Elem r(factors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (x[i] + y[i]) % factors_[i];
  return r;
}

Elem Group::neg(const Elem& x) const {
  Elem r(factors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (factors_[i] - x[i]) % factors_[i];
  return r;
}

Elem Group::scale(long long k, const Elem& x) const {
  Elem r(factors_.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    long long v = (k % factors_[i]) * x[i] % factors_[i];
    if (v < 0) v += factors_[i];
    r[i] = static_cast<int>(v);
  }
  return r;
}

int Group::index(const Elem& e) const {
  int idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + e[i];
  return idx;
}

Elem Group::element(int idx) const {
  Elem e(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    e[i] = idx % factors_[i];
    idx /= factors_[i];
  }
  return e;
}

std::vector<Elem> Group::elements() const {
  std::vector<Elem> out;
  out.reserve(order_);
  for (int i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

std::vector<Elem> Group::nonzero_elements() const {
  std::vector<Elem> out;
  for (int i = 1; i < order_; ++i) out.push_back(element(i));
  return out;
}

int Group::element_order(const Elem& e) const {
  int o = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    o = std::lcm(o, factors_[i] / std::gcd(e[i], factors_[i]));
  return o;
}

int Group::pairing_numerator(const Character& c, const Elem& g) const {
  long long s = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    s += static_cast<long long>(c[i]) * g[i] % factors_[i] * (exponent_ / factors_[i]);
  return static_cast<int>(s % exponent_);
}

Rational Group::pairing(const Character& c, const Elem& g) const {
  return Rational(pairing_numerator(c, g), exponent_);
}

int Group::restriction_exponent(const Character& c, const Elem& h) const {
  if (!valid(h) || !valid(c)) fail(ErrorKind::InvalidInput, "element or character out of range");
  int o = element_order(h);
  if (o == 1) fail(ErrorKind::InvalidInput, "restriction exponent at the identity");
  return pairing_numerator(c, h) * o / exponent_;
}

std::vector<Elem> Group::span(const std::vector<Elem>& gens) const {
  std::vector<char> seen(order_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::vector<int> gidx;
  for (const auto& g : gens) gidx.push_back(index(g));
  std::vector<Elem> out{zero()};
  while (!stack.empty()) {
    Elem x = element(stack.back());
    stack.pop_back();
    for (const auto& g : gens) {
      int y = index(add(x, g));
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
        out.push_back(element(y));
      }
    }
  }
  return out;
}

bool Group::generates(const std::vector<Elem>& gens) const {
  return static_cast<int>(span(gens).size()) == order_;
}

std::string Group::name() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "x";
    s += "Z/" + std::to_string(factors_[i]);
  }
  return s;
}

std::string Group::factor_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(factors_[i]);
  }
  return s;
}

Group make_group(const std::vector<int>& factors) { return Group(factors); }

Group parse_group(const std::string& text) {
  std::vector<int> f;
  if (text.empty() || text == "1") return Group(f);
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, "bad group factor '" + tok + "'");
    }
    if (pos != tok.size()) fail(ErrorKind::InvalidInput, "bad group factor '" + tok + "'");
    f.push_back(v);
  }
  return Group(f);
}

int element_order(const Group& g, const Elem& e) { return g.element_order(e); }
bool generates(const Group& g, const std::vector<Elem>& gens) { return g.generates(gens); }
int restriction_exponent(const Group& g, const Character& c, const Elem& h) {
  return g.restriction_exponent(c, h);
}

std::string format_tuple(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

namespace {

std::vector<Automorphism> enumerate_automorphisms(const Group& g, std::size_t cap) {
  const int k = g.rank();
  std::vector<Automorphism> out;
  if (k == 0) {
    out.push_back({{0}, {0}});
    return out;
  }
  std::vector<std::vector<Elem>> cands(k);
  for (const auto& e : g.elements())
    for (int i = 0; i < k; ++i)
      if (g.element_order(e) == g.factors()[i]) cands[i].push_back(e);

  std::vector<Elem> imgs(k);
  // images of the subgroup generated by the first i standard generators
  auto rec = [&](auto&& self, int i, int partial) -> void {
    if (i == k) {
      Automorphism a;
      a.perm.assign(g.order(), 0);
      a.inverse.assign(g.order(), 0);
      for (int idx = 0; idx < g.order(); ++idx) {
        Elem e = g.element(idx);
        Elem im = g.zero();
        for (int j = 0; j < k; ++j) im = g.add(im, g.scale(e[j], imgs[j]));
        int t = g.index(im);
        a.perm[idx] = t;
        a.inverse[t] = idx;
      }
      out.push_back(std::move(a));
      if (out.size() > cap)
        fail(ErrorKind::Capability, "automorphism group of " + g.name() + " exceeds the configured cap");
      return;
    }
    for (const auto& c : cands[i]) {
      imgs[i] = c;
      std::vector<Elem> gens(imgs.begin(), imgs.begin() + i + 1);
      int want = partial * g.factors()[i];
      if (static_cast<int>(g.span(gens).size()) != want) continue;
      self(self, i + 1, want);
    }
  };
  rec(rec, 0, 1);
  return out;
}

}  // namespace

const std::vector<Automorphism>& automorphisms(const Group& g, const AutomorphismOptions& opt) {
  if (g.order() > opt.order_bound)
    fail(ErrorKind::Capability, "automorphisms only enumerated for |G| <= " +
                                    std::to_string(opt.order_bound));
  static std::mutex mu;
  static std::map<std::vector<int>, std::vector<Automorphism>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(g.factors());
    if (it != cache.end()) return it->second;
  }
  auto autos = enumerate_automorphisms(g, opt.count_cap);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(g.factors(), std::move(autos));
  return it->second;
}

Character dual_apply(const Group& g, const Automorphism& phi, const Character& c) {
  Character out(g.rank());
  for (int i = 0; i < g.rank(); ++i) {
    Elem ei = g.zero();
    ei[i] = 1;
    Elem pre = g.element(phi.inverse[g.index(ei)]);
    // n_i * <c, phi^{-1}(e_i)>
    out[i] = static_cast<int>(static_cast<long long>(g.pairing_numerator(c, pre)) *
                              g.factors()[i] / g.exponent());
  }
  return out;
}

}  // namespace sandwich
