#include "gwalab/poly.hpp"

#include <sstream>
#include <vector>

namespace gwalab {

Poly2 partial(const Poly2& p, int axis) {
  const std::size_t k = axis == 1 ? 0 : 1;
  Poly2 r;
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    Exponent<2> d = e;
    --d[k];
    r.add_term(d, c * Rational(e[k]));
  }
  return r;
}

Rational eval(const Poly2& p, const Rational& l1, const Rational& l2) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c * power(l1, e[0]) * power(l2, e[1]);
  return sum;
}

namespace {

class PowerTable {
 public:
  explicit PowerTable(const Poly2& base) { powers_.emplace_back(1); powers_.push_back(base); }
  const Poly2& get(std::uint32_t n) {
    while (powers_.size() <= n) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[n];
  }

 private:
  std::vector<Poly2> powers_;
};

}  // namespace

Poly2 substitute(const Poly2& p, const Poly2& f1, const Poly2& f2) {
  PowerTable t1(f1);
  PowerTable t2(f2);
  Poly2 r;
  for (const auto& [e, c] : p.terms()) {
    Poly2 term = t1.get(e[0]) * t2.get(e[1]);
    term *= c;
    r += term;
  }
  return r;
}

Poly4 tensor(const Poly2& a, const Poly2& b) {
  Poly4 r;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) r.add_term({ea[0], ea[1], eb[0], eb[1]}, ca * cb);
  }
  return r;
}

Poly2 mu(const Poly4& t) {
  Poly2 r;
  for (const auto& [e, c] : t.terms()) r.add_term({e[0] + e[2], e[1] + e[3]}, c);
  return r;
}

std::map<Exponent<2>, Poly2, GradedLex<2>> split_left(const Poly4& t) {
  std::map<Exponent<2>, Poly2, GradedLex<2>> out;
  for (const auto& [e, c] : t.terms()) out[{e[0], e[1]}].add_term({e[2], e[3]}, c);
  return out;
}

std::map<Exponent<2>, Poly2, GradedLex<2>> split_right(const Poly4& t) {
  std::map<Exponent<2>, Poly2, GradedLex<2>> out;
  for (const auto& [e, c] : t.terms()) out[{e[2], e[3]}].add_term({e[0], e[1]}, c);
  return out;
}

Poly4 apply_sides(const Poly4& t, const Poly2Map& u, const Poly2Map& v) {
  std::map<Exponent<2>, Poly2, GradedLex<2>> left_cache;
  std::map<Exponent<2>, Poly2, GradedLex<2>> right_cache;
  auto image = [](auto& cache, const Poly2Map& f, const Exponent<2>& e) -> const Poly2& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, f(Poly2::monomial(e))).first;
    return it->second;
  };
  Poly4 r;
  for (const auto& [e, c] : t.terms()) {
    const Poly2& a = image(left_cache, u, {e[0], e[1]});
    const Poly2& b = image(right_cache, v, {e[2], e[3]});
    Poly4 term = tensor(a, b);
    term *= c;
    r += term;
  }
  return r;
}

Rational eval_both(const Poly4& t, const Rational& l1, const Rational& l2) {
  Rational sum = 0;
  for (const auto& [e, c] : t.terms())
    sum += c * power(l1, e[0] + e[2]) * power(l2, e[1] + e[3]);
  return sum;
}

namespace {

void append_monomial(std::ostringstream& os, const Rational& c, bool first,
                     const std::vector<std::pair<std::string, std::uint32_t>>& factors) {
  bool has_vars = false;
  for (const auto& f : factors) has_vars = has_vars || f.second > 0;
  Rational mag = abs(c);
  if (first) {
    if (sgn(c) < 0) os << "-";
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  bool wrote = false;
  if (!has_vars || mag != 1) {
    os << mag.get_str();
    wrote = true;
  }
  for (const auto& [name, exp] : factors) {
    if (exp == 0) continue;
    if (wrote) os << "*";
    os << name;
    if (exp > 1) os << "^" << exp;
    wrote = true;
  }
}

}  // namespace

std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_monomial(os, it->second, first, {{"z1", it->first[0]}, {"z2", it->first[1]}});
    first = false;
  }
  return os.str();
}

std::string to_string(const Poly4& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& e = it->first;
    append_monomial(os, it->second, first,
                    {{"z1", e[0]}, {"z2", e[1]}, {"w1", e[2]}, {"w2", e[3]}});
    first = false;
  }
  return os.str();
}

}  // namespace gwalab
