#include "gwalab/autword.hpp"

#include <sstream>

#include "gwalab/errors.hpp"

namespace gwalab {

Rational generator_jacobian(const AutGenerator& g) {
  if (const auto* a = std::get_if<Affine>(&g)) {
    return a->matrix[0][0] * a->matrix[1][1] - a->matrix[0][1] * a->matrix[1][0];
  }
  return 1;
}

AutGenerator invert_generator(const AutGenerator& g) {
  if (const auto* e = std::get_if<Elementary>(&g)) return Elementary{e->axis, -e->shift};
  const auto& a = std::get<Affine>(g);
  const Rational det = generator_jacobian(g);
  Affine inv;
  inv.matrix[0][0] = a.matrix[1][1] / det;
  inv.matrix[0][1] = -a.matrix[0][1] / det;
  inv.matrix[1][0] = -a.matrix[1][0] / det;
  inv.matrix[1][1] = a.matrix[0][0] / det;
  for (int i = 0; i < 2; ++i) {
    inv.translation[i] = -(inv.matrix[i][0] * a.translation[0] + inv.matrix[i][1] * a.translation[1]);
  }
  return inv;
}

std::pair<Poly2, Poly2> generator_images(const AutGenerator& g) {
  if (const auto* e = std::get_if<Elementary>(&g)) {
    if (e->axis == 1) return {z1() + e->shift, z2()};
    return {z1(), z2() + e->shift};
  }
  const auto& a = std::get<Affine>(g);
  Poly2 f1 = a.matrix[0][0] * z1() + a.matrix[0][1] * z2() + Poly2(a.translation[0]);
  Poly2 f2 = a.matrix[1][0] * z1() + a.matrix[1][1] * z2() + Poly2(a.translation[1]);
  return {f1, f2};
}

std::string to_string(const AutGenerator& g) {
  std::ostringstream os;
  if (const auto* e = std::get_if<Elementary>(&g)) {
    os << "elem" << e->axis << "(" << to_string(e->shift) << ")";
    return os.str();
  }
  const auto& a = std::get<Affine>(g);
  os << "affine([[" << a.matrix[0][0].get_str() << "," << a.matrix[0][1].get_str() << "],["
     << a.matrix[1][0].get_str() << "," << a.matrix[1][1].get_str() << "]],["
     << a.translation[0].get_str() << "," << a.translation[1].get_str() << "])";
  return os.str();
}

namespace {

void validate(const AutGenerator& g) {
  if (const auto* e = std::get_if<Elementary>(&g)) {
    if (e->axis != 1 && e->axis != 2) throw Error("elementary axis must be 1 or 2");
    if (e->shift.degree_in(e->axis - 1) > 0) {
      throw Error("elementary shift must not involve z" + std::to_string(e->axis));
    }
    return;
  }
  if (is_zero(generator_jacobian(g))) throw Error("affine matrix is singular");
}

std::array<Poly2, 2> word_images(const std::vector<AutGenerator>& factors) {
  std::array<Poly2, 2> img{z1(), z2()};
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    auto [g1, g2] = generator_images(*it);
    img = {substitute(img[0], g1, g2), substitute(img[1], g1, g2)};
  }
  return img;
}

}  // namespace

struct AutWord::Cache {
  std::mutex mutex;
  // powers[n] for n ≥ 0 and negatives[n] for σ^{-n}; deque keeps references stable.
  std::deque<std::array<Poly2, 2>> positive;
  std::deque<std::array<Poly2, 2>> negative;
  std::map<std::pair<int, Exponent<2>>, Poly2> monomials;
};

AutWord::AutWord(std::vector<AutGenerator> factors)
    : factors_(std::move(factors)), jacobian_(1), cache_(std::make_shared<Cache>()) {
  for (const auto& g : factors_) {
    validate(g);
    jacobian_ *= generator_jacobian(g);
  }
  images_ = word_images(factors_);
  std::vector<AutGenerator> inv;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) inv.push_back(invert_generator(*it));
  inverse_images_ = word_images(inv);
  cache_->positive.push_back({z1(), z2()});
  cache_->negative.push_back({z1(), z2()});
}

AutWord AutWord::inverse() const {
  std::vector<AutGenerator> inv;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) inv.push_back(invert_generator(*it));
  return AutWord(std::move(inv));
}

AutWord AutWord::compose(const AutWord& other) const {
  std::vector<AutGenerator> f = factors_;
  f.insert(f.end(), other.factors_.begin(), other.factors_.end());
  return AutWord(std::move(f));
}

std::pair<Poly2, Poly2> AutWord::power_images(int n) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& table = n >= 0 ? cache_->positive : cache_->negative;
  const auto& base = n >= 0 ? images_ : inverse_images_;
  const auto k = static_cast<std::size_t>(n >= 0 ? n : -n);
  while (table.size() <= k) {
    const auto& prev = table.back();
    table.push_back({substitute(prev[0], base[0], base[1]), substitute(prev[1], base[0], base[1])});
  }
  return {table[k][0], table[k][1]};
}

const Poly2& AutWord::apply_monomial(const Exponent<2>& e, int n) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->monomials.find({n, e});
    if (it != cache_->monomials.end()) return it->second;
  }
  Poly2 value = Poly2::monomial(e);
  if (n != 0) {
    auto [g1, g2] = power_images(n);
    value = substitute(value, g1, g2);
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->monomials.try_emplace({n, e}, std::move(value)).first->second;
}

Poly2 AutWord::apply(const Poly2& p, int n) const {
  if (n == 0 || factors_.empty()) return p;
  Poly2 r;
  for (const auto& [e, c] : p.terms()) {
    Poly2 term = apply_monomial(e, n);
    term *= c;
    r += term;
  }
  return r;
}

std::string AutWord::to_string() const {
  if (factors_.empty()) return "affine([[1,0],[0,1]],[0,0])";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) s += "; ";
    s += gwalab::to_string(factors_[i]);
  }
  return s;
}

}  // namespace gwalab
