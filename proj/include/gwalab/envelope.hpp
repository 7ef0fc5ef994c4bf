#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gwalab/gwa.hpp"
#include "gwalab/poly.hpp"

namespace gwalab {

/// Element of W^e = W⊗W^op. Key (n,m) with value Σ a⊗b stands for Σ (a eₙ)⊗(b eₘ).
class EnvElem {
 public:
  using Key = std::pair<int, int>;
  using Components = std::map<Key, Poly4>;

  EnvElem() = default;
  EnvElem(const Poly4& t) { add({0, 0}, t); }  // NOLINT(google-explicit-constructor)
  static EnvElem term(int n, int m, const Poly4& t);
  /// u ⊗ v.
  static EnvElem tensor(const GwaElem& u, const GwaElem& v);

  const Components& components() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  Poly4 coefficient(int n, int m) const;
  void add(const Key& key, const Poly4& t);
  std::size_t term_count() const;

  EnvElem& operator+=(const EnvElem& o);
  EnvElem& operator-=(const EnvElem& o);
  EnvElem& operator*=(const Rational& s);
  friend EnvElem operator+(EnvElem a, const EnvElem& b) { return a += b; }
  friend EnvElem operator-(EnvElem a, const EnvElem& b) { return a -= b; }
  EnvElem operator-() const;
  friend bool operator==(const EnvElem& a, const EnvElem& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const EnvElem& a, const EnvElem& b) { return !(a == b); }

 private:
  Components parts_;
};

/// (w₁⊗w₂)(w₃⊗w₄) = w₁w₃ ⊗ w₄w₂.
EnvElem env_mul(const GwaAlgebra& w, const EnvElem& a, const EnvElem& b);
/// Product of several factors, left to right.
EnvElem env_mul(const GwaAlgebra& w, std::initializer_list<EnvElem> factors);
/// Multiplication W^e → W, w'⊗w'' ↦ w'w''.
GwaElem env_mu(const GwaAlgebra& w, const EnvElem& a);
std::string to_string(const EnvElem& e);

namespace gens {
inline EnvElem x_left() { return EnvElem::term(1, 0, Poly4(1)); }
inline EnvElem x_right() { return EnvElem::term(0, 1, Poly4(1)); }
inline EnvElem y_left() { return EnvElem::term(-1, 0, Poly4(1)); }
inline EnvElem y_right() { return EnvElem::term(0, -1, Poly4(1)); }
}  // namespace gens

/// A map between free modules of ranks rows → cols acting on row vectors, v ↦ v·M.
class EnvMatrix {
 public:
  EnvMatrix() = default;
  EnvMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  EnvMatrix(std::initializer_list<std::initializer_list<EnvElem>> rows);

  static EnvMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  EnvElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const EnvElem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;

  EnvMatrix& operator+=(const EnvMatrix& o);
  friend EnvMatrix operator+(EnvMatrix a, const EnvMatrix& b) { return a += b; }
  friend bool operator==(const EnvMatrix& a, const EnvMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<EnvElem> data_;
};

/// Matrix of outer∘inner, i.e. Mat(inner)·Mat(outer). Entries computed in parallel.
EnvMatrix compose(const GwaAlgebra& w, const EnvMatrix& outer, const EnvMatrix& inner);
/// Single-threaded reference for compose.
EnvMatrix compose_serial(const GwaAlgebra& w, const EnvMatrix& outer, const EnvMatrix& inner);
std::string to_string(const EnvMatrix& m);

/// Rank of the free module P_{pq}.
std::size_t module_rank(int p, int q);

enum class DiffKind { Vertical, Horizontal, Homotopy };

/// d^v_{pq}: P_{p,q+1} → P_{pq}; d^h_{pq}: P_{p+1,q} → P_{pq}; t_{pq}: P_{p+2,q−1} → P_{pq}.
class DifferentialSet {
 public:
  DifferentialSet(const GwaAlgebra& w, int depth);

  const GwaAlgebra& algebra() const { return w_; }
  int depth() const { return depth_; }
  bool has(DiffKind kind, int p, int q) const;
  const EnvMatrix& get(DiffKind kind, int p, int q) const;
  const EnvMatrix& dv(int p, int q) const { return get(DiffKind::Vertical, p, q); }
  const EnvMatrix& dh(int p, int q) const { return get(DiffKind::Horizontal, p, q); }
  const EnvMatrix& t(int p, int q) const { return get(DiffKind::Homotopy, p, q); }

 private:
  GwaAlgebra w_;
  int depth_;
  std::map<std::tuple<DiffKind, int, int>, EnvMatrix> mats_;
};

/// Column index whose matrices a column p copies.
int base_column(int p);
std::string diff_name(DiffKind kind, int p, int q);

struct CheckResult {
  std::string name;
  std::string anchor;
  bool pass = false;
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::size_t failures() const;
};

/// The five homotopy double complex identities over all valid (p,q) with p ≤ depth.
Report verify_homotopy(const DifferentialSet& ds);
/// d∘d = 0 on Tot in degrees 2..depth, the μ augmentation, and the period-two repeat.
Report total_d_squared(const DifferentialSet& ds);
/// Matrix of Tot_n → Tot_{n−1}.
EnvMatrix total_differential(const DifferentialSet& ds, int n);

}  // namespace gwalab
