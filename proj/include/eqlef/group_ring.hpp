#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eqlef/aut_group.hpp"

namespace eqlef {

using AutGroupPtr = std::shared_ptr<const AutGroup>;

namespace detail {
inline void require_same(const AutGroupPtr &a, const AutGroupPtr &b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw DomainError("group ring elements over different automorphism groups");
}
}  // namespace detail

/// Finitely supported integer combination of elements of Aut(x).
class GroupRingElement {
 public:
  using Terms = std::map<AutElement, Integer>;

  explicit GroupRingElement(AutGroupPtr aut) : aut_(std::move(aut)) {}

  static GroupRingElement scalar(AutGroupPtr aut, const Integer &c) {
    GroupRingElement e(aut);
    e.add_term(e.aut_->identity(), c);
    return e;
  }
  static GroupRingElement term(AutGroupPtr aut, const Integer &c, AutElement g) {
    aut->check_element(g);
    GroupRingElement e(std::move(aut));
    e.add_term(g, c);
    return e;
  }

  const AutGroupPtr &aut() const noexcept { return aut_; }
  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const AutElement &g, const Integer &c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Coefficient of the identity element.
  Integer identity_coefficient() const {
    auto it = terms_.find(aut_->identity());
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Sum of all coefficients (every group element ↦ 1).
  Integer augmentation() const {
    Integer s = 0;
    for (const auto &[g, c] : terms_) s += c;
    return s;
  }

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement &b) {
    detail::require_same(a.aut_, b.aut_);
    for (const auto &[g, c] : b.terms_) a.add_term(g, c);
    return a;
  }
  friend GroupRingElement operator-(const GroupRingElement &a) {
    GroupRingElement r(a.aut_);
    for (const auto &[g, c] : a.terms_) r.terms_.emplace(g, -c);
    return r;
  }
  friend GroupRingElement operator-(const GroupRingElement &a, const GroupRingElement &b) { return a + (-b); }
  friend GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b) {
    detail::require_same(a.aut_, b.aut_);
    GroupRingElement r(a.aut_);
    for (const auto &[g, c] : a.terms_)
      for (const auto &[h, d] : b.terms_) r.add_term(a.aut_->mul(g, h), c * d);
    return r;
  }
  friend bool operator==(const GroupRingElement &a, const GroupRingElement &b) {
    return a.terms_ == b.terms_ && (a.aut_ == b.aut_ || *a.aut_ == *b.aut_);
  }

  /// Apply φ termwise: (v,w) ↦ (φ_π v, w).
  GroupRingElement twisted(const TwistData &t) const {
    GroupRingElement r(aut_);
    for (const auto &[g, c] : terms_) r.add_term(t.apply(g), c);
    return r;
  }

  /// Replace each term's W-part by the smallest element of its right coset wS.
  GroupRingElement reduced_mod(const Subgroup &s) const {
    if (s.size() <= 1) return *this;
    GroupRingElement r(aut_);
    for (const auto &[g, c] : terms_) {
      int best = g.w;
      for (int x : s) best = std::min(best, aut_->weyl().mul(g.w, x));
      r.add_term({g.v, best}, c);
    }
    return r;
  }

  /// "−1·g", "2 + 3·t^2", "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto &[g, c] : terms_) {
      if (out.empty())
        out += c < 0 ? "−" : "";
      else
        out += c < 0 ? " − " : " + ";
      const std::string lbl = aut_->element_label(g);
      const Integer mag = iabs(c);
      if (lbl == "1")
        out += mag.str();
      else
        out += (mag == 1 ? "" : mag.str() + "·") + lbl;
    }
    return out;
  }

 private:
  AutGroupPtr aut_;
  Terms terms_;
};

/// rows × cols matrix over Z[Aut(x)].
class GroupRingMatrix {
 public:
  GroupRingMatrix() : GroupRingMatrix(std::make_shared<const AutGroup>(), 0, 0) {}
  GroupRingMatrix(AutGroupPtr aut, std::size_t rows, std::size_t cols)
      : aut_(std::move(aut)), rows_(rows), cols_(cols), data_(rows * cols, GroupRingElement(aut_)) {}

  static GroupRingMatrix identity(AutGroupPtr aut, std::size_t n) {
    GroupRingMatrix m(aut, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GroupRingElement::scalar(aut, 1);
    return m;
  }
  /// Integer matrix with every entry a multiple of the identity element.
  static GroupRingMatrix from_integers(AutGroupPtr aut, const IntMatrix &a) {
    GroupRingMatrix m(aut, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = GroupRingElement::scalar(aut, a(i, j));
    return m;
  }

  const AutGroupPtr &aut() const noexcept { return aut_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  GroupRingElement &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const GroupRingElement &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto &e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// Sum of the diagonal entries in Z[Aut(x)].
  GroupRingElement trace() const {
    if (!is_square()) throw DimensionError("trace of a non-square group ring matrix");
    GroupRingElement t(aut_);
    for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
    return t;
  }

  GroupRingMatrix submatrix(const std::vector<std::size_t> &r, const std::vector<std::size_t> &c) const {
    GroupRingMatrix m(aut_, r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = (*this)(r[i], c[j]);
    return m;
  }

  GroupRingMatrix twisted(const TwistData &t) const {
    GroupRingMatrix m(aut_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].twisted(t);
    return m;
  }

  /// Augmented integer matrix (every group element ↦ 1).
  IntMatrix augmentation() const {
    IntMatrix a(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) a(i, j) = (*this)(i, j).augmentation();
    return a;
  }

  friend GroupRingMatrix operator*(const GroupRingMatrix &a, const GroupRingMatrix &b) {
    detail::require_same(a.aut_, b.aut_);
    if (a.cols_ != b.rows_) throw DimensionError("group ring matrix product: inner dimensions differ");
    GroupRingMatrix m(a.aut_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) m(i, j) = m(i, j) + a(i, k) * b(k, j);
      }
    return m;
  }
  friend GroupRingMatrix operator+(const GroupRingMatrix &a, const GroupRingMatrix &b) {
    detail::require_same(a.aut_, b.aut_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("group ring matrix sum: shapes differ");
    GroupRingMatrix m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = m.data_[k] + b.data_[k];
    return m;
  }
  friend bool operator==(const GroupRingMatrix &a, const GroupRingMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
    }
    return s + "]";
  }

 private:
  AutGroupPtr aut_;
  std::size_t rows_, cols_;
  std::vector<GroupRingElement> data_;
};

/// Trace projection onto twisted classes: terms outside π₁ (w ≠ 1) are
/// dropped, the rest are collected by twisted class.
inline ClassSum pi1_projection(const GroupRingElement &e, const TwistedClassSet &classes) {
  if (e.aut()->pi1_rank() != classes.pi1_rank()) throw DomainError("pi1_projection: class set of wrong rank");
  ClassSum out;
  const int id = e.aut()->weyl().identity();
  for (const auto &[g, c] : e.terms())
    if (g.w == id) class_sum_add(out, classes.representative(g.v), c);
  return out;
}

}  // namespace eqlef
