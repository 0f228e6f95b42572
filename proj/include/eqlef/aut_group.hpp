#pragma once

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqlef/finite_group.hpp"
#include "eqlef/int_matrix.hpp"
#include "eqlef/smith.hpp"

namespace eqlef {

/// Element (v, w) of Z^k ⋊ W.
struct AutElement {
  IntVector v;
  int w = 0;

  friend bool operator==(const AutElement &, const AutElement &) = default;
  friend std::strong_ordering operator<=>(const AutElement &a, const AutElement &b) {
    if (auto c = compare_vectors(a.v, b.v); c != 0) return c;
    return a.w <=> b.w;
  }
};

/// Split extension Aut(x) = Z^k ⋊ W with W acting on Z^k through `action`.
/// Product: (v,w)(v',w') = (v + θ(w)v', ww').
class AutGroup {
 public:
  AutGroup() : AutGroup(0, FiniteGroup::trivial(), {IntMatrix(0, 0)}) {}

  AutGroup(std::size_t k, FiniteGroup weyl, std::vector<IntMatrix> action)
      : k_(k), weyl_(std::move(weyl)), action_(std::move(action)) {
    if (action_.size() != static_cast<std::size_t>(weyl_.order()))
      throw ValidationError("aut group", "action needs one matrix per Weyl element (" +
                                             std::to_string(weyl_.order()) + "), got " +
                                             std::to_string(action_.size()));
    for (const auto &m : action_)
      if (m.rows() != k_ || m.cols() != k_)
        throw ValidationError("aut group", "action matrices must be " + std::to_string(k_) + "x" + std::to_string(k_));
    if (action_[static_cast<std::size_t>(weyl_.identity())] != IntMatrix::identity(k_))
      throw ValidationError("aut group", "identity of W must act trivially");
    for (int a = 0; a < weyl_.order(); ++a)
      for (int b = 0; b < weyl_.order(); ++b)
        if (theta(weyl_.mul(a, b)) != theta(a) * theta(b))
          throw ValidationError("aut group", "action is not a homomorphism at (" + weyl_.label(a) + "," +
                                                 weyl_.label(b) + ")");
  }

  static AutGroup trivial() { return AutGroup(); }
  static AutGroup finite(FiniteGroup w) {
    std::vector<IntMatrix> act(static_cast<std::size_t>(w.order()), IntMatrix(0, 0));
    return AutGroup(0, std::move(w), std::move(act));
  }

  std::size_t pi1_rank() const noexcept { return k_; }
  const FiniteGroup &weyl() const noexcept { return weyl_; }
  const std::vector<IntMatrix> &action() const noexcept { return action_; }
  const IntMatrix &theta(int w) const { return action_[static_cast<std::size_t>(w)]; }
  bool is_trivial() const noexcept { return k_ == 0 && weyl_.order() == 1; }

  AutElement identity() const { return {IntVector(k_), weyl_.identity()}; }
  AutElement mul(const AutElement &a, const AutElement &b) const {
    IntVector tv = theta(a.w).apply(b.v);
    for (std::size_t i = 0; i < k_; ++i) tv[i] += a.v[i];
    return {std::move(tv), weyl_.mul(a.w, b.w)};
  }
  AutElement inv(const AutElement &a) const {
    const int wi = weyl_.inv(a.w);
    IntVector v = theta(wi).apply(a.v);
    for (auto &x : v) x = -x;
    return {std::move(v), wi};
  }

  void check_element(const AutElement &a) const {
    if (a.v.size() != k_) throw DimensionError("group element vector has length " + std::to_string(a.v.size()) +
                                               ", expected " + std::to_string(k_));
    if (a.w < 0 || a.w >= weyl_.order()) throw DimensionError("Weyl element index out of range");
  }

  std::string element_label(const AutElement &a) const {
    std::string s;
    bool trivial_v = is_zero_vector(a.v);
    if (!trivial_v) s += vector_label(a.v);
    if (a.w != weyl_.identity()) s += (s.empty() ? "" : "·") + weyl_.label(a.w);
    return s.empty() ? "1" : s;
  }

  /// "t^3" for k = 1, "t^(1,-2)" otherwise; "1" for the zero vector.
  static std::string vector_label(const IntVector &v) {
    if (is_zero_vector(v)) return "1";
    if (v.size() == 1) return v[0] == 1 ? "t" : "t^" + v[0].str();
    std::string s = "t^(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
  }

  friend bool operator==(const AutGroup &a, const AutGroup &b) {
    return a.k_ == b.k_ && a.weyl_ == b.weyl_ && a.action_ == b.action_;
  }

 private:
  std::size_t k_;
  FiniteGroup weyl_;
  std::vector<IntMatrix> action_;
};

/// φ on π₁ = Z^k; φ is taken to fix the W-component, so φ(v,w) = (φ_π v, w).
struct TwistData {
  IntMatrix phi_pi;

  /// φ is an endomorphism of Aut(x) iff φ_π commutes with every θ(w).
  void validate(const AutGroup &aut) const {
    if (phi_pi.rows() != aut.pi1_rank() || phi_pi.cols() != aut.pi1_rank())
      throw ValidationError("twist", "phi_pi must be " + std::to_string(aut.pi1_rank()) + "x" +
                                         std::to_string(aut.pi1_rank()));
    for (int w = 0; w < aut.weyl().order(); ++w)
      if (phi_pi * aut.theta(w) != aut.theta(w) * phi_pi)
        throw ValidationError("twist", "phi_pi does not commute with the action of " + aut.weyl().label(w));
  }

  AutElement apply(const AutElement &a) const { return {phi_pi.apply(a.v), a.w}; }
};

/// Finitely supported integer combination of twisted classes, keyed by
/// canonical representative.
using ClassSum = std::map<IntVector, Integer>;

inline void class_sum_add(ClassSum &s, const IntVector &key, const Integer &c) {
  if (c == 0) return;
  auto [it, inserted] = s.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

inline ClassSum class_sum_plus(ClassSum a, const ClassSum &b, const Integer &scale = 1) {
  for (const auto &[k, c] : b) class_sum_add(a, k, scale * c);
  return a;
}

inline Integer class_sum_total(const ClassSum &s) {
  Integer t = 0;
  for (const auto &[k, c] : s) t += c;
  return t;
}

/// "2[1] − 1[t^3]"; "0" when empty.
inline std::string class_sum_to_string(const ClassSum &s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto &[k, c] : s) {
    if (out.empty())
      out += c < 0 ? "−" : "";
    else
      out += c < 0 ? " − " : " + ";
    out += iabs(c).str() + "[" + AutGroup::vector_label(k) + "]";
  }
  return out;
}

/// Twisted conjugacy classes of Aut(x) meeting π₁: a ~ θ(w)a + (φ_π − I)m.
/// With `use_weyl` false only the π₁-level relation a ~ a + (φ_π − I)m is used.
/// Representatives: reduce modulo the Hermite basis of im(φ_π − I) (pivot
/// coordinates land in [0, pivot)), then take the lexicographic minimum over
/// the W-orbit.
class TwistedClassSet {
 public:
  TwistedClassSet(const AutGroup &aut, const TwistData &twist, bool use_weyl = true) : k_(aut.pi1_rank()) {
    twist.validate(aut);
    const IntMatrix d = twist.phi_pi - IntMatrix::identity(k_);
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < k_; ++j) cols.push_back(d.col(j));
    lattice_ = hermite_basis(std::move(cols));
    for (const auto &b : lattice_) {
      std::size_t c = 0;
      while (b[c] == 0) ++c;
      pivots_.push_back(c);
    }
    if (use_weyl)
      for (int w = 0; w < aut.weyl().order(); ++w)
        if (w != aut.weyl().identity() && aut.theta(w) != IntMatrix::identity(k_)) orbit_.push_back(aut.theta(w));
  }

  std::size_t pi1_rank() const noexcept { return k_; }

  /// Z^k / im(φ_π − I) is finite iff φ_π − I has full rank.
  bool is_finite() const noexcept { return lattice_.size() == k_; }

  IntVector representative(const IntVector &a) const {
    if (a.size() != k_) throw DimensionError("twisted class: vector of length " + std::to_string(a.size()) +
                                             ", expected " + std::to_string(k_));
    IntVector best = reduce(a);
    for (const auto &t : orbit_) {
      IntVector c = reduce(t.apply(best));
      if (compare_vectors(c, best) < 0) best = std::move(c);
    }
    return best;
  }

  bool related(const IntVector &a, const IntVector &b) const { return representative(a) == representative(b); }

  /// All class representatives, sorted; only when is_finite().
  std::vector<IntVector> enumerate() const {
    if (!is_finite()) throw DomainError("twisted class set is infinite");
    std::set<IntVector> reps;
    IntVector y(k_);
    for (;;) {
      reps.insert(representative(y));
      std::size_t i = 0;
      while (i < k_ && y[i] + 1 == lattice_[i][i]) y[i++] = 0;
      if (i == k_) break;
      ++y[i];
    }
    return {reps.begin(), reps.end()};
  }

 private:
  IntVector reduce(IntVector a) const {
    for (std::size_t r = 0; r < lattice_.size(); ++r) {
      const std::size_t c = pivots_[r];
      Integer q = floor_div(a[c], lattice_[r][c]);
      if (q != 0)
        for (std::size_t j = 0; j < k_; ++j) a[j] -= q * lattice_[r][j];
    }
    return a;
  }

  std::size_t k_;
  std::vector<IntVector> lattice_;
  std::vector<std::size_t> pivots_;
  std::vector<IntMatrix> orbit_;
};

}  // namespace eqlef
