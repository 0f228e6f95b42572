#pragma once

#include <map>
#include <string>

#include "eqlef/char_poly.hpp"
#include "eqlef/factor.hpp"
#include "eqlef/int_matrix.hpp"

namespace eqlef {

/// Element of U(Z): a finitely supported integer combination of monic
/// integer polynomials irreducible over Q. Zero coefficients never appear.
class UZClass {
 public:
  using Terms = std::map<IntPolynomial, Integer>;

  UZClass() = default;

  /// coeff * [p] for a monic irreducible p (not re-checked).
  static UZClass generator(const IntPolynomial &p, const Integer &coeff = 1) {
    UZClass c;
    c.add_term(p, coeff);
    return c;
  }

  /// Sum of multiplicity * factor over the factorisation of a monic polynomial.
  static UZClass of_polynomial(const IntPolynomial &monic) {
    if (!monic.is_monic()) throw DomainError("UZClass::of_polynomial: polynomial is not monic");
    UZClass c;
    for (const auto &[f, e] : factor_over_Q(monic).factors) c.add_term(f, e);
    return c;
  }

  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const IntPolynomial &p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  friend UZClass operator+(UZClass a, const UZClass &b) {
    for (const auto &[p, c] : b.terms_) a.add_term(p, c);
    return a;
  }
  friend UZClass operator-(const UZClass &a) {
    UZClass r;
    for (const auto &[p, c] : a.terms_) r.terms_.emplace(p, -c);
    return r;
  }
  friend UZClass operator-(const UZClass &a, const UZClass &b) { return a + (-b); }
  friend UZClass operator*(const Integer &s, const UZClass &a) {
    UZClass r;
    if (s == 0) return r;
    for (const auto &[p, c] : a.terms_) r.terms_.emplace(p, s * c);
    return r;
  }
  friend bool operator==(const UZClass &a, const UZClass &b) = default;

  /// Canonical rendering, e.g. "+2·(x−1) −1·(x²+1)"; the zero class is "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto &[p, c] : terms_) {
      if (!out.empty()) out += " ";
      out += c < 0 ? "−" : "+";
      out += iabs(c).str() + "·(" + p.to_string() + ")";
    }
    return out;
  }

 private:
  void add_term(const IntPolynomial &p, const Integer &c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// [a] in U(Z), via the factorisation of the characteristic polynomial.
inline UZClass class_of_matrix(const IntMatrix &a) {
  if (!a.is_square()) throw DimensionError("class_of_matrix: matrix is not square");
  if (a.rows() == 0) return {};
  return UZClass::of_polynomial(char_poly(a));
}

inline UZClass uz_add(const UZClass &a, const UZClass &b) { return a + b; }
inline UZClass uz_neg(const UZClass &a) { return -a; }
inline bool uz_eq(const UZClass &a, const UZClass &b) { return a == b; }

}  // namespace eqlef
