#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqlef/errors.hpp"
#include "eqlef/integer.hpp"

namespace eqlef {

/// Univariate polynomial over the integers, coefficients lowest degree first.
/// The representation is always trimmed: the leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient list).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(IntVector coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial constant(const Integer &a) { return IntPolynomial(IntVector{a}); }
  static IntPolynomial monomial(const Integer &a, std::size_t degree) {
    IntVector c(degree + 1);
    c[degree] = a;
    return IntPolynomial(std::move(c));
  }
  static IntPolynomial x() { return monomial(1, 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const IntVector &coeffs() const noexcept { return c_; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  Integer leading() const { return c_.empty() ? Integer(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const {
    Integer g = 0;
    for (const auto &a : c_) g = igcd(g, a);
    return g;
  }

  /// Content-free representative with positive leading coefficient.
  IntPolynomial primitive_part() const {
    if (is_zero()) return *this;
    Integer g = content();
    if (c_.back() < 0) g = -g;
    IntVector out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
    return IntPolynomial(std::move(out));
  }

  IntPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    IntVector d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long long>(i);
    return IntPolynomial(std::move(d));
  }

  Integer evaluate(const Integer &x) const {
    Integer acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b) {
    IntVector c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b) {
    IntVector c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial &a) {
    IntVector c = a.c_;
    for (auto &x : c) x = -x;
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntVector c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const Integer &s, const IntPolynomial &a) {
    if (s == 0) return {};
    IntVector c = a.c_;
    for (auto &x : c) x *= s;
    return IntPolynomial(std::move(c));
  }

  IntPolynomial pow(unsigned e) const {
    IntPolynomial result = constant(1), base = *this;
    while (e) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e) base = base * base;
    }
    return result;
  }

  /// Exact quotient a / b over Z[x], or nullopt if b does not divide a.
  static std::optional<IntPolynomial> divide_exact(const IntPolynomial &a, const IntPolynomial &b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.is_zero()) return IntPolynomial{};
    if (a.degree() < b.degree()) return std::nullopt;
    IntVector r = a.c_;
    IntVector q(r.size() - b.c_.size() + 1);
    const Integer &lb = b.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
      const Integer &top = r[k + b.c_.size() - 1];
      if (top % lb != 0) return std::nullopt;
      Integer t = top / lb;
      q[k] = t;
      if (t != 0)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= t * b.c_[j];
    }
    for (const auto &x : r)
      if (x != 0) return std::nullopt;
    return IntPolynomial(std::move(q));
  }

  /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
  static IntPolynomial pseudo_remainder(const IntPolynomial &a, const IntPolynomial &b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return a;
    int e = a.degree() - b.degree() + 1;
    const Integer lb = b.leading();
    IntPolynomial r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      r = lb * r - monomial(r.leading(), static_cast<std::size_t>(r.degree() - b.degree())) * b;
      --e;
    }
    for (; e > 0; --e) r = lb * r;
    return r;
  }

  /// Primitive gcd over Z[x] (positive leading coefficient), by primitive PRS.
  static IntPolynomial gcd(const IntPolynomial &a, const IntPolynomial &b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    Integer cont = igcd(a.content(), b.content());
    IntPolynomial u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
      IntPolynomial r = pseudo_remainder(u, v);
      u = std::move(v);
      v = r.is_zero() ? r : r.primitive_part();
    }
    return cont * u.primitive_part();
  }

  friend bool operator==(const IntPolynomial &a, const IntPolynomial &b) = default;

  /// Canonical factor order: degree first, then coefficients from the constant
  /// term upward, integers ordered 0, -1, 1, -2, 2, ... (magnitude, then sign).
  friend std::strong_ordering operator<=>(const IntPolynomial &a, const IntPolynomial &b) {
    if (auto d = a.degree() <=> b.degree(); d != 0) return d;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (auto k = zigzag_compare(a.c_[i], b.c_[i]); k != 0) return k;
    }
    return std::strong_ordering::equal;
  }

  /// Rendering with Unicode superscripts and minus sign, e.g. "x²−2x+1".
  std::string to_string() const { return render(true); }
  /// ASCII rendering, e.g. "x^2-2*x+1".
  std::string to_ascii() const { return render(false); }

 private:
  static std::strong_ordering zigzag_compare(const Integer &a, const Integer &b) {
    Integer aa = iabs(a), bb = iabs(b);
    if (aa != bb) return aa < bb ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a == b) return std::strong_ordering::equal;
    return a < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  static std::string superscript(std::size_t n) {
    static const char *digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = std::to_string(n), out;
    for (char ch : s) out += digits[ch - '0'];
    return out;
  }

  std::string render(bool unicode) const {
    if (c_.empty()) return "0";
    const std::string minus = unicode ? "−" : "-";
    std::string out;
    bool first = true;
    for (std::size_t d = c_.size(); d-- > 0;) {
      const Integer &a = c_[d];
      if (a == 0) continue;
      if (a < 0)
        out += minus;
      else if (!first)
        out += "+";
      first = false;
      Integer mag = iabs(a);
      if (d == 0 || mag != 1) {
        out += mag.str();
        if (d > 0 && !unicode) out += "*";
      }
      if (d >= 1) out += "x";
      if (d >= 2) out += unicode ? superscript(d) : "^" + std::to_string(d);
    }
    return out;
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  IntVector c_;
};

/// Parse "x^4-1", "2*x^2 + 3x - 1", "x²−2" and similar single-variable input.
inline IntPolynomial parse_polynomial(const std::string &text) {
  // Normalise Unicode minus, middle dot and superscript exponents to ASCII.
  static const std::pair<const char *, char> superscripts[] = {
      {"⁰", '0'}, {"¹", '1'}, {"²", '2'}, {"³", '3'}, {"⁴", '4'},
      {"⁵", '5'}, {"⁶", '6'}, {"⁷", '7'}, {"⁸", '8'}, {"⁹", '9'}};
  std::string s;
  bool in_exponent = false;
  for (std::size_t k = 0; k < text.size();) {
    bool matched = false;
    for (const auto &[glyph, digit] : superscripts) {
      const std::string g(glyph);
      if (text.compare(k, g.size(), g) == 0) {
        if (!in_exponent) s += '^';
        s += digit;
        in_exponent = true;
        k += g.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    in_exponent = false;
    if (text.compare(k, 3, "−") == 0) {
      s += '-';
      k += 3;
    } else if (text.compare(k, 2, "·") == 0) {
      s += '*';
      k += 2;
    } else {
      if (text[k] != ' ' && text[k] != '\t') s += text[k];
      ++k;
    }
  }
  if (s.empty()) throw ParseError("empty polynomial");
  IntVector coeffs;
  std::size_t i = 0;
  auto read_digits = [&](std::string &out) {
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') out += s[i++];
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' in polynomial '" + text + "'");
    }
    std::string num;
    read_digits(num);
    Integer c = num.empty() ? Integer(1) : Integer(num);
    std::size_t deg = 0;
    if (i < s.size() && s[i] == '*') {
      if (num.empty()) throw ParseError("dangling '*' in polynomial '" + text + "'");
      ++i;
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        read_digits(e);
        if (e.empty()) throw ParseError("missing exponent in polynomial '" + text + "'");
        deg = std::stoul(e);
      }
    } else if (num.empty()) {
      throw ParseError("malformed term in polynomial '" + text + "'");
    }
    if (coeffs.size() <= deg) coeffs.resize(deg + 1);
    coeffs[deg] += sign * c;
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace eqlef
