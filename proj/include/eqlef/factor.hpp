#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "eqlef/polynomial.hpp"

namespace eqlef {

/// p = unit * prod(factor_i ^ multiplicity_i). Factors are primitive with
/// positive leading coefficient (monic whenever p is monic), irreducible over
/// Q, and sorted in canonical polynomial order.
struct Factorization {
  Integer unit;
  std::vector<std::pair<IntPolynomial, unsigned>> factors;

  IntPolynomial expand() const {
    IntPolynomial p = IntPolynomial::constant(unit);
    for (const auto &[f, e] : factors) p = p * f.pow(e);
    return p;
  }
};

namespace detail {

// ---- arithmetic in F_p[x], p < 2^31, coefficients lowest degree first ----

using ModPoly = std::vector<std::uint64_t>;

inline void trim(ModPoly &a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

inline ModPoly reduce(const IntPolynomial &f, std::uint64_t p) {
  ModPoly a(f.coeffs().size());
  const Integer P = p;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<std::uint64_t>(floor_mod(f.coeffs()[i], P));
  trim(a);
  return a;
}

inline ModPoly sub(const ModPoly &a, const ModPoly &b, std::uint64_t p) {
  ModPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    c[i] = (x + p - y) % p;
  }
  trim(c);
  return c;
}

inline ModPoly mul(const ModPoly &a, const ModPoly &b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

inline std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly &b, std::uint64_t p) {
  if (b.empty()) throw DomainError("division by zero in F_p[x]");
  if (a.size() < b.size()) return {{}, a};
  ModPoly q(a.size() - b.size() + 1);
  const std::uint64_t inv = inv_mod(b.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::uint64_t t = a[k + b.size() - 1] * inv % p;
    q[k] = t;
    if (t)
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = (a[k + j] + p - t * b[j] % p) % p;
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline ModPoly make_monic(ModPoly a, std::uint64_t p) {
  if (a.empty()) return a;
  const std::uint64_t inv = inv_mod(a.back(), p);
  for (auto &x : a) x = x * inv % p;
  return a;
}

inline ModPoly gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  while (!b.empty()) {
    ModPoly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

/// Returns (g, s, t) with s*a + t*b = g monic.
inline std::tuple<ModPoly, ModPoly, ModPoly> ext_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  ModPoly s0{1}, s1{}, t0{}, t1{1};
  while (!b.empty()) {
    auto [q, r] = divmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint64_t inv = inv_mod(a.back(), p);
  for (auto *v : {&a, &s0, &t0})
    for (auto &x : *v) x = x * inv % p;
  return {a, s0, t0};
}

inline ModPoly derivative(const ModPoly &a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  ModPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
  trim(d);
  return d;
}

inline ModPoly pow_mod(ModPoly base, Integer e, const ModPoly &f, std::uint64_t p) {
  ModPoly r{1};
  base = divmod(base, f, p).second;
  while (e > 0) {
    if ((e & 1) != 0) r = divmod(mul(r, base, p), f, p).second;
    e >>= 1;
    if (e > 0) base = divmod(mul(base, base, p), f, p).second;
  }
  return r;
}

/// Distinct-degree factorisation of a monic squarefree f: pairs (product, d).
inline std::vector<std::pair<ModPoly, std::size_t>> distinct_degree(ModPoly f, std::uint64_t p) {
  std::vector<std::pair<ModPoly, std::size_t>> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    h = pow_mod(h, Integer(p), f, p);
    ModPoly g = gcd(f, sub(h, x, p), p);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = divmod(h, f, p).second;
    }
  }
  if (f.size() > 1) out.emplace_back(f, f.size() - 1);
  return out;
}

/// Equal-degree splitting (Cantor-Zassenhaus), odd p, deterministic seed.
inline void equal_degree(const ModPoly &f, std::size_t d, std::uint64_t p, std::mt19937_64 &rng,
                         std::vector<ModPoly> &out) {
  const std::size_t n = f.size() - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e = 1;
  for (std::size_t i = 0; i < d; ++i) e *= p;
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);
  for (;;) {
    ModPoly a(n);
    for (auto &c : a) c = coin(rng);
    trim(a);
    if (a.size() <= 1) continue;
    ModPoly g = gcd(a, f, p);
    if (g.size() == 1) g = gcd(sub(pow_mod(a, e, f, p), ModPoly{1}, p), f, p);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

inline std::vector<ModPoly> factor_mod_p(const ModPoly &monic_f, std::uint64_t p) {
  std::mt19937_64 rng(0x5eed5eedULL ^ p);
  std::vector<ModPoly> out;
  for (const auto &[g, d] : distinct_degree(monic_f, p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const ModPoly &a, const ModPoly &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// ---- Hensel lifting over Z / p^k ----

inline IntVector mod_coeffs(const IntVector &a, const Integer &m) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = floor_mod(a[i], m);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

inline IntVector to_int(const ModPoly &a) { return IntVector(a.begin(), a.end()); }

inline ModPoly to_mod(const IntVector &a, std::uint64_t p) {
  return reduce(IntPolynomial(a), p);
}

inline IntVector mul_int(const IntVector &a, const IntVector &b) {
  return (IntPolynomial(a) * IntPolynomial(b)).coeffs();
}

/// Lift f = c * g * h (mod p) with g, h monic and coprime to f = c * G * H (mod p^k).
inline std::pair<IntVector, IntVector> hensel_pair(const IntVector &f, const Integer &c, const ModPoly &g0,
                                                   const ModPoly &h0, std::uint64_t p, unsigned k) {
  auto [one, s, t] = ext_gcd(g0, h0, p);
  (void)one;
  IntVector g = to_int(g0), h = to_int(h0);
  const Integer P = p;
  const std::uint64_t c_inv = inv_mod(static_cast<std::uint64_t>(floor_mod(c, P)), p);
  Integer m = p;
  for (unsigned j = 1; j < k; ++j) {
    IntPolynomial err = IntPolynomial(f) - c * (IntPolynomial(g) * IntPolynomial(h));
    IntVector e(err.coeffs().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = err.coeffs()[i] / m;
    ModPoly em = to_mod(e, p);
    for (auto &x : em) x = x * c_inv % p;
    ModPoly dg = divmod(mul(em, t, p), g0, p).second;
    ModPoly dh = divmod(sub(em, mul(dg, h0, p), p), g0, p).first;
    const Integer next = m * p;
    IntVector G = g, H = h;
    for (std::size_t i = 0; i < dg.size(); ++i) G[i] += m * dg[i];
    if (H.size() < dh.size()) H.resize(dh.size());
    for (std::size_t i = 0; i < dh.size(); ++i) H[i] += m * dh[i];
    g = mod_coeffs(G, next);
    h = mod_coeffs(H, next);
    m = next;
  }
  return {g, h};
}

/// Lift all modular factors of f (product c * prod(factors) mod p) to p^k.
inline std::vector<IntVector> hensel_lift(const IntVector &f, const Integer &c, const std::vector<ModPoly> &factors,
                                          std::uint64_t p, unsigned k) {
  std::vector<IntVector> out;
  IntVector target = f;
  Integer lead = c;
  Integer pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= p;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i + 1 == factors.size()) {
      // target == lead * g (mod p^k); g is target / lead made monic.
      Bezout b = eqlef::ext_gcd(floor_mod(lead, pk), pk);
      IntVector g(target.size());
      for (std::size_t j = 0; j < g.size(); ++j) g[j] = floor_mod(target[j] * b.s, pk);
      out.push_back(mod_coeffs(g, pk));
      break;
    }
    ModPoly rest{1};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = mul(rest, factors[j], p);
    auto [g, h] = hensel_pair(target, lead, factors[i], rest, p, k);
    out.push_back(g);
    target = h;
    lead = 1;
  }
  return out;
}

inline IntVector symmetric_mod(const IntVector &a, const Integer &m) {
  IntVector r(a.size());
  const Integer half = m / 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = floor_mod(a[i], m);
    if (r[i] > half) r[i] -= m;
  }
  return r;
}

inline Integer isqrt_ceil(const Integer &n) {
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r < n) ++r;
  return r;
}

/// Factor a primitive squarefree polynomial of degree >= 1 with positive
/// leading coefficient. Returns primitive irreducible factors.
inline std::vector<IntPolynomial> factor_squarefree(const IntPolynomial &f) {
  if (f.degree() <= 1) return {f};
  const Integer lc = f.leading();
  const IntPolynomial df = f.derivative();

  static const std::uint64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                          53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
                                          113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191};
  std::uint64_t best_p = 0;
  std::vector<ModPoly> best;
  int good = 0;
  for (std::uint64_t p : primes) {
    if (lc % p == 0) continue;
    ModPoly fm = reduce(f, p);
    if (gcd(fm, reduce(df, p), p).size() != 1) continue;
    std::vector<ModPoly> fac = factor_mod_p(make_monic(fm, p), p);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = std::move(fac);
    }
    if (best.size() == 1 || ++good == 5) break;
  }
  if (best_p == 0) throw DomainError("factor: no suitable prime found");
  if (best.size() == 1) return {f};

  // Coefficients of c * (true factor) / lc(true factor) are bounded by |lc| 2^d ||f||_2.
  Integer norm2 = 0;
  for (const auto &a : f.coeffs()) norm2 += a * a;
  Integer bound = iabs(lc) * isqrt_ceil(norm2);
  bound <<= static_cast<unsigned>(f.degree());
  unsigned k = 1;
  Integer pk = best_p;
  while (pk <= 2 * bound) {
    pk *= best_p;
    ++k;
  }

  std::vector<IntVector> lifted = hensel_lift(f.coeffs(), lc, best, best_p, k);
  std::vector<IntPolynomial> found;
  IntPolynomial rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      IntVector cand{rest.leading()};
      for (std::size_t i : idx) cand = detail::mod_coeffs(mul_int(cand, lifted[i]), pk);
      IntPolynomial g = IntPolynomial(symmetric_mod(cand, pk)).primitive_part();
      if (g.degree() > 0) {
        if (auto q = IntPolynomial::divide_exact(rest, g)) {
          found.push_back(g);
          rest = *q;
          for (std::size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[i]));
          hit = true;
          break;
        }
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (rest.degree() > 0) found.push_back(rest.primitive_part());
  return found;
}

}  // namespace detail

/// Complete factorisation over Q (equivalently Z, by Gauss's lemma).
inline Factorization factor_over_Q(const IntPolynomial &p) {
  if (p.is_zero()) throw DomainError("factor_over_Q: zero polynomial");
  Factorization result;
  const IntPolynomial prim = p.primitive_part();
  result.unit = p.leading() < 0 ? Integer(-p.content()) : p.content();
  if (prim.degree() == 0) return result;

  // Squarefree part: the irreducible factors of prim / gcd(prim, prim').
  const IntPolynomial g = IntPolynomial::gcd(prim, prim.derivative());
  const IntPolynomial squarefree = IntPolynomial::divide_exact(prim, g)->primitive_part();

  std::vector<IntPolynomial> irreducibles;
  IntPolynomial core = squarefree;
  if (core.coeff(0) == 0) {
    irreducibles.push_back(IntPolynomial::x());
    core = *IntPolynomial::divide_exact(core, IntPolynomial::x());
  }
  if (core.degree() > 0)
    for (auto &f : detail::factor_squarefree(core)) irreducibles.push_back(std::move(f));

  IntPolynomial remaining = prim;
  for (const auto &f : irreducibles) {
    unsigned e = 0;
    while (auto q = IntPolynomial::divide_exact(remaining, f)) {
      remaining = *q;
      ++e;
    }
    result.factors.emplace_back(f, e);
  }
  std::sort(result.factors.begin(), result.factors.end());
  return result;
}

}  // namespace eqlef
