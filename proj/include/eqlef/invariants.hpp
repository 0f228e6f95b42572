#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqlef/complex.hpp"
#include "eqlef/uz.hpp"

namespace eqlef {

// ---------------------------------------------------------------------------
// K-classes

/// coeff · [matrix] with matrix in canonical form under basis permutation.
struct KTerm {
  GroupRingMatrix matrix;
  Integer coeff;
  std::string key;  // canonical serialization of `matrix`
};

struct KClassEntry {
  IsoClassKey key;
  std::vector<KTerm> terms;  // sorted by (size, key); zero terms absent
  std::optional<UZClass> uz;  // image in U(Z) when Aut(x) is trivial

  bool is_zero() const { return terms.empty(); }
};

struct KClass {
  std::vector<KClassEntry> entries;  // in iso class key order

  const KClassEntry *find(const IsoClassKey &k) const {
    for (const auto &e : entries)
      if (e.key == k) return &e;
    return nullptr;
  }
  bool is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const KClassEntry &e) { return e.is_zero(); });
  }
};

namespace detail {

// Strongly connected components of the support graph i -> j (m(i,j) ≠ 0),
// listed in a topological order of the condensation.
inline std::vector<std::vector<std::size_t>> support_components(const GroupRingMatrix &m) {
  const std::size_t n = m.rows();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (m(v, w).is_zero()) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  std::reverse(comps.begin(), comps.end());  // Tarjan emits sinks first
  return comps;
}

inline std::string entry_key(const GroupRingElement &e) {
  std::string s;
  for (const auto &[g, c] : e.terms()) {
    s += c.str() + "*(";
    for (const auto &x : g.v) s += x.str() + ",";
    s += ";" + std::to_string(g.w) + ")";
  }
  return s.empty() ? "0" : s;
}

/// Canonical representative of m under simultaneous row/column permutation.
/// Exhaustive up to 7×7; above that a deterministic refinement ordering.
inline std::pair<GroupRingMatrix, std::string> canonical_block(const GroupRingMatrix &m) {
  const std::size_t n = m.rows();
  std::map<std::string, int> ids;
  std::vector<std::string> keys(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ids[keys[i * n + j] = entry_key(m(i, j))] = 0;
  int next = 0;
  for (auto &[k, v] : ids) v = next++;
  std::vector<int> id(n * n);
  for (std::size_t k = 0; k < n * n; ++k) id[k] = ids[keys[k]];

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto flatten = [&](const std::vector<std::size_t> &p) {
    std::vector<int> f(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f[i * n + j] = id[p[i] * n + p[j]];
    return f;
  };
  std::vector<std::size_t> best = perm;
  if (n <= 7) {
    std::vector<int> best_flat = flatten(perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<int> f = flatten(perm);
      if (f < best_flat) {
        best_flat = std::move(f);
        best = perm;
      }
    }
  } else {
    auto signature = [&](std::size_t i) {
      std::vector<int> row, col;
      for (std::size_t j = 0; j < n; ++j) {
        row.push_back(id[i * n + j]);
        col.push_back(id[j * n + i]);
      }
      std::sort(row.begin(), row.end());
      std::sort(col.begin(), col.end());
      return std::make_tuple(id[i * n + i], row, col);
    };
    std::stable_sort(best.begin(), best.end(), [&](std::size_t a, std::size_t b) { return signature(a) < signature(b); });
  }
  GroupRingMatrix c = m.submatrix(best, best);
  std::string key = std::to_string(n) + ":";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) key += keys[best[i] * n + best[j]] + "|";
  return {std::move(c), std::move(key)};
}

}  // namespace detail

/// Normalizes a signed list of matrices: drops 0×0 terms, splits each matrix
/// into the diagonal blocks of its block-triangular form, puts blocks in
/// canonical form and cancels equal terms.
inline std::vector<KTerm> normalize_kterms(const std::vector<std::pair<Integer, GroupRingMatrix>> &raw) {
  std::map<std::string, KTerm> acc;
  for (const auto &[coeff, m] : raw) {
    if (coeff == 0 || m.rows() == 0) continue;
    if (!m.is_square()) throw DimensionError("K-class term must be square");
    for (const auto &comp : detail::support_components(m)) {
      auto [block, key] = detail::canonical_block(m.submatrix(comp, comp));
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, KTerm{std::move(block), coeff, key});
      else
        it->second.coeff += coeff;
    }
  }
  std::vector<KTerm> out;
  for (auto &[k, t] : acc)
    if (t.coeff != 0) out.push_back(std::move(t));
  std::stable_sort(out.begin(), out.end(), [](const KTerm &a, const KTerm &b) {
    return a.matrix.rows() != b.matrix.rows() ? a.matrix.rows() < b.matrix.rows() : a.key < b.key;
  });
  return out;
}

inline KClassEntry universal_invariant_entry(const IsoClassData &d) {
  std::vector<std::pair<Integer, GroupRingMatrix>> raw;
  for (const auto &cd : d.chain) {
    const auto idx = cd.free_indices();
    raw.emplace_back(cd.degree % 2 == 0 ? 1 : -1, cd.map.submatrix(idx, idx));
  }
  KClassEntry e{d.key, normalize_kterms(raw), std::nullopt};
  if (d.aut->is_trivial()) {
    UZClass u;
    for (const auto &t : e.terms) u = u + t.coeff * class_of_matrix(t.matrix.augmentation());
    e.uz = u;
  }
  return e;
}

/// u: per iso class, Σ_p (−1)^p [relative chain map in degree p], normalized.
inline KClass universal_invariant(const EquivariantComplex &c) {
  KClass k;
  for (const auto &d : c.iso_classes) k.entries.push_back(universal_invariant_entry(d));
  return k;
}

// ---------------------------------------------------------------------------
// λ, R, L

struct LambdaEntry {
  IsoClassKey key;
  ClassSum value;
};

struct LambdaVector {
  std::vector<LambdaEntry> entries;
  bool is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const LambdaEntry &e) { return e.value.empty(); });
  }
  const ClassSum *find(const IsoClassKey &k) const {
    for (const auto &e : entries)
      if (e.key == k) return &e.value;
    return nullptr;
  }
  /// Sum over the iso classes of one subgroup class, classes merged by representative.
  ClassSum lumped(const Subgroup &h) const {
    ClassSum s;
    for (const auto &e : entries)
      if (e.key.subgroup == h) s = class_sum_plus(std::move(s), e.value);
    return s;
  }
};

inline ClassSum lambda_entry(const IsoClassData &d) {
  const TwistedClassSet classes(*d.aut, d.twist, true);
  ClassSum s;
  for (const auto &cd : d.chain) {
    const Integer sign = cd.degree % 2 == 0 ? 1 : -1;
    for (std::size_t i : cd.free_indices()) s = class_sum_plus(std::move(s), pi1_projection(cd.map(i, i), classes), sign);
  }
  return s;
}

/// λ: per iso class, Σ_p (−1)^p trace projection of the relative chain map.
inline LambdaVector lambda_invariant(const EquivariantComplex &c) {
  LambdaVector l;
  for (const auto &d : c.iso_classes) l.entries.push_back({d.key, lambda_entry(d)});
  return l;
}

namespace detail {
// Left cosets wS of S in W, each given by its smallest element.
inline std::vector<int> left_coset_reps(const FiniteGroup &w, const Subgroup &s) {
  std::set<int> reps;
  for (int a = 0; a < w.order(); ++a) {
    int best = a;
    for (int x : s) best = std::min(best, w.mul(a, x));
    reps.insert(best);
  }
  return {reps.begin(), reps.end()};
}
}  // namespace detail

/// R of the component: alternating π₁-trace of the absolute chain map after
/// restricting scalars from Z[Aut(x)] to Z[π₁] (basis element i becomes
/// |W/S_i| basis elements indexed by cosets), classes at the π₁ level.
inline ClassSum reidemeister_trace(const IsoClassData &d) {
  const AutGroup &aut = *d.aut;
  const TwistedClassSet classes(aut, d.twist, false);
  ClassSum s;
  for (const auto &cd : d.chain) {
    const Integer sign = cd.degree % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < cd.rank; ++i) {
      const Subgroup &iso = cd.isotropy[i];
      for (int w : detail::left_coset_reps(aut.weyl(), iso))
        for (const auto &[g, r] : cd.map(i, i).terms())
          if (std::binary_search(iso.begin(), iso.end(), g.w))
            class_sum_add(s, classes.representative(aut.theta(w).apply(g.v)), sign * r);
    }
  }
  return s;
}

/// Σ index · [class of path], merging points in equal classes.
inline ClassSum reidemeister_from_fixed_points(const std::vector<FixedPointDatum> &data, const TwistedClassSet &classes) {
  std::map<std::string, const FixedPointDatum *> orbit_index;
  ClassSum s;
  for (const auto &fp : data) {
    auto [it, inserted] = orbit_index.emplace(fp.orbit, &fp);
    if (!inserted && it->second->index != fp.index)
      throw ValidationError("fixed point " + fp.point, "orbit-index invariance violated: points " + it->second->point +
                                                           " and " + fp.point + " lie in orbit " + fp.orbit +
                                                           " but have different indices");
    class_sum_add(s, classes.representative(fp.path_class), fp.index);
  }
  return s;
}

/// Fixed point data of one iso class of a complex, fed through the π₁-level classes.
inline ClassSum reidemeister_from_fixed_points(const EquivariantComplex &c, const IsoClassData &d) {
  std::vector<FixedPointDatum> mine;
  for (const auto &fp : c.fixed_points)
    if (fp.key == d.key) mine.push_back(fp);
  return reidemeister_from_fixed_points(mine, TwistedClassSet(*d.aut, d.twist, false));
}

/// Integer matrix of the chain map on the component's cells: basis (i, wS_i),
/// and a term r·(v,u) of map(i,j) sends (i, wS_i) to r·(j, wuS_j).
inline IntMatrix expanded_chain_matrix(const IsoClassData &d, const ChainDegree &cd) {
  const FiniteGroup &w = d.aut->weyl();
  std::vector<std::pair<std::size_t, int>> basis;
  std::map<std::pair<std::size_t, int>, std::size_t> pos;
  auto coset_min = [&](int a, const Subgroup &s) {
    int best = a;
    for (int x : s) best = std::min(best, w.mul(a, x));
    return best;
  };
  for (std::size_t i = 0; i < cd.rank; ++i)
    for (int rep : detail::left_coset_reps(w, cd.isotropy[i])) {
      pos[{i, rep}] = basis.size();
      basis.emplace_back(i, rep);
    }
  IntMatrix m(basis.size(), basis.size());
  for (std::size_t row = 0; row < basis.size(); ++row) {
    const auto [i, wi] = basis[row];
    for (std::size_t j = 0; j < cd.rank; ++j)
      for (const auto &[g, r] : cd.map(i, j).terms())
        m(row, pos.at({j, coset_min(w.mul(wi, g.w), cd.isotropy[j])})) += r;
  }
  return m;
}

/// L of the component: alternating trace of the chain map on its cells.
inline Integer lefschetz_number(const IsoClassData &d) {
  Integer l = 0;
  for (const auto &cd : d.chain) {
    const Integer t = expanded_chain_matrix(d, cd).trace();
    l += cd.degree % 2 == 0 ? t : Integer(-t);
  }
  return l;
}

// ---------------------------------------------------------------------------
// ℓ

struct EllSummand {
  Subgroup subgroup;                                       // class representative (H)
  std::vector<std::pair<std::string, ClassSum>> components;  // per component orbit
  ClassSum lumped;  // components merged by class representative

  bool is_zero() const { return lumped.empty() && std::all_of(components.begin(), components.end(), [](const auto &p) { return p.second.empty(); }); }
};

struct EllInvariant {
  std::vector<EllSummand> summands;  // one per subgroup conjugacy class, in class order

  bool is_zero() const {
    return std::all_of(summands.begin(), summands.end(), [](const EllSummand &s) { return s.is_zero(); });
  }
  const EllSummand *find(const Subgroup &h) const {
    for (const auto &s : summands)
      if (s.subgroup == h) return &s;
    return nullptr;
  }
};

/// The contribution of one iso class to ℓ: its Reidemeister trace pushed to
/// Aut-level classes, times the size |WH|/|W_x| of its component orbit.
inline ClassSum ell_contribution(const FiniteGroup &g, const IsoClassData &d) {
  const int orbit = weyl_group(g, d.key.subgroup).group.order() / d.aut->weyl().order();
  const TwistedClassSet classes(*d.aut, d.twist, true);
  ClassSum s;
  for (const auto &[k, c] : reidemeister_trace(d)) class_sum_add(s, classes.representative(k), orbit * c);
  return s;
}

inline EllInvariant klein_williams(const EquivariantComplex &c) {
  EllInvariant ell;
  for (const auto &[h, members] : c.group.conjugacy_classes_of_subgroups()) {
    EllSummand s{h, {}, {}};
    for (const auto &d : c.iso_classes)
      if (d.key.subgroup == h) {
        ClassSum r = ell_contribution(c.group, d);
        s.lumped = class_sum_plus(std::move(s.lumped), r);
        s.components.emplace_back(d.key.component, std::move(r));
      }
    ell.summands.push_back(std::move(s));
  }
  return ell;
}

// ---------------------------------------------------------------------------
// Induction along a monomorphism H → G

struct InducedComplex {
  EquivariantComplex complex;
  // (subgroup class in H, component) -> key in the induced complex
  std::map<IsoClassKey, IsoClassKey> key_map;
};

namespace detail {
inline Subgroup image_of(const Subgroup &n, const std::vector<int> &embedding) {
  Subgroup s;
  for (int x : n) s.push_back(embedding[static_cast<std::size_t>(x)]);
  std::sort(s.begin(), s.end());
  return s;
}
}  // namespace detail

/// ind_H^G: each component orbit of X^N becomes a component orbit of
/// (G ×_H X)^N with the same automorphism group and chain data; subgroup
/// classes are mapped into G, and component labels are disambiguated when two
/// H-classes fuse in G.
inline InducedComplex induce(const EquivariantComplex &c, const FiniteGroup &g, const std::string &g_name,
                             const std::vector<int> &embedding) {
  check_embedding(c.group, g, embedding);
  InducedComplex out;
  out.complex.name = c.name.empty() ? "induced" : c.name + "-induced";
  out.complex.description = c.description;
  out.complex.group = g;
  out.complex.group_name = g_name;
  std::set<IsoClassKey> used;
  for (const auto &d : c.iso_classes) {
    IsoClassData nd = d;
    nd.key.subgroup = g.class_representative(detail::image_of(d.key.subgroup, embedding));
    if (used.count(nd.key)) nd.key.component += "@" + c.group.subgroup_label(d.key.subgroup);
    used.insert(nd.key);
    out.key_map[d.key] = nd.key;
    out.complex.iso_classes.push_back(std::move(nd));
  }
  for (const auto &fp : c.fixed_points) {
    FixedPointDatum nf = fp;
    nf.key = out.key_map.at(fp.key);
    out.complex.fixed_points.push_back(std::move(nf));
  }
  validate_complex(out.complex);
  return out;
}

/// i_*: the coset formula [λ] ↦ Σ_{gH ∈ G/H} [(g, λ)]. A coset contributes to
/// the summand of N exactly when g normalizes N, and all such copies land in
/// one Weyl orbit, so each entry is multiplied by #{gH : g ∈ N_G(N)}.
inline EllInvariant induce_ell(const EllInvariant &ell_h, const EquivariantComplex &c, const FiniteGroup &g,
                               const std::vector<int> &embedding, const std::map<IsoClassKey, IsoClassKey> &key_map) {
  check_embedding(c.group, g, embedding);
  const Subgroup h_image = detail::image_of(c.group.whole(), embedding);
  std::map<Subgroup, EllSummand> acc;
  for (const auto &[rep, members] : g.conjugacy_classes_of_subgroups()) acc[rep] = EllSummand{rep, {}, {}};
  for (const auto &s : ell_h.summands)
    for (const auto &[comp, value] : s.components) {
      const Subgroup n = detail::image_of(s.subgroup, embedding);
      const Subgroup norm = g.normalizer(n);
      std::set<Subgroup> cosets;
      for (int x : norm) {
        Subgroup coset;
        for (int y : h_image) coset.push_back(g.mul(x, y));
        std::sort(coset.begin(), coset.end());
        cosets.insert(coset);
      }
      const Integer mult = static_cast<long long>(cosets.size());
      const IsoClassKey new_key = key_map.at(IsoClassKey{s.subgroup, comp});
      EllSummand &t = acc.at(new_key.subgroup);
      ClassSum scaled = class_sum_plus({}, value, mult);
      t.lumped = class_sum_plus(std::move(t.lumped), scaled);
      t.components.emplace_back(new_key.component, std::move(scaled));
    }
  EllInvariant out;
  for (const auto &[rep, members] : g.conjugacy_classes_of_subgroups()) {
    EllSummand s = std::move(acc.at(rep));
    std::sort(s.components.begin(), s.components.end());
    out.summands.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------

struct VanishingReport {
  bool ell_zero = true;
  bool lambda_zero = true;
  bool consistent = true;
};

inline VanishingReport vanishing_report(const EllInvariant &ell, const LambdaVector &lambda) {
  VanishingReport r;
  r.ell_zero = ell.is_zero();
  r.lambda_zero = lambda.is_zero();
  r.consistent = r.ell_zero == r.lambda_zero;
  return r;
}

inline VanishingReport vanishing_report(const EquivariantComplex &c) {
  return vanishing_report(klein_williams(c), lambda_invariant(c));
}

}  // namespace eqlef
