#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqlef/group_ring.hpp"

namespace eqlef {

/// Subgroup conjugacy class (by its canonical representative) plus a label
/// for the component orbit.
struct IsoClassKey {
  Subgroup subgroup;
  std::string component;

  friend bool operator==(const IsoClassKey &, const IsoClassKey &) = default;
  friend std::strong_ordering operator<=>(const IsoClassKey &a, const IsoClassKey &b) {
    if (a.subgroup != b.subgroup) return FiniteGroup::subgroup_less(a.subgroup, b.subgroup) ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.component <=> b.component;
  }
};

/// One degree of the chain data of an iso class. Basis element i spans a copy
/// of Z[Aut(x)/S_i] where S_i = isotropy[i] ≤ W_x; masked elements lie in the
/// singular part X^{>H}(x) and are the only ones allowed a nontrivial S_i.
/// Row convention: f(e_i) = Σ_j map(i,j)·e_j and ∂(e_i) = Σ_j boundary(i,j)·e'_j.
struct ChainDegree {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<bool> relative_mask;
  std::vector<Subgroup> isotropy;
  GroupRingMatrix map;
  std::optional<GroupRingMatrix> boundary;

  std::vector<std::size_t> free_indices() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < rank; ++i)
      if (!relative_mask[i]) idx.push_back(i);
    return idx;
  }
};

struct IsoClassData {
  IsoClassKey key;
  AutGroupPtr aut;
  TwistData twist;
  std::vector<ChainDegree> chain;  // sorted by degree, degrees distinct

  const ChainDegree *at(int p) const {
    for (const auto &c : chain)
      if (c.degree == p) return &c;
    return nullptr;
  }
  std::size_t rank(int p) const {
    const ChainDegree *c = at(p);
    return c ? c->rank : 0;
  }
};

/// A fixed point z of f in the component of `key`, with index i(f,z) and the
/// π₁-element a_z recording its fixed point class.
struct FixedPointDatum {
  IsoClassKey key;
  std::string point;
  std::string orbit;
  Integer index = 0;
  IntVector path_class;
};

struct EquivariantComplex {
  std::string name;
  std::string description;
  std::string group_name;  // builtin name, empty when given by table
  FiniteGroup group;
  std::vector<IsoClassData> iso_classes;  // sorted by key after validation
  std::vector<FixedPointDatum> fixed_points;

  const IsoClassData *find(const IsoClassKey &k) const {
    for (const auto &d : iso_classes)
      if (d.key == k) return &d;
    return nullptr;
  }
};

inline std::string key_label(const FiniteGroup &g, const IsoClassKey &k) {
  return "(" + g.subgroup_label(k.subgroup) + ")/" + k.component;
}

namespace detail {

inline GroupRingMatrix reduce_columns(const GroupRingMatrix &m, const std::vector<Subgroup> &col_isotropy) {
  GroupRingMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).reduced_mod(col_isotropy[j]);
  return r;
}

// Entry (i,j) must satisfy s·m(i,j) ≡ m(i,j) modulo S_j for every s ∈ S_i.
inline void check_balanced(const GroupRingMatrix &m, const std::vector<Subgroup> &row_iso,
                           const std::vector<Subgroup> &col_iso, const std::string &where, const char *what) {
  const AutGroup &aut = *m.aut();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (int s : row_iso[i]) {
      if (s == aut.weyl().identity()) continue;
      const GroupRingElement left = GroupRingElement::term(m.aut(), 1, {IntVector(aut.pi1_rank()), s});
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!((left * m(i, j)).reduced_mod(col_iso[j]) == m(i, j)))
          throw ValidationError(where, std::string(what) + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") is not invariant under the isotropy of basis element " +
                                           std::to_string(i));
    }
}

inline void check_entries(const GroupRingMatrix &m, const std::string &where) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto &[g, c] : m(i, j).terms()) {
        try {
          m.aut()->check_element(g);
        } catch (const DimensionError &e) {
          throw ValidationError(where, e.what());
        }
      }
}

}  // namespace detail

/// Validates every structural invariant and brings the complex into canonical
/// form (class representatives for subgroups, entries reduced modulo
/// isotropy, iso classes and degrees sorted).
inline void validate_complex(EquivariantComplex &c) {
  const FiniteGroup &g = c.group;
  std::set<IsoClassKey> keys;
  for (auto &d : c.iso_classes) {
    if (!g.is_subgroup(d.key.subgroup))
      throw ValidationError("iso class " + d.key.component, "subgroup " + g.subgroup_label(d.key.subgroup) +
                                                                 " is not a subgroup of the group");
    d.key.subgroup = g.class_representative(d.key.subgroup);
    const std::string where = "iso class " + key_label(g, d.key);
    if (!keys.insert(d.key).second) throw ValidationError(where, "duplicate iso class key");
    if (!d.aut) throw ValidationError(where, "missing automorphism group");
    const AutGroup &aut = *d.aut;
    const int weyl_order = weyl_group(g, d.key.subgroup).group.order();
    if (weyl_order % aut.weyl().order() != 0)
      throw ValidationError(where, "|W_x| = " + std::to_string(aut.weyl().order()) + " does not divide |WH| = " +
                                       std::to_string(weyl_order));
    try {
      d.twist.validate(aut);
    } catch (const ValidationError &e) {
      throw ValidationError(where, e.what());
    }

    std::sort(d.chain.begin(), d.chain.end(), [](const ChainDegree &a, const ChainDegree &b) { return a.degree < b.degree; });
    for (std::size_t k = 0; k < d.chain.size(); ++k) {
      ChainDegree &cd = d.chain[k];
      const std::string w = where + ", degree " + std::to_string(cd.degree);
      if (cd.degree < 0) throw ValidationError(w, "negative degree");
      if (k > 0 && d.chain[k - 1].degree == cd.degree) throw ValidationError(w, "degree listed twice");
      if (cd.relative_mask.size() != cd.rank) throw ValidationError(w, "relative_mask length differs from rank");
      if (cd.isotropy.empty()) cd.isotropy.assign(cd.rank, Subgroup{aut.weyl().identity()});
      if (cd.isotropy.size() != cd.rank) throw ValidationError(w, "isotropy list length differs from rank");
      for (std::size_t i = 0; i < cd.rank; ++i) {
        std::sort(cd.isotropy[i].begin(), cd.isotropy[i].end());
        if (!aut.weyl().is_subgroup(cd.isotropy[i]))
          throw ValidationError(w, "isotropy of basis element " + std::to_string(i) + " is not a subgroup of W_x");
        if (!cd.relative_mask[i] && cd.isotropy[i].size() != 1)
          throw ValidationError(w, "basis element " + std::to_string(i) +
                                       " outside the singular part must be free (trivial isotropy)");
      }
      if (!(cd.map.aut() == d.aut || *cd.map.aut() == aut)) throw ValidationError(w, "map over a different group");
      if (cd.map.rows() != cd.rank || cd.map.cols() != cd.rank)
        throw ValidationError(w, "map must be " + std::to_string(cd.rank) + "x" + std::to_string(cd.rank));
      detail::check_entries(cd.map, w);
      cd.map = detail::reduce_columns(cd.map, cd.isotropy);
      detail::check_balanced(cd.map, cd.isotropy, cd.isotropy, w, "map");
      for (std::size_t i = 0; i < cd.rank; ++i)
        for (std::size_t j = 0; j < cd.rank; ++j)
          if (cd.relative_mask[i] && !cd.relative_mask[j] && !cd.map(i, j).is_zero())
            throw ValidationError(w, "map sends singular basis element " + std::to_string(i) +
                                         " outside the singular part");
    }

    for (auto &cd : d.chain) {
      if (!cd.boundary) continue;
      const std::string w = where + ", degree " + std::to_string(cd.degree);
      const ChainDegree *below = d.at(cd.degree - 1);
      const std::size_t nb = below ? below->rank : 0;
      GroupRingMatrix &b = *cd.boundary;
      if (b.rows() != cd.rank || b.cols() != nb)
        throw ValidationError(w, "boundary must be " + std::to_string(cd.rank) + "x" + std::to_string(nb));
      if (nb == 0) continue;
      detail::check_entries(b, w);
      b = detail::reduce_columns(b, below->isotropy);
      detail::check_balanced(b, cd.isotropy, below->isotropy, w, "boundary");
      for (std::size_t i = 0; i < cd.rank; ++i)
        for (std::size_t j = 0; j < nb; ++j)
          if (cd.relative_mask[i] && !below->relative_mask[j] && !b(i, j).is_zero())
            throw ValidationError(w, "singular part is not a subcomplex: boundary of basis element " +
                                         std::to_string(i) + " leaves it");
      if (below->boundary) {
        const ChainDegree *below2 = d.at(cd.degree - 2);
        if (below2 && below->boundary->cols() > 0 &&
            !detail::reduce_columns(b * *below->boundary, below2->isotropy).is_zero())
          throw ValidationError(w, "boundary∘boundary ≠ 0 (degrees " + std::to_string(cd.degree) + " → " +
                                       std::to_string(cd.degree - 2) + ")");
      }
      const GroupRingMatrix lhs = detail::reduce_columns(cd.map * b, below->isotropy);
      const GroupRingMatrix rhs = detail::reduce_columns(b.twisted(d.twist) * below->map, below->isotropy);
      if (!(lhs == rhs)) throw ValidationError(w, "chain map does not commute with the boundary");
    }
  }
  std::sort(c.iso_classes.begin(), c.iso_classes.end(),
            [](const IsoClassData &a, const IsoClassData &b) { return a.key < b.key; });
  for (auto &fp : c.fixed_points) {
    if (!g.is_subgroup(fp.key.subgroup))
      throw ValidationError("fixed point " + fp.point, "subgroup class is not a subgroup");
    fp.key.subgroup = g.class_representative(fp.key.subgroup);
  }
}

/// Checks references, path lengths and that fixed points in one orbit carry
/// equal indices.
inline void validate_fixed_point_data(const EquivariantComplex &c, const std::vector<FixedPointDatum> &data) {
  std::map<std::pair<IsoClassKey, std::string>, const FixedPointDatum *> first_in_orbit;
  for (const auto &fp : data) {
    const std::string where = "fixed point " + fp.point;
    const IsoClassData *d = c.find(fp.key);
    if (!d) throw ValidationError(where, "unknown iso class " + key_label(c.group, fp.key));
    if (fp.path_class.size() != d->aut->pi1_rank())
      throw ValidationError(where, "path class has length " + std::to_string(fp.path_class.size()) + ", expected " +
                                       std::to_string(d->aut->pi1_rank()));
    auto [it, inserted] = first_in_orbit.emplace(std::make_pair(fp.key, fp.orbit), &fp);
    if (!inserted && it->second->index != fp.index)
      throw ValidationError(where, "orbit-index invariance violated: points " + it->second->point + " (index " +
                                       it->second->index.str() + ") and " + fp.point + " (index " + fp.index.str() +
                                       ") lie in orbit " + fp.orbit);
  }
}

}  // namespace eqlef
