#pragma once

#include <memory>
#include <string>

#include "eqlef/complex.hpp"
#include "eqlef/uz.hpp"

namespace eqlef {

/// Target [a] − [b_prime] in U(Z).
struct RealizationTarget {
  IntMatrix a;        // action on the 2-spheres
  IntMatrix b_prime;  // action on all but one of the 3-spheres
};

/// Wedge of n 2-spheres and m+1 3-spheres over the trivial group, with cell
/// ranks 1, 0, n, m+1 in degrees 0..3. Sphere i of dimension d is wrapped
/// around sphere j with multiplicity a(i,j) (resp. b(i,j)); the extra 3-sphere
/// is fixed, so the degree 3 map is [1] ⊕ b_prime. All boundaries vanish.
inline EquivariantComplex realize(const RealizationTarget &t) {
  if (!t.a.is_square() || !t.b_prime.is_square()) throw DimensionError("realize: target matrices must be square");
  const auto aut = std::make_shared<const AutGroup>();
  const std::size_t n = t.a.rows(), m = t.b_prime.rows();

  auto degree = [&](int p, const IntMatrix &map) {
    ChainDegree cd;
    cd.degree = p;
    cd.rank = map.rows();
    cd.relative_mask.assign(cd.rank, false);
    cd.map = GroupRingMatrix::from_integers(aut, map);
    return cd;
  };

  IsoClassData d;
  d.key = {Subgroup{0}, "X"};
  d.aut = aut;
  d.twist.phi_pi = IntMatrix(0, 0);
  d.chain.push_back(degree(0, IntMatrix::identity(1)));
  d.chain.push_back(degree(1, IntMatrix(0, 0)));
  d.chain.push_back(degree(2, t.a));
  d.chain.back().boundary = GroupRingMatrix(aut, n, 0);
  d.chain.push_back(degree(3, IntMatrix::direct_sum(IntMatrix::identity(1), t.b_prime)));
  d.chain.back().boundary = GroupRingMatrix(aut, m + 1, n);

  EquivariantComplex c;
  c.name = "wedge";
  c.description = "wedge of " + std::to_string(n) + " 2-spheres and " + std::to_string(m + 1) + " 3-spheres";
  c.group_name = "Z1";
  c.group = FiniteGroup::trivial();
  c.iso_classes.push_back(std::move(d));
  validate_complex(c);
  return c;
}

/// class(a) − class(b_prime): what realize(t) must reproduce.
inline UZClass target_class(const RealizationTarget &t) { return class_of_matrix(t.a) - class_of_matrix(t.b_prime); }

}  // namespace eqlef
