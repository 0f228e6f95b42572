// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "eqlef/cli.hpp"
#include "oracles.hpp"

using namespace eqlef;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string &what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void run(int id, const std::string &title, double limit_ms, const std::function<void(Outcome &)> &body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception &e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (limit_ms > 0 && ms > limit_ms) {
    o.ok = false;
    o.detail = "took " + std::to_string(ms) + " ms, limit " + std::to_string(limit_ms);
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << ms << " ms)";
  if (!o.detail.empty()) line << " - " << o.detail;
  std::cout << line.str() << std::endl;
  if (!o.ok) ++failures;
}

const IsoClassData &component(const EquivariantComplex &c, const std::string &name) {
  for (const auto &d : c.iso_classes)
    if (d.key.component == name) return d;
  throw std::runtime_error("missing component " + name);
}

// Summands of ℓ and lumped λ restricted to subgroup classes that occur.
std::vector<std::string> ell_occurring(const EquivariantComplex &c) {
  std::vector<std::string> out;
  for (const auto &s : klein_williams(c).summands)
    if (!s.components.empty()) out.push_back(class_sum_to_string(s.lumped));
  return out;
}

std::vector<Integer> lambda_occurring(const EquivariantComplex &c) {
  const LambdaVector l = lambda_invariant(c);
  std::vector<Integer> out;
  for (const auto &[h, members] : c.group.conjugacy_classes_of_subgroups()) {
    const bool occurs = std::any_of(c.iso_classes.begin(), c.iso_classes.end(),
                                    [&](const IsoClassData &d) { return d.key.subgroup == h; });
    if (occurs) out.push_back(class_sum_total(l.lumped(h)));
  }
  return out;
}

IntMatrix companion(const IntPolynomial &p) {
  const std::size_t n = static_cast<std::size_t>(p.degree());
  IntMatrix m(n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -p.coeff(i);
  return m;
}

IntPolynomial random_monic(std::mt19937_64 &rng, int degree, int max_abs) {
  std::uniform_int_distribution<int> d(-max_abs, max_abs);
  IntVector c;
  for (int i = 0; i < degree; ++i) c.push_back(d(rng));
  c.push_back(1);
  return IntPolynomial(c);
}

IntPolynomial random_irreducible(std::mt19937_64 &rng, int degree) {
  for (;;) {
    IntPolynomial p = random_monic(rng, degree, 6);
    if (oracle::is_irreducible_monic(p)) return p;
  }
}

std::vector<RealizationTarget> wedge_targets(std::size_t count) {
  std::mt19937_64 rng(2024);
  std::vector<RealizationTarget> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back({oracle::random_matrix(rng, rng() % 5, 5), oracle::random_matrix(rng, rng() % 5, 5)});
  return out;
}

}  // namespace

int main() {
  run(1, "Z2 reflection on S^2, f = g", 1000, [](Outcome &o) {
    const auto c = builtin_complex("example1");
    const auto &x = component(c, "x");
    const auto &y = component(c, "y");
    const auto ell = klein_williams(c);
    o.expect(ell.summands.size() == 2 && ell.is_zero(), "ℓ is not 0 ⊕ 0");
    const auto lambda = lambda_invariant(c);
    o.expect(lambda.find(x.key)->empty() && lambda.find(y.key)->empty(), "λ ≠ (0, 0)");
    const auto u = universal_invariant_entry(x);
    o.expect(u.terms.size() == 1 && u.terms[0].coeff == 1 && u.terms[0].matrix.rows() == 1, "u_x is not one 1×1 term");
    if (u.terms.size() == 1) {
      const TwistedClassSet classes(*x.aut, x.twist, true);
      o.expect(pi1_projection(u.terms[0].matrix(0, 0), classes).empty(), "projected trace of u_x ≠ 0");
    }
    o.expect(kclass_to_string(u) == "[−g]", "u_x = " + kclass_to_string(u));
  });

  run(2, "Z2 on S^3, f = triple sign flip", 1000, [](Outcome &o) {
    const auto c = builtin_complex("example2");
    const auto &x = component(c, "x");
    const auto &y = component(c, "y");
    o.expect(lefschetz_number(x) == 2, "L(x) = " + lefschetz_number(x).str());
    o.expect(reidemeister_trace(y).empty(), "R(y) ≠ 0");
    o.expect(ell_occurring(c) == std::vector<std::string>{"2[1]", "0"}, "ℓ ≠ 2[1] ⊕ 0");
    const auto lambda = lambda_invariant(c);
    o.expect(class_sum_to_string(*lambda.find(x.key)) == "1[1]" && lambda.find(y.key)->empty(), "λ ≠ (1, 0)");
    const auto u = universal_invariant_entry(x);
    o.expect(x.aut->weyl().order() == 2 && kclass_to_string(u) == "−[−1]", "u_x = " + kclass_to_string(u));
  });

  run(3, "Z2xZ2 on S^2, f = id", 1000, [](Outcome &o) {
    const auto c = builtin_complex("example3");
    o.expect(lambda_occurring(c) == std::vector<Integer>{1, -1, -1, 2}, "per-(H) λ ≠ (1, −1, −1, 2)");
    o.expect(ell_occurring(c) == std::vector<std::string>{"2[1]", "0", "0", "2[1]"}, "ℓ ≠ 2[1] ⊕ 0 ⊕ 0 ⊕ 2[1]");
    const auto lambda = lambda_invariant(c);
    for (const auto &d : c.iso_classes) {
      Integer chi = 0;
      bool identity = true;
      for (const auto &cd : d.chain) {
        chi += (cd.degree % 2 == 0 ? 1 : -1) * static_cast<long long>(cd.free_indices().size());
        identity = identity && cd.map == GroupRingMatrix::identity(d.aut, cd.rank);
      }
      o.expect(identity, "f is not the identity at " + key_label(c.group, d.key));
      o.expect(class_sum_total(*lambda.find(d.key)) == chi, "λ(id) ≠ relative Euler characteristic at " + key_label(c.group, d.key));
    }
  });

  run(4, "U(Z) class properties on 600 random matrices", 30000, [](Outcome &o) {
    std::mt19937_64 rng(4);
    int checked = 0;
    for (int trial = 0; trial < 600; ++trial) {
      const std::size_t n = 1 + trial % 4;
      const IntMatrix a = oracle::random_matrix(rng, n, 5);
      const auto [u, u_inv] = oracle::random_unimodular(rng, n);
      o.expect(class_of_matrix(u * a * u_inv) == class_of_matrix(a), "conjugation changed a class");
      const IntMatrix b = oracle::random_matrix(rng, 1 + trial % 3, 5);
      const IntMatrix top = oracle::random_matrix(rng, std::max(n, b.rows()), 5);
      IntMatrix off(n, b.rows());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) off(i, j) = top(i, j);
      o.expect(class_of_matrix(IntMatrix::block_upper(a, off, b)) == class_of_matrix(a) + class_of_matrix(b),
               "block-triangular additivity failed");
      const IntPolynomial f = random_irreducible(rng, 1 + trial % 3), g = random_irreducible(rng, 1 + (trial / 3) % 2);
      o.expect(class_of_matrix(companion(f * g)) == UZClass::generator(f) + UZClass::generator(g),
               "companion class differs from its factors");
      ++checked;
    }
    o.expect(checked >= 500, "fewer than 500 matrices");
  });

  run(5, "factorization of 250 random products", 0, [](Outcome &o) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 250; ++trial) {
      IntPolynomial p = IntPolynomial::constant(1);
      int degree = 0;
      const int target = 2 + trial % 7;
      while (degree < target) {
        const int d = std::min<int>(1 + static_cast<int>(rng() % 4), target - degree);
        p = p * random_irreducible(rng, d);
        degree += d;
      }
      const Factorization f = factor_over_Q(p);
      o.expect(f.expand() == p, "reconstruction failed for " + p.to_string());
      for (const auto &[q, e] : f.factors)
        if (q.degree() <= 4) o.expect(oracle::is_irreducible_monic(q), "reducible factor " + q.to_string());
    }
  });

  const auto targets = wedge_targets(120);

  run(6, "augmented R equals L on the corpus and 120 wedge maps", 0, [&](Outcome &o) {
    for (const auto &name : builtin_names())
      for (const auto &d : builtin_complex(name).iso_classes)
        o.expect(class_sum_total(reidemeister_trace(d)) == lefschetz_number(d), name + " " + d.key.component);
    for (const auto &t : targets) {
      const auto c = realize(t);
      const auto &d = c.iso_classes[0];
      o.expect(class_sum_total(reidemeister_trace(d)) == lefschetz_number(d), "wedge map");
    }
  });

  run(7, "realization round trip on 120 targets", 0, [&](Outcome &o) {
    const auto path = std::filesystem::temp_directory_path() / "eqlef_acceptance_wedge.json";
    for (const auto &t : targets) {
      const auto c = realize(t);
      const auto u = universal_invariant_entry(c.iso_classes[0]);
      o.expect(u.uz && *u.uz == target_class(t), "class mismatch for target " + target_class(t).to_string());
      std::ofstream(path) << serialize_complex(c).dump();
      o.expect(cli::cmd_check(path.string(), {}).code == cli::kOk, "realized document failed check");
    }
    std::filesystem::remove(path);
  });

  run(8, "ℓ and λ vanish together", 0, [&](Outcome &o) {
    for (const auto &name : builtin_names()) {
      const auto v = vanishing_report(builtin_complex(name));
      o.expect(v.consistent, name);
    }
    for (const auto &t : targets) o.expect(vanishing_report(realize(t)).consistent, "wedge map");
  });

  run(9, "induction: i_*(ℓ_H) equals ℓ_G of the induced complex", 0, [](Outcome &o) {
    auto check = [&](const EquivariantComplex &c, const FiniteGroup &g, const std::string &g_name, const std::vector<int> &emb) {
      const auto ind = induce(c, g, g_name, emb);
      const auto direct = klein_williams(ind.complex);
      const auto pushed = induce_ell(klein_williams(c), c, g, emb, ind.key_map);
      o.expect(direct.summands.size() == pushed.summands.size(), "summand count");
      for (std::size_t i = 0; i < std::min(direct.summands.size(), pushed.summands.size()); ++i)
        o.expect(direct.summands[i].lumped == pushed.summands[i].lumped,
                 c.name + ": " + class_sum_to_string(direct.summands[i].lumped) + " vs " +
                     class_sum_to_string(pushed.summands[i].lumped));
    };
    for (const auto &name : builtin_names()) {
      const auto c = builtin_complex(name);
      std::vector<int> id(static_cast<std::size_t>(c.group.order()));
      std::iota(id.begin(), id.end(), 0);
      check(c, c.group, c.group_name, id);
    }
    const auto free_point = load_complex_text(R"({"name": "point", "group": "Z1", "iso_classes": [
      {"subgroup_class": ["e"], "component": "p", "chain": [{"degree": 0, "rank": 1, "map": [[1]]}]}]})");
    check(free_point, FiniteGroup::cyclic(2), "Z2", {0});
    check(realize({IntMatrix{{2, 1}, {0, 3}}, IntMatrix{{-1}}}), FiniteGroup::cyclic(2), "Z2", {0});
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
