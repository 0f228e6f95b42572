#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eqlef/errors.hpp"

namespace eqlef {

/// Sorted element indices of a subgroup of some FiniteGroup.
using Subgroup = std::vector<int>;

/// Finite group given by its multiplication table; table[a][b] = a*b.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup({"e"}, {{0}}) {}

  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table)
      : labels_(std::move(labels)), table_(std::move(table)) {
    validate();
  }

  static FiniteGroup trivial() { return FiniteGroup(); }

  /// Z/n with labels e, a, a^2, ... (or e, g for the named "Z2").
  static FiniteGroup cyclic(int n, const std::string &gen = "a") {
    if (n < 1) throw DomainError("cyclic group of order " + std::to_string(n));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
      labels.push_back(i == 0 ? "e" : i == 1 ? gen : gen + "^" + std::to_string(i));
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    return FiniteGroup(std::move(labels), std::move(t));
  }

  /// Klein four-group, elements e, g, h, gh.
  static FiniteGroup klein() {
    // bit 0 = g, bit 1 = h; multiplication is xor
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i ^ j;
    return FiniteGroup({"e", "g", "h", "gh"}, std::move(t));
  }

  /// Symmetric group on n letters, elements in lexicographic order of their
  /// one-line notation (labels like "213"); (p*q)(i) = p(q(i)).
  static FiniteGroup symmetric(int n) {
    if (n < 1 || n > 6) throw DomainError("Sym:n supports 1 <= n <= 6");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < perms.size(); ++k) {
      index[perms[k]] = static_cast<int>(k);
      std::string s;
      for (int v : perms[k]) s += std::to_string(v + 1);
      labels.push_back(s);
    }
    std::vector<std::vector<int>> t(perms.size(), std::vector<int>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
      for (std::size_t b = 0; b < perms.size(); ++b) {
        std::vector<int> c(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
        t[a][b] = index.at(c);
      }
    return FiniteGroup(std::move(labels), std::move(t));
  }

  /// "Z2", "Z2xZ2", "Zn:k", "Sym:n".
  static FiniteGroup builtin(const std::string &name) {
    if (name == "Z1" || name == "trivial") return trivial();
    if (name == "Z2") return cyclic(2, "g");
    if (name == "Z2xZ2") return klein();
    auto number_after = [&](const std::string &prefix) {
      const std::string rest = name.substr(prefix.size());
      if (rest.empty() || rest.size() > 3 || rest.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed group name '" + name + "'");
      return std::stoi(rest);
    };
    if (name.rfind("Zn:", 0) == 0) return cyclic(number_after("Zn:"));
    if (name.rfind("Sym:", 0) == 0) return symmetric(number_after("Sym:"));
    throw ParseError("unknown builtin group '" + name + "'");
  }

  int order() const noexcept { return static_cast<int>(labels_.size()); }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::string &label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  const std::vector<std::vector<int>> &table() const noexcept { return table_; }

  int index_of(const std::string &label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return static_cast<int>(i);
    throw ValidationError("group", "unknown element label '" + label + "'");
  }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = 0; b < a; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool is_subgroup(const std::vector<int> &elems) const {
    if (elems.empty()) return false;
    std::set<int> s(elems.begin(), elems.end());
    for (int a : s)
      if (a < 0 || a >= order()) return false;
    if (!s.count(identity_)) return false;
    for (int a : s)
      for (int b : s)
        if (!s.count(mul(a, inv(b)))) return false;
    return true;
  }

  Subgroup generated_by(const std::vector<int> &gens) const {
    std::set<int> s{identity_};
    std::vector<int> frontier{identity_};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int a : frontier)
        for (int g : gens) {
          int b = mul(a, g);
          if (s.insert(b).second) next.push_back(b);
        }
      frontier = std::move(next);
    }
    return Subgroup(s.begin(), s.end());
  }

  Subgroup whole() const {
    Subgroup all(static_cast<std::size_t>(order()));
    for (int i = 0; i < order(); ++i) all[static_cast<std::size_t>(i)] = i;
    return all;
  }

  Subgroup conjugate(const Subgroup &h, int g) const {
    std::set<int> s;
    for (int a : h) s.insert(mul(mul(g, a), inv(g)));
    return Subgroup(s.begin(), s.end());
  }

  Subgroup normalizer(const Subgroup &h) const {
    Subgroup n;
    for (int g = 0; g < order(); ++g)
      if (conjugate(h, g) == h) n.push_back(g);
    return n;
  }

  /// All subgroups, each as a sorted index set, ordered by size then lexicographically.
  std::vector<Subgroup> all_subgroups() const {
    std::set<Subgroup> found{Subgroup{identity_}};
    std::vector<Subgroup> frontier{Subgroup{identity_}};
    while (!frontier.empty()) {
      std::vector<Subgroup> next;
      for (const auto &h : frontier)
        for (int g = 0; g < order(); ++g) {
          if (std::binary_search(h.begin(), h.end(), g)) continue;
          std::vector<int> gens = h;
          gens.push_back(g);
          Subgroup k = generated_by(gens);
          if (found.insert(k).second) next.push_back(std::move(k));
        }
      frontier = std::move(next);
    }
    std::vector<Subgroup> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), subgroup_less);
    return out;
  }

  static bool subgroup_less(const Subgroup &a, const Subgroup &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }

  /// Conjugacy classes of subgroups as (representative, members); the
  /// representative is the smallest member, classes ordered by representative.
  std::vector<std::pair<Subgroup, std::vector<Subgroup>>> conjugacy_classes_of_subgroups() const {
    std::vector<std::pair<Subgroup, std::vector<Subgroup>>> classes;
    std::set<Subgroup> seen;
    for (const auto &h : all_subgroups()) {
      if (seen.count(h)) continue;
      std::set<Subgroup> members;
      for (int g = 0; g < order(); ++g) members.insert(conjugate(h, g));
      std::vector<Subgroup> m(members.begin(), members.end());
      std::sort(m.begin(), m.end(), subgroup_less);
      seen.insert(m.begin(), m.end());
      classes.emplace_back(m.front(), std::move(m));
    }
    return classes;
  }

  /// Canonical representative of the conjugacy class of h.
  Subgroup class_representative(const Subgroup &h) const {
    Subgroup best = h;
    for (int g = 0; g < order(); ++g) {
      Subgroup c = conjugate(h, g);
      if (subgroup_less(c, best)) best = std::move(c);
    }
    return best;
  }

  std::string subgroup_label(const Subgroup &h) const {
    std::string s = "{";
    for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + label(h[i]);
    return s + "}";
  }

  friend bool operator==(const FiniteGroup &a, const FiniteGroup &b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  void validate() {
    const std::size_t n = labels_.size();
    if (n == 0) throw ValidationError("group", "empty group");
    if (table_.size() != n) throw ValidationError("group", "table has wrong number of rows");
    for (const auto &row : table_) {
      if (row.size() != n) throw ValidationError("group", "table row has wrong length");
      for (int v : row)
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw ValidationError("group", "table entry out of range");
    }
    std::set<std::string> uniq(labels_.begin(), labels_.end());
    if (uniq.size() != n) throw ValidationError("group", "duplicate element labels");
    identity_ = -1;
    for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a)
        ok = table_[e][a] == static_cast<int>(a) && table_[a][e] == static_cast<int>(a);
      if (ok) identity_ = static_cast<int>(e);
    }
    if (identity_ < 0) throw ValidationError("group", "no identity element");
    inverse_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a][b] == identity_) {
          if (table_[b][a] != identity_) throw ValidationError("group", "left and right inverses differ");
          inverse_[a] = static_cast<int>(b);
        }
    for (std::size_t a = 0; a < n; ++a)
      if (inverse_[a] < 0) throw ValidationError("group", "element '" + labels_[a] + "' has no inverse");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[static_cast<std::size_t>(table_[a][b])][c] != table_[a][static_cast<std::size_t>(table_[b][c])])
            throw ValidationError("group", "multiplication is not associative at (" + labels_[a] + "," + labels_[b] +
                                               "," + labels_[c] + ")");
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// N_G(H)/H with the coset of each quotient element.
struct WeylGroup {
  FiniteGroup group;
  std::vector<int> coset_representatives;  // smallest element of each coset, in G
  std::vector<Subgroup> cosets;
};

inline WeylGroup weyl_group(const FiniteGroup &g, const Subgroup &h) {
  if (!g.is_subgroup(h)) throw ValidationError("weyl_group", "not a subgroup: " + g.subgroup_label(h));
  Subgroup hs = h;
  std::sort(hs.begin(), hs.end());
  const Subgroup n = g.normalizer(hs);
  WeylGroup w;
  std::map<int, int> coset_of;  // element of N -> coset index
  for (int a : n) {
    if (coset_of.count(a)) continue;
    Subgroup c;
    for (int x : hs) c.push_back(g.mul(a, x));
    std::sort(c.begin(), c.end());
    const int idx = static_cast<int>(w.cosets.size());
    for (int x : c) coset_of[x] = idx;
    w.coset_representatives.push_back(c.front());
    w.cosets.push_back(std::move(c));
  }
  const std::size_t m = w.cosets.size();
  std::vector<std::string> labels;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(g.label(w.coset_representatives[i]));
    for (std::size_t j = 0; j < m; ++j)
      t[i][j] = coset_of.at(g.mul(w.coset_representatives[i], w.coset_representatives[j]));
  }
  w.group = FiniteGroup(std::move(labels), std::move(t));
  return w;
}

/// Checks that `map` (indexed by elements of h) is an injective homomorphism h -> g.
inline void check_embedding(const FiniteGroup &h, const FiniteGroup &g, const std::vector<int> &map) {
  if (map.size() != static_cast<std::size_t>(h.order()))
    throw DomainError("embedding: expected " + std::to_string(h.order()) + " images");
  std::set<int> image;
  for (int v : map) {
    if (v < 0 || v >= g.order()) throw DomainError("embedding: image index out of range");
    image.insert(v);
  }
  if (image.size() != map.size()) throw DomainError("embedding is not injective");
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      if (map[static_cast<std::size_t>(h.mul(a, b))] !=
          g.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
        throw DomainError("embedding is not a homomorphism");
}

}  // namespace eqlef
