#pragma once

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

#include "eqlef/complex.hpp"

namespace eqlef {

using Json = nlohmann::ordered_json;

namespace io {

// Integers travel as JSON numbers inside the 53-bit safe range and as
// decimal strings outside it.
inline Integer read_integer(const Json &j, const std::string &where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long long>()) : Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const ParseError &) {
      throw ParseError(where + ": '" + j.get<std::string>() + "' is not an integer");
    }
  }
  throw ParseError(where + ": expected an integer, got " + j.dump());
}

inline Json write_integer(const Integer &a) {
  static const Integer limit = Integer(1) << 53;
  if (a < limit && a > -limit) return Json(static_cast<long long>(a));
  return Json(a.str());
}

inline const Json &field(const Json &obj, const char *name, const std::string &where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + name + "'");
  return *it;
}

inline const Json &array(const Json &j, const std::string &where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

inline std::string read_string(const Json &j, const std::string &where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

inline IntVector read_vector(const Json &j, const std::string &where) {
  IntVector v;
  for (const auto &x : array(j, where)) v.push_back(read_integer(x, where));
  return v;
}

inline Json write_vector(const IntVector &v) {
  Json a = Json::array();
  for (const auto &x : v) a.push_back(write_integer(x));
  return a;
}

/// Integer matrix of known shape. A rows×0 matrix may be written as [] or as
/// a list of empty rows.
inline IntMatrix read_matrix(const Json &j, std::size_t rows, std::size_t cols, const std::string &where) {
  const Json &a = array(j, where);
  if (a.empty() && (rows == 0 || cols == 0)) return IntMatrix(rows, cols);
  if (a.size() != rows) throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json &r = array(a[i], where);
    if (r.size() != cols) throw ParseError(where + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = read_integer(r[c], where);
  }
  return m;
}

/// Square integer matrix of any size; "[]" is 0×0.
inline IntMatrix read_square_matrix(const Json &j, const std::string &where) {
  const Json &a = array(j, where);
  return read_matrix(a, a.size(), a.size(), where);
}

inline Json write_matrix(const IntMatrix &m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(write_vector(m.row(i)));
  return a;
}

inline FiniteGroup read_group(const Json &j, std::string *builtin_name, const std::string &where) {
  if (j.is_string()) {
    if (builtin_name) *builtin_name = j.get<std::string>();
    return FiniteGroup::builtin(j.get<std::string>());
  }
  std::vector<std::string> labels;
  for (const auto &l : array(field(j, "labels", where), where + ".labels")) labels.push_back(read_string(l, where + ".labels"));
  std::vector<std::vector<int>> table;
  for (const auto &row : array(field(j, "table", where), where + ".table")) {
    std::vector<int> r;
    for (const auto &x : array(row, where + ".table")) {
      if (!x.is_number_integer()) throw ParseError(where + ".table: entries must be element indices");
      r.push_back(x.get<int>());
    }
    table.push_back(std::move(r));
  }
  if (builtin_name) builtin_name->clear();
  return FiniteGroup(std::move(labels), std::move(table));
}

inline Json write_group(const FiniteGroup &g, const std::string &builtin_name) {
  if (!builtin_name.empty()) return Json(builtin_name);
  Json labels = Json::array(), table = Json::array();
  for (const auto &l : g.labels()) labels.push_back(l);
  for (const auto &row : g.table()) table.push_back(row);
  return Json{{"labels", labels}, {"table", table}};
}

inline Subgroup read_subgroup(const Json &j, const FiniteGroup &g, const std::string &where) {
  Subgroup s;
  for (const auto &l : array(j, where)) {
    try {
      s.push_back(g.index_of(read_string(l, where)));
    } catch (const ValidationError &e) {
      throw ValidationError(where, e.what());
    }
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline Json write_subgroup(const Subgroup &s, const FiniteGroup &g) {
  Json a = Json::array();
  for (int x : s) a.push_back(g.label(x));
  return a;
}

/// Group ring entry: an integer (multiple of the identity) or a list of
/// {"coeff", "vector", "weyl_elem"} terms.
inline GroupRingElement read_entry(const Json &j, const AutGroupPtr &aut, const std::string &where) {
  if (j.is_number_integer() || j.is_string()) return GroupRingElement::scalar(aut, read_integer(j, where));
  GroupRingElement e(aut);
  for (const auto &t : array(j, where)) {
    Integer c = t.contains("coeff") ? read_integer(t["coeff"], where + ".coeff") : Integer(1);
    IntVector v = t.contains("vector") ? read_vector(t["vector"], where + ".vector") : IntVector(aut->pi1_rank());
    int w = aut->weyl().identity();
    if (t.contains("weyl_elem")) {
      try {
        w = aut->weyl().index_of(read_string(t["weyl_elem"], where + ".weyl_elem"));
      } catch (const ValidationError &err) {
        throw ValidationError(where, err.what());
      }
    }
    if (v.size() != aut->pi1_rank())
      throw ValidationError(where, "vector of length " + std::to_string(v.size()) + ", expected pi1_rank " +
                                       std::to_string(aut->pi1_rank()));
    e.add_term({std::move(v), w}, c);
  }
  return e;
}

inline Json write_entry(const GroupRingElement &e) {
  const AutGroup &aut = *e.aut();
  if (e.is_zero()) return Json(0);
  if (e.terms().size() == 1 && e.terms().begin()->first == aut.identity()) return write_integer(e.terms().begin()->second);
  Json a = Json::array();
  for (const auto &[g, c] : e.terms()) {
    Json t;
    t["coeff"] = write_integer(c);
    t["vector"] = write_vector(g.v);
    t["weyl_elem"] = aut.weyl().label(g.w);
    a.push_back(t);
  }
  return a;
}

inline GroupRingMatrix read_gr_matrix(const Json &j, const AutGroupPtr &aut, std::size_t rows, std::size_t cols,
                                      const std::string &where) {
  const Json &a = array(j, where);
  GroupRingMatrix m(aut, rows, cols);
  if (a.empty() && (rows == 0 || cols == 0)) return m;
  if (a.size() != rows) throw ValidationError(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(a.size()));
  for (std::size_t i = 0; i < rows; ++i) {
    const Json &r = array(a[i], where);
    if (r.size() != cols)
      throw ValidationError(where, "row " + std::to_string(i) + " has " + std::to_string(r.size()) + " entries, expected " +
                                       std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = read_entry(r[c], aut, where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
  }
  return m;
}

inline Json write_gr_matrix(const GroupRingMatrix &m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(write_entry(m(i, c)));
    a.push_back(r);
  }
  return a;
}

inline IsoClassData read_iso_class(const Json &j, const FiniteGroup &g, std::size_t idx) {
  const std::string where = "iso_classes[" + std::to_string(idx) + "]";
  IsoClassData d;
  d.key.subgroup = read_subgroup(field(j, "subgroup_class", where), g, where + ".subgroup_class");
  d.key.component = read_string(field(j, "component", where), where + ".component");
  if (j.contains("extension") && read_string(j["extension"], where + ".extension") != "split")
    throw ValidationError(where, "only split extensions Z^k ⋊ W are supported");
  if (j.contains("phi_fixes_weyl") && !(j["phi_fixes_weyl"].is_boolean() && j["phi_fixes_weyl"].get<bool>()))
    throw ValidationError(where, "phi must fix the Weyl component");
  std::size_t k = 0;
  if (j.contains("pi1_rank")) {
    if (!j["pi1_rank"].is_number_unsigned()) throw ParseError(where + ".pi1_rank: expected a nonnegative integer");
    k = j["pi1_rank"].get<std::size_t>();
  }
  FiniteGroup w = j.contains("weyl") ? read_group(j["weyl"], nullptr, where + ".weyl") : FiniteGroup::trivial();
  std::vector<IntMatrix> action;
  if (j.contains("action")) {
    for (const auto &m : array(j["action"], where + ".action")) action.push_back(read_matrix(m, k, k, where + ".action"));
  } else {
    action.assign(static_cast<std::size_t>(w.order()), IntMatrix::identity(k));
  }
  d.aut = std::make_shared<const AutGroup>(k, std::move(w), std::move(action));
  d.twist.phi_pi = j.contains("phi_pi") ? read_matrix(j["phi_pi"], k, k, where + ".phi_pi") : IntMatrix::identity(k);

  const Json &chain = array(field(j, "chain", where), where + ".chain");
  std::vector<std::pair<int, const Json *>> pending;
  for (std::size_t c = 0; c < chain.size(); ++c) {
    const std::string cw = where + ".chain[" + std::to_string(c) + "]";
    ChainDegree cd;
    const Json &deg = field(chain[c], "degree", cw);
    if (!deg.is_number_integer()) throw ParseError(cw + ".degree: expected an integer");
    cd.degree = deg.get<int>();
    const Json &rank = field(chain[c], "rank", cw);
    if (!rank.is_number_unsigned()) throw ParseError(cw + ".rank: expected a nonnegative integer");
    cd.rank = rank.get<std::size_t>();
    if (chain[c].contains("relative_mask")) {
      for (const auto &b : array(chain[c]["relative_mask"], cw + ".relative_mask")) {
        if (!b.is_boolean()) throw ParseError(cw + ".relative_mask: expected booleans");
        cd.relative_mask.push_back(b.get<bool>());
      }
    } else {
      cd.relative_mask.assign(cd.rank, false);
    }
    if (chain[c].contains("isotropy"))
      for (const auto &s : array(chain[c]["isotropy"], cw + ".isotropy"))
        cd.isotropy.push_back(read_subgroup(s, d.aut->weyl(), cw + ".isotropy"));
    cd.map = read_gr_matrix(field(chain[c], "map", cw), d.aut, cd.rank, cd.rank, cw + ".map");
    d.chain.push_back(std::move(cd));
    if (chain[c].contains("boundary")) pending.emplace_back(static_cast<int>(c), &chain[c]["boundary"]);
  }
  // Boundaries need the rank one degree down.
  for (const auto &[c, bj] : pending) {
    ChainDegree &cd = d.chain[static_cast<std::size_t>(c)];
    const std::string cw = where + ".chain[" + std::to_string(c) + "].boundary";
    const std::size_t below = d.rank(cd.degree - 1);
    cd.boundary = read_gr_matrix(*bj, d.aut, cd.rank, below, cw);
  }
  return d;
}

}  // namespace io

/// Parses and validates a complex document.
inline EquivariantComplex load_complex(const Json &doc) {
  EquivariantComplex c;
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  if (doc.contains("name")) c.name = io::read_string(doc["name"], "name");
  if (doc.contains("description")) c.description = io::read_string(doc["description"], "description");
  c.group = io::read_group(io::field(doc, "group", "document"), &c.group_name, "group");
  if (doc.contains("iso_classes")) {
    const Json &arr = io::array(doc["iso_classes"], "iso_classes");
    for (std::size_t i = 0; i < arr.size(); ++i) c.iso_classes.push_back(io::read_iso_class(arr[i], c.group, i));
  }
  if (doc.contains("fixed_points")) {
    const Json &arr = io::array(doc["fixed_points"], "fixed_points");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string w = "fixed_points[" + std::to_string(i) + "]";
      const Json &f = arr[i];
      FixedPointDatum fp;
      fp.key.subgroup = io::read_subgroup(io::field(f, "subgroup_class", w), c.group, w + ".subgroup_class");
      fp.key.component = io::read_string(io::field(f, "component", w), w + ".component");
      fp.point = io::read_string(io::field(f, "point", w), w + ".point");
      fp.orbit = f.contains("orbit") ? io::read_string(f["orbit"], w + ".orbit") : fp.point;
      fp.index = io::read_integer(io::field(f, "index", w), w + ".index");
      if (f.contains("path_class")) fp.path_class = io::read_vector(f["path_class"], w + ".path_class");
      c.fixed_points.push_back(std::move(fp));
    }
  }
  validate_complex(c);
  validate_fixed_point_data(c, c.fixed_points);
  return c;
}

inline EquivariantComplex load_complex_text(const std::string &text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return load_complex(doc);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

inline Json serialize_complex(const EquivariantComplex &c) {
  Json doc;
  doc["name"] = c.name;
  doc["description"] = c.description;
  doc["group"] = io::write_group(c.group, c.group_name);
  Json classes = Json::array();
  for (const auto &d : c.iso_classes) {
    const AutGroup &aut = *d.aut;
    Json j;
    j["subgroup_class"] = io::write_subgroup(d.key.subgroup, c.group);
    j["component"] = d.key.component;
    j["pi1_rank"] = aut.pi1_rank();
    j["weyl"] = io::write_group(aut.weyl(), "");
    j["extension"] = "split";
    j["phi_fixes_weyl"] = true;
    Json action = Json::array();
    for (const auto &m : aut.action()) action.push_back(io::write_matrix(m));
    j["action"] = action;
    j["phi_pi"] = io::write_matrix(d.twist.phi_pi);
    Json chain = Json::array();
    for (const auto &cd : d.chain) {
      Json e;
      e["degree"] = cd.degree;
      e["rank"] = cd.rank;
      Json mask = Json::array();
      for (bool b : cd.relative_mask) mask.push_back(b);
      e["relative_mask"] = mask;
      Json iso = Json::array();
      for (const auto &s : cd.isotropy) iso.push_back(io::write_subgroup(s, aut.weyl()));
      e["isotropy"] = iso;
      e["map"] = io::write_gr_matrix(cd.map);
      if (cd.boundary) e["boundary"] = io::write_gr_matrix(*cd.boundary);
      chain.push_back(e);
    }
    j["chain"] = chain;
    classes.push_back(j);
  }
  doc["iso_classes"] = classes;
  Json fps = Json::array();
  for (const auto &fp : c.fixed_points) {
    Json f;
    f["subgroup_class"] = io::write_subgroup(fp.key.subgroup, c.group);
    f["component"] = fp.key.component;
    f["point"] = fp.point;
    f["orbit"] = fp.orbit;
    f["index"] = io::write_integer(fp.index);
    f["path_class"] = io::write_vector(fp.path_class);
    fps.push_back(f);
  }
  doc["fixed_points"] = fps;
  return doc;
}

/// Structural equality of validated complexes (used for round trips).
inline bool same_complex(const EquivariantComplex &a, const EquivariantComplex &b) {
  return serialize_complex(a).dump() == serialize_complex(b).dump();
}

}  // namespace eqlef
