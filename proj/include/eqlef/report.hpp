#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eqlef/complex_io.hpp"
#include "eqlef/invariants.hpp"

namespace eqlef {

struct ComponentReport {
  IsoClassKey key;
  std::string label;
  KClassEntry u;
  ClassSum lambda;
  ClassSum reidemeister;
  Integer lefschetz;
  std::optional<ClassSum> from_fixed_points;  // present when fixed point data was supplied
  ClassSum ell;
};

struct InvariantReport {
  std::string name;
  std::string group;
  std::vector<ComponentReport> components;
  EllInvariant ell;
  std::vector<std::pair<Subgroup, ClassSum>> lambda_by_subgroup;
  VanishingReport vanishing;
  std::vector<std::string> subgroup_labels;  // parallel to ell.summands
};

inline std::string kclass_to_string(const KClassEntry &e) {
  if (e.terms.empty()) return "0";
  std::string s;
  for (const auto &t : e.terms) {
    if (s.empty())
      s += t.coeff < 0 ? "−" : "";
    else
      s += t.coeff < 0 ? " − " : " + ";
    const Integer mag = iabs(t.coeff);
    s += (mag == 1 ? "" : mag.str() + "·") + t.matrix.to_string();
  }
  return s;
}

inline InvariantReport compute_report(const EquivariantComplex &c) {
  InvariantReport r;
  r.name = c.name;
  r.group = c.group_name.empty() ? "order " + std::to_string(c.group.order()) : c.group_name;
  const LambdaVector lambda = lambda_invariant(c);
  r.ell = klein_williams(c);
  for (const auto &d : c.iso_classes) {
    ComponentReport cr;
    cr.key = d.key;
    cr.label = key_label(c.group, d.key);
    cr.u = universal_invariant_entry(d);
    cr.lambda = *lambda.find(d.key);
    cr.reidemeister = reidemeister_trace(d);
    cr.lefschetz = lefschetz_number(d);
    const bool has_points = std::any_of(c.fixed_points.begin(), c.fixed_points.end(),
                                        [&](const FixedPointDatum &fp) { return fp.key == d.key; });
    if (has_points) cr.from_fixed_points = reidemeister_from_fixed_points(c, d);
    cr.ell = ell_contribution(c.group, d);
    r.components.push_back(std::move(cr));
  }
  for (const auto &s : r.ell.summands) {
    r.lambda_by_subgroup.emplace_back(s.subgroup, lambda.lumped(s.subgroup));
    r.subgroup_labels.push_back(c.group.subgroup_label(s.subgroup));
  }
  r.vanishing = vanishing_report(r.ell, lambda);
  return r;
}

namespace detail {

inline Json class_sum_json(const ClassSum &s) {
  Json a = Json::array();
  for (const auto &[k, c] : s) {
    Json e;
    e["class"] = io::write_vector(k);
    e["label"] = AutGroup::vector_label(k);
    e["coeff"] = io::write_integer(c);
    a.push_back(e);
  }
  return a;
}

inline std::size_t display_width(const std::string &s) {
  std::size_t w = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++w;
  return w;
}

inline std::string pad(const std::string &s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

}  // namespace detail

inline Json report_json(const InvariantReport &r, const FiniteGroup &g) {
  Json doc;
  doc["complex"] = r.name;
  doc["group"] = r.group;
  Json comps = Json::array();
  for (const auto &c : r.components) {
    Json j;
    j["subgroup_class"] = io::write_subgroup(c.key.subgroup, g);
    j["component"] = c.key.component;
    j["label"] = c.label;
    Json u;
    Json terms = Json::array();
    for (const auto &t : c.u.terms) {
      Json tj;
      tj["coeff"] = io::write_integer(t.coeff);
      tj["matrix"] = io::write_gr_matrix(t.matrix);
      terms.push_back(tj);
    }
    u["terms"] = terms;
    u["rendered"] = kclass_to_string(c.u);
    u["uz"] = c.u.uz ? Json(c.u.uz->to_string()) : Json(nullptr);
    j["u"] = u;
    j["lambda"] = detail::class_sum_json(c.lambda);
    j["reidemeister"] = detail::class_sum_json(c.reidemeister);
    j["lefschetz"] = io::write_integer(c.lefschetz);
    j["reidemeister_from_fixed_points"] = c.from_fixed_points ? detail::class_sum_json(*c.from_fixed_points) : Json(nullptr);
    j["ell"] = detail::class_sum_json(c.ell);
    comps.push_back(j);
  }
  doc["iso_classes"] = comps;
  Json ell = Json::array();
  for (std::size_t i = 0; i < r.ell.summands.size(); ++i) {
    const auto &s = r.ell.summands[i];
    Json j;
    j["subgroup"] = io::write_subgroup(s.subgroup, g);
    j["label"] = r.subgroup_labels[i];
    j["ell"] = detail::class_sum_json(s.lumped);
    j["ell_rendered"] = class_sum_to_string(s.lumped);
    j["lambda"] = detail::class_sum_json(r.lambda_by_subgroup[i].second);
    j["lambda_rendered"] = class_sum_to_string(r.lambda_by_subgroup[i].second);
    ell.push_back(j);
  }
  doc["by_subgroup"] = ell;
  doc["vanishing"] = {{"ell_zero", r.vanishing.ell_zero},
                      {"lambda_zero", r.vanishing.lambda_zero},
                      {"consistent", r.vanishing.consistent}};
  return doc;
}

inline std::string report_text(const InvariantReport &r, bool verbose = false) {
  std::ostringstream out;
  out << "complex " << (r.name.empty() ? "(unnamed)" : r.name) << ", group " << r.group << "\n\n";
  const std::vector<std::string> head{"iso class", "L", "R", "λ", "ℓ part", "u"};
  std::vector<std::vector<std::string>> rows{head};
  for (const auto &c : r.components)
    rows.push_back({c.label, c.lefschetz.str(), class_sum_to_string(c.reidemeister), class_sum_to_string(c.lambda),
                    class_sum_to_string(c.ell), kclass_to_string(c.u)});
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto &row : rows)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], detail::display_width(row[k]));
  for (const auto &row : rows) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) line += k + 1 == row.size() ? row[k] : detail::pad(row[k], width[k] + 2);
    out << line << "\n";
  }
  out << "\nper subgroup class:\n";
  std::size_t label_width = 0;
  for (const auto &l : r.subgroup_labels) label_width = std::max(label_width, detail::display_width(l) + 2);
  for (std::size_t i = 0; i < r.ell.summands.size(); ++i)
    out << "  " << detail::pad("(" + r.subgroup_labels[i] + ")", label_width) << "  ℓ = " << class_sum_to_string(r.ell.summands[i].lumped)
        << "   λ = " << class_sum_to_string(r.lambda_by_subgroup[i].second) << "\n";
  if (verbose) {
    for (const auto &c : r.components) {
      if (c.u.uz) out << "  U(Z) image at " << c.label << ": " << c.u.uz->to_string() << "\n";
      if (c.from_fixed_points)
        out << "  R from fixed points at " << c.label << ": " << class_sum_to_string(*c.from_fixed_points) << "\n";
    }
  }
  out << "\nvanishing: ℓ " << (r.vanishing.ell_zero ? "= 0" : "≠ 0") << ", λ " << (r.vanishing.lambda_zero ? "= 0" : "≠ 0")
      << ", " << (r.vanishing.consistent ? "consistent" : "INCONSISTENT") << "\n";
  return out.str();
}

}  // namespace eqlef
