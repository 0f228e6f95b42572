#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "eqlef/corpus.hpp"
#include "eqlef/factor.hpp"
#include "eqlef/realize.hpp"
#include "eqlef/report.hpp"

namespace eqlef::cli {

enum ExitCode { kOk = 0, kInvalid = 1, kInternal = 2 };

struct CommandOutput {
  int code = kOk;
  std::string out;
  std::string err;
};

struct Options {
  bool json = false;
  bool verbose = false;
};

namespace detail {

inline std::string superscript(unsigned n) {
  static const char *digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char ch : std::to_string(n)) s += digits[ch - '0'];
  return s;
}

inline std::string factorization_to_string(const Factorization &f) {
  std::string s;
  if (f.unit != 1 || f.factors.empty()) s = f.unit == -1 ? "−" : (f.unit < 0 ? "−" + iabs(f.unit).str() : f.unit.str());
  for (const auto &[p, e] : f.factors) s += "(" + p.to_string() + ")" + (e > 1 ? superscript(e) : "");
  return s;
}

inline Json factorization_json(const Factorization &f) {
  Json j;
  j["unit"] = io::write_integer(f.unit);
  Json fs = Json::array();
  for (const auto &[p, e] : f.factors) fs.push_back({{"factor", p.to_string()}, {"multiplicity", e}});
  j["factors"] = fs;
  return j;
}

inline Json parse_json(const std::string &text, const std::string &what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(what + ": invalid JSON (" + e.what() + ")");
  }
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A builtin corpus name or a path to a complex document.
inline EquivariantComplex load_source(const std::string &source) {
  for (const auto &n : builtin_names())
    if (n == source && !std::filesystem::exists(source)) return builtin_complex(n);
  return load_complex_text(read_file(source));
}

inline std::string dump(const Json &j) { return j.dump(2) + "\n"; }

template <class F>
CommandOutput guarded(F &&f) {
  CommandOutput r;
  try {
    f(r);
  } catch (const ValidationError &e) {
    r = {kInvalid, "", std::string("validation error: ") + e.what() + "\n"};
  } catch (const ParseError &e) {
    r = {kInvalid, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const DimensionError &e) {
    r = {kInvalid, "", std::string("dimension error: ") + e.what() + "\n"};
  } catch (const DomainError &e) {
    r = {kInvalid, "", std::string("domain error: ") + e.what() + "\n"};
  } catch (const nlohmann::json::exception &e) {
    r = {kInvalid, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const std::exception &e) {
    r = {kInternal, "", std::string("internal error: ") + e.what() + "\n"};
  }
  return r;
}

}  // namespace detail

/// U(Z) class of a square integer matrix given as JSON, e.g. "[[0,-1],[1,0]]".
inline CommandOutput cmd_class(const std::string &matrix_text, const Options &opt) {
  return detail::guarded([&](CommandOutput &r) {
    const IntMatrix a = io::read_square_matrix(detail::parse_json(matrix_text, "matrix"), "matrix");
    const UZClass cls = class_of_matrix(a);
    const IntPolynomial p = a.rows() ? char_poly(a) : IntPolynomial::constant(1);
    const Factorization f = factor_over_Q(p);
    if (opt.json) {
      Json j;
      j["class"] = cls.to_string();
      j["char_poly"] = p.to_string();
      j["factorization"] = detail::factorization_json(f);
      r.out = detail::dump(j);
    } else {
      r.out = cls.to_string() + "\n";
      if (opt.verbose || a.rows() > 0)
        r.out += "char poly " + p.to_string() + " = " + detail::factorization_to_string(f) + "\n";
    }
  });
}

/// Factorization over Q of a polynomial such as "x^4-1".
inline CommandOutput cmd_factor(const std::string &poly_text, const Options &opt) {
  return detail::guarded([&](CommandOutput &r) {
    const IntPolynomial p = parse_polynomial(poly_text);
    const Factorization f = factor_over_Q(p);
    if (opt.json) {
      Json j = detail::factorization_json(f);
      j["input"] = p.to_string();
      r.out = detail::dump(j);
    } else {
      r.out = p.to_string() + " = " + detail::factorization_to_string(f) + "\n";
    }
  });
}

inline CommandOutput report_for(const EquivariantComplex &c, const Options &opt) {
  CommandOutput r;
  const InvariantReport rep = compute_report(c);
  r.out = opt.json ? detail::dump(report_json(rep, c.group)) : report_text(rep, opt.verbose);
  return r;
}

/// Full invariant report for a complex document or builtin name.
inline CommandOutput cmd_invariants(const std::string &source, const Options &opt) {
  return detail::guarded([&](CommandOutput &r) { r = report_for(detail::load_source(source), opt); });
}

inline CommandOutput cmd_example(const std::string &name, const Options &opt) {
  return detail::guarded([&](CommandOutput &r) { r = report_for(builtin_complex(name), opt); });
}

/// Validation only.
inline CommandOutput cmd_check(const std::string &source, const Options &opt) {
  return detail::guarded([&](CommandOutput &r) {
    const EquivariantComplex c = detail::load_source(source);
    if (opt.json) {
      r.out = detail::dump(Json{{"valid", true}, {"name", c.name}, {"iso_classes", c.iso_classes.size()}});
    } else {
      r.out = "ok: " + (c.name.empty() ? std::string("complex") : c.name) + " with " +
              std::to_string(c.iso_classes.size()) + " iso class(es) and " + std::to_string(c.fixed_points.size()) +
              " fixed point(s)\n";
    }
  });
}

/// Target {"a": [[...]], "b_prime": [[...]]}; either may be [] or omitted.
inline CommandOutput cmd_realize(const std::string &target_text, const Options &opt) {
  return detail::guarded([&](CommandOutput &r) {
    const Json t = detail::parse_json(target_text, "target");
    if (!t.is_object()) throw ParseError("target: expected an object with keys a and b_prime");
    RealizationTarget target;
    target.a = t.contains("a") ? io::read_square_matrix(t["a"], "target.a") : IntMatrix(0, 0);
    target.b_prime = t.contains("b_prime") ? io::read_square_matrix(t["b_prime"], "target.b_prime") : IntMatrix(0, 0);
    const EquivariantComplex c = realize(target);
    const Json doc = serialize_complex(c);
    load_complex(doc);  // the emitted document must pass validation
    const KClassEntry u = universal_invariant_entry(c.iso_classes.front());
    const UZClass expected = target_class(target);
    if (!u.uz || !(*u.uz == expected))
      throw std::logic_error("realized class " + (u.uz ? u.uz->to_string() : "?") + " differs from target " +
                             expected.to_string());
    if (opt.json) {
      r.out = detail::dump(Json{{"class", expected.to_string()}, {"verified", true}, {"complex", doc}});
    } else {
      r.out = "class " + expected.to_string() + " (verified)\n" + detail::dump(doc);
    }
  });
}

}  // namespace eqlef::cli
