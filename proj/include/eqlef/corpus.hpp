#pragma once

#include <string>
#include <vector>

#include "eqlef/complex_io.hpp"

namespace eqlef {

namespace corpus_text {

// Z2 reflecting S² across the equatorial plane; f = g.
inline constexpr const char *example1 = R"json({
  "name": "example1",
  "description": "Z2 acting on S^2 by reflection in the equatorial plane, f = g",
  "group": "Z2",
  "iso_classes": [
    {
      "subgroup_class": ["e"], "component": "x",
      "pi1_rank": 0, "weyl": "Z2", "action": [[], []], "phi_pi": [],
      "chain": [
        {"degree": 0, "rank": 2, "relative_mask": [true, true], "isotropy": [["e", "g"], ["e", "g"]],
         "map": [[1, 0], [0, 1]]},
        {"degree": 1, "rank": 2, "relative_mask": [true, true], "isotropy": [["e", "g"], ["e", "g"]],
         "map": [[1, 0], [0, 1]], "boundary": [[-1, 1], [1, -1]]},
        {"degree": 2, "rank": 1, "relative_mask": [false],
         "map": [[[{"coeff": -1, "vector": [], "weyl_elem": "g"}]]]}
      ]
    },
    {
      "subgroup_class": ["e", "g"], "component": "y",
      "pi1_rank": 1, "phi_pi": [[1]],
      "chain": [
        {"degree": 0, "rank": 2, "relative_mask": [false, false], "map": [[1, 0], [0, 1]]},
        {"degree": 1, "rank": 2, "relative_mask": [false, false], "map": [[1, 0], [0, 1]],
         "boundary": [[-1, 1], [[{"coeff": 1, "vector": [1], "weyl_elem": "e"}], -1]]}
      ]
    }
  ],
  "fixed_points": []
})json";

// Z2 on S³ by the last-coordinate sign flip; f flips the first three.
inline constexpr const char *example2 = R"json({
  "name": "example2",
  "description": "Z2 acting on S^3 by (x1,x2,x3,-x4), f = (-x1,-x2,-x3,x4)",
  "group": "Z2",
  "iso_classes": [
    {
      "subgroup_class": ["e"], "component": "x",
      "pi1_rank": 0, "weyl": "Z2", "action": [[], []], "phi_pi": [],
      "chain": [
        {"degree": 0, "rank": 2, "relative_mask": [true, true], "isotropy": [["e", "g"], ["e", "g"]],
         "map": [[0, 1], [1, 0]]},
        {"degree": 1, "rank": 2, "relative_mask": [true, true], "isotropy": [["e", "g"], ["e", "g"]],
         "map": [[0, 1], [1, 0]], "boundary": [[-1, 1], [1, -1]]},
        {"degree": 2, "rank": 2, "relative_mask": [true, true], "isotropy": [["e", "g"], ["e", "g"]],
         "map": [[0, 1], [1, 0]], "boundary": [[1, 1], [1, 1]]},
        {"degree": 3, "rank": 1, "relative_mask": [false], "map": [[-1]], "boundary": [[1, -1]]}
      ]
    },
    {
      "subgroup_class": ["e", "g"], "component": "y",
      "pi1_rank": 0, "phi_pi": [],
      "chain": [
        {"degree": 0, "rank": 2, "relative_mask": [false, false], "map": [[0, 1], [1, 0]]},
        {"degree": 1, "rank": 2, "relative_mask": [false, false], "map": [[0, 1], [1, 0]],
         "boundary": [[-1, 1], [1, -1]]},
        {"degree": 2, "rank": 2, "relative_mask": [false, false], "map": [[0, 1], [1, 0]],
         "boundary": [[1, 1], [1, 1]]}
      ]
    }
  ],
  "fixed_points": [
    {"subgroup_class": ["e"], "component": "x", "point": "(0,0,0,1)", "orbit": "poles", "index": 1, "path_class": []},
    {"subgroup_class": ["e"], "component": "x", "point": "(0,0,0,-1)", "orbit": "poles", "index": 1, "path_class": []}
  ]
})json";

// Klein four-group on S² with two perpendicular reflection circles; f = id.
inline constexpr const char *example3 = R"json({
  "name": "example3",
  "description": "Z2xZ2 acting on S^2 by two reflections with fixed circles meeting in {a,b}, f = id",
  "group": "Z2xZ2",
  "iso_classes": [
    {
      "subgroup_class": ["e"], "component": "x",
      "pi1_rank": 0, "weyl": "Z2xZ2", "action": [[], [], [], []], "phi_pi": [],
      "chain": [
        {"degree": 0, "rank": 2, "relative_mask": [true, true],
         "isotropy": [["e", "g", "h", "gh"], ["e", "g", "h", "gh"]], "map": [[1, 0], [0, 1]]},
        {"degree": 1, "rank": 2, "relative_mask": [true, true], "isotropy": [["e", "h"], ["e", "g"]],
         "map": [[1, 0], [0, 1]], "boundary": [[-1, 1], [-1, 1]]},
        {"degree": 2, "rank": 1, "relative_mask": [false], "map": [[1]], "boundary": [[1, -1]]}
      ]
    },
    {
      "subgroup_class": ["e", "h"], "component": "y",
      "pi1_rank": 1, "weyl": "Z2", "action": [[[1]], [[-1]]], "phi_pi": [[1]],
      "chain": [
        {"degree": 0, "rank": 2, "relative_mask": [true, true], "isotropy": [["e", "g"], ["e", "g"]],
         "map": [[1, 0], [0, 1]]},
        {"degree": 1, "rank": 1, "relative_mask": [false], "map": [[1]]}
      ]
    },
    {
      "subgroup_class": ["e", "g"], "component": "z",
      "pi1_rank": 1, "weyl": {"labels": ["e", "h"], "table": [[0, 1], [1, 0]]}, "action": [[[1]], [[-1]]],
      "phi_pi": [[1]],
      "chain": [
        {"degree": 0, "rank": 2, "relative_mask": [true, true], "isotropy": [["e", "h"], ["e", "h"]],
         "map": [[1, 0], [0, 1]]},
        {"degree": 1, "rank": 1, "relative_mask": [false], "map": [[1]]}
      ]
    },
    {
      "subgroup_class": ["e", "g", "h", "gh"], "component": "a",
      "pi1_rank": 0, "phi_pi": [],
      "chain": [{"degree": 0, "rank": 1, "relative_mask": [false], "map": [[1]]}]
    },
    {
      "subgroup_class": ["e", "g", "h", "gh"], "component": "b",
      "pi1_rank": 0, "phi_pi": [],
      "chain": [{"degree": 0, "rank": 1, "relative_mask": [false], "map": [[1]]}]
    }
  ],
  "fixed_points": [
    {"subgroup_class": ["e"], "component": "x", "point": "a", "orbit": "a", "index": 1, "path_class": []},
    {"subgroup_class": ["e"], "component": "x", "point": "b", "orbit": "b", "index": 1, "path_class": []},
    {"subgroup_class": ["e", "h"], "component": "y", "point": "a", "orbit": "a", "index": -1, "path_class": [0]},
    {"subgroup_class": ["e", "h"], "component": "y", "point": "b", "orbit": "b", "index": 1, "path_class": [0]},
    {"subgroup_class": ["e", "g"], "component": "z", "point": "a", "orbit": "a", "index": -1, "path_class": [0]},
    {"subgroup_class": ["e", "g"], "component": "z", "point": "b", "orbit": "b", "index": 1, "path_class": [0]},
    {"subgroup_class": ["e", "g", "h", "gh"], "component": "a", "point": "a", "orbit": "a", "index": 1, "path_class": []},
    {"subgroup_class": ["e", "g", "h", "gh"], "component": "b", "point": "b", "orbit": "b", "index": 1, "path_class": []}
  ]
})json";

}  // namespace corpus_text

inline const std::vector<std::string> &builtin_names() {
  static const std::vector<std::string> names{"example1", "example2", "example3"};
  return names;
}

inline Json builtin_document(const std::string &name) {
  if (name == "example1") return Json::parse(corpus_text::example1);
  if (name == "example2") return Json::parse(corpus_text::example2);
  if (name == "example3") return Json::parse(corpus_text::example3);
  throw ParseError("unknown builtin '" + name + "' (expected example1, example2 or example3)");
}

inline EquivariantComplex builtin_complex(const std::string &name) { return load_complex(builtin_document(name)); }

}  // namespace eqlef
