// Realizes [a] - [b'] as a wedge of spheres and prints its invariant report.

#include <iostream>

#include "eqlef/realize.hpp"
#include "eqlef/report.hpp"

int main() {
  eqlef::RealizationTarget t{eqlef::IntMatrix{{2, 1}, {1, 1}}, eqlef::IntMatrix{{-1}}};
  const auto c = eqlef::realize(t);
  std::cout << "target " << eqlef::target_class(t).to_string() << "\n\n";
  std::cout << eqlef::report_text(eqlef::compute_report(c), true);
}
