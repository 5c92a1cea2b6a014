// Builds the two bundled example spaces, runs a few deciders, and hunts a
// small counterexample, to show the library surface end to end.

#include <iostream>

#include "softtop/softtop.hpp"

int main() {
  using namespace softtop;

  CatalogEntry a = example("ex4.4");
  std::cout << a.id << ": " << a.note << "\n";
  for (Property p : {Property::normal, Property::regular, Property::t4, Property::t3}) {
    Verdict v = evaluate_property(a.space, p);
    std::cout << "  " << property_name(p) << " -> " << (v.holds ? "holds" : "fails")
              << (v.vacuous ? " (vacuous)" : "") << "\n";
  }

  SoftSet f1 = a.named_sets[0].second;
  std::cout << "  closure(F1) = " << to_string(a.space.closure(f1)) << "\n";
  std::cout << "  complement(F1) = " << to_string(f1.complement()) << "\n";

  SearchBudget budget;
  budget.max_points = 1;
  budget.max_params = 2;
  auto hit = find_counterexample(std::vector<Property>{Property::normal, Property::points_closed},
                                 std::vector<Property>{Property::t3}, budget);
  if (hit) {
    std::cout << "smallest soft-normal, points-closed, non-T3 space:\n";
    for (const auto& m : hit->space.members()) std::cout << "  " << to_string(m) << "\n";
  }
  return 0;
}
