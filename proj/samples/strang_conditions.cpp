// Generates the order-2 conditions for two-stage schemes, checks Strang
// splitting against them and prints its leading error coefficients.

#include <iostream>

#include <splitoc/splitoc.hpp>

int main() {
  using namespace splitoc;

  SchemeSpec spec{.stages = 2, .operators = 2};
  const auto system = order_conditions(spec, 2);
  for (const auto& block : system.blocks)
    for (const auto& c : block.conditions)
      std::cout << "q=" << block.order << "  " << c.word.str() << ": " << to_string(c.poly) << "\n";

  const SchemeCoefficients strang{{Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)}, {}};
  const auto report = check_conditions(system, strang, 0.0);
  std::cout << "Strang satisfies the system: " << (report.passed ? "yes" : "no") << "\n";

  const auto values = strang.assignment();
  for (const auto& c : leading_error(spec, 2).block.conditions)
    std::cout << "leading " << c.word.str() << ": " << to_string(evaluate(c.poly, values)) << "\n";

  const auto ops = random_operators(2, 4, 7);
  const auto grid = geometric_grid(1e-1, 1e-3, 8);
  const auto est = estimate_order<double>(strang, std::span<const RealMatrix>(ops), grid);
  std::cout << "observed local error slope: " << est.slope << "\n";
}
