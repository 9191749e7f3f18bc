// Prints the fourth-root identity behind Fermat's solution of a^4 - b^4 = a - b,
// then the next few positive solutions produced by the point iteration.

#include <iostream>

#include "dioph/dioph.hpp"

int main() {
  using namespace dioph;

  const auto sols = generate_k4(3);
  std::cout << render(curio(sols.front()), Format::plain);
  std::cout << render(geometric_series(sols.front()), Format::plain) << "\n";

  for (std::size_t i = 0; i < sols.size(); ++i) {
    std::cout << "solution " << i + 1 << ": a has " << sols[i].a.numerator_digits()
              << " digits over " << sols[i].a.denominator_digits() << "\n";
  }
}
