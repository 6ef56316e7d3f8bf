// Prints the first rows of the Ward-Lah triangle by two routes and the
// row sums of the binomial Ward-Lah triangle next to the central Lah numbers.

#include <iostream>

#include "ward/ward.hpp"

int main() {
  using ward::Strategy;
  using ward::TriangleKind;

  const auto by_recurrence = ward::triangle(TriangleKind::WardLah, 6, Strategy::Recurrence);
  const auto by_formula = ward::triangle(TriangleKind::WardLah, 6, Strategy::Explicit);
  for (const auto& row : by_recurrence.rows) {
    for (const auto& x : row) std::cout << x << ' ';
    std::cout << '\n';
  }
  std::cout << "recurrence == explicit: "
            << (ward::compare_triangles(by_recurrence, by_formula).passed ? "yes" : "no") << "\n\n";

  for (long n = 0; n <= 6; ++n) {
    ward::Integer sum;
    for (long k = 0; k <= n; ++k) sum += ward::value(TriangleKind::BinomialWardLah, n, k, Strategy::Explicit);
    std::cout << "n=" << n << "  sum=" << sum << "  L(2n,n)=" << ward::central(ward::Classical::Lah, n) << '\n';
  }
}
