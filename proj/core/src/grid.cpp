#include "cansub/grid.hpp"

#include "cansub/error.hpp"

namespace cansub {

std::vector<Rational> fraction_grid(std::int64_t den) {
  if (den <= 0) throw Error(ErrorKind::kInvalidInput, "grid denominator must be positive");
  std::vector<Rational> grid;
  grid.reserve(static_cast<std::size_t>(den) + 1);
  for (std::int64_t j = 0; j <= den; ++j) grid.push_back(make_rational(j, den));
  return grid;
}

std::vector<Rational> boundary_grid(std::int64_t p, int exponent) {
  if (exponent < 0) throw Error(ErrorKind::kInvalidInput, "grid power must be nonnegative");
  Rational den = power(p, exponent) * (p + 1);
  return fraction_grid(den.get_num().get_si());
}

std::vector<Rational> open_boundary_grid(std::int64_t p, int exponent) {
  auto grid = boundary_grid(p, exponent);
  return {grid.begin() + 1, grid.end() - 1};
}

}  // namespace cansub
