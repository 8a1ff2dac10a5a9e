#ifndef NOETHER_LINSOLVE_HPP
#define NOETHER_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "rational.hpp"

namespace noether {

using QMatrix = std::vector<std::vector<Rational>>;

// Solve A x = b exactly, x of length ncols (A may have zero rows). Rows are
// scaled to integers, then eliminated with fraction-free (Bareiss) pivoting:
// columns left to right, pivot row the first remaining row with a nonzero
// entry. Free variables are set to zero, so the solution is deterministic.
// Returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(QMatrix A, std::vector<Rational> b,
                                                  std::size_t ncols);

// Rank over Q of the matrix, same elimination.
std::size_t matrix_rank(QMatrix A);

}  // namespace noether

#endif
