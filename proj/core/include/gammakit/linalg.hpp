#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gammakit/rational.hpp"

namespace gammakit {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank over Q. Rows are scaled to integers and reduced by fraction-free
/// (Bareiss) elimination.
int exact_rank(const RationalMatrix& rows);

class InconsistentSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Solves A x = b exactly by Gaussian elimination. Throws InconsistentSystem
/// when no solution exists and std::invalid_argument when the solution is not
/// unique.
std::vector<Rational> solve_unique(RationalMatrix a, std::vector<Rational> b);

}  // namespace gammakit
