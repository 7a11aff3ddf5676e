#pragma once

#include <optional>
#include <vector>

#include "coxcat/exact.hpp"

namespace coxcat {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector x;
};

// maximize c.x subject to A x <= b with x free. Two-phase dense tableau
// simplex with Bland's rule.
LpResult lp_maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

// A point with A x < b in every row, if one exists (maximizes the common
// slack t under A x + t <= b, t <= 1).
std::optional<RationalVector> strict_feasible_point(const RationalMatrix& a, const RationalVector& b, std::size_t dim);

}  // namespace coxcat
