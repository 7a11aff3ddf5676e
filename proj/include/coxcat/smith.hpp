#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "coxcat/exact.hpp"

namespace coxcat {

// Sparse integer matrix given by columns of (row, value) entries.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> columns;
};

struct SmithResult {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next
};

// Unit pivots are eliminated first (Markowitz-style choice to limit fill);
// whatever remains goes through dense big-integer Smith reduction.
SmithResult smith_normal_form(SparseMatrix m);

// Dense Smith normal form diagonal (nonzero entries, normalized positive).
std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> a);

}  // namespace coxcat
