#pragma once

#include <optional>
#include <vector>

#include "nilknap/integer.hpp"

namespace nilknap {

using IntMatrix = std::vector<std::vector<Integer>>;  // row-major

/// General integer solution of A x = d: a particular solution plus a basis
/// of the kernel lattice. Solved exactly by column Hermite reduction with a
/// unimodular transform; no floating point anywhere.
struct LinearSolveResult {
    bool consistent = false;
    std::vector<Integer> particular;  // size k when consistent
    IntMatrix kernel;                 // k x p, columns are basis vectors
};

LinearSolveResult solve_integer_linear(const IntMatrix& a, const std::vector<Integer>& d);

/// Column Hermite form of a k x p matrix: returns (H, pivot_rows) where
/// H = B * V for unimodular V, columns of H span the same lattice, pivots
/// are positive, and pivot rows strictly increase left to right.
std::pair<IntMatrix, std::vector<int>> column_hermite(const IntMatrix& b);

}  // namespace nilknap
