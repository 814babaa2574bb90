#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilknap/kp.hpp"
#include "nilknap/lattice.hpp"
#include "nilknap/quadratic.hpp"
#include "nilknap/solve.hpp"

namespace nilknap {

/// Rank-2 pipeline: the derived system has at most two linear equations and
/// one quadratic. The linear part is solved exactly over the integers; its
/// general solution eps = particular + basis * t (column-Hermite basis, one
/// fresh parameter per kernel dimension) is substituted into the quadratic,
/// leaving a single equation whose parameter solutions biject with knapsack
/// witnesses.
struct HeisenbergReduction {
    bool linear_consistent = false;
    std::vector<std::string> params;         // "t1".."tp"
    std::vector<Integer> particular;         // size k
    IntMatrix basis;                         // k x p, column-Hermite form
    std::vector<int> pivot_rows;             // strictly increasing
    QuadraticPolynomial residual;            // over params
    Integer residual_rhs;                    // residual = residual_rhs

    /// Inconsistent linear part is reported as the canonical 0 = 1.
    bool trivially_unsat() const { return !linear_consistent; }

    std::vector<Integer> eps_of(const std::vector<Integer>& t) const;
};

HeisenbergReduction heisenberg_reduce(const KPInstance& instance);

/// Smallest triangular parameter box whose image covers every point of the
/// affine lattice inside eps_box; empty optional when no lattice point lies
/// in the box.
std::optional<SearchBox> heisenberg_parameter_box(const HeisenbergReduction& red,
                                                  const SearchBox& eps_box);

}  // namespace nilknap
