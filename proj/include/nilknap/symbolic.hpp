#pragma once

#include <map>
#include <vector>

#include "nilknap/kp.hpp"
#include "nilknap/quadratic.hpp"
#include "nilknap/system.hpp"

namespace nilknap {

/// Symbolic collection of g_1^{e_1} ... g_k^{e_k}: one affine form per
/// generator exponent and one quadratic polynomial per commutator pair.
/// Substituting any concrete exponent vector reproduces evaluate_kp exactly.
struct SymbolicProduct {
    std::vector<LinearForm> generator_forms;                       // index i-1 for x_i
    std::map<std::pair<int, int>, QuadraticPolynomial> pair_forms;  // (i,j), i<j

    const QuadraticPolynomial& pair(int i, int j) const {
        static const QuadraticPolynomial kZero{};
        auto it = pair_forms.find({i, j});
        return it == pair_forms.end() ? kZero : it->second;
    }
};

/// Exponent-slot variable names are "e1".."ek".
std::string slot_name(std::size_t index_1based);

SymbolicProduct symbolic_evaluate(const KPInstance& instance);

/// Diophantine system over e_1..e_k equivalent to the instance: a vector of
/// exponents satisfies the system iff it is a knapsack witness. At most one
/// linear equation per generator and one quadratic equation per commutator
/// pair; identically-zero equations with zero right side are dropped.
DiophantineSystem kp_to_system(const KPInstance& instance);

/// How many equations of each role kp_to_system emits: one per generator
/// with a nonzero form or target exponent (at most rank), one per commutator
/// pair likewise (at most rank(rank-1)/2). A pair equation may degenerate to
/// degree < 2, so these are counted by role, not by degree.
struct SystemShape {
    std::size_t generator_equations = 0;
    std::size_t pair_equations = 0;
};
SystemShape derived_shape(const KPInstance& instance);

}  // namespace nilknap
