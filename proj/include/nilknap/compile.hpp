#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "nilknap/kp.hpp"
#include "nilknap/pool.hpp"
#include "nilknap/solve.hpp"
#include "nilknap/system.hpp"

namespace nilknap {

/// Per-input metadata for a compiled instance: what role the exponent slot
/// plays and which value it takes (as a term over the source variables) in
/// the canonical extension of a system solution to a knapsack witness.
struct SlotInfo {
    std::string role;
    Term value;
};

struct GadgetRecord {
    int equation_index = 0;          // 0-based index into the compiled system
    std::string description;        // e.g. "x*y" or "term product"
    std::pair<int, int> letter_pair{0, 0};
    std::array<int, 4> slots{0, 0, 0, 0};  // 1-based input indices
    int aux_slot = 0;                // 1-based index of the carrier slot, or 0
};

struct CompilationLog {
    bool packed = false;
    int rank = 0;
    int equation_carriers = 0;  // commutators holding an equation value
    int letter_pairs = 0;
    int internal_ties = 0;
    int reuse_ties = 0;
    int accumulators = 0;
    int forced_constants = 0;
    std::vector<SlotInfo> slots;
    std::vector<GadgetRecord> gadgets;
    std::vector<PairAllocation> allocations;

    int total_commutators() const {
        return static_cast<int>(allocations.size());
    }
};

struct CompileResult {
    KPInstance instance;
    CompilationLog log;
};

/// Rewrites every equation to degree <= 2 by introducing auxiliary product
/// variables (_w1, _w2, ...). Solutions are in explicit bijection: an output
/// solution restricts to an input solution, and an input solution extends
/// uniquely by evaluating the auxiliary products.
DiophantineSystem degree_reduce(const DiophantineSystem& system);

enum class NonnegMode { Positive, Nonnegative };

/// Four-square encoding: each variable becomes 1 + a^2+b^2+c^2+d^2 (positive
/// mode) or a^2+b^2+c^2+d^2 (nonnegative mode) in four fresh variables.
/// The caller is expected to degree_reduce the result before compiling.
DiophantineSystem nonneg_encode(const DiophantineSystem& system, NonnegMode mode);

/// Quadratic-gadget compilation. Requires every equation at degree <= 2.
/// A solution of the system extends uniquely to a knapsack witness and every
/// witness restricts to a solution through variable_map.
CompileResult compile_quadratic(const DiophantineSystem& system, CommutatorPool& pool);

/// Term-tree compilation: gadgets follow the binary computation tree of each
/// equation side, so it handles any degree directly.
CompileResult compile_terms(const DiophantineSystem& system, CommutatorPool& pool);

/// Canonical extension of a system solution to a full exponent vector.
std::vector<Integer> extend_witness(const CompileResult& compiled, const Assignment& solution);

/// Exponent box covering the canonical extension of every system solution in
/// system_box (interval evaluation of the slot value terms).
SearchBox induced_box(const CompileResult& compiled, const DiophantineSystem& system,
                      const SearchBox& system_box);

}  // namespace nilknap
