#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nilknap/kp.hpp"
#include "nilknap/system.hpp"

namespace nilknap {

/// Per-variable integer bounds for exhaustive search, aligned with the
/// declared variable order (systems) or exponent slots e1..ek (instances).
struct SearchBox {
    std::vector<std::pair<Integer, Integer>> bounds;

    static SearchBox symmetric(std::size_t n, const Integer& radius) {
        SearchBox b;
        b.bounds.assign(n, {-radius, radius});
        return b;
    }

    std::size_t size() const { return bounds.size(); }
    void validate() const;
};

struct Witness {
    Assignment assignment;
    bool operator==(const Witness& o) const { return assignment == o.assignment; }
};

/// Lexicographically least satisfying assignment within the box (variables
/// in declared order), or nothing. Deterministic for every job count: the
/// sharded search partitions the first variable's range and the result is
/// the same as the sequential scan. All constants must materialize.
std::optional<Witness> bounded_solve_system(const DiophantineSystem& system,
                                            const SearchBox& box, int jobs = 1);

/// Lex-least knapsack witness within the box, or nothing. The search is
/// pruned through the derived Diophantine system; every candidate is
/// verified with evaluate_kp before it is returned.
std::optional<Witness> bounded_solve_kp(const KPInstance& instance, const SearchBox& box,
                                        int jobs = 1);

/// All witnesses within the box in lex order, up to max_count.
std::vector<Witness> bounded_all_system(const DiophantineSystem& system, const SearchBox& box,
                                        std::size_t max_count = SIZE_MAX);
std::vector<Witness> bounded_all_kp(const KPInstance& instance, const SearchBox& box,
                                    std::size_t max_count = SIZE_MAX);

std::vector<Integer> witness_to_eps(const Witness& w, std::size_t k);

}  // namespace nilknap
