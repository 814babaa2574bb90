#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilknap/normal_form.hpp"

namespace nilknap {

/// An instance of the knapsack problem in a free class-2 nilpotent group:
/// inputs g_1..g_k and a target g of the same rank. The question is whether
/// integers e_1..e_k exist with g_1^{e_1} ... g_k^{e_k} = g.
///
/// variable_map records, for compiled instances, which exponent slot
/// realizes which source-system variable (1-based input indices).
struct KPInstance {
    int rank = 1;
    std::vector<NormalForm> inputs;
    NormalForm target{1};
    std::map<std::string, int> variable_map;

    std::size_t size() const { return inputs.size(); }
    void validate() const;
};

/// Evaluates g_1^{e_1} ... g_k^{e_k} and reports whether it equals the target.
std::pair<NormalForm, bool> evaluate_kp(const KPInstance& instance,
                                        const std::vector<Integer>& eps);

}  // namespace nilknap
