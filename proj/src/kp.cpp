#include "nilknap/kp.hpp"

#include <stdexcept>

namespace nilknap {

void KPInstance::validate() const {
    if (rank < 1) throw std::invalid_argument("instance rank must be positive");
    for (const auto& g : inputs)
        if (g.rank() != rank) throw std::invalid_argument("input rank mismatch");
    if (target.rank() != rank) throw std::invalid_argument("target rank mismatch");
    for (const auto& [name, idx] : variable_map)
        if (idx < 1 || idx > static_cast<int>(inputs.size()))
            throw std::invalid_argument("variable_map index out of range: " + name);
}

std::pair<NormalForm, bool> evaluate_kp(const KPInstance& instance,
                                        const std::vector<Integer>& eps) {
    if (eps.size() != instance.inputs.size())
        throw std::invalid_argument("exponent vector length does not match input count");
    NormalForm acc = NormalForm::identity(instance.rank);
    for (std::size_t i = 0; i < eps.size(); ++i)
        acc = multiply(acc, power(instance.inputs[i], eps[i]));
    return {acc, acc == instance.target};
}

}  // namespace nilknap
