#include "nilknap/system.hpp"

#include <stdexcept>

namespace nilknap {

void DiophantineSystem::validate() const {
    std::set<std::string> declared(variables.begin(), variables.end());
    if (declared.size() != variables.size())
        throw std::invalid_argument("duplicate variable declaration");
    std::set<std::string> used;
    for (const auto& eq : equations) {
        eq.lhs.collect_variables(used);
        eq.rhs.collect_variables(used);
    }
    for (const auto& v : used)
        if (!declared.count(v)) throw std::invalid_argument("undeclared variable: " + v);
}

}  // namespace nilknap
