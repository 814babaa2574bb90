#pragma once

#include <string>
#include <vector>

#include "nilknap/term.hpp"

namespace nilknap {

/// One equation lhs = rhs, both sides kept as computation trees. Polynomial
/// views are derived on demand; the canonical printer expands both sides.
struct DiophEquation {
    Term lhs, rhs;

    /// lhs - rhs as an expanded polynomial.
    GeneralPoly difference() const {
        GeneralPoly p = GeneralPoly::from_term(lhs);
        p.subtract(GeneralPoly::from_term(rhs));
        return p;
    }

    int degree() const {
        return std::max(GeneralPoly::from_term(lhs).degree(),
                        GeneralPoly::from_term(rhs).degree());
    }

    bool holds(const Assignment& values) const {
        return lhs.evaluate(values) == rhs.evaluate(values);
    }
};

/// Finite system of Diophantine equations over declared integer variables.
/// notes carry provenance (toy substitutions, encodings applied, ...).
struct DiophantineSystem {
    std::vector<std::string> variables;
    std::vector<DiophEquation> equations;
    std::vector<std::string> notes;

    bool has_variable(const std::string& name) const {
        for (const auto& v : variables)
            if (v == name) return true;
        return false;
    }

    void declare(const std::string& name) {
        if (!has_variable(name)) variables.push_back(name);
    }

    /// Every variable referenced by an equation must be declared.
    void validate() const;

    bool satisfied_by(const Assignment& values) const {
        for (const auto& eq : equations)
            if (!eq.holds(values)) return false;
        return true;
    }

    int degree() const {
        int d = 0;
        for (const auto& eq : equations) d = std::max(d, eq.degree());
        return d;
    }
};

}  // namespace nilknap
