#include "nilknap/symbolic.hpp"

namespace nilknap {

std::string slot_name(std::size_t index_1based) { return "e" + std::to_string(index_1based); }

SymbolicProduct symbolic_evaluate(const KPInstance& instance) {
    instance.validate();
    const int n = instance.rank;
    SymbolicProduct out;
    out.generator_forms.assign(static_cast<std::size_t>(n), LinearForm{});

    for (std::size_t idx = 0; idx < instance.inputs.size(); ++idx) {
        const NormalForm& g = instance.inputs[idx];
        const std::string e = slot_name(idx + 1);

        // Cross terms against the accumulated generator forms, then the
        // input's own central part and self-pair contribution, then the
        // accumulated forms themselves. Mirrors multiply() exactly.
        for (int j = 2; j <= n; ++j) {
            const LinearForm& acc_j = out.generator_forms[static_cast<std::size_t>(j - 1)];
            if (acc_j.is_zero()) continue;
            for (int i = 1; i < j; ++i) {
                const Integer& gi = g.alpha(i);
                if (gi == 0) continue;
                QuadraticPolynomial& target = out.pair_forms[{i, j}];
                for (const auto& [var, coeff] : acc_j.terms())
                    target.add_quadratic(VarPair(var, e), coeff * ConstExpr(-gi));
            }
        }
        for (const auto& [key, b] : g.beta())
            out.pair_forms[{key.first, key.second}].linear().add_term(e, ConstExpr(b));
        for (int j = 2; j <= n; ++j) {
            const Integer& gj = g.alpha(j);
            if (gj == 0) continue;
            for (int i = 1; i < j; ++i) {
                const Integer& gi = g.alpha(i);
                if (gi == 0) continue;
                // power(g, e) carries -C(e,2) * a_i * a_j on each pair.
                out.pair_forms[{i, j}].add_halfsquare(e, ConstExpr(-gi * gj));
            }
        }
        for (int i = 1; i <= n; ++i) {
            if (g.alpha(i) == 0) continue;
            out.generator_forms[static_cast<std::size_t>(i - 1)].add_term(e,
                                                                          ConstExpr(g.alpha(i)));
        }
    }

    for (auto it = out.pair_forms.begin(); it != out.pair_forms.end();)
        it = it->second.is_zero() ? out.pair_forms.erase(it) : std::next(it);
    return out;
}

namespace {

Term quadratic_to_term(const QuadraticPolynomial& q) {
    GeneralPoly p;
    for (const auto& [k, c] : q.quadratic()) p.add_monomial({k.first, k.second}, c);
    for (const auto& [v, c] : q.linear().terms()) p.add_monomial({v}, c);
    p.add_monomial({}, q.linear().constant());
    return p.to_term();
}

}  // namespace

SystemShape derived_shape(const KPInstance& instance) {
    SymbolicProduct sym = symbolic_evaluate(instance);
    SystemShape shape;
    for (int i = 1; i <= instance.rank; ++i) {
        if (!sym.generator_forms[static_cast<std::size_t>(i - 1)].is_zero() ||
            instance.target.alpha(i) != 0)
            ++shape.generator_equations;
    }
    for (int i = 1; i <= instance.rank; ++i)
        for (int j = i + 1; j <= instance.rank; ++j)
            if (!sym.pair(i, j).is_zero() || instance.target.beta(i, j) != 0)
                ++shape.pair_equations;
    return shape;
}

DiophantineSystem kp_to_system(const KPInstance& instance) {
    SymbolicProduct sym = symbolic_evaluate(instance);
    const int n = instance.rank;

    DiophantineSystem sys;
    for (std::size_t i = 1; i <= instance.inputs.size(); ++i) sys.declare(slot_name(i));

    for (int i = 1; i <= n; ++i) {
        const LinearForm& form = sym.generator_forms[static_cast<std::size_t>(i - 1)];
        const Integer& rhs = instance.target.alpha(i);
        if (form.is_zero() && rhs == 0) continue;
        GeneralPoly lhs;
        for (const auto& [v, c] : form.terms()) lhs.add_monomial({v}, c);
        sys.equations.push_back({lhs.to_term(), Term::constant(ConstExpr(rhs))});
    }

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const QuadraticPolynomial& form = sym.pair(i, j);
            const Integer rhs = instance.target.beta(i, j);
            if (form.is_zero() && rhs == 0) continue;
            auto [pure, scaled_rhs] = form.to_pure_equation(rhs);
            sys.equations.push_back(
                {quadratic_to_term(pure), Term::constant(ConstExpr(scaled_rhs))});
        }
    }
    return sys;
}

}  // namespace nilknap
