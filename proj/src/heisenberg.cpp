#include "nilknap/heisenberg.hpp"

#include <stdexcept>

#include "nilknap/symbolic.hpp"

namespace nilknap {
namespace {

std::string param_name(std::size_t i1) { return "t" + std::to_string(i1); }

}  // namespace

std::vector<Integer> HeisenbergReduction::eps_of(const std::vector<Integer>& t) const {
    if (t.size() != params.size()) throw std::invalid_argument("parameter vector size mismatch");
    std::vector<Integer> eps = particular;
    for (std::size_t i = 0; i < eps.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) eps[i] += basis[i][j] * t[j];
    return eps;
}

HeisenbergReduction heisenberg_reduce(const KPInstance& instance) {
    if (instance.rank != 2)
        throw std::invalid_argument("heisenberg_reduce requires a rank-2 instance");
    const std::size_t k = instance.inputs.size();

    DiophantineSystem derived = kp_to_system(instance);
    std::map<std::string, std::size_t> index_of;
    for (std::size_t i = 0; i < k; ++i) index_of[slot_name(i + 1)] = i;

    IntMatrix lin;
    std::vector<Integer> rhs;
    std::optional<QuadraticPolynomial> quad;
    Integer quad_rhs = 0;

    for (const auto& eq : derived.equations) {
        GeneralPoly diff = eq.difference();
        if (diff.degree() <= 1) {
            std::vector<Integer> row(k, Integer(0));
            Integer c = 0;
            for (const auto& [mono, coeff] : diff.terms()) {
                if (mono.empty())
                    c += coeff.value();
                else
                    row[index_of.at(mono[0])] += coeff.value();
            }
            lin.push_back(std::move(row));
            rhs.push_back(-c);
        } else {
            if (quad.has_value())
                throw std::logic_error("rank-2 derivation produced two quadratic equations");
            QuadraticPolynomial q = diff.to_quadratic();
            quad_rhs = -q.linear().constant().value();
            LinearForm stripped;
            for (const auto& [v, c] : q.linear().terms()) stripped.add_term(v, c);
            QuadraticPolynomial clean;
            for (const auto& [key, c] : q.quadratic()) clean.add_quadratic(key, c);
            clean.linear() = stripped;
            quad = clean;
        }
    }

    HeisenbergReduction red;
    auto solved = solve_integer_linear(lin, rhs);
    if (!solved.consistent) {
        // Canonical unsatisfiable residual: 0 = 1 with an empty map.
        red.linear_consistent = false;
        red.residual_rhs = 1;
        return red;
    }
    red.linear_consistent = true;

    auto [hermite, pivots] = column_hermite(solved.kernel);
    red.basis = std::move(hermite);
    red.pivot_rows = std::move(pivots);
    red.particular = std::move(solved.particular);
    if (red.basis.empty()) red.basis.assign(k, {});
    for (std::size_t j = 0; j < red.pivot_rows.size(); ++j) red.params.push_back(param_name(j + 1));

    if (!quad.has_value()) {
        red.residual_rhs = 0;  // 0 = 0: every parameter choice is a witness
        return red;
    }

    // Substitute eps_i = particular_i + sum_j basis[i][j] t_j into the
    // quadratic. Affine forms stay integer so the residual is exact.
    const std::size_t p = red.params.size();
    auto affine = [&](std::size_t i) {
        LinearForm f(ConstExpr(red.particular[i]));
        for (std::size_t j = 0; j < p; ++j)
            f.add_term(red.params[j], ConstExpr(red.basis[i][j]));
        return f;
    };

    QuadraticPolynomial residual;
    Integer constant_shift = 0;

    auto add_product = [&](const LinearForm& a, const LinearForm& b, const Integer& coeff) {
        for (const auto& [va, ca] : a.terms())
            for (const auto& [vb, cb] : b.terms())
                residual.add_quadratic(VarPair(va, vb), ConstExpr(coeff * ca.value() * cb.value()));
        for (const auto& [va, ca] : a.terms())
            residual.linear().add_term(va, ConstExpr(coeff * ca.value() * b.constant().value()));
        for (const auto& [vb, cb] : b.terms())
            residual.linear().add_term(vb, ConstExpr(coeff * cb.value() * a.constant().value()));
        constant_shift += coeff * a.constant().value() * b.constant().value();
    };

    for (const auto& [key, c] : quad->quadratic()) {
        std::size_t u = index_of.at(key.first), v = index_of.at(key.second);
        add_product(affine(u), affine(v), c.value());
    }
    for (const auto& [var, c] : quad->linear().terms()) {
        std::size_t u = index_of.at(var);
        LinearForm f = affine(u);
        for (const auto& [tv, tc] : f.terms())
            residual.linear().add_term(tv, ConstExpr(c.value() * tc.value()));
        constant_shift += c.value() * f.constant().value();
    }

    red.residual = std::move(residual);
    red.residual_rhs = quad_rhs - constant_shift;
    return red;
}

std::optional<SearchBox> heisenberg_parameter_box(const HeisenbergReduction& red,
                                                  const SearchBox& eps_box) {
    eps_box.validate();
    if (!red.linear_consistent) return std::nullopt;
    if (eps_box.size() != red.particular.size())
        throw std::invalid_argument("eps box dimension mismatch");

    // No parameters: the single point must lie in the box.
    if (red.params.empty()) {
        for (std::size_t i = 0; i < red.particular.size(); ++i) {
            const auto& [lo, hi] = eps_box.bounds[i];
            if (red.particular[i] < lo || red.particular[i] > hi) return std::nullopt;
        }
        return SearchBox{};
    }

    // Triangular interval propagation down the pivot rows: in column-Hermite
    // form eps_{r_j} depends only on t_1..t_j, with a positive pivot on t_j.
    SearchBox out;
    std::vector<std::pair<Integer, Integer>> t_iv;
    for (std::size_t j = 0; j < red.params.size(); ++j) {
        const int r = red.pivot_rows[j];
        const Integer& pivot = red.basis[static_cast<std::size_t>(r)][j];
        Integer num_lo = eps_box.bounds[static_cast<std::size_t>(r)].first -
                         red.particular[static_cast<std::size_t>(r)];
        Integer num_hi = eps_box.bounds[static_cast<std::size_t>(r)].second -
                         red.particular[static_cast<std::size_t>(r)];
        for (std::size_t jj = 0; jj < j; ++jj) {
            const Integer& c = red.basis[static_cast<std::size_t>(r)][jj];
            if (c == 0) continue;
            const auto& [tlo, thi] = t_iv[jj];
            if (c > 0) {
                num_lo -= c * thi;
                num_hi -= c * tlo;
            } else {
                num_lo -= c * tlo;
                num_hi -= c * thi;
            }
        }
        Integer tlo, thi;
        mpz_cdiv_q(tlo.get_mpz_t(), num_lo.get_mpz_t(), pivot.get_mpz_t());
        mpz_fdiv_q(thi.get_mpz_t(), num_hi.get_mpz_t(), pivot.get_mpz_t());
        if (tlo > thi) return std::nullopt;
        t_iv.emplace_back(tlo, thi);
        out.bounds.emplace_back(tlo, thi);
    }
    return out;
}

}  // namespace nilknap
