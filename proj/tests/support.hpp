#pragma once

#include <random>
#include <string>
#include <vector>

#include "nilknap/kp.hpp"
#include "nilknap/system.hpp"
#include "nilknap/word.hpp"

namespace nilknap::testing {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Word random_word(Rng& rng, int rank, int length, int max_exp = 3) {
    Word w(rank);
    for (int i = 0; i < length; ++i) {
        int e = pick(rng, -max_exp, max_exp);
        if (e == 0) e = 1;
        w.append(pick(rng, 1, rank), Integer(e));
    }
    return w;
}

inline NormalForm random_normal_form(Rng& rng, int rank, int max_mag = 9) {
    NormalForm nf(rank);
    for (int i = 1; i <= rank; ++i) nf.set_alpha(i, Integer(pick(rng, -max_mag, max_mag)));
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            if (pick(rng, 0, 1)) nf.add_beta(i, j, Integer(pick(rng, -max_mag, max_mag)));
    return nf;
}

/// Random instance with small sparse inputs; about half the targets are
/// reachable (evaluated at a random exponent vector), the rest arbitrary.
inline KPInstance random_instance(Rng& rng, int max_k, int max_rank, int max_mag = 2,
                                  int min_rank = 1) {
    KPInstance inst;
    inst.rank = pick(rng, min_rank, max_rank);
    int k = pick(rng, 1, max_k);
    for (int i = 0; i < k; ++i) {
        NormalForm g(inst.rank);
        int touched = pick(rng, 1, 2);
        for (int t = 0; t < touched; ++t) {
            int idx = pick(rng, 1, inst.rank);
            g.set_alpha(idx, Integer(pick(rng, -max_mag, max_mag)));
        }
        if (inst.rank >= 2 && pick(rng, 0, 2) == 0) {
            int i1 = pick(rng, 1, inst.rank - 1);
            int j1 = pick(rng, i1 + 1, inst.rank);
            g.add_beta(i1, j1, Integer(pick(rng, -max_mag, max_mag)));
        }
        inst.inputs.push_back(std::move(g));
    }
    if (pick(rng, 0, 1)) {
        std::vector<Integer> eps;
        for (int i = 0; i < k; ++i) eps.emplace_back(pick(rng, -2, 2));
        inst.target = evaluate_kp(inst, eps).first;
    } else {
        inst.target = random_normal_form(rng, inst.rank, 3);
    }
    return inst;
}

/// Random quadratic system: up to max_vars variables, up to max_eqs
/// equations, small integer coefficients, one or two quadratic monomials.
inline DiophantineSystem random_quadratic_system(Rng& rng, int max_vars, int max_eqs,
                                                 int coeff_mag = 3) {
    static const char* kNames[] = {"x", "y", "z", "u", "v"};
    DiophantineSystem sys;
    int nvars = pick(rng, 1, max_vars);
    for (int i = 0; i < nvars; ++i) sys.declare(kNames[i]);
    int neqs = pick(rng, 1, max_eqs);
    for (int e = 0; e < neqs; ++e) {
        GeneralPoly poly;
        int quads = pick(rng, 0, 2);
        for (int q = 0; q < quads; ++q) {
            int c = pick(rng, -coeff_mag, coeff_mag);
            if (c == 0) c = 1;
            std::string a = kNames[pick(rng, 0, nvars - 1)];
            std::string b = kNames[pick(rng, 0, nvars - 1)];
            GeneralPoly::Monomial m{a, b};
            std::sort(m.begin(), m.end());
            poly.add_monomial(m, ConstExpr(Integer(c)));
        }
        int lins = pick(rng, 0, 2);
        for (int l = 0; l < lins; ++l) {
            int c = pick(rng, -coeff_mag, coeff_mag);
            if (c == 0) c = 1;
            poly.add_monomial({kNames[pick(rng, 0, nvars - 1)]}, ConstExpr(Integer(c)));
        }
        Integer gamma(pick(rng, -6, 6));
        sys.equations.push_back({poly.to_term(), Term::constant(ConstExpr(gamma))});
    }
    return sys;
}

}  // namespace nilknap::testing
