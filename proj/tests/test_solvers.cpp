#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilknap/format.hpp"
#include "nilknap/heisenberg.hpp"
#include "nilknap/lattice.hpp"
#include "nilknap/solve.hpp"
#include "nilknap/symbolic.hpp"
#include "support.hpp"

using namespace nilknap;
using nilknap::testing::Rng;

TEST_CASE("bounded_solve_system basics") {
    DiophantineSystem xy6 = parse_system("vars: x y\neq: x*y = 6\n");
    auto w = bounded_solve_system(xy6, SearchBox::symmetric(2, Integer(5)));
    REQUIRE(w.has_value());
    CHECK(w->assignment.at("x") == -3);
    CHECK(w->assignment.at("y") == -2);

    DiophantineSystem impossible = parse_system("vars: x\neq: 0 = 1\n");
    CHECK_FALSE(bounded_solve_system(impossible, SearchBox::symmetric(1, Integer(3))).has_value());

    DiophantineSystem tautology = parse_system("vars: x\neq: x = x\n");
    auto least = bounded_solve_system(tautology, SearchBox::symmetric(1, Integer(4)));
    REQUIRE(least.has_value());
    CHECK(least->assignment.at("x") == -4);
}

TEST_CASE("bounded_solve_system validates dimensions and materializability") {
    DiophantineSystem sys = parse_system("vars: x\neq: x = 1\n");
    CHECK_THROWS_AS(bounded_solve_system(sys, SearchBox::symmetric(2, Integer(1))),
                    std::invalid_argument);

    DiophantineSystem symbolic = parse_system("vars: x\neq: pow(7,pow(7,77))*x = 1\n");
    CHECK_THROWS_AS(bounded_solve_system(symbolic, SearchBox::symmetric(1, Integer(1))),
                    NonMaterializable);

    SearchBox bad;
    bad.bounds = {{Integer(3), Integer(-3)}};
    CHECK_THROWS_AS(bounded_solve_system(sys, bad), std::invalid_argument);
}

TEST_CASE("bounded_solve_kp basics") {
    KPInstance inst;
    inst.rank = 2;
    inst.inputs = {NormalForm::generator(2, 2), NormalForm::generator(2, 1)};
    NormalForm target(2);
    target.set_alpha(1, Integer(2));
    target.set_alpha(2, Integer(3));
    target.add_beta(1, 2, Integer(-6));
    inst.target = target;
    auto w = bounded_solve_kp(inst, SearchBox::symmetric(2, Integer(5)));
    REQUIRE(w.has_value());
    CHECK(w->assignment.at("e1") == 3);
    CHECK(w->assignment.at("e2") == 2);

    KPInstance id_target;
    id_target.rank = 2;
    id_target.inputs = {NormalForm::generator(2, 1), NormalForm::generator(2, 2)};
    id_target.target = NormalForm::identity(2);
    auto zero = bounded_solve_kp(id_target, SearchBox::symmetric(2, Integer(3)));
    REQUIRE(zero.has_value());
    CHECK(zero->assignment.at("e1") == 0);
    CHECK(zero->assignment.at("e2") == 0);

    KPInstance unreachable;
    unreachable.rank = 2;
    unreachable.inputs = {NormalForm::generator(2, 1)};
    unreachable.target = NormalForm::generator(2, 2);
    CHECK_FALSE(bounded_solve_kp(unreachable, SearchBox::symmetric(1, Integer(4))).has_value());

    CHECK_THROWS_AS(bounded_solve_kp(unreachable, SearchBox::symmetric(3, Integer(1))),
                    std::invalid_argument);
}

TEST_CASE("oracle agreement between the two solvers") {
    Rng rng(501);
    for (int trial = 0; trial < 60; ++trial) {
        KPInstance inst = nilknap::testing::random_instance(rng, 4, 4);
        SearchBox box = SearchBox::symmetric(inst.inputs.size(), Integer(3));
        auto direct = bounded_solve_kp(inst, box);
        DiophantineSystem sys = kp_to_system(inst);
        auto via_system = bounded_solve_system(sys, box);
        CHECK(direct.has_value() == via_system.has_value());
        if (direct && via_system) CHECK(direct->assignment == via_system->assignment);
        if (direct) {
            std::vector<Integer> eps = witness_to_eps(*direct, inst.inputs.size());
            CHECK(evaluate_kp(inst, eps).second);
        }
    }
}

TEST_CASE("determinism across job counts") {
    Rng rng(502);
    for (int trial = 0; trial < 20; ++trial) {
        KPInstance inst = nilknap::testing::random_instance(rng, 4, 3);
        SearchBox box = SearchBox::symmetric(inst.inputs.size(), Integer(3));
        auto sequential = bounded_solve_kp(inst, box, 1);
        auto sharded = bounded_solve_kp(inst, box, 8);
        CHECK(sequential.has_value() == sharded.has_value());
        if (sequential) CHECK(sequential->assignment == sharded->assignment);

        DiophantineSystem sys = kp_to_system(inst);
        auto s1 = bounded_solve_system(sys, box, 1);
        auto s8 = bounded_solve_system(sys, box, 8);
        CHECK(s1.has_value() == s8.has_value());
        if (s1) CHECK(s1->assignment == s8->assignment);
    }
}

TEST_CASE("solve_integer_linear on hand cases") {
    // x + y = 3, x - y = 1 -> unique (2, 1)
    auto r = solve_integer_linear({{1, 1}, {1, -1}}, {Integer(3), Integer(1)});
    REQUIRE(r.consistent);
    CHECK(r.particular == std::vector<Integer>{Integer(2), Integer(1)});
    CHECK(r.kernel[0].empty());

    // 2x = 3 has no integer solution
    CHECK_FALSE(solve_integer_linear({{2}}, {Integer(3)}).consistent);

    // x - y = 0: kernel spanned by (1,1)
    auto free = solve_integer_linear({{1, -1}}, {Integer(0)});
    REQUIRE(free.consistent);
    CHECK(free.kernel.size() == 2);
    CHECK(free.kernel[0].size() == 1);
    CHECK(free.kernel[0][0] == free.kernel[1][0]);
    CHECK(free.kernel[0][0] != 0);

    // inconsistent pair
    CHECK_FALSE(solve_integer_linear({{1, 1}, {1, 1}}, {Integer(0), Integer(1)}).consistent);
}

TEST_CASE("solve_integer_linear on random systems") {
    Rng rng(503);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t m = static_cast<std::size_t>(nilknap::testing::pick(rng, 1, 3));
        std::size_t k = static_cast<std::size_t>(nilknap::testing::pick(rng, 1, 5));
        IntMatrix a(m, std::vector<Integer>(k));
        for (auto& row : a)
            for (auto& v : row) v = nilknap::testing::pick(rng, -4, 4);

        // pick a known solution, solve for its image
        std::vector<Integer> x0(k);
        for (auto& v : x0) v = nilknap::testing::pick(rng, -5, 5);
        std::vector<Integer> d(m, Integer(0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < k; ++j) d[i] += a[i][j] * x0[j];

        auto r = solve_integer_linear(a, d);
        REQUIRE(r.consistent);
        for (std::size_t i = 0; i < m; ++i) {
            Integer check = 0;
            for (std::size_t j = 0; j < k; ++j) check += a[i][j] * r.particular[j];
            CHECK(check == d[i]);
        }
        const std::size_t p = r.kernel.empty() ? 0 : r.kernel[0].size();
        for (std::size_t c = 0; c < p; ++c)
            for (std::size_t i = 0; i < m; ++i) {
                Integer check = 0;
                for (std::size_t j = 0; j < k; ++j) check += a[i][j] * r.kernel[j][c];
                CHECK(check == 0);
            }
        // x0 - particular must lie in the kernel lattice
        IntMatrix kmat(k, std::vector<Integer>(p));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < p; ++c) kmat[j][c] = r.kernel[j][c];
        std::vector<Integer> diff(k);
        for (std::size_t j = 0; j < k; ++j) diff[j] = x0[j] - r.particular[j];
        CHECK(solve_integer_linear(kmat, diff).consistent);
    }
}

TEST_CASE("heisenberg_reduce on the forced example") {
    KPInstance inst;
    inst.rank = 2;
    inst.inputs = {NormalForm::generator(2, 2), NormalForm::generator(2, 1)};
    NormalForm target(2);
    target.set_alpha(1, Integer(2));
    target.set_alpha(2, Integer(3));
    target.add_beta(1, 2, Integer(-6));
    inst.target = target;

    HeisenbergReduction red = heisenberg_reduce(inst);
    REQUIRE(red.linear_consistent);
    CHECK(red.params.empty());
    CHECK(red.particular == std::vector<Integer>{Integer(3), Integer(2)});
    CHECK(red.residual.is_zero());
    CHECK(red.residual_rhs == 0);  // -6 = -6 after substitution
}

TEST_CASE("heisenberg_reduce detects inconsistency") {
    KPInstance inst;
    inst.rank = 2;
    inst.inputs = {NormalForm::generator(2, 2)};
    inst.target = NormalForm::generator(2, 1);
    HeisenbergReduction red = heisenberg_reduce(inst);
    CHECK(red.trivially_unsat());
    CHECK(red.residual_rhs == 1);
    CHECK(red.params.empty());
}

TEST_CASE("heisenberg_reduce with a free parameter") {
    KPInstance inst;
    inst.rank = 2;
    inst.inputs = {NormalForm::generator(2, 1),
                   inverse(NormalForm::generator(2, 1))};
    inst.target = NormalForm::identity(2);
    HeisenbergReduction red = heisenberg_reduce(inst);
    REQUIRE(red.linear_consistent);
    CHECK(red.params.size() == 1);
    CHECK(red.residual.is_zero());
    CHECK(red.residual_rhs == 0);
    std::vector<Integer> eps = red.eps_of({Integer(4)});
    CHECK(eps[0] == eps[1]);
    CHECK(evaluate_kp(inst, eps).second);

    CHECK_THROWS_AS(heisenberg_reduce(KPInstance{3, {}, NormalForm::identity(3), {}}),
                    std::invalid_argument);
}

TEST_CASE("rank-2 derivations stay within 2 linear + 1 quadratic") {
    Rng rng(504);
    for (int trial = 0; trial < 50; ++trial) {
        KPInstance inst = nilknap::testing::random_instance(rng, 4, 2, 2, 2);
        DiophantineSystem sys = kp_to_system(inst);
        SystemShape shape = derived_shape(inst);
        CHECK(shape.generator_equations <= 2);
        CHECK(shape.pair_equations <= 1);
        CHECK(sys.equations.size() == shape.generator_equations + shape.pair_equations);
        std::size_t degree2 = 0;
        for (const auto& eq : sys.equations)
            if (eq.degree() == 2) ++degree2;
        CHECK(degree2 <= 1);
    }
}

TEST_CASE("heisenberg pipeline agrees with direct bounded search") {
    Rng rng(505);
    for (int trial = 0; trial < 50; ++trial) {
        KPInstance inst = nilknap::testing::random_instance(rng, 4, 2, 2, 2);
        const std::size_t k = inst.inputs.size();
        SearchBox eps_box = SearchBox::symmetric(k, Integer(3));
        auto direct = bounded_solve_kp(inst, eps_box);

        HeisenbergReduction red = heisenberg_reduce(inst);
        bool pipeline_found = false;
        std::vector<Integer> pipeline_eps;
        if (red.linear_consistent) {
            auto pbox = heisenberg_parameter_box(red, eps_box);
            if (pbox) {
                DiophantineSystem residual_sys;
                for (const auto& p : red.params) residual_sys.declare(p);
                if (!red.residual.is_zero()) {
                    GeneralPoly lhs;
                    for (const auto& [key, c] : red.residual.quadratic())
                        lhs.add_monomial({key.first, key.second}, c);
                    for (const auto& [v, c] : red.residual.linear().terms())
                        lhs.add_monomial({v}, c);
                    residual_sys.equations.push_back(
                        {lhs.to_term(), Term::constant(ConstExpr(red.residual_rhs))});
                } else if (red.residual_rhs != 0) {
                    residual_sys.equations.push_back(
                        {Term::constant(ConstExpr(Integer(0))),
                         Term::constant(ConstExpr(Integer(1)))});
                }
                // search parameter points whose eps lands inside the box
                SearchBox search = *pbox;
                auto all = bounded_all_system(residual_sys, search);
                for (const auto& w : all) {
                    std::vector<Integer> t;
                    for (const auto& p : red.params) t.push_back(w.assignment.at(p));
                    std::vector<Integer> eps = red.eps_of(t);
                    bool inside = true;
                    for (std::size_t i = 0; i < k; ++i)
                        if (eps[i] < eps_box.bounds[i].first || eps[i] > eps_box.bounds[i].second)
                            inside = false;
                    if (inside) {
                        pipeline_found = true;
                        pipeline_eps = eps;
                        break;
                    }
                }
            }
        }
        CHECK(direct.has_value() == pipeline_found);
        if (pipeline_found) CHECK(evaluate_kp(inst, pipeline_eps).second);
    }
}
