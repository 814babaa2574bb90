#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nilknap/compile.hpp"
#include "nilknap/format.hpp"
#include "nilknap/symbolic.hpp"
#include "support.hpp"

using namespace nilknap;
using nilknap::testing::Rng;

namespace {

DiophantineSystem sys_of(const std::string& text) { return parse_system(text); }

/// Bounded equisolvability of a system and its compilation, with witnesses
/// mapped through variable_map in both directions.
void check_round_trip(const DiophantineSystem& sys, const CompileResult& compiled, int radius) {
    SearchBox sys_box = SearchBox::symmetric(sys.variables.size(), Integer(radius));
    SearchBox kp_box = induced_box(compiled, sys, sys_box);

    auto sys_witness = bounded_solve_system(sys, sys_box);
    auto kp_witness = bounded_solve_kp(compiled.instance, kp_box);
    CHECK(sys_witness.has_value() == kp_witness.has_value());

    if (sys_witness) {
        // forward: the canonical extension is accepted
        std::vector<Integer> eps = extend_witness(compiled, sys_witness->assignment);
        CHECK(evaluate_kp(compiled.instance, eps).second);
    }
    if (kp_witness) {
        // backward: restriction through variable_map solves the system
        Assignment sigma;
        for (const auto& [var, idx] : compiled.instance.variable_map)
            sigma[var] = kp_witness->assignment.at(slot_name(static_cast<std::size_t>(idx)));
        CHECK(sys.satisfied_by(sigma));
    }
}

}  // namespace

TEST_CASE("degree_reduce peels x^3 = 8") {
    DiophantineSystem sys = sys_of("vars: x\neq: x^3 = 8\n");
    DiophantineSystem reduced = degree_reduce(sys);
    CHECK(reduced.degree() <= 2);
    CHECK(print_system(reduced) ==
          "# degree reduction introduced 1 auxiliary product variables\n"
          "vars: x _w1\n"
          "eq: _w1 = x^2\n"
          "eq: _w1*x = 8\n");

    auto w = bounded_solve_system(reduced, SearchBox::symmetric(2, Integer(8)));
    REQUIRE(w.has_value());
    CHECK(w->assignment.at("x") == 2);
    CHECK(w->assignment.at("_w1") == 4);
}

TEST_CASE("degree_reduce keeps quadratic systems unchanged") {
    DiophantineSystem sys = sys_of("vars: x y\neq: x*y + 2*x = 6\n");
    DiophantineSystem reduced = degree_reduce(sys);
    CHECK(print_system(reduced) == print_system(sys));
}

TEST_CASE("degree_reduce on x^2 y^2 = 4 splits into two squares") {
    DiophantineSystem sys = sys_of("vars: x y\neq: x^2*y^2 = 4\n");
    DiophantineSystem reduced = degree_reduce(sys);
    CHECK(reduced.degree() <= 2);
    CHECK(reduced.variables.size() == 4);

    // bijection on the box [-3,3]: x=1, y=2 extends to the aux values 1 and 4
    SearchBox box = SearchBox::symmetric(4, Integer(9));
    auto all = bounded_all_system(reduced, box);
    std::set<std::pair<Integer, Integer>> projected;
    for (const auto& w : all) {
        projected.insert({w.assignment.at("x"), w.assignment.at("y")});
        CHECK(w.assignment.at("_w1") == w.assignment.at("x") * w.assignment.at("x"));
        CHECK(w.assignment.at("_w2") == w.assignment.at("y") * w.assignment.at("y"));
    }
    std::set<std::pair<Integer, Integer>> direct;
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y)
            if (x * x * y * y == 4) direct.insert({Integer(x), Integer(y)});
    CHECK(projected == direct);
    CHECK(direct.count({Integer(1), Integer(2)}) == 1);
}

TEST_CASE("degree_reduce reuses auxiliaries across monomials") {
    DiophantineSystem sys = sys_of("vars: x\neq: x^4 + x^3 = 0\n");
    DiophantineSystem reduced = degree_reduce(sys);
    CHECK(reduced.degree() <= 2);
    CHECK(reduced.variables.size() == 2);  // only _w1 = x*x is needed
}

TEST_CASE("nonneg_encode positive and nonnegative modes") {
    DiophantineSystem one = nonneg_encode(sys_of("vars: x\neq: x = 1\n"), NonnegMode::Positive);
    CHECK(bounded_solve_system(degree_reduce(one), SearchBox::symmetric(one.variables.size(),
                                                                        Integer(2)))
              .has_value());

    DiophantineSystem zero = nonneg_encode(sys_of("vars: x\neq: x = 0\n"), NonnegMode::Positive);
    CHECK_FALSE(bounded_solve_system(degree_reduce(zero),
                                     SearchBox::symmetric(zero.variables.size(), Integer(4)))
                    .has_value());

    DiophantineSystem seven =
        nonneg_encode(sys_of("vars: x\neq: x = 7\n"), NonnegMode::Nonnegative);
    auto w = bounded_solve_system(degree_reduce(seven),
                                  SearchBox::symmetric(seven.variables.size(), Integer(3)));
    REQUIRE(w.has_value());
    Integer sum = 0;
    for (int i = 1; i <= 4; ++i) {
        Integer q = w->assignment.at("x_q" + std::to_string(i));
        sum += q * q;
    }
    CHECK(sum == 7);

    // negative values become unreachable in positive mode
    DiophantineSystem neg = nonneg_encode(sys_of("vars: x\neq: x = -3\n"), NonnegMode::Positive);
    CHECK_FALSE(bounded_solve_system(degree_reduce(neg),
                                     SearchBox::symmetric(neg.variables.size(), Integer(4)))
                    .has_value());
}

TEST_CASE("compile_quadratic on x*y = 6 matches the documented layout") {
    DiophantineSystem sys = sys_of("vars: x y\neq: x*y = 6\n");
    CommutatorPool pool;
    CompileResult compiled = compile_quadratic(sys, pool);

    CHECK(compiled.instance.inputs.size() == 6);
    CHECK(compiled.instance.target ==
          NormalForm::basic_commutator(compiled.instance.rank, 1, 2, Integer(6)));
    CHECK(compiled.instance.variable_map.at("x") == 1);
    CHECK(compiled.instance.variable_map.at("y") == 2);
    CHECK(compiled.log.equation_carriers == 1);
    CHECK(compiled.log.reuse_ties == 2);
    CHECK(compiled.log.internal_ties == 2);

    // witness x=2, y=3 extends to an accepted exponent vector
    std::vector<Integer> eps = extend_witness(compiled, {{"x", Integer(2)}, {"y", Integer(3)}});
    CHECK(evaluate_kp(compiled.instance, eps).second);

    // lex-least witness over [-5,5]^6 projects to x=-3, y=-2
    auto w = bounded_solve_kp(compiled.instance, SearchBox::symmetric(6, Integer(5)));
    REQUIRE(w.has_value());
    CHECK(w->assignment.at("e1") == -3);
    CHECK(w->assignment.at("e2") == -2);

    check_round_trip(sys, compiled, 5);
}

TEST_CASE("compile_quadratic of the empty equation is trivially solvable") {
    DiophantineSystem sys = sys_of("vars: x\neq: 0 = 0\n");
    CommutatorPool pool;
    CompileResult compiled = compile_quadratic(sys, pool);
    std::vector<Integer> zeros(compiled.instance.inputs.size(), Integer(0));
    CHECK(evaluate_kp(compiled.instance, zeros).second);
}

TEST_CASE("compile_quadratic couples equations sharing a variable") {
    DiophantineSystem sys = sys_of("vars: x\neq: 2*x = 4\neq: x*x = 4\n");
    CommutatorPool pool;
    CompileResult compiled = compile_quadratic(sys, pool);

    SearchBox box = induced_box(compiled, sys, SearchBox::symmetric(1, Integer(5)));
    auto all = bounded_all_kp(compiled.instance, box);
    CHECK_FALSE(all.empty());
    int decl = compiled.instance.variable_map.at("x");
    for (const auto& w : all)
        CHECK(w.assignment.at(slot_name(static_cast<std::size_t>(decl))) == 2);

    check_round_trip(sys, compiled, 5);
}

TEST_CASE("compile_quadratic rejects degree-3 input") {
    DiophantineSystem sys = sys_of("vars: x\neq: x^3 = 8\n");
    CommutatorPool pool;
    CHECK_THROWS_AS(compile_quadratic(sys, pool), std::domain_error);
}

TEST_CASE("unsatisfiable constant equations compile to unreachable targets") {
    DiophantineSystem sys = sys_of("vars: x\neq: 0 = 1\n");
    CommutatorPool pool;
    CompileResult compiled = compile_quadratic(sys, pool);
    CHECK_FALSE(bounded_solve_kp(compiled.instance,
                                 SearchBox::symmetric(compiled.instance.inputs.size(), Integer(3)))
                    .has_value());
}

TEST_CASE("allocation safety: letter pairs of distinct gadgets are disjoint") {
    DiophantineSystem sys =
        sys_of("vars: x y z\neq: x*y + y*z + x*x = 3\neq: x*z = 2\n");
    CommutatorPool pool;
    CompileResult compiled = compile_quadratic(sys, pool);

    std::set<int> seen;
    for (const auto& g : compiled.log.gadgets) {
        CHECK(seen.count(g.letter_pair.first) == 0);
        CHECK(seen.count(g.letter_pair.second) == 0);
        seen.insert(g.letter_pair.first);
        seen.insert(g.letter_pair.second);
    }
    std::set<std::pair<int, int>> pairs;
    for (const auto& alloc : compiled.log.allocations) {
        CHECK(pairs.count(alloc.generators) == 0);
        pairs.insert(alloc.generators);
    }
    check_round_trip(sys, compiled, 3);
}

TEST_CASE("gadget commutators other than carriers end at exponent zero") {
    DiophantineSystem sys = sys_of("vars: x y\neq: x*y + x = 5\neq: x*x + y = 3\n");
    CommutatorPool pool;
    CompileResult compiled = compile_quadratic(sys, pool);
    // target holds gamma on the two equation carriers and nothing else
    std::size_t nonzero = 0;
    for (const auto& [key, v] : compiled.instance.target.beta()) {
        (void)key;
        CHECK(v != 0);
        ++nonzero;
    }
    CHECK(nonzero == 2);
    check_round_trip(sys, compiled, 3);
}

TEST_CASE("compile_terms realizes x = 5") {
    DiophantineSystem sys = sys_of("vars: x\neq: x = 5\n");
    CommutatorPool pool;
    CompileResult compiled = compile_terms(sys, pool);
    SearchBox box = induced_box(compiled, sys, SearchBox::symmetric(1, Integer(6)));
    auto all = bounded_all_kp(compiled.instance, box);
    CHECK_FALSE(all.empty());
    int decl = compiled.instance.variable_map.at("x");
    for (const auto& w : all)
        CHECK(w.assignment.at(slot_name(static_cast<std::size_t>(decl))) == 5);
}

TEST_CASE("compile_terms: identical trees on both sides are always solvable") {
    DiophantineSystem sys = sys_of("vars: x y\neq: x + y = x + y\n");
    CommutatorPool pool;
    CompileResult compiled = compile_terms(sys, pool);
    for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y) {
            std::vector<Integer> eps =
                extend_witness(compiled, {{"x", Integer(x)}, {"y", Integer(y)}});
            CHECK(evaluate_kp(compiled.instance, eps).second);
        }
}

TEST_CASE("compile_terms: x*x = 4 has witnesses exactly at x = +-2") {
    DiophantineSystem sys = sys_of("vars: x\neq: x*x = 4\n");
    CommutatorPool pool;
    CompileResult compiled = compile_terms(sys, pool);
    SearchBox box = induced_box(compiled, sys, SearchBox::symmetric(1, Integer(4)));
    auto all = bounded_all_kp(compiled.instance, box);
    std::set<Integer> xs;
    int decl = compiled.instance.variable_map.at("x");
    for (const auto& w : all) xs.insert(w.assignment.at(slot_name(static_cast<std::size_t>(decl))));
    CHECK(xs == std::set<Integer>{Integer(-2), Integer(2)});
}

TEST_CASE("both compilers agree on bounded solvability") {
    Rng rng(401);
    for (int trial = 0; trial < 12; ++trial) {
        DiophantineSystem sys = nilknap::testing::random_quadratic_system(rng, 2, 2, 2);
        CommutatorPool pq, pt, ptp(true);
        CompileResult quad = compile_quadratic(sys, pq);
        CompileResult term = compile_terms(sys, pt);
        CompileResult term_packed = compile_terms(sys, ptp);

        SearchBox sys_box = SearchBox::symmetric(sys.variables.size(), Integer(3));
        bool direct = bounded_solve_system(sys, sys_box).has_value();
        bool via_quad =
            bounded_solve_kp(quad.instance, induced_box(quad, sys, sys_box)).has_value();
        bool via_term =
            bounded_solve_kp(term.instance, induced_box(term, sys, sys_box)).has_value();
        bool via_term_packed =
            bounded_solve_kp(term_packed.instance, induced_box(term_packed, sys, sys_box))
                .has_value();
        CHECK(direct == via_quad);
        CHECK(direct == via_term);
        CHECK(direct == via_term_packed);
    }
}

TEST_CASE("packed mode is equisolvable with fresh mode") {
    Rng rng(402);
    for (int trial = 0; trial < 12; ++trial) {
        DiophantineSystem sys = nilknap::testing::random_quadratic_system(rng, 3, 2, 2);
        CommutatorPool fresh(false), packed(true);
        CompileResult a = compile_quadratic(sys, fresh);
        CompileResult b = compile_quadratic(sys, packed);
        CHECK(b.log.rank <= a.log.rank);

        SearchBox sys_box = SearchBox::symmetric(sys.variables.size(), Integer(2));
        bool direct = bounded_solve_system(sys, sys_box).has_value();
        CHECK(direct == bounded_solve_kp(a.instance, induced_box(a, sys, sys_box)).has_value());
        CHECK(direct == bounded_solve_kp(b.instance, induced_box(b, sys, sys_box)).has_value());
    }
}

TEST_CASE("random round-trips with witness mapping") {
    Rng rng(403);
    for (int trial = 0; trial < 25; ++trial) {
        DiophantineSystem sys = nilknap::testing::random_quadratic_system(rng, 3, 2);
        CommutatorPool pool;
        CompileResult compiled = compile_quadratic(sys, pool);
        check_round_trip(sys, compiled, 3);
    }
}

TEST_CASE("witness sets are in bijection for adversarial systems") {
    // Shared variables across equations, squares, sign mixes: the projected
    // knapsack witness set must equal the solution set exactly, and since
    // ties determine every slot from the declarations, the witness count
    // must match the solution count too.
    const char* cases[] = {
        "vars: x y\neq: x*y + x = 2\neq: x*x - y = 1\n",
        "vars: x y\neq: x*x + y*y = 5\neq: x + y = 3\n",
        "vars: x\neq: x*x = 1\n",
        "vars: x y z\neq: x*y = z\neq: y*z = x\n",
        "vars: x y\neq: x*y - y*y + 2*x = 1\n",
    };
    for (const char* text : cases) {
        DiophantineSystem sys = sys_of(text);
        SearchBox sys_box = SearchBox::symmetric(sys.variables.size(), Integer(2));
        std::set<std::vector<Integer>> solutions;
        for (const auto& w : bounded_all_system(sys, sys_box)) {
            std::vector<Integer> v;
            for (const auto& name : sys.variables) v.push_back(w.assignment.at(name));
            solutions.insert(v);
        }

        for (int mode = 0; mode < 4; ++mode) {
            CommutatorPool pool(mode % 2 == 1);
            CompileResult compiled = mode < 2 ? compile_quadratic(sys, pool)
                                              : compile_terms(sys, pool);
            SearchBox kp_box = induced_box(compiled, sys, sys_box);
            auto all = bounded_all_kp(compiled.instance, kp_box);
            std::set<std::vector<Integer>> projected;
            for (const auto& w : all) {
                std::vector<Integer> v;
                for (const auto& name : sys.variables) {
                    int idx = compiled.instance.variable_map.at(name);
                    v.push_back(w.assignment.at(slot_name(static_cast<std::size_t>(idx))));
                }
                projected.insert(v);
            }
            CHECK(projected == solutions);
            CHECK(all.size() == solutions.size());
        }
    }
}

TEST_CASE("worked example: (K - G18)(K + G18) + G19^2 = 1") {
    DiophantineSystem sys =
        sys_of("vars: K G18 G19\neq: (K - G18)*(K + G18) + G19^2 = 1\n");
    CommutatorPool pool;
    CompileResult compiled = compile_quadratic(sys, pool);

    // the stated witness K=1, G18=0, G19=0 is accepted
    Assignment sigma{{"K", Integer(1)}, {"G18", Integer(0)}, {"G19", Integer(0)}};
    CHECK(evaluate_kp(compiled.instance, extend_witness(compiled, sigma)).second);

    // the G19^2 gadget's four slots are forced equal in every bounded witness
    const GadgetRecord* g19 = nullptr;
    for (const auto& g : compiled.log.gadgets)
        if (g.description.find("G19") != std::string::npos) g19 = &g;
    REQUIRE(g19 != nullptr);

    SearchBox box = induced_box(compiled, sys, SearchBox::symmetric(3, Integer(2)));
    auto all = bounded_all_kp(compiled.instance, box);
    CHECK_FALSE(all.empty());
    for (const auto& w : all) {
        auto slot = [&](int idx) {
            return w.assignment.at(slot_name(static_cast<std::size_t>(idx)));
        };
        Integer first = slot(g19->slots[0]);
        for (int i = 1; i < 4; ++i) CHECK(slot(g19->slots[i]) == first);
        // and the restriction solves the equation
        Assignment restricted;
        for (const auto& [var, idx] : compiled.instance.variable_map)
            restricted[var] = slot(idx);
        CHECK(sys.satisfied_by(restricted));
    }
}
