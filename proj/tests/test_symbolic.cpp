#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilknap/format.hpp"
#include "nilknap/solve.hpp"
#include "nilknap/symbolic.hpp"
#include "support.hpp"

using namespace nilknap;
using nilknap::testing::Rng;

namespace {

/// Exhaustively substitutes every eps in [-radius, radius]^k and compares the
/// symbolic forms against evaluate_kp.
void check_substitution(const KPInstance& inst, int radius) {
    SymbolicProduct sym = symbolic_evaluate(inst);
    const std::size_t k = inst.inputs.size();
    std::vector<Integer> eps(k, Integer(-radius));
    for (;;) {
        Assignment values;
        for (std::size_t i = 0; i < k; ++i) values[slot_name(i + 1)] = eps[i];
        NormalForm direct = evaluate_kp(inst, eps).first;
        for (int i = 1; i <= inst.rank; ++i)
            CHECK(sym.generator_forms[static_cast<std::size_t>(i - 1)].evaluate(values) ==
                  direct.alpha(i));
        for (int i = 1; i <= inst.rank; ++i)
            for (int j = i + 1; j <= inst.rank; ++j)
                CHECK(sym.pair(i, j).evaluate(values) == direct.beta(i, j));

        std::size_t d = 0;
        while (d < k && eps[d] == radius) eps[d++] = -radius;
        if (d == k) break;
        eps[d] += 1;
    }
}

}  // namespace

TEST_CASE("symbolic_evaluate on (x2, x1)") {
    KPInstance inst;
    inst.rank = 2;
    inst.inputs = {NormalForm::generator(2, 2), NormalForm::generator(2, 1)};
    inst.target = NormalForm::identity(2);
    SymbolicProduct sym = symbolic_evaluate(inst);

    LinearForm e1, e2;
    e1.add_term("e1", ConstExpr(Integer(1)));
    e2.add_term("e2", ConstExpr(Integer(1)));
    CHECK(sym.generator_forms[0] == e2);
    CHECK(sym.generator_forms[1] == e1);

    QuadraticPolynomial expected;
    expected.add_quadratic(VarPair("e1", "e2"), ConstExpr(Integer(-1)));
    CHECK(sym.pair(1, 2) == expected);

    check_substitution(inst, 3);
}

TEST_CASE("symbolic_evaluate on commuting repeated inputs (x1, x1)") {
    KPInstance inst;
    inst.rank = 2;
    inst.inputs = {NormalForm::generator(2, 1), NormalForm::generator(2, 1)};
    inst.target = NormalForm::identity(2);
    SymbolicProduct sym = symbolic_evaluate(inst);
    LinearForm sum;
    sum.add_term("e1", ConstExpr(Integer(1)));
    sum.add_term("e2", ConstExpr(Integer(1)));
    CHECK(sym.generator_forms[0] == sum);
    CHECK(sym.pair_forms.empty());
}

TEST_CASE("symbolic_evaluate on an empty instance") {
    KPInstance inst;
    inst.rank = 3;
    inst.target = NormalForm::identity(3);
    SymbolicProduct sym = symbolic_evaluate(inst);
    for (const auto& form : sym.generator_forms) CHECK(form.is_zero());
    CHECK(sym.pair_forms.empty());
}

TEST_CASE("an input with two generators produces the halfsquare term") {
    // (x1 x2)^e carries beta_12 = -C(e,2), not an integer-coefficient
    // polynomial; the derived equation is doubled instead.
    KPInstance inst;
    inst.rank = 2;
    NormalForm g(2);
    g.set_alpha(1, Integer(1));
    g.set_alpha(2, Integer(1));
    inst.inputs = {g};
    inst.target = NormalForm::identity(2);

    SymbolicProduct sym = symbolic_evaluate(inst);
    CHECK_FALSE(sym.pair(1, 2).is_pure());
    check_substitution(inst, 6);

    DiophantineSystem sys = kp_to_system(inst);
    for (const auto& eq : sys.equations) CHECK(eq.degree() <= 2);
    // the commutator equation -e1(e1-1)/2 = 0 is emitted doubled as
    // -e1^2 + e1 = 0, whose solutions are exactly e1 in {0, 1}
    DiophantineSystem pair_only;
    pair_only.declare("e1");
    pair_only.equations = {sys.equations.back()};
    SearchBox box = SearchBox::symmetric(1, Integer(4));
    auto all = bounded_all_system(pair_only, box);
    REQUIRE(all.size() == 2);
    CHECK(all[0].assignment.at("e1") == 0);
    CHECK(all[1].assignment.at("e1") == 1);
}

TEST_CASE("kp_to_system on the swapped-generator example") {
    KPInstance inst;
    inst.rank = 2;
    inst.inputs = {NormalForm::generator(2, 2), NormalForm::generator(2, 1)};
    NormalForm target(2);
    target.set_alpha(1, Integer(2));
    target.set_alpha(2, Integer(3));
    target.add_beta(1, 2, Integer(-6));
    inst.target = target;

    DiophantineSystem sys = kp_to_system(inst);
    CHECK(print_system(sys) ==
          "vars: e1 e2\n"
          "eq: e2 = 2\n"
          "eq: e1 = 3\n"
          "eq: -e1*e2 = -6\n");

    auto w = bounded_solve_system(sys, SearchBox::symmetric(2, Integer(5)));
    REQUIRE(w.has_value());
    CHECK(w->assignment.at("e1") == 3);
    CHECK(w->assignment.at("e2") == 2);
}

TEST_CASE("kp_to_system detects an unreachable central target") {
    KPInstance inst;
    inst.rank = 2;
    inst.inputs = {NormalForm::generator(2, 1), NormalForm::generator(2, 2)};
    inst.target = NormalForm::basic_commutator(2, 1, 2);
    DiophantineSystem sys = kp_to_system(inst);

    // e1 = 0, e2 = 0, and the impossible 0 = 1.
    CHECK(sys.equations.size() == 3);
    CHECK_FALSE(bounded_solve_system(sys, SearchBox::symmetric(2, Integer(10))).has_value());
    for (int a = -10; a <= 10; ++a)
        for (int b = -10; b <= 10; ++b)
            CHECK_FALSE(evaluate_kp(inst, {Integer(a), Integer(b)}).second);
}

TEST_CASE("empty instance yields the empty system") {
    KPInstance inst;
    inst.rank = 2;
    inst.target = NormalForm::identity(2);
    DiophantineSystem sys = kp_to_system(inst);
    CHECK(sys.equations.empty());
    CHECK(sys.variables.empty());
}

TEST_CASE("substitution equivalence holds exhaustively on random instances") {
    Rng rng(301);
    for (int trial = 0; trial < 40; ++trial) {
        KPInstance inst = nilknap::testing::random_instance(rng, 4, 4);
        const std::size_t k = inst.inputs.size();
        const int n = inst.rank;
        DiophantineSystem sys = kp_to_system(inst);

        // Prop. 1 bounds (counted by role) and the degree bound.
        for (const auto& eq : sys.equations) CHECK(eq.degree() <= 2);
        SystemShape shape = derived_shape(inst);
        CHECK(shape.generator_equations <= static_cast<std::size_t>(n));
        CHECK(shape.pair_equations <= static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(sys.equations.size() == shape.generator_equations + shape.pair_equations);

        std::vector<Integer> eps(k, Integer(-3));
        for (;;) {
            Assignment values;
            for (std::size_t i = 0; i < k; ++i) values[slot_name(i + 1)] = eps[i];
            CHECK(evaluate_kp(inst, eps).second == sys.satisfied_by(values));
            std::size_t d = 0;
            while (d < k && eps[d] == 3) eps[d++] = Integer(-3);
            if (d == k) break;
            eps[d] += 1;
        }
    }
}
