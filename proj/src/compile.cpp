#include "nilknap/compile.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilknap {
namespace {

std::string fresh_aux_name(const DiophantineSystem& sys, int counter) {
    std::string name = "_w" + std::to_string(counter);
    while (sys.has_variable(name)) name.insert(name.begin(), '_');
    return name;
}

/// Replaces one high-degree monomial pair by an auxiliary variable,
/// preferring the square of the least repeated variable, else the product of
/// the two least variables. Returns the rewritten monomial.
GeneralPoly::Monomial peel_once(const GeneralPoly::Monomial& mono,
                                std::map<VarPair, std::string>& aux_for_pair,
                                DiophantineSystem& out, int& counter) {
    std::string u, v;
    bool found = false;
    for (std::size_t i = 0; i + 1 < mono.size(); ++i)
        if (mono[i] == mono[i + 1]) {
            u = v = mono[i];
            found = true;
            break;
        }
    if (!found) {
        u = mono[0];
        v = mono[1];
    }

    VarPair key(u, v);
    auto it = aux_for_pair.find(key);
    if (it == aux_for_pair.end()) {
        std::string name = fresh_aux_name(out, ++counter);
        out.declare(name);
        out.equations.push_back(
            {Term::variable(name), Term::product(Term::variable(u), Term::variable(v))});
        it = aux_for_pair.emplace(key, name).first;
    }

    GeneralPoly::Monomial next;
    bool dropped_u = false, dropped_v = false;
    for (const auto& name : mono) {
        if (!dropped_u && name == u) {
            dropped_u = true;
            continue;
        }
        if (!dropped_v && name == v) {
            dropped_v = true;
            continue;
        }
        next.push_back(name);
    }
    next.push_back(it->second);
    std::sort(next.begin(), next.end(), NameLess{});
    return next;
}

}  // namespace

DiophantineSystem degree_reduce(const DiophantineSystem& system) {
    system.validate();
    if (system.degree() <= 2) return system;

    DiophantineSystem out;
    out.variables = system.variables;
    out.notes = system.notes;
    std::map<VarPair, std::string> aux_for_pair;
    int counter = 0;

    for (const auto& eq : system.equations) {
        GeneralPoly lhs = GeneralPoly::from_term(eq.lhs);
        GeneralPoly rhs = GeneralPoly::from_term(eq.rhs);
        if (std::max(lhs.degree(), rhs.degree()) <= 2) {
            out.equations.push_back(eq);
            continue;
        }
        GeneralPoly diff = lhs;
        diff.subtract(rhs);
        GeneralPoly reduced;
        ConstExpr constant(Integer(0));
        for (const auto& [mono, coeff] : diff.terms()) {
            if (mono.empty()) {
                constant = constant + coeff;
                continue;
            }
            GeneralPoly::Monomial m = mono;
            while (m.size() > 2) m = peel_once(m, aux_for_pair, out, counter);
            reduced.add_monomial(std::move(m), coeff);
        }
        out.equations.push_back({reduced.to_term(), Term::constant(constant.negated())});
    }
    if (counter > 0)
        out.notes.push_back("degree reduction introduced " + std::to_string(counter) +
                            " auxiliary product variables");
    out.validate();
    return out;
}

DiophantineSystem nonneg_encode(const DiophantineSystem& system, NonnegMode mode) {
    system.validate();
    DiophantineSystem out;
    out.notes = system.notes;

    std::map<std::string, Term> substitution;
    for (const auto& v : system.variables) {
        Term expansion = Term::constant(
            ConstExpr(Integer(mode == NonnegMode::Positive ? 1 : 0)));
        bool first = mode == NonnegMode::Nonnegative;
        for (int i = 1; i <= 4; ++i) {
            std::string name = v + "_q" + std::to_string(i);
            while (system.has_variable(name) || out.has_variable(name))
                name.insert(name.begin(), '_');
            out.declare(name);
            Term sq = Term::product(Term::variable(name), Term::variable(name));
            expansion = first ? sq : Term::sum(expansion, sq);
            first = false;
        }
        substitution.emplace(v, expansion);
    }

    struct Rewriter {
        const std::map<std::string, Term>& sub;
        Term operator()(const Term& t) const {
            switch (t.kind()) {
                case Term::Kind::Constant:
                    return t;
                case Term::Kind::Variable:
                    return sub.at(t.variable_name());
                case Term::Kind::Sum:
                    return Term::sum((*this)(t.lhs()), (*this)(t.rhs()));
                case Term::Kind::Product:
                    return Term::product((*this)(t.lhs()), (*this)(t.rhs()));
            }
            return t;
        }
    } rewrite{substitution};

    for (const auto& eq : system.equations)
        out.equations.push_back({rewrite(eq.lhs), rewrite(eq.rhs)});
    out.notes.push_back(std::string("four-square encoding: every original variable is ") +
                        (mode == NonnegMode::Positive ? "1 + " : "") +
                        "a sum of four squares of fresh variables");
    out.validate();
    return out;
}

namespace {

/// Instance under construction: inputs are at most one free letter times an
/// explicit product of basic commutators. Normal forms are materialized once
/// the pool's final rank is known.
struct PendingInput {
    int letter_gen = 0;
    Integer letter_exp;
    std::map<std::pair<int, int>, Integer> central;
};

struct Builder {
    CommutatorPool& pool;
    std::vector<PendingInput> inputs;
    std::map<std::pair<int, int>, Integer> target;
    CompilationLog log;
    std::map<std::string, int> decl_slot;  // variable -> 1-based input index

    explicit Builder(CommutatorPool& p) : pool(p) { log.packed = p.packed(); }

    int add_input(PendingInput in, SlotInfo info) {
        inputs.push_back(std::move(in));
        log.slots.push_back(std::move(info));
        return static_cast<int>(inputs.size());
    }

    void declare_variables(const std::vector<std::string>& vars) {
        for (const auto& v : vars) {
            int idx = add_input(PendingInput{}, SlotInfo{"decl:" + v, Term::variable(v)});
            decl_slot.emplace(v, idx);
        }
    }

    /// Ties the slot at `index` to the declaration slot of `v`.
    void tie_to_declaration(int index, const std::string& v) {
        auto pair = pool.allocate_central_pair(PairUse::ReuseTie, "tie " + v);
        ++log.reuse_ties;
        inputs[static_cast<std::size_t>(decl_slot.at(v) - 1)].central[pair] += 1;
        inputs[static_cast<std::size_t>(index - 1)].central[pair] -= 1;
    }

    /// The four-element quadratic gadget for coefficient * var_p * var_q on
    /// the given letter pair. Slot values follow the ties: slots 1 and 3
    /// carry var_p, slots 2 and 4 carry var_q.
    GadgetRecord add_quadratic_gadget(const std::pair<int, int>& letters, const Integer& coeff,
                                      const std::string& var_p, const std::string& var_q,
                                      int equation_index, const std::string& description) {
        auto c1 = pool.allocate_central_pair(PairUse::InternalTie, "gadget c1");
        auto c2 = pool.allocate_central_pair(PairUse::InternalTie, "gadget c2");
        log.internal_ties += 2;

        PendingInput u1{letters.first, -coeff, {{c1, 1}}};
        PendingInput u2{letters.second, Integer(-1), {{c2, 1}}};
        PendingInput u3{letters.first, coeff, {{c1, -1}}};
        PendingInput u4{letters.second, Integer(1), {{c2, -1}}};

        GadgetRecord rec;
        rec.equation_index = equation_index;
        rec.description = description;
        rec.letter_pair = letters;
        rec.slots[0] = add_input(std::move(u1), {"gadget:" + description + ":1", Term::variable(var_p)});
        rec.slots[1] = add_input(std::move(u2), {"gadget:" + description + ":2", Term::variable(var_q)});
        rec.slots[2] = add_input(std::move(u3), {"gadget:" + description + ":3", Term::variable(var_p)});
        rec.slots[3] = add_input(std::move(u4), {"gadget:" + description + ":4", Term::variable(var_q)});
        tie_to_declaration(rec.slots[0], var_p);
        tie_to_declaration(rec.slots[1], var_q);
        return rec;
    }

    KPInstance materialize() {
        const int rank = std::max(pool.rank(), 1);
        KPInstance inst;
        inst.rank = rank;
        inst.inputs.reserve(inputs.size());
        for (const auto& p : inputs) {
            NormalForm g(rank);
            if (p.letter_gen != 0) g.set_alpha(p.letter_gen, p.letter_exp);
            for (const auto& [pair, e] : p.central) g.add_beta(pair.first, pair.second, e);
            inst.inputs.push_back(std::move(g));
        }
        NormalForm t(rank);
        for (const auto& [pair, e] : target) t.add_beta(pair.first, pair.second, e);
        inst.target = t;
        inst.variable_map = decl_slot;
        log.rank = rank;
        log.allocations = pool.log();
        inst.validate();
        return inst;
    }
};

std::string monomial_description(const GeneralPoly::Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += "*";
        s += m[i];
    }
    return s;
}

}  // namespace

CompileResult compile_quadratic(const DiophantineSystem& system, CommutatorPool& pool) {
    system.validate();
    Builder b(pool);
    b.declare_variables(system.variables);

    struct NormalizedEquation {
        std::vector<std::pair<GeneralPoly::Monomial, Integer>> quadratic;
        std::vector<std::pair<std::string, Integer>> linear;
        Integer gamma;
    };
    std::vector<NormalizedEquation> kept;
    for (const auto& eq : system.equations) {
        GeneralPoly diff = eq.difference();
        if (diff.degree() > 2)
            throw std::domain_error("compile_quadratic requires degree <= 2; run degree_reduce");
        NormalizedEquation ne;
        for (const auto& [mono, coeff] : diff.terms()) {
            Integer c = coeff.value();
            if (mono.empty())
                ne.gamma -= c;
            else if (mono.size() == 1)
                ne.linear.emplace_back(mono[0], c);
            else
                ne.quadratic.emplace_back(mono, c);
        }
        if (ne.quadratic.empty() && ne.linear.empty() && ne.gamma == 0) continue;
        kept.push_back(std::move(ne));
    }

    for (std::size_t s = 0; s < kept.size(); ++s) {
        const auto& ne = kept[s];
        const std::string eq_tag = "eq" + std::to_string(s + 1);
        const bool single = ne.quadratic.size() == 1;
        const bool shared = pool.packed() && !ne.quadratic.empty();

        std::pair<int, int> eq_pair;
        if (single || shared) {
            eq_pair = pool.allocate_letter_pair(eq_tag);
            ++b.log.letter_pairs;
        } else {
            eq_pair = pool.allocate_central_pair(PairUse::Equation, eq_tag);
        }
        ++b.log.equation_carriers;

        for (const auto& [v, c] : ne.linear)
            b.inputs[static_cast<std::size_t>(b.decl_slot.at(v) - 1)].central[eq_pair] += c;
        b.target[eq_pair] += ne.gamma;

        for (const auto& [mono, coeff] : ne.quadratic) {
            const std::string desc = eq_tag + ":" + monomial_description(mono);
            std::pair<int, int> pair = eq_pair;
            if (!single && !shared) {
                pair = pool.allocate_letter_pair(desc);
                ++b.log.letter_pairs;
            }
            GadgetRecord rec = b.add_quadratic_gadget(pair, coeff, mono[0], mono[1],
                                                      static_cast<int>(s), desc);
            if (!single && !shared) {
                // Carrier slot: moves the gadget value onto the equation
                // commutator, [pair]^{-1} [eq_pair]^{+1}.
                PendingInput w;
                w.central[pair] -= 1;
                w.central[eq_pair] += 1;
                Term value = Term::product(
                    Term::constant(ConstExpr(coeff)),
                    Term::product(Term::variable(mono[0]), Term::variable(mono[1])));
                rec.aux_slot = b.add_input(std::move(w), {"carrier:" + desc, value});
            }
            b.log.gadgets.push_back(std::move(rec));
        }
    }

    CompileResult result;
    result.instance = b.materialize();
    result.log = std::move(b.log);
    return result;
}

namespace {

/// Recursive realization of a term for compile_terms: returns the commutator
/// pair holding the term's value in the running product.
std::pair<int, int> realize_term(const Term& t, Builder& b, int equation_index) {
    switch (t.kind()) {
        case Term::Kind::Constant: {
            auto acc = b.pool.allocate_central_pair(PairUse::Accumulator, "const acc");
            auto forced = b.pool.allocate_central_pair(PairUse::ForcedConstant, "const value");
            ++b.log.accumulators;
            ++b.log.forced_constants;
            PendingInput in;
            in.central[acc] += 1;
            in.central[forced] += 1;
            b.target[forced] += t.constant_value().value();
            b.add_input(std::move(in), {"term-const", t});
            return acc;
        }
        case Term::Kind::Variable: {
            auto acc = b.pool.allocate_central_pair(PairUse::Accumulator, "var acc");
            ++b.log.accumulators;
            PendingInput in;
            in.central[acc] += 1;
            int idx = b.add_input(std::move(in), {"term-var:" + t.variable_name(), t});
            b.tie_to_declaration(idx, t.variable_name());
            return acc;
        }
        case Term::Kind::Sum: {
            auto left = realize_term(t.lhs(), b, equation_index);
            auto right = realize_term(t.rhs(), b, equation_index);
            auto acc = b.pool.allocate_central_pair(PairUse::Accumulator, "sum acc");
            ++b.log.accumulators;
            PendingInput s1;
            s1.central[left] -= 1;
            s1.central[acc] += 1;
            PendingInput s2;
            s2.central[right] -= 1;
            s2.central[acc] += 1;
            b.add_input(std::move(s1), {"term-sum:left", t.lhs()});
            b.add_input(std::move(s2), {"term-sum:right", t.rhs()});
            return acc;
        }
        case Term::Kind::Product: {
            auto left = realize_term(t.lhs(), b, equation_index);
            auto right = realize_term(t.rhs(), b, equation_index);
            auto letters = b.pool.allocate_letter_pair("product letters");
            ++b.log.letter_pairs;
            auto c1 = b.pool.allocate_central_pair(PairUse::InternalTie, "product c1");
            auto c2 = b.pool.allocate_central_pair(PairUse::InternalTie, "product c2");
            b.log.internal_ties += 2;

            PendingInput p1{letters.first, Integer(-1), {}};
            p1.central[left] += 1;
            p1.central[c1] += 1;
            PendingInput p2{letters.second, Integer(-1), {}};
            p2.central[right] += 1;
            p2.central[c2] += 1;
            PendingInput p3{letters.first, Integer(1), {{c1, -1}}};
            PendingInput p4{letters.second, Integer(1), {{c2, -1}}};

            GadgetRecord rec;
            rec.equation_index = equation_index;
            rec.description = "term product";
            rec.letter_pair = letters;
            rec.slots[0] = b.add_input(std::move(p1), {"term-prod:1", t.lhs().negated()});
            rec.slots[1] = b.add_input(std::move(p2), {"term-prod:2", t.rhs().negated()});
            rec.slots[2] = b.add_input(std::move(p3), {"term-prod:3", t.lhs().negated()});
            rec.slots[3] = b.add_input(std::move(p4), {"term-prod:4", t.rhs().negated()});
            b.log.gadgets.push_back(std::move(rec));
            return letters;
        }
    }
    throw std::logic_error("unreachable term kind");
}

}  // namespace

CompileResult compile_terms(const DiophantineSystem& system, CommutatorPool& pool) {
    system.validate();
    Builder b(pool);
    b.declare_variables(system.variables);

    for (std::size_t s = 0; s < system.equations.size(); ++s) {
        const auto& eq = system.equations[s];
        const Term* general = &eq.lhs;
        const Term* constant = nullptr;
        if (eq.rhs.kind() == Term::Kind::Constant) {
            constant = &eq.rhs;
        } else if (eq.lhs.kind() == Term::Kind::Constant) {
            general = &eq.rhs;
            constant = &eq.lhs;
        }

        if (constant != nullptr) {
            auto acc = realize_term(*general, b, static_cast<int>(s));
            auto carrier = pool.allocate_central_pair(PairUse::Equation,
                                                      "eq" + std::to_string(s + 1));
            ++b.log.equation_carriers;
            PendingInput q;
            q.central[acc] -= 1;
            q.central[carrier] += 1;
            b.add_input(std::move(q), {"eq-const", *general});
            b.target[carrier] += constant->constant_value().value();
        } else {
            auto left = realize_term(eq.lhs, b, static_cast<int>(s));
            auto right = realize_term(eq.rhs, b, static_cast<int>(s));
            auto carrier = pool.allocate_central_pair(PairUse::Equation,
                                                      "eq" + std::to_string(s + 1));
            ++b.log.equation_carriers;
            PendingInput q1;
            q1.central[left] -= 1;
            q1.central[carrier] += 1;
            PendingInput q2;
            q2.central[right] -= 1;
            q2.central[carrier] -= 1;
            b.add_input(std::move(q1), {"eq-left", eq.lhs});
            b.add_input(std::move(q2), {"eq-right", eq.rhs});
        }
    }

    CompileResult result;
    result.instance = b.materialize();
    result.log = std::move(b.log);
    return result;
}

std::vector<Integer> extend_witness(const CompileResult& compiled, const Assignment& solution) {
    std::vector<Integer> eps;
    eps.reserve(compiled.log.slots.size());
    for (const auto& slot : compiled.log.slots) eps.push_back(slot.value.evaluate(solution));
    return eps;
}

SearchBox induced_box(const CompileResult& compiled, const DiophantineSystem& system,
                      const SearchBox& system_box) {
    system_box.validate();
    if (system_box.size() != system.variables.size())
        throw std::invalid_argument("system box dimension mismatch");
    std::map<std::string, std::pair<Integer, Integer>> bounds;
    for (std::size_t i = 0; i < system.variables.size(); ++i)
        bounds[system.variables[i]] = system_box.bounds[i];
    SearchBox out;
    for (const auto& slot : compiled.log.slots) out.bounds.push_back(slot.value.value_interval(bounds));
    return out;
}

}  // namespace nilknap
