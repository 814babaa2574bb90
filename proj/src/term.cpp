#include "nilknap/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilknap {

Term Term::constant(ConstExpr value) {
    Term t;
    t.kind_ = Kind::Constant;
    t.value_ = std::move(value);
    return t;
}

Term Term::variable(std::string name) {
    Term t;
    t.kind_ = Kind::Variable;
    t.name_ = std::move(name);
    return t;
}

Term Term::sum(const Term& a, const Term& b) {
    Term t;
    t.kind_ = Kind::Sum;
    t.lhs_ = std::make_shared<Term>(a);
    t.rhs_ = std::make_shared<Term>(b);
    return t;
}

Term Term::product(const Term& a, const Term& b) {
    Term t;
    t.kind_ = Kind::Product;
    t.lhs_ = std::make_shared<Term>(a);
    t.rhs_ = std::make_shared<Term>(b);
    return t;
}

Integer Term::evaluate(const Assignment& values) const {
    switch (kind_) {
        case Kind::Constant:
            return value_.value();
        case Kind::Variable: {
            auto it = values.find(name_);
            if (it == values.end()) throw std::invalid_argument("unassigned variable: " + name_);
            return it->second;
        }
        case Kind::Sum:
            return lhs_->evaluate(values) + rhs_->evaluate(values);
        case Kind::Product:
            return lhs_->evaluate(values) * rhs_->evaluate(values);
    }
    return 0;
}

void Term::collect_variables(std::set<std::string>& out) const {
    switch (kind_) {
        case Kind::Constant:
            return;
        case Kind::Variable:
            out.insert(name_);
            return;
        case Kind::Sum:
        case Kind::Product:
            lhs_->collect_variables(out);
            rhs_->collect_variables(out);
            return;
    }
}

std::pair<Integer, Integer> Term::value_interval(
    const std::map<std::string, std::pair<Integer, Integer>>& bounds) const {
    switch (kind_) {
        case Kind::Constant: {
            Integer v = value_.value();
            return {v, v};
        }
        case Kind::Variable: {
            auto it = bounds.find(name_);
            if (it == bounds.end()) throw std::invalid_argument("unbounded variable: " + name_);
            return it->second;
        }
        case Kind::Sum: {
            auto [al, ah] = lhs_->value_interval(bounds);
            auto [bl, bh] = rhs_->value_interval(bounds);
            return {al + bl, ah + bh};
        }
        case Kind::Product: {
            auto [al, ah] = lhs_->value_interval(bounds);
            auto [bl, bh] = rhs_->value_interval(bounds);
            Integer lo = al * bl, hi = al * bl;
            for (const Integer& p : {al * bh, ah * bl, ah * bh}) {
                if (p < lo) lo = p;
                if (p > hi) hi = p;
            }
            return {lo, hi};
        }
    }
    return {0, 0};
}

GeneralPoly GeneralPoly::from_term(const Term& t) {
    GeneralPoly p;
    switch (t.kind()) {
        case Term::Kind::Constant:
            p.add_monomial({}, t.constant_value());
            break;
        case Term::Kind::Variable:
            p.add_monomial({t.variable_name()}, ConstExpr(Integer(1)));
            break;
        case Term::Kind::Sum: {
            p = from_term(t.lhs());
            p.add(from_term(t.rhs()));
            break;
        }
        case Term::Kind::Product: {
            GeneralPoly a = from_term(t.lhs());
            GeneralPoly b = from_term(t.rhs());
            for (const auto& [ma, ca] : a.terms_) {
                for (const auto& [mb, cb] : b.terms_) {
                    Monomial m = ma;
                    m.insert(m.end(), mb.begin(), mb.end());
                    std::sort(m.begin(), m.end(), NameLess{});
                    p.add_monomial(std::move(m), ca * cb);
                }
            }
            break;
        }
    }
    return p;
}

void GeneralPoly::add_monomial(Monomial m, const ConstExpr& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void GeneralPoly::add(const GeneralPoly& o) {
    for (const auto& [m, c] : o.terms_) add_monomial(m, c);
}

void GeneralPoly::subtract(const GeneralPoly& o) {
    for (const auto& [m, c] : o.terms_) add_monomial(m, c.negated());
}

int GeneralPoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(m.size()));
    return d;
}

Integer GeneralPoly::evaluate(const Assignment& values) const {
    Integer acc = 0;
    for (const auto& [m, c] : terms_) {
        Integer t = c.value();
        for (const auto& v : m) {
            auto it = values.find(v);
            if (it == values.end()) throw std::invalid_argument("unassigned variable: " + v);
            t *= it->second;
        }
        acc += t;
    }
    return acc;
}

QuadraticPolynomial GeneralPoly::to_quadratic() const {
    QuadraticPolynomial q;
    for (const auto& [m, c] : terms_) {
        switch (m.size()) {
            case 0:
                q.linear().add_constant(c);
                break;
            case 1:
                q.linear().add_term(m[0], c);
                break;
            case 2:
                q.add_quadratic(VarPair(m[0], m[1]), c);
                break;
            default:
                throw std::domain_error("polynomial degree exceeds 2");
        }
    }
    return q;
}

Term GeneralPoly::to_term() const {
    if (terms_.empty()) return Term::constant(ConstExpr(Integer(0)));
    Term acc;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Term t = Term::constant(c);
        bool coeff_is_one = c.is_one();
        bool started = !coeff_is_one || m.empty();
        for (const auto& v : m) {
            if (!started) {
                t = Term::variable(v);
                started = true;
            } else {
                t = Term::product(t, Term::variable(v));
            }
        }
        acc = first ? t : Term::sum(acc, t);
        first = false;
    }
    return acc;
}

bool GeneralPoly::operator==(const GeneralPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (auto it = terms_.begin(), jt = o.terms_.begin(); it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

}  // namespace nilknap
