#include "nilknap/quadratic.hpp"

#include <stdexcept>

namespace nilknap {

void LinearForm::add_term(const std::string& var, const ConstExpr& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(var, coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LinearForm::add(const LinearForm& o) {
    for (const auto& [v, c] : o.terms_) add_term(v, c);
    add_constant(o.constant_);
}

void LinearForm::add_scaled(const LinearForm& o, const ConstExpr& scale) {
    if (scale.is_zero()) return;
    for (const auto& [v, c] : o.terms_) add_term(v, c * scale);
    add_constant(o.constant_ * scale);
}

Integer LinearForm::evaluate(const Assignment& values) const {
    Integer acc = constant_.value();
    for (const auto& [v, c] : terms_) {
        auto it = values.find(v);
        if (it == values.end()) throw std::invalid_argument("unassigned variable: " + v);
        acc += c.value() * it->second;
    }
    return acc;
}

bool LinearForm::operator==(const LinearForm& o) const {
    if (!(constant_ == o.constant_) || terms_.size() != o.terms_.size()) return false;
    for (auto it = terms_.begin(), jt = o.terms_.begin(); it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

void QuadraticPolynomial::add_quadratic(const VarPair& key, const ConstExpr& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = quad_.try_emplace(key, coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) quad_.erase(it);
    }
}

void QuadraticPolynomial::add_halfsquare(const std::string& var, const ConstExpr& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = half_.try_emplace(var, coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) half_.erase(it);
    }
}

void QuadraticPolynomial::add(const QuadraticPolynomial& o) {
    for (const auto& [k, c] : o.quad_) add_quadratic(k, c);
    for (const auto& [v, c] : o.half_) add_halfsquare(v, c);
    linear_.add(o.linear_);
}

int QuadraticPolynomial::degree() const {
    if (!quad_.empty() || !half_.empty()) return 2;
    if (!linear_.terms().empty()) return 1;
    return 0;
}

Integer QuadraticPolynomial::evaluate(const Assignment& values) const {
    Integer acc = linear_.evaluate(values);
    auto lookup = [&](const std::string& v) -> const Integer& {
        auto it = values.find(v);
        if (it == values.end()) throw std::invalid_argument("unassigned variable: " + v);
        return it->second;
    };
    for (const auto& [k, c] : quad_) acc += c.value() * lookup(k.first) * lookup(k.second);
    for (const auto& [v, c] : half_) acc += c.value() * choose2(lookup(v));
    return acc;
}

std::pair<QuadraticPolynomial, Integer> QuadraticPolynomial::to_pure_equation(
    const Integer& rhs) const {
    if (half_.empty()) return {*this, rhs};

    bool needs_doubling = false;
    for (const auto& [v, c] : half_)
        if (mpz_odd_p(c.value().get_mpz_t())) {
            needs_doubling = true;
            break;
        }

    QuadraticPolynomial out;
    const Integer scale = needs_doubling ? 2 : 1;
    for (const auto& [k, c] : quad_) out.add_quadratic(k, ConstExpr(c.value() * scale));
    out.linear_.add_scaled(linear_, ConstExpr(scale));
    for (const auto& [v, c] : half_) {
        // c * v(v-1)/2 scaled: contributes (c*scale/2) v^2 - (c*scale/2) v.
        Integer w = c.value() * scale / 2;
        out.add_quadratic(VarPair(v, v), ConstExpr(w));
        out.linear_.add_term(v, ConstExpr(-w));
    }
    return {out, rhs * scale};
}

bool QuadraticPolynomial::operator==(const QuadraticPolynomial& o) const {
    if (!(linear_ == o.linear_)) return false;
    if (quad_.size() != o.quad_.size() || half_.size() != o.half_.size()) return false;
    for (auto it = quad_.begin(), jt = o.quad_.begin(); it != quad_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || !(it->second == jt->second)) return false;
    for (auto it = half_.begin(), jt = o.half_.begin(); it != half_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

}  // namespace nilknap
