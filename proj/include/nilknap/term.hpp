#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "nilknap/const_expr.hpp"
#include "nilknap/names.hpp"
#include "nilknap/quadratic.hpp"

namespace nilknap {

/// Diophantine term: a binary computation tree whose leaves are exact
/// integer constants or variables and whose internal nodes are sums or
/// products.
class Term {
  public:
    enum class Kind { Constant, Variable, Sum, Product };

    static Term constant(ConstExpr value);
    static Term variable(std::string name);
    static Term sum(const Term& a, const Term& b);
    static Term product(const Term& a, const Term& b);

    Term() : kind_(Kind::Constant), value_(Integer(0)) {}

    Kind kind() const { return kind_; }
    const ConstExpr& constant_value() const { return value_; }
    const std::string& variable_name() const { return name_; }
    const Term& lhs() const { return *lhs_; }
    const Term& rhs() const { return *rhs_; }

    bool is_simple() const { return kind_ == Kind::Constant || kind_ == Kind::Variable; }

    Integer evaluate(const Assignment& values) const;
    void collect_variables(std::set<std::string>& out) const;

    /// Interval of possible values when every variable ranges over its
    /// bounds. Exact interval arithmetic over sums and products.
    std::pair<Integer, Integer> value_interval(
        const std::map<std::string, std::pair<Integer, Integer>>& bounds) const;

    Term negated() const { return product(constant(ConstExpr(Integer(-1))), *this); }

  private:
    Kind kind_;
    ConstExpr value_;
    std::string name_;
    std::shared_ptr<const Term> lhs_, rhs_;
};

/// Graded-lex order on monomials (higher total degree first, then
/// lexicographic by natural variable-name order). Map iteration in this
/// order is the canonical printing order.
struct MonomialLess {
    bool operator()(const std::vector<std::string>& a, const std::vector<std::string>& b) const {
        if (a.size() != b.size()) return a.size() > b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = natural_compare(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

/// Fully expanded polynomial of arbitrary degree: monomial -> coefficient,
/// where a monomial is the sorted multiset of its variable names. The empty
/// monomial is the constant term.
class GeneralPoly {
  public:
    using Monomial = std::vector<std::string>;
    using Terms = std::map<Monomial, ConstExpr, MonomialLess>;

    static GeneralPoly from_term(const Term& t);

    const Terms& terms() const { return terms_; }
    void add_monomial(Monomial m, const ConstExpr& coeff);
    void add(const GeneralPoly& o);
    void subtract(const GeneralPoly& o);

    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    Integer evaluate(const Assignment& values) const;

    /// Conversion to quadratic form; throws std::domain_error above degree 2.
    QuadraticPolynomial to_quadratic() const;

    /// Sum-of-products term with monomials in graded-lex order.
    Term to_term() const;

    bool operator==(const GeneralPoly& o) const;

  private:
    Terms terms_;
};

}  // namespace nilknap
