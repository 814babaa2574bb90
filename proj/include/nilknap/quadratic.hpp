#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilknap/const_expr.hpp"
#include "nilknap/integer.hpp"
#include "nilknap/names.hpp"

namespace nilknap {

using Assignment = std::map<std::string, Integer>;

/// Integer-coefficient affine form: sum of coeff * variable plus a constant.
/// Zero coefficients are never stored. Coefficients are exact constant
/// expressions; ordinary integers fold to literals.
class LinearForm {
  public:
    using Terms = std::map<std::string, ConstExpr, NameLess>;

    LinearForm() = default;
    explicit LinearForm(ConstExpr constant) : constant_(std::move(constant)) {}

    const Terms& terms() const { return terms_; }
    const ConstExpr& constant() const { return constant_; }

    void add_term(const std::string& var, const ConstExpr& coeff);
    void add_constant(const ConstExpr& c) { constant_ = constant_ + c; }
    void add(const LinearForm& o);
    void add_scaled(const LinearForm& o, const ConstExpr& scale);

    bool is_zero() const { return terms_.empty() && constant_.is_zero(); }
    bool is_constant() const { return terms_.empty(); }

    Integer evaluate(const Assignment& values) const;

    bool operator==(const LinearForm& o) const;

  private:
    Terms terms_;
    ConstExpr constant_{Integer(0)};
};

/// Quadratic polynomial over named integer variables:
///
///     sum quadratic[{u,v}] * u * v  +  linear  +  sum halfsquare[v] * C(v,2)
///
/// The halfsquare component carries coefficients of the integer-valued basis
/// polynomial C(v,2) = v(v-1)/2, which arises when a power g^e of an element
/// with two nonzero generator exponents is evaluated symbolically. Equations
/// emitted into Diophantine systems are always converted to pure integer
/// polynomial form first (see to_pure_equation).
class QuadraticPolynomial {
  public:
    using QuadTerms = std::map<VarPair, ConstExpr>;
    using HalfTerms = std::map<std::string, ConstExpr, NameLess>;

    const QuadTerms& quadratic() const { return quad_; }
    const LinearForm& linear() const { return linear_; }
    LinearForm& linear() { return linear_; }
    const HalfTerms& halfsquare() const { return half_; }

    void add_quadratic(const VarPair& key, const ConstExpr& coeff);
    void add_halfsquare(const std::string& var, const ConstExpr& coeff);
    void add(const QuadraticPolynomial& o);

    bool is_zero() const { return quad_.empty() && half_.empty() && linear_.is_zero(); }
    bool is_pure() const { return half_.empty(); }
    int degree() const;

    Integer evaluate(const Assignment& values) const;

    /// Converts `this = rhs` into an equivalent pure-polynomial integer
    /// equation. Even halfsquare coefficients fold as (c/2)(v^2 - v); if any
    /// coefficient is odd the whole equation is doubled, which preserves the
    /// integer solution set. Requires literal coefficients.
    std::pair<QuadraticPolynomial, Integer> to_pure_equation(const Integer& rhs) const;

    bool operator==(const QuadraticPolynomial& o) const;

  private:
    QuadTerms quad_;
    LinearForm linear_;
    HalfTerms half_;
};

}  // namespace nilknap
