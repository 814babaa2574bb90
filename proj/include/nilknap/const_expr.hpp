#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "nilknap/integer.hpp"

namespace nilknap {

/// Thrown when an exact value is requested for an expression whose magnitude
/// cannot be materialized (e.g. a power tower with an astronomically large
/// exponent). Evaluation fails loudly; nothing is ever approximated.
struct NonMaterializable : std::runtime_error {
    explicit NonMaterializable(const std::string& what) : std::runtime_error(what) {}
};

/// Exact integer-valued expression tree: literals, sums, products, and powers
/// whose exponents may themselves be expressions. Construction eagerly folds
/// to a literal whenever the result stays within a sane bit budget; anything
/// larger remains symbolic and refuses to evaluate.
class ConstExpr {
  public:
    enum class Kind { Literal, Add, Mul, Pow };

    ConstExpr() : ConstExpr(Integer(0)) {}
    ConstExpr(long v) : ConstExpr(Integer(v)) {}  // NOLINT: implicit by design
    ConstExpr(Integer v);                         // NOLINT: implicit by design

    static ConstExpr add(const ConstExpr& a, const ConstExpr& b);
    static ConstExpr mul(const ConstExpr& a, const ConstExpr& b);
    static ConstExpr pow(const ConstExpr& base, const ConstExpr& exponent);

    Kind kind() const { return kind_; }
    bool is_literal() const { return kind_ == Kind::Literal; }

    /// Exact integer value; throws NonMaterializable for symbolic nodes.
    const Integer& value() const;

    /// Literal zero/one tests. Symbolic expressions are never zero here: the
    /// only expressions that stay symbolic are powers of nonzero bases.
    bool is_zero() const { return is_literal() && value_ == 0; }
    bool is_one() const { return is_literal() && value_ == 1; }

    const ConstExpr& lhs() const { return *lhs_; }
    const ConstExpr& rhs() const { return *rhs_; }

    ConstExpr negated() const;

    /// Serialization: decimal literals, or nested add(..)/mul(..)/pow(..).
    std::string to_text() const;

    bool operator==(const ConstExpr& o) const { return to_text() == o.to_text(); }

    friend ConstExpr operator+(const ConstExpr& a, const ConstExpr& b) { return add(a, b); }
    friend ConstExpr operator*(const ConstExpr& a, const ConstExpr& b) { return mul(a, b); }

  private:
    ConstExpr(Kind k, std::shared_ptr<const ConstExpr> l, std::shared_ptr<const ConstExpr> r);

    Kind kind_;
    Integer value_;  // literal payload
    std::shared_ptr<const ConstExpr> lhs_, rhs_;
};

}  // namespace nilknap
