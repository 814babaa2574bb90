#include "nilknap/const_expr.hpp"

namespace nilknap {
namespace {

// Bit budget for eager folding. 5^59 (~137 bits) folds; (2z)^(5^59+1) with its
// ~1.4e41-bit result does not and stays symbolic.
constexpr unsigned long kMaxResultBits = 1u << 22;

}  // namespace

ConstExpr::ConstExpr(Integer v) : kind_(Kind::Literal), value_(std::move(v)) {}

ConstExpr::ConstExpr(Kind k, std::shared_ptr<const ConstExpr> l, std::shared_ptr<const ConstExpr> r)
    : kind_(k), lhs_(std::move(l)), rhs_(std::move(r)) {}

const Integer& ConstExpr::value() const {
    if (!is_literal())
        throw NonMaterializable("constant expression is symbolic: " + to_text());
    return value_;
}

ConstExpr ConstExpr::add(const ConstExpr& a, const ConstExpr& b) {
    if (a.is_literal() && b.is_literal()) return ConstExpr(a.value_ + b.value_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return ConstExpr(Kind::Add, std::make_shared<ConstExpr>(a), std::make_shared<ConstExpr>(b));
}

ConstExpr ConstExpr::mul(const ConstExpr& a, const ConstExpr& b) {
    if (a.is_literal() && b.is_literal()) return ConstExpr(a.value_ * b.value_);
    if (a.is_zero() || b.is_zero()) return ConstExpr(Integer(0));
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    return ConstExpr(Kind::Mul, std::make_shared<ConstExpr>(a), std::make_shared<ConstExpr>(b));
}

ConstExpr ConstExpr::pow(const ConstExpr& base, const ConstExpr& exponent) {
    if (base.is_literal() && exponent.is_literal()) {
        const Integer& e = exponent.value_;
        if (e < 0) throw std::domain_error("negative exponent in integer constant expression");
        if (e == 0) return ConstExpr(Integer(1));
        const unsigned long base_bits = mpz_sizeinbase(base.value_.get_mpz_t(), 2);
        if (fits_ulong(e) && base_bits * e.get_ui() <= kMaxResultBits) {
            Integer r;
            mpz_pow_ui(r.get_mpz_t(), base.value_.get_mpz_t(), e.get_ui());
            return ConstExpr(std::move(r));
        }
        if (base.value_ == 1) return ConstExpr(Integer(1));
        if (base.value_ == 0) return ConstExpr(Integer(0));
        if (base.value_ == -1) return ConstExpr(Integer(e % 2 == 0 ? 1 : -1));
    }
    return ConstExpr(Kind::Pow, std::make_shared<ConstExpr>(base),
                     std::make_shared<ConstExpr>(exponent));
}

ConstExpr ConstExpr::negated() const {
    if (is_literal()) return ConstExpr(-value_);
    return mul(ConstExpr(Integer(-1)), *this);
}

std::string ConstExpr::to_text() const {
    switch (kind_) {
        case Kind::Literal:
            return value_.get_str();
        case Kind::Add:
            return "add(" + lhs_->to_text() + "," + rhs_->to_text() + ")";
        case Kind::Mul:
            return "mul(" + lhs_->to_text() + "," + rhs_->to_text() + ")";
        case Kind::Pow:
            return "pow(" + lhs_->to_text() + "," + rhs_->to_text() + ")";
    }
    return {};
}

}  // namespace nilknap
