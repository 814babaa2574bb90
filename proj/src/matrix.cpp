#include "nilknap/matrix.hpp"

namespace nilknap {

UnitriangularMatrix::UnitriangularMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
    entries_.assign(static_cast<std::size_t>(dim) * dim, Integer(0));
    for (int i = 1; i <= dim; ++i) set_entry(i, i, Integer(1));
}

void UnitriangularMatrix::set_entry(int i, int j, Integer v) {
    if (i < 1 || i > dim_ || j < 1 || j > dim_)
        throw std::invalid_argument("matrix index out of range");
    if (i == j && v != 1) throw std::invalid_argument("diagonal entries must stay 1");
    if (i > j && v != 0) throw std::invalid_argument("below-diagonal entries must stay 0");
    entries_[static_cast<std::size_t>(i - 1) * dim_ + (j - 1)] = std::move(v);
}

bool UnitriangularMatrix::is_identity() const {
    for (int i = 1; i <= dim_; ++i)
        for (int j = i + 1; j <= dim_; ++j)
            if (entry(i, j) != 0) return false;
    return true;
}

UnitriangularMatrix operator*(const UnitriangularMatrix& a, const UnitriangularMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    const int n = a.dim_;
    UnitriangularMatrix r(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            Integer s = 0;
            for (int k = i; k <= j; ++k) s += a.entry(i, k) * b.entry(k, j);
            r.set_entry(i, j, std::move(s));
        }
    }
    return r;
}

UnitriangularMatrix UnitriangularMatrix::inverse() const {
    // Gaussian back-substitution specialised to the unit-diagonal case.
    const int n = dim_;
    UnitriangularMatrix r(n);
    for (int j = n; j >= 1; --j) {
        for (int i = j - 1; i >= 1; --i) {
            Integer s = -entry(i, j);
            for (int k = i + 1; k < j; ++k) s -= entry(i, k) * r.entry(k, j);
            r.set_entry(i, j, std::move(s));
        }
    }
    return r;
}

UnitriangularMatrix matrix_commutator(const UnitriangularMatrix& a, const UnitriangularMatrix& b) {
    return a.inverse() * b.inverse() * a * b;
}

UnitriangularMatrix matrix_power(const UnitriangularMatrix& a, const Integer& e) {
    if (e == 0) return UnitriangularMatrix::identity(a.dim());
    if (e < 0) return matrix_power(a.inverse(), -e);
    UnitriangularMatrix base = a;
    UnitriangularMatrix acc = UnitriangularMatrix::identity(a.dim());
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

UnitriangularMatrix rho_generator(int i, int n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
    UnitriangularMatrix m(2 * n + 1);
    m.set_entry(i, n + 1, Integer(1));
    m.set_entry(n + 1, n + 1 + i, Integer(1));
    return m;
}

UnitriangularMatrix rho_word(const Word& w) {
    const int n = w.rank();
    UnitriangularMatrix acc = UnitriangularMatrix::identity(2 * n + 1);
    for (const auto& letter : w.letters())
        acc = acc * matrix_power(rho_generator(letter.generator, n), letter.exponent);
    return acc;
}

NormalForm matrix_to_normal_form(const UnitriangularMatrix& m, int n) {
    if (m.dim() != 2 * n + 1)
        throw DecodeError("matrix dimension does not match rank: expected " +
                          std::to_string(2 * n + 1));
    NormalForm nf(n);
    for (int i = 1; i <= n; ++i) nf.set_alpha(i, m.entry(i, n + 1));

    Word gens(n);
    for (int i = 1; i <= n; ++i) gens.append(i, nf.alpha(i));
    UnitriangularMatrix residual = rho_word(gens).inverse() * m;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) nf.add_beta(i, j, residual.entry(i, n + 1 + j));

    if (rho_word(spell(nf)) != m)
        throw DecodeError("matrix is not in the image of the embedding");
    return nf;
}

}  // namespace nilknap
