#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nilknap/normal_form.hpp"
#include "nilknap/word.hpp"

namespace nilknap {

struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

/// Upper unitriangular integer matrix: unit diagonal, zeros below. Entries
/// are exact arbitrary-precision integers; indices are 1-based.
class UnitriangularMatrix {
  public:
    explicit UnitriangularMatrix(int dim);

    static UnitriangularMatrix identity(int dim) { return UnitriangularMatrix(dim); }

    int dim() const { return dim_; }

    const Integer& entry(int i, int j) const {
        return entries_[static_cast<std::size_t>(i - 1) * dim_ + (j - 1)];
    }
    void set_entry(int i, int j, Integer v);

    bool is_identity() const;

    friend UnitriangularMatrix operator*(const UnitriangularMatrix& a,
                                         const UnitriangularMatrix& b);

    /// Exact inverse via the nilpotent part: (I + N)^{-1} = sum (-N)^k.
    UnitriangularMatrix inverse() const;

    bool operator==(const UnitriangularMatrix& o) const {
        return dim_ == o.dim_ && entries_ == o.entries_;
    }
    bool operator!=(const UnitriangularMatrix& o) const { return !(*this == o); }

  private:
    int dim_;
    std::vector<Integer> entries_;  // row-major dense
};

UnitriangularMatrix matrix_commutator(const UnitriangularMatrix& a, const UnitriangularMatrix& b);
UnitriangularMatrix matrix_power(const UnitriangularMatrix& a, const Integer& e);

/// Image of the generator x_i of the free rank-n class-2 group in
/// UT_{2n+1}(Z): identity plus unit entries at (i, n+1) and (n+1, n+1+i).
UnitriangularMatrix rho_generator(int i, int n);

/// Image of a free word: product of generator images, inverse letters via
/// exact matrix inverses.
UnitriangularMatrix rho_word(const Word& w);

/// Decodes a matrix in the image of rho back to its normal form. Generator
/// exponents are read from column n+1; commutator exponents from the central
/// residual rho(x_1^{a_1}..x_n^{a_n})^{-1} * M at entries (i, n+1+j). The
/// decoded form is re-encoded and compared against M; a mismatch means M is
/// not in the image pattern and raises DecodeError.
NormalForm matrix_to_normal_form(const UnitriangularMatrix& m, int n);

}  // namespace nilknap
