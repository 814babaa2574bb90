#pragma once

#include <gmpxx.h>

#include <string>

namespace nilknap {

/// Exact arbitrary-precision integer. Exponents in class-2 collection
/// compound multiplicatively, so fixed-width arithmetic is never safe here.
using Integer = mpz_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline Integer integer_from_string(const std::string& s) { return Integer(s); }

/// C(e, 2) = e(e-1)/2, exact for every integer e (the product of two
/// consecutive integers is even).
inline Integer choose2(const Integer& e) {
    Integer t = e * (e - 1);
    return t / 2;
}

inline bool fits_ulong(const Integer& v) { return v.fits_ulong_p(); }

}  // namespace nilknap
