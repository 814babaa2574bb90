#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nilknap/kp.hpp"
#include "nilknap/matrix.hpp"
#include "nilknap/solve.hpp"
#include "nilknap/system.hpp"

namespace nilknap {

/// Parse failure with 1-based position information.
struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int line_, int column_, const std::string& what)
        : std::runtime_error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + what),
          line(line_),
          column(column_) {}
};

/// System file format:
///   # note lines
///   vars: x y z
///   eq: <polynomial> = <polynomial>
/// Polynomials use + - * ^ over declared names, decimal integers, and the
/// constant expressions pow(b,e), mul(a,b), add(a,b). The canonical printer
/// expands each side into graded-lex monomial order.
std::string print_system(const DiophantineSystem& system);
DiophantineSystem parse_system(const std::string& text);

/// Instance file format:
///   rank: n
///   g1: <word>        (one line per input)
///   g: <word>         (target)
///   map: x=1 y=2      (optional variable map)
/// Word tokens are x<k> and c<k,l> with k<l, each optionally followed by
/// ^<integer>; an empty word is the identity.
std::string print_instance(const KPInstance& instance);
KPInstance parse_instance(const std::string& text);

/// Normal form as an instance word ("1" for the identity).
std::string print_normal_form(const NormalForm& nf);

std::string print_witness(const Witness& w, const std::vector<std::string>& order);
Assignment parse_witness(const std::string& text);

std::string print_matrix(const UnitriangularMatrix& m);

/// Canonical polynomial rendering of one expanded equation side.
std::string print_poly(const GeneralPoly& poly);

}  // namespace nilknap
