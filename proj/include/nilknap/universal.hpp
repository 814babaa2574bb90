#pragma once

#include <optional>
#include <string>

#include "nilknap/compile.hpp"
#include "nilknap/system.hpp"

namespace nilknap {

/// Parameters of the universal system: a positive query integer x and the
/// three positive constants that select the recursively enumerable set. The
/// optional toy exponent replaces the tower constant 5^59 for desk-scale
/// runs; the substitution is recorded in the emitted system's notes.
struct UniversalParams {
    Integer x = 1;
    Integer z = 1;
    Integer y = 1;
    Integer u = 1;
    std::optional<Integer> toy_exponent;

    void validate() const;
};

/// The fixed 51-equation degree-2 universal Diophantine system, with the
/// parameters substituted. Greek symbols are transliterated (G1..G27, alf,
/// Del, eps, lam, gam, phi; parameters bz, by, bu enter as constants).
/// Without a toy exponent the coefficient (2z)^(5^59+1) in B's equation
/// stays symbolic and refuses to materialize.
DiophantineSystem jones_system(const UniversalParams& params);

/// Structural accounting of a compilation next to the published figures
/// (167 equation commutators, 155 ties, 322 total, 334 inputs). Matching
/// them is informational; the report documents whatever this toolkit's
/// allocation scheme produces.
struct ResourceReport {
    std::size_t equations = 0;
    std::size_t variables = 0;
    std::size_t input_count = 0;
    int rank = 0;
    int equation_carriers = 0;
    int letter_pairs = 0;
    int internal_ties = 0;
    int reuse_ties = 0;
    int accumulators = 0;
    int forced_constants = 0;
    int total_commutators = 0;
    bool packed = false;

    std::string render() const;
};

ResourceReport resource_report(const DiophantineSystem& system, const CompileResult& compiled);

}  // namespace nilknap
