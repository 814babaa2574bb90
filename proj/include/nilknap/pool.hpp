#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace nilknap {

enum class PairUse {
    Equation,        // carries an equation value in the target
    GadgetLetters,   // the two generators appear as free letters
    InternalTie,     // gadget-internal slot equality (c1/c2)
    ReuseTie,        // ties a variable occurrence to its declaration slot
    Accumulator,     // term-mode value accumulator
    ForcedConstant,  // term-mode constant-forcing commutator
};

struct PairAllocation {
    std::pair<int, int> generators;
    PairUse use;
    std::string note;
};

/// Allocates basic commutators [x_i, x_j] for a single compilation.
///
/// Letter pairs are the only pairs whose generators occur as free letters in
/// the instance. Central pairs (ties, accumulators, equation carriers) are
/// packed among the remaining pairs, but never between two letter generators
/// of different gadgets: a commutator with both generators free would pick
/// up collection cross-terms and its exponent constraint would no longer be
/// the plain equality it is meant to enforce.
///
/// In fresh mode every letter pair gets two brand-new generators. In packed
/// mode letter pairs reuse letter generators (distinct pairs, shared
/// generators), reproducing the economical construction.
class CommutatorPool {
  public:
    explicit CommutatorPool(bool packed = false) : packed_(packed) {}

    bool packed() const { return packed_; }
    int rank() const { return rank_; }
    const std::vector<PairAllocation>& log() const { return log_; }

    bool is_letter_generator(int g) const { return letter_gens_.count(g) > 0; }
    bool is_allocated(int i, int j) const { return used_.count({i, j}) > 0; }

    std::pair<int, int> allocate_letter_pair(const std::string& note);
    std::pair<int, int> allocate_central_pair(PairUse use, const std::string& note);

  private:
    std::pair<int, int> record(std::pair<int, int> p, PairUse use, const std::string& note);

    bool packed_;
    int rank_ = 0;
    std::set<std::pair<int, int>> used_;
    std::set<int> letter_gens_;
    std::vector<PairAllocation> log_;
};

}  // namespace nilknap
