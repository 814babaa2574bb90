#include "nilknap/pool.hpp"

namespace nilknap {

std::pair<int, int> CommutatorPool::record(std::pair<int, int> p, PairUse use,
                                           const std::string& note) {
    used_.insert(p);
    log_.push_back({p, use, note});
    return p;
}

std::pair<int, int> CommutatorPool::allocate_letter_pair(const std::string& note) {
    if (packed_) {
        for (int j : letter_gens_)
            for (int i : letter_gens_) {
                if (i >= j) break;
                if (!used_.count({i, j})) {
                    letter_gens_.insert(i);
                    letter_gens_.insert(j);
                    return record({i, j}, PairUse::GadgetLetters, note);
                }
            }
        // All pairs of existing letter generators are spent; add one.
        int g = ++rank_;
        letter_gens_.insert(g);
        for (int i : letter_gens_) {
            if (i == g) continue;
            if (!used_.count({i, g})) return record({i, g}, PairUse::GadgetLetters, note);
        }
        int h = ++rank_;
        letter_gens_.insert(h);
        return record({g, h}, PairUse::GadgetLetters, note);
    }
    int a = ++rank_;
    int b = ++rank_;
    letter_gens_.insert(a);
    letter_gens_.insert(b);
    return record({a, b}, PairUse::GadgetLetters, note);
}

std::pair<int, int> CommutatorPool::allocate_central_pair(PairUse use, const std::string& note) {
    for (;;) {
        for (int j = 2; j <= rank_; ++j)
            for (int i = 1; i < j; ++i) {
                if (used_.count({i, j})) continue;
                if (letter_gens_.count(i) && letter_gens_.count(j)) continue;
                return record({i, j}, use, note);
            }
        ++rank_;
    }
}

}  // namespace nilknap
