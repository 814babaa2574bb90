#pragma once

#include <stdexcept>
#include <vector>

#include "nilknap/integer.hpp"

namespace nilknap {

/// One signed letter of a free word: generator index (1-based) with a
/// nonzero integer exponent.
struct Letter {
    int generator = 0;
    Integer exponent;
};

/// A free word over x_1..x_rank and their inverses. Zero-exponent letters
/// are dropped on construction; adjacent letters are kept as written.
class Word {
  public:
    explicit Word(int rank) : rank_(rank) {
        if (rank < 1) throw std::invalid_argument("word rank must be positive");
    }

    Word(int rank, std::vector<Letter> letters) : Word(rank) {
        for (auto& l : letters) append(l.generator, l.exponent);
    }

    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }

    void append(int generator, Integer exponent) {
        if (generator < 1 || generator > rank_)
            throw std::invalid_argument("letter generator index out of range");
        if (exponent == 0) return;
        letters_.push_back({generator, std::move(exponent)});
    }

    /// Concatenation (ranks must agree).
    friend Word operator*(const Word& a, const Word& b) {
        if (a.rank_ != b.rank_) throw std::invalid_argument("word rank mismatch");
        Word r = a;
        for (const auto& l : b.letters_) r.append(l.generator, l.exponent);
        return r;
    }

    Word inverse() const {
        Word r(rank_);
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            r.append(it->generator, -it->exponent);
        return r;
    }

    static Word generator(int rank, int index, Integer exponent = Integer(1)) {
        Word w(rank);
        w.append(index, std::move(exponent));
        return w;
    }

  private:
    int rank_;
    std::vector<Letter> letters_;
};

}  // namespace nilknap
