#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilknap/integer.hpp"
#include "nilknap/word.hpp"

namespace nilknap {

/// Canonical form of an element of the free class-2 nilpotent group of a
/// given rank:
///
///     x_1^{a_1} ... x_n^{a_n} * prod_{i<j} [x_i, x_j]^{b_ij}
///
/// with [x_i, x_j] = x_i^{-1} x_j^{-1} x_i x_j. The commutator exponents are
/// stored sparsely with zero entries removed, so structural equality of two
/// normal forms decides equality of the group elements they represent.
class NormalForm {
  public:
    using BetaMap = std::map<std::pair<int, int>, Integer>;

    explicit NormalForm(int rank) : rank_(rank), alpha_(static_cast<std::size_t>(rank)) {
        if (rank < 1) throw std::invalid_argument("rank must be positive");
    }

    static NormalForm identity(int rank) { return NormalForm(rank); }

    static NormalForm generator(int rank, int index, Integer exponent = Integer(1)) {
        NormalForm g(rank);
        g.set_alpha(index, std::move(exponent));
        return g;
    }

    /// Central element [x_i, x_j]^e with i < j.
    static NormalForm basic_commutator(int rank, int i, int j, Integer exponent = Integer(1)) {
        NormalForm g(rank);
        g.add_beta(i, j, std::move(exponent));
        return g;
    }

    int rank() const { return rank_; }

    const Integer& alpha(int i) const { return alpha_.at(static_cast<std::size_t>(i - 1)); }
    void set_alpha(int i, Integer v) {
        check_index(i);
        alpha_.at(static_cast<std::size_t>(i - 1)) = std::move(v);
    }
    void add_alpha(int i, const Integer& v) {
        check_index(i);
        alpha_.at(static_cast<std::size_t>(i - 1)) += v;
    }

    const BetaMap& beta() const { return beta_; }
    Integer beta(int i, int j) const {
        auto it = beta_.find({i, j});
        return it == beta_.end() ? Integer(0) : it->second;
    }
    void add_beta(int i, int j, const Integer& v) {
        if (i < 1 || j <= i || j > rank_)
            throw std::invalid_argument("commutator indices must satisfy 1 <= i < j <= rank");
        if (v == 0) return;
        auto [it, inserted] = beta_.try_emplace({i, j}, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) beta_.erase(it);
        }
    }

    bool is_identity() const {
        for (const auto& a : alpha_)
            if (a != 0) return false;
        return beta_.empty();
    }

    /// Whether the element is central (all generator exponents zero).
    bool is_central() const {
        for (const auto& a : alpha_)
            if (a != 0) return false;
        return true;
    }

    bool operator==(const NormalForm& o) const {
        return rank_ == o.rank_ && alpha_ == o.alpha_ && beta_ == o.beta_;
    }
    bool operator!=(const NormalForm& o) const { return !(*this == o); }

  private:
    void check_index(int i) const {
        if (i < 1 || i > rank_) throw std::invalid_argument("generator index out of range");
    }

    int rank_;
    std::vector<Integer> alpha_;
    BetaMap beta_;
};

/// Collection product. Moving the right factor's generators into place past
/// the left factor's uses yx = xy [x,y]^{-1} pairwise, which contributes
/// -a.alpha_j * b.alpha_i to the (i, j) commutator exponent for every i < j.
NormalForm multiply(const NormalForm& a, const NormalForm& b);

NormalForm inverse(const NormalForm& a);

/// Square-and-multiply power; agrees exactly with iterated multiplication.
NormalForm power(const NormalForm& a, const Integer& e);

/// [a, b] = a^{-1} b^{-1} a b.
NormalForm commutator(const NormalForm& a, const NormalForm& b);

/// Collect a free word into its normal form (letter-by-letter products).
NormalForm reduce_word(const Word& w);

/// Canonical word for a normal form: generator letters in ascending index
/// order, then each commutator [x_i, x_j]^b spelled as the four-letter word
/// x_i^{-b} x_j^{-1} x_i^{b} x_j (equal to [x_i^b, x_j]).
Word spell(const NormalForm& nf);

}  // namespace nilknap
