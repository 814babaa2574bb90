#include "nilknap/normal_form.hpp"

namespace nilknap {

NormalForm multiply(const NormalForm& a, const NormalForm& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("normal form rank mismatch: incompatible groups");
    const int n = a.rank();
    NormalForm r(n);

    for (int i = 1; i <= n; ++i) r.set_alpha(i, a.alpha(i) + b.alpha(i));

    for (const auto& [key, v] : a.beta()) r.add_beta(key.first, key.second, v);
    for (const auto& [key, v] : b.beta()) r.add_beta(key.first, key.second, v);

    // Cross terms from collection: for i < j, x_i letters of b pass the
    // x_j letters of a and pick up [x_i, x_j]^{-a_j * b_i}.
    for (int j = 2; j <= n; ++j) {
        const Integer& aj = a.alpha(j);
        if (aj == 0) continue;
        for (int i = 1; i < j; ++i) {
            const Integer& bi = b.alpha(i);
            if (bi == 0) continue;
            r.add_beta(i, j, -aj * bi);
        }
    }
    return r;
}

NormalForm inverse(const NormalForm& a) {
    const int n = a.rank();
    NormalForm r(n);
    for (int i = 1; i <= n; ++i) r.set_alpha(i, -a.alpha(i));
    for (const auto& [key, v] : a.beta()) r.add_beta(key.first, key.second, -v);
    // Solving multiply(a, x) == identity leaves -a_i * a_j on each pair.
    for (int j = 2; j <= n; ++j) {
        if (a.alpha(j) == 0) continue;
        for (int i = 1; i < j; ++i) {
            if (a.alpha(i) == 0) continue;
            r.add_beta(i, j, -a.alpha(i) * a.alpha(j));
        }
    }
    return r;
}

NormalForm power(const NormalForm& a, const Integer& e) {
    if (e == 0) return NormalForm::identity(a.rank());
    if (e < 0) return power(inverse(a), -e);
    NormalForm base = a;
    NormalForm acc = NormalForm::identity(a.rank());
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = multiply(acc, base);
        k >>= 1;
        if (k > 0) base = multiply(base, base);
    }
    return acc;
}

NormalForm commutator(const NormalForm& a, const NormalForm& b) {
    if (a.rank() != b.rank())
        throw std::invalid_argument("normal form rank mismatch: incompatible groups");
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

NormalForm reduce_word(const Word& w) {
    NormalForm acc = NormalForm::identity(w.rank());
    for (const auto& letter : w.letters())
        acc = multiply(acc, NormalForm::generator(w.rank(), letter.generator, letter.exponent));
    return acc;
}

Word spell(const NormalForm& nf) {
    Word w(nf.rank());
    for (int i = 1; i <= nf.rank(); ++i) w.append(i, nf.alpha(i));
    for (const auto& [key, b] : nf.beta()) {
        const auto [i, j] = key;
        w.append(i, -b);
        w.append(j, Integer(-1));
        w.append(i, b);
        w.append(j, Integer(1));
    }
    return w;
}

}  // namespace nilknap
