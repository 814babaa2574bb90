#include "nilknap/lattice.hpp"

#include <stdexcept>

namespace nilknap {
namespace {

std::size_t rows_of(const IntMatrix& m) { return m.size(); }
std::size_t cols_of(const IntMatrix& m) { return m.empty() ? 0 : m[0].size(); }

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
}

void add_column_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (auto& row : m) row[dst] += q * row[src];
}

void negate_column(IntMatrix& m, std::size_t c) {
    for (auto& row : m) row[c] = -row[c];
}

/// Column echelon reduction of `work` with the same column operations
/// mirrored on `u`. Returns the pivot (row, column) list.
std::vector<std::pair<std::size_t, std::size_t>> echelonize(IntMatrix& work, IntMatrix& u) {
    const std::size_t m = rows_of(work), k = cols_of(work);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t c = 0;
    for (std::size_t r = 0; r < m && c < k; ++r) {
        // Euclidean reduction across columns c..k-1 on row r.
        for (;;) {
            std::size_t best = k;
            for (std::size_t j = c; j < k; ++j) {
                if (work[r][j] == 0) continue;
                if (best == k ||
                    mpz_cmpabs(work[r][j].get_mpz_t(), work[r][best].get_mpz_t()) < 0)
                    best = j;
            }
            if (best == k) break;  // row is zero from column c on
            swap_columns(work, c, best);
            swap_columns(u, c, best);
            bool done = true;
            for (std::size_t j = c + 1; j < k; ++j) {
                if (work[r][j] == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), work[r][j].get_mpz_t(), work[r][c].get_mpz_t());
                add_column_multiple(work, j, c, -q);
                add_column_multiple(u, j, c, -q);
                if (work[r][j] != 0) done = false;
            }
            if (done) break;
        }
        if (work[r][c] != 0) {
            if (work[r][c] < 0) {
                negate_column(work, c);
                negate_column(u, c);
            }
            pivots.emplace_back(r, c);
            ++c;
        }
    }
    return pivots;
}

}  // namespace

LinearSolveResult solve_integer_linear(const IntMatrix& a, const std::vector<Integer>& d) {
    const std::size_t m = rows_of(a), k = cols_of(a);
    if (d.size() != m) throw std::invalid_argument("right-hand side size mismatch");
    for (const auto& row : a)
        if (row.size() != k) throw std::invalid_argument("ragged coefficient matrix");

    IntMatrix work = a;
    IntMatrix u(k, std::vector<Integer>(k, Integer(0)));
    for (std::size_t i = 0; i < k; ++i) u[i][i] = 1;

    auto pivots = k == 0 ? std::vector<std::pair<std::size_t, std::size_t>>{}
                         : echelonize(work, u);

    // Forward substitution in the echelon columns, divisibility-checked.
    std::vector<Integer> y(k, Integer(0));
    std::vector<bool> row_has_pivot(m, false);
    for (const auto& [r, c] : pivots) {
        Integer residue = d[r];
        for (std::size_t j = 0; j < c; ++j) residue -= work[r][j] * y[j];
        Integer q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residue.get_mpz_t(),
                    work[r][c].get_mpz_t());
        if (rem != 0) return {};
        y[c] = q;
        row_has_pivot[r] = true;
    }
    for (std::size_t r = 0; r < m; ++r) {
        if (row_has_pivot[r]) continue;
        Integer residue = d[r];
        for (std::size_t j = 0; j < k; ++j) residue -= work[r][j] * y[j];
        if (residue != 0) return {};
    }

    LinearSolveResult result;
    result.consistent = true;
    result.particular.assign(k, Integer(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) result.particular[i] += u[i][j] * y[j];

    const std::size_t rank = pivots.size();
    result.kernel.assign(k, std::vector<Integer>(k - rank, Integer(0)));
    for (std::size_t j = rank; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i) result.kernel[i][j - rank] = u[i][j];
    return result;
}

std::pair<IntMatrix, std::vector<int>> column_hermite(const IntMatrix& b) {
    const std::size_t k = rows_of(b), p = cols_of(b);
    IntMatrix work = b;
    IntMatrix u(p, std::vector<Integer>(p, Integer(0)));
    for (std::size_t i = 0; i < p; ++i) u[i][i] = 1;
    std::vector<int> pivot_rows;
    if (p > 0)
        for (const auto& [r, c] : echelonize(work, u)) pivot_rows.push_back(static_cast<int>(r));
    // Drop the all-zero columns beyond the pivots.
    const std::size_t rank = pivot_rows.size();
    for (auto& row : work) row.resize(rank);
    return {work, pivot_rows};
}

}  // namespace nilknap
