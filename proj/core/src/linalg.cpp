#include "gammakit/linalg.hpp"

#include <algorithm>

namespace gammakit {

int exact_rank(const RationalMatrix& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<Integer>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
        Integer lcm = 1;
        for (const auto& q : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Integer> scaled;
        scaled.reserve(cols);
        for (const auto& q : row) scaled.push_back(q.get_num() * (lcm / q.get_den()));
        m.push_back(std::move(scaled));
    }

    Integer prev_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        auto pivot = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(rank), m.end(),
                                  [c](const auto& row) { return row[c] != 0; });
        if (pivot == m.end()) continue;
        std::iter_swap(m.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
        const auto& p = m[rank];
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                // Exact division is guaranteed by Sylvester's identity.
                m[r][j] = (p[c] * m[r][j] - m[r][c] * p[j]) / prev_pivot;
            }
            m[r][c] = 0;
        }
        prev_pivot = p[c];
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<Rational> solve_unique(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("right-hand side has the wrong length");
    const std::size_t cols = rows ? a.front().size() : 0;

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) throw InconsistentSystem("linear system has no solution");
    if (pivot_cols.size() != cols) throw std::invalid_argument("linear system is underdetermined");

    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];
    return x;
}

}  // namespace gammakit
