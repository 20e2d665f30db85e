#include "coxeter/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace coxeter {

GoldenMatrix GoldenMatrix::from_rows(std::span<const Vec> rows, std::size_t width) {
    GoldenMatrix m(rows.size(), width);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < width; ++c) m(r, c) = rows[r][c];
    return m;
}

namespace {

struct Elimination {
    std::size_t rank = 0;
    int sign = 1;
};

// In-place Bareiss echelon form.
Elimination bareiss(GoldenMatrix& m) {
    Elimination e;
    GoldenInt prev{1};
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < m.cols() && e.rank < n; ++c) {
        std::size_t p = e.rank;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) continue;
        if (p != e.rank) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(e.rank, j));
            e.sign = -e.sign;
        }
        const std::size_t r = e.rank;
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                const GoldenInt num = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                const auto q = exact_div(num, prev);
                if (!q) throw std::logic_error("Bareiss division not exact");
                m(i, j) = *q;
            }
            m(i, c) = GoldenInt{};
        }
        prev = m(r, c);
        ++e.rank;
    }
    return e;
}

} // namespace

std::size_t rank(GoldenMatrix m) { return bareiss(m).rank; }

GoldenInt determinant(GoldenMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return GoldenInt{1};
    const Elimination e = bareiss(m);
    if (e.rank < n) return GoldenInt{};
    return e.sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

std::vector<GoldenInt> leading_minors(const GoldenMatrix& m) {
    std::vector<GoldenInt> out;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        GoldenMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
        out.push_back(determinant(std::move(sub)));
    }
    return out;
}

bool is_positive_definite(const GoldenMatrix& m) {
    for (const auto& d : leading_minors(m))
        if (golden_sign(d) <= 0) return false;
    return true;
}

GoldenMatrix adjugate(const GoldenMatrix& m) {
    const std::size_t n = m.rows();
    GoldenMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = GoldenInt{1};
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            GoldenMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            const GoldenInt cof = determinant(std::move(minor));
            adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return adj;
}

bool linearly_independent(std::span<const Vec> vectors, std::size_t width) {
    if (vectors.size() > width) return false;
    return rank(GoldenMatrix::from_rows(vectors, width)) == vectors.size();
}

bool in_span(std::span<const Vec> basis, const Vec& v, std::size_t width) {
    std::vector<Vec> rows(basis.begin(), basis.end());
    const std::size_t before = rank(GoldenMatrix::from_rows(rows, width));
    rows.push_back(v);
    return rank(GoldenMatrix::from_rows(rows, width)) == before;
}

} // namespace coxeter
