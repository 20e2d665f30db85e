// Reference implementations.  Every operation is overflow-checked.

#include "coxeter/kernels.hpp"

namespace coxeter::kernels::scalar {

Vec combine(const Vec& coeffs, std::span<const Vec> rows) {
    Vec out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const GoldenInt c = coeffs[i];
        if (c.is_zero()) continue;
        const Vec& r = rows[i];
        for (std::size_t k = 0; k < kMaxRank; ++k) {
            const GoldenInt term = c * r[k];
            out.a[k] = checked::add(out.a[k], term.a);
            out.b[k] = checked::add(out.b[k], term.b);
        }
    }
    return out;
}

GoldenInt dot(const Vec& x, const Vec& y) {
    GoldenInt acc;
    for (std::size_t k = 0; k < kMaxRank; ++k) acc += x[k] * y[k];
    return acc;
}

void match_outside(std::span<const Vec> table, const Vec& ref, IndexMask mask, std::vector<std::uint32_t>& out) {
    for (std::size_t i = 0; i < table.size(); ++i)
        if (equal_outside(table[i], ref, mask)) out.push_back(static_cast<std::uint32_t>(i));
}

} // namespace coxeter::kernels::scalar
