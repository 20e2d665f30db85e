// Test-only oracles that share no code path with the library.
//
//  * golden_sign_oracle: 128-bit binary floating evaluation of a + b*tau.
//  * float_root_closure: closure of a Cholesky realization of the Gram matrix
//    under reflections in *all* roots found so far, in ambient coordinates.

#pragma once

#include <quadmath.h>

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline int golden_sign_oracle(std::int64_t a, std::int64_t b) {
    const __float128 tau = (1 + sqrtq(5)) / 2;
    const __float128 v = static_cast<__float128>(a) + static_cast<__float128>(b) * tau;
    return (v > 0) - (v < 0);
}

inline long double golden_value(std::int64_t a, std::int64_t b) {
    const long double tau = (1.0L + std::sqrt(5.0L)) / 2.0L;
    return static_cast<long double>(a) + static_cast<long double>(b) * tau;
}

using Ambient = std::vector<long double>;

inline long double ip(const Ambient& x, const Ambient& y) {
    long double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

/// gram[i][j] as real numbers; returns the number of roots in the closure.
inline std::size_t float_root_closure(const std::vector<std::vector<long double>>& gram) {
    const std::size_t n = gram.size();
    std::vector<Ambient> l(n, Ambient(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            long double s = gram[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
            if (i == j) l[i][i] = std::sqrt(s);
            else l[i][j] = s / l[j][j];
        }
    }
    std::vector<Ambient> roots = l;
    auto known = [&](const Ambient& v) {
        for (const auto& r : roots) {
            long double d = 0;
            for (std::size_t k = 0; k < n; ++k) d += std::fabs(r[k] - v[k]);
            if (d < 1e-7L) return true;
        }
        return false;
    };
    bool grew = true;
    while (grew && roots.size() < 100000) {
        grew = false;
        const std::size_t count = roots.size();
        for (std::size_t a = 0; a < count; ++a) {
            for (std::size_t b = 0; b < count; ++b) {
                const long double c = 2 * ip(roots[b], roots[a]) / ip(roots[a], roots[a]);
                Ambient v = roots[b];
                for (std::size_t k = 0; k < n; ++k) v[k] -= c * roots[a][k];
                if (!known(v)) {
                    roots.push_back(v);
                    grew = true;
                }
            }
        }
    }
    return roots.size();
}

} // namespace oracle
