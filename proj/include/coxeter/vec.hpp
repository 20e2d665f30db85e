// Fixed-capacity coefficient vectors over a simple system.
//
// A Vec stores the coefficients v[i] = a[i] + b[i]*tau of a vector in the
// basis of simple roots.  Lanes at index >= rank are always zero.  The
// split (structure-of-arrays) layout lets the kernels in kernels.hpp work on
// whole vectors with a handful of 256-bit loads.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>

#include "coxeter/golden.hpp"

namespace coxeter {

inline constexpr std::size_t kMaxRank = 8;

/// Bitmask over simple-root indices (bit i set <=> index i included).
using IndexMask = std::uint32_t;

inline constexpr IndexMask full_mask(std::size_t rank) { return (IndexMask{1} << rank) - 1; }
inline constexpr bool has_index(IndexMask m, std::size_t i) { return (m >> i) & 1U; }

struct alignas(32) Vec {
    std::array<std::int64_t, kMaxRank> a{};
    std::array<std::int64_t, kMaxRank> b{};

    static Vec unit(std::size_t i) {
        Vec v;
        v.a[i] = 1;
        return v;
    }

    GoldenInt operator[](std::size_t i) const { return {a[i], b[i]}; }
    void set(std::size_t i, const GoldenInt& x) {
        a[i] = x.a;
        b[i] = x.b;
    }

    bool is_zero() const;
    bool is_integral() const;   ///< every b lane is zero

    /// Bitmask of indices with nonzero coefficient.
    IndexMask support() const;

    Vec operator-() const;
    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    friend Vec operator+(Vec x, const Vec& y) { return x += y; }
    friend Vec operator-(Vec x, const Vec& y) { return x -= y; }

    /// Scalar multiple s * v (checked).
    Vec scaled(const GoldenInt& s) const;

    /// Multiplication by tau: (a, b) -> (b, a + b) in every lane.
    Vec times_tau() const;

    friend bool operator==(const Vec&, const Vec&) = default;
};

/// Canonical total order: lexicographic on coefficient tuples, each
/// coefficient ordered by (a, b).
std::strong_ordering canonical_compare(const Vec& x, const Vec& y);

struct CanonicalLess {
    bool operator()(const Vec& x, const Vec& y) const { return canonical_compare(x, y) < 0; }
};

struct VecHash {
    std::size_t operator()(const Vec& v) const noexcept;
};

/// Sign of a root-like vector: +1 if every coefficient is >= 0 (and some > 0),
/// -1 if every coefficient is <= 0 (and some < 0), 0 if zero or mixed.
int coherent_sign(const Vec& v, std::size_t rank);

/// True if v[i] == w[i] for every index i outside `mask`.
bool equal_outside(const Vec& v, const Vec& w, IndexMask mask);

std::ostream& operator<<(std::ostream& os, const Vec& v);

} // namespace coxeter
