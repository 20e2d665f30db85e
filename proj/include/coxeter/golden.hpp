// Exact arithmetic in the golden ring Z[tau] and its fraction field Q(tau).
//
// tau = (1 + sqrt 5) / 2 satisfies tau^2 = tau + 1.  All order comparisons
// use the real embedding with this tau (never its conjugate).  Coefficients
// are checked 64-bit integers; any overflow throws OverflowError.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace coxeter {

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace checked {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

} // namespace checked

/// Element a + b*tau of Z[tau].
///
/// The defaulted ordering is the structural (a, b) lexicographic order used
/// for canonical sorting; it is NOT the real order.  Use golden_sign() or
/// real_compare() for comparisons of magnitude.
struct GoldenInt {
    std::int64_t a = 0;
    std::int64_t b = 0;

    constexpr GoldenInt() = default;
    constexpr GoldenInt(std::int64_t rational) : a(rational), b(0) {}
    constexpr GoldenInt(std::int64_t rational, std::int64_t irrational) : a(rational), b(irrational) {}

    static constexpr GoldenInt tau() { return {0, 1}; }

    constexpr bool is_zero() const { return a == 0 && b == 0; }
    constexpr bool is_integer() const { return b == 0; }

    /// Galois conjugate: tau -> 1 - tau.
    GoldenInt conjugate() const { return {checked::add(a, b), checked::neg(b)}; }

    /// Field norm x * conj(x) = a^2 + ab - b^2.
    std::int64_t norm() const;

    GoldenInt operator-() const { return {checked::neg(a), checked::neg(b)}; }

    GoldenInt& operator+=(const GoldenInt& o) {
        a = checked::add(a, o.a);
        b = checked::add(b, o.b);
        return *this;
    }
    GoldenInt& operator-=(const GoldenInt& o) {
        a = checked::sub(a, o.a);
        b = checked::sub(b, o.b);
        return *this;
    }
    GoldenInt& operator*=(const GoldenInt& o);

    friend GoldenInt operator+(GoldenInt x, const GoldenInt& y) { return x += y; }
    friend GoldenInt operator-(GoldenInt x, const GoldenInt& y) { return x -= y; }
    friend GoldenInt operator*(GoldenInt x, const GoldenInt& y) { return x *= y; }

    friend constexpr bool operator==(const GoldenInt&, const GoldenInt&) = default;
    friend constexpr auto operator<=>(const GoldenInt&, const GoldenInt&) = default;
};

/// (a,b)(c,d) = (ac + bd, ad + bc + bd).
GoldenInt golden_mul(const GoldenInt& x, const GoldenInt& y);

/// Exact sign of a + b*tau as a real number.
int golden_sign(const GoldenInt& x);

/// Sign of x - y in the real embedding.
inline int real_compare(const GoldenInt& x, const GoldenInt& y) { return golden_sign(x - y); }

/// The Z-linear projection a + b*tau -> a.
constexpr std::int64_t theta(const GoldenInt& x) { return x.a; }

/// x / y if the quotient lies in Z[tau]; nullopt otherwise (or if y == 0).
std::optional<GoldenInt> exact_div(const GoldenInt& x, const GoldenInt& y);

/// x / n for an integer n, if exact.
std::optional<GoldenInt> exact_div(const GoldenInt& x, std::int64_t n);

/// Floating approximation; for diagnostics and test oracles only.
long double to_long_double(const GoldenInt& x);

std::string to_string(const GoldenInt& x);
std::ostream& operator<<(std::ostream& os, const GoldenInt& x);

/// Element numerator / denominator of Q(tau) in lowest terms.
///
/// Canonical form: denominator > 0 and gcd(num.a, num.b, den) == 1, so
/// equality and hashing are structural.
class GoldenRational {
public:
    GoldenRational() = default;
    GoldenRational(GoldenInt numerator) : num_(numerator) {}
    GoldenRational(std::int64_t numerator) : num_(numerator) {}
    GoldenRational(GoldenInt numerator, std::int64_t denominator);

    const GoldenInt& numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }
    int sign() const { return golden_sign(num_); }

    GoldenRational operator-() const { return {-num_, den_}; }
    GoldenRational inverse() const;

    friend GoldenRational operator+(const GoldenRational& x, const GoldenRational& y);
    friend GoldenRational operator-(const GoldenRational& x, const GoldenRational& y);
    friend GoldenRational operator*(const GoldenRational& x, const GoldenRational& y);
    friend GoldenRational operator/(const GoldenRational& x, const GoldenRational& y);

    friend bool operator==(const GoldenRational&, const GoldenRational&) = default;

private:
    GoldenInt num_{};
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const GoldenRational& x);

} // namespace coxeter
