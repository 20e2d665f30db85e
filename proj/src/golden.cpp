#include "coxeter/golden.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

namespace coxeter {

std::int64_t GoldenInt::norm() const {
    // a^2 + ab - b^2
    return checked::sub(checked::add(checked::mul(a, a), checked::mul(a, b)), checked::mul(b, b));
}

GoldenInt& GoldenInt::operator*=(const GoldenInt& o) {
    const std::int64_t bd = checked::mul(b, o.b);
    const std::int64_t ra = checked::add(checked::mul(a, o.a), bd);
    const std::int64_t rb = checked::add(checked::add(checked::mul(a, o.b), checked::mul(b, o.a)), bd);
    a = ra;
    b = rb;
    return *this;
}

GoldenInt golden_mul(const GoldenInt& x, const GoldenInt& y) { return x * y; }

int golden_sign(const GoldenInt& x) {
    // a + b*tau = (p + q*sqrt5) / 2 with p = 2a + b, q = b.
    const __int128 p = static_cast<__int128>(x.a) * 2 + x.b;
    const __int128 q = x.b;
    if (p >= 0 && q >= 0) return (p == 0 && q == 0) ? 0 : 1;
    if (p <= 0 && q <= 0) return -1;
    // Opposite signs; p^2 != 5 q^2 since sqrt5 is irrational and q != 0.
    const __int128 p2 = p * p;
    const __int128 q2 = q * q * 5;
    if (p > 0) return p2 > q2 ? 1 : -1;
    return q2 > p2 ? 1 : -1;
}

std::optional<GoldenInt> exact_div(const GoldenInt& x, std::int64_t n) {
    if (n == 0) return std::nullopt;
    if (x.a % n != 0 || x.b % n != 0) return std::nullopt;
    return GoldenInt{x.a / n, x.b / n};
}

std::optional<GoldenInt> exact_div(const GoldenInt& x, const GoldenInt& y) {
    if (y.is_zero()) return std::nullopt;
    if (y.is_integer()) return exact_div(x, y.a);
    return exact_div(x * y.conjugate(), y.norm());
}

long double to_long_double(const GoldenInt& x) {
    const long double tau = (1.0L + std::sqrt(5.0L)) / 2.0L;
    return static_cast<long double>(x.a) + static_cast<long double>(x.b) * tau;
}

std::string to_string(const GoldenInt& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GoldenInt& x) {
    if (x.b == 0) return os << x.a;
    if (x.a == 0) return os << x.b << "t";
    return os << x.a << (x.b < 0 ? "" : "+") << x.b << "t";
}

namespace {

std::int64_t gcd3(std::int64_t x, std::int64_t y, std::int64_t z) {
    return std::gcd(std::gcd(x, y), z);
}

} // namespace

GoldenRational::GoldenRational(GoldenInt numerator, std::int64_t denominator) : num_(numerator), den_(denominator) {
    if (den_ == 0) throw std::domain_error("GoldenRational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = checked::neg(den_);
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    const std::int64_t g = gcd3(num_.a, num_.b, den_);
    if (g > 1) {
        num_ = {num_.a / g, num_.b / g};
        den_ /= g;
    }
}

GoldenRational GoldenRational::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero in Q(tau)");
    // den / num = den * conj(num) / N(num)
    return {GoldenInt(den_) * num_.conjugate(), num_.norm()};
}

GoldenRational operator+(const GoldenRational& x, const GoldenRational& y) {
    const std::int64_t g = std::gcd(x.den_, y.den_);
    const std::int64_t xs = y.den_ / g;
    const std::int64_t ys = x.den_ / g;
    return {x.num_ * GoldenInt(xs) + y.num_ * GoldenInt(ys), checked::mul(x.den_, xs)};
}

GoldenRational operator-(const GoldenRational& x, const GoldenRational& y) { return x + (-y); }

GoldenRational operator*(const GoldenRational& x, const GoldenRational& y) {
    return {x.num_ * y.num_, checked::mul(x.den_, y.den_)};
}

GoldenRational operator/(const GoldenRational& x, const GoldenRational& y) { return x * y.inverse(); }

std::ostream& operator<<(std::ostream& os, const GoldenRational& x) {
    os << '(' << x.numerator() << ')';
    if (x.denominator() != 1) os << '/' << x.denominator();
    return os;
}

} // namespace coxeter
