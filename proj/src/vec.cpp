#include "coxeter/vec.hpp"

#include <ostream>

namespace coxeter {

bool Vec::is_zero() const {
    for (std::size_t i = 0; i < kMaxRank; ++i)
        if (a[i] != 0 || b[i] != 0) return false;
    return true;
}

bool Vec::is_integral() const {
    for (auto x : b)
        if (x != 0) return false;
    return true;
}

IndexMask Vec::support() const {
    IndexMask m = 0;
    for (std::size_t i = 0; i < kMaxRank; ++i)
        if (a[i] != 0 || b[i] != 0) m |= IndexMask{1} << i;
    return m;
}

Vec Vec::operator-() const {
    Vec r;
    for (std::size_t i = 0; i < kMaxRank; ++i) {
        r.a[i] = checked::neg(a[i]);
        r.b[i] = checked::neg(b[i]);
    }
    return r;
}

Vec& Vec::operator+=(const Vec& o) {
    for (std::size_t i = 0; i < kMaxRank; ++i) {
        a[i] = checked::add(a[i], o.a[i]);
        b[i] = checked::add(b[i], o.b[i]);
    }
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    for (std::size_t i = 0; i < kMaxRank; ++i) {
        a[i] = checked::sub(a[i], o.a[i]);
        b[i] = checked::sub(b[i], o.b[i]);
    }
    return *this;
}

Vec Vec::scaled(const GoldenInt& s) const {
    Vec r;
    for (std::size_t i = 0; i < kMaxRank; ++i) r.set(i, (*this)[i] * s);
    return r;
}

Vec Vec::times_tau() const {
    Vec r;
    for (std::size_t i = 0; i < kMaxRank; ++i) {
        r.a[i] = b[i];
        r.b[i] = checked::add(a[i], b[i]);
    }
    return r;
}

std::strong_ordering canonical_compare(const Vec& x, const Vec& y) {
    for (std::size_t i = 0; i < kMaxRank; ++i) {
        if (auto c = x.a[i] <=> y.a[i]; c != 0) return c;
        if (auto c = x.b[i] <=> y.b[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::size_t VecHash::operator()(const Vec& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::int64_t x) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (std::size_t i = 0; i < kMaxRank; ++i) {
        mix(v.a[i]);
        mix(v.b[i]);
    }
    return static_cast<std::size_t>(h);
}

int coherent_sign(const Vec& v, std::size_t rank) {
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < rank; ++i) {
        const int s = golden_sign(v[i]);
        pos |= s > 0;
        neg |= s < 0;
    }
    if (pos == neg) return 0;
    return pos ? 1 : -1;
}

bool equal_outside(const Vec& v, const Vec& w, IndexMask mask) {
    for (std::size_t i = 0; i < kMaxRank; ++i) {
        if (has_index(mask, i)) continue;
        if (v.a[i] != w.a[i] || v.b[i] != w.b[i]) return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const Vec& v) {
    std::size_t n = kMaxRank;
    while (n > 1 && v[n - 1].is_zero()) --n;
    os << '(';
    for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << v[i];
    return os << ')';
}

} // namespace coxeter
