// Runtime selection between kernel backends.  No intrinsics here.

#include "coxeter/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace coxeter::kernels {

namespace {

bool detect_avx2() {
#if defined(COXETER_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<Backend>& active() {
    static std::atomic<Backend> backend{best_backend()};
    return backend;
}

} // namespace

std::string_view backend_name(Backend b) {
    switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

bool avx2_supported() {
    static const bool ok = detect_avx2();
    return ok;
}

Backend best_backend() { return avx2_supported() ? Backend::Avx2 : Backend::Scalar; }

Backend active_backend() { return active().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (b == Backend::Avx2 && !avx2_supported()) throw std::invalid_argument("AVX2 backend unavailable on this CPU/build");
    active().store(b, std::memory_order_relaxed);
}

Vec combine(const Vec& coeffs, std::span<const Vec> rows) {
#if defined(COXETER_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) {
        Vec out;
        if (avx2::combine(coeffs, rows, out)) return out;
    }
#endif
    return scalar::combine(coeffs, rows);
}

GoldenInt dot(const Vec& x, const Vec& y) {
#if defined(COXETER_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) {
        GoldenInt out;
        if (avx2::dot(x, y, out)) return out;
    }
#endif
    return scalar::dot(x, y);
}

void match_outside(std::span<const Vec> table, const Vec& ref, IndexMask mask, std::vector<std::uint32_t>& out) {
#if defined(COXETER_HAVE_AVX2)
    if (active_backend() == Backend::Avx2) return avx2::match_outside(table, ref, mask, out);
#endif
    scalar::match_outside(table, ref, mask, out);
}

} // namespace coxeter::kernels
