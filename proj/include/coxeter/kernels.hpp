// Data-parallel inner loops with a scalar reference and SIMD variants.
//
// The public entry points dispatch at runtime to the best backend the CPU
// supports.  The AVX2 variants work on 32-bit-safe lanes and report failure
// when an input exceeds that range; the dispatcher then reruns the checked
// scalar reference, so results are always exact.

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "coxeter/vec.hpp"

namespace coxeter::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);
bool avx2_supported();
Backend best_backend();
Backend active_backend();

/// Force a backend (tests, benchmarks).  Throws std::invalid_argument if the
/// CPU or the build cannot run it.
void set_backend(Backend b);

/// sum_{i < rows.size()} coeffs[i] * rows[i] over Z[tau].
Vec combine(const Vec& coeffs, std::span<const Vec> rows);

/// sum_i x[i] * y[i] over Z[tau].
GoldenInt dot(const Vec& x, const Vec& y);

/// Appends to `out` the index of every table entry equal to `ref` at all
/// lanes outside `mask`.
void match_outside(std::span<const Vec> table, const Vec& ref, IndexMask mask, std::vector<std::uint32_t>& out);

namespace scalar {
Vec combine(const Vec& coeffs, std::span<const Vec> rows);
GoldenInt dot(const Vec& x, const Vec& y);
void match_outside(std::span<const Vec> table, const Vec& ref, IndexMask mask, std::vector<std::uint32_t>& out);
} // namespace scalar

#if defined(COXETER_HAVE_AVX2)
namespace avx2 {
/// Inputs must satisfy |lane| < 2^24; returns false (out untouched) otherwise.
bool combine(const Vec& coeffs, std::span<const Vec> rows, Vec& out);
bool dot(const Vec& x, const Vec& y, GoldenInt& out);
void match_outside(std::span<const Vec> table, const Vec& ref, IndexMask mask, std::vector<std::uint32_t>& out);
} // namespace avx2
#endif

} // namespace coxeter::kernels
