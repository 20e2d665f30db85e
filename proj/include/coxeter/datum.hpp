// Coxeter data for the irreducible finite types and their products.
//
// Labels: A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), E6, E7, E8, F4,
// G2, H3, H4, I2(m) for m in 2..6, and products joined with 'x' (e.g.
// "A1xA1").  Total rank is limited to kMaxRank.
//
// Gram normalization:
//   simply laced and H-types: <a,a> = 2, bonds -1 (m=3) or -tau (m=5);
//   B_n, C_n, F4, I2(4): short roots 2, long roots 4, every bond -2 except
//     short-short bonds -1;
//   G2, I2(6): short 2, long 6, bond -3.
// Orientation: B_n has its short root last, C_n its long root last, F4 is
// long-long-short-short, G2 is short-long.

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/golden.hpp"
#include "coxeter/linalg.hpp"
#include "coxeter/vec.hpp"

namespace coxeter {

class UnknownLabel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Symmetric bilinear form on the span of the simple roots.
struct Gram {
    std::size_t rank = 0;
    std::array<Vec, kMaxRank> rows{};

    GoldenInt operator()(std::size_t i, std::size_t j) const { return rows[i][j]; }
    void set(std::size_t i, std::size_t j, const GoldenInt& x) {
        rows[i].set(j, x);
        rows[j].set(i, x);
    }
    std::span<const Vec> row_span() const { return {rows.data(), rank}; }
    GoldenMatrix matrix() const { return GoldenMatrix::from_rows(row_span(), rank); }
    bool is_golden() const;

    friend bool operator==(const Gram&, const Gram&) = default;
};

struct CoxeterDatum {
    std::string label;
    std::size_t rank = 0;
    /// m_ij, with m_ii = 1.
    std::vector<std::vector<int>> coxeter_matrix;
    /// Component labels in order, with the first node index of each.
    std::vector<std::pair<std::string, std::size_t>> components;

    /// Connected Coxeter graph (I2(2) is reducible).
    bool is_irreducible() const { return connected(full_mask(rank)); }
    /// Nodes i != j are joined in the Coxeter graph iff m_ij >= 3.
    bool adjacent(std::size_t i, std::size_t j) const { return i != j && coxeter_matrix[i][j] >= 3; }
    /// True if the index set is connected in the Coxeter graph (empty: false).
    bool connected(IndexMask nodes) const;
};

/// Parses a label; throws UnknownLabel for anything outside the catalog.
CoxeterDatum parse_datum(std::string_view label);

/// Gram matrix in the normalization above.  Verified positive definite.
Gram build_gram(const CoxeterDatum& datum);

/// Coxeter matrix recovered from a Gram matrix via cos^2(pi/m).
std::vector<std::vector<int>> coxeter_matrix_from_gram(const Gram& g);

/// The default verification sweep: A1-A6, B2-B6, C3-C6, D4-D6, E6, E7, F4,
/// G2, H3, H4, I2(5).
std::vector<std::string> default_type_labels();

} // namespace coxeter
