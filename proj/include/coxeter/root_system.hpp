// Root systems of finite Coxeter groups in the coefficient basis over the
// simple roots.
//
// Roots are exact Vec coefficient tuples; the ambient Euclidean space never
// appears.  A RootSystem is immutable once built and safe to share between
// threads.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxeter/datum.hpp"
#include "coxeter/golden.hpp"
#include "coxeter/vec.hpp"

namespace coxeter {

using RootIndex = std::uint32_t;
using RationalVec = std::vector<GoldenRational>;

/// Closure guard: more roots than this means the Gram matrix is not of
/// finite type.
inline constexpr std::size_t kRootClosureCap = 100000;

struct LengthClass {
    GoldenInt squared_length;
    std::vector<RootIndex> members;
};

class RootSystem {
public:
    /// Breadth-first closure of the simple roots under the simple
    /// reflections, with the catalog Gram matrix.
    static RootSystem generate(const CoxeterDatum& datum);
    static RootSystem generate(std::string_view label) { return generate(parse_datum(label)); }

    /// Same closure for an arbitrary Gram matrix; the Coxeter matrix is
    /// recovered from the Gram entries.
    static RootSystem from_gram(std::string label, const Gram& gram);

    /// Closure for a Gram matrix realizing an existing datum (rescalings).
    /// Throws std::invalid_argument if the Gram matrix has other bonds.
    static RootSystem with_gram(const CoxeterDatum& datum, const Gram& gram);

    const CoxeterDatum& datum() const { return datum_; }
    const std::string& label() const { return datum_.label; }
    std::size_t rank() const { return gram_.rank; }
    const Gram& gram() const { return gram_; }
    bool is_golden() const { return gram_.is_golden(); }

    /// <u, v>
    GoldenInt form(const Vec& u, const Vec& v) const;
    /// Lanes j < rank hold <v, alpha_j>.
    Vec simple_pairings(const Vec& v) const;

    const std::vector<Vec>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }
    const Vec& root(RootIndex i) const { return roots_[i]; }
    std::optional<RootIndex> index_of(const Vec& v) const;
    bool contains(const Vec& v) const { return index_of(v).has_value(); }

    const std::vector<RootIndex>& positive() const { return positive_; }
    bool is_positive(RootIndex i) const { return is_positive_[i]; }
    RootIndex simple_index(std::size_t j) const { return simple_[j]; }
    RootIndex negative_of(RootIndex i) const { return negative_[i]; }
    /// Index of s_j(root i).
    RootIndex simple_image(std::size_t j, RootIndex i) const { return reflection_table_[j * roots_.size() + i]; }

    GoldenInt squared_length(RootIndex i) const { return squared_length_[i]; }
    /// Ordered by increasing squared length.
    const std::vector<LengthClass>& length_classes() const { return length_classes_; }

    /// W-orbit id of each root (orbits are computed by closure under the
    /// simple reflections, so they are correct for reducible systems too).
    std::uint32_t orbit_of(RootIndex i) const { return orbit_id_[i]; }
    std::size_t orbit_count() const { return orbits_.size(); }
    const std::vector<RootIndex>& orbit_members(std::uint32_t orbit) const { return orbits_[orbit]; }

    /// True if the root lies in Phi_J, i.e. its support is inside J.
    bool in_parabolic(RootIndex i, IndexMask J) const { return (roots_[i].support() & ~J) == 0; }

    /// s_alpha(v) = v - <v, alpha^> alpha.  Throws if alpha is not a root.
    Vec reflect(const Vec& alpha, const Vec& v) const;
    Vec reflect_simple(std::size_t j, const Vec& v) const;

    /// alpha^ = 2 alpha / <alpha, alpha>.  Throws if alpha is not a root.
    RationalVec coroot(const Vec& alpha) const;

    /// <alpha, beta^> in Z for every pair of roots.
    bool is_crystallographic() const { return crystallographic_; }
    bool is_irreducible() const { return datum_.is_irreducible(); }

private:
    RootSystem() = default;
    static RootSystem build(CoxeterDatum datum, const Gram& gram);
    void index();
    bool compute_crystallographic() const;

    CoxeterDatum datum_;
    Gram gram_;
    std::vector<Vec> roots_;
    std::unordered_map<Vec, RootIndex, VecHash> lookup_;
    std::vector<RootIndex> positive_;
    std::vector<bool> is_positive_;
    std::vector<RootIndex> simple_;
    std::vector<RootIndex> negative_;
    std::vector<RootIndex> reflection_table_;
    std::vector<GoldenInt> squared_length_;
    std::vector<LengthClass> length_classes_;
    std::vector<std::uint32_t> orbit_id_;
    std::vector<std::vector<RootIndex>> orbits_;
    bool crystallographic_ = false;
};

/// Index set of nonzero coefficients.  Throws on the zero vector.
IndexMask support(const Vec& alpha);

/// Dual root system: roots alpha^, simple system {alpha^ : alpha in Pi},
/// rescaled so the shortest simple root has squared length 2.
RootSystem dual_system(const RootSystem& s);

struct Rescaled {
    RootSystem system;
    /// correspondence[i] = index in `system` of d_gamma * gamma for root i.
    std::vector<RootIndex> correspondence;
};

/// Rescaling gamma -> d_gamma gamma.  `factors` holds d_gamma for every root
/// (canonical order); they must be positive and constant on W-orbits.  The
/// result is normalized so the shortest simple root has squared length 2;
/// throws std::domain_error if the Gram matrix or a root coefficient leaves
/// Z[tau] after normalization.
Rescaled rescale(const RootSystem& s, std::span<const GoldenRational> factors);

/// Convenience form with one factor per W-orbit (orbit ids as in orbit_of).
Rescaled rescale_by_orbit(const RootSystem& s, std::span<const GoldenRational> orbit_factors);

/// Dual together with the root correspondence alpha -> alpha^.
Rescaled dual_with_correspondence(const RootSystem& s);

} // namespace coxeter
