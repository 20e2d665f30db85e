// Folding of golden root systems into simply laced crystallographic ones.
//
// A Z[tau]-vector (a_i + b_i tau)_i over Pi is the integer vector
// (a_1..a_n, b_1..b_n) over the doubled basis Pi u tau Pi ("lattice
// coordinates").  The integer form on the doubled basis is the rational part
// of the golden form.  Psi = Phi u tau Phi is built as a RootSystem over
// the doubled basis by closure under its own integer reflections.

#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coxeter/oshima.hpp"
#include "coxeter/root_system.hpp"

namespace coxeter {

struct Bundle {
    RootIndex base;                    ///< alpha in the source system
    std::array<RootIndex, 2> pair;     ///< alpha and tau*alpha in Psi
};

class FoldedSystem {
public:
    const RootSystem& source() const { return source_; }
    const RootSystem& psi() const { return psi_; }
    std::size_t lattice_rank() const { return psi_.rank(); }
    /// Integer Gram matrix of the doubled basis.
    const Gram& form() const { return psi_.gram(); }
    const std::vector<Bundle>& bundles() const { return bundles_; }

    /// Index in Psi of alpha (resp. tau*alpha) for a source root.
    RootIndex image(RootIndex alpha) const { return bundles_[alpha].pair[0]; }
    RootIndex tau_image(RootIndex alpha) const { return bundles_[alpha].pair[1]; }
    /// For a root of Psi: the source root of its bundle, and whether it is
    /// the tau-multiple.
    RootIndex bundle_base(RootIndex psi_root) const { return base_of_[psi_root]; }
    bool is_tau_multiple(RootIndex psi_root) const { return tau_side_[psi_root]; }
    /// The other member of the bundle.
    RootIndex partner(RootIndex psi_root) const;

    Vec to_lattice(const Vec& golden) const;
    Vec from_lattice(const Vec& lattice) const;
    /// Multiplication by tau in lattice coordinates.
    Vec tau_lattice(const Vec& lattice) const;
    /// Integer form of two lattice vectors.
    std::int64_t pairing(const Vec& x, const Vec& y) const;

    /// Integer reflection r_x(v) = v - (v, x) x for a root x of Psi.
    Vec integer_reflect(const Vec& x, const Vec& v) const;

private:
    friend FoldedSystem fold(const RootSystem& s);
    FoldedSystem(RootSystem source, RootSystem psi) : source_(std::move(source)), psi_(std::move(psi)) {}

    RootSystem source_;
    RootSystem psi_;
    std::vector<Bundle> bundles_;
    std::vector<RootIndex> base_of_;
    std::vector<char> tau_side_;
};

/// Throws std::invalid_argument unless s is golden with every simple root of
/// squared length 2, bonds in {0, -1, -tau}, and 2 * rank <= kMaxRank.
/// Throws std::logic_error if the closure of the doubled basis is not
/// Phi u tau Phi.
FoldedSystem fold(const RootSystem& s);

/// Expected simply laced type of the folding of H4, H3, I2(5).
std::optional<std::string> expected_fold_type(std::string_view source_label);

struct Identification {
    std::string label;                 ///< e.g. "E8", "A1xA1"
    std::vector<std::size_t> node_map; ///< input node -> node of the catalog datum
};

/// Matches the graph of a simple system (edge iff product -1) against the
/// simply laced finite types of rank <= 16, component by component.  The
/// vectors are given in the coordinates of `form`.  Throws
/// std::invalid_argument if products leave {2, 0, -1}, the vectors are
/// dependent, or a component is not in the catalog.
Identification identify_type(std::span<const Vec> simple, const Gram& form);

/// Adjacency of the catalog graph for a connected simply laced label.
std::vector<std::vector<int>> catalog_graph(std::string_view label);

Certificate check_fold_type(const FoldedSystem& f);
Certificate check_ip_table(const FoldedSystem& f);
Certificate check_reflection_factorization(const FoldedSystem& f);
Certificate check_length_doubling(const FoldedSystem& f, std::size_t max_len);

/// Simple subsystems of the source with at most max_size roots (pairwise
/// products in {0, -1, -tau}, independent over Q(tau)), each as sorted root
/// indices, in lexicographic order.  Includes the empty set.
std::vector<std::vector<RootIndex>> source_simple_subsystems(const FoldedSystem& f, std::size_t max_size);

/// Bundle-union simple subsystems of Psi with at most 2 * max_size roots,
/// each given by its sorted bundle bases.  Computed with the integer form
/// only.
std::vector<std::vector<RootIndex>> bundle_simple_subsystems(const FoldedSystem& f, std::size_t max_size);

Certificate check_phi_bijection(const FoldedSystem& f, std::size_t max_size, std::mt19937_64& rng,
                                std::size_t equivariance_samples);
Certificate check_chamber_equivalence(const FoldedSystem& f, std::size_t max_size);

/// Chamber facts for the folded images of slice pairs, for one J.
Certificate check_slice_transfer(const FoldedSystem& f, IndexMask J);

Certificate check_phi_prime(const FoldedSystem& f, std::mt19937_64& rng, std::size_t samples);

} // namespace coxeter
