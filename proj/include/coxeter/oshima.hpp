// Theorem checks on parabolic orbits of roots.
//
// Every check returns a Certificate: a self-contained verdict for one
// instance.  Failures always carry a witness.  Instances whose hypotheses do
// not hold are reported as Skipped, never as Pass.

#pragma once

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "coxeter/root_system.hpp"
#include "coxeter/weyl.hpp"

namespace coxeter {

enum class Status { Pass, Fail, Skipped };

std::string_view status_name(Status s);

struct Certificate {
    std::string type;
    std::string check;
    std::size_t rank = 0;        ///< lanes used by the vectors below
    bool golden = false;         ///< print coefficients as [a, b] pairs
    std::optional<IndexMask> J;
    std::optional<Vec> alpha;
    std::vector<Vec> inputs;     ///< further subjects (beta, v, tuple members)
    Status status = Status::Pass;
    std::vector<Vec> witness;
    std::string note;

    /// Sets status to Fail and records the witness.
    void fail(std::vector<Vec> w, std::string why = {});
};

/// Blank certificate for a check on `s`.
Certificate make_certificate(const RootSystem& s, std::string check);

// ---------------------------------------------------------------------------
// Parabolic orbit statements.

/// W-orbit of alpha filtered to roots agreeing with alpha outside J, as
/// sorted root indices.
std::vector<RootIndex> orbit_slice(const RootSystem& s, IndexMask J, RootIndex alpha);

/// Slice versus W_J-orbit.  With enforce_precondition == false the check runs
/// even for alpha in Phi_J (used to exhibit the necessity of the hypothesis).
Certificate check_prop_a(const RootSystem& s, IndexMask J, RootIndex alpha, bool enforce_precondition = true);

/// At most one chamber root per slice, over all pairs of roots outside Phi_J
/// in the W_J chamber; also fails if its verdict disagrees with the slice
/// statement for the same J.
Certificate check_prop_b(const RootSystem& s, IndexMask J);

/// Slice through beta along w(Phi_J) versus the orbit of w W_J w^-1.
/// Membership in beta + R w(Phi_J) is an exact rank test.
Certificate check_prop_c(const RootSystem& s, IndexMask J, const GroupElt& w, RootIndex beta);

/// The A3 example showing the hypothesis alpha not in Phi_J is needed:
/// passes iff the slice strictly contains W_J alpha_1 and contains alpha_3.
Certificate check_counterexample_a3();

// ---------------------------------------------------------------------------
// Fixed-coefficient root sets.

struct XSpec {
    IndexMask delta = 0;   ///< fixed coordinates
    Vec c;                 ///< prescribed values on delta (other lanes zero)
    GoldenInt l;           ///< squared length
};

/// Distinct specs read off the roots of s, for every nonempty delta.
std::vector<XSpec> realizable_xspecs(const RootSystem& s);

/// X = {gamma : <gamma,gamma> = l, gamma[b] = c_b on delta} is empty or one
/// W_K-orbit (K the complement of delta) with at most one K-chamber point.
/// Throws std::invalid_argument for non-crystallographic or reducible s, or
/// when c vanishes on delta.
Certificate check_oshima_x(const RootSystem& s, const XSpec& spec);

// ---------------------------------------------------------------------------
// Rank two.

/// For every w in W with w(v) - v parallel to alpha: w(v) is v or s_alpha(v).
/// Throws std::invalid_argument for rank > 2.
Certificate check_dihedral(const RootSystem& s, const Vec& v, RootIndex alpha);

// ---------------------------------------------------------------------------
// Root strings (crystallographic systems).

/// Nonempty subset sums are nonzero and the full sum is a root.
bool string_preamble(const RootSystem& s, std::span<const Vec> roots);

/// The three-term implication; Skipped unless the preamble holds.
Certificate check_rootstring_b(const RootSystem& s, const Vec& a1, const Vec& a2, const Vec& a3);

/// A permutation with every prefix sum a root, by backtracking.  Returns
/// nullopt if none exists.
std::optional<std::vector<std::size_t>> find_string_permutation(const RootSystem& s, std::span<const Vec> roots);

/// Certificate wrapper around find_string_permutation.
Certificate check_rootstring_a(const RootSystem& s, std::span<const Vec> roots);

/// Every subset sum containing the first root is a root, given that no two
/// of the remaining roots sum to a root.  Skipped unless the hypotheses hold.
Certificate check_rootstring_c(const RootSystem& s, std::span<const Vec> roots);

// ---------------------------------------------------------------------------
// Dominance.

/// beta - alpha in Z>=0 Pi_J (R>=0 for golden systems).
bool dominates(const RootSystem& s, IndexMask J, const Vec& lower, const Vec& upper);

/// w in W_J with w(beta) - w(alpha) in the closed W_J chamber, hence
/// nonnegative on Pi_J.  Throws std::invalid_argument unless beta lies in
/// alpha + R Pi_J.
GroupElt dominance_adjust(const RootSystem& s, IndexMask J, RootIndex alpha, RootIndex beta);

/// Every way of writing beta - alpha as a sum of the fewest positive roots
/// of Phi_J, each as a nondecreasing list of root indices.  Throws
/// std::invalid_argument unless alpha, beta lie outside Phi_J with
/// alpha <=_J beta.
std::vector<std::vector<RootIndex>> minimal_decompositions(const RootSystem& s, IndexMask J, RootIndex alpha,
                                                           RootIndex beta);

/// Checks every minimal decomposition of beta - alpha: the root-string
/// hypotheses hold and all partial sums through alpha are roots.
Certificate check_decomposition(const RootSystem& s, IndexMask J, RootIndex alpha, RootIndex beta);

// ---------------------------------------------------------------------------
// Chamber vectors and rescaling.

/// Orbit statement for an arbitrary chamber vector, checked for every J.
/// Throws OrbitTooLarge if W v exceeds `cap` points.
Certificate check_chamber_vector(const RootSystem& s, const Vec& v, std::size_t cap);

/// Samples of the closed fundamental chamber: adj(G) p for random p >= 0
/// with a random zero pattern, keeping only vectors whose W-orbit stays
/// below `cap`.  The origin appears at most once.  In rank >= 2 at least a
/// quarter of the samples have a nontrivial stabilizer when any exist below
/// the cap.
std::vector<Vec> sample_chamber_vectors(const RootSystem& s, std::mt19937_64& rng, std::size_t count, std::size_t cap);

/// The slice statement has the same verdict for (s, J, alpha) and for the
/// rescaled system at the corresponding root, and the slices correspond.
Certificate check_rescale_invariance(const RootSystem& s, const Rescaled& r, IndexMask J, RootIndex alpha);

} // namespace coxeter
