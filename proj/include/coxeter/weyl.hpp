// Group-action machinery: parabolic orbits, fundamental chambers, chamber
// representatives, stabilizers, dominant roots and element lengths.
//
// Subsets J of the simple reflections are IndexMask bitsets.  All functions
// are pure; orbits are returned as sorted canonical sets.

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "coxeter/root_system.hpp"

namespace coxeter {

class OrbitTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A group element stored as the images w(alpha_i) of the simple roots.
class GroupElt {
public:
    GroupElt() = default;
    static GroupElt identity(std::size_t rank);
    static GroupElt simple_reflection(const RootSystem& s, std::size_t j);
    /// s_alpha for an arbitrary root.
    static GroupElt reflection(const RootSystem& s, const Vec& alpha);

    std::size_t rank() const { return rank_; }
    const Vec& image(std::size_t i) const { return images_[i]; }
    std::span<const Vec> images() const { return {images_.data(), rank_}; }

    Vec apply(const Vec& v) const;
    /// (this * rhs)(v) = this(rhs(v)).
    GroupElt operator*(const GroupElt& rhs) const;

    /// this * s_j, updated in place in O(rank) vector operations.
    void right_multiply_simple(const RootSystem& s, std::size_t j);
    /// s_j * this.
    void left_multiply_simple(const RootSystem& s, std::size_t j);

    friend bool operator==(const GroupElt&, const GroupElt&) = default;

private:
    std::size_t rank_ = 0;
    std::array<Vec, kMaxRank> images_{};
};

struct GroupEltHash {
    std::size_t operator()(const GroupElt& w) const noexcept;
};

/// W_J-orbit of v by breadth-first closure under {s_j : j in J}.  Throws
/// OrbitTooLarge beyond `cap` points.
std::vector<Vec> orbit(const RootSystem& s, IndexMask J, const Vec& v,
                       std::size_t cap = std::numeric_limits<std::size_t>::max());

/// W_J-orbit of a root, as sorted root indices (uses the reflection table).
std::vector<RootIndex> root_orbit(const RootSystem& s, IndexMask J, RootIndex alpha);

/// <v, alpha_j> >= 0 for every j in J.
bool in_chamber(const RootSystem& s, IndexMask J, const Vec& v);

struct ChamberRep {
    Vec point;
    GroupElt element;   ///< element(v) == point, element in W_J
};

/// Unique point of W_J v in the closed chamber of W_J, by repeatedly
/// reflecting in the smallest j in J with <v, alpha_j> < 0.
ChamberRep chamber_rep(const RootSystem& s, IndexMask J, const Vec& v);

/// For v in the fundamental chamber: I = {j : <v, alpha_j> = 0}, checked
/// against {j : s_j(v) = v}.  Throws std::invalid_argument if v is not in
/// the chamber.
IndexMask stabilizer_datum(const RootSystem& s, const Vec& v);

/// Roots in the fundamental chamber.  Throws for reducible systems.
std::vector<RootIndex> dominant_roots(const RootSystem& s);

/// <w alpha_i, w alpha_j> == <alpha_i, alpha_j> for all i, j.
bool preserves_form(const RootSystem& s, const GroupElt& w);

/// |{alpha in Phi+ : w(alpha) in Phi-}|.  Throws std::invalid_argument if w
/// does not preserve the form or does not permute the roots.
std::size_t length(const RootSystem& s, const GroupElt& w);

/// A reduced word (j_1, ..., j_k) with w = s_{j_1} ... s_{j_k}.
std::vector<std::size_t> reduced_word(const RootSystem& s, const GroupElt& w);
GroupElt from_word(const RootSystem& s, std::span<const std::size_t> word);
GroupElt inverse(const RootSystem& s, const GroupElt& w);

struct EnumeratedElement {
    GroupElt element;
    std::size_t length;
};

/// Every element of W of length <= max_length, by breadth-first right
/// multiplication from the identity (so `length` is the Cayley distance).
std::vector<EnumeratedElement> enumerate_group(const RootSystem& s,
                                               std::size_t max_length = std::numeric_limits<std::size_t>::max());

} // namespace coxeter
