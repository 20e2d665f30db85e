#include "coxeter/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "coxeter/kernels.hpp"

namespace coxeter {

namespace {

// c_ij = <alpha_i, alpha_j^> = 2 G_ij / G_jj.
GoldenInt cartan_entry(const RootSystem& s, std::size_t i, std::size_t j) {
    const auto c = exact_div(s.gram()(i, j) + s.gram()(i, j), s.gram()(j, j));
    if (!c) throw std::domain_error("non-integral Cartan entry");
    return *c;
}

} // namespace

GroupElt GroupElt::identity(std::size_t rank) {
    GroupElt w;
    w.rank_ = rank;
    for (std::size_t i = 0; i < rank; ++i) w.images_[i] = Vec::unit(i);
    return w;
}

GroupElt GroupElt::simple_reflection(const RootSystem& s, std::size_t j) {
    GroupElt w = identity(s.rank());
    w.left_multiply_simple(s, j);
    return w;
}

GroupElt GroupElt::reflection(const RootSystem& s, const Vec& alpha) {
    GroupElt w = identity(s.rank());
    for (std::size_t i = 0; i < s.rank(); ++i) w.images_[i] = s.reflect(alpha, w.images_[i]);
    return w;
}

Vec GroupElt::apply(const Vec& v) const { return kernels::combine(v, images()); }

GroupElt GroupElt::operator*(const GroupElt& rhs) const {
    GroupElt w;
    w.rank_ = rank_;
    for (std::size_t i = 0; i < rank_; ++i) w.images_[i] = apply(rhs.images_[i]);
    return w;
}

void GroupElt::right_multiply_simple(const RootSystem& s, std::size_t j) {
    const Vec wj = images_[j];
    for (std::size_t i = 0; i < rank_; ++i) {
        const GoldenInt c = cartan_entry(s, i, j);
        if (!c.is_zero()) images_[i] -= wj.scaled(c);
    }
}

void GroupElt::left_multiply_simple(const RootSystem& s, std::size_t j) {
    for (std::size_t i = 0; i < rank_; ++i) images_[i] = s.reflect_simple(j, images_[i]);
}

std::size_t GroupEltHash::operator()(const GroupElt& w) const noexcept {
    std::size_t h = w.rank();
    VecHash vh;
    for (const auto& v : w.images()) h = h * 1000003U ^ vh(v);
    return h;
}

std::vector<Vec> orbit(const RootSystem& s, IndexMask J, const Vec& v, std::size_t cap) {
    std::unordered_set<Vec, VecHash> seen{v};
    std::vector<Vec> out{v};
    for (std::size_t head = 0; head < out.size(); ++head) {
        const Vec cur = out[head];
        for (std::size_t j = 0; j < s.rank(); ++j) {
            if (!has_index(J, j)) continue;
            Vec next = s.reflect_simple(j, cur);
            if (seen.insert(next).second) {
                if (out.size() >= cap) throw OrbitTooLarge("orbit exceeds " + std::to_string(cap) + " points");
                out.push_back(next);
            }
        }
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

std::vector<RootIndex> root_orbit(const RootSystem& s, IndexMask J, RootIndex alpha) {
    std::vector<char> seen(s.size(), 0);
    std::vector<RootIndex> out{alpha};
    seen[alpha] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
        const RootIndex cur = out[head];
        for (std::size_t j = 0; j < s.rank(); ++j) {
            if (!has_index(J, j)) continue;
            const RootIndex next = s.simple_image(j, cur);
            if (!seen[next]) {
                seen[next] = 1;
                out.push_back(next);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_chamber(const RootSystem& s, IndexMask J, const Vec& v) {
    const Vec p = s.simple_pairings(v);
    for (std::size_t j = 0; j < s.rank(); ++j)
        if (has_index(J, j) && golden_sign(p[j]) < 0) return false;
    return true;
}

ChamberRep chamber_rep(const RootSystem& s, IndexMask J, const Vec& v) {
    ChamberRep rep{v, GroupElt::identity(s.rank())};
    while (true) {
        const Vec p = s.simple_pairings(rep.point);
        std::size_t j = 0;
        while (j < s.rank() && !(has_index(J, j) && golden_sign(p[j]) < 0)) ++j;
        if (j == s.rank()) return rep;
        rep.point = s.reflect_simple(j, rep.point);
        rep.element.left_multiply_simple(s, j);
    }
}

IndexMask stabilizer_datum(const RootSystem& s, const Vec& v) {
    const IndexMask all = full_mask(s.rank());
    if (!in_chamber(s, all, v)) throw std::invalid_argument("stabilizer_datum: vector is not in the fundamental chamber");
    const Vec p = s.simple_pairings(v);
    IndexMask by_pairing = 0, by_fixing = 0;
    for (std::size_t j = 0; j < s.rank(); ++j) {
        if (p[j].is_zero()) by_pairing |= IndexMask{1} << j;
        if (s.reflect_simple(j, v) == v) by_fixing |= IndexMask{1} << j;
    }
    if (by_pairing != by_fixing) throw std::logic_error("stabilizer_datum: pairing and fixed-point criteria disagree");
    return by_pairing;
}

std::vector<RootIndex> dominant_roots(const RootSystem& s) {
    if (!s.is_irreducible()) throw std::invalid_argument("dominant_roots: root system is reducible");
    std::vector<RootIndex> out;
    for (RootIndex i = 0; i < s.size(); ++i)
        if (in_chamber(s, full_mask(s.rank()), s.root(i))) out.push_back(i);
    return out;
}

bool preserves_form(const RootSystem& s, const GroupElt& w) {
    if (w.rank() != s.rank()) return false;
    for (std::size_t i = 0; i < s.rank(); ++i)
        for (std::size_t j = i; j < s.rank(); ++j)
            if (s.form(w.image(i), w.image(j)) != s.gram()(i, j)) return false;
    return true;
}

std::size_t length(const RootSystem& s, const GroupElt& w) {
    if (!preserves_form(s, w)) throw std::invalid_argument("length: element does not preserve the form");
    std::size_t count = 0;
    for (RootIndex i : s.positive()) {
        const auto img = s.index_of(w.apply(s.root(i)));
        if (!img) throw std::invalid_argument("length: element does not permute the roots");
        if (!s.is_positive(*img)) ++count;
    }
    return count;
}

std::vector<std::size_t> reduced_word(const RootSystem& s, const GroupElt& w) {
    std::vector<std::size_t> recorded;
    GroupElt cur = w;
    const GroupElt id = GroupElt::identity(s.rank());
    while (!(cur == id)) {
        if (recorded.size() > s.positive().size()) throw std::invalid_argument("reduced_word: element is not in W");
        std::size_t j = 0;
        while (j < s.rank() && coherent_sign(cur.image(j), s.rank()) >= 0) ++j;
        if (j == s.rank()) throw std::invalid_argument("reduced_word: element is not in W");
        cur.right_multiply_simple(s, j);
        recorded.push_back(j);
    }
    std::reverse(recorded.begin(), recorded.end());
    return recorded;
}

GroupElt from_word(const RootSystem& s, std::span<const std::size_t> word) {
    GroupElt w = GroupElt::identity(s.rank());
    for (std::size_t j : word) w.right_multiply_simple(s, j);
    return w;
}

GroupElt inverse(const RootSystem& s, const GroupElt& w) {
    auto word = reduced_word(s, w);
    std::reverse(word.begin(), word.end());
    return from_word(s, word);
}

std::vector<EnumeratedElement> enumerate_group(const RootSystem& s, std::size_t max_length) {
    std::unordered_set<GroupElt, GroupEltHash> seen;
    std::vector<EnumeratedElement> out{{GroupElt::identity(s.rank()), 0}};
    seen.insert(out.front().element);
    for (std::size_t head = 0; head < out.size(); ++head) {
        if (out[head].length >= max_length) continue;
        for (std::size_t j = 0; j < s.rank(); ++j) {
            GroupElt next = out[head].element;
            next.right_multiply_simple(s, j);
            if (seen.insert(next).second) out.push_back({std::move(next), out[head].length + 1});
        }
    }
    return out;
}

} // namespace coxeter
