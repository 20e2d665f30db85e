#include <gtest/gtest.h>

#include <random>
#include <set>

#include "coxeter/weyl.hpp"

using namespace coxeter;

namespace {

Vec vec_of(std::initializer_list<GoldenInt> c) {
    Vec v;
    std::size_t i = 0;
    for (const auto& x : c) v.set(i++, x);
    return v;
}

IndexMask mask_of(std::initializer_list<int> one_based) {
    IndexMask m = 0;
    for (int i : one_based) m |= IndexMask{1} << (i - 1);
    return m;
}

GroupElt random_element(const RootSystem& s, std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> pick(0, s.rank() - 1);
    GroupElt w = GroupElt::identity(s.rank());
    const std::size_t len = rng() % (max_len + 1);
    for (std::size_t k = 0; k < len; ++k) w.right_multiply_simple(s, pick(rng));
    return w;
}

} // namespace

TEST(Orbit, EmptyJIsTrivial) {
    const auto s = RootSystem::generate("B3");
    for (const auto& r : s.roots()) EXPECT_EQ(orbit(s, 0, r), std::vector<Vec>{r});
}

TEST(Orbit, A3ParabolicOrbitOfAlpha1) {
    const auto s = RootSystem::generate("A3");
    const auto o = orbit(s, mask_of({1, 3}), Vec::unit(0));
    std::vector<Vec> expect{Vec::unit(0), -Vec::unit(0)};
    std::sort(expect.begin(), expect.end(), CanonicalLess{});
    EXPECT_EQ(o, expect);
}

TEST(Orbit, FullOrbitIsAllRootsForSimplyLaced) {
    for (const char* label : {"A4", "D5", "E6", "H3", "H4"}) {
        const auto s = RootSystem::generate(label);
        EXPECT_EQ(orbit(s, full_mask(s.rank()), Vec::unit(0)), s.roots()) << label;
    }
}

TEST(Orbit, RootOrbitMatchesVectorOrbit) {
    const auto s = RootSystem::generate("F4");
    for (IndexMask J = 0; J <= full_mask(4); ++J) {
        for (RootIndex i = 0; i < s.size(); ++i) {
            std::vector<Vec> via_table;
            for (RootIndex k : root_orbit(s, J, i)) via_table.push_back(s.root(k));
            ASSERT_EQ(via_table, orbit(s, J, s.root(i)));
        }
    }
}

TEST(Orbit, CapIsEnforced) {
    const auto s = RootSystem::generate("E6");
    EXPECT_THROW(orbit(s, full_mask(6), Vec::unit(0), 10), OrbitTooLarge);
}

TEST(InChamber, Examples) {
    const auto a2 = RootSystem::generate("A2");
    EXPECT_TRUE(in_chamber(a2, full_mask(2), Vec{}));
    EXPECT_FALSE(in_chamber(a2, mask_of({2}), Vec::unit(0)));
    const auto b2 = RootSystem::generate("B2");
    for (RootIndex i : dominant_roots(b2)) EXPECT_TRUE(in_chamber(b2, full_mask(2), b2.root(i)));
}

TEST(ChamberRep, Examples) {
    const auto a2 = RootSystem::generate("A2");
    const Vec highest = vec_of({1, 1});
    const auto fixed = chamber_rep(a2, full_mask(2), highest);
    EXPECT_EQ(fixed.point, highest);
    EXPECT_EQ(fixed.element, GroupElt::identity(2));
    EXPECT_EQ(chamber_rep(a2, full_mask(2), -highest).point, highest);
    // The orbit of -alpha_1 meets the chamber in the highest root.
    EXPECT_EQ(chamber_rep(a2, full_mask(2), -Vec::unit(0)).point, highest);
    std::vector<Vec> in;
    for (const auto& v : orbit(a2, full_mask(2), -Vec::unit(0)))
        if (in_chamber(a2, full_mask(2), v)) in.push_back(v);
    EXPECT_EQ(in, std::vector<Vec>{highest});
}

TEST(ChamberRepProperty, UniqueIdempotentAndTransported) {
    for (const char* label : {"A3", "B3", "G2", "H3", "F4", "I2(5)"}) {
        const auto s = RootSystem::generate(label);
        for (IndexMask J = 0; J <= full_mask(s.rank()); ++J) {
            for (const auto& r : s.roots()) {
                const auto rep = chamber_rep(s, J, r);
                const auto orb = orbit(s, J, r);
                ASSERT_TRUE(std::binary_search(orb.begin(), orb.end(), rep.point, CanonicalLess{}));
                ASSERT_EQ(rep.element.apply(r), rep.point);
                ASSERT_EQ(chamber_rep(s, J, rep.point).point, rep.point);
                std::size_t count = 0;
                for (const auto& v : orb) count += in_chamber(s, J, v);
                ASSERT_EQ(count, 1U) << label;
                for (const auto& v : orb) ASSERT_TRUE(s.contains(v));
            }
        }
    }
}

TEST(Stabilizer, Examples) {
    const auto a3 = RootSystem::generate("A3");
    EXPECT_EQ(stabilizer_datum(a3, Vec{}), full_mask(3));
    // 2 * rho-like interior vector: pairings all positive.
    const Vec interior = vec_of({3, 4, 3});
    EXPECT_EQ(stabilizer_datum(a3, interior), IndexMask{0});
    EXPECT_EQ(stabilizer_datum(a3, vec_of({1, 1, 1})), mask_of({2}));
    EXPECT_THROW(stabilizer_datum(a3, -Vec::unit(0)), std::invalid_argument);
}

TEST(DominantRoots, Examples) {
    EXPECT_EQ(dominant_roots(RootSystem::generate("A2")).size(), 1U);
    EXPECT_EQ(dominant_roots(RootSystem::generate("B2")).size(), 2U);
    EXPECT_EQ(dominant_roots(RootSystem::generate("H4")).size(), 1U);
    EXPECT_THROW(dominant_roots(RootSystem::generate("A1xA1")), std::invalid_argument);
}

TEST(DominantRoots, OnePerLengthClass) {
    for (const auto& label : default_type_labels()) {
        const auto s = RootSystem::generate(label);
        EXPECT_EQ(dominant_roots(s).size(), s.length_classes().size()) << label;
    }
}

TEST(Length, Examples) {
    const auto a2 = RootSystem::generate("A2");
    EXPECT_EQ(length(a2, GroupElt::identity(2)), 0U);
    const auto all = enumerate_group(a2);
    ASSERT_EQ(all.size(), 6U);
    std::size_t longest = 0;
    for (const auto& e : all) longest = std::max(longest, length(a2, e.element));
    EXPECT_EQ(longest, 3U);
}

TEST(Length, SimpleReflectionsHaveLengthOne) {
    for (const auto& label : default_type_labels()) {
        const auto s = RootSystem::generate(label);
        for (std::size_t j = 0; j < s.rank(); ++j) {
            const auto w = GroupElt::simple_reflection(s, j);
            ASSERT_EQ(length(s, w), 1U) << label;
            // s_j negates alpha_j and permutes the other positive roots.
            for (RootIndex i : s.positive()) {
                const RootIndex img = *s.index_of(w.apply(s.root(i)));
                ASSERT_EQ(s.is_positive(img), i != s.simple_index(j));
            }
        }
    }
}

TEST(GroupOrders, Enumerated) {
    const std::vector<std::pair<const char*, std::size_t>> orders{
        {"A1", 2}, {"A3", 24}, {"B3", 48}, {"G2", 12}, {"H3", 120}, {"I2(5)", 10}, {"F4", 1152}, {"D4", 192}};
    for (auto [label, order] : orders) {
        const auto s = RootSystem::generate(label);
        const auto all = enumerate_group(s);
        EXPECT_EQ(all.size(), order) << label;
        for (const auto& e : all) ASSERT_EQ(length(s, e.element), e.length) << label;
    }
}

TEST(GroupEltProperty, AssociativityInverseAndWords) {
    std::mt19937_64 rng(99);
    for (const char* label : {"D4", "H3", "B4", "E6"}) {
        const auto s = RootSystem::generate(label);
        for (int n = 0; n < 200; ++n) {
            const auto x = random_element(s, rng, 12), y = random_element(s, rng, 12), z = random_element(s, rng, 12);
            ASSERT_EQ((x * y) * z, x * (y * z));
            const auto xi = inverse(s, x);
            ASSERT_EQ(x * xi, GroupElt::identity(s.rank()));
            ASSERT_EQ(length(s, xi), length(s, x));
            const auto word = reduced_word(s, x);
            ASSERT_EQ(word.size(), length(s, x));
            ASSERT_EQ(from_word(s, word), x);
            ASSERT_TRUE(preserves_form(s, x));
        }
    }
}

TEST(GroupElt, LeftAndRightMultiplication) {
    const auto s = RootSystem::generate("B3");
    GroupElt w = GroupElt::identity(3);
    w.right_multiply_simple(s, 0);
    w.right_multiply_simple(s, 2);
    const GroupElt expect = GroupElt::simple_reflection(s, 0) * GroupElt::simple_reflection(s, 2);
    EXPECT_EQ(w, expect);
    GroupElt v = GroupElt::identity(3);
    v.left_multiply_simple(s, 2);
    v.left_multiply_simple(s, 0);
    EXPECT_EQ(v, expect);
    EXPECT_EQ(GroupElt::reflection(s, Vec::unit(1)), GroupElt::simple_reflection(s, 1));
}
