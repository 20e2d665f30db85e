#include <gtest/gtest.h>

#include <random>

#include "coxeter/datum.hpp"
#include "coxeter/folding.hpp"

using namespace coxeter;

namespace {

const FoldedSystem& folded(const std::string& label) {
    static std::map<std::string, FoldedSystem> cache;
    auto it = cache.find(label);
    if (it == cache.end()) it = cache.emplace(label, fold(RootSystem::generate(label))).first;
    return it->second;
}

} // namespace

TEST(Fold, RejectsUnsuitableSources) {
    EXPECT_THROW(fold(RootSystem::generate("B2")), std::invalid_argument);
    EXPECT_THROW(fold(RootSystem::generate("A2")), std::invalid_argument);   // not golden
    EXPECT_THROW(fold(RootSystem::generate("I2(6)")), std::invalid_argument);
}

TEST(Fold, SizesAndTypes) {
    for (auto [src, target, count] : {std::tuple{"I2(5)", "A4", 20}, {"H3", "D6", 60}, {"H4", "E8", 240}}) {
        const FoldedSystem& f = folded(src);
        EXPECT_EQ(f.psi().size(), static_cast<std::size_t>(count)) << src;
        EXPECT_EQ(f.lattice_rank(), 2 * f.source().rank());
        EXPECT_EQ(expected_fold_type(src), std::optional<std::string>(target));
        const Certificate c = check_fold_type(f);
        EXPECT_EQ(c.status, Status::Pass) << src << " " << c.note;
        EXPECT_NE(c.note.find(std::string("identified ") + target), std::string::npos) << c.note;
    }
}

TEST(Fold, FormIsRationalPartOfGoldenForm) {
    const FoldedSystem& f = folded("H3");
    const RootSystem& s = f.source();
    for (RootIndex i = 0; i < s.size(); ++i)
        for (RootIndex k = 0; k < s.size(); k += 7) {
            const GoldenInt g = s.form(s.root(i), s.root(k));
            EXPECT_EQ(f.pairing(f.to_lattice(s.root(i)), f.to_lattice(s.root(k))), theta(g));
        }
}

TEST(Fold, BundleInvariants) {
    for (const char* src : {"I2(5)", "H3", "H4"}) {
        const FoldedSystem& f = folded(src);
        const RootSystem& s = f.source();
        for (RootIndex a = 0; a < s.size(); ++a) {
            const RootIndex x = f.image(a), y = f.tau_image(a);
            EXPECT_EQ(f.partner(x), y);
            EXPECT_EQ(f.partner(y), x);
            EXPECT_EQ(f.bundle_base(x), a);
            EXPECT_FALSE(f.is_tau_multiple(x));
            EXPECT_TRUE(f.is_tau_multiple(y));
            // tau * (tau alpha) = alpha + tau alpha
            EXPECT_EQ(f.tau_lattice(f.psi().root(y)), f.psi().root(x) + f.psi().root(y));
            EXPECT_EQ(f.pairing(f.psi().root(x), f.psi().root(y)), 0);
            EXPECT_EQ(f.from_lattice(f.psi().root(x)), s.root(a));
        }
    }
}

TEST(Fold, WeylGroupPreservesPsiAndForm) {
    const FoldedSystem& f = folded("H3");
    const RootSystem& s = f.source();
    const auto group = enumerate_group(s);
    ASSERT_EQ(group.size(), 120u);
    for (const auto& e : group) {
        for (std::size_t i = 0; i < f.lattice_rank(); ++i) {
            const Vec wi = f.to_lattice(e.element.apply(f.from_lattice(Vec::unit(i))));
            ASSERT_TRUE(f.psi().contains(wi));
            for (std::size_t j = 0; j < f.lattice_rank(); ++j) {
                const Vec wj = f.to_lattice(e.element.apply(f.from_lattice(Vec::unit(j))));
                ASSERT_EQ(f.pairing(wi, wj), f.form()(i, j).a);
            }
        }
    }
}

TEST(Fold, IdentifyCatalogGraphs) {
    for (const char* label : {"A5", "D4", "D6", "E6", "E7", "E8"}) {
        const RootSystem s = RootSystem::generate(label);
        std::vector<Vec> simple;
        for (std::size_t i = 0; i < s.rank(); ++i) simple.push_back(Vec::unit(i));
        const Identification id = identify_type(simple, s.gram());
        EXPECT_EQ(id.label, label);
        // The catalog graph agrees with the Gram convention of parse_datum.
        const auto adj = catalog_graph(label);
        for (std::size_t i = 0; i < s.rank(); ++i)
            for (std::size_t j = 0; j < s.rank(); ++j)
                EXPECT_EQ(adj[i][j] == 1, s.gram()(i, j) == GoldenInt(-1)) << label << " " << i << "," << j;
    }
}

TEST(Fold, IdentifyProductAndReordered) {
    const RootSystem s = RootSystem::generate("A2xA1");
    std::vector<Vec> simple{Vec::unit(2), Vec::unit(1), Vec::unit(0)};
    const Identification id = identify_type(simple, s.gram());
    EXPECT_EQ(id.label, "A1xA2");
    EXPECT_THROW(identify_type(std::vector<Vec>{Vec::unit(0), Vec::unit(0)}, s.gram()), std::invalid_argument);
    EXPECT_THROW(catalog_graph("E9"), std::invalid_argument);
}

TEST(Fold, InnerProductTable) {
    for (const char* src : {"I2(5)", "H3", "H4"}) {
        const Certificate c = check_ip_table(folded(src));
        EXPECT_EQ(c.status, Status::Pass) << src << " " << c.note;
    }
}

TEST(Fold, ReflectionFactorization) {
    for (const char* src : {"I2(5)", "H3", "H4"}) EXPECT_EQ(check_reflection_factorization(folded(src)).status, Status::Pass) << src;
}

TEST(Fold, LengthDoubling) {
    EXPECT_EQ(check_length_doubling(folded("I2(5)"), 100).status, Status::Pass);
    const Certificate c = check_length_doubling(folded("H3"), 100);
    EXPECT_EQ(c.status, Status::Pass) << c.note;
    EXPECT_NE(c.note.find("elements 120; longest l=15 l'=30"), std::string::npos) << c.note;
}

TEST(Fold, SimpleSubsystemEnumerationsAgree) {
    const FoldedSystem& f = folded("I2(5)");
    const auto left = source_simple_subsystems(f, 2);
    // empty + 10 singletons + pairs at angle with product 0, -1 or -tau
    EXPECT_EQ(left.front().size(), 0u);
    EXPECT_EQ(left, bundle_simple_subsystems(f, 2));
    std::mt19937_64 rng(1);
    EXPECT_EQ(check_phi_bijection(f, 2, rng, 50).status, Status::Pass);
    EXPECT_EQ(check_phi_bijection(folded("H3"), 3, rng, 50).status, Status::Pass);
}

TEST(Fold, ChamberEquivalence) {
    EXPECT_EQ(check_chamber_equivalence(folded("I2(5)"), 2).status, Status::Pass);
    EXPECT_EQ(check_chamber_equivalence(folded("H3"), 3).status, Status::Pass);
}

TEST(Fold, SliceTransfer) {
    const FoldedSystem& f = folded("H3");
    for (IndexMask J = 0; J < 8; ++J) {
        const Certificate c = check_slice_transfer(f, J);
        EXPECT_EQ(c.status, Status::Pass) << J << " " << c.note;
        EXPECT_EQ(*c.J, J | (J << 3));
    }
}

TEST(Fold, PhiPrime) {
    std::mt19937_64 rng(7);
    for (const char* src : {"I2(5)", "H3"}) {
        const Certificate c = check_phi_prime(folded(src), rng, 100);
        EXPECT_EQ(c.status, Status::Pass) << src << " " << c.note;
    }
}
