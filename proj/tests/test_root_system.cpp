#include <gtest/gtest.h>

#include "coxeter/root_system.hpp"
#include "oracles.hpp"

using namespace coxeter;

namespace {

std::vector<std::vector<long double>> real_gram(const Gram& g) {
    std::vector<std::vector<long double>> out(g.rank, std::vector<long double>(g.rank));
    for (std::size_t i = 0; i < g.rank; ++i)
        for (std::size_t j = 0; j < g.rank; ++j) out[i][j] = oracle::golden_value(g(i, j).a, g(i, j).b);
    return out;
}

// Classical root counts.
std::size_t expected_count(const std::string& label) {
    const char f = label[0];
    if (label.starts_with("I2(")) return 2 * static_cast<std::size_t>(label[3] - '0');
    const std::size_t n = static_cast<std::size_t>(std::stoi(label.substr(1)));
    switch (f) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
    case 'H': return n == 3 ? 30 : 120;
    default: return 0;
    }
}

std::vector<std::string> all_labels() {
    auto labels = default_type_labels();
    labels.push_back("E8");
    labels.push_back("A7");
    labels.push_back("D8");
    labels.push_back("B8");
    labels.push_back("I2(4)");
    labels.push_back("I2(6)");
    return labels;
}

Vec vec_of(std::initializer_list<GoldenInt> c) {
    Vec v;
    std::size_t i = 0;
    for (const auto& x : c) v.set(i++, x);
    return v;
}

} // namespace

TEST(Datum, UnknownLabels) {
    for (const char* bad : {"Z9", "", "A0", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "H2", "H5", "I2(7)", "I2(1)", "A9", "E8xA1", "A1x"})
        EXPECT_THROW(parse_datum(bad), UnknownLabel) << bad;
}

TEST(Datum, ProductLabel) {
    const auto d = parse_datum("A1xA1");
    EXPECT_EQ(d.rank, 2U);
    EXPECT_FALSE(d.is_irreducible());
    EXPECT_TRUE(parse_datum("A3").is_irreducible());
    EXPECT_FALSE(parse_datum("I2(2)").is_irreducible());
}

TEST(BuildGram, Examples) {
    const Gram h4 = build_gram(parse_datum("H4"));
    EXPECT_EQ(h4(0, 1), GoldenInt(0, -1));
    EXPECT_EQ(h4(1, 2), GoldenInt(-1));
    EXPECT_EQ(h4(0, 2), GoldenInt(0));
    const Gram a2 = build_gram(parse_datum("A2"));
    EXPECT_EQ(a2(0, 1), GoldenInt(-1));
    EXPECT_EQ(a2(0, 0), GoldenInt(2));
    const Gram g2 = build_gram(parse_datum("G2"));
    EXPECT_EQ(g2(0, 0), GoldenInt(2));
    EXPECT_EQ(g2(1, 1), GoldenInt(6));
    EXPECT_EQ(g2(0, 1), GoldenInt(-3));
    // <a, b^> <b, a^> = 4 cos^2(pi/6) = 3.
    const auto ab = exact_div(g2(0, 1) + g2(0, 1), g2(1, 1));
    const auto ba = exact_div(g2(0, 1) + g2(0, 1), g2(0, 0));
    ASSERT_TRUE(ab && ba);
    EXPECT_EQ(*ab * *ba, GoldenInt(3));
}

TEST(BuildGram, CoxeterMatrixRecovered) {
    for (const auto& label : all_labels()) {
        const auto d = parse_datum(label);
        EXPECT_EQ(coxeter_matrix_from_gram(build_gram(d)), d.coxeter_matrix) << label;
    }
}

TEST(GenerateRoots, CountsMatchFormulaAndOracle) {
    for (const auto& label : all_labels()) {
        const auto s = RootSystem::generate(label);
        EXPECT_EQ(s.size(), expected_count(label)) << label;
        EXPECT_EQ(s.size(), oracle::float_root_closure(real_gram(s.gram()))) << label;
    }
}

TEST(GenerateRoots, SmallExamples) {
    const auto a1 = RootSystem::generate("A1");
    ASSERT_EQ(a1.size(), 2U);
    EXPECT_TRUE(a1.contains(Vec::unit(0)));
    EXPECT_TRUE(a1.contains(-Vec::unit(0)));
    EXPECT_EQ(RootSystem::generate("A3").size(), 12U);
    EXPECT_EQ(RootSystem::generate("H4").size(), 120U);
    EXPECT_EQ(RootSystem::generate("A1xA1").size(), 4U);
    EXPECT_EQ(RootSystem::generate("B3xA2").size(), 18U + 6U);
}

TEST(RootSystemProperty, StructuralInvariants) {
    for (const auto& label : all_labels()) {
        const auto s = RootSystem::generate(label);
        const std::size_t n = s.rank();
        EXPECT_EQ(s.size() % 2, 0U);
        EXPECT_EQ(s.positive().size() * 2, s.size()) << label;
        for (RootIndex i = 0; i < s.size(); ++i) {
            const Vec& r = s.root(i);
            ASSERT_NE(coherent_sign(r, n), 0) << label;
            ASSERT_EQ(s.is_positive(i), coherent_sign(r, n) > 0);
            ASSERT_TRUE(s.contains(-r));
            ASSERT_TRUE(s.datum().connected(support(r))) << label << " " << r;
            // Reducedness against the multiples 2 and tau (their inverses are covered by symmetry).
            ASSERT_FALSE(s.contains(r + r));
            ASSERT_FALSE(s.contains(r.times_tau()));
        }
        EXPECT_TRUE(std::is_sorted(s.roots().begin(), s.roots().end(), CanonicalLess{}));
    }
}

TEST(RootSystemProperty, ClosedUnderAllReflections) {
    for (const auto& label : all_labels()) {
        if (label == "E8" || label == "B8" || label == "D8") continue;   // covered by the acceptance sweep
        const auto s = RootSystem::generate(label);
        for (const auto& a : s.roots())
            for (const auto& b : s.roots()) ASSERT_TRUE(s.contains(s.reflect(a, b))) << label;
    }
}

TEST(RootSystemProperty, LengthClassesAndOrbits) {
    for (const auto& label : all_labels()) {
        const auto s = RootSystem::generate(label);
        if (!s.is_irreducible()) continue;
        EXPECT_LE(s.length_classes().size(), 2U) << label;
        // For irreducible systems the W-orbits on roots are the length classes.
        EXPECT_EQ(s.orbit_count(), s.length_classes().size()) << label;
    }
}

TEST(RootSystemProperty, CrystallographicFlag) {
    for (const auto& label : all_labels()) {
        const bool golden = label[0] == 'H' || label == "I2(5)";
        EXPECT_EQ(RootSystem::generate(label).is_crystallographic(), !golden) << label;
    }
}

TEST(Crystallographic, H3HasNonIntegralPairing) {
    const auto s = RootSystem::generate("H3");
    // <a1, a2^> = 2 * (-tau) / 2 = -tau.
    const GoldenInt pairing = s.form(Vec::unit(0), Vec::unit(1));
    EXPECT_EQ(pairing, GoldenInt(0, -1));
    EXPECT_FALSE(pairing.is_integer());
}

TEST(Reflect, Examples) {
    const auto a2 = RootSystem::generate("A2");
    const Vec a1 = Vec::unit(0), a2v = Vec::unit(1);
    EXPECT_EQ(a2.reflect(a1, a1), -a1);
    EXPECT_EQ(a2.reflect(a1, a2v), vec_of({1, 1}));
    const auto b2 = RootSystem::generate("A1xA1");
    EXPECT_EQ(b2.reflect(Vec::unit(0), Vec::unit(1)), Vec::unit(1));
    EXPECT_THROW(a2.reflect(vec_of({2, 0}), a1), std::invalid_argument);
}

TEST(RootSystemProperty, ReflectionIsInvolution) {
    for (const char* label : {"B3", "G2", "H3", "F4", "I2(5)"}) {
        const auto s = RootSystem::generate(label);
        for (const auto& a : s.roots())
            for (const auto& b : s.roots()) ASSERT_EQ(s.reflect(a, s.reflect(a, b)), b);
    }
}

TEST(Coroot, Examples) {
    const auto a3 = RootSystem::generate("A3");
    const auto c = a3.coroot(Vec::unit(1));
    EXPECT_EQ(c[1], GoldenRational(1));
    EXPECT_EQ(c[0], GoldenRational(0));

    const auto b2 = RootSystem::generate("B2");   // alpha_1 long (4)
    EXPECT_EQ(b2.coroot(Vec::unit(0))[0], GoldenRational(GoldenInt(1), 2));

    const auto g2 = RootSystem::generate("G2");   // alpha_2 long (6)
    EXPECT_EQ(g2.coroot(Vec::unit(1))[1], GoldenRational(GoldenInt(1), 3));
}

TEST(Dual, SimplyLacedIsSelfDual) {
    for (const char* label : {"A3", "D5", "E6", "H3", "I2(5)"}) {
        const auto s = RootSystem::generate(label);
        EXPECT_EQ(dual_system(s).gram(), s.gram()) << label;
    }
}

TEST(Dual, BAndCAreExchanged) {
    for (int n = 3; n <= 6; ++n) {
        const auto b = RootSystem::generate("B" + std::to_string(n));
        const auto c = RootSystem::generate("C" + std::to_string(n));
        EXPECT_EQ(dual_system(b).gram(), c.gram()) << n;
        EXPECT_EQ(dual_system(c).gram(), b.gram()) << n;
    }
}

TEST(Dual, DoubleDualIsIdentity) {
    for (const char* label : {"F4", "G2", "B4", "C3", "B2"}) {
        const auto s = RootSystem::generate(label);
        const auto dd = dual_system(dual_system(s));
        EXPECT_EQ(dd.gram(), s.gram()) << label;
        EXPECT_EQ(dd.roots(), s.roots()) << label;
    }
}

TEST(Dual, CorrespondenceMapsRootsToCoroots) {
    const auto s = RootSystem::generate("B3");
    const auto d = dual_with_correspondence(s);
    for (RootIndex i = 0; i < s.size(); ++i) {
        EXPECT_EQ(d.system.squared_length(d.correspondence[i]) * s.squared_length(i), GoldenInt(8));
        EXPECT_EQ(d.system.is_positive(d.correspondence[i]), s.is_positive(i));
    }
}

TEST(Rescale, UnitFactorsAreIdentity) {
    const auto s = RootSystem::generate("F4");
    const std::vector<GoldenRational> ones(s.orbit_count(), GoldenRational(1));
    const auto r = rescale_by_orbit(s, ones);
    EXPECT_EQ(r.system.gram(), s.gram());
    EXPECT_EQ(r.system.roots(), s.roots());
}

TEST(Rescale, ShortClassDoubledInB2) {
    // B2: long alpha_1 (4), short alpha_2 (2).  Doubling short roots gives
    // lengths (4, 8); normalizing to a shortest length of 2 yields (2, 4),
    // the short/long pattern of C2 read in node order.
    const auto s = RootSystem::generate("B2");
    std::vector<GoldenRational> f(s.size());
    for (RootIndex i = 0; i < s.size(); ++i) f[i] = s.squared_length(i) == GoldenInt(2) ? GoldenRational(2) : GoldenRational(1);
    const auto r = rescale(s, f);
    EXPECT_EQ(r.system.gram()(0, 0), GoldenInt(2));
    EXPECT_EQ(r.system.gram()(1, 1), GoldenInt(4));
    EXPECT_EQ(r.system.gram()(0, 1), GoldenInt(-2));
}

TEST(Rescale, RejectsNonOrbitConstantFactors) {
    const auto s = RootSystem::generate("B2");
    std::vector<GoldenRational> f(s.size(), GoldenRational(1));
    f[0] = GoldenRational(2);
    EXPECT_THROW(rescale(s, f), std::invalid_argument);
}

TEST(Support, Examples) {
    const auto a3 = RootSystem::generate("A3");
    EXPECT_EQ(support(Vec::unit(1)), IndexMask{0b010});
    const Vec highest = vec_of({1, 1, 1});
    EXPECT_TRUE(a3.contains(highest));
    EXPECT_EQ(support(highest), IndexMask{0b111});
    EXPECT_THROW(support(Vec{}), std::invalid_argument);
}

TEST(Support, ConnectedInE8) {
    const auto e8 = RootSystem::generate("E8");
    for (const auto& r : e8.roots()) {
        // Independent connectivity oracle: flood fill on the E8 bond list.
        const std::vector<std::pair<int, int>> bonds{{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
        const IndexMask supp = support(r);
        IndexMask seen = supp & (~supp + 1);
        for (int round = 0; round < 8; ++round)
            for (auto [i, j] : bonds) {
                if (!has_index(supp, i) || !has_index(supp, j)) continue;
                if (has_index(seen, i) || has_index(seen, j)) seen |= (IndexMask{1} << i) | (IndexMask{1} << j);
            }
        ASSERT_EQ(seen, supp) << r;
    }
}
