#include <random>

#include <gtest/gtest.h>

#include <nafil/construct.hpp>
#include <nafil/subloops.hpp>
#include <nafil/text_format.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace nafil;

namespace {

std::vector<std::size_t> orders(const SubloopSet& s) {
    std::vector<std::size_t> out;
    for (const auto& sub : s.subloops) out.push_back(sub.order());
    return out;
}

std::set<ElementSet> as_set(const SubloopSet& s) {
    std::set<ElementSet> out;
    for (const auto& sub : s.subloops) out.insert(sub.elements);
    return out;
}

// Normality straight from the coset conditions, over sets.
bool naive_normal(const Table& t, const ElementSet& nset) {
    const Element n = static_cast<Element>(t.order());
    auto img = [&](auto fn) {
        std::set<Element> s;
        for (Element a : nset) s.insert(fn(a));
        return s;
    };
    for (Element x = 1; x <= n; ++x) {
        if (img([&](Element a) { return t.at(x, a); }) != img([&](Element a) { return t.at(a, x); })) return false;
        for (Element y = 1; y <= n; ++y) {
            if (img([&](Element a) { return t.at(t.at(a, x), y); }) != img([&](Element a) { return t.at(a, t.at(x, y)); }))
                return false;
            if (img([&](Element a) { return t.at(y, t.at(x, a)); }) != img([&](Element a) { return t.at(t.at(y, x), a); }))
                return false;
        }
    }
    return true;
}

}  // namespace

TEST(EnumerateSubloops, OrderFive) {
    SubloopSet s = enumerate_subloops(certify_loop(fixtures::l5()));
    EXPECT_EQ(orders(s), (std::vector<std::size_t>{1, 2, 2, 2, 2, 5}));
    EXPECT_EQ(subgroup_census(s), (std::map<std::size_t, std::size_t>{{2, 4}}));
    EXPECT_TRUE(nonassociative_proper_subloops(s).empty());
    EXPECT_EQ(s.subloops[1].elements, (ElementSet{1, 2}));
    EXPECT_FALSE(s.subloops.back().is_group);
}

TEST(EnumerateSubloops, OrderSeven) {
    SubloopSet s = enumerate_subloops(construct_nafil(3).loop);
    EXPECT_EQ(orders(s), (std::vector<std::size_t>{1, 2, 2, 2, 2, 3, 7}));
    EXPECT_EQ(subgroup_census(s), (std::map<std::size_t, std::size_t>{{2, 4}, {3, 1}}));
}

TEST(EnumerateSubloops, OrderNine) {
    SubloopSet s = enumerate_subloops(certify_loop(fixtures::l9()));
    EXPECT_EQ(subgroup_census(s), (std::map<std::size_t, std::size_t>{{2, 6}, {4, 1}}));
    EXPECT_TRUE(nonassociative_proper_subloops(s).empty());
}

TEST(EnumerateSubloops, CyclicSix) {
    SubloopSet s = enumerate_subloops(certify_loop(text::read_table_file(fixtures::data_path("C6.txt"))));
    EXPECT_EQ(subgroup_census(s), (std::map<std::size_t, std::size_t>{{2, 1}, {3, 1}}));
    EXPECT_EQ(s.subloops[1].elements, (ElementSet{1, 4}));
    EXPECT_EQ(s.subloops[2].elements, (ElementSet{1, 3, 5}));
}

TEST(EnumerateSubloops, PrimeCyclicHasOnlyTrivialSubloops) {
    for (std::size_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        SubloopSet s = enumerate_subloops(certify_loop(oracle::cyclic_group(p)));
        EXPECT_EQ(orders(s), (std::vector<std::size_t>{1, p}));
    }
}

TEST(EnumerateSubloops, AgreesWithSubsetOracle) {
    std::vector<Table> corpus = {fixtures::l5(), fixtures::l9(), oracle::klein_group(), oracle::dihedral_group(4),
                                 oracle::product_group(2, 6)};
    for (std::size_t m = 2; m <= 7; ++m) corpus.push_back(construct_nafil(m).trace.table);
    std::mt19937 rng(8);
    for (auto& g : oracle::random_groups(10, rng)) corpus.push_back(g);
    for (auto& t : oracle::all_reduced_latin_squares(5)) corpus.push_back(t);
    for (const Table& t : corpus) {
        SubloopSet s = enumerate_subloops(certify_loop(t));
        EXPECT_EQ(as_set(s), oracle::all_subloops(t));
        for (const auto& sub : s.subloops) EXPECT_EQ(sub.is_group, oracle::associative_on(t, sub.elements));
    }
}

TEST(EnumerateSubloops, CapExceeded) {
    Loop l = construct_nafil(5).loop;
    EXPECT_THROW(enumerate_subloops(l, 10), cap_exceeded_error);
    EXPECT_NO_THROW(enumerate_subloops(l, 11));
}

TEST(EnumerateSubloops, LowerBlockIsASubgroup) {
    for (std::size_t m = 2; m <= 12; ++m) {
        Loop l = construct_nafil(m).loop;
        ElementSet lower(m);
        std::iota(lower.begin(), lower.end(), 1);
        SubloopSet s = enumerate_subloops(l);
        auto it = std::find_if(s.subloops.begin(), s.subloops.end(),
                               [&](const Subloop& sub) { return sub.elements == lower; });
        ASSERT_NE(it, s.subloops.end()) << m;
        EXPECT_TRUE(it->is_group);
    }
}

TEST(IsNormal, Examples) {
    Loop l5 = certify_loop(fixtures::l5());
    EXPECT_FALSE(is_normal(l5, ElementSet{1, 2}));
    Loop c6 = certify_loop(oracle::cyclic_group(6));
    EXPECT_TRUE(is_normal(c6, ElementSet{1, 4}));
    EXPECT_THROW(is_normal(l5, ElementSet{1, 2, 3}), std::invalid_argument);
}

TEST(IsNormal, TrivialAndWholeAlwaysNormal) {
    for (std::size_t m = 2; m <= 10; ++m) {
        Loop l = construct_nafil(m).loop;
        ElementSet all(l.order());
        std::iota(all.begin(), all.end(), 1);
        EXPECT_TRUE(is_normal(l, ElementSet{1}));
        EXPECT_TRUE(is_normal(l, all));
    }
}

TEST(IsNormal, AgreesWithCosetDefinition) {
    std::vector<Table> corpus = {fixtures::l5(), fixtures::l9(), oracle::dihedral_group(3), oracle::dihedral_group(4)};
    for (std::size_t m = 2; m <= 6; ++m) corpus.push_back(construct_nafil(m).trace.table);
    for (auto& t : oracle::all_reduced_latin_squares(5)) corpus.push_back(t);
    for (const Table& t : corpus) {
        Loop l = certify_loop(t);
        for (const auto& sub : enumerate_subloops(l).subloops)
            EXPECT_EQ(is_normal(l, sub.elements), naive_normal(t, sub.elements));
    }
}

TEST(IsSimple, Examples) {
    EXPECT_TRUE(is_simple(certify_loop(fixtures::l5())));
    EXPECT_TRUE(is_simple(certify_loop(fixtures::l9())));
    EXPECT_FALSE(is_simple(certify_loop(oracle::cyclic_group(6))));
    EXPECT_TRUE(is_simple(certify_loop(oracle::cyclic_group(7))));
    // Rotations form a normal subgroup of index two.
    EXPECT_FALSE(is_simple(certify_loop(oracle::dihedral_group(5))));
}

TEST(IsSimple, ConstructedFamily) {
    for (std::size_t m = 2; m <= 12; ++m) EXPECT_TRUE(is_simple(construct_nafil(m).loop)) << m;
}

TEST(Lagrange, OrderFive) {
    auto v = lagrange_violations(enumerate_subloops(certify_loop(fixtures::l5())));
    ASSERT_EQ(v.size(), 4u);
    for (const auto& x : v) EXPECT_EQ(x, (LagrangeViolation{2, 5}));
}

TEST(Lagrange, GroupsHaveNone) {
    std::mt19937 rng(4);
    for (const Table& g : oracle::random_groups(40, rng))
        EXPECT_TRUE(lagrange_violations(enumerate_subloops(certify_loop(g))).empty());
}

TEST(Lagrange, FamilyViolatesThroughLowerBlock) {
    for (std::size_t m = 2; m <= 12; ++m) {
        auto v = lagrange_violations(enumerate_subloops(construct_nafil(m).loop));
        EXPECT_NE(std::find(v.begin(), v.end(), LagrangeViolation{m, 2 * m + 1}), v.end()) << m;
    }
}
