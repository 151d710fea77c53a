#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include <nafil/construct.hpp>
#include <nafil/latin.hpp>

#include "fixtures.hpp"

using namespace nafil;

TEST(IsLatin, CyclicShiftRows) {
    EXPECT_TRUE(is_latin(Block::from_rows({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}})));
}

TEST(IsLatin, GoldenOrderNineBody) { EXPECT_TRUE(is_latin(fixtures::l9())); }

TEST(IsLatin, RepeatedEntryInRow) { EXPECT_FALSE(is_latin(Block::from_rows({{1, 1}, {2, 2}}))); }

TEST(IsLatin, ReportsFirstViolation) {
    auto v = find_latin_violation(Block::from_rows({{1, 2}, {1, 2}}));
    ASSERT_TRUE(v);
    EXPECT_EQ(v->line, not_latin_error::Line::column);
    EXPECT_EQ(v->index, 1u);
    EXPECT_EQ(v->label, 1u);
}

TEST(IsLatin, NonSquareBlockUsesDeclaredUniverse) {
    // [L(5)]' still draws from 5..9 after losing a row.
    Block b = lk_prime(4);
    EXPECT_EQ(b.universe(), (ElementSet{5, 6, 7, 8, 9}));
    EXPECT_TRUE(is_latin(b));
}

TEST(StandardForm, GoldenTable) { EXPECT_TRUE(is_standard_form(fixtures::l9())); }

TEST(StandardForm, OneByOne) { EXPECT_TRUE(is_standard_form(Table::from_rows({{1}}))); }

TEST(StandardForm, RotatedRows) {
    EXPECT_FALSE(is_standard_form(Table::from_rows({{2, 3, 1}, {3, 1, 2}, {1, 2, 3}})));
}

TEST(Transpose, TwoByTwo) {
    EXPECT_EQ(transpose(Block::from_rows({{1, 2}, {3, 4}})), Block::from_rows({{1, 3}, {2, 4}}));
}

TEST(Transpose, CounterCyclicOfOrderFive) {
    // Rows of the counter-cyclic block [C_5] are the columns of its transpose.
    Block counter_cyclic = Block::from_rows({{1, 2, 3, 4, 5}, {5, 1, 2, 3, 4}, {4, 5, 1, 2, 3}, {3, 4, 5, 1, 2},
                                             {2, 3, 4, 5, 1}});
    EXPECT_EQ(transpose(counter_cyclic), Block::from_rows({{1, 5, 4, 3, 2},
                                                           {2, 1, 5, 4, 3},
                                                           {3, 2, 1, 5, 4},
                                                           {4, 3, 2, 1, 5},
                                                           {5, 4, 3, 2, 1}}));
}

TEST(Transpose, PreservesUniverse) {
    Block b(1, 2, {3, 4}, {1, 2, 3, 4, 5});
    EXPECT_EQ(transpose(b).universe(), b.universe());
    EXPECT_EQ(transpose(b).rows(), 2u);
}

TEST(DeleteRow, BlockPrime) {
    Block b = delete_row(cyclic_block(5, 4), 4);
    ASSERT_EQ(b.rows(), 4u);
    EXPECT_EQ(b.at(1, 1), 5u);
    EXPECT_EQ(b.at(2, 1), 6u);
    EXPECT_EQ(b.at(3, 1), 7u);
    EXPECT_EQ(b.at(4, 1), 9u);
}

TEST(DeleteRow, Small) {
    EXPECT_EQ(delete_row(Block::from_rows({{1, 2}, {3, 4}}), 1), Block::from_rows({{3, 4}}, ElementSet{1, 2, 3, 4}));
}

TEST(DeleteRow, LastRowLeavesEmptyBlock) {
    Block b = delete_row(Block::from_rows({{1, 2}}), 1);
    EXPECT_EQ(b.rows(), 0u);
    EXPECT_EQ(b.cols(), 2u);
    EXPECT_THROW(assemble(b, b, b, b), dimension_error);
}

TEST(DeleteRow, OutOfRange) {
    Block b = Block::from_rows({{1, 2}, {2, 1}});
    EXPECT_THROW(delete_row(b, 0), range_error);
    EXPECT_THROW(delete_row(b, 3), range_error);
}

TEST(DeleteColumn, BlockDoublePrime) {
    EXPECT_EQ(delete_column(cyclic_block(5, 4), 5),
              Block::from_rows({{5, 6, 7, 8}, {6, 7, 8, 9}, {7, 8, 9, 5}, {8, 9, 5, 6}, {9, 5, 6, 7}},
                               ElementSet{5, 6, 7, 8, 9}));
}

TEST(DeleteColumn, Small) {
    EXPECT_EQ(delete_column(Block::from_rows({{1, 2}, {3, 4}}), 2), Block::from_rows({{1}, {3}}, ElementSet{1, 2, 3, 4}));
    EXPECT_THROW(delete_column(Block::from_rows({{1, 2}}), 3), range_error);
}

TEST(DeleteColumn, CommutesWithTranspose) {
    Block b = cyclic_block(6, 0);
    for (std::size_t c = 1; c <= 6; ++c) EXPECT_EQ(transpose(delete_column(b, c)), delete_row(transpose(b), c));
}

TEST(Substitute, StarredBlockFromCounterCyclic) {
    Block out = substitute(counter_cyclic_transpose(5), {{1, 2, 9}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 1, 8}});
    EXPECT_EQ(out, Block::from_rows({{1, 9, 4, 3, 2}, {2, 1, 5, 4, 3}, {3, 2, 1, 6, 4}, {4, 3, 2, 1, 7}, {8, 4, 3, 2, 1}},
                                    ElementSet{1, 2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST(Substitute, EmptyIsIdentity) {
    Block b = counter_cyclic_transpose(4);
    EXPECT_EQ(substitute(b, std::span<const Assignment>{}), b);
}

TEST(Substitute, SinglePosition) {
    Block out = substitute(Block::from_rows({{1, 2}, {3, 4}}), {{1, 1, 7}});
    EXPECT_EQ(out.at(1, 1), 7u);
    EXPECT_EQ(out.at(2, 2), 4u);
    EXPECT_EQ(out.universe(), (ElementSet{1, 2, 3, 4, 7}));
}

TEST(Substitute, RejectsBadPositions) {
    Block b = Block::from_rows({{1, 2}, {3, 4}});
    EXPECT_THROW(substitute(b, {{3, 1, 1}}), range_error);
    EXPECT_THROW(substitute(b, {{1, 1, 5}, {1, 1, 6}}), range_error);
}

TEST(Assemble, GoldenOrderNine) {
    Table t = assemble(cyclic_block(4), lk_prime(4), lk_double_prime(4), starred_block(4));
    EXPECT_EQ(t, fixtures::l9());
}

TEST(Assemble, DoesNotCheckLatin) {
    Block one = Block::from_rows({{1}}, ElementSet{1, 2});
    Block two = Block::from_rows({{2}}, ElementSet{1, 2});
    Table t = assemble(one, two, two, one);
    EXPECT_EQ(t.order(), 2u);
    EXPECT_TRUE(is_latin(t));
    Table bad = assemble(one, one, two, two);
    EXPECT_FALSE(is_latin(bad));
}

TEST(Assemble, DimensionMismatch) {
    Block tl(2, 3, {1, 2, 3, 1, 2, 3}, {1, 2, 3, 4, 5});
    Block br = cyclic_block(3);
    EXPECT_THROW(assemble(tl, tl, tl, br), dimension_error);
}

TEST(Assemble, LabelOutsideRange) {
    Block tl = Block::from_rows({{1}});
    Block tr = Block::from_rows({{7}});
    EXPECT_THROW(assemble(tl, tr, tr, tl), range_error);
}

// Properties over random blocks ---------------------------------------------

namespace {

Block random_block(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    std::size_t r = dim(rng), c = dim(rng);
    std::uniform_int_distribution<Element> lab(1, 12);
    std::vector<Element> e(r * c);
    for (auto& x : e) x = lab(rng);
    ElementSet u(12);
    for (Element i = 0; i < 12; ++i) u[i] = i + 1;
    return Block(r, c, std::move(e), u);
}

Block random_latin_block(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    std::size_t n = dim(rng);
    Block b = cyclic_block(n);
    std::vector<std::size_t> rows(n), cols(n);
    std::iota(rows.begin(), rows.end(), 1);
    std::iota(cols.begin(), cols.end(), 1);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<Element> e;
    for (auto i : rows)
        for (auto j : cols) e.push_back(b.at(i, j));
    return Block(n, n, std::move(e), b.universe());
}

}  // namespace

TEST(BlockProperties, TransposeIsInvolution) {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        Block b = random_block(rng);
        EXPECT_EQ(transpose(transpose(b)), b);
    }
}

TEST(BlockProperties, LatinInvariantUnderTranspose) {
    std::mt19937 rng(11);
    for (int i = 0; i < 500; ++i) {
        Block b = (i % 2) ? random_block(rng) : random_latin_block(rng);
        EXPECT_EQ(is_latin(b), is_latin(transpose(b)));
    }
}

TEST(BlockProperties, DeleteRowShiftsLaterRows) {
    std::mt19937 rng(13);
    for (int it = 0; it < 300; ++it) {
        Block b = random_block(rng);
        std::size_t r = 1 + rng() % b.rows();
        Block d = delete_row(b, r);
        for (std::size_t i = 1; i <= d.rows(); ++i) {
            auto expect = b.row(i < r ? i : i + 1);
            auto got = d.row(i);
            EXPECT_TRUE(std::equal(expect.begin(), expect.end(), got.begin(), got.end()));
        }
        std::size_t c = 1 + rng() % b.cols();
        Block dc = delete_column(b, c);
        for (std::size_t i = 1; i <= b.rows(); ++i)
            for (std::size_t j = 1; j <= dc.cols(); ++j) EXPECT_EQ(dc.at(i, j), b.at(i, j < c ? j : j + 1));
    }
}

TEST(BlockProperties, AssembleThenReadBackQuadrants) {
    std::mt19937 rng(17);
    for (int it = 0; it < 100; ++it) {
        std::size_t m = 1 + rng() % 8, k = 1 + rng() % 8, n = m + k;
        ElementSet u(n);
        std::iota(u.begin(), u.end(), 1);
        auto make = [&](std::size_t r, std::size_t c) {
            std::vector<Element> e(r * c);
            for (auto& x : e) x = static_cast<Element>(1 + rng() % n);
            return Block(r, c, std::move(e), u);
        };
        Block tl = make(m, m), tr = make(m, k), bl = make(k, m), br = make(k, k);
        Table t = assemble(tl, tr, bl, br);
        EXPECT_EQ(region(t, 1, 1, m, m, u), tl);
        EXPECT_EQ(region(t, 1, m + 1, m, k, u), tr);
        EXPECT_EQ(region(t, m + 1, 1, k, m, u), bl);
        EXPECT_EQ(region(t, m + 1, m + 1, k, k, u), br);
    }
}

TEST(BlockProperties, ConstructedFamilyIsLatin) {
    for (std::size_t m = 2; m <= 50; ++m) {
        Table t = assemble(cyclic_block(m), lk_prime(m), lk_double_prime(m), starred_block(m));
        EXPECT_TRUE(is_latin(t)) << "m = " << m;
    }
}

TEST(TableType, RejectsOutOfRangeEntries) {
    EXPECT_THROW(Table(2, {1, 2, 3, 1}), range_error);
    EXPECT_THROW(Table(2, {1, 2, 1}), dimension_error);
    EXPECT_THROW(Block(1, 1, {4}, {1, 2}), range_error);
}
