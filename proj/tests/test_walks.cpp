#include "tiltwalk/io.hpp"
#include "tiltwalk/walks.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tiltwalk;
using walks::CountTable;
using walks::TableKind;

namespace {

// Independent oracle: enumerate all 2^n step sequences and count the ones that
// stay on the half line, bucketed by endpoint.
std::vector<BigInt> brute_force_row(std::size_t n) {
    std::vector<BigInt> row(n + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        long h = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            h += (mask >> i) & 1 ? 1 : -1;
            ok = h >= 0;
        }
        if (ok) row[static_cast<std::size_t>(h)] += 1;
    }
    return row;
}

std::string fixture(const std::string& name) {
    return io::read_file(std::string(TILTWALK_FIXTURE_DIR) + "/" + name);
}

}  // namespace

TEST(ClassicalTable, MatchesBruteForceEnumeration) {
    const auto t = walks::classical_table(16);
    for (std::size_t n = 0; n <= 16; ++n) {
        const auto want = brute_force_row(n);
        const auto got = t.row(n);
        ASSERT_EQ(std::vector<BigInt>(got.begin(), got.end()), want) << "n=" << n;
    }
}

TEST(ClassicalTable, MatchesPrintedMatrix) {
    EXPECT_EQ(io::table_to_csv(walks::classical_table(15)), fixture("golden_table_a.csv"));
}

TEST(ClassicalTable, BallotFormulaAgreesIncludingOffParity) {
    const auto t = walks::classical_table(60);
    for (std::size_t n = 0; n <= 60; ++n)
        for (std::size_t m = 0; m <= 70; ++m) ASSERT_EQ(walks::ballot_formula(n, m), t.at(n, m)) << n << "," << m;
}

TEST(ClassicalTable, KnownLargeRowSums) {
    const auto a = walks::row_sums(std::nullopt, 60);
    EXPECT_EQ(a[41], BigInt("269128937220"));
    EXPECT_EQ(a[60], BigInt("118264581564861424"));
    // a_n = C(n, floor(n/2))
    for (std::size_t n = 0; n <= 60; ++n) EXPECT_EQ(a[n], binomial(n, static_cast<std::ptrdiff_t>(n / 2)));
}

TEST(ModularTable, PrintedMatrixIsEllThree) {
    EXPECT_EQ(io::table_to_csv(walks::modular_table(3, 15)), fixture("golden_table_b.csv"));
    EXPECT_NE(io::table_to_csv(walks::modular_table(4, 15)), fixture("golden_table_b.csv"));
}

TEST(ModularTable, EllFourRowFour) {
    const auto t = walks::modular_table(4, 15);
    const auto row = t.row(4);
    EXPECT_EQ(std::vector<BigInt>(row.begin(), row.end()), (std::vector<BigInt>{2, 0, 2, 0, 1}));
}

TEST(ModularTable, WallEntriesCopyClassical) {
    for (unsigned ell = 2; ell <= 7; ++ell) {
        const auto a = walks::classical_table(40);
        const auto b = walks::modular_table(ell, 40);
        for (std::size_t n = 0; n <= 40; ++n)
            for (std::size_t m = ell - 1; m <= n; m += ell) ASSERT_EQ(b.at(n, m), a.at(n, m));
    }
}

TEST(ModularTable, ResidueRules) {
    using walks::ResidueRule;
    EXPECT_EQ(walks::residue_rule(2, 3), ResidueRule::copy_classical);
    EXPECT_EQ(walks::residue_rule(1, 3), ResidueRule::left_only);
    EXPECT_EQ(walks::residue_rule(0, 3), ResidueRule::both_neighbours);
    EXPECT_EQ(walks::residue_rule(3, 3), ResidueRule::both_neighbours);
    EXPECT_EQ(walks::residue_rule(0, 2), ResidueRule::left_only);
    EXPECT_EQ(walks::residue_rule(1, 2), ResidueRule::copy_classical);
}

TEST(ModularTable, LargeModulusIsClassicalBelowWall) {
    // Nothing reaches the first wall at m = ell - 1 before n = ell - 1.
    const auto a = walks::classical_table(12);
    const auto b = walks::modular_table(20, 12);
    EXPECT_EQ(a.rows(), b.rows());
}

TEST(ModularTable, RejectsSmallModulus) {
    EXPECT_THROW(walks::modular_table(1, 4), std::invalid_argument);
    EXPECT_THROW(walks::modular_table(0, 4), std::invalid_argument);
}

TEST(CountTableType, Accessors) {
    const auto t = walks::classical_table(5);
    EXPECT_EQ(t.order(), 5u);
    EXPECT_TRUE(t.kind().is_classical());
    EXPECT_EQ(t.at(3, 4), 0);
    EXPECT_EQ(t.at(4, 2), 3);
    EXPECT_THROW(t.at(6, 0), std::out_of_range);
    EXPECT_THROW(t.row(6), std::out_of_range);
    EXPECT_EQ(walks::modular_table(3, 5).kind(), TableKind::modular(3));
}

TEST(CountTableType, ValidatesShape) {
    EXPECT_THROW(CountTable(TableKind::classical(), {}), std::invalid_argument);
    EXPECT_THROW(CountTable(TableKind::classical(), {{2}}), std::invalid_argument);
    EXPECT_THROW(CountTable(TableKind::classical(), {{1}, {0}}), std::invalid_argument);
    EXPECT_NO_THROW(CountTable(TableKind::classical(), {{1}, {0, 1}}));
}

TEST(Sequences, ExampleFixtures) {
    const auto rows = io::parse_csv_matrix(fixture("example_b_sequences.csv"));
    ASSERT_EQ(rows.size(), 4u);
    for (const auto& r : rows) {
        const auto ell = static_cast<unsigned>(r[0]);
        const auto got = walks::row_sums(ell, r.size() - 2);
        EXPECT_EQ(got.values, std::vector<BigInt>(r.begin() + 1, r.end())) << "ell=" << ell;
    }
}

TEST(Sequences, StreamedAgreesWithTables) {
    for (unsigned ell = 2; ell <= 6; ++ell) {
        const auto s = walks::streamed_sequences(ell, 50);
        const auto a = walks::classical_table(50);
        const auto b = walks::modular_table(ell, 50);
        for (std::size_t n = 0; n <= 50; ++n) {
            ASSERT_EQ(s.a[n], walks::row_sum(a, n));
            ASSERT_EQ(s.b[n], walks::row_sum(b, n));
            ASSERT_EQ(s.walls[n], walks::residue_sum(a, n, ell - 1, ell));
        }
    }
}

TEST(Sequences, WallCount) {
    EXPECT_EQ(walks::wall_count(4, 7), 15);  // a_{7,3} + a_{7,7} = 14 + 1
    EXPECT_EQ(walks::wall_count(3, 4), 3);
    EXPECT_EQ(walks::wall_count(2, 0), 0);
    EXPECT_EQ(walks::wall_count(2, 1), 1);
}

TEST(Sequences, ResidueSumsPartitionRow) {
    const auto a = walks::classical_table(30);
    for (unsigned ell = 2; ell <= 6; ++ell)
        for (std::size_t n = 0; n <= 30; ++n) {
            BigInt total = 0;
            for (unsigned r = 0; r < ell; ++r) total += walks::residue_sum(a, n, r, ell);
            ASSERT_EQ(total, walks::row_sum(a, n));
        }
    EXPECT_THROW(walks::residue_sum(a, 3, 4, 4), std::out_of_range);
    EXPECT_THROW(walks::residue_sum(walks::modular_table(3, 3), 3, 0, 3), std::invalid_argument);
}

TEST(Sequences, RandomisedBounds) {
    // b_{n,m} <= a_{n,m}, a_n <= 2 b_n, and b_n(ell) = a_n while ell > n + 1.
    std::mt19937 rng(20241016);
    std::uniform_int_distribution<unsigned> ell_dist(2, 12);
    std::uniform_int_distribution<std::size_t> n_dist(0, 80);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ell = ell_dist(rng);
        const auto n = n_dist(rng);
        const auto a = walks::classical_table(n);
        const auto b = walks::modular_table(ell, n);
        for (std::size_t m = 0; m <= n; ++m) ASSERT_LE(b.at(n, m), a.at(n, m));
        ASSERT_LE(walks::row_sum(a, n), 2 * walks::row_sum(b, n));
        ASSERT_EQ(walks::row_sums(n + 2, n)[n], walks::row_sum(a, n));
    }
}

TEST(RowStreamType, ModularRowNeedsModulus) {
    walks::RowStream s;
    EXPECT_THROW(s.modular_row(), std::logic_error);
    walks::RowStream m(3u);
    for (int i = 0; i < 4; ++i) m.advance();
    EXPECT_EQ(m.n(), 4u);
    EXPECT_EQ(m.modular_sum(), 5);
    EXPECT_EQ(m.classical_sum(), 6);
}
