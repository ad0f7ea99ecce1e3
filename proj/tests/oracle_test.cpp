#include "wheel/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wheel;

namespace {

MultiGraph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t edges) {
    std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
    std::uniform_int_distribution<std::size_t> mult(1, 2);
    std::vector<Edge> list;
    while (list.size() < edges) {
        const auto u = vertex(rng), v = vertex(rng);
        if (u != v) list.push_back({u, v, mult(rng)});
    }
    return MultiGraph(n, list);
}

}  // namespace

TEST(HittingSystem, CompleteGraphOnFour) {
    const auto h = solve_hitting_system(build_wheel(WheelSpec(3)), 0);
    EXPECT_EQ(h, (std::vector<Rational>{0, 3, 3, 3}));
}

TEST(HittingSystem, FiveVertexWheel) {
    const auto h = solve_hitting_system(WheelSpec(4), VertexId::peripheral(0));
    EXPECT_EQ(h.at(VertexId::peripheral(0)), 0);
    EXPECT_EQ(h.at(VertexId::center()), make_rational(67, 15));
    EXPECT_EQ(h.at(VertexId::peripheral(1)), make_rational(64, 15));
    EXPECT_EQ(h.at(VertexId::peripheral(3)), make_rational(64, 15));
    EXPECT_EQ(h.at(VertexId::peripheral(2)), make_rational(16, 3));
}

TEST(HittingSystem, PathAndErrors) {
    EXPECT_EQ(solve_hitting_system(MultiGraph(2, {{0, 1}}), 1)[0], 1);
    EXPECT_THROW(solve_hitting_system(MultiGraph(3, {{0, 1}}), 0), DisconnectedGraphError);
    EXPECT_THROW(solve_hitting_system(MultiGraph(2, {{0, 1}}), 2), std::out_of_range);
}

TEST(HittingSystem, SatisfiesFirstStepEquations) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 6;
        const auto g = random_multigraph(rng, n, 2 * n);
        if (!g.connected()) continue;
        const std::size_t target = trial % n;
        const auto h = solve_hitting_system(g, target);
        for (std::size_t v = 0; v < n; ++v) {
            if (v == target) continue;
            Rational rhs = g.degree(v);
            for (std::size_t w = 0; w < n; ++w) rhs += Rational(g.multiplicity(v, w)) * h[w];
            ASSERT_EQ(Rational(g.degree(v)) * h[v], rhs);
        }
    }
}

TEST(NashWilliams, Examples) {
    EXPECT_EQ(nash_williams_resistance(build_wheel(WheelSpec(3)), 0, 1), make_rational(1, 2));
    EXPECT_EQ(nash_williams_resistance(build_wheel(WheelSpec(4)), 4, 0), make_rational(7, 15));
    EXPECT_EQ(nash_williams_resistance(MultiGraph(2, {{0, 1}}), 0, 1), 1);
    EXPECT_EQ(nash_williams_resistance(MultiGraph(2, {{0, 1, 2}}), 0, 1), make_rational(1, 2));
    EXPECT_THROW(nash_williams_resistance(MultiGraph(2, {{0, 1}}), 1, 1), std::invalid_argument);
}

TEST(MatrixTree, Examples) {
    EXPECT_EQ(matrix_tree_count(build_wheel(WheelSpec(3))), 16);
    EXPECT_EQ(matrix_tree_count(build_wheel(WheelSpec(4))), 45);
    EXPECT_EQ(matrix_tree_count(identify_vertices(build_wheel(WheelSpec(3)), 0, 1)), 8);
    EXPECT_EQ(matrix_tree_count(MultiGraph(1)), 1);
    EXPECT_EQ(matrix_tree_count(MultiGraph(3, {{0, 1}})), 0);
}

TEST(MatrixTree, AnyCofactorGivesSameCount) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 8;
        const auto g = random_multigraph(rng, n, n + trial % 6);
        const auto base = matrix_tree_count(g, 0);
        for (std::size_t r = 1; r < std::min<std::size_t>(n, 4); ++r) ASSERT_EQ(matrix_tree_count(g, r), base);
    }
}

TEST(Enumeration, Examples) {
    EXPECT_EQ(enumerate_spanning_trees(MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}})), 3);
    EXPECT_EQ(enumerate_spanning_trees(build_wheel(WheelSpec(3))), 16);
    EXPECT_EQ(enumerate_spanning_trees(build_wheel(WheelSpec(4))), 45);
    EXPECT_EQ(enumerate_spanning_trees(MultiGraph(2, {{0, 1, 3}})), 3);
    EXPECT_EQ(enumerate_spanning_trees(MultiGraph(1)), 1);
}

TEST(Enumeration, SizeGuard) {
    EXPECT_THROW(enumerate_spanning_trees(build_wheel(WheelSpec(8))), std::invalid_argument);
    EXPECT_THROW(enumerate_spanning_trees(MultiGraph(3, {{0, 1, 20}, {1, 2, 5}})), std::invalid_argument);
}

TEST(Enumeration, AgreesWithMatrixTreeOnRandomMultigraphs) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const auto g = random_multigraph(rng, n, n + trial % 4);
        ASSERT_EQ(enumerate_spanning_trees(g), matrix_tree_count(g)) << "trial " << trial;
    }
}
