#include "wheel/closed_form.hpp"
#include "wheel/montecarlo.hpp"

#include <gtest/gtest.h>

using namespace wheel;

namespace {

double exact(const WheelSpec& spec, VertexId s, VertexId t) { return to_double(hitting_time(spec, s, t)); }

WalkEstimate estimate(const WheelSpec& spec, VertexId s, VertexId t, std::uint64_t walks, std::uint64_t seed,
                      unsigned threads = 1) {
    return estimate_hitting(build_wheel(spec), spec.vertex_index(s), spec.vertex_index(t), walks, seed, threads);
}

}  // namespace

TEST(SimulateWalk, DegenerateCases) {
    auto rng = walk_stream(0, 0);
    EXPECT_EQ(simulate_walk(build_wheel(WheelSpec(3)), 2, 2, rng), 0u);
    EXPECT_EQ(simulate_walk(MultiGraph(2, {{0, 1}}), 0, 1, rng), 1u);
    EXPECT_THROW(simulate_walk(MultiGraph(2, {{0, 1}}), 0, 2, rng), std::out_of_range);
}

TEST(SimulateWalk, StepCapOnDisconnectedGraph) {
    auto rng = walk_stream(0, 0);
    EXPECT_THROW(simulate_walk(MultiGraph(4, {{0, 1}, {2, 3}}), 0, 3, rng, 1000), StepCapExceeded);
    EXPECT_THROW(estimate_hitting(MultiGraph(4, {{0, 1}, {2, 3}}), 0, 3, 10, 0, 2, 1000), StepCapExceeded);
}

TEST(Estimate, RequiresTwoWalks) {
    EXPECT_THROW(estimate_hitting(MultiGraph(2, {{0, 1}}), 0, 1, 1, 0), std::invalid_argument);
    const auto e = estimate_hitting(MultiGraph(2, {{0, 1}}), 0, 1, 2, 0);
    EXPECT_EQ(e.mean, 1.0);
    EXPECT_EQ(e.std_error, 0.0);
}

TEST(Estimate, CompleteGraphMean) {
    const auto e = estimate(WheelSpec(3), VertexId::peripheral(0), VertexId::peripheral(1), 20000, 1);
    EXPECT_TRUE(e.within(3.0)) << e.mean << " +- " << e.std_error;
}

TEST(Estimate, ExamplesWithinThreeSigma) {
    const WheelSpec w5(4), w10(9);
    const auto a = estimate(w5, VertexId::peripheral(0), VertexId::peripheral(1), 50000, 0);
    EXPECT_TRUE(a.within(exact(w5, VertexId::peripheral(0), VertexId::peripheral(1)))) << a.mean;
    const auto b = estimate(w10, VertexId::center(), VertexId::peripheral(0), 50000, 0);
    EXPECT_TRUE(b.within(249.0 / 19.0)) << b.mean;
}

TEST(Estimate, DeterministicAndThreadIndependent) {
    const WheelSpec spec(6);
    const auto s = VertexId::peripheral(0), t = VertexId::peripheral(3);
    const auto one = estimate(spec, s, t, 5000, 42, 1);
    EXPECT_EQ(one, estimate(spec, s, t, 5000, 42, 1));
    EXPECT_EQ(one, estimate(spec, s, t, 5000, 42, 4));
    EXPECT_EQ(one, estimate(spec, s, t, 5000, 42, 3));
    EXPECT_NE(one.mean, estimate(spec, s, t, 5000, 43, 1).mean);
}

TEST(Estimate, RimToCenterTakesThreeSteps) {
    for (std::int64_t n : {3, 5, 8, 13}) {
        const WheelSpec spec(n);
        const auto e = estimate(spec, VertexId::peripheral(1), VertexId::center(), 20000, 7);
        EXPECT_TRUE(e.within(3.0)) << "n=" << n << " mean " << e.mean;
    }
}

TEST(Estimate, SweepMissRateIsLow) {
    int configs = 0, misses = 0;
    for (std::int64_t n = 3; n <= 12; ++n) {
        const WheelSpec spec(n);
        for (const auto& [s, t] : {std::pair{VertexId::peripheral(0), VertexId::peripheral(n / 2)},
                                   std::pair{VertexId::center(), VertexId::peripheral(0)}}) {
            const auto e = estimate(spec, s, t, 4000, std::uint64_t(n));
            ++configs;
            misses += !e.within(exact(spec, s, t));
        }
    }
    EXPECT_GE(configs, 20);
    EXPECT_LE(misses, configs * 15 / 100);
}
