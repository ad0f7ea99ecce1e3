#pragma once

#include "wheel/multigraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace wheel {

inline constexpr std::uint64_t kDefaultStepCap = 1'000'000'000;

struct StepCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Generator for walk `index` under `seed`. Streams are keyed, not
/// sequential, so any walk can be replayed without running the others.
inline std::mt19937_64 walk_stream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL)));
}

/// Simple random walk over a multigraph. Neighbor lists are expanded by
/// multiplicity so a uniform pick is multiplicity-weighted.
class RandomWalker {
public:
    explicit RandomWalker(const MultiGraph& g) : offsets_(g.vertex_count() + 1, 0) {
        const auto n = g.vertex_count();
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t w = 0; w < n; ++w) {
                for (std::size_t c = g.multiplicity(v, w); c > 0; --c) neighbors_.push_back(w);
            }
            offsets_[v + 1] = neighbors_.size();
        }
    }

    std::size_t vertex_count() const { return offsets_.size() - 1; }

    template <typename Rng>
    std::uint64_t walk(std::size_t source, std::size_t target, Rng& rng,
                       std::uint64_t step_cap = kDefaultStepCap) const {
        if (source >= vertex_count() || target >= vertex_count()) {
            throw std::out_of_range("walk endpoint not in graph");
        }
        std::uint64_t steps = 0;
        std::size_t at = source;
        while (at != target) {
            if (steps == step_cap) {
                throw StepCapExceeded("walk exceeded " + std::to_string(step_cap) +
                                      " steps; graph disconnected?");
            }
            const auto begin = offsets_[at], end = offsets_[at + 1];
            if (begin == end) throw StepCapExceeded("walk stuck at an isolated vertex");
            std::uniform_int_distribution<std::size_t> pick(begin, end - 1);
            at = neighbors_[pick(rng)];
            ++steps;
        }
        return steps;
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> neighbors_;
};

/// Steps for one walk from source to first arrival at target.
template <typename Rng>
std::uint64_t simulate_walk(const MultiGraph& g, std::size_t source, std::size_t target, Rng& rng,
                            std::uint64_t step_cap = kDefaultStepCap) {
    return RandomWalker(g).walk(source, target, rng, step_cap);
}

struct WalkEstimate {
    double mean = 0;
    double std_error = 0;
    std::uint64_t walks = 0;
    std::uint64_t seed = 0;
    std::size_t source = 0;
    std::size_t target = 0;

    /// |mean - exact| <= k * std_error.
    bool within(double exact, double k = 3.0) const {
        return std::abs(mean - exact) <= k * std_error;
    }

    friend bool operator==(const WalkEstimate&, const WalkEstimate&) = default;
};

/// Mean and standard error of `walks` independent walks. Walk i draws from
/// walk_stream(seed, i); sums are exact integers, so the result does not
/// depend on `threads` (0 picks the hardware concurrency).
inline WalkEstimate estimate_hitting(const MultiGraph& g, std::size_t source, std::size_t target,
                                     std::uint64_t walks, std::uint64_t seed,
                                     unsigned threads = 0,
                                     std::uint64_t step_cap = kDefaultStepCap) {
    if (walks < 2) throw std::invalid_argument("estimate needs at least 2 walks");
    const RandomWalker walker(g);
    if (source >= walker.vertex_count() || target >= walker.vertex_count()) {
        throw std::out_of_range("walk endpoint not in graph");
    }
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, walks));

    struct Partial {
        std::uint64_t sum = 0;
        unsigned __int128 sum_sq = 0;
        std::exception_ptr error;
    };
    std::vector<Partial> partials(threads);
    const auto run = [&](unsigned t) {
        auto& part = partials[t];
        try {
            for (std::uint64_t i = t; i < walks; i += threads) {
                auto rng = walk_stream(seed, i);
                const std::uint64_t steps = walker.walk(source, target, rng, step_cap);
                part.sum += steps;
                part.sum_sq += static_cast<unsigned __int128>(steps) * steps;
            }
        } catch (...) {
            part.error = std::current_exception();
        }
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
    }

    unsigned __int128 sum = 0, sum_sq = 0;
    for (const auto& part : partials) {
        if (part.error) std::rethrow_exception(part.error);
        sum += part.sum;
        sum_sq += part.sum_sq;
    }
    // Unbiased variance: (w * sum_sq - sum^2) / (w (w - 1)), numerator exact.
    const auto w = static_cast<unsigned __int128>(walks);
    const unsigned __int128 spread = w * sum_sq - sum * sum;
    const long double variance =
        static_cast<long double>(spread) / (static_cast<long double>(walks) * (walks - 1));

    WalkEstimate est;
    est.mean = static_cast<double>(static_cast<long double>(sum) / walks);
    est.std_error = static_cast<double>(std::sqrt(variance / walks));
    est.walks = walks;
    est.seed = seed;
    est.source = source;
    est.target = target;
    return est;
}

}  // namespace wheel
