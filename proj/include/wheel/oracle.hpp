#pragma once

#include "wheel/linalg.hpp"
#include "wheel/multigraph.hpp"
#include "wheel/wheel_model.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wheel {

struct DisconnectedGraphError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Expected hitting times h(v -> target) for every vertex v of a connected
/// multigraph, from the first-step equations
///   deg(v) h(v) - sum_w mult(v,w) h(w) = deg(v),  h(target) = 0,
/// i.e. the Laplacian with the target row/column removed against the degrees.
inline std::vector<Rational> solve_hitting_system(const MultiGraph& g, std::size_t target) {
    if (target >= g.vertex_count()) throw std::out_of_range("target vertex not in graph");
    if (!g.connected()) throw DisconnectedGraphError("hitting times are infinite on a disconnected graph");
    const auto n = g.vertex_count();
    std::vector<Rational> h(n);
    if (n == 1) return h;

    std::vector<Rational> rhs;
    rhs.reserve(n - 1);
    for (std::size_t v = 0; v < n; ++v) {
        if (v != target) rhs.emplace_back(g.degree(v));
    }
    const auto x = solve(reduced_laplacian(g, target), std::move(rhs));
    for (std::size_t v = 0, k = 0; v < n; ++v) {
        if (v != target) h[v] = x[k++];
    }
    return h;
}

inline std::map<VertexId, Rational> solve_hitting_system(const WheelSpec& spec, VertexId target) {
    const auto h = solve_hitting_system(build_wheel(spec), spec.vertex_index(target));
    std::map<VertexId, Rational> out;
    for (std::size_t i = 0; i < h.size(); ++i) out.emplace(spec.vertex_at(i), h[i]);
    return out;
}

/// r(a, b) = (h(a -> b) + h(b -> a)) / (2 |E|).
inline Rational nash_williams_resistance(const MultiGraph& g, std::size_t a, std::size_t b) {
    if (a == b) throw std::invalid_argument("resistance needs two distinct vertices");
    const auto to_b = solve_hitting_system(g, b);
    const auto to_a = solve_hitting_system(g, a);
    return (to_b[a] + to_a[b]) / Rational(2 * g.edge_count());
}

/// Spanning tree count as the principal cofactor of the Laplacian at
/// `removed`. Any choice of `removed` gives the same value.
inline BigInt matrix_tree_count(const MultiGraph& g, std::size_t removed = 0) {
    if (removed >= g.vertex_count()) throw std::out_of_range("cofactor vertex not in graph");
    if (g.vertex_count() == 1) return 1;
    return bareiss_determinant(reduced_laplacian<BigInt>(g, removed));
}

inline constexpr std::size_t kEnumerationMaxVertices = 8;
inline constexpr std::size_t kEnumerationMaxEdges = 24;

/// Brute-force spanning tree count: every (vertex_count - 1)-subset of the
/// edges is tested for acyclicity. Parallel copies count as distinct edges.
inline BigInt enumerate_spanning_trees(const MultiGraph& g) {
    const auto n = g.vertex_count();
    const auto m = g.edge_count();
    if (n > kEnumerationMaxVertices || m > kEnumerationMaxEdges) {
        throw std::invalid_argument("enumeration limited to " +
                                    std::to_string(kEnumerationMaxVertices) + " vertices and " +
                                    std::to_string(kEnumerationMaxEdges) + " edges");
    }
    if (n == 1) return 1;

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : g.edges()) {
        for (std::size_t c = 0; c < e.multiplicity; ++c) edges.emplace_back(e.u, e.v);
    }
    const std::size_t pick = n - 1;
    if (edges.size() < pick) return 0;

    std::vector<std::size_t> parent(n);
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    // Lexicographic walk over index combinations.
    std::vector<std::size_t> chosen(pick);
    std::iota(chosen.begin(), chosen.end(), 0);
    BigInt count = 0;
    while (true) {
        std::iota(parent.begin(), parent.end(), 0);
        bool forest = true;
        for (auto idx : chosen) {
            const auto a = find(edges[idx].first), b = find(edges[idx].second);
            if (a == b) {
                forest = false;
                break;
            }
            parent[a] = b;
        }
        if (forest) ++count;

        std::size_t i = pick;
        while (i > 0 && chosen[i - 1] == edges.size() - pick + (i - 1)) --i;
        if (i == 0) break;
        ++chosen[i - 1];
        for (std::size_t j = i; j < pick; ++j) chosen[j] = chosen[j - 1] + 1;
    }
    return count;
}

}  // namespace wheel
