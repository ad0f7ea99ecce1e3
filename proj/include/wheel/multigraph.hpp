#pragma once

#include "wheel/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wheel {

struct Edge {
    std::size_t u;
    std::size_t v;
    std::size_t multiplicity = 1;
};

/// Loop-free undirected multigraph on vertices 0..vertex_count-1.
/// Parallel edges are stored as a symmetric multiplicity table.
class MultiGraph {
public:
    explicit MultiGraph(std::size_t vertex_count, std::span<const Edge> edges = {})
        : n_(vertex_count), mult_(vertex_count * vertex_count, 0) {
        if (vertex_count == 0) throw std::invalid_argument("graph needs at least one vertex");
        for (const auto& e : edges) add(e);
    }

    MultiGraph(std::size_t vertex_count, std::initializer_list<Edge> edges)
        : MultiGraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const { return n_; }

    std::size_t multiplicity(std::size_t u, std::size_t v) const {
        check(u);
        check(v);
        return mult_[u * n_ + v];
    }

    std::size_t degree(std::size_t v) const {
        check(v);
        std::size_t d = 0;
        for (std::size_t w = 0; w < n_; ++w) d += mult_[v * n_ + w];
        return d;
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = u + 1; v < n_; ++v) total += mult_[u * n_ + v];
        return total;
    }

    /// One entry per adjacent unordered pair (u < v).
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = u + 1; v < n_; ++v)
                if (auto m = mult_[u * n_ + v]; m > 0) out.push_back({u, v, m});
        return out;
    }

    bool connected() const {
        std::vector<bool> seen(n_, false);
        std::queue<std::size_t> frontier;
        frontier.push(0);
        seen[0] = true;
        std::size_t reached = 1;
        while (!frontier.empty()) {
            const auto v = frontier.front();
            frontier.pop();
            for (std::size_t w = 0; w < n_; ++w) {
                if (!seen[w] && mult_[v * n_ + w] > 0) {
                    seen[w] = true;
                    ++reached;
                    frontier.push(w);
                }
            }
        }
        return reached == n_;
    }

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

private:
    void check(std::size_t v) const {
        if (v >= n_) {
            throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of " +
                                    std::to_string(n_) + " vertices");
        }
    }

    void add(const Edge& e) {
        check(e.u);
        check(e.v);
        if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
        if (e.multiplicity == 0) throw std::invalid_argument("edge multiplicity must be positive");
        mult_[e.u * n_ + e.v] += e.multiplicity;
        mult_[e.v * n_ + e.u] += e.multiplicity;
    }

    std::size_t n_;
    std::vector<std::size_t> mult_;
};

/// Degree matrix minus multiplicity-weighted adjacency.
template <typename T = Rational>
Matrix<T> laplacian(const MultiGraph& g) {
    const auto n = g.vertex_count();
    Matrix<T> lap(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        lap(i, i) = T(g.degree(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) lap(i, j) = -T(g.multiplicity(i, j));
        }
    }
    return lap;
}

/// Laplacian with the row and column of `removed` deleted.
template <typename T = Rational>
Matrix<T> reduced_laplacian(const MultiGraph& g, std::size_t removed) {
    if (g.vertex_count() < 2) throw std::invalid_argument("reduced Laplacian needs two vertices");
    if (removed >= g.vertex_count()) throw std::out_of_range("removed vertex not in graph");
    return laplacian<T>(g).without(removed, removed);
}

/// Merges u and v. The merged vertex takes index min(u, v); vertices above
/// max(u, v) shift down by one. Parallel edges add up, u-v edges become loops
/// and are dropped.
inline MultiGraph identify_vertices(const MultiGraph& g, std::size_t u, std::size_t v) {
    if (u >= g.vertex_count() || v >= g.vertex_count()) {
        throw std::out_of_range("identified vertex not in graph");
    }
    if (u == v) throw std::invalid_argument("cannot identify a vertex with itself");
    const auto keep = std::min(u, v);
    const auto gone = std::max(u, v);
    const auto relabel = [&](std::size_t x) {
        if (x == gone) return keep;
        return x > gone ? x - 1 : x;
    };
    std::vector<Edge> merged;
    for (const auto& e : g.edges()) {
        const auto a = relabel(e.u), b = relabel(e.v);
        if (a != b) merged.push_back({a, b, e.multiplicity});
    }
    return MultiGraph(g.vertex_count() - 1, merged);
}

}  // namespace wheel
