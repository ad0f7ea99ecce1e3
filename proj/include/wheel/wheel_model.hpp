#pragma once

#include "wheel/multigraph.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wheel {

/// A vertex of a wheel: peripheral cycle vertex k, or the center.
class VertexId {
public:
    static constexpr VertexId center() { return VertexId(kCenter); }

    static VertexId peripheral(std::int64_t k) {
        if (k < 0) throw std::invalid_argument("peripheral index must be nonnegative");
        return VertexId(k);
    }

    constexpr bool is_center() const { return index_ == kCenter; }
    constexpr bool is_peripheral() const { return !is_center(); }

    /// Peripheral index; throws for the center.
    std::int64_t index() const {
        if (is_center()) throw std::logic_error("center has no peripheral index");
        return index_;
    }

    /// "p<k>" or "center".
    std::string name() const { return is_center() ? "center" : "p" + std::to_string(index_); }

    /// Inverse of name(). Range against a wheel is checked by WheelSpec.
    static VertexId parse(std::string_view text) {
        if (text == "center") return center();
        if (text.size() < 2 || text.front() != 'p') {
            throw std::invalid_argument("bad vertex name '" + std::string(text) +
                                        "' (expected p<k> or center)");
        }
        std::int64_t k = 0;
        for (char c : text.substr(1)) {
            if (c < '0' || c > '9' || k > 100'000'000) {
                throw std::invalid_argument("bad vertex name '" + std::string(text) +
                                            "' (expected p<k> or center)");
            }
            k = k * 10 + (c - '0');
        }
        return peripheral(k);
    }

    friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;

private:
    static constexpr std::int64_t kCenter = -1;
    constexpr explicit VertexId(std::int64_t raw) : index_(raw) {}
    std::int64_t index_;
};

/// Wheel W_{n+1}: an n-cycle p0..p(n-1) plus a center joined to every pk.
/// Matrix/graph vertex order is p0..p(n-1), then the center at index n.
class WheelSpec {
public:
    static constexpr std::int64_t kMinCycle = 3;

    explicit WheelSpec(std::int64_t n) : n_(n) {
        if (n < kMinCycle) {
            throw std::invalid_argument("wheel needs a cycle of at least 3 vertices, got " +
                                        std::to_string(n));
        }
    }

    std::int64_t n() const { return n_; }
    bool odd() const { return n_ % 2 != 0; }
    std::size_t vertex_count() const { return static_cast<std::size_t>(n_) + 1; }
    std::size_t edge_count() const { return 2 * static_cast<std::size_t>(n_); }

    /// Peripheral vertex k mod n.
    VertexId peripheral(std::int64_t k) const { return VertexId::peripheral(((k % n_) + n_) % n_); }

    bool contains(VertexId v) const { return v.is_center() || v.index() < n_; }

    std::size_t vertex_index(VertexId v) const {
        if (!contains(v)) {
            throw std::out_of_range("vertex " + v.name() + " not in wheel with n=" +
                                    std::to_string(n_));
        }
        return v.is_center() ? static_cast<std::size_t>(n_) : static_cast<std::size_t>(v.index());
    }

    VertexId vertex_at(std::size_t index) const {
        if (index > static_cast<std::size_t>(n_)) throw std::out_of_range("wheel vertex index");
        return index == static_cast<std::size_t>(n_) ? VertexId::center()
                                                     : VertexId::peripheral(std::int64_t(index));
    }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        for (std::size_t i = 0; i < vertex_count(); ++i) out.push_back(vertex_at(i));
        return out;
    }

    /// Size of the folded system: floor(n/2) + 1.
    std::size_t folded_size() const { return static_cast<std::size_t>(n_ / 2) + 1; }

    friend bool operator==(const WheelSpec&, const WheelSpec&) = default;

private:
    std::int64_t n_;
};

inline MultiGraph build_wheel(const WheelSpec& spec) {
    const auto n = static_cast<std::size_t>(spec.n());
    std::vector<Edge> edges;
    edges.reserve(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        edges.push_back({k, (k + 1) % n});
        edges.push_back({k, n});
    }
    return MultiGraph(n + 1, edges);
}

inline RationalMatrix reduced_laplacian(const WheelSpec& spec, VertexId removed) {
    return reduced_laplacian(build_wheel(spec), spec.vertex_index(removed));
}

inline MultiGraph identify_vertices(const WheelSpec& spec, VertexId u, VertexId v) {
    return identify_vertices(build_wheel(spec), spec.vertex_index(u), spec.vertex_index(v));
}

/// Coefficient matrix H of the half-size hitting-time system, built from the
/// explicit case tables. Unknowns (1-based) are h(p0 -> p_i) for
/// i = 1..floor(n/2), then h(center -> p0). Right-hand side is (3,...,3,n).
inline RationalMatrix folded_matrix(const WheelSpec& spec) {
    const std::int64_t n = spec.n();
    const auto size = static_cast<std::int64_t>(spec.folded_size());
    const std::int64_t last = size;
    RationalMatrix h(size, size);
    const auto set = [&](std::int64_t i, std::int64_t j, int value) { h(i - 1, j - 1) = value; };

    for (std::int64_t i = 1; i <= last; ++i) {
        for (std::int64_t j = 1; j <= last; ++j) {
            int value = 0;
            if (spec.odd()) {
                const std::int64_t mid = (n - 1) / 2;  // last - 1
                if (i == j) {
                    value = (i == last) ? int(n) : (i == mid ? 2 : 3);
                } else if (i == last) {
                    value = -2;
                } else if (j == last || (i - j == 1 || j - i == 1)) {
                    value = -1;
                }
            } else {
                const std::int64_t half = n / 2;  // last - 1
                if (i == j) {
                    value = (i == last) ? int(n) : 3;
                } else if (i == last) {
                    value = (j == half) ? -1 : -2;
                } else if (i == half && j == half - 1) {
                    value = -2;
                } else if (j == last || (i - j == 1 || j - i == 1)) {
                    value = -1;
                }
            }
            set(i, j, value);
        }
    }
    return h;
}

/// Folds a reduced Laplacian L' (p0 removed; rows p1..p(n-1), center) onto the
/// half-size system using h(p0 -> p_l) = h(p0 -> p_{n-l}). Column l absorbs
/// column n-l except the self-paired antipodal column l = n/2.
inline RationalMatrix fold_reduced_laplacian(const RationalMatrix& reduced, const WheelSpec& spec) {
    const std::int64_t n = spec.n();
    if (reduced.rows() != std::size_t(n) || reduced.cols() != std::size_t(n)) {
        throw std::invalid_argument("reduced Laplacian has wrong size for this wheel");
    }
    const auto size = static_cast<std::int64_t>(spec.folded_size());
    // 1-based accessor in L' numbering: index k <-> p_k for k < n, index n <-> center.
    const auto lp = [&](std::int64_t i, std::int64_t j) -> const Rational& {
        return reduced(i - 1, j - 1);
    };
    RationalMatrix h(size, size);
    for (std::int64_t i = 1; i <= size; ++i) {
        const std::int64_t row = (i == size) ? n : i;
        for (std::int64_t j = 1; j <= size; ++j) {
            Rational value;
            if (j == size) {
                value = lp(row, n);
            } else if (n % 2 == 0 && j == n / 2) {
                value = lp(row, j);
            } else {
                value = lp(row, j) + lp(row, n - j);
            }
            h(i - 1, j - 1) = value;
        }
    }
    return h;
}

}  // namespace wheel
