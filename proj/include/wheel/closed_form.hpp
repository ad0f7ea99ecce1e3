#pragma once

#include "wheel/sequences.hpp"
#include "wheel/wheel_model.hpp"

#include <stdexcept>

namespace wheel {

/// Expected number of steps of a simple random walk on W_{n+1} from
/// `source` until it first reaches `target`.
struct HittingQuery {
    WheelSpec spec;
    VertexId source;
    VertexId target;
};

namespace detail {

// Every wheel formula is written in one sequence S: Fibonacci for odd n,
// Lucas for even n, and shares the denominator S(n-1) + S(n+1).
class ParitySequence {
public:
    explicit ParitySequence(const WheelSpec& spec) : odd_(spec.odd()), n_(spec.n()) {}

    BigInt operator()(std::int64_t k) const { return odd_ ? fibonacci(k) : lucas(k); }

    BigInt denominator() const { return (*this)(n_ - 1) + (*this)(n_ + 1); }

private:
    bool odd_;
    std::int64_t n_;
};

inline void require_vertex(const WheelSpec& spec, VertexId v) {
    if (!spec.contains(v)) {
        throw std::out_of_range("vertex " + v.name() + " not in wheel with n=" +
                                std::to_string(spec.n()));
    }
}

// Cyclic offset from a to b, in 0..n-1.
inline std::int64_t cyclic_offset(const WheelSpec& spec, VertexId a, VertexId b) {
    const auto n = spec.n();
    return ((b.index() - a.index()) % n + n) % n;
}

}  // namespace detail

inline Rational hitting_time(const HittingQuery& q) {
    const auto& spec = q.spec;
    detail::require_vertex(spec, q.source);
    detail::require_vertex(spec, q.target);
    if (q.source == q.target) return 0;
    // One step from any rim vertex hits the center w.p. 1/3; the rest of the
    // rim is symmetric, so h = 1 + (2/3) h.
    if (q.target.is_center()) return 3;

    const detail::ParitySequence s(spec);
    const std::int64_t n = spec.n();
    const BigInt den = s.denominator();
    if (q.source.is_center()) {
        return make_rational((4 * n - 3) * s(n + 1) - (4 * n + 3) * s(n - 1), den);
    }
    const auto l = detail::cyclic_offset(spec, q.source, q.target);
    return make_rational(4 * n * (s(n) - s(n - 2 * l)), den);
}

inline Rational hitting_time(const WheelSpec& spec, VertexId source, VertexId target) {
    return hitting_time(HittingQuery{spec, source, target});
}

/// Closed-form inverse K of folded_matrix(spec). Indices are 1-based in the
/// case analysis below and match folded_matrix's unknown order.
inline RationalMatrix inverse_folded_matrix(const WheelSpec& spec) {
    const detail::ParitySequence s(spec);
    const std::int64_t n = spec.n();
    const auto size = static_cast<std::int64_t>(spec.folded_size());
    const std::int64_t last = size;
    const BigInt den = s.denominator();
    const auto L = [](std::int64_t k) { return lucas(k); };

    RationalMatrix k(size, size);
    for (std::int64_t i = 1; i <= last; ++i) {
        for (std::int64_t j = 1; j <= last; ++j) {
            BigInt num;
            if (spec.odd()) {
                if (i == last && j == last) {
                    num = s(n);
                } else if (i == last) {
                    num = 2 * (s(n) - s(n - 2 * j));
                } else if (j == last) {
                    num = s(n) - s(n - 2 * i);
                } else if (i < j) {
                    num = 2 * (s(n) - s(n - 2 * i)) + s(n - 2 * j) * (L(2 * i) - 2);
                } else {
                    num = 2 * (s(n) - s(n - 2 * j)) + s(n - 2 * i) * (L(2 * j) - 2);
                }
            } else {
                const std::int64_t half = n / 2;
                if (i == last && j == last) {
                    num = s(n);
                } else if (i == last && j == half) {
                    num = s(n) - 2;
                } else if (i == last) {
                    num = 2 * (s(n) - s(n - 2 * j));
                } else if (j == last) {
                    num = s(n) - s(n - 2 * i);
                } else if (j == half) {
                    num = s(n) - s(n - 2 * i) + L(2 * i) - 2;
                } else if (i <= j) {
                    num = 2 * (s(n) - s(n - 2 * i)) + s(n - 2 * j) * (L(2 * i) - 2);
                } else {
                    num = 2 * (s(n) - s(n - 2 * j)) + s(n - 2 * i) * (L(2 * j) - 2);
                }
            }
            k(i - 1, j - 1) = make_rational(num, den);
        }
    }
    return k;
}

/// Resistance between two distinct vertices with every edge a unit resistor.
inline Rational effective_resistance(const WheelSpec& spec, VertexId a, VertexId b) {
    detail::require_vertex(spec, a);
    detail::require_vertex(spec, b);
    if (a == b) throw std::invalid_argument("effective resistance needs two distinct vertices");
    const detail::ParitySequence s(spec);
    const std::int64_t n = spec.n();
    if (a.is_center() || b.is_center()) return make_rational(s(n), s.denominator());
    const auto l = detail::cyclic_offset(spec, a, b);
    return make_rational(2 * (s(n) - s(n - 2 * l)), s.denominator());
}

/// T(W_{n+1}) = L(2n) - 2.
inline BigInt spanning_tree_count(const WheelSpec& spec) { return lucas(2 * spec.n()) - 2; }

/// Thrown when a closed form that must be integral is not: a formula bug.
struct InconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Spanning trees of W_{n+1} after merging `a` and `b`.
inline BigInt identified_tree_count(const WheelSpec& spec, VertexId a, VertexId b) {
    detail::require_vertex(spec, a);
    detail::require_vertex(spec, b);
    if (a == b) throw std::invalid_argument("identification needs two distinct vertices");
    const detail::ParitySequence s(spec);
    const std::int64_t n = spec.n();
    const BigInt den = s.denominator();
    const bool center = a.is_center() || b.is_center();

    Rational count;
    if (spec.odd()) {
        const BigInt factor = center ? s(n) : BigInt(2 * (s(n) - s(n - 2 * detail::cyclic_offset(spec, a, b))));
        count = Rational(factor * den);
    } else {
        const BigInt ln = s(n);
        const BigInt factor = center ? ln : BigInt(2 * (ln - s(n - 2 * detail::cyclic_offset(spec, a, b))));
        count = make_rational(factor * (ln - 2) * (ln + 2), den);
    }
    if (!is_integer(count)) {
        throw InconsistencyError("identified tree count " + to_string(count) + " for n=" +
                                 std::to_string(n) + " is not an integer");
    }
    return numerator(count);
}

}  // namespace wheel
