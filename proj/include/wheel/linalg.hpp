#pragma once

#include "wheel/matrix.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace wheel {

struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Solves A x = b over the rationals. Gaussian elimination, pivoting on the
/// first nonzero entry; zero multipliers and zero pivot-row entries are skipped
/// so sparse systems stay cheap.
inline std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b) {
    if (!a.square()) throw std::invalid_argument("solve needs a square matrix");
    const std::size_t n = a.rows();
    if (b.size() != n) throw std::invalid_argument("right-hand side has wrong length");

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw SingularMatrixError("singular system");
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a(p, j), a(k, j));
            std::swap(b[p], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rational factor = a(i, k) / a(k, k);
            a(i, k) = 0;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a(k, j) == 0) continue;
                a(i, j) -= factor * a(k, j);
            }
            if (b[k] != 0) b[i] -= factor * b[k];
        }
    }

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a(i, j) != 0) acc -= a(i, j) * x[j];
        }
        x[i] = acc / a(i, i);
    }
    return x;
}

/// Exact inverse by Gauss-Jordan elimination.
inline RationalMatrix inverse(RationalMatrix a) {
    if (!a.square()) throw std::invalid_argument("inverse needs a square matrix");
    const std::size_t n = a.rows();
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw SingularMatrixError("singular matrix");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(k, j));
                std::swap(inv(p, j), inv(k, j));
            }
        }
        const Rational pivot = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= pivot;
            inv(k, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            const Rational factor = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= factor * a(k, j);
                inv(i, j) -= factor * inv(k, j);
            }
        }
    }
    return inv;
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
/// Every intermediate division is exact.
inline BigInt bareiss_determinant(IntegerMatrix a) {
    if (!a.square()) throw std::invalid_argument("determinant needs a square matrix");
    const std::size_t n = a.rows();
    BigInt previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(a(p, j), a(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / previous;
            }
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace wheel
