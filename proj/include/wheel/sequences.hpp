#pragma once

#include "wheel/exact.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wheel {

/// Largest |k| accepted by fibonacci() and lucas().
inline constexpr std::int64_t kMaxSeqIndex = 1'000'000;

namespace detail {

inline void check_seq_index(std::int64_t k) {
    if (k > kMaxSeqIndex || k < -kMaxSeqIndex) {
        throw std::out_of_range("sequence index " + std::to_string(k) +
                                " outside [-" + std::to_string(kMaxSeqIndex) + ", " +
                                std::to_string(kMaxSeqIndex) + "]");
    }
}

// Iterates s_{j+2} = s_{j+1} + s_j from (s_0, s_1) up to s_k, k >= 0.
inline BigInt run_recurrence(BigInt s0, BigInt s1, std::int64_t k) {
    if (k == 0) return s0;
    for (std::int64_t j = 1; j < k; ++j) {
        BigInt next = s0 + s1;
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    return s1;
}

}  // namespace detail

/// (-1)^k for any signed k.
constexpr int neg_one_pow(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

/// F_k for any |k| <= kMaxSeqIndex. Negative indices use F_{-n} = (-1)^{n+1} F_n.
inline BigInt fibonacci(std::int64_t k) {
    detail::check_seq_index(k);
    if (k < 0) {
        const std::int64_t n = -k;
        BigInt f = detail::run_recurrence(0, 1, n);
        return neg_one_pow(n + 1) > 0 ? f : BigInt(-f);
    }
    return detail::run_recurrence(0, 1, k);
}

/// L_k for any |k| <= kMaxSeqIndex. Negative indices use L_{-n} = (-1)^n L_n.
inline BigInt lucas(std::int64_t k) {
    detail::check_seq_index(k);
    if (k < 0) {
        const std::int64_t n = -k;
        BigInt l = detail::run_recurrence(2, 1, n);
        return neg_one_pow(n) > 0 ? l : BigInt(-l);
    }
    return detail::run_recurrence(2, 1, k);
}

// ---------------------------------------------------------------------------
// Identity catalogue
//
// EQ1..EQ11 are the identities the wheel formulas lean on. EQ4 and EQ8 are
// stored in their correct general forms; the forms as they are commonly
// misprinted are kept alongside (EQ4_PRINTED holds only for odd n,
// EQ8_PRINTED is false in general) so the difference stays testable.
// ---------------------------------------------------------------------------

enum class Identity {
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Eq4Printed,
    Eq5,
    Eq6,
    Eq7,
    Eq8,
    Eq8Printed,
    Eq9,
    Eq10,
    Eq11,
};

enum class IdentityStatus {
    Holds,         // true for every admissible index
    OddOnly,       // printed form, true only for odd n
    Erroneous,     // printed form, false in general
};

struct IdentityInfo {
    Identity id;
    std::string_view tag;
    std::string_view statement;
    std::span<const std::string_view> params;
    IdentityStatus status;
};

namespace detail {

inline constexpr std::array<std::string_view, 1> kParamN{"n"};
inline constexpr std::array<std::string_view, 2> kParamMN{"m", "n"};
inline constexpr std::array<std::string_view, 2> kParamNR{"n", "r"};
inline constexpr std::array<std::string_view, 2> kParamNL{"n", "l"};
inline constexpr std::array<std::string_view, 1> kParamL{"l"};

}  // namespace detail

inline constexpr std::array<IdentityInfo, 13> kIdentityCatalogue{{
    {Identity::Eq1, "EQ1", "F(2n-2) - 3F(2n) + F(2n+2) = 0", detail::kParamN,
     IdentityStatus::Holds},
    {Identity::Eq2, "EQ2", "F(-n) = (-1)^(n+1) F(n)", detail::kParamN, IdentityStatus::Holds},
    {Identity::Eq3, "EQ3", "L(-n) = (-1)^n L(n)", detail::kParamN, IdentityStatus::Holds},
    {Identity::Eq4, "EQ4", "L(2n) = L(n)^2 - 2(-1)^n", detail::kParamN, IdentityStatus::Holds},
    {Identity::Eq4Printed, "EQ4_PRINTED", "L(2n) - 2 = L(n)^2", detail::kParamN,
     IdentityStatus::OddOnly},
    {Identity::Eq5, "EQ5", "L(2n-2) - 3L(2n) + L(2n+2) = 0", detail::kParamN,
     IdentityStatus::Holds},
    {Identity::Eq6, "EQ6", "F(m) L(n) = F(m+n) + (-1)^n F(m-n)", detail::kParamMN,
     IdentityStatus::Holds},
    {Identity::Eq7, "EQ7", "F(n) L(m+1) + F(n-1) L(m) = L(m+n)", detail::kParamMN,
     IdentityStatus::Holds},
    {Identity::Eq8, "EQ8", "F(n)^2 - F(n-r) F(n+r) = (-1)^(n-r) F(r)^2", detail::kParamNR,
     IdentityStatus::Holds},
    {Identity::Eq8Printed, "EQ8_PRINTED", "F(n) - F(n-r) F(n+r) = (-1)^(n-r) F(r)^2",
     detail::kParamNR, IdentityStatus::Erroneous},
    {Identity::Eq9, "EQ9", "F(n)^2 + F(n+1)^2 = F(2n+1)", detail::kParamN,
     IdentityStatus::Holds},
    {Identity::Eq10, "EQ10", "sum_{k=1}^{n-l} F(2k-1) = F(2n-2l)", detail::kParamNL,
     IdentityStatus::Holds},
    {Identity::Eq11, "EQ11", "sum_{k=1}^{l} L(2k) = L(2l+1) - 1", detail::kParamL,
     IdentityStatus::Holds},
}};

inline const IdentityInfo& identity_info(Identity id) {
    for (const auto& info : kIdentityCatalogue) {
        if (info.id == id) return info;
    }
    throw std::logic_error("identity missing from catalogue");
}

inline Identity parse_identity_tag(std::string_view tag) {
    for (const auto& info : kIdentityCatalogue) {
        if (info.tag == tag) return info.id;
    }
    throw std::invalid_argument("unknown identity tag '" + std::string(tag) + "'");
}

using IdentityParams = std::map<std::string, std::int64_t, std::less<>>;

/// Evaluates both sides of `id` exactly at the given indices.
inline bool check_identity(Identity id, const IdentityParams& params) {
    const auto& info = identity_info(id);
    for (auto name : info.params) {
        if (!params.contains(name)) {
            throw std::invalid_argument(std::string(info.tag) + " requires index '" +
                                        std::string(name) + "'");
        }
    }
    const auto p = [&](std::string_view name) { return params.find(name)->second; };
    const auto F = [](std::int64_t k) { return fibonacci(k); };
    const auto L = [](std::int64_t k) { return lucas(k); };

    switch (id) {
        case Identity::Eq1: {
            const auto n = p("n");
            return F(2 * n - 2) - 3 * F(2 * n) + F(2 * n + 2) == 0;
        }
        case Identity::Eq2: {
            const auto n = p("n");
            return F(-n) == neg_one_pow(n + 1) * F(n);
        }
        case Identity::Eq3: {
            const auto n = p("n");
            return L(-n) == neg_one_pow(n) * L(n);
        }
        case Identity::Eq4: {
            const auto n = p("n");
            const BigInt ln = L(n);
            return L(2 * n) == ln * ln - 2 * neg_one_pow(n);
        }
        case Identity::Eq4Printed: {
            const auto n = p("n");
            const BigInt ln = L(n);
            return L(2 * n) - 2 == ln * ln;
        }
        case Identity::Eq5: {
            const auto n = p("n");
            return L(2 * n - 2) - 3 * L(2 * n) + L(2 * n + 2) == 0;
        }
        case Identity::Eq6: {
            const auto m = p("m"), n = p("n");
            return F(m) * L(n) == F(m + n) + neg_one_pow(n) * F(m - n);
        }
        case Identity::Eq7: {
            const auto m = p("m"), n = p("n");
            return F(n) * L(m + 1) + F(n - 1) * L(m) == L(m + n);
        }
        case Identity::Eq8: {
            const auto n = p("n"), r = p("r");
            const BigInt fn = F(n), fr = F(r);
            return fn * fn - F(n - r) * F(n + r) == neg_one_pow(n - r) * fr * fr;
        }
        case Identity::Eq8Printed: {
            const auto n = p("n"), r = p("r");
            const BigInt fr = F(r);
            return F(n) - F(n - r) * F(n + r) == neg_one_pow(n - r) * fr * fr;
        }
        case Identity::Eq9: {
            const auto n = p("n");
            const BigInt a = F(n), b = F(n + 1);
            return a * a + b * b == F(2 * n + 1);
        }
        case Identity::Eq10: {
            const auto n = p("n"), l = p("l");
            if (n - l < 0) {
                throw std::invalid_argument("EQ10 requires n - l >= 0");
            }
            BigInt sum = 0;
            for (std::int64_t k = 1; k <= n - l; ++k) sum += F(2 * k - 1);
            return sum == F(2 * n - 2 * l);
        }
        case Identity::Eq11: {
            const auto l = p("l");
            if (l < 0) {
                throw std::invalid_argument("EQ11 requires l >= 0");
            }
            BigInt sum = 0;
            for (std::int64_t k = 1; k <= l; ++k) sum += L(2 * k);
            return sum == L(2 * l + 1) - 1;
        }
    }
    throw std::logic_error("unhandled identity");
}

}  // namespace wheel
