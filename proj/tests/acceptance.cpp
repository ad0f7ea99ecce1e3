// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "wheel/wheel.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace wheel;

namespace {

VertexId p(std::int64_t k) { return VertexId::peripheral(k); }

struct Outcome {
    bool ok = true;
    std::size_t checks = 0;
    std::string first_failure;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

std::string at(std::int64_t n, VertexId a, VertexId b) {
    return "n=" + std::to_string(n) + " " + a.name() + "," + b.name();
}

Outcome hitting_vs_solver() {
    Outcome o;
    for (std::int64_t n = 3; n <= 40; ++n) {
        const WheelSpec spec(n);
        for (const auto target : spec.vertices()) {
            for (const auto& [source, h] : solve_hitting_system(spec, target)) {
                o.expect(hitting_time(spec, source, target) == h, at(n, source, target));
            }
        }
    }
    return o;
}

Outcome folded_inverse() {
    Outcome o;
    for (std::int64_t n = 3; n <= 60; ++n) {
        const WheelSpec spec(n);
        const auto h = folded_matrix(spec);
        o.expect(h * inverse_folded_matrix(spec) == RationalMatrix::identity(h.rows()), "H K != I at n=" + std::to_string(n));
    }
    const RationalMatrix h9{{3, -1, 0, 0, -1},
                            {-1, 3, -1, 0, -1},
                            {0, -1, 3, -1, -1},
                            {0, 0, -1, 2, -1},
                            {-2, -2, -2, -2, 9}};
    const RationalMatrix h8{{3, -1, 0, 0, -1},
                            {-1, 3, -1, 0, -1},
                            {0, -1, 3, -1, -1},
                            {0, 0, -2, 3, -1},
                            {-2, -2, -2, -1, 8}};
    o.expect(folded_matrix(WheelSpec(9)) == h9, "printed matrix for n=9");
    o.expect(folded_matrix(WheelSpec(8)) == h8, "printed matrix for n=8");
    return o;
}

Outcome tree_count() {
    Outcome o;
    for (std::int64_t n = 3; n <= 30; ++n) {
        const WheelSpec spec(n);
        o.expect(matrix_tree_count(build_wheel(spec)) == lucas(2 * n) - 2, "n=" + std::to_string(n));
        o.expect(spanning_tree_count(spec) == lucas(2 * n) - 2, "closed form n=" + std::to_string(n));
    }
    o.expect(matrix_tree_count(build_wheel(WheelSpec(3))) == 16, "T(3) = 16");
    o.expect(matrix_tree_count(build_wheel(WheelSpec(4))) == 45, "T(4) = 45");
    o.expect(matrix_tree_count(build_wheel(WheelSpec(5))) == 121, "T(5) = 121");
    return o;
}

Outcome identified_trees() {
    Outcome o;
    for (std::int64_t n = 3; n <= 30; ++n) {
        const WheelSpec spec(n);
        const auto vs = spec.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                o.expect(identified_tree_count(spec, vs[i], vs[j]) ==
                             matrix_tree_count(identify_vertices(spec, vs[i], vs[j])),
                         at(n, vs[i], vs[j]));
            }
        }
    }
    const VertexId c = VertexId::center();
    o.expect(identified_tree_count(WheelSpec(3), p(0), p(1)) == 8, "tau(W_4;0,1) = 8");
    o.expect(identified_tree_count(WheelSpec(4), c, p(0)) == 21, "tau(W_5;center,0) = 21");
    o.expect(identified_tree_count(WheelSpec(4), p(0), p(1)) == 24, "tau(W_5;0,1) = 24");
    o.expect(identified_tree_count(WheelSpec(5), c, p(0)) == 55, "tau(W_6;center,0) = 55");
    return o;
}

Outcome resistance_consistency() {
    Outcome o;
    for (std::int64_t n = 3; n <= 40; ++n) {
        const WheelSpec spec(n);
        const Rational t(spanning_tree_count(spec));
        const Rational two_e(4 * n);
        const auto to_center = solve_hitting_system(spec, VertexId::center());
        for (std::int64_t k = 0; k < n; ++k) {
            o.expect(to_center.at(p(k)) == 3, at(n, p(k), VertexId::center()) + " hitting != 3");
            o.expect(hitting_time(spec, p(k), VertexId::center()) == 3, at(n, p(k), VertexId::center()));
        }
        std::map<VertexId, std::map<VertexId, Rational>> h;
        for (const auto v : spec.vertices()) h[v] = solve_hitting_system(spec, v);
        const auto vs = spec.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                const auto a = vs[i], b = vs[j];
                const Rational r = effective_resistance(spec, a, b);
                o.expect(r == (h[b][a] + h[a][b]) / two_e, at(n, a, b) + " commute");
                o.expect(Rational(identified_tree_count(spec, a, b)) == r * t, at(n, a, b) + " kirchhoff");
            }
        }
    }
    return o;
}

Outcome identities() {
    Outcome o;
    const auto check = [&](Identity id, IdentityParams params) {
        std::ostringstream what;
        what << identity_info(id).tag;
        for (const auto& [k, v] : params) what << ' ' << k << '=' << v;
        o.expect(check_identity(id, params), what.str());
    };
    for (std::int64_t n = 1; n <= 200; ++n) {
        check(Identity::Eq1, {{"n", n}});
        check(Identity::Eq5, {{"n", n}});
    }
    for (std::int64_t n = -200; n <= 200; ++n) {
        check(Identity::Eq2, {{"n", n}});
        check(Identity::Eq3, {{"n", n}});
    }
    for (std::int64_t a = -40; a <= 40; ++a) {
        for (std::int64_t b = -40; b <= 40; ++b) {
            check(Identity::Eq6, {{"m", a}, {"n", b}});
            check(Identity::Eq7, {{"m", a}, {"n", b}});
        }
    }
    for (std::int64_t n = 0; n <= 200; ++n) check(Identity::Eq9, {{"n", n}});
    for (std::int64_t n = 0; n <= 100; ++n) {
        for (std::int64_t l = 0; l <= n; ++l) check(Identity::Eq10, {{"n", n}, {"l", l}});
    }
    for (std::int64_t l = 0; l <= 100; ++l) check(Identity::Eq11, {{"l", l}});
    for (std::int64_t n = -100; n <= 100; ++n) {
        check(Identity::Eq4, {{"n", n}});
        for (std::int64_t r = -100; r <= 100; r += 1) check(Identity::Eq8, {{"n", n}, {"r", r}});
    }
    o.expect(!check_identity(Identity::Eq8Printed, {{"n", 3}, {"r", 1}}), "printed EQ8 should fail at (3,1)");
    o.expect(!check_identity(Identity::Eq4Printed, {{"n", 2}}), "printed EQ4 should fail at n=2");
    return o;
}

Outcome enumeration() {
    Outcome o;
    for (std::int64_t n = 3; n <= 6; ++n) {
        const WheelSpec spec(n);
        const auto g = build_wheel(spec);
        o.expect(enumerate_spanning_trees(g) == matrix_tree_count(g), "W n=" + std::to_string(n));
        const auto vs = spec.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                const auto merged = identify_vertices(spec, vs[i], vs[j]);
                o.expect(enumerate_spanning_trees(merged) == matrix_tree_count(merged), at(n, vs[i], vs[j]));
            }
        }
    }
    return o;
}

Outcome montecarlo(std::string& detail) {
    Outcome o;
    struct Config {
        std::int64_t n;
        VertexId source, target;
    };
    const Config configs[] = {{3, p(0), p(1)}, {4, p(0), p(1)}, {4, VertexId::center(), p(0)}, {9, p(0), p(3)}};
    std::ostringstream summary;
    for (const auto& c : configs) {
        const WheelSpec spec(c.n);
        const auto g = build_wheel(spec);
        const auto s = spec.vertex_index(c.source), t = spec.vertex_index(c.target);
        const auto first = estimate_hitting(g, s, t, 100'000, 0);
        const auto again = estimate_hitting(g, s, t, 100'000, 0);
        const double exact = to_double(hitting_time(spec, c.source, c.target));
        const std::string label = at(c.n, c.source, c.target);
        o.expect(first.within(exact), label + " outside 3 sigma");
        o.expect(first == again, label + " not reproducible");
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s%s: %.4f +- %.4f vs %.4f", summary.tellp() > 0 ? "; " : "",
                      label.c_str(), first.mean, first.std_error, exact);
        summary << buf;
    }
    detail = summary.str();
    return o;
}

bool report(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body,
            const std::string* extra = nullptr) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.first_failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = limit_seconds <= 0 || seconds < limit_seconds;
    const bool ok = o.ok && in_time;
    std::printf("[%s] AC%d %s: %zu checks, %.2fs", ok ? "PASS" : "FAIL", id, title.c_str(), o.checks, seconds);
    if (limit_seconds > 0) std::printf(" (limit %.0fs)", limit_seconds);
    if (!o.ok) std::printf(" first failure: %s", o.first_failure.c_str());
    if (!in_time) std::printf(" too slow");
    if (extra && !extra->empty()) std::printf(" [%s]", extra->c_str());
    std::printf("\n");
    std::fflush(stdout);
    return ok;
}

}  // namespace

int main() {
    bool all = true;
    all &= report(1, "closed-form hitting times equal the linear solver, all pairs, 3<=N<=40", 30, hitting_vs_solver);
    all &= report(2, "H K = I for 3<=N<=60 and printed H for N=9, N=8", 0, folded_inverse);
    all &= report(3, "matrix-tree count = L(2N)-2 for 3<=N<=30", 0, tree_count);
    all &= report(4, "identified tree counts match merged-graph cofactors, all pairs, 3<=N<=30", 0, identified_trees);
    all &= report(5, "commute-time resistance and Kirchhoff ratio, 3<=N<=40", 0, resistance_consistency);
    all &= report(6, "Fibonacci/Lucas identity catalogue with corrected and printed forms", 0, identities);
    all &= report(7, "exhaustive enumeration = matrix-tree for wheels on 4..7 vertices and merges", 10, enumeration);
    std::string mc_detail;
    all &= report(8, "Monte Carlo within 3 standard errors, 1e5 walks, seed 0, reproducible", 60,
                  [&] { return montecarlo(mc_detail); }, &mc_detail);
    std::printf("%s\n", all ? "acceptance: PASS" : "acceptance: FAIL");
    return all ? 0 : 1;
}
