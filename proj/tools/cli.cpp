#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wheel::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

WheelSpec make_spec(std::int64_t n) {
    if (n < WheelSpec::kMinCycle) {
        throw UsageError("--n must be at least 3 (got " + std::to_string(n) + ")");
    }
    return WheelSpec(n);
}

VertexId parse_vertex(const WheelSpec& spec, const std::string& text) {
    VertexId v = VertexId::center();
    try {
        v = VertexId::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!spec.contains(v)) {
        throw UsageError("vertex " + text + " out of range for n=" + std::to_string(spec.n()) +
                         " (valid: p0..p" + std::to_string(spec.n() - 1) + ", center)");
    }
    return v;
}

std::pair<VertexId, VertexId> parse_pair(const WheelSpec& spec, const std::string& text,
                                         const char* flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
        throw UsageError(std::string(flag) + " expects two vertices as a,b (got '" + text + "')");
    }
    const auto a = parse_vertex(spec, text.substr(0, comma));
    const auto b = parse_vertex(spec, text.substr(comma + 1));
    if (a == b) throw UsageError(std::string(flag) + " needs two distinct vertices");
    return {a, b};
}

void emit_scalar(std::ostream& out, Format format, const std::string& label, const Rational& value,
                 Json json) {
    switch (format) {
        case Format::Text:
            out << to_string(value) << '\n';
            break;
        case Format::Csv:
            out << "quantity,exact,approx\n"
                << label << ',' << to_string(value) << ',' << approx_string(value) << '\n';
            break;
        case Format::Json:
            json["exact"] = to_string(value);
            json["float"] = approx_value(value);
            out << json.dump() << '\n';
            break;
    }
}

std::string render_matrix(const RationalMatrix& m, Format format, const WheelSpec& spec,
                          bool inverse) {
    std::ostringstream os;
    switch (format) {
        case Format::Text:
        case Format::Csv: {
            const char* sep = format == Format::Csv ? "," : " ";
            for (std::size_t i = 0; i < m.rows(); ++i) {
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    os << (j ? sep : "") << to_string(m(i, j));
                }
                os << '\n';
            }
            break;
        }
        case Format::Json: {
            Json rows = Json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
                rows.push_back(std::move(row));
            }
            Json doc;
            doc["n"] = spec.n();
            doc["matrix"] = inverse ? "K" : "H";
            doc["rows"] = std::move(rows);
            os << doc.dump() << '\n';
            break;
        }
    }
    return os.str();
}

std::string pair_label(VertexId a, VertexId b) { return a.name() + "->" + b.name(); }

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

void check_identities(CheckTally& tally) {
    const auto check = [&](Identity id, IdentityParams params, bool expected) {
        std::string where = std::string(identity_info(id).tag);
        for (const auto& [k, v] : params) where += " " + k + "=" + std::to_string(v);
        tally.record(check_identity(id, params) == expected, where);
    };
    for (std::int64_t n = 1; n <= 200; ++n) {
        check(Identity::Eq1, {{"n", n}}, true);
        check(Identity::Eq5, {{"n", n}}, true);
    }
    for (std::int64_t n = -200; n <= 200; ++n) {
        check(Identity::Eq2, {{"n", n}}, true);
        check(Identity::Eq3, {{"n", n}}, true);
        tally.record(lucas(n) == fibonacci(n - 1) + fibonacci(n + 1),
                     "L(n) = F(n-1) + F(n+1) n=" + std::to_string(n));
    }
    for (std::int64_t n = -100; n <= 100; ++n) check(Identity::Eq4, {{"n", n}}, true);
    for (std::int64_t m = -25; m <= 25; ++m) {
        for (std::int64_t n = -25; n <= 25; ++n) {
            check(Identity::Eq6, {{"m", m}, {"n", n}}, true);
            check(Identity::Eq7, {{"m", m}, {"n", n}}, true);
            check(Identity::Eq8, {{"n", m}, {"r", n}}, true);
        }
    }
    for (std::int64_t n = 0; n <= 200; ++n) check(Identity::Eq9, {{"n", n}}, true);
    for (std::int64_t n = 0; n <= 60; ++n) {
        for (std::int64_t l = 0; l <= n; ++l) check(Identity::Eq10, {{"n", n}, {"l", l}}, true);
    }
    for (std::int64_t l = 0; l <= 200; ++l) check(Identity::Eq11, {{"l", l}}, true);
    // Known errata in the printed forms.
    check(Identity::Eq8Printed, {{"n", 3}, {"r", 1}}, false);
    check(Identity::Eq4Printed, {{"n", 2}}, false);
}

CheckTally named(std::string name) {
    CheckTally tally;
    tally.name = std::move(name);
    return tally;
}

struct Tallies {
    CheckTally identities = named("identities");
    CheckTally folded_inverse = named("folded-inverse");
    CheckTally folded_system = named("folded-system");
    CheckTally hitting = named("hitting-vs-solver");
    CheckTally trees = named("tree-count");
    CheckTally identified = named("identified-trees");
    CheckTally nash_williams = named("nash-williams");
    CheckTally kirchhoff = named("kirchhoff");
    CheckTally enumeration = named("enumeration");
    CheckTally montecarlo = named("montecarlo");
};

void verify_wheel(const WheelSpec& spec, const VerifyOptions& options, Tallies& t) {
    const auto n = spec.n();
    const std::string at = "n=" + std::to_string(n) + " ";
    const MultiGraph graph = build_wheel(spec);
    const auto vertices = spec.vertices();
    const auto size = spec.folded_size();

    // Folded system and its closed-form inverse.
    const RationalMatrix h = folded_matrix(spec);
    const RationalMatrix k = inverse_folded_matrix(spec);
    t.folded_inverse.record(h * k == RationalMatrix::identity(size), at + "H*K == I");
    t.folded_inverse.record(k * h == RationalMatrix::identity(size), at + "K*H == I");
    t.folded_system.record(
        fold_reduced_laplacian(reduced_laplacian(spec, VertexId::peripheral(0)), spec) == h,
        at + "H matches folded L'");
    std::vector<Rational> rhs(size, Rational(3));
    rhs.back() = n;
    std::vector<Rational> closed(size);
    for (std::size_t i = 0; i + 1 < size; ++i) {
        closed[i] = hitting_time(spec, VertexId::peripheral(0), spec.peripheral(std::int64_t(i) + 1));
    }
    closed.back() = hitting_time(spec, VertexId::center(), VertexId::peripheral(0));
    t.folded_system.record(k * rhs == closed, at + "K*(3,...,3,n) == closed-form h'");
    t.folded_system.record(h * closed == rhs, at + "H*h' == (3,...,3,n)");

    // Closed-form hitting times against the exact first-step solver.
    std::vector<std::vector<Rational>> solved(vertices.size());
    for (std::size_t ti = 0; ti < vertices.size(); ++ti) {
        solved[ti] = solve_hitting_system(graph, ti);
        for (std::size_t si = 0; si < vertices.size(); ++si) {
            const auto c = hitting_time(spec, vertices[si], vertices[ti]);
            t.hitting.record(c == solved[ti][si],
                             at + pair_label(vertices[si], vertices[ti]) + ": closed " +
                                 to_string(c) + " vs solver " + to_string(solved[ti][si]));
        }
    }

    const BigInt total = spanning_tree_count(spec);
    t.trees.record(matrix_tree_count(graph) == total, at + "matrix-tree == L(2n)-2");
    t.trees.record(matrix_tree_count(graph, graph.vertex_count() - 1) == total,
                   at + "center cofactor == L(2n)-2");

    const Rational edges2 = Rational(2 * graph.edge_count());
    for (std::size_t ai = 0; ai < vertices.size(); ++ai) {
        for (std::size_t bi = ai + 1; bi < vertices.size(); ++bi) {
            const auto a = vertices[ai], b = vertices[bi];
            const std::string pair = at + a.name() + "," + b.name();

            const BigInt tau = identified_tree_count(spec, a, b);
            t.identified.record(matrix_tree_count(identify_vertices(graph, ai, bi)) == tau,
                                pair + ": tau " + to_string(tau));

            const Rational r = effective_resistance(spec, a, b);
            const Rational nw_solver = (solved[bi][ai] + solved[ai][bi]) / edges2;
            const Rational nw_closed =
                (hitting_time(spec, a, b) + hitting_time(spec, b, a)) / edges2;
            t.nash_williams.record(r == nw_solver, pair + ": r vs solver hitting times");
            t.nash_williams.record(r == nw_closed, pair + ": r vs closed hitting times");

            t.kirchhoff.record(Rational(tau) == r * Rational(total), pair + ": tau == r*T");
        }
    }

    if (graph.vertex_count() <= kEnumerationMaxVertices) {
        t.enumeration.record(enumerate_spanning_trees(graph) == matrix_tree_count(graph),
                             at + "wheel");
        for (std::size_t ai = 0; ai < vertices.size(); ++ai) {
            for (std::size_t bi = ai + 1; bi < vertices.size(); ++bi) {
                const auto merged = identify_vertices(graph, ai, bi);
                t.enumeration.record(enumerate_spanning_trees(merged) == matrix_tree_count(merged),
                                     at + "identified " + vertices[ai].name() + "," +
                                         vertices[bi].name());
            }
        }
    }

    if (!options.skip_montecarlo) {
        const std::pair<VertexId, VertexId> configs[] = {
            {VertexId::peripheral(0), VertexId::peripheral(n / 2)},
            {VertexId::center(), VertexId::peripheral(0)},
            {VertexId::peripheral(1), VertexId::center()},
        };
        for (const auto& [s, d] : configs) {
            const auto est = estimate_hitting(graph, spec.vertex_index(s), spec.vertex_index(d),
                                              options.walks, options.seed);
            const double exact = to_double(hitting_time(spec, s, d));
            std::ostringstream what;
            what << at << pair_label(s, d) << ": mean " << est.mean << " +- " << est.std_error
                 << " vs exact " << exact;
            t.montecarlo.record(est.within(exact, 3.0), what.str());
        }
    }
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + name + "'");
}

std::vector<std::pair<std::string, Rational>> table_rows(const WheelSpec& spec) {
    std::vector<std::pair<std::string, Rational>> rows;
    const auto p0 = VertexId::peripheral(0);
    const auto center = VertexId::center();
    const auto half = spec.n() / 2;
    for (std::int64_t l = 1; l <= half; ++l) {
        rows.emplace_back("h(0->" + std::to_string(l) + ")", hitting_time(spec, p0, spec.peripheral(l)));
    }
    rows.emplace_back("h(center->0)", hitting_time(spec, center, p0));
    rows.emplace_back("h(0->center)", hitting_time(spec, p0, center));
    for (std::int64_t l = 1; l <= half; ++l) {
        rows.emplace_back("r(0," + std::to_string(l) + ")",
                          effective_resistance(spec, p0, spec.peripheral(l)));
    }
    rows.emplace_back("r(center,0)", effective_resistance(spec, center, p0));
    rows.emplace_back("T", Rational(spanning_tree_count(spec)));
    for (std::int64_t l = 1; l <= half; ++l) {
        rows.emplace_back("tau(0," + std::to_string(l) + ")",
                          Rational(identified_tree_count(spec, p0, spec.peripheral(l))));
    }
    rows.emplace_back("tau(center,0)", Rational(identified_tree_count(spec, center, p0)));
    return rows;
}

std::string emit_table(const WheelSpec& spec, Format format) {
    const auto rows = table_rows(spec);
    std::ostringstream os;
    switch (format) {
        case Format::Text:
            os << "W_" << spec.n() + 1 << " (n=" << spec.n() << ")\n";
            for (const auto& [label, value] : rows) {
                os << label << " = " << to_string(value) << " (~" << approx_string(value) << ")\n";
            }
            break;
        case Format::Csv:
            os << "quantity,exact,approx\n";
            for (const auto& [label, value] : rows) {
                os << label << ',' << to_string(value) << ',' << approx_string(value) << '\n';
            }
            break;
        case Format::Json: {
            Json exact = Json::object(), approx = Json::object();
            for (const auto& [label, value] : rows) {
                exact[label] = to_string(value);
                approx[label] = approx_value(value);
            }
            Json doc;
            doc["n"] = spec.n();
            doc["exact"] = std::move(exact);
            doc["approx"] = std::move(approx);
            os << doc.dump() << '\n';
            break;
        }
    }
    return os.str();
}

void CheckTally::record(bool ok, const std::string& what) {
    ++total;
    if (ok) {
        ++passed;
    } else {
        failures.push_back(what);
    }
}

bool CheckTally::ok() const {
    if (!statistical) return passed == total;
    return total == 0 ||
           static_cast<double>(total - passed) <= kMaxMonteCarloMissRate * static_cast<double>(total);
}

bool VerifyReport::ok() const {
    for (const auto& c : classes) {
        if (!c.ok()) return false;
    }
    return true;
}

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.n_min < WheelSpec::kMinCycle) throw std::invalid_argument("--n-min must be at least 3");
    if (options.n_max < options.n_min) throw std::invalid_argument("--n-max must be >= --n-min");
    if (!options.skip_montecarlo && options.walks < 2) throw std::invalid_argument("--walks must be at least 2");

    Tallies t;
    t.montecarlo.statistical = true;
    check_identities(t.identities);
    for (std::int64_t n = options.n_min; n <= options.n_max; ++n) {
        verify_wheel(WheelSpec(n), options, t);
    }

    VerifyReport report;
    report.options = options;
    report.classes = {t.identities,     t.folded_inverse, t.folded_system, t.hitting,
                      t.trees,          t.identified,     t.nash_williams, t.kirchhoff,
                      t.enumeration};
    if (!options.skip_montecarlo) report.classes.push_back(t.montecarlo);
    return report;
}

std::string render_report(const VerifyReport& report, Format format) {
    std::ostringstream os;
    const auto& o = report.options;
    switch (format) {
        case Format::Text: {
            os << "verify n=" << o.n_min << ".." << o.n_max << " seed=" << o.seed;
            if (o.skip_montecarlo) {
                os << " (montecarlo skipped)";
            } else {
                os << " walks=" << o.walks;
            }
            os << '\n';
            os << std::left << std::setw(20) << "check" << std::right << std::setw(10) << "passed"
               << std::setw(10) << "total" << "  status\n";
            for (const auto& c : report.classes) {
                os << std::left << std::setw(20) << c.name << std::right << std::setw(10)
                   << c.passed << std::setw(10) << c.total << "  " << (c.ok() ? "ok" : "FAIL")
                   << '\n';
            }
            for (const auto& c : report.classes) {
                for (const auto& f : c.failures) {
                    os << (c.statistical && c.ok() ? "  miss " : "  FAIL ") << c.name << ": " << f
                       << '\n';
                }
            }
            os << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
            break;
        }
        case Format::Csv:
            os << "check,passed,total,status\n";
            for (const auto& c : report.classes) {
                os << c.name << ',' << c.passed << ',' << c.total << ',' << (c.ok() ? "ok" : "FAIL")
                   << '\n';
            }
            break;
        case Format::Json: {
            Json checks = Json::array();
            for (const auto& c : report.classes) {
                checks.push_back({{"name", c.name},
                                  {"passed", c.passed},
                                  {"total", c.total},
                                  {"ok", c.ok()},
                                  {"failures", c.failures}});
            }
            Json doc;
            doc["n_min"] = o.n_min;
            doc["n_max"] = o.n_max;
            doc["seed"] = o.seed;
            doc["montecarlo"] = !o.skip_montecarlo;
            doc["checks"] = std::move(checks);
            doc["ok"] = report.ok();
            os << doc.dump() << '\n';
            break;
        }
    }
    return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact hitting times, resistances and spanning-tree counts on wheel graphs"};
    app.name("wheel");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::int64_t n = 0;
    std::string source, target, pair, identify;

    auto* hitting = app.add_subcommand("hitting", "Expected hitting time between two vertices");
    hitting->add_option("--n", n, "Cycle length")->required();
    hitting->add_option("--source", source, "p<k> or center")->required();
    hitting->add_option("--target", target, "p<k> or center")->required();

    auto* resistance = app.add_subcommand("resistance", "Effective resistance between two vertices");
    resistance->add_option("--n", n, "Cycle length")->required();
    resistance->add_option("--pair", pair, "Two vertices, e.g. center,p0")->required();

    auto* trees = app.add_subcommand("trees", "Spanning-tree count, optionally after merging two vertices");
    trees->add_option("--n", n, "Cycle length")->required();
    trees->add_option("--identify", identify, "Two vertices to merge, e.g. center,p0");

    bool inverse = false;
    auto* matrix = app.add_subcommand("matrix", "Folded coefficient matrix H (or its inverse)");
    matrix->add_option("--n", n, "Cycle length")->required();
    matrix->add_flag("--inverse", inverse, "Print the closed-form inverse K instead");

    auto* table = app.add_subcommand("table", "Every closed-form quantity for one wheel");
    table->add_option("--n", n, "Cycle length")->required();

    std::uint64_t walks = 100'000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of a hitting time");
    simulate->add_option("--n", n, "Cycle length")->required();
    simulate->add_option("--source", source, "p<k> or center")->required();
    simulate->add_option("--target", target, "p<k> or center")->required();
    simulate->add_option("--walks", walks, "Number of walks")->capture_default_str();
    simulate->add_option("--seed", seed, "Random seed")->capture_default_str();
    simulate->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();

    VerifyOptions verify_options;
    auto* verify = app.add_subcommand("verify", "Cross-check closed forms against the oracles");
    verify->add_option("--n-min", verify_options.n_min, "Smallest cycle length")->capture_default_str();
    verify->add_option("--n-max", verify_options.n_max, "Largest cycle length")->capture_default_str();
    verify->add_option("--seed", verify_options.seed, "Monte Carlo seed")->capture_default_str();
    verify->add_option("--walks", verify_options.walks, "Walks per Monte Carlo check")->capture_default_str();
    verify->add_flag("--skip-montecarlo", verify_options.skip_montecarlo, "Skip Monte Carlo checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "wheel: " << e.what() << '\n';
        return 2;
    }

    try {
        const Format format = parse_format(format_name);
        if (*hitting) {
            const auto spec = make_spec(n);
            const auto s = parse_vertex(spec, source), t = parse_vertex(spec, target);
            Json doc{{"n", n}, {"source", s.name()}, {"target", t.name()}};
            emit_scalar(out, format, "h(" + pair_label(s, t) + ")", hitting_time(spec, s, t), doc);
        } else if (*resistance) {
            const auto spec = make_spec(n);
            const auto [a, b] = parse_pair(spec, pair, "--pair");
            Json doc{{"n", n}, {"a", a.name()}, {"b", b.name()}};
            emit_scalar(out, format, "r(" + a.name() + "," + b.name() + ")",
                        effective_resistance(spec, a, b), doc);
        } else if (*trees) {
            const auto spec = make_spec(n);
            if (identify.empty()) {
                emit_scalar(out, format, "T", Rational(spanning_tree_count(spec)), Json{{"n", n}});
            } else {
                const auto [a, b] = parse_pair(spec, identify, "--identify");
                Json doc{{"n", n}, {"identify", {a.name(), b.name()}}};
                emit_scalar(out, format, "tau(" + a.name() + "," + b.name() + ")",
                            Rational(identified_tree_count(spec, a, b)), doc);
            }
        } else if (*matrix) {
            const auto spec = make_spec(n);
            out << render_matrix(inverse ? inverse_folded_matrix(spec) : folded_matrix(spec), format,
                                 spec, inverse);
        } else if (*table) {
            out << emit_table(make_spec(n), format);
        } else if (*simulate) {
            const auto spec = make_spec(n);
            const auto s = parse_vertex(spec, source), t = parse_vertex(spec, target);
            if (walks < 2) throw UsageError("--walks must be at least 2");
            const auto est = estimate_hitting(build_wheel(spec), spec.vertex_index(s),
                                              spec.vertex_index(t), walks, seed, threads);
            const Rational exact = hitting_time(spec, s, t);
            const double z = est.std_error > 0 ? (est.mean - to_double(exact)) / est.std_error : 0.0;
            switch (format) {
                case Format::Text:
                    out << std::setprecision(12) << "h(" << pair_label(s, t) << ") ~ " << est.mean
                        << " +- " << est.std_error << " (" << walks << " walks, seed " << seed
                        << "); exact " << to_string(exact) << " ~ " << approx_string(exact)
                        << ", z = " << std::setprecision(3) << z << '\n';
                    break;
                case Format::Csv:
                    out << "source,target,walks,seed,mean,std_error,exact,approx,z\n"
                        << std::setprecision(17) << s.name() << ',' << t.name() << ',' << walks
                        << ',' << seed << ',' << est.mean << ',' << est.std_error << ','
                        << to_string(exact) << ',' << approx_string(exact) << ',' << z << '\n';
                    break;
                case Format::Json: {
                    Json doc{{"n", n},           {"source", s.name()},
                             {"target", t.name()}, {"walks", walks},
                             {"seed", seed},     {"mean", est.mean},
                             {"std_error", est.std_error}, {"exact", to_string(exact)},
                             {"float", approx_value(exact)}, {"z", z}};
                    out << doc.dump() << '\n';
                    break;
                }
            }
        } else if (*verify) {
            if (verify_options.n_min < WheelSpec::kMinCycle) throw UsageError("--n-min must be at least 3");
            if (verify_options.n_max < verify_options.n_min) throw UsageError("--n-max must be >= --n-min");
            if (verify_options.walks < 2) throw UsageError("--walks must be at least 2");
            const auto report = run_verification(verify_options);
            out << render_report(report, format);
            return report.ok() ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "wheel: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "wheel: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "wheel: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace wheel::cli
