#include "apartition/cli.hpp"

#include "apartition/bo_verify.hpp"
#include "apartition/multiset.hpp"
#include "apartition/oracle.hpp"
#include "apartition/partition_poly.hpp"
#include "apartition/roots.hpp"
#include "apartition/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <thread>
#include <tuple>

namespace apartition {

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void handle_interrupt(int) { g_interrupted.store(true); }

// Scoped SIGINT hook for the long sweeps: a first Ctrl-C asks the workers to
// stop at the next instance and the partial summary is emitted marked
// incomplete (exit code 130).
struct InterruptGuard {
    void (*previous)(int);
    InterruptGuard() {
        g_interrupted.store(false);
        previous = std::signal(SIGINT, handle_interrupt);
    }
    ~InterruptGuard() { std::signal(SIGINT, previous); }
};

unsigned default_workers() {
    if (const char* env = std::getenv("APARTITION_WORKERS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 65536) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

std::vector<Rational> parse_grid(const std::vector<std::string>& items) {
    std::vector<Rational> grid;
    grid.reserve(items.size());
    for (const auto& s : items) grid.push_back(parse_rational(s));
    return grid;
}

std::string grid_string(const std::vector<Rational>& grid) {
    std::string s;
    for (const auto& x : grid) {
        if (!s.empty()) s += ",";
        s += pretty_string(x);
    }
    return s;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void print_series(std::ostream& out, const SeriesTruncation& t) {
    for (std::size_t n = 0; n < t.coefficients.size(); ++n)
        out << n << " " << t.coefficients[n].get_str() << "\n";
}

void print_summary(std::ostream& out, const SweepSummary& summary) {
    out << "family: " << summary.family << "\n";
    out << "checked: " << summary.checked << "\n";
    if (!summary.complete) out << "incomplete: interrupted before covering the family\n";
    out << "violations: " << summary.violations.size() << "\n";
    for (const auto& inst : summary.violations)
        out << "  violation multiset=" << inst.multiset << " a=" << inst.a << " b=" << inst.b
            << " x=" << pretty_string(inst.x) << " difference=" << pretty_string(inst.difference)
            << "\n";
    out << "equalities: " << summary.equalities.size() << "\n";
    for (const auto& inst : summary.equalities)
        out << "  equality multiset=" << inst.multiset << " a=" << inst.a << " b=" << inst.b
            << " x=" << pretty_string(inst.x) << "\n";
}

struct FormatFlags {
    bool json = false;
    bool csv = false;
};

void add_json_flag(CLI::App* cmd, FormatFlags& fmt) {
    cmd->add_flag("--json", fmt.json, "emit JSON instead of plain text");
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact A-partition polynomial toolkit: builds the polynomial family attached to\n"
                 "an A-partition function, cross-checks it against counting oracles, verifies\n"
                 "Bessenrodt-Ono-type inequalities over finite families, and extracts the\n"
                 "complex roots of the difference polynomials.",
                 "apartition"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- poly ----
    struct {
        std::string multiset;
        std::uint64_t upto = 0;
        FormatFlags fmt;
    } poly;
    {
        auto* cmd = app.add_subcommand("poly", "build and print f[0..N] for a multiset");
        cmd->add_option("--multiset", poly.multiset, "multiset spec")->required();
        cmd->add_option("--upto", poly.upto, "max index N")->required();
        add_json_flag(cmd, poly.fmt);
        cmd->callback([&] {
            auto a = IntegerMultiset::parse(poly.multiset);
            PolySequence s = build_sequence(a, poly.upto);
            if (poly.fmt.json) {
                print_json(out, to_json(s));
                return;
            }
            out << "multiset: " << a.spec() << "\n";
            out << "upto: " << s.upto << "\n";
            out << "sigma:";
            for (auto v : s.sigma) out << " " << v;
            out << "\n";
            for (std::size_t n = 0; n <= s.upto; ++n)
                out << "f[" << n << "] = " << s.f[n].str() << "\n";
        });
    }

    // ---- eval ----
    struct {
        std::string multiset, x;
        std::uint64_t n = 0;
        FormatFlags fmt;
    } ev;
    {
        auto* cmd = app.add_subcommand("eval", "evaluate f[n] at an exact rational x");
        cmd->add_option("--multiset", ev.multiset, "multiset spec")->required();
        cmd->add_option("--n", ev.n, "index n")->required();
        cmd->add_option("--x", ev.x, "evaluation point, integer or num/den")->required();
        add_json_flag(cmd, ev.fmt);
        cmd->callback([&] {
            auto a = IntegerMultiset::parse(ev.multiset);
            Rational x = parse_rational(ev.x);
            PolySequence s = build_sequence(a, ev.n);
            Rational value = s.f[ev.n](x);
            if (ev.fmt.json) {
                Json j;
                j["multiset"] = a.spec();
                j["n"] = ev.n;
                j["x"] = fraction_string(x);
                j["value"] = fraction_string(value);
                print_json(out, j);
                return;
            }
            out << pretty_string(value) << "\n";
        });
    }

    // ---- colored ----
    struct {
        std::string multiset;
        std::uint64_t upto = 0, k = 1;
        FormatFlags fmt;
    } col;
    {
        auto* cmd = app.add_subcommand("colored",
                                       "k-colored counts f[n](k) for n = 0..N via the recurrence");
        cmd->add_option("--multiset", col.multiset, "multiset spec")->required();
        cmd->add_option("--upto", col.upto, "max index N")->required();
        cmd->add_option("--k", col.k, "number of colors")->required()->check(CLI::PositiveNumber);
        add_json_flag(cmd, col.fmt);
        cmd->callback([&] {
            auto a = IntegerMultiset::parse(col.multiset);
            PolySequence s = build_sequence(a, col.upto);
            std::vector<Integer> values(col.upto + 1);
            for (std::size_t n = 0; n <= col.upto; ++n) values[n] = evaluate_colored(s, n, col.k);
            if (col.fmt.json) {
                Json j;
                j["multiset"] = a.spec();
                j["k"] = col.k;
                j["upto"] = col.upto;
                Json vals = Json::array();
                for (const auto& v : values) vals.push_back(v.get_str());
                j["values"] = std::move(vals);
                print_json(out, j);
                return;
            }
            for (std::size_t n = 0; n <= col.upto; ++n) out << n << " " << values[n].get_str() << "\n";
        });
    }

    // ---- oracle ----
    struct {
        std::string multiset;
        std::uint64_t upto = 0, k = 1;
        FormatFlags fmt;
    } orc;
    {
        auto* oracle = app.add_subcommand("oracle", "independent counting oracles (no recurrence)");
        oracle->require_subcommand(1);
        enum class Oracle { Partitions, Colored, Brute };
        for (auto [name, help, which] :
             {std::tuple{"partitions", "p_A(n) by series expansion", Oracle::Partitions},
              std::tuple{"colored", "k-colored counts by series expansion", Oracle::Colored},
              std::tuple{"brute", "exhaustive enumeration, n <= 12", Oracle::Brute}}) {
            auto* cmd = oracle->add_subcommand(name, help);
            cmd->add_option("--multiset", orc.multiset, "multiset spec")->required();
            cmd->add_option("--upto", orc.upto, "max n")->required();
            if (which != Oracle::Partitions)
                cmd->add_option("--k", orc.k, "number of colors")
                    ->required()
                    ->check(CLI::PositiveNumber);
            add_json_flag(cmd, orc.fmt);
            cmd->callback([&, which] {
                auto a = IntegerMultiset::parse(orc.multiset);
                std::uint64_t k = which == Oracle::Partitions ? 1 : orc.k;
                SeriesTruncation t = which == Oracle::Partitions
                                         ? count_partitions_dp(a, orc.upto)
                                         : which == Oracle::Colored
                                               ? count_colored_series(a, orc.k, orc.upto)
                                               : enumerate_colored_brute(a, orc.k, orc.upto);
                if (orc.fmt.json)
                    print_json(out, series_json(a.spec(), k, t));
                else
                    print_series(out, t);
            });
        }
    }

    // ---- bo ----
    auto* bo = app.add_subcommand("bo", "Bessenrodt-Ono-type inequality checks and sweeps");
    bo->require_subcommand(1);

    struct {
        std::string multiset, x;
        std::uint64_t a = 0, b = 0;
        FormatFlags fmt;
    } chk;
    {
        auto* cmd = bo->add_subcommand("check", "classify f[a](x) f[b](x) - f[a+b](x) exactly");
        cmd->add_option("--multiset", chk.multiset, "multiset spec")->required();
        cmd->add_option("--a", chk.a, "first index")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--b", chk.b, "second index")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--x", chk.x, "evaluation point, integer or num/den")->required();
        add_json_flag(cmd, chk.fmt);
        cmd->callback([&] {
            auto a = IntegerMultiset::parse(chk.multiset);
            PolySequence s = build_sequence(a, chk.a + chk.b);
            BOReport r = check_bo(s, chk.a, chk.b, parse_rational(chk.x));
            if (chk.fmt.json)
                print_json(out, to_json(r));
            else
                out << (r.strict ? "strict" : r.equality ? "equality" : "violated")
                    << " difference=" << pretty_string(r.difference) << "\n";
            if (r.violated()) exit_code = 1;
        });
    }

    struct {
        std::string multiset;
        std::uint64_t a = 0, b = 0;
        FormatFlags fmt;
    } dif;
    {
        auto* cmd = bo->add_subcommand("diff", "print the difference polynomial f[a] f[b] - f[a+b]");
        cmd->add_option("--multiset", dif.multiset, "multiset spec")->required();
        cmd->add_option("--a", dif.a, "first index")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--b", dif.b, "second index")->required()->check(CLI::PositiveNumber);
        add_json_flag(cmd, dif.fmt);
        cmd->callback([&] {
            auto a = IntegerMultiset::parse(dif.multiset);
            PolySequence s = build_sequence(a, dif.a + dif.b);
            Polynomial d = difference_poly(s, dif.a, dif.b);
            if (dif.fmt.json) {
                Json j;
                j["multiset"] = a.spec();
                j["a"] = dif.a;
                j["b"] = dif.b;
                j["coefficients"] = to_json(d);
                print_json(out, j);
            } else {
                out << d.str() << "\n";
            }
        });
    }

    struct {
        std::string multiset;
        std::uint64_t upto = 0;
        std::vector<std::string> grid;
        FormatFlags fmt;
    } swp;
    {
        auto* cmd = bo->add_subcommand(
            "sweep", "classify all pairs b <= a with a+b <= N for one multiset on an x grid");
        cmd->add_option("--multiset", swp.multiset, "multiset spec")->required();
        cmd->add_option("--upto", swp.upto, "max a+b")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--x", swp.grid, "grid point, repeatable (default 3, 7/2, 4, 10)");
        add_json_flag(cmd, swp.fmt);
        cmd->callback([&] {
            auto a = IntegerMultiset::parse(swp.multiset);
            std::vector<Rational> grid = swp.grid.empty()
                                             ? std::vector<Rational>{Rational(3), make_rational(7, 2),
                                                                     Rational(4), Rational(10)}
                                             : parse_grid(swp.grid);
            PolySequence s = build_sequence(a, swp.upto);
            SweepSummary summary = sweep_pairs(s, grid);
            if (swp.fmt.json)
                print_json(out, to_json(summary));
            else
                print_summary(out, summary);
            if (!summary.violations.empty()) exit_code = 1;
        });
    }

    struct {
        std::uint64_t a_max = 1, b_max = 1, sum_max = kNoSumCap;
        unsigned workers = default_workers();
        bool deep = false;
        FormatFlags fmt;
    } sw3;
    {
        auto* cmd = bo->add_subcommand(
            "sweep-sets3", "x=3 sweep over every subset of {1..a+b} with 1 in A");
        cmd->add_option("--a-max", sw3.a_max, "max a")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--b-max", sw3.b_max, "max b")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--sum-max", sw3.sum_max, "optional cap on a+b");
        cmd->add_option("--workers", sw3.workers, "parallel workers");
        cmd->add_flag("--deep", sw3.deep, "lift the desk-scale guard (full range runs for hours)");
        add_json_flag(cmd, sw3.fmt);
        cmd->callback([&] {
            InterruptGuard guard;
            SweepSummary summary = sweep_sets_at_3(sw3.a_max, sw3.b_max, sw3.sum_max,
                                                   {sw3.workers, sw3.deep, &g_interrupted});
            bool ok = matches_expected_sets3(summary);
            if (sw3.fmt.json) {
                Json j = to_json(summary);
                j["expected_pattern"] = ok;
                print_json(out, j);
            } else {
                print_summary(out, summary);
                out << "expected-pattern: " << (ok ? "OK" : "MISMATCH") << "\n";
            }
            if (!summary.complete)
                exit_code = 130;
            else if (!ok)
                exit_code = 1;
        });
    }

    struct {
        std::uint64_t sum_max = 2;
        unsigned workers = default_workers();
        bool deep = false;
        FormatFlags fmt;
    } sw5;
    {
        auto* cmd = bo->add_subcommand(
            "sweep-multisets5",
            "x=5 sweep over every multiset on {1..a+b} with mu(1)=1 and mu(j)<=j");
        cmd->add_option("--sum-max", sw5.sum_max, "max a+b")->required();
        cmd->add_option("--workers", sw5.workers, "parallel workers");
        cmd->add_flag("--deep", sw5.deep, "lift the desk-scale guard");
        add_json_flag(cmd, sw5.fmt);
        cmd->callback([&] {
            InterruptGuard guard;
            SweepSummary summary =
                sweep_multisets_at_5(sw5.sum_max, {sw5.workers, sw5.deep, &g_interrupted});
            bool ok = matches_expected_multisets5(summary);
            if (sw5.fmt.json) {
                Json j = to_json(summary);
                j["expected_pattern"] = ok;
                print_json(out, j);
            } else {
                print_summary(out, summary);
                out << "expected-pattern: " << (ok ? "OK" : "MISMATCH") << "\n";
            }
            if (!summary.complete)
                exit_code = 130;
            else if (!ok)
                exit_code = 1;
        });
    }

    struct {
        std::uint64_t upto = 0;
        bool verify = false;
        FormatFlags fmt;
    } q12;
    {
        auto* cmd = bo->add_subcommand("quasi12",
                                       "closed-form f_{{1,2},n}(3) values (quasi-polynomial)");
        cmd->add_option("--upto", q12.upto, "max n")->required();
        cmd->add_flag("--verify", q12.verify, "cross-check against the recurrence");
        add_json_flag(cmd, q12.fmt);
        cmd->callback([&] {
            std::vector<Rational> values(q12.upto + 1);
            for (std::uint64_t n = 0; n <= q12.upto; ++n) values[n] = quasi_poly_12_at_3(n);
            std::vector<std::uint64_t> mismatches;
            if (q12.verify) {
                PolySequence s = build_sequence(
                    IntegerMultiset::from_counts({{1, 1}, {2, 1}}), q12.upto);
                for (std::uint64_t n = 0; n <= q12.upto; ++n)
                    if (values[n] != Rational(evaluate_colored(s, n, 3))) mismatches.push_back(n);
            }
            if (q12.fmt.json) {
                Json j;
                j["upto"] = q12.upto;
                Json vals = Json::array();
                for (const auto& v : values) vals.push_back(fraction_string(v));
                j["values"] = std::move(vals);
                if (q12.verify) {
                    j["verified"] = mismatches.empty();
                    j["mismatches"] = mismatches;
                }
                print_json(out, j);
            } else {
                for (std::uint64_t n = 0; n <= q12.upto; ++n)
                    out << n << " " << pretty_string(values[n]) << "\n";
                if (q12.verify)
                    out << "verify: " << (mismatches.empty() ? "OK" : "MISMATCH") << "\n";
            }
            if (q12.verify && !mismatches.empty()) exit_code = 1;
        });
    }

    struct {
        std::string which, lo, hi, step = "1/4";
        FormatFlags fmt;
    } aux;
    {
        auto* cmd = bo->add_subcommand("aux", "grid positivity check of an auxiliary function");
        cmd->add_option("--which", aux.which, "Psi3, psi3, Psi4 or psi4")->required();
        cmd->add_option("--lo", aux.lo, "grid start (default: the function's expected domain edge)");
        cmd->add_option("--hi", aux.hi, "grid end (default 10000)");
        cmd->add_option("--step", aux.step, "grid step (default 1/4)");
        add_json_flag(cmd, aux.fmt);
        cmd->callback([&] {
            AuxFunction which = aux_function_from_name(aux.which);
            const char* default_lo = "1";
            switch (which) {
                case AuxFunction::Psi3: default_lo = "15"; break;
                case AuxFunction::psi3: default_lo = "3"; break;
                case AuxFunction::Psi4: default_lo = "9"; break;
                case AuxFunction::psi4: default_lo = "1/4"; break;
            }
            Rational lo = parse_rational(aux.lo.empty() ? default_lo : aux.lo);
            Rational hi = parse_rational(aux.hi.empty() ? "10000" : aux.hi);
            AuxReport rep = check_aux_positivity(which, lo, hi, parse_rational(aux.step));
            if (aux.fmt.json) {
                print_json(out, to_json(rep));
            } else {
                char buf[160];
                std::snprintf(buf, sizeof buf, "min=%.17g argmin=%.17g points=%llu", rep.min_value,
                              rep.argmin, static_cast<unsigned long long>(rep.points));
                out << aux_function_name(which) << " on [" << pretty_string(lo) << ", "
                    << pretty_string(hi) << "] step " << pretty_string(rep.step) << ": " << buf
                    << " " << (rep.pass ? "PASS" : "FAIL")
                    << (rep.within_slack ? " (within 1e-9 slack)" : "") << "\n";
            }
            if (rep.numeric_error)
                exit_code = 3;
            else if (!rep.pass)
                exit_code = 1;
        });
    }

    struct {
        std::string multiset;
        std::uint64_t upto = 0;
        std::vector<std::string> grid;
        FormatFlags fmt;
    } mono;
    {
        auto* cmd = bo->add_subcommand("monotone",
                                       "exact monotonicity check of f[n] and f'[n] on an x grid");
        cmd->add_option("--multiset", mono.multiset, "multiset spec")->required();
        cmd->add_option("--upto", mono.upto, "max n")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--x", mono.grid,
                        "grid point >= 1, repeatable (default 1, 3/2, 2, 3, 15/2, 10)");
        add_json_flag(cmd, mono.fmt);
        cmd->callback([&] {
            auto a = IntegerMultiset::parse(mono.multiset);
            std::vector<Rational> grid =
                mono.grid.empty()
                    ? std::vector<Rational>{Rational(1), make_rational(3, 2), Rational(2),
                                            Rational(3), make_rational(15, 2), Rational(10)}
                    : parse_grid(mono.grid);
            PolySequence s = build_sequence(a, mono.upto);
            MonotonicityReport rep = check_monotonicity(s, grid);
            if (mono.fmt.json) {
                print_json(out, monotonicity_json(s, grid, rep));
            } else {
                out << "multiset: " << a.spec() << "\n";
                out << "grid: " << grid_string(grid) << "\n";
                out << "comparisons: " << rep.comparisons << "\n";
                for (const auto& f : rep.failures) out << "  fail: " << f << "\n";
                out << (rep.pass() ? "PASS" : "FAIL") << "\n";
            }
            if (!rep.pass()) exit_code = 1;
        });
    }

    // ---- roots ----
    struct {
        std::string multiset;
        std::uint64_t a_max = 1, b_max = 1;
        FormatFlags fmt;
    } fig;
    {
        auto* roots = app.add_subcommand("roots", "complex roots of the difference polynomials");
        roots->require_subcommand(1);
        auto* cmd = roots->add_subcommand(
            "figure", "roots of f[a] f[b] - f[a+b] for all a <= a_max, b <= b_max");
        cmd->add_option("--multiset", fig.multiset, "multiset spec")->required();
        cmd->add_option("--a-max", fig.a_max, "max a")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--b-max", fig.b_max, "max b")->required()->check(CLI::PositiveNumber);
        add_json_flag(cmd, fig.fmt);
        cmd->add_flag("--csv", fig.fmt.csv, "emit the canonical CSV dataset")
            ->excludes(cmd->get_option("--json"));
        cmd->callback([&] {
            auto a = IntegerMultiset::parse(fig.multiset);
            auto records = figure_dataset(a, fig.a_max, fig.b_max);
            if (fig.fmt.json) {
                print_json(out, roots_json(a.spec(), fig.a_max, fig.b_max, records));
            } else if (fig.fmt.csv) {
                out << roots_csv(records);
            } else {
                char buf[160];
                for (const auto& r : records) {
                    std::snprintf(buf, sizeof buf, "a=%llu b=%llu re=%.15g im=%.15g residual=%.3g",
                                  static_cast<unsigned long long>(r.a),
                                  static_cast<unsigned long long>(r.b), r.root.real(),
                                  r.root.imag(), r.residual);
                    out << buf << "\n";
                }
            }
        });
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}

}  // namespace apartition
