#include "rstirling/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "rstirling/beta_sim.hpp"
#include "rstirling/bounds.hpp"
#include "rstirling/exact.hpp"
#include "rstirling/figures.hpp"
#include "rstirling/moments.hpp"
#include "rstirling/stirling.hpp"
#include "rstirling/verify.hpp"

namespace rstirling {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitOracleDisagreement = 3;
constexpr int kExitIoError = 4;

std::string fraction_and_decimal(const ExactRational& v) {
    return v.str() + " (~" + decimal12(v) + ")";
}

// S_r(p,m) outside the lemma's domain is immediate from the conventions
std::optional<Natural> degenerate_value(std::uint64_t r, std::uint64_t p, std::uint64_t m) {
    if (m == 0) {
        return Natural(p == 0 ? 1 : 0);
    }
    if (p < r * m) {
        return Natural(0);
    }
    return std::nullopt;
}

int cmd_stirling(std::uint64_t r, std::uint64_t p, std::uint64_t m, const std::string& method,
                 std::ostream& out, std::ostream& err) {
    const StirlingQuery q{r, p, m};
    const auto degenerate = degenerate_value(r, p, m);
    auto lemma = [&] { return degenerate ? *degenerate : stirling_lemma_sum(q); };
    auto recurrence = [&] { return stirling_cache().value(r, p, m); };
    auto brute = [&] { return degenerate && p > brute_force_cap() ? *degenerate : stirling_brute_force(q); };

    if (method == "lemma") {
        out << lemma().str() << "\n";
    } else if (method == "recurrence") {
        out << recurrence().str() << "\n";
    } else if (method == "brute") {
        out << brute().str() << "\n";
    } else {  // all
        const Natural a = lemma();
        const Natural b = recurrence();
        out << "lemma=" << a.str() << "\n";
        out << "recurrence=" << b.str() << "\n";
        bool agree = a == b;
        if (p <= brute_force_cap()) {
            const Natural d = brute();
            out << "brute=" << d.str() << "\n";
            agree = agree && b == d;
        } else {
            out << "brute=skipped (p above cap " << brute_force_cap() << ")\n";
        }
        if (!agree) {
            err << "oracle disagreement at r=" << r << " p=" << p << " m=" << m << "\n";
            return kExitOracleDisagreement;
        }
    }
    return kExitOk;
}

int cmd_bounds(std::uint64_t r, std::uint64_t p, std::uint64_t m, std::ostream& out) {
    const BoundReport rep = stirling_bounds(StirlingQuery{r, p, m});
    out << "exact=" << rep.exact.str() << "\n";
    out << "jensen_lower=" << fraction_and_decimal(rep.jensen_lower) << "\n";
    out << "jensen_upper=" << fraction_and_decimal(rep.jensen_upper) << "\n";
    out << "tail_lower=" << fraction_and_decimal(rep.tail_lower) << "\n";
    out << "tail_upper=" << fraction_and_decimal(rep.tail_upper) << "\n";
    if (rep.expo_upper) {
        out << "expo_upper=" << fraction_and_decimal(*rep.expo_upper) << "\n";
    }
    if (rep.rd_lower) {
        out << "rd_lower=" << fraction_and_decimal(*rep.rd_lower) << "\n";
        out << "rd_upper=" << fraction_and_decimal(*rep.rd_upper) << "\n";
    }
    out << "combined_L=" << fraction_and_decimal(rep.combined_L) << "\n";
    out << "combined_U=" << fraction_and_decimal(rep.combined_U) << "\n";
    return kExitOk;
}

int cmd_moment(std::uint64_t r, std::uint64_t k, std::uint64_t m, std::optional<std::uint64_t> mc_n,
               std::uint64_t seed, std::uint64_t chunks, std::ostream& out) {
    const MomentQuery q{r, k, m};
    const ExactRational exact = moment_multinomial(q);
    out << exact.str() << "\n";
    if (mc_n) {
        const MCEstimate est = mc_moment(q, MCConfig{seed, *mc_n, chunks});
        const double diff = est.mean - exact.approx_double();
        const double z = est.std_error > 0.0 ? diff / est.std_error : (diff == 0.0 ? 0.0 : INFINITY);
        out << "mc_mean=" << decimal12(est.mean) << "\n";
        out << "mc_stderr=" << decimal12(est.std_error) << "\n";
        out << "z=" << decimal12(z) << "\n";
    }
    return kExitOk;
}

int cmd_bell(std::uint64_t p_max, bool with_upper, std::ostream& out) {
    out << (with_upper ? "p B U ln_Ubt ratio" : "p B") << "\n";
    for (std::uint64_t p = 1; p <= p_max; ++p) {
        const Natural b = bell(p);
        out << p << " " << b.str();
        if (with_upper) {
            const ExactRational u = bell_upper(p);
            out << " " << u.str() << " " << decimal12(berend_tassa(p).ln_magnitude) << " "
                << decimal12(u / ExactRational(b));
        }
        out << "\n";
    }
    return kExitOk;
}

int cmd_verify(VerifyLevel level, const std::string& only, std::ostream& out) {
    bool any = false;
    const auto results = run_verification(
        VerifyOptions{level, false, only}, [&](const CheckResult& r) {
            any = true;
            out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " (" << std::fixed
                << std::setprecision(2) << r.seconds << "s)\n";
        });
    for (const CheckResult& r : results) {
        if (!r.passed) {
            out << "first counterexample: " << r.name << ": " << r.detail << "\n";
            return kExitVerifyFailed;
        }
    }
    if (!any) {
        out << "no checks matched\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact r-associated Stirling numbers, bounds, and Monte Carlo checks"};
    app.require_subcommand(1);

    std::uint64_t r = 1;
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    std::uint64_t k = 0;

    auto* sc_stirling = app.add_subcommand("stirling", "Compute S_r(p,m) exactly");
    std::string method = "recurrence";
    sc_stirling->add_option("--r", r, "Minimum block size (>= 1)")->required()
        ->check(CLI::PositiveNumber);
    sc_stirling->add_option("--p", p, "Ground-set size")->required();
    sc_stirling->add_option("--m", m, "Number of blocks")->required();
    sc_stirling->add_option("--method", method, "lemma|recurrence|brute|all")
        ->check(CLI::IsMember({"lemma", "recurrence", "brute", "all"}));

    auto* sc_bounds = app.add_subcommand("bounds", "All bound families at one (r,p,m)");
    sc_bounds->add_option("--r", r, "Minimum block size (>= 1)")->required()
        ->check(CLI::PositiveNumber);
    sc_bounds->add_option("--p", p, "Ground-set size")->required();
    sc_bounds->add_option("--m", m, "Number of blocks")->required();

    auto* sc_figure = app.add_subcommand("figure", "Write one of the CSV data sets");
    int figure_id = 0;
    std::string out_path;
    std::optional<std::uint64_t> p_min_opt, p_max_opt, m_min_opt, m_max_opt;
    sc_figure->add_option("--id", figure_id, "Figure id (1-4)")->required();
    sc_figure->add_option("--out", out_path, "Output path (default figureN.csv)");
    sc_figure->add_option("--p-min", p_min_opt, "Grid lower p limit");
    sc_figure->add_option("--p-max", p_max_opt, "Grid upper p limit");
    sc_figure->add_option("--m-min", m_min_opt, "Grid lower m limit");
    sc_figure->add_option("--m-max", m_max_opt, "Grid upper m limit");

    auto* sc_moment = app.add_subcommand("moment", "Exact moment of a beta(1,r) sum");
    std::optional<std::uint64_t> mc_n;
    std::uint64_t seed = 42;
    std::uint64_t chunks = 1;
    sc_moment->add_option("--r", r, "Beta parameter (>= 1)")->required()
        ->check(CLI::PositiveNumber);
    sc_moment->add_option("--k", k, "Moment order")->required();
    sc_moment->add_option("--m", m, "Number of summands (>= 1)")->required()
        ->check(CLI::PositiveNumber);
    sc_moment->add_option("--mc", mc_n, "Also run a Monte Carlo estimate with this many samples")
        ->check(CLI::PositiveNumber);
    sc_moment->add_option("--seed", seed, "Monte Carlo seed (default 42)");
    sc_moment->add_option("--chunks", chunks, "Independent substreams (default 1)")
        ->check(CLI::PositiveNumber);

    auto* sc_bell = app.add_subcommand("bell", "Bell numbers B(1..p)");
    std::uint64_t bell_p_max = 0;
    bool with_upper = false;
    sc_bell->add_option("--p-max", bell_p_max, "Largest p (>= 1)")->required()
        ->check(CLI::PositiveNumber);
    sc_bell->add_flag("--with-upper", with_upper, "Add U(p), ln U_bt(p), and U/B columns");

    auto* sc_verify = app.add_subcommand("verify", "Run the verification suites");
    std::string level_name = "quick";
    std::string only;
    sc_verify->add_option("--level", level_name, "quick|full")
        ->check(CLI::IsMember({"quick", "full"}));
    sc_verify->add_option("--only", only, "Run only checks whose name contains this substring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }

    try {
        if (app.got_subcommand(sc_stirling)) {
            return cmd_stirling(r, p, m, method, out, err);
        }
        if (app.got_subcommand(sc_bounds)) {
            return cmd_bounds(r, p, m, out);
        }
        if (app.got_subcommand(sc_figure)) {
            FigureSpec spec = FigureSpec::defaults(figure_id);
            if (p_min_opt) spec.p_min = *p_min_opt;
            if (p_max_opt) spec.p_max = *p_max_opt;
            if (m_min_opt) spec.m_min = *m_min_opt;
            if (m_max_opt) spec.m_max = *m_max_opt;
            if (!out_path.empty()) spec.output_path = out_path;
            write_figure_csv(spec);
            err << "wrote " << spec.output_path << "\n";
            return kExitOk;
        }
        if (app.got_subcommand(sc_moment)) {
            return cmd_moment(r, k, m, mc_n, seed, chunks, out);
        }
        if (app.got_subcommand(sc_bell)) {
            return cmd_bell(bell_p_max, with_upper, out);
        }
        if (app.got_subcommand(sc_verify)) {
            const VerifyLevel level =
                level_name == "full" ? VerifyLevel::full : VerifyLevel::quick;
            return cmd_verify(level, only, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace rstirling
