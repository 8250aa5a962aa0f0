#include "commands.hpp"
#include "figures.hpp"
#include "parse.hpp"
#include "verify.hpp"

#include "ghcs/error.hpp"
#include "ghcs/specfun.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

using namespace ghcs;
using namespace ghcs::cli;

namespace {

// "--a -2" would otherwise read -2 as a flag; glue such values onto their option.
std::vector<std::string> glue_negative_values(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& cur = args[i];
        const bool long_opt = cur.rfind("--", 0) == 0 && cur.find('=') == std::string::npos && cur.size() > 2;
        if (long_opt && i + 1 < args.size()) {
            const std::string& next = args[i + 1];
            if (next.size() >= 2 && next[0] == '-' && (std::isdigit(static_cast<unsigned char>(next[1])) || next[1] == '.' || next[1] == 'i')) {
                out.push_back(cur + "=" + next);
                ++i;
                continue;
            }
        }
        out.push_back(cur);
    }
    return out;
}

std::size_t env_cap() {
    const char* env = std::getenv("GHCS_MAX_TERMS");
    if (env == nullptr || *env == '\0') return 4096;
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (*end != '\0' || v < 16) throw UsageError("GHCS_MAX_TERMS must be an integer >= 16");
    return static_cast<std::size_t>(v);
}


void add_params(CLI::App* sub, RunConfig& cfg, const std::string& what) {
    sub->add_option("--a", cfg.a, "numerator parameters of the " + what + ", comma-separated, re+imi for complex");
    sub->add_option("--b", cfg.b, "denominator parameters of the " + what);
}

void add_point(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--z", cfg.z, "complex point, e.g. 0.5+0.2i");
    sub->add_option("--r", cfg.r, "modulus |z| (used when --z is absent)");
    sub->add_option("--phi", cfg.phi, "phase of z when given through --r");
}

void add_theta(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--theta-count", cfg.theta_count, "phase grid samples over one period (default 721)");
    sub->add_option("--theta-start", cfg.theta_start, "left end of the phase grid (default -pi)");
}

void echo_options(const CLI::App* app, RunConfig& cfg) {
    for (const CLI::Option* opt : app->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        std::string joined;
        for (const std::string& r : opt->results()) joined += (joined.empty() ? "" : " ") + r;
        std::string name = opt->get_single_name();
        cfg.echo.emplace_back(name.empty() ? opt->get_name() : name, joined);
    }
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Generalized hypergeometric coherent states: states, statistics, weights and phase distributions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--tol", cfg.tol, "target tolerance for series tails and distributions (default 1e-12)");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.out, "output file (written atomically); stdout when absent");

    CLI::App* validate_cmd = app.add_subcommand("validate", "check parameter admissibility and domain");
    add_params(validate_cmd, cfg, "state");

    CLI::App* state_cmd = app.add_subcommand("state", "truncated Fock coefficients of |p;q;z>");
    add_params(state_cmd, cfg, "state");
    add_point(state_cmd, cfg);

    CLI::App* pn_cmd = app.add_subcommand("pn", "photon-number distribution");
    add_params(pn_cmd, cfg, "state");
    add_point(pn_cmd, cfg);

    CLI::App* stats_cmd = app.add_subcommand("stats", "mean photon number and Mandel parameter");
    add_params(stats_cmd, cfg, "state");
    add_point(stats_cmd, cfg);
    stats_cmd->add_option("--r-max", cfg.r_max, "sweep |z| from 0 to this value instead of a single point");
    stats_cmd->add_option("--r-count", cfg.r_count, "samples of the |z| sweep (default 61)");

    CLI::App* weight_cmd = app.add_subcommand("weight", "weight function w(x) and reduced weight w(x)/N(x)");
    add_params(weight_cmd, cfg, "family");
    weight_cmd->add_option("--x-max", cfg.x_max, "upper end of the x grid on the plane (default 10)");
    weight_cmd->add_option("--count", cfg.count, "number of x samples (default 201)");

    CLI::App* moment_cmd = app.add_subcommand("moment-check", "quadrature check of the moment identity");
    add_params(moment_cmd, cfg, "family");
    moment_cmd->add_option("--n-max", cfg.n_max, "largest moment order (default 20)");
    moment_cmd->add_option("--threshold", cfg.threshold, "largest accepted relative error (default 1e-6)");

    CLI::App* phase_cmd = app.add_subcommand("phase", "Husimi or Pegg-Barnett phase distribution of |p;q;z>");
    add_params(phase_cmd, cfg, "signal");
    add_point(phase_cmd, cfg);
    add_theta(phase_cmd, cfg);
    phase_cmd->add_option("--analyzer", cfg.analyzer, "Q (Husimi) or PB (Pegg-Barnett)")->check(CLI::IsMember({"Q", "PB"}));

    CLI::App* gh_cmd = app.add_subcommand("gh-phase", "phase distribution with a hypergeometric analyzer");
    add_params(gh_cmd, cfg, "analyzer");
    add_point(gh_cmd, cfg);
    add_theta(gh_cmd, cfg);
    gh_cmd->add_option("--signal-a", cfg.signal_a, "numerator parameters of the signal state (default: coherent state)");
    gh_cmd->add_option("--signal-b", cfg.signal_b, "denominator parameters of the signal state");

    CLI::App* figure_cmd = app.add_subcommand("figure", "data series of figure 1..13");
    figure_cmd->add_option("id", cfg.figure, "figure number")->required()->check(CLI::Range(1, kFigureCount));
    figure_cmd->add_option("--values", cfg.values, "sweep values, e.g. 0.2,1,5 or a:b pairs 2:4,3:3,4:2");
    figure_cmd->add_option("--r", cfg.r, "|alpha| or |epsilon| of fixed-point figures");
    figure_cmd->add_option("--phi", cfg.phi, "phase of the state variable");
    figure_cmd->add_option("--r-max", cfg.r_max, "upper end of the |alpha| sweep (default 6)");
    figure_cmd->add_option("--r-count", cfg.r_count, "samples of the |alpha| sweep (default 61)");
    add_theta(figure_cmd, cfg);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", cfg.suite, "moments, eigen, phase-norm, coalesce or all")
        ->check(CLI::IsMember(kVerifySuites));

    std::vector<std::string> args = glue_negative_values(argc, argv);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        cfg.cap = env_cap();
        ghcs::set_series_term_cap(cfg.cap);
        for (CLI::App* sub : app.get_subcommands()) {
            cfg.command = sub->get_name();
            echo_options(sub, cfg);
        }
        echo_options(&app, cfg);
        const Outcome outcome = run_command(cfg);
        write_output(outcome.text, cfg.out);
        return outcome.code;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParameterError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitInvalidParameters;
    } catch (const DivergenceError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitInvalidParameters;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
}
