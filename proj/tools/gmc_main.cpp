// Command-line front end: emits coefficient magnitudes and the fidelity /
// entanglement sweep grids, and runs the self-verification suite.
//
// Exit codes: 0 success, 1 validation error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "gmc/sweep.hpp"
#include "gmc/verify.hpp"

namespace {

struct CommonOptions {
    int n = 2;
    double eta = 0.6;
    double eps = 0.3;
    std::string flips = "on";
    std::string format = "csv";
    std::string out_path;
};

gmc::OutputFormat parse_format(const std::string& format) {
    return format == "json" ? gmc::OutputFormat::json : gmc::OutputFormat::csv;
}

void parse_grid(const std::string& text, gmc::SweepSpec& spec) {
    static const std::regex pattern(R"(^(\d+)x(\d+)$)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern)) {
        throw CLI::ValidationError("--grid", "expected AxB, e.g. 51x51");
    }
    spec.eta_axis.steps = std::stoi(match[1]);
    spec.eps_axis.steps = std::stoi(match[2]);
}

int emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 1;
    }
    file << payload;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noise-suppressing transmission over lossy bosonic memory channels"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string grid = "51x51";
    double thermal_fidelity = 3.0;
    double thermal_entanglement = 1.0;
    double alpha2 = 8.0;
    double mu = 0.6;

    auto add_common = [&](CLI::App* cmd, bool with_point_params) {
        cmd->add_option("--n", opt.n, "channel uses (even)")->capture_default_str();
        if (with_point_params) {
            cmd->add_option("--eta", opt.eta, "transmissivity")->capture_default_str();
            cmd->add_option("--eps", opt.eps, "memory factor")->capture_default_str();
        }
        cmd->add_option("--flips", opt.flips, "phase flips")
            ->check(CLI::IsMember({"on", "off"}))
            ->capture_default_str();
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", opt.out_path, "output path (default stdout)");
    };

    CLI::App* coefficients =
        app.add_subcommand("coefficients", "component magnitudes of the decoded signal");
    add_common(coefficients, true);

    CLI::App* fidelity =
        app.add_subcommand("fidelity", "coherent-state fidelity over the (eta, eps) grid");
    add_common(fidelity, false);
    fidelity->add_option("--T", thermal_fidelity, "environment mean occupation")
        ->capture_default_str();
    fidelity->add_option("--alpha2", alpha2, "input mean photon number |alpha|^2")
        ->capture_default_str();
    fidelity->add_option("--grid", grid, "grid steps AxB")->capture_default_str();

    CLI::App* entanglement = app.add_subcommand(
        "entanglement", "least PPT symplectic eigenvalue over the (eta, eps) grid");
    add_common(entanglement, false);
    entanglement->add_option("--T", thermal_entanglement, "environment mean occupation")
        ->capture_default_str();
    entanglement->add_option("--mu", mu, "squeezing parameter of the shared pair")
        ->capture_default_str();
    entanglement->add_option("--grid", grid, "grid steps AxB")->capture_default_str();

    CLI::App* verify =
        app.add_subcommand("verify", "run the invariant and oracle-agreement suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const bool flips = opt.flips == "on";

        if (coefficients->parsed()) {
            gmc::ChannelParams params(opt.n, opt.eta, opt.eps, 0.0, flips);
            return emit(gmc::render_coefficients(params, parse_format(opt.format)),
                        opt.out_path);
        }

        if (fidelity->parsed() || entanglement->parsed()) {
            gmc::SweepSpec spec;
            spec.uses = opt.n;
            spec.flips = flips;
            spec.format = parse_format(opt.format);
            parse_grid(grid, spec);
            if (fidelity->parsed()) {
                spec.thermal = thermal_fidelity;
                spec.alpha2 = alpha2;
                return emit(gmc::render_fidelity_sweep(spec), opt.out_path);
            }
            spec.thermal = thermal_entanglement;
            spec.mu = mu;
            return emit(gmc::render_entanglement_sweep(spec), opt.out_path);
        }

        if (verify->parsed()) {
            bool all_passed = true;
            for (const auto& check : gmc::verify::run_all()) {
                std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name;
                if (!check.detail.empty()) {
                    std::cout << ": " << check.detail;
                }
                std::cout << "\n";
                all_passed = all_passed && check.passed;
            }
            std::cout << (all_passed ? "verification passed" : "verification FAILED")
                      << "\n";
            return all_passed ? 0 : 2;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
