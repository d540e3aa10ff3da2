#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsholevo/config.hpp"
#include "hsholevo/errors.hpp"
#include "hsholevo/report_io.hpp"
#include "hsholevo/suite.hpp"
#include "hsholevo/sweep.hpp"
#include "hsholevo/version.hpp"

namespace {

using hsholevo::OutputFormat;
using hsholevo::RunConfig;
using hsholevo::ValidationError;

std::uint64_t parse_u64(const std::string& text) {
    if (text.empty()) {
        throw ValidationError(ValidationError::Kind::BadConfig,
                              "empty integer value");
    }
    char* end = nullptr;
    errno = 0;
    const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
    if (errno != 0 || end != text.c_str() + text.size() || text[0] == '-') {
        throw ValidationError(ValidationError::Kind::BadConfig,
                              "invalid integer value: " + text);
    }
    return static_cast<std::uint64_t>(value);
}

// Dimension lists accept plain integers and inclusive a..b ranges, e.g.
// --dim-q 2..6 or --dim-q 2 4 6.
std::vector<std::size_t> expand_dims(const std::vector<std::string>& tokens) {
    std::vector<std::size_t> dims;
    for (const auto& token : tokens) {
        const auto dots = token.find("..");
        if (dots == std::string::npos) {
            dims.push_back(static_cast<std::size_t>(parse_u64(token)));
            continue;
        }
        const auto lo = parse_u64(token.substr(0, dots));
        const auto hi = parse_u64(token.substr(dots + 2));
        if (hi < lo) {
            throw ValidationError(ValidationError::Kind::BadConfig,
                                  "descending dimension range: " + token);
        }
        for (auto d = lo; d <= hi; ++d) {
            dims.push_back(static_cast<std::size_t>(d));
        }
    }
    return dims;
}

struct CommonOpts {
    RunConfig cfg;
    std::vector<std::string> dim_p_tokens;
    std::vector<std::string> dim_q_tokens;
    std::string mode = "mixed-ranks";
    std::string format = "csv";
};

void add_common_options(CLI::App& cmd, CommonOpts& opts) {
    cmd.add_option("--seed", opts.cfg.seed, "Master seed for all streams");
    cmd.add_option("--trials", opts.cfg.trials, "Trials per check");
    cmd.add_option("--dim-p", opts.dim_p_tokens,
                   "Label-space dimensions (values or a..b ranges)");
    cmd.add_option("--dim-q", opts.dim_q_tokens,
                   "Signal-space dimensions (values or a..b ranges)");
    cmd.add_option("--mode", opts.mode, "Signal state rank profile")
        ->check(CLI::IsMember({"pure", "mixed", "mixed-ranks"}));
    cmd.add_option("--tol", opts.cfg.tol_ineq, "Inequality tolerance");
    cmd.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd.add_option("--out", opts.cfg.out_path,
                   "Output path (default: standard output)");
    cmd.add_option("--threads", opts.cfg.threads,
                   "Worker threads (0 = hardware concurrency)");
}

RunConfig resolve_config(CommonOpts& opts) {
    if (!opts.dim_p_tokens.empty()) {
        opts.cfg.dims_p = expand_dims(opts.dim_p_tokens);
    }
    if (!opts.dim_q_tokens.empty()) {
        opts.cfg.dims_q = expand_dims(opts.dim_q_tokens);
    }
    opts.cfg.mode = hsholevo::ensemble_mode_from_string(opts.mode);
    opts.cfg.format = hsholevo::output_format_from_string(opts.format);
    opts.cfg.validate();
    return opts.cfg;
}

// Writes through `writer` to the configured destination; returns 0 on
// success and 2 when the destination cannot be written.
template <typename Writer>
int emit(const std::string& out_path, Writer writer) {
    if (out_path.empty()) {
        writer(std::cout);
        std::cout.flush();
        return std::cout ? 0 : 2;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output path: " << out_path << '\n';
        return 2;
    }
    writer(file);
    file.flush();
    if (!file) {
        std::cerr << "error: write failed: " << out_path << '\n';
        return 2;
    }
    return 0;
}

int run_verify_command(CommonOpts& opts) {
    const RunConfig cfg = resolve_config(opts);
    const auto report = hsholevo::run_suite(cfg);
    const int io_status = emit(cfg.out_path, [&](std::ostream& out) {
        if (cfg.format == OutputFormat::Csv) {
            hsholevo::write_verification_csv(out, report);
        } else {
            hsholevo::write_verification_json(out, report);
        }
    });
    return io_status != 0 ? io_status : report.exit_code();
}

int run_example_command(std::uint64_t points, const std::string& format,
                        const std::string& out_path) {
    const auto report = hsholevo::run_sweep(static_cast<std::size_t>(points));
    const int io_status = emit(out_path, [&](std::ostream& out) {
        if (format == "csv") {
            hsholevo::write_sweep_csv(out, report);
        } else {
            hsholevo::write_sweep_json(out, report);
        }
    });
    if (io_status != 0) {
        return io_status;
    }
    if (!report.analytic_ok) {
        std::cerr << "error: closed-form cross checks failed\n";
        return 1;
    }
    return 0;
}

int run_compare_command(CommonOpts& opts) {
    const RunConfig cfg = resolve_config(opts);
    const auto report = hsholevo::run_compare(cfg);
    const int io_status = emit(cfg.out_path, [&](std::ostream& out) {
        if (cfg.format == OutputFormat::Csv) {
            hsholevo::write_compare_csv(out, report);
        } else {
            hsholevo::write_compare_json(out, report);
        }
    });
    return io_status != 0 ? io_status : report.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Purity-based divergence bounds: randomized verification "
                 "suite, worked-example sweep, and bound comparison"};
    app.set_version_flag("--version", hsholevo::kVersion);
    app.require_subcommand(1);

    std::uint64_t env_seed = 42;
    bool have_env_seed = false;
    if (const char* env = std::getenv("HS_HOLEVO_SEED")) {
        try {
            env_seed = parse_u64(env);
            have_env_seed = true;
        } catch (const ValidationError&) {
            std::cerr << "error: invalid HS_HOLEVO_SEED value: " << env
                      << '\n';
            return 2;
        }
    }

    CommonOpts verify_opts;
    CommonOpts compare_opts;
    if (have_env_seed) {
        verify_opts.cfg.seed = env_seed;
        compare_opts.cfg.seed = env_seed;
    }

    auto* verify = app.add_subcommand(
        "verify", "Run the randomized inequality suite and write a report");
    add_common_options(*verify, verify_opts);
    verify
        ->add_flag("--inject-violation", verify_opts.cfg.inject_violation,
                   "Add a deliberately reversed check (failure-path test "
                   "hook)")
        ->group("");

    std::uint64_t points = 181;
    std::string example_format = "csv";
    std::string example_out;
    std::uint64_t example_seed = env_seed;
    auto* example = app.add_subcommand(
        "example", "Sweep the two-signal worked example over theta");
    example->add_option("--points", points, "Grid points over [0, pi]");
    example->add_option("--format", example_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    example->add_option("--out", example_out,
                        "Output path (default: standard output)");
    example->add_option("--seed", example_seed,
                        "Accepted for interface symmetry; the sweep is "
                        "deterministic");

    auto* compare = app.add_subcommand(
        "compare", "Emit both bound families side by side per trial");
    add_common_options(*compare, compare_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) {
            return run_verify_command(verify_opts);
        }
        if (app.got_subcommand(example)) {
            if (points < 2) {
                std::cerr << "error: --points must be at least 2\n";
                return 2;
            }
            return run_example_command(points, example_format, example_out);
        }
        return run_compare_command(compare_opts);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const hsholevo::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
