#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mmp/errors.hpp"
#include "mmp/experiment.hpp"
#include "mmp/moment_problem.hpp"
#include "mmp/problem_file.hpp"
#include "mmp/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftestFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitDegenerate = 4;

void emit_problem(const std::string& output, const mmp::ProblemFile& f) {
    if (output.empty() || output == "-") {
        mmp::write_problem_file(std::cout, f);
    } else {
        mmp::save_problem_file(output, f);
    }
}

void emit_trials_csv(const std::string& output, const mmp::TrialStats& stats) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output.empty() && output != "-") {
        file.open(output);
        if (!file) {
            throw mmp::InputError("cannot write output file '" + output + "'");
        }
        out = &file;
    }
    *out << "trial,error,status\n";
    for (std::size_t i = 0; i < stats.trials.size(); ++i) {
        const mmp::TrialOutcome& t = stats.trials[i];
        *out << i << ','
             << (t.ok ? mmp::format_double(t.error) : "nan") << ','
             << (t.ok ? "ok" : "fail") << "\n";
    }
    std::cerr << "worst=" << mmp::format_double(stats.worst)
              << " mean=" << mmp::format_double(stats.mean)
              << " failures=" << stats.failures
              << " trials=" << stats.trials.size() << "\n";
}

struct ForwardArgs {
    std::string input;
    std::string output;
};

int cmd_forward(const ForwardArgs& args) {
    const mmp::ProblemFile in = mmp::load_problem_file(args.input);
    if (in.kind != mmp::ProblemKind::switches) {
        throw mmp::InputError("forward expects a file with kind 'switches'");
    }
    const mmp::SwitchConfiguration u(in.values);
    const mmp::MomentVector m = mmp::forward_moments(u);
    std::cerr << "K=" << u.count()
              << " X=" << mmp::format_double(u.support_end()) << "\n";
    mmp::ProblemFile out;
    out.kind = mmp::ProblemKind::moments;
    out.values = m.values();
    emit_problem(args.output, out);
    return kExitOk;
}

struct InvertArgs {
    std::string input;
    std::string output;
    double imag_tol = 0.0;
    bool imag_tol_set = false;
    double residual_tol = 1e-6;
    bool residual_tol_set = false;
    bool rescale = false;
    double scale = 0.0;
    bool scale_set = false;
};

int cmd_invert(const InvertArgs& args) {
    const mmp::ProblemFile in = mmp::load_problem_file(args.input);
    if (in.kind != mmp::ProblemKind::moments) {
        throw mmp::InputError("invert expects a file with kind 'moments'");
    }
    const mmp::MomentVector m(in.values);

    mmp::InversionOptions opts;
    if (args.imag_tol_set) {
        opts.imag_tol = args.imag_tol;
    } else if (in.imag_tol) {
        opts.imag_tol = *in.imag_tol;
    }
    if (args.residual_tol_set) {
        opts.residual_tol = args.residual_tol;
    } else if (in.residual_tol) {
        opts.residual_tol = *in.residual_tol;
    }
    opts.rescale = args.rescale || args.scale_set;
    if (args.scale_set) {
        opts.scale_hint = args.scale;
    } else if (in.domain_scale) {
        opts.scale_hint = *in.domain_scale;
    }

    const mmp::InversionResult res = mmp::invert_moments(m, opts);

    std::cerr << "K=" << m.order() << " n=" << m.pairs() << "\n"
              << "residual_inf=" << mmp::format_double(res.report.residual_inf)
              << "\n"
              << "eig_imag_max=" << mmp::format_double(res.report.eig_imag_max)
              << "\n"
              << "min_gap=" << mmp::format_double(res.report.min_gap) << "\n"
              << "status="
              << (res.report.status == mmp::InversionStatus::ok
                      ? "ok"
                      : "ill_conditioned_warning")
              << "\n";

    mmp::ProblemFile out;
    out.kind = mmp::ProblemKind::switches;
    out.values = res.switches.points();
    if (opts.rescale) {
        out.domain_scale = res.report.scale_used;
    }
    emit_problem(args.output, out);
    return kExitOk;
}

struct RoundtripArgs {
    std::size_t pairs = 2;
    int trials = 100;
    double gap = 0.05;
    std::uint64_t seed = 1;
    std::string output;
};

int cmd_roundtrip(const RoundtripArgs& args) {
    if (args.pairs < 1 || args.trials < 1) {
        throw mmp::InputError("roundtrip: --n and --trials must be >= 1");
    }
    if (!(args.gap > 0.0) ||
        args.gap * static_cast<double>(2 * args.pairs) >= 1.0) {
        throw mmp::InputError(
            "roundtrip: --gap must satisfy 0 < gap * 2n < 1");
    }
    const mmp::TrialStats stats = mmp::roundtrip_experiment(
        args.pairs, args.trials, args.gap, args.seed);
    emit_trials_csv(args.output, stats);
    return kExitOk;
}

struct ProbeArgs {
    std::string input;
    double eps = 0.0;
    int trials = 100;
    std::uint64_t seed = 1;
    std::string output;
};

int cmd_probe(const ProbeArgs& args) {
    const mmp::ProblemFile in = mmp::load_problem_file(args.input);
    if (in.kind != mmp::ProblemKind::switches) {
        throw mmp::InputError("probe expects a file with kind 'switches'");
    }
    const mmp::SwitchConfiguration u(in.values);
    const mmp::TrialStats stats =
        mmp::perturbation_probe(u, args.eps, args.trials, args.seed);
    emit_trials_csv(args.output, stats);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Finite Markov moment problem toolkit: forward moments of a"
        " piecewise-constant {0,1} density and switch-point recovery via"
        " triangular Toeplitz systems and Hankel pencil eigenvalues."};
    app.require_subcommand(1);

    ForwardArgs fwd;
    CLI::App* fwd_cmd = app.add_subcommand(
        "forward", "Compute the moments of a switch configuration");
    fwd_cmd->add_option("input", fwd.input,
                        "Problem file with kind 'switches' ('-' for stdin)")
        ->required();
    fwd_cmd->add_option("-o,--output", fwd.output,
                        "Output moments file (default: stdout)");

    InvertArgs inv;
    CLI::App* inv_cmd = app.add_subcommand(
        "invert", "Recover switch points from a moments file");
    inv_cmd->add_option("input", inv.input,
                        "Problem file with kind 'moments' ('-' for stdin)")
        ->required();
    inv_cmd->add_option("-o,--output", inv.output,
                        "Output switches file (default: stdout)");
    CLI::Option* imag_opt = inv_cmd->add_option(
        "--imag-tol", inv.imag_tol,
        "Eigenvalue imaginary-part tolerance (default: auto,"
        " 1e-6 * max(1, max |g|))");
    CLI::Option* resid_opt = inv_cmd->add_option(
        "--residual-tol", inv.residual_tol,
        "Residual threshold for the ill-conditioning warning"
        " (default: 1e-6)");
    inv_cmd->add_flag("--rescale", inv.rescale,
                      "Solve a rescaled problem near [0, 1] and map back;"
                      " scale from --scale, the file's domain_scale, or"
                      " max_k |m_k|^(1/k)");
    CLI::Option* scale_opt = inv_cmd->add_option(
        "--scale", inv.scale, "Explicit domain scale (implies --rescale)");

    RoundtripArgs rt;
    CLI::App* rt_cmd = app.add_subcommand(
        "roundtrip",
        "Random forward-then-invert study; CSV of per-trial errors");
    rt_cmd->add_option("--n", rt.pairs, "Interval pairs per instance")
        ->default_val(2);
    rt_cmd->add_option("--trials", rt.trials, "Number of trials")
        ->default_val(100);
    rt_cmd->add_option("--gap", rt.gap, "Minimum gap between points")
        ->default_val(0.05);
    rt_cmd->add_option("--seed", rt.seed, "Random seed")->default_val(1);
    rt_cmd->add_option("-o,--output", rt.output, "CSV file (default: stdout)");

    ProbeArgs pb;
    CLI::App* pb_cmd = app.add_subcommand(
        "probe",
        "Moment-perturbation conditioning study around a configuration");
    pb_cmd->add_option("input", pb.input,
                       "Problem file with kind 'switches' ('-' for stdin)")
        ->required();
    pb_cmd->add_option("--eps", pb.eps,
                       "Uniform perturbation half-width on each moment"
                       " (0 measures the baseline roundtrip error)")
        ->default_val(0.0);
    pb_cmd->add_option("--trials", pb.trials, "Number of trials")
        ->default_val(100);
    pb_cmd->add_option("--seed", pb.seed, "Random seed")->default_val(1);
    pb_cmd->add_option("-o,--output", pb.output, "CSV file (default: stdout)");

    CLI::App* self_cmd = app.add_subcommand(
        "selftest", "Run the embedded invariant and fixture checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    inv.imag_tol_set = imag_opt->count() > 0;
    inv.residual_tol_set = resid_opt->count() > 0;
    inv.scale_set = scale_opt->count() > 0;

    try {
        if (*fwd_cmd) {
            return cmd_forward(fwd);
        }
        if (*inv_cmd) {
            return cmd_invert(inv);
        }
        if (*rt_cmd) {
            return cmd_roundtrip(rt);
        }
        if (*pb_cmd) {
            return cmd_probe(pb);
        }
        if (*self_cmd) {
            const int failures = mmp::run_selftest(std::cout);
            return failures == 0 ? kExitOk : kExitSelftestFailure;
        }
    } catch (const mmp::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const mmp::ScalingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const mmp::DegeneracyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const mmp::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const mmp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
