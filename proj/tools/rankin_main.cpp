#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rankin/banach.hpp"
#include "rankin/bounds.hpp"
#include "rankin/errors.hpp"
#include "rankin/io.hpp"
#include "rankin/optimizer.hpp"
#include "rankin/verify.hpp"
#include "rankin/version.hpp"
#include "report.hpp"

namespace {

namespace io = rankin::io;
using rankin::cli::RunMeta;

// Exit codes:
//   0 success (verify: bound satisfied)
//   1 unexpected internal error
//   2 unparseable input or invalid flags
//   3 undefined request (single-atom bound, simplex below dimension n-1)
//   4 verified family violates the bound (signals a broken input or build)
//   5 theorem preconditions failed (normalization, conditions (i)-(iii))
enum ExitCode {
    kOk = 0,
    kInternal = 1,
    kBadInput = 2,
    kUndefined = 3,
    kViolated = 4,
    kPrecondition = 5,
};

struct Options {
    std::string input_path;
    std::string out_path;
    bool json = false;
    bool functional = false;
    double tolerance = rankin::kSlackTolerance;
    std::size_t dim = 0;
    rankin::OptimizerConfig optimizer;

    std::vector<std::uint64_t> simplex;  // n d
    std::uint64_t circle = 0;
    std::uint64_t sphere = 0;
    std::uint64_t counting = 0;
};

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += " ";
        s += argv[i];
    }
    return s;
}

class Timer {
public:
    double elapsed_ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_bound(const Options& opt, RunMeta meta, const Timer& timer) {
    const std::string text = io::read_text_file(opt.input_path);
    meta.input_digest = rankin::cli::digest(text);
    const auto space = io::read_space(text);
    const auto report = rankin::rankin_bound(space);
    meta.wall_time_ms = timer.elapsed_ms();
    std::cout << rankin::cli::render_bound(meta, report, space.size());
    return kOk;
}

int cmd_verify(const Options& opt, RunMeta meta, const Timer& timer) {
    const std::string text = io::read_text_file(opt.input_path);
    meta.input_digest = rankin::cli::digest(text);

    const auto kind = io::identify(text);
    if (opt.functional && kind != io::DocumentKind::functional_family) {
        throw rankin::ParseError("--functional requires a functional-family document");
    }

    if (kind == io::DocumentKind::functional_family) {
        const auto fam = io::read_functional_family(text);
        try {
            const auto report = rankin::check_functional_rankin(fam, opt.tolerance);
            meta.wall_time_ms = timer.elapsed_ms();
            std::cout << rankin::cli::render_verify_functional(meta, report, fam.size(),
                                                               fam.dim(), fam.p());
            return report.satisfied ? kOk : kViolated;
        } catch (const rankin::PreconditionError& e) {
            meta.wall_time_ms = timer.elapsed_ms();
            std::cout << rankin::cli::render_precondition(meta, e);
            return kPrecondition;
        }
    }

    // Hilbert path. Raw loading leaves normalization to check_rankin, which
    // recomputes it from the vectors and reports the actual deviation.
    const auto fam = io::read_family(text, rankin::Normalization::none);
    try {
        const auto coh = rankin::check_rankin(fam, opt.tolerance);
        const auto dec = rankin::proof_decomposition(fam);
        const double floor = rankin::implied_coherence_floor(fam);
        meta.wall_time_ms = timer.elapsed_ms();
        std::cout << rankin::cli::render_verify(meta, coh, dec, floor, fam.size(),
                                                fam.dim());
        return coh.satisfied ? kOk : kViolated;
    } catch (const rankin::PreconditionError& e) {
        meta.wall_time_ms = timer.elapsed_ms();
        std::cout << rankin::cli::render_precondition(meta, e);
        return kPrecondition;
    }
}

int cmd_optimize(const Options& opt, RunMeta meta, const Timer& timer) {
    const std::string text = io::read_text_file(opt.input_path);
    meta.input_digest = rankin::cli::digest(text);
    const auto space = io::read_space(text);

    const auto result = rankin::minimize_coherence(space, opt.dim, opt.optimizer);
    if (!opt.out_path.empty()) {
        io::write_text_file(opt.out_path, io::write_family(result.best_family));
    }
    meta.wall_time_ms = timer.elapsed_ms();
    std::cout << rankin::cli::render_optimize(meta, result, opt.optimizer, space.size(),
                                              opt.dim, opt.out_path);
    return kOk;
}

int cmd_make(const Options& opt, RunMeta meta, const Timer& timer) {
    meta.input_digest = rankin::cli::digest("");  // generators consume no input

    std::string generator;
    std::string text;
    std::size_t atoms = 0;
    std::size_t dim = 0;

    if (!opt.simplex.empty()) {
        const std::size_t n = opt.simplex[0];
        const std::size_t d = opt.simplex[1];
        const auto fam = rankin::simplex_family(n, d);
        generator = "simplex " + std::to_string(n) + " " + std::to_string(d);
        text = io::write_family(fam);
        atoms = fam.size();
        dim = fam.dim();
    } else if (opt.circle > 0) {
        const auto fam = rankin::discretize(rankin::Shape::circle, opt.circle);
        generator = "circle " + std::to_string(opt.circle);
        text = io::write_family(fam);
        atoms = fam.size();
        dim = fam.dim();
    } else if (opt.sphere > 0) {
        const auto fam = rankin::discretize(rankin::Shape::sphere, opt.sphere);
        generator = "sphere " + std::to_string(opt.sphere);
        text = io::write_family(fam);
        atoms = fam.size();
        dim = fam.dim();
    } else {
        const auto space = rankin::counting_space(opt.counting);
        generator = "counting " + std::to_string(opt.counting);
        text = io::write_space(space);
        atoms = space.size();
    }

    io::write_text_file(opt.out_path, text);
    meta.wall_time_ms = timer.elapsed_ms();
    std::cout << rankin::cli::render_make(meta, generator, atoms, dim, opt.out_path);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    const Timer timer;
    Options opt;

    CLI::App app{"continuous Rankin bounds for measure-indexed unit-vector families"};
    app.set_version_flag("--version", rankin::kVersion);
    app.require_subcommand(1);

    auto* bound = app.add_subcommand("bound", "closed-form Rankin bound of a space");
    bound->add_option("file", opt.input_path, "space or family document")->required();
    bound->add_flag("--json", opt.json, "machine-readable report");

    auto* verify = app.add_subcommand("verify", "check a family against the bound");
    verify->add_option("file", opt.input_path, "family document")->required();
    verify->add_flag("--functional", opt.functional,
                     "require the functional (Banach) document kind");
    verify->add_option("--tolerance", opt.tolerance, "pass/fail slack tolerance");
    verify->add_flag("--json", opt.json, "machine-readable report");

    auto* optimize =
        app.add_subcommand("optimize", "search for minimal-coherence families");
    optimize->add_option("file", opt.input_path, "space document")->required();
    optimize->add_option("--dim", opt.dim, "ambient dimension")->required();
    optimize->add_option("--seed", opt.optimizer.seed, "base RNG seed");
    optimize->add_option("--restarts", opt.optimizer.restarts, "independent restarts");
    optimize->add_option("--iters", opt.optimizer.max_iters, "iterations per restart");
    optimize->add_option("--threads", opt.optimizer.threads,
                         "worker threads (1 = sequential, deterministic)");
    optimize->add_option("--out", opt.out_path, "write the best family here");
    optimize->add_flag("--json", opt.json, "machine-readable report");

    auto* make = app.add_subcommand("make", "generate spaces and families");
    auto* gen = make->add_option_group("generator");
    gen->add_option("--simplex", opt.simplex, "n d: regular simplex family")
        ->expected(2);
    gen->add_option("--circle", opt.circle, "n: circle discretization");
    gen->add_option("--sphere", opt.sphere, "n: sphere discretization");
    gen->add_option("--counting", opt.counting, "n: counting-measure space");
    gen->require_option(1);
    make->add_option("--out", opt.out_path, "output path")->required();
    make->add_flag("--json", opt.json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    RunMeta meta;
    meta.command = join_args(argc, argv);
    meta.json = opt.json;

    try {
        if (bound->parsed()) return cmd_bound(opt, meta, timer);
        if (verify->parsed()) return cmd_verify(opt, meta, timer);
        if (optimize->parsed()) return cmd_optimize(opt, meta, timer);
        if (make->parsed()) return cmd_make(opt, meta, timer);
        return kBadInput;
    } catch (const rankin::PreconditionError& e) {
        meta.wall_time_ms = timer.elapsed_ms();
        std::cout << rankin::cli::render_precondition(meta, e);
        return kPrecondition;
    } catch (const rankin::NormalizationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const rankin::UndefinedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUndefined;
    } catch (const rankin::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const rankin::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const rankin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
