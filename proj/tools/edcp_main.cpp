// edcp — energy-divergence change-point detection CLI.
//
// Subcommands:
//   detect  run one test on a CSV signal and write a JSON report
//   bench   run an experiment grid and write a CSV table
//
// Exit codes: 0 success (whatever the test decision), 2 invalid input or
// configuration, 3 internal numerical failure.

#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>

#include "edcp/edcp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

void dump_spectrum(const edcp::Spectrum& spectrum, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw edcp::InputError("cannot open '" + path + "' for writing");
    }
    out.precision(std::numeric_limits<double>::max_digits10);
    out << "index,eigenvalue\n";
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
        out << i + 1 << ',' << spectrum.eigenvalues[i] << '\n';
    }
}

void dump_sups(const edcp::LimitSample& sample, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw edcp::InputError("cannot open '" + path + "' for writing");
    }
    out.precision(std::numeric_limits<double>::max_digits10);
    out << "replicate,sup\n";
    for (std::size_t r = 0; r < sample.supValues.size(); ++r) {
        out << r + 1 << ',' << sample.supValues[r] << '\n';
    }
}

struct DetectOptions {
    std::string input;
    bool header = false;
    double beta = 1.0;
    double alpha = 0.05;
    std::string method = "asymptotic";
    edcp::Index eigen = 50;
    edcp::Index replicates = 499;
    edcp::Index grid = 1000;
    std::uint64_t seed = 0;
    std::string output = "report.json";
    std::string dumpSpectrum;
    std::string dumpSups;
    edcp::Index maxN = edcp::kDefaultKernelCap;
    edcp::Index subsampleLength = edcp::kDefaultSubsampleLength;
    int threads = 0;
};

int run_detect(const DetectOptions& opt) {
    using namespace edcp;
    Signal signal = load_signal(opt.input, opt.header);
    KernelConfig kernelCfg{opt.beta};
    SimConfig simCfg{opt.grid, opt.replicates, opt.seed};

    TestReport report;
    if (opt.method == "asymptotic") {
        report = asymptotic_test(signal, kernelCfg, opt.eigen, simCfg, opt.alpha,
                                 opt.maxN, opt.threads);
    } else if (opt.method == "permutation") {
        report = permutation_test(signal, kernelCfg, opt.replicates, opt.alpha,
                                  opt.seed, opt.maxN, opt.threads);
    } else if (opt.method == "long") {
        LongSignalResult result = detect_long(signal, kernelCfg, opt.eigen, simCfg,
                                              opt.alpha, opt.subsampleLength, opt.threads);
        report = result.report(signal.n(), signal.d());
    } else {
        throw InputError("unknown method '" + opt.method + "'");
    }

    // The diagnostic dumps recompute the asymptotic intermediates; they are
    // meaningless for the permutation method.
    if (!opt.dumpSpectrum.empty() || !opt.dumpSups.empty()) {
        if (opt.method == "permutation") {
            throw InputError("--dump-spectrum/--dump-sups apply to the asymptotic and "
                             "long methods only");
        }
        Signal target = signal;
        if (opt.method == "long") {
            SubsamplePlan plan = subsample(signal.n(), opt.subsampleLength);
            if (!plan.identity()) {
                RowMatrix rows(static_cast<Index>(plan.indices.size()), signal.d());
                for (std::size_t j = 0; j < plan.indices.size(); ++j) {
                    rows.row(static_cast<Index>(j)) = signal.data().row(plan.indices[j]);
                }
                target = Signal(std::move(rows));
            }
        }
        KernelMatrix kernel = pairwise_kernel(target, kernelCfg, opt.maxN, opt.threads);
        Spectrum spectrum = top_eigenvalues(
            center_gram(kernel, opt.threads), std::min<Index>(opt.eigen, target.n()));
        if (!opt.dumpSpectrum.empty()) {
            dump_spectrum(spectrum, opt.dumpSpectrum);
        }
        if (!opt.dumpSups.empty()) {
            dump_sups(simulate_sup(spectrum, simCfg, opt.threads), opt.dumpSups);
        }
    }

    write_report(report, opt.output);
    std::cout << to_json(report) << std::endl;
    return kExitOk;
}

struct BenchOptions {
    std::string gridPath;
    std::string output = "results.csv";
    std::uint64_t seed = 0;
    bool seedSet = false;
    int threads = 0;
};

int run_bench(const BenchOptions& opt) {
    edcp::ExperimentGrid grid = edcp::load_grid(opt.gridPath);
    if (opt.seedSet) {
        grid.seed = opt.seed;
    }
    std::string csv = edcp::run_grid(grid, opt.output, opt.threads);
    std::cout << csv;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"energy-divergence change-point detection"};
    app.require_subcommand(1);

    DetectOptions det;
    CLI::App* detect = app.add_subcommand("detect", "test one signal for a change-point");
    detect->add_option("--input", det.input, "input CSV, one observation per row")
        ->required();
    detect->add_flag("--header", det.header, "skip a single header row");
    detect->add_option("--beta", det.beta, "kernel exponent in (0,2)");
    detect->add_option("--alpha", det.alpha, "test level in (0,1)");
    detect->add_option("--method", det.method, "asymptotic|permutation|long");
    detect->add_option("--eigen", det.eigen, "eigenvalues kept (m)");
    detect->add_option("--replicates", det.replicates, "simulation/permutation replicates (R)");
    detect->add_option("--grid", det.grid, "bridge grid points (T)");
    detect->add_option("--seed", det.seed, "RNG seed");
    detect->add_option("--output", det.output, "report JSON path");
    detect->add_option("--dump-spectrum", det.dumpSpectrum, "write eigenvalues CSV");
    detect->add_option("--dump-sups", det.dumpSups, "write simulated suprema CSV");
    detect->add_option("--max-n", det.maxN, "full kernel-matrix cap");
    detect->add_option("--subsample-length", det.subsampleLength,
                       "long method: sub-signal length");
    detect->add_option("--threads", det.threads, "worker threads (0 = hardware)");

    BenchOptions ben;
    CLI::App* bench = app.add_subcommand("bench", "run an experiment grid");
    bench->add_option("--grid", ben.gridPath, "grid JSON path")->required();
    bench->add_option("--output", ben.output, "results CSV path");
    bench->add_option("--seed", ben.seed, "master seed (overrides the grid file)")
        ->each([&](const std::string&) { ben.seedSet = true; });
    bench->add_option("--threads", ben.threads, "worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (detect->parsed()) {
            return run_detect(det);
        }
        return run_bench(ben);
    } catch (const edcp::NumericError& e) {
        std::cerr << "numerical failure: " << e.what() << std::endl;
        return kExitNumeric;
    } catch (const edcp::InputError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return kExitNumeric;
    }
}
