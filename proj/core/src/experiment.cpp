#include "edcp/experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "edcp/errors.hpp"
#include "edcp/parallel.hpp"
#include "edcp/rng.hpp"

namespace edcp {

namespace {

struct TrialOutcome {
    bool reject = false;
    Index kHat = 0;
};

TrialOutcome run_trial(const GeneratorSpec& spec, Method method,
                       const TestConfig& config, std::uint64_t signalSeed,
                       std::uint64_t methodSeed) {
    GeneratorSpec trialSpec = spec;
    trialSpec.seed = signalSeed;
    Signal signal = generate(trialSpec);

    TrialOutcome outcome;
    switch (method) {
    case Method::Asymptotic: {
        SimConfig sim{config.gridPoints, config.replicates, methodSeed};
        TestReport report = asymptotic_test(signal, config.kernel, config.eigenvalues,
                                            sim, config.alpha, config.maxN, 1);
        outcome.reject = report.reject;
        outcome.kHat = report.kStar;
        break;
    }
    case Method::Permutation: {
        TestReport report = permutation_test(signal, config.kernel, config.replicates,
                                             config.alpha, methodSeed, config.maxN, 1);
        outcome.reject = report.reject;
        outcome.kHat = report.kStar;
        break;
    }
    case Method::Long: {
        SimConfig sim{config.gridPoints, config.replicates, methodSeed};
        LongSignalResult result = detect_long(signal, config.kernel, config.eigenvalues,
                                              sim, config.alpha, config.targetLength, 1);
        outcome.reject = result.coarseReport.reject;
        outcome.kHat = result.refinedK ? *result.refinedK : result.coarseMappedK;
        break;
    }
    }
    return outcome;
}

} // namespace

CellResult run_cell(const GeneratorSpec& spec, Method method, const TestConfig& config,
                    Index trials, int threads) {
    if (trials < 1) {
        throw InputError("run_cell: trials must be >= 1");
    }

    auto start = std::chrono::steady_clock::now();
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
    parallel_for(
        trials,
        [&](std::int64_t t) {
            std::uint64_t signalSeed = derive_seed(spec.seed, 2 * static_cast<std::uint64_t>(t));
            std::uint64_t methodSeed = derive_seed(spec.seed, 2 * static_cast<std::uint64_t>(t) + 1);
            outcomes[static_cast<std::size_t>(t)] =
                run_trial(spec, method, config, signalSeed, methodSeed);
        },
        threads);

    CellResult cell;
    cell.trials = trials;
    const bool hasTruth = spec.kind != GeneratorKind::IidNull;
    const double trueK = static_cast<double>(spec.changeIndex());
    double sumAbsErr = 0.0;
    double sumK = 0.0;
    double sumKSq = 0.0;
    for (const TrialOutcome& outcome : outcomes) {
        if (outcome.reject) {
            ++cell.rejections;
        }
        double k = static_cast<double>(outcome.kHat);
        sumK += k;
        sumKSq += k * k;
        if (hasTruth) {
            sumAbsErr += std::abs(k - trueK);
        }
    }
    double count = static_cast<double>(trials);
    cell.rejectionRate = static_cast<double>(cell.rejections) / count;
    cell.locationMean = sumK / count;
    cell.locationVariance = std::max(0.0, sumKSq / count - cell.locationMean * cell.locationMean);
    cell.meanAbsError =
        hasTruth ? sumAbsErr / count : std::numeric_limits<double>::quiet_NaN();
    cell.elapsedMillis = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return cell;
}

ExperimentGrid load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "' for reading");
    }
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) {
        throw InputError("malformed grid JSON in '" + path + "'");
    }

    ExperimentGrid grid;
    try {
        grid.kind = generator_kind_from_string(j.at("kind").get<std::string>());
        grid.lengths = j.at("n").get<std::vector<Index>>();
        if (j.contains("parameter")) {
            grid.parameters = j.at("parameter").get<std::vector<double>>();
        }
        for (const auto& name : j.at("methods").get<std::vector<std::string>>()) {
            grid.methods.push_back(method_from_string(name));
        }
        grid.trials = j.value("trials", Index{200});
        grid.changeFraction = j.value("changeFraction", 0.5);
        grid.seed = j.value("seed", std::uint64_t{0});
        grid.config.kernel.beta = j.value("beta", 1.0);
        grid.config.alpha = j.value("alpha", 0.05);
        grid.config.eigenvalues = j.value("eigenvalues", Index{50});
        grid.config.replicates = j.value("replicates", Index{499});
        grid.config.gridPoints = j.value("gridPoints", Index{1000});
        grid.config.targetLength = j.value("targetLength", kDefaultSubsampleLength);
        grid.config.maxN = j.value("maxN", kDefaultKernelCap);
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed grid JSON: ") + ex.what());
    }
    if (grid.lengths.empty() || grid.methods.empty()) {
        throw InputError("grid needs at least one length and one method");
    }
    if (grid.kind != GeneratorKind::IidNull && grid.parameters.empty()) {
        throw InputError("grid needs at least one parameter for non-null kinds");
    }
    return grid;
}

std::string run_grid(const ExperimentGrid& grid, const std::string& outPath,
                     int threads) {
    std::ostringstream csv;
    csv.precision(10);
    csv << "kind,n,parameter,method,trials,rejectionRate,meanAbsError,"
           "locationMean,locationVariance,elapsedMillis\n";

    std::vector<double> parameters = grid.parameters;
    if (grid.kind == GeneratorKind::IidNull) {
        parameters.assign(1, 0.0);
    }

    std::uint64_t cellIndex = 0;
    for (Index n : grid.lengths) {
        for (double parameter : parameters) {
            for (Method method : grid.methods) {
                GeneratorSpec spec;
                spec.kind = grid.kind;
                spec.n = n;
                spec.changeFraction = grid.changeFraction;
                spec.parameter = parameter;
                spec.seed = derive_seed(grid.seed, cellIndex++);
                CellResult cell = run_cell(spec, method, grid.config, grid.trials, threads);
                csv << to_string(grid.kind) << ',' << n << ',' << parameter << ','
                    << to_string(method) << ',' << cell.trials << ','
                    << cell.rejectionRate << ',' << cell.meanAbsError << ','
                    << cell.locationMean << ',' << cell.locationVariance << ','
                    << cell.elapsedMillis << '\n';
            }
        }
    }

    std::string text = csv.str();
    if (!outPath.empty()) {
        std::ofstream out(outPath);
        if (!out) {
            throw InputError("cannot open '" + outPath + "' for writing");
        }
        out << text;
        if (!out) {
            throw InputError("I/O error while writing '" + outPath + "'");
        }
    }
    return text;
}

} // namespace edcp
