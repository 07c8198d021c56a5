#include "edcp/limit.hpp"

#include <chrono>
#include <cmath>

#include "edcp/errors.hpp"
#include "edcp/parallel.hpp"
#include "edcp/rng.hpp"

namespace edcp {

void SimConfig::validate() const {
    if (gridPoints < 2) {
        throw InputError("simulation: gridPoints must be >= 2");
    }
    if (replicates < 1) {
        throw InputError("simulation: replicates must be >= 1");
    }
}

std::vector<double> sample_brownian_bridge(Index gridPoints, std::mt19937_64& eng) {
    const Index T = gridPoints;
    NormalSampler normal(eng);
    // W on the grid via cumulative increments, then tie down: B = W(t) - t W(1).
    std::vector<double> walk(static_cast<std::size_t>(T));
    double cum = 0.0;
    for (Index j = 0; j < T; ++j) {
        cum += normal();
        walk[static_cast<std::size_t>(j)] = cum;
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(T));
    const double full = walk.back();
    std::vector<double> bridge(static_cast<std::size_t>(T - 1));
    for (Index j = 1; j < T; ++j) {
        double t = static_cast<double>(j) / static_cast<double>(T);
        bridge[static_cast<std::size_t>(j - 1)] =
            scale * (walk[static_cast<std::size_t>(j - 1)] - t * full);
    }
    return bridge;
}

std::vector<double> simulate_process(const Spectrum& spectrum, Index gridPoints,
                                     std::mt19937_64& eng) {
    const Index T = gridPoints;
    const auto& lambda = spectrum.eigenvalues;
    double lambdaSum = 0.0;
    for (double value : lambda) {
        lambdaSum += value;
    }

    // One walk buffer shared by all paths; the tied-down bridge value is
    // formed on the fly while accumulating lambda * B^2.
    NormalSampler normal(eng);
    const double invT = 1.0 / static_cast<double>(T);
    const double scale = std::sqrt(invT);
    std::vector<double> walk(static_cast<std::size_t>(T));
    std::vector<double> bridgeTerm(static_cast<std::size_t>(T - 1), 0.0);
    for (double value : lambda) {
        double cum = 0.0;
        for (Index j = 0; j < T; ++j) {
            cum += normal();
            walk[static_cast<std::size_t>(j)] = cum;
        }
        const double full = cum;
        for (Index j = 1; j < T; ++j) {
            double t = static_cast<double>(j) * invT;
            double b = scale * (walk[static_cast<std::size_t>(j - 1)] - t * full);
            bridgeTerm[static_cast<std::size_t>(j - 1)] += value * b * b;
        }
    }

    std::vector<double> process(static_cast<std::size_t>(T - 1));
    for (Index j = 1; j < T; ++j) {
        double t = static_cast<double>(j) * invT;
        process[static_cast<std::size_t>(j - 1)] =
            lambdaSum * t * (1.0 - t) - bridgeTerm[static_cast<std::size_t>(j - 1)];
    }
    return process;
}

LimitSample simulate_sup(const Spectrum& spectrum, const SimConfig& config, int threads) {
    config.validate();
    if (spectrum.m() < 1) {
        throw InputError("simulate_sup: spectrum must hold at least one eigenvalue");
    }

    LimitSample sample;
    sample.config = config;
    sample.spectrumUsed = spectrum;
    sample.supValues.assign(static_cast<std::size_t>(config.replicates), 0.0);
    parallel_for(
        config.replicates,
        [&](std::int64_t r) {
            auto eng = make_engine(derive_seed(config.seed, static_cast<std::uint64_t>(r)));
            std::vector<double> process =
                simulate_process(spectrum, config.gridPoints, eng);
            double sup = 0.0;
            for (double value : process) {
                sup = std::max(sup, std::abs(value));
            }
            sample.supValues[static_cast<std::size_t>(r)] = sup;
        },
        threads);
    return sample;
}

double p_value(std::span<const double> supValues, double tStar) {
    if (supValues.empty()) {
        throw InputError("p_value: empty reference sample");
    }
    if (!(tStar >= 0.0) || !std::isfinite(tStar)) {
        throw InputError("p_value: statistic must be finite and nonnegative");
    }
    if (tStar == 0.0) {
        return 1.0; // degenerate: every draw ties, declare no evidence
    }
    std::size_t count = 0;
    for (double value : supValues) {
        if (value >= tStar) {
            ++count;
        }
    }
    return static_cast<double>(count) / static_cast<double>(supValues.size());
}

double p_value(const LimitSample& sample, double tStar) {
    return p_value(std::span<const double>(sample.supValues), tStar);
}

TestReport asymptotic_test(const Signal& signal, const KernelConfig& kernelCfg,
                           Index m, const SimConfig& simCfg, double alpha,
                           Index maxN, int threads) {
    kernelCfg.validate();
    simCfg.validate();
    if (signal.n() < 4) {
        throw InputError("asymptotic_test: need at least 4 observations");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InputError("asymptotic_test: alpha must lie in (0,1)");
    }
    if (m < 1) {
        throw InputError("asymptotic_test: m must be >= 1");
    }
    const Index mUsed = std::min<Index>(m, signal.n());

    using Clock = std::chrono::steady_clock;
    auto millisSince = [](Clock::time_point start) {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    };

    TestReport report;
    report.method = Method::Asymptotic;
    report.n = signal.n();
    report.d = signal.d();
    report.beta = kernelCfg.beta;
    report.alpha = alpha;
    report.eigenvaluesUsed = mUsed;
    report.replicates = simCfg.replicates;
    report.gridPoints = simCfg.gridPoints;
    report.seed = simCfg.seed;

    auto startTotal = Clock::now();
    Spectrum spectrum;
    {
        auto startScan = Clock::now();
        KernelMatrix kernel = pairwise_kernel(signal, kernelCfg, maxN, threads);
        DivergenceScan divergence = scan(kernel);
        report.kStar = divergence.kStar();
        report.tStar = divergence.tStar();
        report.elapsedMillis.scan = millisSince(startScan);

        auto startSpectrum = Clock::now();
        CenteredGram gram = center_gram(kernel, threads);
        spectrum = top_eigenvalues(gram, mUsed);
        report.elapsedMillis.spectrum = millisSince(startSpectrum);
    }

    auto startSim = Clock::now();
    LimitSample sample = simulate_sup(spectrum, simCfg, threads);
    report.pValue = p_value(sample, std::max(report.tStar, 0.0));
    report.elapsedMillis.simulation = millisSince(startSim);

    report.reject = report.pValue <= alpha;
    report.elapsedMillis.total = millisSince(startTotal);
    return report;
}

} // namespace edcp
