#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "edcp/report.hpp"
#include "edcp/scan.hpp"
#include "edcp/spectrum.hpp"

namespace edcp {

struct SimConfig {
    Index gridPoints = 1000; // T, interior grid t_j = j/T for j = 1..T-1
    Index replicates = 499;  // R
    std::uint64_t seed = 0;

    void validate() const;
};

/// Reference sample of the limit statistic: R draws of the supremum of the
/// absolute truncated limit process.
struct LimitSample {
    std::vector<double> supValues;
    SimConfig config;
    Spectrum spectrumUsed;
};

/// One standard Brownian bridge on the interior grid j/T, j = 1..T-1, built
/// from cumulative N(0, 1/T) increments tied down at t = 1.
std::vector<double> sample_brownian_bridge(Index gridPoints, std::mt19937_64& eng);

/// One realization of the truncated limit process on the interior grid:
///   sum_i lambda_i (t (1 - t) - B_i(t)^2),
/// with one independent bridge per eigenvalue. Used by simulate_sup and
/// directly testable.
std::vector<double> simulate_process(const Spectrum& spectrum, Index gridPoints,
                                     std::mt19937_64& eng);

/// Simulates R supremum draws. Replicate r consumes only its own substream
/// derived from (seed, r), so any thread count yields the identical sample.
LimitSample simulate_sup(const Spectrum& spectrum, const SimConfig& config,
                         int threads = 0);

/// Fraction of reference draws at or above the observed statistic. tStar = 0
/// is degenerate and maps to 1. Throws InputError for negative or non-finite
/// tStar or an empty sample.
double p_value(std::span<const double> supValues, double tStar);
double p_value(const LimitSample& sample, double tStar);

/// The full one-change-point test: scan, centered-gram spectrum, limit
/// simulation, p-value. m is clamped to n for very short signals.
TestReport asymptotic_test(const Signal& signal, const KernelConfig& kernelCfg,
                           Index m, const SimConfig& simCfg, double alpha,
                           Index maxN = kDefaultKernelCap, int threads = 0);

} // namespace edcp
