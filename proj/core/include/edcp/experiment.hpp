#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edcp/long_signal.hpp"
#include "edcp/permutation.hpp"

namespace edcp {

/// Per-method test configuration shared by every cell of a grid.
struct TestConfig {
    KernelConfig kernel;
    Index eigenvalues = 50;
    Index replicates = 499;
    Index gridPoints = 1000;
    double alpha = 0.05;
    Index targetLength = kDefaultSubsampleLength;
    Index maxN = kDefaultKernelCap;
};

/// Aggregates over the trials of one experiment cell. Location summaries are
/// over the detected split k-hat of every trial; meanAbsError is NaN for
/// null signals (no true change-point).
struct CellResult {
    Index trials = 0;
    Index rejections = 0;
    double rejectionRate = 0.0;
    double meanAbsError = 0.0;
    double locationMean = 0.0;
    double locationVariance = 0.0;
    double elapsedMillis = 0.0;
};

/// Runs `trials` independent trials of one generator cell. Trial t draws its
/// signal and simulation seeds from substreams of spec.seed, so the result is
/// a pure function of (spec, method, config, trials) for any thread count.
CellResult run_cell(const GeneratorSpec& spec, Method method, const TestConfig& config,
                    Index trials, int threads = 0);

/// Cartesian experiment grid in the order (n, parameter, method).
struct ExperimentGrid {
    GeneratorKind kind = GeneratorKind::IidNull;
    std::vector<Index> lengths;
    std::vector<double> parameters; // ignored for iid-null (single cell per n)
    double changeFraction = 0.5;
    Index trials = 200;
    std::vector<Method> methods;
    TestConfig config;
    std::uint64_t seed = 0;
};

/// Loads a grid description from JSON (see README for the schema).
ExperimentGrid load_grid(const std::string& path);

/// Runs every cell and writes one CSV row per (kind, n, parameter, method).
/// Cell seeds are derived from grid.seed by cell index. Returns the CSV text
/// that was written.
std::string run_grid(const ExperimentGrid& grid, const std::string& outPath,
                     int threads = 0);

} // namespace edcp
