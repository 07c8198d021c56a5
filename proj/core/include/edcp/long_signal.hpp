#pragma once

#include <optional>
#include <vector>

#include "edcp/limit.hpp"

namespace edcp {

/// Equidistant subsampling plan. Positions are 0-based into the original
/// signal; `stride` is the original-index gap between consecutive sub-points.
struct SubsamplePlan {
    std::vector<Index> indices;
    double stride = 1.0;
    Index targetLength = 2000;

    bool identity() const { return stride == 1.0; }
};

inline constexpr Index kDefaultSubsampleLength = 2000;

/// Plan for a signal of length n: the identity below the target length,
/// otherwise targetLength positions floor(j * n / targetLength).
SubsamplePlan subsample(Index n, Index targetLength = kDefaultSubsampleLength);

struct LongSignalResult {
    TestReport coarseReport;          // asymptotic test on the sub-signal
    Index coarseMappedK = 0;          // coarse split mapped to original coordinates
    std::optional<Index> refinedK;    // 1-based split in the original signal
    std::array<Index, 2> window{0, 0}; // 1-based inclusive refinement range
    Index z = 0;                      // half-width actually used

    /// Flattened report (method "long", original-signal coordinates).
    TestReport report(Index originalN, Index originalD) const;
};

/// Subsample-and-refine detection for signals beyond the full-matrix cap:
/// run the asymptotic test on the equidistant sub-signal; when it rejects,
/// rescan (no second test) the original slice of half-width
/// z = ceil(min(2 * stride, 1000)) around the mapped split. An identity plan
/// skips the rescan, so short signals reproduce asymptotic_test exactly.
LongSignalResult detect_long(const Signal& signal, const KernelConfig& kernelCfg,
                             Index m, const SimConfig& simCfg, double alpha,
                             Index targetLength = kDefaultSubsampleLength,
                             int threads = 0);

} // namespace edcp
