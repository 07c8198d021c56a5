#pragma once

#include <cstdint>
#include <span>

#include "edcp/report.hpp"
#include "edcp/scan.hpp"

namespace edcp {

/// Permutation reference distribution: applies a uniformly random permutation
/// to the rows and columns of the precomputed kernel matrix (distances are
/// never recomputed) and rescans through the index map.
DivergenceScan scan_permuted(const KernelMatrix& kernel, std::span<const Index> perm);

/// Monte-Carlo permutation baseline: the observed t* is compared against the
/// maxima of R independently permuted scans. Permutations are drawn with
/// replacement from per-replicate substreams of `seed`, so results are
/// identical for any thread count.
TestReport permutation_test(const Signal& signal, const KernelConfig& kernelCfg,
                            Index replicates, double alpha, std::uint64_t seed,
                            Index maxN = kDefaultKernelCap, int threads = 0);

} // namespace edcp
