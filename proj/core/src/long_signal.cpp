#include "edcp/long_signal.hpp"

#include <algorithm>
#include <cmath>

#include "edcp/errors.hpp"

namespace edcp {

SubsamplePlan subsample(Index n, Index targetLength) {
    if (n < 4) {
        throw InputError("subsample: need at least 4 observations");
    }
    if (targetLength < 4) {
        throw InputError("subsample: target length must be >= 4");
    }
    SubsamplePlan plan;
    plan.targetLength = targetLength;
    if (n <= targetLength) {
        plan.stride = 1.0;
        plan.indices.resize(static_cast<std::size_t>(n));
        for (Index j = 0; j < n; ++j) {
            plan.indices[static_cast<std::size_t>(j)] = j;
        }
        return plan;
    }
    plan.stride = static_cast<double>(n) / static_cast<double>(targetLength);
    plan.indices.resize(static_cast<std::size_t>(targetLength));
    for (Index j = 0; j < targetLength; ++j) {
        plan.indices[static_cast<std::size_t>(j)] =
            static_cast<Index>(static_cast<double>(j) * static_cast<double>(n) /
                               static_cast<double>(targetLength));
    }
    return plan;
}

TestReport LongSignalResult::report(Index originalN, Index originalD) const {
    TestReport r = coarseReport;
    r.method = Method::Long;
    r.n = originalN;
    r.d = originalD;
    r.kStar = refinedK ? *refinedK : coarseMappedK;
    if (refinedK) {
        r.refinedWindow = window;
    }
    return r;
}

LongSignalResult detect_long(const Signal& signal, const KernelConfig& kernelCfg,
                             Index m, const SimConfig& simCfg, double alpha,
                             Index targetLength, int threads) {
    const Index n = signal.n();
    SubsamplePlan plan = subsample(n, targetLength);

    Signal sub = [&] {
        if (plan.identity()) {
            return signal;
        }
        RowMatrix rows(static_cast<Index>(plan.indices.size()), signal.d());
        for (std::size_t j = 0; j < plan.indices.size(); ++j) {
            rows.row(static_cast<Index>(j)) = signal.data().row(plan.indices[j]);
        }
        return Signal(std::move(rows));
    }();

    LongSignalResult result;
    result.coarseReport =
        asymptotic_test(sub, kernelCfg, m, simCfg, alpha, kDefaultKernelCap, threads);
    result.z = static_cast<Index>(std::ceil(std::min(2.0 * plan.stride, 1000.0)));

    // Map the sub-signal split (count of left points) to the original index of
    // its last pre-change point, 1-based.
    const Index coarseK = result.coarseReport.kStar;
    const Index mappedK =
        plan.indices[static_cast<std::size_t>(coarseK - 1)] + 1;
    result.coarseMappedK = mappedK;

    Index lo = std::max<Index>(1, mappedK - result.z);
    Index hi = std::min<Index>(n, mappedK + result.z);
    while (hi - lo + 1 < 4) { // the rescan needs at least 4 points
        if (lo > 1) {
            --lo;
        }
        if (hi < n && hi - lo + 1 < 4) {
            ++hi;
        }
    }
    result.window = {lo, hi};

    if (!result.coarseReport.reject) {
        return result; // no change-point found; coarse report stands alone
    }
    if (plan.identity()) {
        // The sub-signal is the signal itself; rescanning a tiny window could
        // only displace the full-scan argmax.
        result.refinedK = mappedK;
        return result;
    }

    Signal windowSlice = signal.slice(lo - 1, hi - lo + 1);
    KernelMatrix kernel = pairwise_kernel(windowSlice, kernelCfg, kDefaultKernelCap, threads);
    DivergenceScan refined = scan(kernel);
    result.refinedK = (lo - 1) + refined.kStar();
    return result;
}

} // namespace edcp
