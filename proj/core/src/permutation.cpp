#include "edcp/permutation.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <vector>

#include "edcp/errors.hpp"
#include "edcp/limit.hpp"
#include "edcp/parallel.hpp"
#include "edcp/rng.hpp"

namespace edcp {

DivergenceScan scan_permuted(const KernelMatrix& kernel, std::span<const Index> perm) {
    return scan_mapped(kernel.values(), perm);
}

TestReport permutation_test(const Signal& signal, const KernelConfig& kernelCfg,
                            Index replicates, double alpha, std::uint64_t seed,
                            Index maxN, int threads) {
    kernelCfg.validate();
    if (signal.n() < 4) {
        throw InputError("permutation_test: need at least 4 observations");
    }
    if (replicates < 1) {
        throw InputError("permutation_test: replicates must be >= 1");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InputError("permutation_test: alpha must lie in (0,1)");
    }

    using Clock = std::chrono::steady_clock;
    auto millisSince = [](Clock::time_point start) {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    };

    TestReport report;
    report.method = Method::Permutation;
    report.n = signal.n();
    report.d = signal.d();
    report.beta = kernelCfg.beta;
    report.alpha = alpha;
    report.replicates = replicates;
    report.seed = seed;

    auto startTotal = Clock::now();
    KernelMatrix kernel = pairwise_kernel(signal, kernelCfg, maxN, threads);
    DivergenceScan observed = scan(kernel);
    report.kStar = observed.kStar();
    report.tStar = observed.tStar();
    report.elapsedMillis.scan = millisSince(startTotal);

    auto startPerm = Clock::now();
    const Index n = signal.n();
    std::vector<double> maxima(static_cast<std::size_t>(replicates), 0.0);
    parallel_for(
        replicates,
        [&](std::int64_t r) {
            auto eng = make_engine(derive_seed(seed, static_cast<std::uint64_t>(r)));
            std::vector<Index> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), Index{0});
            std::shuffle(perm.begin(), perm.end(), eng);
            maxima[static_cast<std::size_t>(r)] =
                scan_permuted(kernel, perm).tStar();
        },
        threads);
    report.elapsedMillis.simulation = millisSince(startPerm);

    report.pValue = p_value(std::span<const double>(maxima),
                            std::max(report.tStar, 0.0));
    report.reject = report.pValue <= alpha;
    report.elapsedMillis.total = millisSince(startTotal);
    return report;
}

} // namespace edcp
