#include "edcp/kernel.hpp"

#include <cmath>
#include <sstream>

#include "edcp/errors.hpp"
#include "edcp/parallel.hpp"

namespace edcp {

void KernelConfig::validate() const {
    if (!(beta > 0.0 && beta < 2.0)) {
        std::ostringstream msg;
        msg << "beta must lie in (0,2), got " << beta;
        throw InputError(msg.str());
    }
}

KernelMatrix::KernelMatrix(RowMatrix values) : values_(std::move(values)) {
    if (values_.rows() != values_.cols() || values_.rows() < 2) {
        throw InputError("kernel matrix must be square with n >= 2");
    }
}

double kernel_entry(double squaredDistance, double beta) {
    if (squaredDistance <= 0.0) {
        return 0.0;
    }
    if (beta == 1.0) {
        return std::sqrt(squaredDistance);
    }
    return std::pow(squaredDistance, 0.5 * beta);
}

KernelMatrix pairwise_kernel(const Signal& signal, const KernelConfig& config,
                             Index maxN, int threads) {
    config.validate();
    const Index n = signal.n();
    if (n < 2) {
        throw InputError("pairwise_kernel: need at least 2 observations");
    }
    if (n > maxN) {
        std::ostringstream msg;
        msg << "pairwise_kernel: n = " << n << " exceeds the full-matrix cap of "
            << maxN << "; use the long-signal method or raise the cap";
        throw InputError(msg.str());
    }

    const RowMatrix& x = signal.data();
    const double beta = config.beta;
    RowMatrix values(n, n);
    // Row i owns pairs (i, j) for j > i and mirrors them; the interleaved
    // schedule balances the shrinking rows.
    parallel_for(
        n,
        [&](std::int64_t i) {
            values(i, i) = 0.0;
            for (Index j = i + 1; j < n; ++j) {
                double d2 = (x.row(i) - x.row(j)).squaredNorm();
                double v = kernel_entry(d2, beta);
                values(i, j) = v;
                values(j, i) = v;
            }
        },
        threads);
    return KernelMatrix(std::move(values));
}

} // namespace edcp
