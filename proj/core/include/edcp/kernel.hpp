#pragma once

#include "edcp/matrix.hpp"
#include "edcp/signal.hpp"

namespace edcp {

/// Full-matrix mode is refused above this many points unless the caller
/// overrides the cap; longer signals go through the subsample-and-refine path.
inline constexpr Index kDefaultKernelCap = 15000;

struct KernelConfig {
    double beta = 1.0; // exponent of the Euclidean distance, must lie in (0,2)

    void validate() const;
};

/// Symmetric n x n matrix of |x_i - x_j|^beta with zero diagonal.
class KernelMatrix {
public:
    explicit KernelMatrix(RowMatrix values);

    Index n() const { return values_.rows(); }
    const RowMatrix& values() const { return values_; }
    double operator()(Index i, Index j) const { return values_(i, j); }

private:
    RowMatrix values_;
};

/// |x - y|^beta for a squared Euclidean distance.
double kernel_entry(double squaredDistance, double beta);

/// Pairwise beta-kernel of a signal. Rows are filled in parallel; every entry
/// is a pure function of its pair, so the result is identical for any thread
/// count. Throws InputError when n < 2 or n exceeds maxN.
KernelMatrix pairwise_kernel(const Signal& signal, const KernelConfig& config,
                             Index maxN = kDefaultKernelCap, int threads = 0);

} // namespace edcp
