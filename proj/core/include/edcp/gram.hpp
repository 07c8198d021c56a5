#pragma once

#include "edcp/kernel.hpp"

namespace edcp {

/// Centered empirical kernel matrix: entry (i,j) is
///   (phi_ij - mu_i - mu_j + eta) / n,
/// where mu is the vector of row means of the kernel excluding the diagonal
/// entry and eta is the mean of the strict upper triangle. Its eigenvalues
/// estimate the weights of the limit process.
class CenteredGram {
public:
    explicit CenteredGram(RowMatrix values);

    Index n() const { return values_.rows(); }
    const RowMatrix& values() const { return values_; }
    double operator()(Index i, Index j) const { return values_(i, j); }

private:
    RowMatrix values_;
};

/// Builds the centered Gram matrix from a kernel matrix. Symmetric by
/// construction (the upper triangle is computed and mirrored).
CenteredGram center_gram(const KernelMatrix& kernel, int threads = 0);

} // namespace edcp
