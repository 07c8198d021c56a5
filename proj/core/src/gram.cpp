#include "edcp/gram.hpp"

#include "edcp/errors.hpp"
#include "edcp/parallel.hpp"

namespace edcp {

CenteredGram::CenteredGram(RowMatrix values) : values_(std::move(values)) {
    if (values_.rows() != values_.cols() || values_.rows() < 2) {
        throw InputError("centered gram must be square with n >= 2");
    }
}

CenteredGram center_gram(const KernelMatrix& kernel, int threads) {
    const Index n = kernel.n();
    const RowMatrix& phi = kernel.values();

    // The kernel diagonal is zero, so the plain row sum already excludes it.
    Vector mu = phi.rowwise().sum() / static_cast<double>(n - 1);
    double eta = phi.sum() / (static_cast<double>(n) * static_cast<double>(n - 1));
    double inv_n = 1.0 / static_cast<double>(n);

    RowMatrix values(n, n);
    parallel_for(
        n,
        [&](std::int64_t i) {
            for (Index j = i; j < n; ++j) {
                double v = inv_n * (phi(i, j) - mu(i) - mu(j) + eta);
                values(i, j) = v;
                values(j, i) = v;
            }
        },
        threads);
    return CenteredGram(std::move(values));
}

} // namespace edcp
