#pragma once

#include <vector>

#include "edcp/gram.hpp"

namespace edcp {

/// Leading eigenvalues of the centered Gram matrix, ordered by descending
/// absolute value (ties by descending signed value). residualNorms[i] bounds
/// ||G y_i - lambda_i y_i|| for the returned Ritz pair.
struct Spectrum {
    std::vector<double> eigenvalues;
    std::vector<double> residualNorms;
    double tolerance = 0.0; // absolute residual bound the solver enforced

    Index m() const { return static_cast<Index>(eigenvalues.size()); }
};

/// Computes the m largest-magnitude eigenvalues of the symmetric matrix by a
/// Lanczos iteration with full reorthogonalization. The Krylov space is grown
/// until the requested Ritz pairs have residuals below tolerance; extremal
/// values from both ends of the spectrum converge first and are merged by
/// magnitude. When the space exhausts the full dimension the decomposition is
/// exact. Throws NumericError if the iteration budget (30 m steps, capped at
/// n) is spent without convergence.
Spectrum top_eigenvalues(const CenteredGram& gram, Index m);

} // namespace edcp
