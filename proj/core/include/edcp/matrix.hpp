#pragma once

#include <Eigen/Dense>

namespace edcp {

using Index = Eigen::Index;

// Observations are rows; row-major keeps a single observation contiguous.
using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

} // namespace edcp
