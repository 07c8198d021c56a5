#pragma once

// Shared test fixtures and independent oracles. Everything here must stay
// independent of the implementation paths it is used to check: the scan
// oracle goes through divergence_at only, and the eigenvalue oracle is a
// dense decomposition of the full matrix.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "edcp/gram.hpp"
#include "edcp/scan.hpp"
#include "edcp/signal.hpp"

namespace edcp::test {

inline Signal random_signal(Index n, Index d, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    RowMatrix data(n, d);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < d; ++j) {
            data(i, j) = normal(eng);
        }
    }
    return Signal(std::move(data));
}

inline Signal constant_signal(Index n, Index d, double value) {
    RowMatrix data(n, d);
    data.setConstant(value);
    return Signal(std::move(data));
}

/// Midpoint mean-shift signal built without the library generator.
inline Signal step_signal(Index n, double jump, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    RowMatrix data(n, 1);
    for (Index i = 0; i < n; ++i) {
        data(i, 0) = normal(eng) + (i >= n / 2 ? jump : 0.0);
    }
    return Signal(std::move(data));
}

/// Per-split normalized statistic straight from divergence_at; the reference
/// for the incremental scan.
inline std::vector<double> brute_normalized(const KernelMatrix& kernel) {
    const Index n = kernel.n();
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n - 3));
    for (Index k = 2; k <= n - 2; ++k) {
        values.push_back(scan_weight(k, n) * divergence_at(kernel, k));
    }
    return values;
}

/// All eigenvalues of a dense symmetric matrix ordered by descending
/// magnitude, ties by descending signed value.
inline std::vector<double> dense_eigenvalues(const RowMatrix& matrix) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
    std::vector<double> values(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(values.begin(), values.end(), [](double a, double b) {
        double absA = std::abs(a);
        double absB = std::abs(b);
        if (absA != absB) {
            return absA > absB;
        }
        return a > b;
    });
    return values;
}

/// Random orthogonal matrix from the QR factorization of a Gaussian matrix.
inline Eigen::MatrixXd random_orthogonal(Index d, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXd g(d, d);
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            g(i, j) = normal(eng);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    return qr.householderQ();
}

/// E|X| for X ~ N(mu, sigma^2), the folded-normal mean.
inline double folded_normal_mean(double mu, double sigma) {
    double phi = std::erf(mu / (sigma * std::sqrt(2.0)));
    return sigma * std::sqrt(2.0 / M_PI) * std::exp(-mu * mu / (2.0 * sigma * sigma)) +
           mu * phi;
}

/// Population energy divergence between N(0,1) and N(c,1) at beta = 1.
inline double population_divergence_mean_shift(double c) {
    double crossTerm = folded_normal_mean(c, std::sqrt(2.0));
    double withinTerm = folded_normal_mean(0.0, std::sqrt(2.0));
    return 2.0 * crossTerm - 2.0 * withinTerm;
}

inline bool close_rel(double a, double b, double relTol) {
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= relTol * scale;
}

} // namespace edcp::test
