#include "edcp/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "edcp/errors.hpp"
#include "edcp/rng.hpp"

namespace edcp {

namespace {

constexpr double kResidualTol = 1e-10;
// Start vectors are pseudorandom but fixed, so repeated calls are identical.
constexpr std::uint64_t kLanczosSeed = 0x5eed1a9c205ULL;

Vector random_unit_vector(Index n, std::mt19937_64& eng) {
    NormalSampler normal(eng);
    Vector v(n);
    for (Index i = 0; i < n; ++i) {
        v(i) = normal();
    }
    v.normalize();
    return v;
}

// Classical Gram-Schmidt against the first `cols` basis vectors, applied
// twice; returns the remaining norm.
double reorthogonalize(Vector& w, const Eigen::MatrixXd& basis, Index cols) {
    if (cols > 0) {
        auto v = basis.leftCols(cols);
        w.noalias() -= v * (v.transpose() * w);
        w.noalias() -= v * (v.transpose() * w);
    }
    return w.norm();
}

struct RitzOrder {
    bool operator()(double a, double b) const {
        double absA = std::abs(a);
        double absB = std::abs(b);
        if (absA != absB) {
            return absA > absB;
        }
        return a > b;
    }
};

} // namespace

Spectrum top_eigenvalues(const CenteredGram& gram, Index m) {
    const Index n = gram.n();
    if (m < 1 || m > n) {
        std::ostringstream msg;
        msg << "top_eigenvalues: m = " << m << " outside [1, " << n << "]";
        throw InputError(msg.str());
    }
    const RowMatrix& mat = gram.values();
    const double scale = mat.norm();
    const double breakdownTol = std::max(1e-300, 1e-13 * scale);

    const Index stepCap = std::min<Index>(n, std::max<Index>(30 * m, 2 * m + 10));
    Index target = std::min<Index>(stepCap, std::max<Index>(2 * m + 10, 30));

    auto eng = make_engine(kLanczosSeed ^ static_cast<std::uint64_t>(n));
    Eigen::MatrixXd basis(n, target);
    std::vector<double> alpha;
    std::vector<double> beta; // beta[j] couples vectors j and j+1; 0 at block seams
    alpha.reserve(static_cast<std::size_t>(stepCap));
    beta.reserve(static_cast<std::size_t>(stepCap));

    basis.col(0) = random_unit_vector(n, eng);
    Vector w(n);
    double frontier = 0.0; // norm of the residual vector after the latest step

    Index steps = 0;
    while (true) {
        // Lanczos step on the current last basis vector.
        const Index j = steps;
        w.noalias() = mat * basis.col(j);
        double a = basis.col(j).dot(w);
        alpha.push_back(a);
        frontier = reorthogonalize(w, basis, j + 1);
        ++steps;

        const bool atCheckpoint = steps == target;
        if (!atCheckpoint) {
            if (frontier <= breakdownTol) {
                // Invariant subspace exhausted: open a new block from a fresh
                // random direction.
                beta.push_back(0.0);
                Vector fresh(n);
                double norm = 0.0;
                do {
                    fresh = random_unit_vector(n, eng);
                    norm = reorthogonalize(fresh, basis, steps);
                } while (norm <= 1e-6);
                basis.col(steps) = fresh / norm;
            } else {
                beta.push_back(frontier);
                basis.col(steps) = w / frontier;
            }
            continue;
        }

        // Ritz extraction from the (block-)tridiagonal projection.
        Vector diag = Eigen::Map<const Vector>(alpha.data(), steps);
        Vector sub(steps - 1 > 0 ? steps - 1 : 0);
        for (Index i = 0; i + 1 < steps; ++i) {
            sub(i) = beta[static_cast<std::size_t>(i)];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        if (solver.info() != Eigen::Success) {
            throw NumericError("top_eigenvalues: tridiagonal solve failed");
        }

        std::vector<Index> order(static_cast<std::size_t>(steps));
        std::iota(order.begin(), order.end(), Index{0});
        const Vector& ritz = solver.eigenvalues();
        std::sort(order.begin(), order.end(), [&](Index lhs, Index rhs) {
            return RitzOrder{}(ritz(lhs), ritz(rhs));
        });

        double maxAbs = steps > 0 ? std::abs(ritz(order[0])) : 0.0;
        double tol = kResidualTol * std::max(1.0, maxAbs);

        bool converged = true;
        std::vector<double> residuals(static_cast<std::size_t>(m));
        for (Index i = 0; i < m; ++i) {
            double lastComp = solver.eigenvectors()(steps - 1, order[static_cast<std::size_t>(i)]);
            double res = std::abs(frontier * lastComp);
            residuals[static_cast<std::size_t>(i)] = res;
            if (res > tol) {
                converged = false;
            }
        }

        if (converged || steps == n) {
            Spectrum spectrum;
            spectrum.tolerance = tol;
            spectrum.eigenvalues.resize(static_cast<std::size_t>(m));
            for (Index i = 0; i < m; ++i) {
                spectrum.eigenvalues[static_cast<std::size_t>(i)] =
                    ritz(order[static_cast<std::size_t>(i)]);
            }
            spectrum.residualNorms = std::move(residuals);
            return spectrum;
        }
        if (steps == stepCap) {
            std::ostringstream msg;
            msg << "top_eigenvalues: no convergence within " << stepCap
                << " Lanczos steps (n = " << n << ", m = " << m << ")";
            throw NumericError(msg.str());
        }

        // Grow the Krylov space and keep iterating from the stored frontier.
        target = std::min<Index>(stepCap, std::max<Index>(target + m, (3 * target) / 2));
        basis.conservativeResize(Eigen::NoChange, target);
        if (frontier <= breakdownTol) {
            beta.push_back(0.0);
            Vector fresh(n);
            double norm = 0.0;
            do {
                fresh = random_unit_vector(n, eng);
                norm = reorthogonalize(fresh, basis, steps);
            } while (norm <= 1e-6);
            basis.col(steps) = fresh / norm;
        } else {
            beta.push_back(frontier);
            basis.col(steps) = w / frontier;
        }
    }
}

} // namespace edcp
