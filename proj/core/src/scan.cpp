#include "edcp/scan.hpp"

#include <cmath>
#include <sstream>

#include "edcp/errors.hpp"

namespace edcp {

namespace {

void check_split(Index k, Index n) {
    if (k < 2 || k > n - 2) {
        std::ostringstream msg;
        msg << "split k = " << k << " outside [2, " << n - 2 << "]";
        throw InputError(msg.str());
    }
}

// Sums are accumulated in extended precision: the divergence is a small
// difference of large pair sums, and the scan must agree with the direct
// evaluation to 1e-10 relative even where the statistic nearly vanishes.
double combine(long double between, long double withinLeft, long double withinRight,
               Index k, Index n) {
    long double kk = static_cast<long double>(k);
    long double nk = static_cast<long double>(n - k);
    long double value = 2.0L / (kk * nk) * between;
    value -= 2.0L / (kk * (kk - 1.0L)) * withinLeft;
    value -= 2.0L / (nk * (nk - 1.0L)) * withinRight;
    return static_cast<double>(value);
}

} // namespace

DivergenceScan::DivergenceScan(Index n, std::vector<double> raw,
                               std::vector<double> normalized)
    : n_(n), raw_(std::move(raw)), normalized_(std::move(normalized)) {
    if (n_ < 4 || raw_.size() != static_cast<std::size_t>(n_ - 3) ||
        normalized_.size() != raw_.size()) {
        throw InputError("divergence scan: inconsistent sizes");
    }
    kStar_ = 2;
    tStar_ = normalized_[0];
    for (Index k = 3; k <= n_ - 2; ++k) {
        double q = normalized_[static_cast<std::size_t>(k - 2)];
        if (q > tStar_) { // strict: ties keep the smallest k
            tStar_ = q;
            kStar_ = k;
        }
    }
}

double DivergenceScan::raw_at(Index k) const {
    check_split(k, n_);
    return raw_[static_cast<std::size_t>(k - 2)];
}

double DivergenceScan::normalized_at(Index k) const {
    check_split(k, n_);
    return normalized_[static_cast<std::size_t>(k - 2)];
}

double scan_weight(Index k, Index n) {
    double a = static_cast<double>(k) * static_cast<double>(n - k);
    return a * a /
           (static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n - 1));
}

double divergence_at(const KernelMatrix& kernel, Index k) {
    const Index n = kernel.n();
    check_split(k, n);

    long double between = 0.0L;
    for (Index i = 0; i < k; ++i) {
        for (Index j = k; j < n; ++j) {
            between += kernel(i, j);
        }
    }
    long double withinLeft = 0.0L;
    for (Index i = 0; i < k; ++i) {
        for (Index j = i + 1; j < k; ++j) {
            withinLeft += kernel(i, j);
        }
    }
    long double withinRight = 0.0L;
    for (Index i = k; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            withinRight += kernel(i, j);
        }
    }
    return combine(between, withinLeft, withinRight, k, n);
}

double divergence_from_signal(const Signal& signal, Index k, const KernelConfig& config) {
    config.validate();
    const Index n = signal.n();
    check_split(k, n);
    const RowMatrix& x = signal.data();
    const double beta = config.beta;

    long double between = 0.0L;
    for (Index i = 0; i < k; ++i) {
        for (Index j = k; j < n; ++j) {
            between += kernel_entry((x.row(i) - x.row(j)).squaredNorm(), beta);
        }
    }
    long double withinLeft = 0.0L;
    for (Index i = 0; i < k; ++i) {
        for (Index j = i + 1; j < k; ++j) {
            withinLeft += kernel_entry((x.row(i) - x.row(j)).squaredNorm(), beta);
        }
    }
    long double withinRight = 0.0L;
    for (Index i = k; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            withinRight += kernel_entry((x.row(i) - x.row(j)).squaredNorm(), beta);
        }
    }
    return combine(between, withinLeft, withinRight, k, n);
}

// Shared scan core, parameterized over the entry accessor so that permuted
// rescans read through the index map directly. Both instantiations run the
// identical arithmetic sequence, so a permuted rescan is bit-equal to a scan
// of the rebuilt matrix.
template <class EntryAt>
DivergenceScan scan_core(Index n, EntryAt&& kernel) {
    if (n < 4) {
        throw InputError("scan: need at least 4 observations");
    }

    // Split k = 2 from scratch.
    long double withinLeft = kernel(0, 1);
    long double between = 0.0L;
    for (Index j = 2; j < n; ++j) {
        between += kernel(0, j) + kernel(1, j);
    }
    long double withinRight = 0.0L;
    for (Index i = 2; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            withinRight += kernel(i, j);
        }
    }

    std::vector<double> raw;
    std::vector<double> normalized;
    raw.reserve(static_cast<std::size_t>(n - 3));
    normalized.reserve(static_cast<std::size_t>(n - 3));

    for (Index k = 2;; ++k) {
        double value = combine(between, withinLeft, withinRight, k, n);
        raw.push_back(value);
        normalized.push_back(scan_weight(k, n) * value);
        if (k == n - 2) {
            break;
        }
        // Advance the boundary: observation p = k (0-based) leaves the right
        // block and joins the left one. Its kernel row splits into the partial
        // sums against each side.
        const Index p = k;
        long double rowLeft = 0.0L;
        for (Index i = 0; i < p; ++i) {
            rowLeft += kernel(p, i);
        }
        long double rowRight = 0.0L;
        for (Index j = p + 1; j < n; ++j) {
            rowRight += kernel(p, j);
        }
        withinLeft += rowLeft;
        withinRight -= rowRight;
        between += rowRight - rowLeft;
    }

    return DivergenceScan(n, std::move(raw), std::move(normalized));
}

DivergenceScan scan(const KernelMatrix& kernel) {
    return scan_values(kernel.values());
}

DivergenceScan scan_values(const RowMatrix& values) {
    if (values.rows() != values.cols()) {
        throw InputError("scan: matrix must be square");
    }
    return scan_core(values.rows(), [&](Index i, Index j) { return values(i, j); });
}

DivergenceScan scan_mapped(const RowMatrix& values, std::span<const Index> map) {
    if (values.rows() != values.cols()) {
        throw InputError("scan: matrix must be square");
    }
    if (static_cast<Index>(map.size()) != values.rows()) {
        throw InputError("scan: index map size mismatch");
    }
    return scan_core(values.rows(), [&](Index i, Index j) {
        return values(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]);
    });
}

} // namespace edcp
