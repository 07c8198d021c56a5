#pragma once

#include <span>
#include <vector>

#include "edcp/kernel.hpp"

namespace edcp {

/// Per-split statistics of a full scan. Split indices k count the points in
/// the left block, so valid splits are k in [2, n-2] (1-based boundary after
/// the k-th observation).
class DivergenceScan {
public:
    DivergenceScan(Index n, std::vector<double> raw, std::vector<double> normalized);

    Index n() const { return n_; }
    Index firstSplit() const { return 2; }
    Index lastSplit() const { return n_ - 2; }

    /// Empirical divergence between the first k and last n-k observations.
    double raw_at(Index k) const;
    /// raw_at(k) scaled by k^2 (n-k)^2 / (n^2 (n-1)).
    double normalized_at(Index k) const;

    /// Smallest maximizing split of the normalized statistic.
    Index kStar() const { return kStar_; }
    /// Maximal normalized value, the test statistic t*.
    double tStar() const { return tStar_; }

    const std::vector<double>& raw() const { return raw_; }
    const std::vector<double>& normalized() const { return normalized_; }

private:
    Index n_;
    std::vector<double> raw_;        // index 0 holds k = 2
    std::vector<double> normalized_; // same layout
    Index kStar_ = 2;
    double tStar_ = 0.0;
};

/// Normalization factor k^2 (n-k)^2 / (n^2 (n-1)) applied to the divergence.
double scan_weight(Index k, Index n);

/// Direct evaluation of the empirical divergence at one split by summing all
/// pairs. O(n^2) per call; this is the reference the fast scan is checked
/// against. Throws InputError when k is outside [2, n-2].
double divergence_at(const KernelMatrix& kernel, Index k);

/// Same statistic computed straight from the signal without materializing the
/// kernel matrix; O(n^2) time, O(1) extra memory. Usable far beyond the
/// full-matrix cap.
double divergence_from_signal(const Signal& signal, Index k, const KernelConfig& config);

/// Full scan over k in [2, n-2] in O(n^2) total time. The three pair sums are
/// carried across splits: moving the boundary one point to the right shifts
/// that point's kernel row between the between/within sums at O(n) cost.
/// Requires n >= 4.
DivergenceScan scan(const KernelMatrix& kernel);

/// Scan core over raw symmetric kernel values (used to rescan permuted or
/// scratch matrices without re-wrapping them).
DivergenceScan scan_values(const RowMatrix& values);

/// Scan reading entry (i, j) as values(map[i], map[j]), without materializing
/// the reordered matrix. Bit-equal to rebuilding and rescanning.
DivergenceScan scan_mapped(const RowMatrix& values, std::span<const Index> map);

} // namespace edcp
