#pragma once

#include <cstdint>
#include <string>

#include "edcp/matrix.hpp"

namespace edcp {

/// An ordered sequence of n observations in R^d. Rows are observations, kept
/// in temporal order; every entry is finite.
class Signal {
public:
    explicit Signal(RowMatrix data);

    Index n() const { return data_.rows(); }
    Index d() const { return data_.cols(); }
    const RowMatrix& data() const { return data_; }

    /// Contiguous slice of observations [first, first + count).
    Signal slice(Index first, Index count) const;

private:
    RowMatrix data_;
};

enum class GeneratorKind { MeanShift, VarianceShift, TailShift, IidNull };

/// Synthetic-signal recipe: the first floor(n * changeFraction) points follow
/// the pre-change law N(0,1); the remainder follow the post-change law selected
/// by `kind` with `parameter` (mean c, variance sigma^2, or degrees of freedom
/// v). IidNull draws the whole signal from N(0,1).
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::IidNull;
    Index n = 0;
    double changeFraction = 0.5;
    double parameter = 0.0;
    std::uint64_t seed = 0;

    /// Index convention: points 1..changeIndex() are pre-change.
    Index changeIndex() const;
};

/// Deterministic function of the spec: same spec gives a bit-identical signal.
Signal generate(const GeneratorSpec& spec);

/// Reads a CSV signal (one observation per row, comma-separated, '.' decimal,
/// optional single header row). Throws InputError naming the offending
/// row/column on parse failure, ragged rows, or non-finite values.
Signal load_signal(const std::string& path, bool hasHeader = false);

/// Writes a signal as CSV with round-trippable precision.
void save_signal(const Signal& signal, const std::string& path);

std::string to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(const std::string& name);

} // namespace edcp
