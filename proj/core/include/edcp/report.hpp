#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "edcp/matrix.hpp"

namespace edcp {

enum class Method { Asymptotic, Permutation, Long };

std::string to_string(Method method);
Method method_from_string(const std::string& name);

struct PhaseTimings {
    double scan = 0.0;       // kernel build + divergence scan
    double spectrum = 0.0;   // centering + eigenvalues
    double simulation = 0.0; // limit simulation or permutation replicates
    double total = 0.0;
};

/// Outcome of one hypothesis test, serializable to the report JSON schema.
/// kStar counts the points left of the detected boundary (1-based split).
struct TestReport {
    Method method = Method::Asymptotic;
    Index n = 0;
    Index d = 0;
    double beta = 1.0;
    double alpha = 0.05;
    Index kStar = 0;
    double tStar = 0.0;
    double pValue = 1.0;
    bool reject = false;
    Index eigenvaluesUsed = 0; // 0 for the permutation method
    Index replicates = 0;
    Index gridPoints = 0; // 0 for the permutation method
    std::uint64_t seed = 0;
    PhaseTimings elapsedMillis;
    std::optional<std::array<Index, 2>> refinedWindow; // long mode only, 1-based inclusive
};

/// JSON serialization (object with the schema's field names; elapsedMillis is
/// an object with per-phase entries). Round-trips losslessly.
std::string to_json(const TestReport& report);
TestReport report_from_json(const std::string& text);

void write_report(const TestReport& report, const std::string& path);
TestReport read_report(const std::string& path);

} // namespace edcp
