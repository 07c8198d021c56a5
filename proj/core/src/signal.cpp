#include "edcp/signal.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "edcp/errors.hpp"
#include "edcp/rng.hpp"

namespace edcp {

Signal::Signal(RowMatrix data) : data_(std::move(data)) {
    if (data_.rows() < 1 || data_.cols() < 1) {
        throw InputError("signal must have at least one row and one column");
    }
    if (!data_.allFinite()) {
        throw InputError("signal contains non-finite values");
    }
}

Signal Signal::slice(Index first, Index count) const {
    if (first < 0 || count < 1 || first + count > n()) {
        throw InputError("signal slice out of range");
    }
    return Signal(data_.middleRows(first, count));
}

Index GeneratorSpec::changeIndex() const {
    return static_cast<Index>(std::floor(static_cast<double>(n) * changeFraction));
}

namespace {

void validate(const GeneratorSpec& spec) {
    if (spec.n < 2) {
        throw InputError("generator: n must be >= 2");
    }
    if (spec.kind == GeneratorKind::IidNull) {
        return;
    }
    if (!(spec.changeFraction > 0.0 && spec.changeFraction < 1.0)) {
        throw InputError("generator: changeFraction must lie in (0,1)");
    }
    Index k = spec.changeIndex();
    if (k < 1 || spec.n - k < 1) {
        throw InputError("generator: both segments need at least one point");
    }
    if (spec.kind == GeneratorKind::VarianceShift && !(spec.parameter > 0.0)) {
        throw InputError("generator: variance parameter must be positive");
    }
    if (spec.kind == GeneratorKind::TailShift && !(spec.parameter > 0.0)) {
        throw InputError("generator: degrees of freedom must be positive");
    }
}

// Student-t as a normal over the square root of a scaled chi-square. Draws
// that round to non-finite values (possible only via a zero chi-square
// underflow) are resampled.
double draw_student_t(std::mt19937_64& eng, NormalSampler& normal,
                      std::chi_squared_distribution<double>& chi2, double v) {
    for (;;) {
        double z = normal();
        double c = chi2(eng);
        double t = z / std::sqrt(c / v);
        if (std::isfinite(t)) {
            return t;
        }
    }
}

} // namespace

Signal generate(const GeneratorSpec& spec) {
    validate(spec);
    auto eng = make_engine(spec.seed);
    NormalSampler normal(eng);

    RowMatrix data(spec.n, 1);
    Index k = spec.kind == GeneratorKind::IidNull ? spec.n : spec.changeIndex();
    for (Index i = 0; i < k; ++i) {
        data(i, 0) = normal();
    }
    switch (spec.kind) {
    case GeneratorKind::IidNull:
        break;
    case GeneratorKind::MeanShift:
        for (Index i = k; i < spec.n; ++i) {
            data(i, 0) = normal() + spec.parameter;
        }
        break;
    case GeneratorKind::VarianceShift: {
        double sigma = std::sqrt(spec.parameter);
        for (Index i = k; i < spec.n; ++i) {
            data(i, 0) = normal() * sigma;
        }
        break;
    }
    case GeneratorKind::TailShift: {
        std::chi_squared_distribution<double> chi2(spec.parameter);
        for (Index i = k; i < spec.n; ++i) {
            data(i, 0) = draw_student_t(eng, normal, chi2, spec.parameter);
        }
        break;
    }
    }
    return Signal(std::move(data));
}

namespace {

double parse_field(const std::string& field, std::size_t row, std::size_t col) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    while (begin != end && (*begin == ' ' || *begin == '\t')) {
        ++begin;
    }
    while (end != begin && (*(end - 1) == ' ' || *(end - 1) == '\t' || *(end - 1) == '\r')) {
        --end;
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end) {
        std::ostringstream msg;
        msg << "parse error at row " << row << ", column " << col << ": '"
            << std::string(begin, end) << "' is not a number";
        throw InputError(msg.str());
    }
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "non-finite value at row " << row << ", column " << col;
        throw InputError(msg.str());
    }
    return value;
}

} // namespace

Signal load_signal(const std::string& path, bool hasHeader) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "' for reading");
    }

    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineNo = 0;
    std::size_t dataRow = 0;
    std::size_t columns = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (hasHeader && lineNo == 1) {
            continue;
        }
        // Tolerate a trailing newline / blank lines at EOF.
        bool blank = true;
        for (char c : line) {
            if (c != ' ' && c != '\t' && c != '\r') {
                blank = false;
                break;
            }
        }
        if (blank) {
            continue;
        }
        ++dataRow;
        std::vector<double> values;
        std::size_t start = 0;
        std::size_t col = 0;
        for (;;) {
            std::size_t comma = line.find(',', start);
            std::string field = comma == std::string::npos
                                    ? line.substr(start)
                                    : line.substr(start, comma - start);
            ++col;
            values.push_back(parse_field(field, dataRow, col));
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        if (columns == 0) {
            columns = values.size();
        } else if (values.size() != columns) {
            std::ostringstream msg;
            msg << "row " << dataRow << " has " << values.size()
                << " columns, expected " << columns;
            throw InputError(msg.str());
        }
        rows.push_back(std::move(values));
    }
    if (in.bad()) {
        throw InputError("I/O error while reading '" + path + "'");
    }
    if (rows.empty()) {
        throw InputError("'" + path + "' contains no data rows");
    }

    RowMatrix data(static_cast<Index>(rows.size()), static_cast<Index>(columns));
    for (Index i = 0; i < data.rows(); ++i) {
        for (Index j = 0; j < data.cols(); ++j) {
            data(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return Signal(std::move(data));
}

void save_signal(const Signal& signal, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot open '" + path + "' for writing");
    }
    out.precision(std::numeric_limits<double>::max_digits10);
    const RowMatrix& data = signal.data();
    for (Index i = 0; i < data.rows(); ++i) {
        for (Index j = 0; j < data.cols(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << data(i, j);
        }
        out << '\n';
    }
    if (!out) {
        throw InputError("I/O error while writing '" + path + "'");
    }
}

std::string to_string(GeneratorKind kind) {
    switch (kind) {
    case GeneratorKind::MeanShift: return "mean-shift";
    case GeneratorKind::VarianceShift: return "variance-shift";
    case GeneratorKind::TailShift: return "tail-shift";
    case GeneratorKind::IidNull: return "iid-null";
    }
    return "unknown";
}

GeneratorKind generator_kind_from_string(const std::string& name) {
    if (name == "mean-shift" || name == "mean") return GeneratorKind::MeanShift;
    if (name == "variance-shift" || name == "variance") return GeneratorKind::VarianceShift;
    if (name == "tail-shift" || name == "tail") return GeneratorKind::TailShift;
    if (name == "iid-null" || name == "null") return GeneratorKind::IidNull;
    throw InputError("unknown generator kind '" + name + "'");
}

} // namespace edcp
