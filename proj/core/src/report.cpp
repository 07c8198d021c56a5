#include "edcp/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "edcp/errors.hpp"

namespace edcp {

std::string to_string(Method method) {
    switch (method) {
    case Method::Asymptotic: return "asymptotic";
    case Method::Permutation: return "permutation";
    case Method::Long: return "long";
    }
    return "unknown";
}

Method method_from_string(const std::string& name) {
    if (name == "asymptotic") return Method::Asymptotic;
    if (name == "permutation") return Method::Permutation;
    if (name == "long") return Method::Long;
    throw InputError("unknown method '" + name + "'");
}

namespace {

nlohmann::ordered_json to_json_object(const TestReport& r) {
    nlohmann::ordered_json j;
    j["method"] = to_string(r.method);
    j["n"] = r.n;
    j["d"] = r.d;
    j["beta"] = r.beta;
    j["alpha"] = r.alpha;
    j["kStar"] = r.kStar;
    j["tStar"] = r.tStar;
    j["pValue"] = r.pValue;
    j["reject"] = r.reject;
    j["eigenvaluesUsed"] = r.eigenvaluesUsed;
    j["replicates"] = r.replicates;
    j["gridPoints"] = r.gridPoints;
    j["seed"] = r.seed;
    j["elapsedMillis"] = {{"scan", r.elapsedMillis.scan},
                          {"spectrum", r.elapsedMillis.spectrum},
                          {"simulation", r.elapsedMillis.simulation},
                          {"total", r.elapsedMillis.total}};
    if (r.refinedWindow) {
        j["refinedWindow"] = {(*r.refinedWindow)[0], (*r.refinedWindow)[1]};
    }
    return j;
}

TestReport from_json_object(const nlohmann::json& j) {
    TestReport r;
    try {
        r.method = method_from_string(j.at("method").get<std::string>());
        r.n = j.at("n").get<Index>();
        r.d = j.at("d").get<Index>();
        r.beta = j.at("beta").get<double>();
        r.alpha = j.at("alpha").get<double>();
        r.kStar = j.at("kStar").get<Index>();
        r.tStar = j.at("tStar").get<double>();
        r.pValue = j.at("pValue").get<double>();
        r.reject = j.at("reject").get<bool>();
        r.eigenvaluesUsed = j.at("eigenvaluesUsed").get<Index>();
        r.replicates = j.at("replicates").get<Index>();
        r.gridPoints = j.at("gridPoints").get<Index>();
        r.seed = j.at("seed").get<std::uint64_t>();
        const auto& e = j.at("elapsedMillis");
        r.elapsedMillis.scan = e.at("scan").get<double>();
        r.elapsedMillis.spectrum = e.at("spectrum").get<double>();
        r.elapsedMillis.simulation = e.at("simulation").get<double>();
        r.elapsedMillis.total = e.at("total").get<double>();
        if (j.contains("refinedWindow")) {
            const auto& w = j.at("refinedWindow");
            r.refinedWindow = std::array<Index, 2>{w.at(0).get<Index>(), w.at(1).get<Index>()};
        }
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed report JSON: ") + ex.what());
    }
    return r;
}

} // namespace

std::string to_json(const TestReport& report) {
    return to_json_object(report).dump(2);
}

TestReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw InputError("malformed report JSON");
    }
    return from_json_object(j);
}

void write_report(const TestReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot open '" + path + "' for writing");
    }
    out << to_json(report) << '\n';
    if (!out) {
        throw InputError("I/O error while writing '" + path + "'");
    }
}

TestReport read_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return report_from_json(buffer.str());
}

} // namespace edcp
