#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "edcp/errors.hpp"
#include "edcp/experiment.hpp"

using namespace edcp;

namespace {

TestConfig quick_config() {
    TestConfig cfg;
    cfg.eigenvalues = 20;
    cfg.replicates = 99;
    cfg.gridPoints = 200;
    return cfg;
}

// Strips the trailing elapsedMillis column from every CSV row.
std::string without_timings(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        out << line.substr(0, line.rfind(',')) << '\n';
    }
    return out.str();
}

} // namespace

TEST_CASE("cells are deterministic for any thread count") {
    GeneratorSpec spec{GeneratorKind::MeanShift, 120, 0.5, 2.0, 404};
    CellResult a = run_cell(spec, Method::Asymptotic, quick_config(), 12, 1);
    CellResult b = run_cell(spec, Method::Asymptotic, quick_config(), 12, 3);
    REQUIRE(a.rejections == b.rejections);
    REQUIRE(a.rejectionRate == b.rejectionRate);
    REQUIRE(a.meanAbsError == b.meanAbsError);
    REQUIRE(a.locationMean == b.locationMean);
    REQUIRE(a.locationVariance == b.locationVariance);
}

TEST_CASE("an easy shift is detected in every trial with small error") {
    GeneratorSpec spec{GeneratorKind::MeanShift, 200, 0.5, 3.0, 500};
    CellResult cell = run_cell(spec, Method::Asymptotic, quick_config(), 10);
    REQUIRE(cell.rejectionRate == 1.0);
    REQUIRE(cell.meanAbsError <= 5.0);
    REQUIRE(std::abs(cell.locationMean - 100.0) <= 5.0);
}

TEST_CASE("null cells report NaN location error and low rejection") {
    GeneratorSpec spec{GeneratorKind::IidNull, 60, 0.5, 0.0, 600};
    CellResult cell = run_cell(spec, Method::Asymptotic, quick_config(), 24);
    REQUIRE(std::isnan(cell.meanAbsError));
    REQUIRE(cell.rejectionRate <= 0.3);
}

TEST_CASE("all three methods run inside a cell") {
    GeneratorSpec spec{GeneratorKind::MeanShift, 80, 0.5, 2.5, 700};
    for (Method method : {Method::Asymptotic, Method::Permutation, Method::Long}) {
        CellResult cell = run_cell(spec, method, quick_config(), 6);
        REQUIRE(cell.trials == 6);
        REQUIRE(cell.rejectionRate >= 0.5);
    }
}

TEST_CASE("grids load from JSON and reject malformed input") {
    {
        std::ofstream out("grid_ok.json");
        out << R"({"kind":"mean-shift","n":[50,100],"parameter":[1.0,2.0],
                   "methods":["asymptotic","permutation"],"trials":5,
                   "seed":9,"alpha":0.05,"replicates":49,"gridPoints":100,
                   "eigenvalues":10})";
    }
    ExperimentGrid grid = load_grid("grid_ok.json");
    REQUIRE(grid.kind == GeneratorKind::MeanShift);
    REQUIRE(grid.lengths == std::vector<Index>{50, 100});
    REQUIRE(grid.parameters == std::vector<double>{1.0, 2.0});
    REQUIRE(grid.methods.size() == 2);
    REQUIRE(grid.trials == 5);
    REQUIRE(grid.config.replicates == 49);
    std::remove("grid_ok.json");

    {
        std::ofstream out("grid_bad.json");
        out << R"({"kind":"upward","n":[10],"methods":["asymptotic"]})";
    }
    REQUIRE_THROWS_AS(load_grid("grid_bad.json"), InputError);
    std::remove("grid_bad.json");
    REQUIRE_THROWS_AS(load_grid("grid_missing.json"), InputError);
}

TEST_CASE("grid runs produce one row per cell and rerun identically") {
    ExperimentGrid grid;
    grid.kind = GeneratorKind::MeanShift;
    grid.lengths = {40, 60};
    grid.parameters = {2.0};
    grid.methods = {Method::Asymptotic};
    grid.trials = 4;
    grid.config = quick_config();
    grid.seed = 12;

    std::string csv = run_grid(grid, "grid_out.csv");
    std::ifstream in("grid_out.csv");
    REQUIRE(in.good());
    std::size_t lines = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++lines;
    }
    REQUIRE(lines == 1 + 2); // header + one row per (n, parameter, method)
    std::remove("grid_out.csv");

    // Statistical columns are bit-identical on rerun; wall-clock is not.
    std::string again = run_grid(grid, "");
    REQUIRE(without_timings(csv) == without_timings(again));
}

TEST_CASE("run_cell validates the trial count") {
    GeneratorSpec spec{GeneratorKind::IidNull, 50, 0.5, 0.0, 0};
    REQUIRE_THROWS_AS(run_cell(spec, Method::Asymptotic, quick_config(), 0), InputError);
}
