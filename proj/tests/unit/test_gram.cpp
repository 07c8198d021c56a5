#include <catch2/catch_amalgamated.hpp>

#include "edcp/errors.hpp"
#include "edcp/gram.hpp"

#include "../support/helpers.hpp"

using namespace edcp;
using Catch::Matchers::WithinAbs;

namespace {

Signal column_signal(std::initializer_list<double> values) {
    RowMatrix data(static_cast<Index>(values.size()), 1);
    Index i = 0;
    for (double v : values) {
        data(i++, 0) = v;
    }
    return Signal(std::move(data));
}

} // namespace

TEST_CASE("centered gram of two points") {
    CenteredGram g = center_gram(pairwise_kernel(column_signal({0, 1}), {1.0}));
    REQUIRE_THAT(g(0, 0), WithinAbs(-0.5, 1e-15));
    REQUIRE_THAT(g(1, 1), WithinAbs(-0.5, 1e-15));
    REQUIRE_THAT(g(0, 1), WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(g(1, 0), WithinAbs(0.0, 1e-15));
}

TEST_CASE("centered gram of three points") {
    CenteredGram g = center_gram(pairwise_kernel(column_signal({0, 1, 2}), {1.0}));
    const double want[3][3] = {{-5.0 / 9.0, -1.0 / 18.0, 1.0 / 9.0},
                               {-1.0 / 18.0, -2.0 / 9.0, -1.0 / 18.0},
                               {1.0 / 9.0, -1.0 / 18.0, -5.0 / 9.0}};
    for (Index i = 0; i < 3; ++i) {
        for (Index j = 0; j < 3; ++j) {
            REQUIRE_THAT(g(i, j), WithinAbs(want[i][j], 1e-12));
        }
    }
}

TEST_CASE("constant signals center to the zero matrix") {
    CenteredGram g = center_gram(pairwise_kernel(edcp::test::constant_signal(6, 1, 2.0), {1.0}));
    REQUIRE(g.values().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("centered gram is symmetric by construction") {
    Signal s = edcp::test::random_signal(48, 2, 7);
    CenteredGram g = center_gram(pairwise_kernel(s, {1.0}));
    REQUIRE(g.values() == g.values().transpose().eval());
}

TEST_CASE("centering does not depend on the thread count") {
    Signal s = edcp::test::random_signal(64, 1, 13);
    KernelMatrix k = pairwise_kernel(s, {1.0});
    REQUIRE(center_gram(k, 1).values() == center_gram(k, 4).values());
}

TEST_CASE("trace equals minus the mean off-diagonal kernel value") {
    Signal s = edcp::test::random_signal(30, 1, 19);
    KernelMatrix k = pairwise_kernel(s, {1.0});
    double eta = k.values().sum() / (30.0 * 29.0);
    REQUIRE_THAT(center_gram(k).values().trace(), WithinAbs(-eta, 1e-12));
}
