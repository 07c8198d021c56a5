#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "edcp/errors.hpp"
#include "edcp/spectrum.hpp"

#include "../support/helpers.hpp"

using namespace edcp;
using Catch::Matchers::WithinAbs;

namespace {

CenteredGram random_symmetric(Index n, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    RowMatrix m(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            double v = normal(eng);
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return CenteredGram(std::move(m));
}

CenteredGram gaussian_gram(Index n, std::uint64_t seed, double beta = 1.0) {
    return center_gram(pairwise_kernel(edcp::test::random_signal(n, 1, seed), {beta}));
}

} // namespace

TEST_CASE("zero matrix has an all-zero spectrum") {
    RowMatrix zero = RowMatrix::Zero(5, 5);
    Spectrum s = top_eigenvalues(CenteredGram(zero), 3);
    REQUIRE(s.eigenvalues == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("two-point gram is minus one half twice") {
    Signal twoPoints(
        [] { RowMatrix d(2, 1); d << 0.0, 1.0; return d; }());
    Spectrum s = top_eigenvalues(center_gram(pairwise_kernel(twoPoints, {1.0})), 2);
    REQUIRE_THAT(s.eigenvalues[0], WithinAbs(-0.5, 1e-14));
    REQUIRE_THAT(s.eigenvalues[1], WithinAbs(-0.5, 1e-14));
}

TEST_CASE("random symmetric matrices match the dense decomposition") {
    for (Index n : {50, 200}) {
        CenteredGram g = random_symmetric(n, 100 + static_cast<std::uint64_t>(n));
        Spectrum s = top_eigenvalues(g, 10);
        std::vector<double> dense = edcp::test::dense_eigenvalues(g.values());
        for (std::size_t i = 0; i < 10; ++i) {
            INFO("n=" << n << " i=" << i);
            REQUIRE(edcp::test::close_rel(s.eigenvalues[i], dense[i], 1e-8));
        }
    }
}

TEST_CASE("centered kernel matrices match the dense decomposition") {
    CenteredGram g = gaussian_gram(250, 42);
    Spectrum s = top_eigenvalues(g, 20);
    std::vector<double> dense = edcp::test::dense_eigenvalues(g.values());
    for (std::size_t i = 0; i < 20; ++i) {
        INFO("i=" << i);
        REQUIRE(edcp::test::close_rel(s.eigenvalues[i], dense[i], 1e-8));
    }
}

TEST_CASE("magnitude ordering and residual bounds hold") {
    CenteredGram g = gaussian_gram(150, 7, 1.5);
    Spectrum s = top_eigenvalues(g, 12);
    for (std::size_t i = 0; i + 1 < s.eigenvalues.size(); ++i) {
        REQUIRE(std::abs(s.eigenvalues[i]) >= std::abs(s.eigenvalues[i + 1]));
    }
    for (double r : s.residualNorms) {
        REQUIRE(r <= s.tolerance);
    }
}

TEST_CASE("full spectrum sums to the trace") {
    CenteredGram g = gaussian_gram(80, 11);
    Spectrum s = top_eigenvalues(g, 80);
    double sum = 0.0;
    for (double v : s.eigenvalues) {
        sum += v;
    }
    REQUIRE(edcp::test::close_rel(sum, g.values().trace(), 1e-8));
}

TEST_CASE("gaussian spectra are nonpositive up to noise and decay fast") {
    CenteredGram g = gaussian_gram(300, 13);
    Spectrum s = top_eigenvalues(g, 300);
    double positive = 0.0;
    double total = 0.0;
    for (double v : s.eigenvalues) {
        positive += std::max(v, 0.0);
        total += std::abs(v);
    }
    REQUIRE(positive <= 0.02 * total);
    REQUIRE(std::abs(s.eigenvalues[19]) <= 0.05 * std::abs(s.eigenvalues[0]));
}

TEST_CASE("leading eigenvalue is stable across nested sample sizes") {
    Signal big = edcp::test::random_signal(1000, 1, 17);
    auto leading = [&](Index n) {
        Signal prefix = big.slice(0, n);
        return top_eigenvalues(center_gram(pairwise_kernel(prefix, {1.0})), 1)
            .eigenvalues[0];
    };
    double l250 = leading(250);
    double l500 = leading(500);
    double l1000 = leading(1000);
    REQUIRE(std::abs(l250 - l500) <= 0.1 * std::abs(l500));
    REQUIRE(std::abs(l500 - l1000) <= 0.1 * std::abs(l1000));
}

TEST_CASE("m outside [1, n] is rejected") {
    CenteredGram g = gaussian_gram(20, 23);
    REQUIRE_THROWS_AS(top_eigenvalues(g, 0), InputError);
    REQUIRE_THROWS_AS(top_eigenvalues(g, 21), InputError);
}
