#include <doctest.h>

#include <numbers>

#include "pvmcat/states.hpp"

using namespace pvmcat;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("coherent vector") {
    SUBCASE("alpha = 0 is the vacuum") {
        FockVector v = coherent_vector(16, Complex(0.0, 0.0));
        CHECK(std::abs(v.amps()[0] - 1.0) <= 1e-15);
        CHECK(v.amps().tail(15).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("Poisson mean") {
        FockVector v = coherent_vector(64, Complex(1.0, 0.0));
        double nbar = 0.0;
        for (int n = 0; n < 64; ++n) nbar += n * std::norm(v.amps()[n]);
        CHECK(std::abs(nbar - 1.0) <= 1e-10);
        CHECK(std::abs(v.norm() - 1.0) <= 1e-10);
    }
    SUBCASE("cross-route: displaced vacuum") {
        const Complex alpha(1.2, -0.4);
        Vector vac = Vector::Zero(64);
        vac[0] = 1.0;
        Vector displaced = displaced_amplitudes(FockVector(vac), alpha, 64);
        FockVector direct = coherent_vector(64, alpha);
        CHECK((displaced - direct.amps()).cwiseAbs().maxCoeff() <= 1e-8);
    }
    SUBCASE("truncation risk carries the tail mass") {
        CHECK_THROWS_AS(coherent_vector(16, Complex(4.0, 0.0)), TruncationRiskError);
    }
}

TEST_CASE("cat normalization constant") {
    SUBCASE("orthogonal-branch limit") {
        CHECK(cat_norm_constant(CatParams{4.0, 0.0, 1.3}) ==
              doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    }
    SUBCASE("Yurke-Stoler phase") {
        CHECK(cat_norm_constant(CatParams{0.7, 0.0, kPi / 2.0}) ==
              doctest::Approx(1.0 / std::sqrt(2.0)));
    }
    SUBCASE("even cat at |alpha| = 1") {
        CHECK(cat_norm_constant(CatParams{1.0, 0.0, 0.0}) ==
              doctest::Approx(1.0 / std::sqrt(2.0 + 2.0 * std::exp(-2.0))));
    }
    SUBCASE("null odd cat") {
        CHECK_THROWS_AS(cat_norm_constant(CatParams{0.0, 0.0, kPi}), NullStateError);
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(cat_norm_constant(CatParams{-1.0, 0.0, 0.0}), InvalidParameterError);
        CHECK_THROWS_AS(cat_norm_constant(CatParams{1.0, 0.0, 7.0}), InvalidParameterError);
    }
}

TEST_CASE("cat vector") {
    SUBCASE("omega = 0, alpha = 0 is the vacuum") {
        FockVector v = cat_vector(16, CatParams{0.0, 0.0, 0.0});
        CHECK(std::abs(v.amps()[0] - 1.0) <= 1e-12);
    }
    SUBCASE("even cat populates only even levels") {
        FockVector v = cat_vector(64, CatParams{1.0, 0.0, 0.0});
        double leak = 0.0;
        for (int n = 1; n < 64; n += 2) leak = std::max(leak, std::abs(v.amps()[n]));
        CHECK(leak <= 1e-12);
    }
    SUBCASE("odd cat: norm and photon number against the closed form") {
        const double a = 1.0;
        FockVector v = cat_vector(64, CatParams{a, 0.0, kPi});
        CHECK(std::abs(v.norm() - 1.0) <= 1e-10);
        double nbar = 0.0;
        for (int n = 0; n < 64; ++n) nbar += n * std::norm(v.amps()[n]);
        // independent closed form: <n> = |a|^2 (1 - e^{-2|a|^2} cos w) / (1 + e^{-2|a|^2} cos w)
        const double expected =
            a * a * (1.0 - std::exp(-2.0 * a * a) * std::cos(kPi)) /
            (1.0 + std::exp(-2.0 * a * a) * std::cos(kPi));
        CHECK(std::abs(nbar - expected) <= 1e-10);
    }
    SUBCASE("null odd cat is a hard error") {
        CHECK_THROWS_AS(cat_vector(16, CatParams{0.0, 0.0, kPi}), NullStateError);
    }
}

TEST_CASE("cat invariants across a parameter sweep") {
    double worst_norm = 0.0;
    for (double a : {0.0, 0.4, 1.0, 1.8, 3.0})
        for (double om : {0.0, kPi / 2.0, kPi})
            for (double de : {0.0, kPi / 4.0}) {
                if (a == 0.0 && om == kPi) continue;
                FockVector v = cat_vector(96, CatParams{a, de, om});
                worst_norm = std::max(worst_norm, std::abs(v.norm() - 1.0));
            }
    CHECK(worst_norm <= 1e-10);
}

TEST_CASE("cat norm is independent of delta") {
    for (double om : {0.0, 1.1, kPi}) {
        FockVector v1 = cat_vector(64, CatParams{1.3, 0.0, om});
        FockVector v2 = cat_vector(64, CatParams{1.3, 1.9, om});
        CHECK(std::abs(v1.norm() - v2.norm()) <= 1e-12);
    }
}
