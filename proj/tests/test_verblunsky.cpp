#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "cmvdvz/verblunsky.hpp"

using namespace cmvdvz;

TEST_CASE("validation accepts open interval and derives rho, kappa") {
    VerblunskySequence seq({0.0, 0.0, 0.0});
    for (std::size_t n = 0; n < 3; ++n) {
        CHECK(seq.rho(n) == 1.0);
        CHECK(seq.kappa(n) == 1.0);
    }

    VerblunskySequence s2({0.6});
    CHECK(s2.rho(0) == Catch::Approx(0.8).margin(1e-15));

    CHECK_THROWS_AS(VerblunskySequence({0.5, 1.0}), CoefficientOutOfRange);
    try {
        VerblunskySequence({0.5, 1.0});
    } catch (const CoefficientOutOfRange& e) {
        CHECK(e.index == 1);
        CHECK(e.value == 1.0);
    }
    CHECK_THROWS_AS(VerblunskySequence({-1.0}), CoefficientOutOfRange);
    CHECK_THROWS_AS(VerblunskySequence({}), ParamOutOfRange);
}

TEST_CASE("complex inputs must be real") {
    using cd = std::complex<double>;
    CHECK_THROWS_AS(VerblunskySequence::validated({cd(0.1, 0.2)}), NonRealCoefficient);
    VerblunskySequence ok = VerblunskySequence::validated({cd(0.1, 0.0), cd(-0.3, 0.0)});
    CHECK(ok.alpha(1) == -0.3);
}

TEST_CASE("mass point family") {
    VerblunskySequence seq = mass_point_sequence(0.5, 3);
    CHECK(seq.alpha(0) == Catch::Approx(0.5).margin(1e-16));
    CHECK(seq.alpha(1) == Catch::Approx(1.0 / 3.0).margin(1e-16));
    CHECK(seq.alpha(2) == Catch::Approx(0.25).margin(1e-16));
    CHECK(seq.kappa(1) == Catch::Approx(2.0 / std::sqrt(3.0)).margin(1e-15));

    VerblunskySequence second = second_kind_sequence(0.5, 3);
    for (std::size_t n = 0; n < 3; ++n)
        CHECK(second.alpha(n) == -seq.alpha(n));

    CHECK_THROWS_AS(mass_point_sequence(1.0, 3), ParamOutOfRange);
    CHECK_THROWS_AS(mass_point_sequence(0.0, 3), ParamOutOfRange);
}

TEST_CASE("kappa product matches the closed form for the mass point family") {
    const double m = 0.5;
    VerblunskySequence seq = mass_point_sequence(m, 31);
    for (std::size_t n = 1; n <= 30; ++n) {
        const double closed =
            std::sqrt(seq.alpha(n) / ((1.0 - m) * seq.alpha(n - 1)));
        CHECK(std::abs(seq.kappa(n) - closed) < 1e-12 * closed);
    }
}

TEST_CASE("alpha^2 + rho^2 = 1 to machine precision") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-0.999, 0.999);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> a(40);
        for (double& v : a) v = dist(rng);
        VerblunskySequence seq(a);
        for (std::size_t n = 0; n < seq.size(); ++n) {
            const double r = seq.alpha(n) * seq.alpha(n) + seq.rho(n) * seq.rho(n);
            CHECK(std::abs(r - 1.0) < 4e-16);
        }
        for (std::size_t n = 0; n < seq.size(); ++n)
            CHECK(seq.kappa(n + 1) == Catch::Approx(seq.kappa(n) / seq.rho(n)));
    }
}

TEST_CASE("symmetrized sequence interleaves zeros") {
    VerblunskySequence seq({0.3, -0.5});
    VerblunskySequence hat = symmetrized_sequence(seq);
    REQUIRE(hat.size() == 4);
    CHECK(hat.alpha(0) == 0.0);
    CHECK(hat.alpha(1) == 0.3);
    CHECK(hat.alpha(2) == 0.0);
    CHECK(hat.alpha(3) == -0.5);
}

TEST_CASE("convention alpha_{-1} = -1 is exposed but never stored") {
    VerblunskySequence seq({0.2});
    CHECK(seq.alpha_or_convention(-1) == -1.0);
    CHECK(seq.alpha_or_convention(0) == 0.2);
    CHECK(seq.size() == 1);
    CHECK_THROWS_AS(seq.alpha(1), IndexOutOfRange);
}
