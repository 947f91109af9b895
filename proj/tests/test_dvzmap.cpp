#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "cmvdvz/dvz.hpp"

using namespace cmvdvz;

namespace {

DvzParameters random_params(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> lam(0.3, 2.5);
    std::uniform_real_distribution<double> sgn(0.0, 1.0);
    std::uniform_real_distribution<double> alpha(-0.9, 0.9);
    std::vector<double> a(n);
    for (double& v : a) v = alpha(rng);
    const double l1 = (sgn(rng) < 0.5 ? -1.0 : 1.0) * lam(rng);
    return DvzParameters(lam(rng), l1, VerblunskySequence(a));
}

} // namespace

TEST_CASE("free case inversion recovers the circles") {
    SymTridiagonal j = dvz_forward(free_sequence(6), 1.0, 2.0, 6);
    // points z_n = sum b + i a_n: even on |z-2| = 1, odd on |z-2| = 2
    DvzInversion inv = dvz_invert(j);
    REQUIRE(inv.ok());
    CHECK(inv.params->lambda0 == Catch::Approx(1.0).margin(1e-13));
    CHECK(inv.params->lambda1 == Catch::Approx(2.0).margin(1e-13));
    for (double a : inv.params->alphas.alphas()) CHECK(std::abs(a) < 1e-13);
    CHECK(inv.max_residual < 1e-13);
}

TEST_CASE("round trip over random parameters") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 12;
        DvzParameters p = random_params(rng, n);
        DvzInversion inv = dvz_invert(dvz_forward(p, n));
        REQUIRE(inv.ok());
        CHECK(std::abs(inv.params->lambda0 - p.lambda0) < 1e-12);
        CHECK(std::abs(inv.params->lambda1 - p.lambda1) < 1e-12);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(inv.params->alphas.alpha(i) - p.alphas.alpha(i)) < 1e-12);
    }
}

TEST_CASE("perturbed diagonal breaks the circle condition") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 12;
        DvzParameters p = random_params(rng, n);
        SymTridiagonal j = dvz_forward(p, n);
        std::vector<double> diag = j.diag();
        diag[1] += 1e-3;
        DvzInversion inv = dvz_invert(SymTridiagonal(diag, j.off(), n), 1e-9);
        CHECK_FALSE(inv.ok());
        CHECK(inv.max_residual > 1e-9);
    }
}

TEST_CASE("degenerate and malformed inputs") {
    SymTridiagonal tiny({1.0, 2.0}, {0.5}, 2);
    CHECK_THROWS_AS(dvz_invert(tiny), DegenerateInput);

    SymTridiagonal negative({1.0, 2.0, 1.0}, {0.5, -0.5}, 3);
    CHECK_THROWS_AS(dvz_invert(negative), DomainError);
}

TEST_CASE("recovered coefficients must stay inside (-1,1)") {
    // valid circles for rows 0..n-2, but the final diagonal entry pushes the
    // last partial sum outside the even circle
    DvzParameters p(1.0, 2.0, VerblunskySequence({0.1, 0.2, 0.3, 0.1}));
    SymTridiagonal j = dvz_forward(p, 4);
    std::vector<double> diag = j.diag();
    diag[3] += 5.0;
    DvzInversion inv = dvz_invert(SymTridiagonal(diag, j.off(), 4));
    CHECK_FALSE(inv.ok());
    CHECK(inv.reason.find("outside") != std::string::npos);
}

TEST_CASE("scaling identity") {
    std::mt19937 rng(31);
    DvzParameters p = random_params(rng, 8);
    SymTridiagonal a = dvz_forward(p.alphas, p.lambda0, p.lambda1, 8);
    SymTridiagonal b = dvz_forward(p.alphas, 1.0, p.lambda1 / p.lambda0, 8);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(a.diag(i) == Catch::Approx(p.lambda0 * b.diag(i)).margin(1e-13));
        if (i + 1 < 8)
            CHECK(a.off(i) == Catch::Approx(p.lambda0 * b.off(i)).margin(1e-13));
    }
}

TEST_CASE("sign flip of lambda0 flips even-index coefficients") {
    std::mt19937 rng(37);
    DvzParameters p = random_params(rng, 9);
    std::vector<double> flipped = p.alphas.alphas();
    for (std::size_t i = 0; i < flipped.size(); i += 2) flipped[i] = -flipped[i];
    SymTridiagonal a = dvz_forward(p.alphas, -p.lambda0, p.lambda1, 9);
    SymTridiagonal b =
        dvz_forward(VerblunskySequence(flipped), p.lambda0, p.lambda1, 9);
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(a.diag(i) == Catch::Approx(b.diag(i)).margin(1e-14));
        if (i + 1 < 9) CHECK(a.off(i) == Catch::Approx(b.off(i)).margin(1e-14));
    }
}

TEST_CASE("canonical representative has positive lambda0") {
    CHECK_THROWS_AS(DvzParameters(-1.0, 1.0, free_sequence(3)), ParamOutOfRange);
    CHECK_THROWS_AS(DvzParameters(1.0, 0.0, free_sequence(3)), ZeroLambda);
}
