#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "cmvdvz/banded.hpp"
#include "cmvdvz/opuc.hpp"
#include "cmvdvz/verify.hpp"

using namespace cmvdvz;

namespace {

VerblunskySequence random_seq(std::mt19937& rng, std::size_t n, double bound = 0.95) {
    std::uniform_real_distribution<double> dist(-bound, bound);
    std::vector<double> a(n);
    for (double& v : a) v = dist(rng);
    return VerblunskySequence(a);
}

} // namespace

TEST_CASE("free factors at size 4") {
    VerblunskySequence seq = free_sequence(4);
    SymTridiagonal l = build_L(seq, 4);
    CHECK(l.at(0, 1) == 1.0);
    CHECK(l.at(0, 0) == 0.0);
    CHECK(l.at(2, 3) == 1.0);
    CHECK(l.at(1, 2) == 0.0);
    CHECK(l.boundary_clean_rows() == 4);

    SymTridiagonal m = build_M(seq, 4);
    CHECK(m.at(0, 0) == 1.0);
    CHECK(m.at(1, 2) == 1.0);
    CHECK(m.at(0, 1) == 0.0);
    CHECK(m.at(3, 3) == 0.0);  // truncated trailing block, scalar alpha_3
    CHECK(m.boundary_clean_rows() == 3);
}

TEST_CASE("theta block sits in the upper-left of L") {
    SymTridiagonal l = build_L(VerblunskySequence({0.6, 0.1, 0.1, 0.1}), 4);
    CHECK(l.at(0, 0) == Catch::Approx(0.6));
    CHECK(l.at(0, 1) == Catch::Approx(0.8));
    CHECK(l.at(1, 1) == Catch::Approx(-0.6));
}

TEST_CASE("L and M are involutions on complete blocks") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 32;
        VerblunskySequence seq = random_seq(rng, n, 0.999);
        const BandedMatrix lb = BandedMatrix::from(build_L(seq, n));
        const BandedMatrix mb = BandedMatrix::from(build_M(seq, n));
        const BandedMatrix id = BandedMatrix::identity(n);
        CHECK((lb * lb - id).max_abs_window(0, n - 1) < 1e-15);
        CHECK((mb * mb - id).max_abs_window(0, n - 2) < 1e-15);
    }
}

TEST_CASE("free CMV acts as the shift on the Laurent basis") {
    BandedMatrix c = build_cmv(free_sequence(4), 4);
    // z chi_0 = chi_1, z chi_1 = chi_3, z chi_2 = chi_0
    CHECK(c.at(0, 1) == 1.0);
    CHECK(c.at(1, 3) == 1.0);
    CHECK(c.at(2, 0) == 1.0);
}

TEST_CASE("CMV rows are orthonormal away from the boundary") {
    std::mt19937 rng(5);
    const std::size_t n = 16;
    VerblunskySequence seq = random_seq(rng, n);
    BandedMatrix c = build_cmv(seq, n);
    BandedMatrix gram = c * c.transpose();
    CHECK((gram - BandedMatrix::identity(n)).max_abs_window(0, n - 2) < 1e-14);
}

TEST_CASE("square identity (L+M)^2 - 2I = C + C^t on interior entries") {
    std::mt19937 rng(9);
    const std::size_t n = 32;
    for (int trial = 0; trial < 50; ++trial) {
        VerblunskySequence seq = random_seq(rng, n);
        CHECK(matrix_identity_residual(seq, n) < 1e-13);
    }
}

TEST_CASE("pencil entries") {
    SECTION("free case, lambda = 2") {
        SymTridiagonal k = build_K(free_sequence(6), 1.0, 2.0, 6);
        CHECK(k.diag() == std::vector<double>{2, 0, 0, 0, 0, 0});
        CHECK(k.off() == std::vector<double>{1, 2, 1, 2, 1});
    }
    SECTION("degree one coefficient sequence") {
        const double alpha = 0.6, rho = 0.8, lambda = 1.7;
        SymTridiagonal k = build_K(bernstein_szego_sequence(alpha, 8), 1.0, lambda, 8);
        CHECK(k.off(0) == Catch::Approx(rho));
        CHECK(k.diag(0) == Catch::Approx(alpha + lambda));
        CHECK(k.diag(1) == Catch::Approx(-alpha));
        for (std::size_t i = 2; i < 8; ++i) CHECK(k.diag(i) == Catch::Approx(0.0).margin(1e-16));
        for (std::size_t i = 1; i < 7; ++i)
            CHECK(k.off(i) == Catch::Approx(i % 2 == 1 ? lambda : 1.0));
    }
    SECTION("mass point family, m = 1/2, lambda = 2") {
        SymTridiagonal k = build_K(mass_point_sequence(0.5, 4), 1.0, 2.0, 4);
        CHECK(k.diag(0) == Catch::Approx(2.5));
        CHECK(k.off(0) == Catch::Approx(std::sqrt(3.0) / 2.0));
        CHECK(k.diag(1) == Catch::Approx(1.0 / 6.0));
        CHECK(k.off(1) == Catch::Approx(4.0 * std::sqrt(2.0) / 3.0));
    }
    SECTION("zero lambda rejected") {
        CHECK_THROWS_AS(build_K(free_sequence(4), 0.0, 1.0, 4), ZeroLambda);
        CHECK_THROWS_AS(build_K(free_sequence(4), 1.0, 0.0, 4), ZeroLambda);
    }
    SECTION("size must not exceed the sequence") {
        CHECK_THROWS_AS(build_K(free_sequence(4), 1.0, 1.0, 5), SizeExceedsSequence);
        CHECK_THROWS_AS(build_L(free_sequence(4), 5), SizeExceedsSequence);
    }
}

TEST_CASE("jacobi form flips offdiagonal signs only") {
    std::mt19937 rng(13);
    VerblunskySequence seq = random_seq(rng, 10);

    SECTION("positive lambdas give the identity transformation") {
        SymTridiagonal k = build_K(seq, 1.0, 2.0, 10);
        SymTridiagonal j = jacobi_from_K(k);
        CHECK(j.diag() == k.diag());
        CHECK(j.off() == k.off());
    }

    SECTION("lambda = -1 reproduces the sign-conjugated L - M") {
        SymTridiagonal k = build_K(seq, 1.0, -1.0, 10);
        // K_- = L - M entrywise
        CHECK(k.diag(0) == Catch::Approx(seq.alpha(0) - 1.0));
        CHECK(k.diag(1) == Catch::Approx(-seq.alpha(1) - seq.alpha(0)));
        CHECK(k.diag(2) == Catch::Approx(seq.alpha(2) + seq.alpha(1)));
        CHECK(k.off(0) == Catch::Approx(seq.rho(0)));
        CHECK(k.off(1) == Catch::Approx(-seq.rho(1)));

        SymTridiagonal j = jacobi_from_K(k);
        const std::vector<double> pi = sign_diagonal(1.0, -1.0, 10);
        for (std::size_t i = 0; i < 10; ++i) {
            CHECK(j.diag(i) == Catch::Approx(pi[i] * k.diag(i) * pi[i]));
            if (i + 1 < 10) {
                CHECK(j.off(i) == Catch::Approx(std::abs(k.off(i))));
                CHECK(j.off(i) == Catch::Approx(pi[i] * k.off(i) * pi[i + 1]));
            }
        }
    }
}

TEST_CASE("sign diagonal has the period four pattern") {
    const std::vector<double> p = sign_diagonal(1.0, -1.0, 8);
    CHECK(p == std::vector<double>{1, 1, -1, -1, 1, 1, -1, -1});
    const std::vector<double> q = sign_diagonal(-2.0, 3.0, 4);
    CHECK(q == std::vector<double>{1, -1, -1, 1});
}

TEST_CASE("K_lambda maps chi to (z+lambda) chi_* on interior rows") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> lam_dist(0.3, 2.5);
    std::uniform_real_distribution<double> theta_dist(0.1, 3.0);
    const std::size_t n = 14;
    for (int trial = 0; trial < 10; ++trial) {
        VerblunskySequence seq = random_seq(rng, n);
        const double lambda = (trial % 2 ? -1 : 1) * lam_dist(rng);
        SymTridiagonal k = build_K(seq, 1.0, lambda, n);
        const std::complex<double> z = std::polar(1.0, theta_dist(rng));
        const auto chis = olpuc_all(seq, n - 1);
        std::vector<std::complex<double>> chi(n), chi_star(n);
        for (std::size_t i = 0; i < n; ++i) {
            chi[i] = chis[i](z);
            chi_star[i] = chis[i].substar()(z);
        }
        for (std::size_t row = 1; row + 2 < n; ++row) {
            std::complex<double> forward = k.diag(row) * chi[row] +
                                           k.off(row - 1) * chi[row - 1] +
                                           k.off(row) * chi[row + 1];
            CHECK(std::abs(forward - (z + lambda) * chi_star[row]) < 1e-10);
            std::complex<double> backward = k.diag(row) * chi_star[row] +
                                            k.off(row - 1) * chi_star[row - 1] +
                                            k.off(row) * chi_star[row + 1];
            CHECK(std::abs(backward - (1.0 / z + lambda) * chi[row]) < 1e-10);
        }
    }
}
