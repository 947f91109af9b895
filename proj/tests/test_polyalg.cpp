#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>

#include "cmvdvz/families.hpp"
#include "cmvdvz/opuc.hpp"
#include "cmvdvz/quadrature.hpp"

using namespace cmvdvz;

TEST_CASE("monic opuc") {
    CHECK(monic_opuc(free_sequence(4), 2).coeffs() == std::vector<double>{0, 0, 1});

    Poly p = monic_opuc(bernstein_szego_sequence(0.7, 4), 2);  // z^2 - alpha z
    CHECK(p.coeff(2) == 1.0);
    CHECK(p.coeff(1) == Catch::Approx(-0.7));
    CHECK(p.coeff(0) == 0.0);

    Poly q = monic_opuc(VerblunskySequence({0.5}), 1);
    CHECK(q.coeff(1) == 1.0);
    CHECK(q.coeff(0) == -0.5);

    CHECK_THROWS_AS(monic_opuc(VerblunskySequence({0.5}), 2), DegreeExceedsSequence);
}

TEST_CASE("reversed polynomial") {
    Poly p({0.0, -0.7, 1.0});  // z^2 - 0.7 z
    Poly r = reversed(p, 2);   // 1 - 0.7 z
    CHECK(r.coeff(0) == 1.0);
    CHECK(r.coeff(1) == -0.7);
    CHECK(r.coeff(2) == 0.0);

    CHECK(reversed(Poly::one(), 0).coeffs() == std::vector<double>{1.0});

    Poly s = reversed(Poly({-0.5, 1.0}), 1);  // z - 1/2 -> 1 - z/2
    CHECK(s.coeff(0) == 1.0);
    CHECK(s.coeff(1) == -0.5);
}

TEST_CASE("olpuc in the free case") {
    VerblunskySequence seq = free_sequence(12);
    for (std::size_t k = 0; k <= 5; ++k) {
        LaurentPoly even = olpuc(seq, 2 * k);
        CHECK(even.coeff(-static_cast<int>(k)) == 1.0);
        CHECK(even.coeffs().size() == 1);
        LaurentPoly odd = olpuc(seq, 2 * k + 1);
        CHECK(odd.coeff(static_cast<int>(k) + 1) == 1.0);
        CHECK(odd.coeffs().size() == 1);
    }
}

TEST_CASE("olpuc closed forms for degree one coefficient sequences") {
    // chi_1 for the mass point family at m = 1/2
    LaurentPoly chi1 = olpuc(mass_point_sequence(0.5, 4), 1);
    const double k1 = 2.0 / std::sqrt(3.0);
    CHECK(chi1.coeff(1) == Catch::Approx(k1).margin(1e-15));
    CHECK(chi1.coeff(0) == Catch::Approx(-0.5 * k1).margin(1e-15));

    // chi_{2k} = rho^{-1} (1 - alpha z) z^{-k}
    const double alpha = 0.6, rho = 0.8;
    VerblunskySequence bs = bernstein_szego_sequence(alpha, 10);
    for (std::size_t k = 1; k <= 4; ++k) {
        LaurentPoly chi = olpuc(bs, 2 * k);
        CHECK(chi.coeff(-static_cast<int>(k)) == Catch::Approx(1.0 / rho));
        CHECK(chi.coeff(-static_cast<int>(k) + 1) == Catch::Approx(-alpha / rho));
    }
}

TEST_CASE("substar negates exponents") {
    LaurentPoly z;
    z.set_coeff(1, 1.0);
    CHECK(z.substar().coeff(-1) == 1.0);

    LaurentPoly one;
    one.set_coeff(0, 1.0);
    CHECK(one.substar().coeff(0) == 1.0);

    LaurentPoly chi1 = olpuc(mass_point_sequence(0.5, 4), 1);
    LaurentPoly star = chi1.substar();
    CHECK(star.coeff(-1) == chi1.coeff(1));
    CHECK(star.coeff(0) == chi1.coeff(0));
}

TEST_CASE("leading and trailing coefficients of chi_n") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-0.9, 0.9);
    std::vector<double> a(20);
    for (double& v : a) v = dist(rng);
    VerblunskySequence seq(a);
    for (std::size_t k = 1; k <= 8; ++k) {
        LaurentPoly even = olpuc(seq, 2 * k);
        CHECK(even.coeff(static_cast<int>(k)) ==
              Catch::Approx(-seq.kappa(2 * k) * seq.alpha(2 * k - 1)).margin(1e-13));
        LaurentPoly odd = olpuc(seq, 2 * k + 1);
        CHECK(odd.coeff(static_cast<int>(k) + 1) ==
              Catch::Approx(seq.kappa(2 * k + 1)).margin(1e-13));
    }
}

TEST_CASE("symmetrized opuc") {
    CHECK(symmetrized_opuc(free_sequence(4), 3).coeffs() ==
          std::vector<double>{0, 0, 0, 1});

    Poly p = symmetrized_opuc(VerblunskySequence({0.4}), 2);  // phi_1(z^2) = z^2 - 0.4
    CHECK(p.coeff(2) == 1.0);
    CHECK(p.coeff(0) == -0.4);

    // consistency with the Szego recurrence run on the interleaved sequence
    VerblunskySequence seq({0.3, -0.2, 0.55});
    VerblunskySequence hat = symmetrized_sequence(seq);
    for (std::size_t n = 0; n <= 6; ++n) {
        Poly direct = symmetrized_opuc(seq, n);
        Poly via_recurrence = monic_opuc(hat, n);
        REQUIRE(direct.degree() == via_recurrence.degree());
        for (int i = 0; i <= direct.degree(); ++i)
            CHECK(direct.coeff(static_cast<std::size_t>(i)) ==
                  Catch::Approx(via_recurrence.coeff(static_cast<std::size_t>(i)))
                      .margin(1e-14));
    }
}

// Exact rational oracle for small degrees.  kappa_n is irrational, so the
// oracle carries kappa_n^2 = prod (1-alpha_j^2)^{-1} and the monic Laurent
// coefficients as fractions, and the library value c_j is checked through
// c_j^2 = kappa_n^2 r_j^2 together with the sign.
namespace {

struct Frac {
    long long num = 0, den = 1;

    Frac() = default;
    Frac(long long n, long long d = 1) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
    friend Frac operator/(Frac a, Frac b) { return Frac(a.num * b.den, a.den * b.num); }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// monic Szego recurrence over the rationals
std::vector<std::vector<Frac>> rational_monic_opuc(const std::vector<Frac>& alpha,
                                                   std::size_t nmax) {
    std::vector<std::vector<Frac>> phi{{Frac(1)}};
    for (std::size_t n = 0; n < nmax; ++n) {
        const auto& p = phi[n];
        std::vector<Frac> next(n + 2);
        for (std::size_t i = 0; i <= n; ++i) next[i + 1] = next[i + 1] + p[i];
        for (std::size_t i = 0; i <= n; ++i)
            next[i] = next[i] - alpha[n] * p[n - i];
        phi.push_back(std::move(next));
    }
    return phi;
}

} // namespace

TEST_CASE("rational oracle pins chi_n for free and bernstein-szego, n <= 6") {
    const std::vector<std::pair<std::string, Frac>> cases = {
        {"free", Frac(0)}, {"bernstein_szego", Frac(3, 5)}};
    for (const auto& [name, alpha0] : cases) {
        INFO(name);
        std::vector<Frac> alpha(7, Frac(0));
        alpha[0] = alpha0;
        const auto phi = rational_monic_opuc(alpha, 6);

        std::vector<double> dalpha(7, 0.0);
        dalpha[0] = alpha0.value();
        VerblunskySequence seq(dalpha);

        Frac kappa_sq(1);
        for (std::size_t n = 0; n <= 6; ++n) {
            if (n > 0) {
                const Frac rho_sq = Frac(1) - alpha[n - 1] * alpha[n - 1];
                kappa_sq = kappa_sq / rho_sq;
            }
            const int k = static_cast<int>(n / 2);
            LaurentPoly chi = olpuc(seq, n);
            for (std::size_t i = 0; i <= n; ++i) {
                // exponent of monic coefficient i after the z^{-k} shift
                const int j = (n % 2 == 0) ? static_cast<int>(n - i) - k
                                           : static_cast<int>(i) - k;
                const Frac r = phi[n][i];
                const double c = chi.coeff(j);
                const double target_sq = kappa_sq.value() * r.value() * r.value();
                CHECK(std::abs(c * c - target_sq) < 1e-12 * std::max(1.0, target_sq));
                if (r.num != 0)
                    CHECK((c > 0) == (r.value() > 0));
                else
                    CHECK(std::abs(c) < 1e-15);
            }
        }
    }
}

TEST_CASE("olpuc gram matrix on the circle is the identity") {
    const QuadratureSpec spec;
    for (const FamilyInstance& fam :
         {bernstein_szego_family(0.6, 20), lebesgue_mass_family(0.5, 20),
          second_kind_mass_family(0.3, 20)}) {
        INFO(fam.name);
        const auto chis = olpuc_all(fam.seq, 16);
        double defect = 0.0;
        for (std::size_t i = 0; i <= 16; ++i)
            for (std::size_t j = i; j <= 16; ++j) {
                // conj(chi_j) on the circle is the substar polynomial
                const double re = integrate_circle(
                    fam.mu,
                    [&](double theta) {
                        const std::complex<double> z = std::polar(1.0, theta);
                        return (chis[i](z) * chis[j](std::conj(z))).real();
                    },
                    spec);
                const double im = integrate_circle(
                    fam.mu,
                    [&](double theta) {
                        const std::complex<double> z = std::polar(1.0, theta);
                        return (chis[i](z) * chis[j](std::conj(z))).imag();
                    },
                    spec);
                defect = std::max(defect, std::abs(re - (i == j ? 1.0 : 0.0)));
                defect = std::max(defect, std::abs(im));
            }
        CHECK(defect < 1e-8);
    }
}
