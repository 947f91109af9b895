#ifndef CMVDVZ_FAMILIES_HPP
#define CMVDVZ_FAMILIES_HPP

// Reference families bundling a coefficient sequence, its orthogonality
// measure on the circle, and closed-form Laurent polynomials / OPRL /
// pushforward densities where those exist, used as regression targets.
//
//   free            alpha_n = 0, Lebesgue measure
//   bernstein_szego alpha_n = alpha delta_{n,0}
//   lebesgue_mass   alpha_n = 1/(n + 1/m): Lebesgue plus mass m at z = 1
//   second_kind     alpha_n = -1/(n + 1/m): inverse Caratheodory function

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "chebyshev.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "measure.hpp"
#include "verblunsky.hpp"

namespace cmvdvz {

struct FamilyInstance {
    std::string name;
    double param = 0.0;
    VerblunskySequence seq;
    CircleMeasure mu;
    // Optional closed forms transcribed from the worked examples.
    std::function<LaurentPoly(std::size_t)> closed_form_chi;
    std::function<double(std::size_t, double, double)> closed_form_q;  // (n, lambda, x)
    std::function<LineMeasure(double)> closed_form_nu;                 // lambda -> nu_lambda
};

namespace detail {

// U_j extended to every integer via U_{-j} = -U_{j-2}.
inline double u_ext(long j, double t) {
    if (j >= -1) return cheb_u(static_cast<int>(j), t);
    return -cheb_u(static_cast<int>(-j - 2), t);
}

// Segments of the generic pushforward density with the edge exponents of
// the square-root factor.
inline LineMeasure nu_from_density(double lambda,
                                   std::function<double(double)> density,
                                   std::vector<LineAtom> atoms) {
    std::vector<LineSegment> segments;
    for (const auto& [lo, hi] : support_intervals(lambda)) {
        auto edge_exp = [lambda](double e) {
            if (std::abs(1.0 - (e - lambda) * (e - lambda)) < 1e-9) return -0.5;
            if (std::abs((e + lambda) * (e + lambda) - 1.0) < 1e-9) return 0.5;
            return 0.0;
        };
        segments.push_back({lo, hi, density, edge_exp(lo), edge_exp(hi)});
    }
    return LineMeasure(std::move(segments), std::move(atoms));
}

inline double sqrt_factor(double lambda, double x) {
    const double num = (x + lambda) * (x + lambda) - 1.0;
    const double den = 1.0 - (x - lambda) * (x - lambda);
    const double r = num / den;
    return r > 0.0 ? std::sqrt(r) : 0.0;
}

} // namespace detail

inline FamilyInstance bernstein_szego_family(double alpha, std::size_t n_max = 48) {
    if (!(std::abs(alpha) < 1.0))
        throw ParamOutOfRange("bernstein-szego parameter must lie in (-1,1)");
    const double rho = std::sqrt(1.0 - alpha * alpha);
    FamilyInstance f{
        "bernstein_szego",
        alpha,
        bernstein_szego_sequence(alpha, n_max),
        CircleMeasure([alpha, rho](double theta) {
            return rho * rho /
                   (2.0 * pi * (1.0 - 2.0 * alpha * std::cos(theta) + alpha * alpha));
        }),
        {},
        {},
        {}};

    f.closed_form_chi = [alpha, rho](std::size_t n) {
        LaurentPoly chi;
        if (n == 0) {
            chi.set_coeff(0, 1.0);
            return chi;
        }
        const int k = static_cast<int>(n / 2);
        if (n % 2 == 0) {  // rho^{-1} (1 - alpha z) z^{-k}
            chi.set_coeff(-k, 1.0 / rho);
            chi.set_coeff(-k + 1, -alpha / rho);
        } else {  // rho^{-1} (z - alpha) z^{k}
            chi.set_coeff(k + 1, 1.0 / rho);
            chi.set_coeff(k, -alpha / rho);
        }
        return chi;
    };

    f.closed_form_q = [alpha, rho](std::size_t n, double lambda, double x) {
        if (n == 0) return 1.0;
        const double t = t_lambda(lambda, x);
        const long k = static_cast<long>(n / 2);
        const double xl = x - lambda;
        if (n % 2 == 0)
            return (detail::u_ext(k, t) - (xl + alpha) * detail::u_ext(k - 1, t) +
                    alpha * xl * detail::u_ext(k - 2, t)) / rho;
        return (xl * detail::u_ext(k, t) - (alpha * xl + 1.0) * detail::u_ext(k - 1, t) +
                alpha * detail::u_ext(k - 2, t)) / rho;
    };

    f.closed_form_nu = [alpha, rho](double lambda) {
        if (lambda == 0.0) throw ZeroLambda();
        auto dens = [alpha, rho, lambda](double x) {
            const double denom =
                std::abs((1.0 + alpha * lambda) * (lambda + alpha) - alpha * x * x);
            return detail::sqrt_factor(lambda, x) * rho * rho / (2.0 * pi * denom);
        };
        return detail::nu_from_density(lambda, dens, {});
    };
    return f;
}

inline FamilyInstance free_family(std::size_t n_max = 48) {
    FamilyInstance f = bernstein_szego_family(0.0, n_max);
    f.name = "free";
    f.param = 0.0;
    // chi_{2k} = z^{-k}, chi_{2k+1} = z^{k+1}: q has a two-term U form
    f.closed_form_q = [](std::size_t n, double lambda, double x) {
        const double t = t_lambda(lambda, x);
        const long k = static_cast<long>(n / 2);
        if (n % 2 == 0)
            return detail::u_ext(k, t) - (x - lambda) * detail::u_ext(k - 1, t);
        return (x - lambda) * detail::u_ext(k, t) - detail::u_ext(k - 1, t);
    };
    return f;
}

inline FamilyInstance lebesgue_mass_family(double m, std::size_t n_max = 48) {
    if (!(m > 0.0 && m < 1.0))
        throw ParamOutOfRange("mass parameter must lie in (0,1)");
    const auto alpha_at = [m](long j) {
        return m / (static_cast<double>(j) * m + 1.0);
    };
    FamilyInstance f{
        "lebesgue_mass",
        m,
        mass_point_sequence(m, n_max),
        CircleMeasure([m](double) { return (1.0 - m) / (2.0 * pi); },
                      {{0.0, m}}),
        {},
        {},
        {}};

    // kappa_n = sqrt(alpha_n / ((1-m) alpha_{n-1})), closed form of the
    // rho product.
    const auto kappa_at = [m, alpha_at](std::size_t n) {
        if (n == 0) return 1.0;
        return std::sqrt(alpha_at(static_cast<long>(n)) /
                         ((1.0 - m) * alpha_at(static_cast<long>(n) - 1)));
    };

    f.closed_form_chi = [alpha_at, kappa_at](std::size_t n) {
        LaurentPoly chi;
        const int k = static_cast<int>(n / 2);
        const double kap = kappa_at(n);
        if (n % 2 == 0) {
            chi.set_coeff(-k, kap);
            const double a = n > 0 ? alpha_at(static_cast<long>(n) - 1) : 0.0;
            for (int j = -k + 1; j <= k; ++j) chi.add_coeff(j, -kap * a);
        } else {
            chi.set_coeff(k + 1, kap);
            const double a = alpha_at(static_cast<long>(n) - 1);
            for (int j = -k; j <= k; ++j) chi.add_coeff(j, -kap * a);
        }
        return chi;
    };

    f.closed_form_q = [alpha_at, kappa_at](std::size_t n, double lambda, double x) {
        if (n == 0) return 1.0;
        const double t = t_lambda(lambda, x);
        const long k = static_cast<long>(n / 2);
        const double aprev = alpha_at(static_cast<long>(n) - 1);
        const double an = alpha_at(static_cast<long>(n));
        const double kap = kappa_at(n);
        if (n % 2 == 0)
            return kap * (detail::u_ext(k, t) -
                          (aprev / an) * (x - lambda + an) * detail::u_ext(k - 1, t));
        return kap * ((x - lambda - aprev) * detail::u_ext(k, t) -
                      (aprev / an) * detail::u_ext(k - 1, t));
    };

    f.closed_form_nu = [m](double lambda) {
        if (lambda == 0.0) throw ZeroLambda();
        auto dens = [m, lambda](double x) {
            return (1.0 - m) / (2.0 * pi * std::abs(lambda)) *
                   detail::sqrt_factor(lambda, x);
        };
        return detail::nu_from_density(lambda, dens, {{1.0 + lambda, m}});
    };
    return f;
}

inline FamilyInstance second_kind_mass_family(double m, std::size_t n_max = 48) {
    if (!(m > 0.0 && m < 1.0))
        throw ParamOutOfRange("mass parameter must lie in (0,1)");
    const auto alpha_at = [m](long j) {
        return -m / (static_cast<double>(j) * m + 1.0);
    };
    FamilyInstance f{
        "second_kind",
        m,
        second_kind_sequence(m, n_max),
        // Re of the Caratheodory function (1-z)/(1-(1-2m)z)
        CircleMeasure([m](double theta) {
            const double c = 1.0 - std::cos(theta);
            return (1.0 - m) * c /
                   (((1.0 - 2.0 * m) * c + 2.0 * m * m) * 2.0 * pi);
        }),
        {},
        {},
        {}};

    const auto kappa_at = [m, alpha_at](std::size_t n) {
        if (n == 0) return 1.0;
        return std::sqrt(alpha_at(static_cast<long>(n)) /
                         ((1.0 - m) * alpha_at(static_cast<long>(n) - 1)));
    };

    f.closed_form_chi = [m, alpha_at, kappa_at](std::size_t n) {
        LaurentPoly chi;
        const int k = static_cast<int>(n / 2);
        const double kap = kappa_at(n);
        if (n % 2 == 0) {
            chi.set_coeff(-k, kap);
            const double a = n > 0 ? alpha_at(static_cast<long>(n) - 1) : 0.0;
            for (int j = -k + 1; j <= k; ++j)
                chi.add_coeff(j, -kap * a * (1.0 + 2.0 * (k - j) * m));
        } else {
            chi.set_coeff(k + 1, kap);
            const double a = alpha_at(static_cast<long>(n) - 1);
            for (int j = -k; j <= k; ++j)
                chi.add_coeff(j, -kap * a * (1.0 + 2.0 * (k + j) * m));
        }
        return chi;
    };

    // Only the even-degree closed form is usable; the odd-degree display is
    // garbled in print, so odd degrees are validated through the
    // lambda-independent Chebyshev form and orthonormality instead.
    f.closed_form_q = [m, alpha_at, kappa_at](std::size_t n, double lambda,
                                              double x) {
        if (n % 2 == 1)
            throw DomainError("no closed form for odd degrees of this family");
        if (n == 0) return 1.0;
        const double t = t_lambda(lambda, x);
        const long k = static_cast<long>(n / 2);
        const double kap = kappa_at(n);
        const double an1 = alpha_at(static_cast<long>(n) - 1);
        const double an2 = alpha_at(static_cast<long>(n) - 2);
        const double a2n2 = alpha_at(2 * static_cast<long>(n) - 2);
        double tail = 0.0;
        for (long j = 0; j <= k - 2; ++j)
            tail += (static_cast<double>(j) + 1.0) * detail::u_ext(j, t);
        return kap * (detail::u_ext(k, t) -
                      (an1 / an2) * (x - lambda - m * an2 / a2n2) *
                          detail::u_ext(k - 1, t) +
                      4.0 * m * an1 * (x - lambda - 1.0) * tail);
    };

    f.closed_form_nu = [m](double lambda) {
        if (lambda == 0.0) throw ZeroLambda();
        auto dens = [m, lambda](double x) {
            const double d = std::abs(x * x - (1.0 + lambda) * (1.0 + lambda));
            return detail::sqrt_factor(lambda, x) / (2.0 * pi * std::abs(lambda)) *
                   (1.0 - m) * d /
                   ((1.0 - 2.0 * m) * d + 4.0 * m * m * std::abs(lambda));
        };
        return detail::nu_from_density(lambda, dens, {});
    };
    return f;
}

inline FamilyInstance family_by_name(const std::string& name, double param,
                                     std::size_t n_max = 48) {
    if (name == "free") return free_family(n_max);
    if (name == "bernstein_szego") return bernstein_szego_family(param, n_max);
    if (name == "lebesgue_mass" || name == "mass_point")
        return lebesgue_mass_family(param, n_max);
    if (name == "second_kind" || name == "second_kind_mass")
        return second_kind_mass_family(param, n_max);
    throw ParamOutOfRange("unknown family: " + name);
}

} // namespace cmvdvz

#endif
