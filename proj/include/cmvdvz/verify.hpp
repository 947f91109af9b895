#ifndef CMVDVZ_VERIFY_HPP
#define CMVDVZ_VERIFY_HPP

// Numerical verification suites: matrix identities of the Theta factors,
// Gram orthonormality of the pushforward OPRL, mass conservation, the
// Stieltjes closure, and the two commutative-diagram checks
//   verify_splitting:        Jhat^2 - 2I = J (+) Jt on even/odd indices,
//   verify_dvz_composition:  symmetrize -> Szego -> Christoffel((2+x)/2)
//                            reproduces the lambda = 1 pushforward.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "banded.hpp"
#include "chebyshev.hpp"
#include "dvz.hpp"
#include "families.hpp"
#include "measure.hpp"
#include "quadrature.hpp"
#include "verblunsky.hpp"

namespace cmvdvz {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    }

    void add(std::string name, double residual, double tol) {
        checks.push_back({std::move(name), residual, tol, residual < tol});
    }
};

namespace detail {

inline VerblunskySequence random_sequence(std::mt19937& rng, std::size_t n,
                                          double bound = 0.95) {
    std::uniform_real_distribution<double> dist(-bound, bound);
    std::vector<double> a(n);
    for (double& v : a) v = dist(rng);
    return VerblunskySequence(std::move(a));
}

inline double max_abs_diff_rows(const SymTridiagonal& a, const SymTridiagonal& b,
                                std::size_t rows) {
    double m = 0.0;
    for (std::size_t i = 0; i < rows && i < a.size() && i < b.size(); ++i) {
        m = std::max(m, std::abs(a.diag(i) - b.diag(i)));
        if (i + 1 < rows && i + 1 < a.size() && i + 1 < b.size())
            m = std::max(m, std::abs(a.off(i) - b.off(i)));
    }
    return m;
}

inline std::vector<std::function<double(double)>> q_evaluators(
    const VerblunskySequence& seq, double lambda, std::size_t degree) {
    std::vector<std::function<double(double)>> fs;
    for (std::size_t n = 0; n <= degree; ++n) {
        ChebForm form = cheb_form(seq, n);
        fs.push_back([form, lambda](double x) { return eval_q(form, lambda, x); });
    }
    return fs;
}

} // namespace detail

// Max residual of L^2 = I (complete sections), M^2 = I restricted to
// complete blocks, and (L+M)^2 - 2I = C + C^t on interior entries.
inline double matrix_identity_residual(const VerblunskySequence& seq, std::size_t n) {
    const SymTridiagonal l = build_L(seq, n);
    const SymTridiagonal m = build_M(seq, n);
    const BandedMatrix lb = BandedMatrix::from(l);
    const BandedMatrix mb = BandedMatrix::from(m);
    const BandedMatrix id = BandedMatrix::identity(n);

    double res = 0.0;
    res = std::max(res, (lb * lb - id).max_abs_window(0, l.boundary_clean_rows() - 1));
    res = std::max(res, (mb * mb - id).max_abs_window(0, m.boundary_clean_rows() - 1));

    const BandedMatrix k = lb + mb;
    const BandedMatrix c = mb * lb;
    const BandedMatrix lhs = k * k - id - id;
    const BandedMatrix rhs = c + c.transpose();
    if (n >= 6) res = std::max(res, (lhs - rhs).max_abs_window(2, n - 4));
    return res;
}

// Gram defect of q_0..q_degree against the pushforward of the family measure.
inline double gram_defect(const FamilyInstance& fam, double lambda,
                          std::size_t degree, const QuadratureSpec& spec = {}) {
    const LineMeasure nu = dvz_pushforward(fam.mu, lambda);
    return gram(detail::q_evaluators(fam.seq, lambda, degree), nu, spec).defect;
}

inline double mass_defect(const FamilyInstance& fam, double lambda,
                          const QuadratureSpec& spec = {}) {
    return std::abs(total_mass(dvz_pushforward(fam.mu, lambda), spec) - 1.0);
}

// Stieltjes closure: recurrence coefficients recovered from the pushforward
// measure against the rows of the Jacobi form of K_lambda.
inline double stieltjes_closure_residual(const FamilyInstance& fam, double lambda,
                                         std::size_t rows,
                                         const QuadratureSpec& spec = {}) {
    const SymTridiagonal from_measure =
        stieltjes_jacobi(dvz_pushforward(fam.mu, lambda), rows, spec);
    const SymTridiagonal from_coeffs =
        jacobi_from_K(build_K(fam.seq, 1.0, lambda, rows));
    return detail::max_abs_diff_rows(from_measure, from_coeffs, rows);
}

// Jhat^2 - 2I = J (+) Jt: Jhat from the even (Delsarte-Genin) measure,
// J from the Szego projection, Jt from its Christoffel transform by 2+x.
// Asserted on rows [0, n-4].
inline double splitting_residual(const FamilyInstance& fam, std::size_t n,
                                 const QuadratureSpec& spec = {}) {
    const LineMeasure sigma = szego_projection(fam.mu);
    const LineMeasure sigma_hat = szego_projection(symmetrize(fam.mu));
    const LineMeasure sigma_tilde = christoffel(sigma, Poly({2.0, 1.0}));

    const std::size_t half = n / 2;
    const SymTridiagonal jhat = stieltjes_jacobi(sigma_hat, n, spec);
    const SymTridiagonal j = stieltjes_jacobi(sigma, half, spec);
    const SymTridiagonal jt = stieltjes_jacobi(sigma_tilde, half, spec);

    const BandedMatrix sq = BandedMatrix::from(jhat) * BandedMatrix::from(jhat);
    double res = 0.0;
    for (std::size_t i = 0; i + 4 <= n; ++i) {
        const double delta = (i % 2 == 0) ? j.diag(i / 2) : jt.diag(i / 2);
        res = std::max(res, std::abs(sq.at(i, i) - 2.0 - delta));
        if (i + 2 + 4 <= n) {
            const double off = (i % 2 == 0) ? j.off(i / 2) : jt.off(i / 2);
            res = std::max(res, std::abs(sq.at(i, i + 2) - off));
        }
        if (i + 1 + 4 <= n)
            res = std::max(res, std::abs(sq.at(i, i + 1)));  // cross parity block
    }
    return res;
}

// Compares the direct lambda = 1 pushforward with the composite route and
// checks Gram orthonormality of the basic OPRL against the composite.
inline double dvz_composition_residual(const FamilyInstance& fam, std::size_t n,
                                       const QuadratureSpec& spec = {}) {
    const LineMeasure direct = dvz_pushforward(fam.mu, 1.0);
    const LineMeasure composite = normalized(
        christoffel(szego_projection(symmetrize(fam.mu)), Poly({1.0, 0.5})), spec);

    double res = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double x = -2.0 + 4.0 * i / 201.0;
        res = std::max(res, std::abs(direct.density(x) - composite.density(x)));
    }

    // atoms must agree in location and mass
    auto atoms_a = direct.atoms();
    auto atoms_b = composite.atoms();
    auto by_x = [](const LineAtom& a, const LineAtom& b) { return a.x < b.x; };
    std::sort(atoms_a.begin(), atoms_a.end(), by_x);
    std::sort(atoms_b.begin(), atoms_b.end(), by_x);
    if (atoms_a.size() != atoms_b.size()) return 1.0;
    for (std::size_t i = 0; i < atoms_a.size(); ++i) {
        res = std::max(res, std::abs(atoms_a[i].x - atoms_b[i].x));
        res = std::max(res, std::abs(atoms_a[i].mass - atoms_b[i].mass));
    }

    res = std::max(res,
                   gram(detail::q_evaluators(fam.seq, 1.0, n), composite, spec).defect);
    return res;
}

struct VerifyOptions {
    std::string family = "";  // empty: suite default set
    double param = 0.0;
    double lambda = 2.0;
    std::size_t size = 32;
    double tol = 0.0;  // 0: per-suite default
    QuadratureSpec quad;
};

inline VerifyReport run_verify_suite(const std::string& suite,
                                     const VerifyOptions& opt = {}) {
    VerifyReport report;
    const auto families = [&]() -> std::vector<FamilyInstance> {
        if (!opt.family.empty()) return {family_by_name(opt.family, opt.param)};
        return {free_family(), bernstein_szego_family(0.6),
                lebesgue_mass_family(0.5), second_kind_mass_family(0.3)};
    };

    const bool all = suite == "all";
    if (suite == "matrix-identities" || all) {
        const double tol = opt.tol > 0 ? opt.tol : 1e-13;
        std::mt19937 rng(20240511);
        double res = 0.0;
        for (int trial = 0; trial < 50; ++trial)
            res = std::max(res, matrix_identity_residual(
                                    detail::random_sequence(rng, opt.size), opt.size));
        report.add("matrix-identities[n=" + std::to_string(opt.size) + ",trials=50]",
                   res, tol);
    }
    if (suite == "gram" || all) {
        const double tol = opt.tol > 0 ? opt.tol : 1e-7;
        for (const auto& fam : families())
            report.add("gram[" + fam.name + ",lambda=" + std::to_string(opt.lambda) + "]",
                       gram_defect(fam, opt.lambda, 12, opt.quad), tol);
    }
    if (suite == "mass" || all) {
        const double tol = opt.tol > 0 ? opt.tol : 1e-8;
        for (const auto& fam : families())
            report.add("mass[" + fam.name + ",lambda=" + std::to_string(opt.lambda) + "]",
                       mass_defect(fam, opt.lambda, opt.quad), tol);
    }
    if (suite == "stieltjes" || all) {
        const double tol = opt.tol > 0 ? opt.tol : 1e-7;
        for (const auto& fam : families())
            report.add("stieltjes[" + fam.name + ",lambda=" +
                           std::to_string(opt.lambda) + "]",
                       stieltjes_closure_residual(fam, opt.lambda, 8, opt.quad), tol);
    }
    if (suite == "diagram" || all) {
        const double tol = opt.tol > 0 ? opt.tol : 1e-7;
        const std::vector<FamilyInstance> fams =
            opt.family.empty()
                ? std::vector<FamilyInstance>{free_family(),
                                              bernstein_szego_family(0.4)}
                : families();
        for (const auto& fam : fams) {
            report.add("diagram-splitting[" + fam.name + "]",
                       splitting_residual(fam, 16, opt.quad), tol);
            report.add("diagram-composition[" + fam.name + "]",
                       dvz_composition_residual(fam, 12, opt.quad), tol);
        }
    }
    if (report.checks.empty())
        throw ParamOutOfRange("unknown suite: " + suite);
    return report;
}

} // namespace cmvdvz

#endif
