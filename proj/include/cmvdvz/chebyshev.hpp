#ifndef CMVDVZ_CHEBYSHEV_HPP
#define CMVDVZ_CHEBYSHEV_HPP

// Evaluation of the OPRL attached to K_lambda = L + lambda M.
//
// Writing chi_n(z) = sum_j c_j z^j, the degree-n polynomial is
//   q_n(x) = Q_n(t) + (x - lambda) Qt_n(t),   t = x^2/lambda - lambda - 1/lambda,
// with lambda-independent U-basis coefficients
//   Q_n  = sum_j (c_{-j} - c_{j+2}) U_j,
//   Qt_n = sum_j (c_{j+1} - c_{-j-1}) U_j,
// where U_j are the second kind Chebyshev polynomials on [-2,2]:
//   U_{-1} = 0, U_0 = 1, U_j = t U_{j-1} - U_{j-2}.
// All real-line extraction goes through this basis; no complex square root
// branch is ever materialized.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "banded.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "opuc.hpp"
#include "verblunsky.hpp"

namespace cmvdvz {

// U_n(t) on [-2,2]; accepts n >= -1.
inline double cheb_u(int n, double t) {
    if (n < -1) throw IndexOutOfRange("chebyshev index below -1");
    if (n == -1) return 0.0;
    double prev = 0.0, cur = 1.0;
    for (int k = 1; k <= n; ++k) {
        const double next = t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Clenshaw backward summation of sum_j c_j U_j(t).
inline double clenshaw_u(std::span<const double> c, double t) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        const double b0 = c[i] + t * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return b1;
}

inline double t_lambda(double lambda, double x) {
    if (lambda == 0.0) throw ZeroLambda();
    return x * x / lambda - (lambda + 1.0 / lambda);
}

struct ChebForm {
    std::vector<double> q;   // U-basis coefficients of Q_n
    std::vector<double> qt;  // U-basis coefficients of Qt_n
    std::size_t n = 0;

    int deg_q() const { return static_cast<int>(q.size()) - 1; }
    int deg_qt() const { return static_cast<int>(qt.size()) - 1; }
};

inline ChebForm cheb_form(const LaurentPoly& chi, std::size_t n) {
    ChebForm f;
    f.n = n;
    const int jmax = std::max(std::abs(chi.min_exp()), std::abs(chi.max_exp()));
    for (int j = 0; j <= jmax; ++j) {
        f.q.push_back(chi.coeff(-j) - chi.coeff(j + 2));
        f.qt.push_back(chi.coeff(j + 1) - chi.coeff(-j - 1));
    }
    while (!f.q.empty() && f.q.back() == 0.0) f.q.pop_back();
    while (!f.qt.empty() && f.qt.back() == 0.0) f.qt.pop_back();
    return f;
}

inline ChebForm cheb_form(const VerblunskySequence& seq, std::size_t n) {
    return cheb_form(olpuc(seq, n), n);
}

inline double eval_q(const ChebForm& form, double lambda, double x) {
    const double t = t_lambda(lambda, x);
    return clenshaw_u(form.q, t) + (x - lambda) * clenshaw_u(form.qt, t);
}

// q_0..q_n by the three term recurrence a_n q_{n+1} = (x-b_n) q_n - a_{n-1} q_{n-1}.
// Works for any symmetric tridiagonal with nonzero offdiagonal, including the
// signed K_lambda.
inline std::vector<double> recurrence_eval(const SymTridiagonal& m, double x,
                                           std::size_t n) {
    if (n >= m.size())
        throw IndexOutOfRange("requested degree reaches past the matrix section");
    std::vector<double> q(n + 1);
    q[0] = 1.0;
    if (n == 0) return q;
    q[1] = (x - m.diag(0)) / m.off(0);
    for (std::size_t k = 1; k < n; ++k)
        q[k + 1] = ((x - m.diag(k)) * q[k] - m.off(k - 1) * q[k - 1]) / m.off(k);
    return q;
}

// lambda = +1 (K = L + M) or, with sign = -1, the K_- = L - M variant.
inline double basic_dvz_q(const VerblunskySequence& seq, std::size_t n, double x,
                          int sign = +1) {
    if (sign != 1 && sign != -1) throw ParamOutOfRange("sign must be +1 or -1");
    return eval_q(cheb_form(seq, n), static_cast<double>(sign), x);
}

namespace detail {

// Orthonormal varphi_n = kappa_n phi_n.
inline Poly orthonormal_opuc(const VerblunskySequence& seq, std::size_t n) {
    return monic_opuc(seq, n) * seq.kappa(n);
}

// U-basis coefficients of the symmetric Laurent polynomial sum_j e_j z^j
// (e_{-j} = e_j) as a polynomial in x = z + 1/z: u_j = e_j - e_{j+2}.
inline std::vector<double> symmetric_to_u_basis(const std::vector<double>& e) {
    std::vector<double> u(e.size());
    for (std::size_t j = 0; j < e.size(); ++j)
        u[j] = e[j] - (j + 2 < e.size() ? e[j + 2] : 0.0);
    while (!u.empty() && u.back() == 0.0) u.pop_back();
    return u;
}

inline void require_szego_domain(double x) {
    if (std::abs(x) > 2.0)
        throw DomainError("variable must lie in [-2,2]");
}

} // namespace detail

// OPRL of the Szego projection:
//   p_n(x) = z^{-n} (varphi_{2n}(z) + varphi_{2n}^*(z)) / sqrt(2(1-alpha_{2n-1})),
// x = z + 1/z, evaluated through the U basis.  Uses alpha_{-1} = -1 at n = 0.
inline double szego_oprl(const VerblunskySequence& seq, std::size_t n, double x) {
    detail::require_szego_domain(x);
    const Poly vphi = detail::orthonormal_opuc(seq, 2 * n);
    std::vector<double> e(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        e[j] = vphi.coeff(n + j) + vphi.coeff(n - j);
    const double aprev = seq.alpha_or_convention(2 * static_cast<long>(n) - 1);
    const std::vector<double> u = detail::symmetric_to_u_basis(e);
    return clenshaw_u(u, x) / std::sqrt(2.0 * (1.0 - aprev));
}

// OPRL of the Christoffel transform (2+x) d sigma:
//   pt_n(x) = z^{-n} (varphi_{2n+1}(z) + varphi_{2n+1}^*(z)) /
//             (sqrt(2(1-alpha_{2n})) (1+z)).
// The numerator vanishes at z = -1, so the division is exact.
inline double szego_oprl_tilde(const VerblunskySequence& seq, std::size_t n, double x) {
    detail::require_szego_domain(x);
    const std::size_t deg = 2 * n + 1;
    const Poly vphi = detail::orthonormal_opuc(seq, deg);
    Poly h = vphi + reversed(vphi, deg);
    // synthetic division by (1+z); h is self-reversed so the remainder is 0
    std::vector<double> g(deg, 0.0);
    double carry = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
        g[i] = h.coeff(i) - carry;
        carry = g[i];
    }
    std::vector<double> e(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        e[j] = 0.5 * (g[n + j] + g[n - j]);
    const std::vector<double> u = detail::symmetric_to_u_basis(e);
    return clenshaw_u(u, x) / std::sqrt(2.0 * (1.0 - seq.alpha(2 * n)));
}

// OPRL of the Delsarte-Genin (even) measure: the Szego OPRL of the
// zero-interleaved coefficient sequence.
inline double dg_oprl(const VerblunskySequence& seq, std::size_t n, double x) {
    return szego_oprl(symmetrized_sequence(seq), n, x);
}

} // namespace cmvdvz

#endif
