#ifndef CMVDVZ_DVZ_HPP
#define CMVDVZ_DVZ_HPP

// The correspondence (lambda0, lambda1, alpha) <-> Jacobi matrix behind the
// pencil K_{l0,l1} = l0 L + l1 M.  A Jacobi matrix (a_n > 0) is of this form
// iff the points z_n = sum_{j<=n} b_j + i a_n lie on two concentric
// circumferences centered at lambda1 on the real axis: the odd-index circle
// passes through the origin (radius |lambda1|), the even-index circle has
// radius lambda0.  The coefficients are then recovered from
//   alpha_n = (sum_{j<=n} b_j - lambda1) / lambda_{n mod 2}.
// The map is one-to-one once the sign lambda0 > 0 is fixed; flipping it
// flips the sign of every even-index alpha.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "banded.hpp"
#include "errors.hpp"
#include "verblunsky.hpp"

namespace cmvdvz {

struct DvzParameters {
    double lambda0;  // canonical representative: > 0
    double lambda1;
    VerblunskySequence alphas;

    DvzParameters(double l0, double l1, VerblunskySequence a)
        : lambda0(l0), lambda1(l1), alphas(std::move(a)) {
        if (lambda0 <= 0.0)
            throw ParamOutOfRange("lambda0 must be positive in canonical form");
        if (lambda1 == 0.0) throw ZeroLambda();
    }
};

inline SymTridiagonal dvz_forward(const VerblunskySequence& seq, double lambda0,
                                  double lambda1, std::size_t n) {
    return jacobi_from_K(build_K(seq, lambda0, lambda1, n));
}

inline SymTridiagonal dvz_forward(const DvzParameters& p, std::size_t n) {
    return dvz_forward(p.alphas, p.lambda0, p.lambda1, n);
}

struct DvzInversion {
    std::optional<DvzParameters> params;
    std::string reason;          // empty iff params holds a value
    double max_residual = 0.0;   // max |(S_n-l1)^2 + a_n^2 - l_{e(n)}^2|

    bool ok() const { return params.has_value(); }
};

// Membership test plus parameter recovery for a finite Jacobi section.
// lambda1 is solved exactly from the first odd-index point via
// |z|^2 = 2 lambda1 Re z, lambda0 from the first even-index point sharing
// that center; every remaining point must satisfy its circle equation within
// tol (absolute, on the squared residual).  The criterion is necessary but
// not sufficient for an infinite extension; parameters describe the given
// section only.
inline DvzInversion dvz_invert(const SymTridiagonal& jacobi, double tol = 1e-9) {
    const std::size_t n = jacobi.size();
    if (n < 3)
        throw DegenerateInput(
            "need at least 3 rows (one even- and one odd-index point)");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(jacobi.off(i) > 0.0))
            throw DomainError("input is not a Jacobi matrix: offdiagonal must be positive");

    std::vector<double> s(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += jacobi.diag(i);
        s[i] = acc;
    }

    DvzInversion out;
    if (s[1] == 0.0) {
        out.reason = "odd-index point has zero real part; no admissible center";
        out.max_residual = std::abs(jacobi.off(1));
        return out;
    }
    const double a1 = jacobi.off(1);
    const double lambda1 = (s[1] * s[1] + a1 * a1) / (2.0 * s[1]);
    const double lambda0sq = (s[0] - lambda1) * (s[0] - lambda1) +
                             jacobi.off(0) * jacobi.off(0);
    const double lambda0 = std::sqrt(lambda0sq);

    double max_res = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double radius_sq = (i % 2 == 0) ? lambda0sq : lambda1 * lambda1;
        const double d = s[i] - lambda1;
        const double res = std::abs(d * d + jacobi.off(i) * jacobi.off(i) - radius_sq);
        if (res > max_res) max_res = res;
    }
    out.max_residual = max_res;
    if (max_res > tol) {
        out.reason = "circle condition violated";
        return out;
    }

    std::vector<double> alphas(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lam = (i % 2 == 0) ? lambda0 : lambda1;
        alphas[i] = (s[i] - lambda1) / lam;
        if (!(std::abs(alphas[i]) < 1.0)) {
            out.reason = "recovered coefficient " + std::to_string(i) +
                         " falls outside (-1,1)";
            return out;
        }
    }
    out.params.emplace(lambda0, lambda1, VerblunskySequence(std::move(alphas)));
    return out;
}

} // namespace cmvdvz

#endif
