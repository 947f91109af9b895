#ifndef CMVDVZ_OPUC_HPP
#define CMVDVZ_OPUC_HPP

// Orthogonal polynomials on the unit circle generated from Verblunsky
// coefficients via the Szego recurrence
//   phi_{n+1}(z) = z phi_n(z) - alpha_n phi_n^*(z),
// and the orthonormal Laurent polynomials
//   chi_{2k}(z)   = kappa_{2k}   z^{-k} phi_{2k}^*(z),
//   chi_{2k+1}(z) = kappa_{2k+1} z^{-k} phi_{2k+1}(z).

#include <cstddef>
#include <vector>

#include "laurent.hpp"
#include "verblunsky.hpp"

namespace cmvdvz {

// Monic phi_0..phi_n.
inline std::vector<Poly> monic_opuc_all(const VerblunskySequence& seq, std::size_t n) {
    if (n > seq.size()) throw DegreeExceedsSequence(n, seq.size());
    std::vector<Poly> phi;
    phi.reserve(n + 1);
    phi.push_back(Poly::one());
    for (std::size_t k = 0; k < n; ++k) {
        Poly next = phi[k].shifted_up(1);
        next -= seq.alpha(k) * reversed(phi[k], k);
        phi.push_back(std::move(next));
    }
    return phi;
}

inline Poly monic_opuc(const VerblunskySequence& seq, std::size_t n) {
    return monic_opuc_all(seq, n).back();
}

inline LaurentPoly olpuc(const VerblunskySequence& seq, std::size_t n) {
    const Poly phi = monic_opuc(seq, n);
    const double kappa = seq.kappa(n);
    const int k = static_cast<int>(n / 2);
    if (n % 2 == 0)
        return LaurentPoly::from_poly(reversed(phi, n), -k) * kappa;
    return LaurentPoly::from_poly(phi, -k) * kappa;
}

inline std::vector<LaurentPoly> olpuc_all(const VerblunskySequence& seq, std::size_t n) {
    const std::vector<Poly> phi = monic_opuc_all(seq, n);
    std::vector<LaurentPoly> chi;
    chi.reserve(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        const int k = static_cast<int>(m / 2);
        if (m % 2 == 0)
            chi.push_back(LaurentPoly::from_poly(reversed(phi[m], m), -k) * seq.kappa(m));
        else
            chi.push_back(LaurentPoly::from_poly(phi[m], -k) * seq.kappa(m));
    }
    return chi;
}

// Monic symmetrized OPUC: phi-hat_{2k}(z) = phi_k(z^2),
// phi-hat_{2k+1}(z) = z phi_k(z^2).  Their Verblunsky coefficients are the
// zero-interleaved sequence produced by symmetrized_sequence().
inline Poly symmetrized_opuc(const VerblunskySequence& seq, std::size_t n) {
    const std::size_t k = n / 2;
    if (k > seq.size()) throw DegreeExceedsSequence(n, 2 * seq.size() + 1);
    const Poly base = monic_opuc(seq, k).compose_square();
    return (n % 2 == 0) ? base : base.shifted_up(1);
}

} // namespace cmvdvz

#endif
