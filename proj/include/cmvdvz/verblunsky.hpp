#ifndef CMVDVZ_VERBLUNSKY_HPP
#define CMVDVZ_VERBLUNSKY_HPP

// Real Verblunsky coefficient sequences alpha_n in (-1,1) together with the
// complementary parameters rho_n = sqrt(1-alpha_n^2) and the normalization
// constants kappa_n = (rho_0...rho_{n-1})^{-1}.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "errors.hpp"

namespace cmvdvz {

class VerblunskySequence {
public:
    // Convention for the index -1, used only in normalizations; never stored.
    static constexpr double alpha_minus_one = -1.0;

    explicit VerblunskySequence(std::vector<double> alphas)
        : alphas_(std::move(alphas)) {
        if (alphas_.empty())
            throw ParamOutOfRange("coefficient list must be non-empty");
        rho_.resize(alphas_.size());
        kappa_.resize(alphas_.size() + 1);
        kappa_[0] = 1.0;
        for (std::size_t n = 0; n < alphas_.size(); ++n) {
            const double a = alphas_[n];
            if (!(std::abs(a) < 1.0))
                throw CoefficientOutOfRange(static_cast<int>(n), a);
            rho_[n] = std::sqrt(1.0 - a * a);
            kappa_[n + 1] = kappa_[n] / rho_[n];
        }
    }

    // Rejects inputs with a nonzero imaginary part.
    static VerblunskySequence validated(const std::vector<std::complex<double>>& alphas) {
        std::vector<double> real(alphas.size());
        for (std::size_t n = 0; n < alphas.size(); ++n) {
            if (alphas[n].imag() != 0.0)
                throw NonRealCoefficient(static_cast<int>(n));
            real[n] = alphas[n].real();
        }
        return VerblunskySequence(std::move(real));
    }

    std::size_t size() const { return alphas_.size(); }

    double alpha(std::size_t n) const {
        if (n >= alphas_.size())
            throw IndexOutOfRange("alpha index " + std::to_string(n) + " out of range");
        return alphas_[n];
    }

    // alpha_{n-1} with the fixed convention alpha_{-1} = -1.
    double alpha_or_convention(long n) const {
        if (n == -1) return alpha_minus_one;
        return alpha(static_cast<std::size_t>(n));
    }

    double rho(std::size_t n) const {
        if (n >= rho_.size())
            throw IndexOutOfRange("rho index " + std::to_string(n) + " out of range");
        return rho_[n];
    }

    // kappa_n is defined for n = 0..size() since it needs rho up to n-1 only.
    double kappa(std::size_t n) const {
        if (n >= kappa_.size())
            throw IndexOutOfRange("kappa index " + std::to_string(n) + " out of range");
        return kappa_[n];
    }

    const std::vector<double>& alphas() const { return alphas_; }

private:
    std::vector<double> alphas_;
    std::vector<double> rho_;
    std::vector<double> kappa_;
};

inline VerblunskySequence free_sequence(std::size_t n) {
    if (n == 0) throw ParamOutOfRange("sequence length must be positive");
    return VerblunskySequence(std::vector<double>(n, 0.0));
}

// alpha_0 = alpha, alpha_n = 0 for n >= 1.
inline VerblunskySequence bernstein_szego_sequence(double alpha, std::size_t n) {
    if (!(std::abs(alpha) < 1.0))
        throw ParamOutOfRange("bernstein-szego parameter must lie in (-1,1)");
    if (n == 0) throw ParamOutOfRange("sequence length must be positive");
    std::vector<double> a(n, 0.0);
    a[0] = alpha;
    return VerblunskySequence(std::move(a));
}

// Lebesgue measure with a mass point m at z = 1: alpha_n = 1/(n + 1/m).
inline VerblunskySequence mass_point_sequence(double m, std::size_t n) {
    if (!(m > 0.0 && m < 1.0))
        throw ParamOutOfRange("mass parameter must lie in (0,1)");
    if (n == 0) throw ParamOutOfRange("sequence length must be positive");
    std::vector<double> a(n);
    for (std::size_t k = 0; k < n; ++k)
        a[k] = m / (static_cast<double>(k) * m + 1.0);
    return VerblunskySequence(std::move(a));
}

// Second kind variant of mass_point_sequence: all coefficients negated.
inline VerblunskySequence second_kind_sequence(double m, std::size_t n) {
    std::vector<double> a = mass_point_sequence(m, n).alphas();
    for (double& v : a) v = -v;
    return VerblunskySequence(std::move(a));
}

// Interleaves zeros: hat(alpha)_{2k} = 0, hat(alpha)_{2k+1} = alpha_k.
// These are the coefficients of the symmetrized (z -> z^2) measure.
inline VerblunskySequence symmetrized_sequence(const VerblunskySequence& seq) {
    std::vector<double> a(2 * seq.size(), 0.0);
    for (std::size_t k = 0; k < seq.size(); ++k)
        a[2 * k + 1] = seq.alpha(k);
    return VerblunskySequence(std::move(a));
}

} // namespace cmvdvz

#endif
