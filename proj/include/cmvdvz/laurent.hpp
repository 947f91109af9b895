#ifndef CMVDVZ_LAURENT_HPP
#define CMVDVZ_LAURENT_HPP

// Dense real polynomials and sparse real Laurent polynomials.  Coefficients
// are kept exactly as stored; only exact zeros are pruned, so degree queries
// are never affected by epsilon thresholds.

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "errors.hpp"

namespace cmvdvz {

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly one() { return Poly({1.0}); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    double coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0.0; }

    void set_coeff(std::size_t i, double v) {
        if (i >= c_.size()) {
            if (v == 0.0) return;
            c_.resize(i + 1, 0.0);
        }
        c_[i] = v;
        trim();
    }

    const std::vector<double>& coeffs() const { return c_; }

    double operator()(double x) const {
        double r = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    std::complex<double> operator()(std::complex<double> z) const {
        std::complex<double> r = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * z + c_[i];
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Poly& operator*=(double s) {
        for (double& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, double s) { return a *= s; }
    friend Poly operator*(double s, Poly a) { return a *= s; }

    // p(z) * z^k, k >= 0.
    Poly shifted_up(std::size_t k) const {
        if (c_.empty()) return Poly();
        std::vector<double> r(c_.size() + k, 0.0);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(std::move(r));
    }

    // p(z^2)
    Poly compose_square() const {
        if (c_.empty()) return Poly();
        std::vector<double> r(2 * c_.size() - 1, 0.0);
        for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
        return Poly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
    }

    std::vector<double> c_;
};

// z^n * p(1/z) for deg p <= n; with real coefficients this is coefficient
// reversal padded to length n+1.
inline Poly reversed(const Poly& p, std::size_t n) {
    if (p.degree() > static_cast<int>(n))
        throw DegreeExceedsSequence(static_cast<std::size_t>(p.degree()), n);
    std::vector<double> r(n + 1, 0.0);
    for (std::size_t i = 0; i <= n; ++i) r[n - i] = p.coeff(i);
    return Poly(std::move(r));
}

class LaurentPoly {
public:
    LaurentPoly() = default;

    double coeff(int j) const {
        auto it = c_.find(j);
        return it == c_.end() ? 0.0 : it->second;
    }

    void set_coeff(int j, double v) {
        if (v == 0.0)
            c_.erase(j);
        else
            c_[j] = v;
    }

    void add_coeff(int j, double v) { set_coeff(j, coeff(j) + v); }

    bool empty() const { return c_.empty(); }
    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    const std::map<int, double>& coeffs() const { return c_; }

    std::complex<double> operator()(std::complex<double> z) const {
        std::complex<double> r = 0.0;
        for (const auto& [j, v] : c_) r += v * std::pow(z, j);
        return r;
    }

    double operator()(double x) const {
        double r = 0.0;
        for (const auto& [j, v] : c_) r += v * std::pow(x, j);
        return r;
    }

    // The substar involution c_j -> c_{-j}; on the unit circle this is
    // complex conjugation of the values for real coefficients.
    LaurentPoly substar() const {
        LaurentPoly r;
        for (const auto& [j, v] : c_) r.set_coeff(-j, v);
        return r;
    }

    LaurentPoly& operator*=(double s) {
        if (s == 0.0) {
            c_.clear();
            return *this;
        }
        for (auto& [j, v] : c_) v *= s;
        return *this;
    }

    friend LaurentPoly operator*(LaurentPoly a, double s) { return a *= s; }
    friend LaurentPoly operator*(double s, LaurentPoly a) { return a *= s; }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [j, v] : b.c_) r.add_coeff(j, -v);
        return r;
    }

    // p(z) * z^shift as a Laurent polynomial.
    static LaurentPoly from_poly(const Poly& p, int shift) {
        LaurentPoly r;
        for (int i = 0; i <= p.degree(); ++i)
            r.set_coeff(i + shift, p.coeff(static_cast<std::size_t>(i)));
        return r;
    }

    double max_abs_diff(const LaurentPoly& o) const {
        double m = 0.0;
        for (const auto& [j, v] : c_) {
            double d = std::abs(v - o.coeff(j));
            if (d > m) m = d;
        }
        for (const auto& [j, v] : o.c_) {
            double d = std::abs(v - coeff(j));
            if (d > m) m = d;
        }
        return m;
    }

private:
    std::map<int, double> c_;
};

} // namespace cmvdvz

#endif
