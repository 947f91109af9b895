#ifndef CMVDVZ_MEASURE_HPP
#define CMVDVZ_MEASURE_HPP

// Probability measures on the unit circle (conjugation symmetric) and the
// measures they induce on the real line.  Densities are stored as callables
// with declared support so transformations compose exactly; sampling only
// happens at quadrature time.
//
// The pushforward under x^2 = (z+lambda)(1/z+lambda) carries
//   d nu_lambda(x) = (1/|lambda|) sqrt(((x+lambda)^2-1)/(1-(x-lambda)^2))
//                    w(theta(x)) dx  on  E_lambda = +-[|1-|lambda||, 1+|lambda|],
// theta(x) = arccos(t_lambda(x)/2), plus for each atom pair at angle
// theta_k of mass m_k the pair of atoms at +-x_k, x_k = sqrt(1+lambda^2+
// 2 lambda cos theta_k), with masses
//   m_k ((x_k+lambda)^2-1)/(2 lambda x_k)  at +x_k,
//   m_k (1-(x_k-lambda)^2)/(2 lambda x_k)  at -x_k.
// Atoms of the circle measure at z = +-1 enter with the half-mass split.

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"

namespace cmvdvz {

inline constexpr double pi = 3.14159265358979323846;

// Angle in [0,pi].  Interior angles stand for the conjugate pair {+-theta},
// each point carrying `mass`; theta in {0,pi} is a single atom of total mass.
struct CircleAtom {
    double theta;
    double mass;
};

struct LineAtom {
    double x;
    double mass;
};

struct LineSegment {
    double lo;
    double hi;
    std::function<double(double)> density;  // mass per unit x
    // Edge behaviour exponents e: density ~ (x-edge)^e; half-integer values
    // trigger the singularity-absorbing substitution in the quadrature.
    double edge_exp_lo = 0.0;
    double edge_exp_hi = 0.0;
};

namespace detail {

// Folds an angle into [-pi,pi]; densities are even and 2pi-periodic.
inline double fold_angle(double theta) { return std::remainder(theta, 2.0 * pi); }

inline double trapezoid_circle_mass(const std::function<double(double)>& w,
                                    std::size_t nodes) {
    double s = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) {
        const double theta = -pi + 2.0 * pi * (static_cast<double>(j) + 0.5) /
                                       static_cast<double>(nodes);
        s += w(theta);
    }
    return s * 2.0 * pi / static_cast<double>(nodes);
}

} // namespace detail

class CircleMeasure {
public:
    explicit CircleMeasure(std::function<double(double)> density,
                           std::vector<CircleAtom> atoms = {})
        : w_(std::move(density)), atoms_(std::move(atoms)) {
        for (const auto& a : atoms_) {
            if (a.theta < -1e-12 || a.theta > pi + 1e-12)
                throw ParamOutOfRange("atom angle must lie in [0,pi]");
            if (!(a.mass > 0.0)) throw ParamOutOfRange("atom mass must be positive");
        }
        if (w_) {
            for (int i = 1; i <= 64; ++i) {
                const double theta = pi * i / 65.0;
                const double wp = w_(theta), wm = w_(-theta);
                if (std::abs(wp - wm) > 1e-12 * std::max(1.0, std::abs(wp)))
                    throw NonSymmetricMeasure("density is not conjugation symmetric");
            }
        }
        double mass = atom_mass();
        if (w_) mass += detail::trapezoid_circle_mass(w_, 1024);
        if (std::abs(mass - 1.0) > 1e-6)
            throw MeasureNotNormalized("circle measure mass is " + std::to_string(mass));
    }

    static CircleMeasure lebesgue() {
        return CircleMeasure([](double) { return 1.0 / (2.0 * pi); });
    }

    bool has_density() const { return static_cast<bool>(w_); }
    double density(double theta) const { return w_ ? w_(detail::fold_angle(theta)) : 0.0; }
    const std::function<double(double)>& density_fn() const { return w_; }
    const std::vector<CircleAtom>& atoms() const { return atoms_; }

    // Total atomic mass including pair multiplicity.
    double atom_mass() const {
        double s = 0.0;
        for (const auto& a : atoms_) s += a.mass * (is_edge_angle(a.theta) ? 1.0 : 2.0);
        return s;
    }

    static bool is_edge_angle(double theta) {
        return theta < 1e-12 || theta > pi - 1e-12;
    }

private:
    std::function<double(double)> w_;
    std::vector<CircleAtom> atoms_;
};

class LineMeasure {
public:
    LineMeasure() = default;
    LineMeasure(std::vector<LineSegment> segments, std::vector<LineAtom> atoms)
        : segments_(std::move(segments)), atoms_(std::move(atoms)) {}

    const std::vector<LineSegment>& segments() const { return segments_; }
    const std::vector<LineAtom>& atoms() const { return atoms_; }

    double atom_mass() const {
        double s = 0.0;
        for (const auto& a : atoms_) s += a.mass;
        return s;
    }

    // Density at x, zero outside every declared segment.
    double density(double x) const {
        for (const auto& s : segments_)
            if (x >= s.lo && x <= s.hi && s.density) return s.density(x);
        return 0.0;
    }

    LineMeasure scaled(double factor) const {
        std::vector<LineSegment> segs;
        segs.reserve(segments_.size());
        for (const auto& s : segments_) {
            auto base = s.density;
            segs.push_back({s.lo, s.hi,
                            [base, factor](double x) { return factor * base(x); },
                            s.edge_exp_lo, s.edge_exp_hi});
        }
        std::vector<LineAtom> atoms = atoms_;
        for (auto& a : atoms) a.mass *= factor;
        return LineMeasure(std::move(segs), std::move(atoms));
    }

private:
    std::vector<LineSegment> segments_;
    std::vector<LineAtom> atoms_;
};

// Support of the pushforward: +-[|1-|lambda||, 1+|lambda|], merging to the
// single interval [-(1+|lambda|), 1+|lambda|] when |lambda| = 1.
inline std::vector<std::pair<double, double>> support_intervals(double lambda) {
    if (lambda == 0.0) throw ZeroLambda();
    const double al = std::abs(lambda);
    const double outer = 1.0 + al;
    const double inner = std::abs(1.0 - al);
    if (inner == 0.0) return {{-outer, outer}};
    return {{-outer, -inner}, {inner, outer}};
}

namespace detail {

inline double theta_of_x(double lambda, double x) {
    const double t = x * x / lambda - (lambda + 1.0 / lambda);
    double half = t / 2.0;
    if (half > 1.0) half = 1.0;
    if (half < -1.0) half = -1.0;
    return std::acos(half);
}

// ((x+l)^2-1)/(1-(x-l)^2) reduces to (2+x)/(2-x) at l=1 and (2-x)/(2+x) at
// l=-1; the generic quotient is 0/0 at x = 0 in the merged case.
inline double pushforward_factor(double lambda, double x) {
    if (lambda == 1.0) return std::sqrt(std::max(0.0, (2.0 + x) / (2.0 - x)));
    if (lambda == -1.0) return std::sqrt(std::max(0.0, (2.0 - x) / (2.0 + x)));
    const double num = (x + lambda) * (x + lambda) - 1.0;
    const double den = 1.0 - (x - lambda) * (x - lambda);
    if (num <= 0.0) return 0.0;
    return std::sqrt(num / std::max(den, 1e-300)) / std::abs(lambda);
}

inline void append_atom(std::vector<LineAtom>& atoms, double x, double mass) {
    if (mass < 1e-15) return;  // zero-mass edges are pruned
    atoms.push_back({x, mass});
}

} // namespace detail

inline LineMeasure dvz_pushforward(const CircleMeasure& mu, double lambda) {
    if (lambda == 0.0) throw ZeroLambda();

    std::vector<LineSegment> segments;
    if (mu.has_density()) {
        auto w = mu.density_fn();
        auto dens = [w, lambda](double x) {
            return detail::pushforward_factor(lambda, x) *
                   w(detail::theta_of_x(lambda, x));
        };
        for (const auto& [lo, hi] : support_intervals(lambda)) {
            auto edge_exp = [lambda](double e) {
                if (std::abs(1.0 - (e - lambda) * (e - lambda)) < 1e-9) return -0.5;
                if (std::abs((e + lambda) * (e + lambda) - 1.0) < 1e-9) return 0.5;
                return 0.0;
            };
            segments.push_back({lo, hi, dens, edge_exp(lo), edge_exp(hi)});
        }
    }

    std::vector<LineAtom> atoms;
    for (const auto& a : mu.atoms()) {
        const double m = CircleMeasure::is_edge_angle(a.theta) ? a.mass / 2.0 : a.mass;
        const double xk = std::sqrt(std::max(
            0.0, 1.0 + lambda * lambda + 2.0 * lambda * std::cos(a.theta)));
        if (xk < 1e-12) {
            // both images collapse onto x = 0; the 0/0 factors tend to 1 each
            detail::append_atom(atoms, 0.0, 2.0 * m);
            continue;
        }
        const double plus = m * ((xk + lambda) * (xk + lambda) - 1.0) / (2.0 * lambda * xk);
        const double minus = m * (1.0 - (xk - lambda) * (xk - lambda)) / (2.0 * lambda * xk);
        detail::append_atom(atoms, xk, plus);
        detail::append_atom(atoms, -xk, minus);
    }
    return LineMeasure(std::move(segments), std::move(atoms));
}

// Szego projection: the image of mu under z -> x = z + 1/z, with density
// 2 w(arccos(x/2)) / sqrt(4-x^2) on [-2,2].
inline LineMeasure szego_projection(const CircleMeasure& mu) {
    std::vector<LineSegment> segments;
    if (mu.has_density()) {
        auto w = mu.density_fn();
        auto dens = [w](double x) {
            double half = x / 2.0;
            if (half > 1.0) half = 1.0;
            if (half < -1.0) half = -1.0;
            return 2.0 * w(std::acos(half)) /
                   std::sqrt(std::max(4.0 - x * x, 1e-300));
        };
        segments.push_back({-2.0, 2.0, dens, -0.5, -0.5});
    }
    std::vector<LineAtom> atoms;
    for (const auto& a : mu.atoms()) {
        const double x = 2.0 * std::cos(a.theta);
        const double mult = CircleMeasure::is_edge_angle(a.theta) ? 1.0 : 2.0;
        detail::append_atom(atoms, x, mult * a.mass);
    }
    return LineMeasure(std::move(segments), std::move(atoms));
}

// Symmetrization z -> z^2 preimage: the density becomes w(2 theta) and each
// atom splits into its two square roots with half the mass.
inline CircleMeasure symmetrize(const CircleMeasure& mu) {
    std::function<double(double)> what;
    if (mu.has_density()) {
        auto w = mu.density_fn();
        what = [w](double theta) { return w(detail::fold_angle(2.0 * theta)); };
    }
    std::vector<CircleAtom> atoms;
    for (const auto& a : mu.atoms()) {
        if (a.theta < 1e-12) {
            // square roots of 1 are +-1
            atoms.push_back({0.0, a.mass / 2.0});
            atoms.push_back({pi, a.mass / 2.0});
        } else if (a.theta > pi - 1e-12) {
            // square roots of -1 are the conjugate pair +-i
            atoms.push_back({pi / 2.0, a.mass / 2.0});
        } else {
            atoms.push_back({a.theta / 2.0, a.mass / 2.0});
            atoms.push_back({pi - a.theta / 2.0, a.mass / 2.0});
        }
    }
    return CircleMeasure(std::move(what), std::move(atoms));
}

// Multiplies density and atom masses by poly; poly must be nonnegative on
// the support.
inline LineMeasure christoffel(const LineMeasure& nu, const Poly& poly) {
    std::vector<LineSegment> segments;
    for (const auto& s : nu.segments()) {
        for (int i = 0; i <= 32; ++i) {
            const double x = s.lo + (s.hi - s.lo) * i / 32.0;
            if (poly(x) < -1e-12)
                throw NegativeWeight("polynomial is negative at x = " + std::to_string(x));
        }
        auto base = s.density;
        auto dens = [base, poly](double x) { return poly(x) * base(x); };
        // a zero of the factor at an edge raises the edge exponent
        const double bump_lo = std::abs(poly(s.lo)) < 1e-13 ? 1.0 : 0.0;
        const double bump_hi = std::abs(poly(s.hi)) < 1e-13 ? 1.0 : 0.0;
        segments.push_back(
            {s.lo, s.hi, dens, s.edge_exp_lo + bump_lo, s.edge_exp_hi + bump_hi});
    }
    std::vector<LineAtom> atoms;
    for (const auto& a : nu.atoms()) {
        const double p = poly(a.x);
        if (p < -1e-12)
            throw NegativeWeight("polynomial is negative at atom x = " + std::to_string(a.x));
        detail::append_atom(atoms, a.x, a.mass * p);
    }
    return LineMeasure(std::move(segments), std::move(atoms));
}

// lambda = +-1 specialisations with the one-to-one angle maps
// theta(x) = 2 arccos(x/2) resp. 2 arcsin(x/2); must agree with
// dvz_pushforward(mu, +-1) as a measure.
inline LineMeasure basic_dvz_measure(const CircleMeasure& mu, int sign) {
    if (sign != 1 && sign != -1) throw ParamOutOfRange("sign must be +1 or -1");
    std::vector<LineSegment> segments;
    if (mu.has_density()) {
        auto w = mu.density_fn();
        std::function<double(double)> dens;
        if (sign == 1)
            dens = [w](double x) {
                double half = x / 2.0;
                if (half > 1.0) half = 1.0;
                if (half < -1.0) half = -1.0;
                return (2.0 + x) * w(detail::fold_angle(2.0 * std::acos(half))) /
                       std::sqrt(std::max(4.0 - x * x, 1e-300));
            };
        else
            dens = [w](double x) {
                double half = x / 2.0;
                if (half > 1.0) half = 1.0;
                if (half < -1.0) half = -1.0;
                return (2.0 - x) * w(2.0 * std::asin(half)) /
                       std::sqrt(std::max(4.0 - x * x, 1e-300));
            };
        segments.push_back({-2.0, 2.0, std::move(dens),
                            sign == 1 ? 0.5 : -0.5, sign == 1 ? -0.5 : 0.5});
    }
    std::vector<LineAtom> atoms;
    for (const auto& a : mu.atoms()) {
        if (CircleMeasure::is_edge_angle(a.theta)) {
            const bool at_one = a.theta < 1e-12;
            if (sign == 1) {
                if (at_one)
                    detail::append_atom(atoms, 2.0, a.mass);  // (m/2)(2+2)/2 twice-split
                else
                    detail::append_atom(atoms, 0.0, a.mass);
            } else {
                if (at_one)
                    detail::append_atom(atoms, 0.0, a.mass);
                else
                    detail::append_atom(atoms, -2.0, a.mass);
            }
            continue;
        }
        const double xk = (sign == 1) ? 2.0 * std::cos(a.theta / 2.0)
                                      : 2.0 * std::sin(a.theta / 2.0);
        detail::append_atom(atoms, xk, 0.5 * (2.0 + (sign == 1 ? xk : -xk)) * a.mass);
        detail::append_atom(atoms, -xk, 0.5 * (2.0 - (sign == 1 ? xk : -xk)) * a.mass);
    }
    return LineMeasure(std::move(segments), std::move(atoms));
}

} // namespace cmvdvz

#endif
