#ifndef CMVDVZ_QUADRATURE_HPP
#define CMVDVZ_QUADRATURE_HPP

// Composite Gauss-Legendre integration against line and circle measures.
// Segments flagged with half-integer edge exponents are integrated after the
// change of variable x = a + (b-a) sin^2(pi v / 2), which turns densities
// with (x-edge)^{+-1/2} behaviour into analytic integrands; plain
// Gauss-Legendre converges too slowly on the -1/2 edges otherwise.
// Atoms contribute their mass at their location.  Segment sums are
// accumulated in sorted order so results are reproducible bit for bit.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "banded.hpp"
#include "errors.hpp"
#include "measure.hpp"

namespace cmvdvz {

struct QuadratureSpec {
    int nodes_per_segment = 200;
    int circle_nodes = 512;

    // Honors the CMVDVZ_QUAD_NODES override.
    static QuadratureSpec from_env() {
        QuadratureSpec spec;
        if (const char* env = std::getenv("CMVDVZ_QUAD_NODES")) {
            const int n = std::atoi(env);
            if (n >= 8) {
                spec.nodes_per_segment = n;
                spec.circle_nodes = std::max(n, 64);
            }
        }
        return spec;
    }
};

struct GaussLegendre {
    std::vector<double> x;  // nodes on [-1,1]
    std::vector<double> w;
};

// Newton iteration on the Legendre recurrence; cached per order.
inline const GaussLegendre& gauss_legendre(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussLegendre gl;
    gl.x.resize(n);
    gl.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        gl.x[i] = -z;
        gl.x[n - 1 - i] = z;
        gl.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        gl.w[n - 1 - i] = gl.w[i];
    }
    return cache.emplace(n, std::move(gl)).first->second;
}

// Nodes and weights materializing a line measure; weights already include
// the density, so any integral is a plain weighted sum.
struct LineQuadrature {
    std::vector<double> x;
    std::vector<double> w;

    double integrate(const std::function<double(double)>& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double v = f(x[i]);
            if (!std::isfinite(v))
                throw NonFiniteIntegrand("integrand not finite at x = " +
                                         std::to_string(x[i]));
            s += w[i] * v;
        }
        return s;
    }
};

inline LineQuadrature discretize(const LineMeasure& nu,
                                 const QuadratureSpec& spec = {}) {
    LineQuadrature q;
    std::vector<LineSegment> segs = nu.segments();
    std::sort(segs.begin(), segs.end(),
              [](const LineSegment& a, const LineSegment& b) { return a.lo < b.lo; });
    const GaussLegendre& gl = gauss_legendre(spec.nodes_per_segment);
    for (const auto& s : segs) {
        const double len = s.hi - s.lo;
        const bool substitute = s.edge_exp_lo != 0.0 || s.edge_exp_hi != 0.0;
        for (std::size_t i = 0; i < gl.x.size(); ++i) {
            double x, jac;
            if (substitute) {
                const double v = 0.5 * (gl.x[i] + 1.0);  // [0,1]
                const double sn = std::sin(0.5 * pi * v);
                x = s.lo + len * sn * sn;
                jac = 0.5 * len * (0.5 * pi) * std::sin(pi * v);
            } else {
                x = s.lo + len * 0.5 * (gl.x[i] + 1.0);
                jac = 0.5 * len;
            }
            const double dens = s.density ? s.density(x) : 0.0;
            if (!std::isfinite(dens))
                throw NonFiniteIntegrand("density not finite at x = " + std::to_string(x));
            q.x.push_back(x);
            q.w.push_back(gl.w[i] * jac * dens);
        }
    }
    for (const auto& a : nu.atoms()) {
        q.x.push_back(a.x);
        q.w.push_back(a.mass);
    }
    return q;
}

inline double integrate_line(const LineMeasure& nu,
                             const std::function<double(double)>& f,
                             const QuadratureSpec& spec = {}) {
    return discretize(nu, spec).integrate(f);
}

inline double total_mass(const LineMeasure& nu, const QuadratureSpec& spec = {}) {
    return integrate_line(nu, [](double) { return 1.0; }, spec);
}

inline LineMeasure normalized(const LineMeasure& nu, const QuadratureSpec& spec = {}) {
    const double mass = total_mass(nu, spec);
    if (!(mass > 0.0)) throw MeasureNotNormalized("measure has nonpositive mass");
    return nu.scaled(1.0 / mass);
}

// Midpoint rule on the full circle (spectrally accurate for smooth periodic
// densities) plus atom terms; interior atom pairs contribute both angles.
inline double integrate_circle(const CircleMeasure& mu,
                               const std::function<double(double)>& f,
                               const QuadratureSpec& spec = {}) {
    double s = 0.0;
    if (mu.has_density()) {
        const int n = spec.circle_nodes;
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const double theta = -pi + 2.0 * pi * (j + 0.5) / n;
            const double v = f(theta) * mu.density(theta);
            if (!std::isfinite(v))
                throw NonFiniteIntegrand("integrand not finite at theta = " +
                                         std::to_string(theta));
            acc += v;
        }
        s += acc * 2.0 * pi / n;
    }
    for (const auto& a : mu.atoms()) {
        if (CircleMeasure::is_edge_angle(a.theta))
            s += a.mass * f(a.theta);
        else
            s += a.mass * (f(a.theta) + f(-a.theta));
    }
    return s;
}

struct GramResult {
    std::vector<std::vector<double>> g;
    double defect = 0.0;  // max |G - I|
};

inline GramResult gram(const std::vector<std::function<double(double)>>& fs,
                       const LineMeasure& nu, const QuadratureSpec& spec = {}) {
    const LineQuadrature q = discretize(nu, spec);
    const std::size_t m = fs.size();
    std::vector<std::vector<double>> values(m, std::vector<double>(q.x.size()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < q.x.size(); ++k) {
            values[i][k] = fs[i](q.x[k]);
            if (!std::isfinite(values[i][k]))
                throw NonFiniteIntegrand("function " + std::to_string(i) +
                                         " not finite at a node");
        }
    GramResult r;
    r.g.assign(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < q.x.size(); ++k)
                s += q.w[k] * values[i][k] * values[j][k];
            r.g[i][j] = r.g[j][i] = s;
            const double target = (i == j) ? 1.0 : 0.0;
            r.defect = std::max(r.defect, std::abs(s - target));
        }
    return r;
}

// Discretized Stieltjes procedure: orthonormalizes 1, x, x^2, ... against
// the measure by the three term recurrence, returning the leading n x n
// Jacobi section.  Independent of the Verblunsky route by construction.
inline SymTridiagonal stieltjes_jacobi(const LineMeasure& nu, std::size_t n,
                                       const QuadratureSpec& spec = {}) {
    if (n == 0) throw ParamOutOfRange("need at least one recurrence row");
    const LineQuadrature q = discretize(nu, spec);
    const std::size_t npts = q.x.size();
    double mass = 0.0;
    for (double w : q.w) mass += w;
    if (!(mass > 0.0)) throw LossOfPositivity(0);

    std::vector<double> prev(npts, 0.0), cur(npts, 1.0 / std::sqrt(mass));
    std::vector<double> b(n, 0.0), a(n > 1 ? n - 1 : 0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double bk = 0.0;
        for (std::size_t i = 0; i < npts; ++i) bk += q.w[i] * q.x[i] * cur[i] * cur[i];
        b[k] = bk;
        if (k + 1 == n) break;
        std::vector<double> next(npts);
        for (std::size_t i = 0; i < npts; ++i)
            next[i] = (q.x[i] - bk) * cur[i] - (k > 0 ? a[k - 1] * prev[i] : 0.0);
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < npts; ++i) norm_sq += q.w[i] * next[i] * next[i];
        if (!(norm_sq > 0.0)) throw LossOfPositivity(k + 1);
        a[k] = std::sqrt(norm_sq);
        for (double& v : next) v /= a[k];
        prev.swap(cur);
        cur.swap(next);
    }
    return SymTridiagonal(std::move(b), std::move(a), n);
}

} // namespace cmvdvz

#endif
