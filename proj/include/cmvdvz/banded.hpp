#ifndef CMVDVZ_BANDED_HPP
#define CMVDVZ_BANDED_HPP

// Finite sections of the CMV factors L, M, the CMV matrix C = M L, the
// pencil K_{l0,l1} = l0 L + l1 M and its Jacobi form.  L and M are block
// diagonals of the symmetric orthogonal 2x2 blocks
//   Theta_n = ( alpha_n   rho_n  )
//             ( rho_n    -alpha_n ),
// with L = diag(Theta_0, Theta_2, ...) and M = 1 (+) diag(Theta_1, ...).
// A trailing incomplete block is truncated to its scalar (1,1) entry
// alpha_n; boundary_clean_rows counts the leading rows that agree with the
// infinite operator.

#include <cmath>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "verblunsky.hpp"

namespace cmvdvz {

struct ThetaBlock {
    double alpha;
    double rho;
};

class SymTridiagonal {
public:
    SymTridiagonal(std::vector<double> diag, std::vector<double> off,
                   std::size_t clean_rows)
        : diag_(std::move(diag)), off_(std::move(off)), clean_rows_(clean_rows) {
        if (off_.size() + 1 != diag_.size())
            throw ParamOutOfRange("offdiagonal must have one entry fewer than diagonal");
    }

    std::size_t size() const { return diag_.size(); }
    std::size_t boundary_clean_rows() const { return clean_rows_; }

    double diag(std::size_t i) const { return diag_[i]; }
    double off(std::size_t i) const { return off_[i]; }
    const std::vector<double>& diag() const { return diag_; }
    const std::vector<double>& off() const { return off_; }

    double at(std::size_t i, std::size_t j) const {
        if (i == j) return diag_[i];
        const std::size_t lo = i < j ? i : j;
        const std::size_t hi = i < j ? j : i;
        return (hi - lo == 1) ? off_[lo] : 0.0;
    }

private:
    std::vector<double> diag_;
    std::vector<double> off_;
    std::size_t clean_rows_;
};

// Small dense-in-band matrix for products and structural identities.
class BandedMatrix {
public:
    BandedMatrix(std::size_t n, int lo, int hi) : n_(n), lo_(lo), hi_(hi) {
        bands_.assign(static_cast<std::size_t>(hi_ - lo_ + 1),
                      std::vector<double>(n_, 0.0));
    }

    static BandedMatrix identity(std::size_t n) {
        BandedMatrix r(n, 0, 0);
        for (std::size_t i = 0; i < n; ++i) r.set(i, i, 1.0);
        return r;
    }

    static BandedMatrix from(const SymTridiagonal& t) {
        BandedMatrix r(t.size(), -1, 1);
        for (std::size_t i = 0; i < t.size(); ++i) r.set(i, i, t.diag(i));
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            r.set(i, i + 1, t.off(i));
            r.set(i + 1, i, t.off(i));
        }
        return r;
    }

    std::size_t size() const { return n_; }
    int lower() const { return lo_; }
    int upper() const { return hi_; }

    double at(std::size_t i, std::size_t j) const {
        const int off = static_cast<int>(j) - static_cast<int>(i);
        if (off < lo_ || off > hi_) return 0.0;
        return bands_[static_cast<std::size_t>(off - lo_)][i];
    }

    void set(std::size_t i, std::size_t j, double v) {
        const int off = static_cast<int>(j) - static_cast<int>(i);
        if (off < lo_ || off > hi_)
            throw IndexOutOfRange("entry outside stored band");
        bands_[static_cast<std::size_t>(off - lo_)][i] = v;
    }

    BandedMatrix transpose() const {
        BandedMatrix r(n_, -hi_, -lo_);
        for (std::size_t i = 0; i < n_; ++i)
            for (int off = lo_; off <= hi_; ++off) {
                const long j = static_cast<long>(i) + off;
                if (j < 0 || j >= static_cast<long>(n_)) continue;
                r.set(static_cast<std::size_t>(j), i, at(i, static_cast<std::size_t>(j)));
            }
        return r;
    }

    friend BandedMatrix operator*(const BandedMatrix& a, const BandedMatrix& b) {
        BandedMatrix r(a.n_, a.lo_ + b.lo_, a.hi_ + b.hi_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (int oa = a.lo_; oa <= a.hi_; ++oa) {
                const long k = static_cast<long>(i) + oa;
                if (k < 0 || k >= static_cast<long>(a.n_)) continue;
                const double av = a.at(i, static_cast<std::size_t>(k));
                if (av == 0.0) continue;
                for (int ob = b.lo_; ob <= b.hi_; ++ob) {
                    const long j = k + ob;
                    if (j < 0 || j >= static_cast<long>(a.n_)) continue;
                    r.set(i, static_cast<std::size_t>(j),
                          r.at(i, static_cast<std::size_t>(j)) +
                              av * b.at(static_cast<std::size_t>(k),
                                        static_cast<std::size_t>(j)));
                }
            }
        return r;
    }

    friend BandedMatrix operator+(const BandedMatrix& a, const BandedMatrix& b) {
        BandedMatrix r(a.n_, std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
        for (std::size_t i = 0; i < a.n_; ++i)
            for (int off = r.lo_; off <= r.hi_; ++off) {
                const long j = static_cast<long>(i) + off;
                if (j < 0 || j >= static_cast<long>(a.n_)) continue;
                const auto ju = static_cast<std::size_t>(j);
                r.set(i, ju, a.at(i, ju) + b.at(i, ju));
            }
        return r;
    }

    friend BandedMatrix operator-(const BandedMatrix& a, const BandedMatrix& b) {
        BandedMatrix r(a.n_, std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
        for (std::size_t i = 0; i < a.n_; ++i)
            for (int off = r.lo_; off <= r.hi_; ++off) {
                const long j = static_cast<long>(i) + off;
                if (j < 0 || j >= static_cast<long>(a.n_)) continue;
                const auto ju = static_cast<std::size_t>(j);
                r.set(i, ju, a.at(i, ju) - b.at(i, ju));
            }
        return r;
    }

    // max |entry| over rows and columns in [row_lo, row_hi].
    double max_abs_window(std::size_t row_lo, std::size_t row_hi) const {
        double m = 0.0;
        for (std::size_t i = row_lo; i <= row_hi && i < n_; ++i)
            for (int off = lo_; off <= hi_; ++off) {
                const long j = static_cast<long>(i) + off;
                if (j < static_cast<long>(row_lo) || j > static_cast<long>(row_hi) ||
                    j >= static_cast<long>(n_))
                    continue;
                const double v = std::abs(at(i, static_cast<std::size_t>(j)));
                if (v > m) m = v;
            }
        return m;
    }

private:
    std::size_t n_;
    int lo_, hi_;
    std::vector<std::vector<double>> bands_;
};

namespace detail {

// Places Theta blocks starting at rows first_block, first_block+2, ...
inline SymTridiagonal theta_block_diagonal(const VerblunskySequence& seq,
                                           std::size_t n, std::size_t first_block) {
    if (n == 0) throw ParamOutOfRange("matrix size must be positive");
    if (n > seq.size()) throw SizeExceedsSequence(n, seq.size());
    std::vector<double> diag(n, 0.0);
    std::vector<double> off(n > 1 ? n - 1 : 0, 0.0);
    if (first_block == 1) diag[0] = 1.0;
    bool truncated = false;
    for (std::size_t i = first_block; i < n; i += 2) {
        if (i + 1 < n) {
            diag[i] = seq.alpha(i);
            diag[i + 1] = -seq.alpha(i);
            off[i] = seq.rho(i);
        } else {
            diag[i] = seq.alpha(i);
            truncated = true;
        }
    }
    return SymTridiagonal(std::move(diag), std::move(off), truncated ? n - 1 : n);
}

} // namespace detail

inline SymTridiagonal build_L(const VerblunskySequence& seq, std::size_t n) {
    return detail::theta_block_diagonal(seq, n, 0);
}

inline SymTridiagonal build_M(const VerblunskySequence& seq, std::size_t n) {
    return detail::theta_block_diagonal(seq, n, 1);
}

// C = M L, five-diagonal.  Rows corrupted by the truncation of either factor
// are the trailing ones; identities should use interior rows only.
inline BandedMatrix build_cmv(const VerblunskySequence& seq, std::size_t n) {
    return BandedMatrix::from(build_M(seq, n)) * BandedMatrix::from(build_L(seq, n));
}

// K_{l0,l1} = l0 L + l1 M, tridiagonal:
//   diag    l0 a_0 + l1, l1 a_1 - l0 a_0, l0 a_2 - l1 a_1, ...
//   offdiag l0 r_0, l1 r_1, l0 r_2, ...
inline SymTridiagonal build_K(const VerblunskySequence& seq, double lambda0,
                              double lambda1, std::size_t n) {
    if (lambda0 == 0.0 || lambda1 == 0.0) throw ZeroLambda();
    if (n == 0) throw ParamOutOfRange("matrix size must be positive");
    if (n > seq.size()) throw SizeExceedsSequence(n, seq.size());
    const auto lam = [&](std::size_t k) { return (k % 2 == 0) ? lambda0 : lambda1; };
    std::vector<double> diag(n);
    std::vector<double> off(n > 1 ? n - 1 : 0);
    diag[0] = lambda0 * seq.alpha(0) + lambda1;
    for (std::size_t i = 1; i < n; ++i)
        diag[i] = lam(i) * seq.alpha(i) - lam(i - 1) * seq.alpha(i - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) off[i] = lam(i) * seq.rho(i);
    return SymTridiagonal(std::move(diag), std::move(off), n > 0 ? n - 1 : 0);
}

// Diagonal of the sign matrix Pi_{e0,e1}: period-4 pattern (1, e0, e0 e1, e1)
// with e_k = sgn(lambda_k).  Conjugation by Pi flips the offdiagonal signs of
// K to give a true Jacobi matrix.
inline std::vector<double> sign_diagonal(double lambda0, double lambda1, std::size_t n) {
    if (lambda0 == 0.0 || lambda1 == 0.0) throw ZeroLambda();
    const double e0 = lambda0 > 0 ? 1.0 : -1.0;
    const double e1 = lambda1 > 0 ? 1.0 : -1.0;
    const double pattern[4] = {1.0, e0, e0 * e1, e1};
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = pattern[i % 4];
    return d;
}

inline SymTridiagonal jacobi_from_K(const SymTridiagonal& k) {
    std::vector<double> off(k.off());
    for (double& v : off) v = std::abs(v);
    return SymTridiagonal(k.diag(), std::move(off), k.boundary_clean_rows());
}

} // namespace cmvdvz

#endif
