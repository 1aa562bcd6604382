#include "jsrlab/matset/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jsrlab/errors.hpp"

namespace jsrlab {

Matrix::Matrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, 0.0) {
    if (dim <= 0) throw ValidationError("matrix dimension must be positive");
}

Matrix::Matrix(int dim, std::vector<double> entries) : dim_(dim), a_(std::move(entries)) {
    if (dim <= 0) throw ValidationError("matrix dimension must be positive");
    if (a_.size() != static_cast<size_t>(dim) * dim)
        throw ValidationError("matrix entry count does not match dim*dim");
    for (double v : a_)
        if (!std::isfinite(v)) throw ValidationError("matrix entries must be finite");
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (dim_ != rhs.dim_) throw ValidationError("matrix product dimension mismatch");
    Matrix out(dim_);
    const int n = dim_;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const double aik = a_[static_cast<size_t>(i) * n + k];
            if (aik == 0.0) continue;
            const double* brow = &rhs.a_[static_cast<size_t>(k) * n];
            double* orow = &out.a_[static_cast<size_t>(i) * n];
            for (int j = 0; j < n; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (dim_ != rhs.dim_) throw ValidationError("matrix sum dimension mismatch");
    Matrix out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (dim_ != rhs.dim_) throw ValidationError("matrix difference dimension mismatch");
    Matrix out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
    return out;
}

Matrix Matrix::scaled(double s) const {
    Matrix out = *this;
    for (double& v : out.a_) v *= s;
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::max_abs_diff(const Matrix& rhs) const {
    if (dim_ != rhs.dim_) throw ValidationError("matrix comparison dimension mismatch");
    double m = 0.0;
    for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - rhs.a_[i]));
    return m;
}

bool Matrix::lex_less(const Matrix& rhs) const {
    if (dim_ != rhs.dim_) return dim_ < rhs.dim_;
    return std::lexicographical_compare(a_.begin(), a_.end(), rhs.a_.begin(), rhs.a_.end());
}

double mat_norm(const Matrix& a, NormKind k) {
    const int n = a.dim();
    switch (k) {
    case NormKind::Induced1: {
        double best = 0.0;
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += std::abs(a(i, j));
            best = std::max(best, s);
        }
        return best;
    }
    case NormKind::InducedInf: {
        double best = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += std::abs(a(i, j));
            best = std::max(best, s);
        }
        return best;
    }
    case NormKind::Induced2: {
        if (a.max_abs() == 0.0) return 0.0;
        // sigma_max^2 = rho(a^T a); the Gram matrix is symmetric so the QR
        // solver sees a tridiagonal Hessenberg form and converges robustly.
        EigenOptions opt;
        opt.max_dim = std::max(64, n);
        return std::sqrt(spectral_radius(a.transposed() * a, opt));
    }
    }
    return 0.0;
}

namespace {

void householder_hessenberg(std::vector<double>& h, int n) {
    std::vector<double> v(static_cast<size_t>(n));
    for (int k = 0; k + 2 < n; ++k) {
        double nrm2 = 0.0;
        for (int i = k + 1; i < n; ++i) nrm2 += h[static_cast<size_t>(i) * n + k] * h[static_cast<size_t>(i) * n + k];
        double nrm = std::sqrt(nrm2);
        if (nrm == 0.0) continue;
        const double x0 = h[static_cast<size_t>(k + 1) * n + k];
        const double alpha = x0 >= 0 ? -nrm : nrm;
        const int m = n - k - 1;
        v[0] = x0 - alpha;
        for (int i = 1; i < m; ++i) v[static_cast<size_t>(i)] = h[static_cast<size_t>(k + 1 + i) * n + k];
        double vn2 = 0.0;
        for (int i = 0; i < m; ++i) vn2 += v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
        if (vn2 == 0.0) continue;
        const double inv = 2.0 / vn2;
        for (int c = k; c < n; ++c) {
            double t = 0.0;
            for (int i = 0; i < m; ++i) t += v[static_cast<size_t>(i)] * h[static_cast<size_t>(k + 1 + i) * n + c];
            t *= inv;
            for (int i = 0; i < m; ++i) h[static_cast<size_t>(k + 1 + i) * n + c] -= v[static_cast<size_t>(i)] * t;
        }
        for (int r = 0; r < n; ++r) {
            double t = 0.0;
            for (int i = 0; i < m; ++i) t += h[static_cast<size_t>(r) * n + k + 1 + i] * v[static_cast<size_t>(i)];
            t *= inv;
            for (int i = 0; i < m; ++i) h[static_cast<size_t>(r) * n + k + 1 + i] -= v[static_cast<size_t>(i)] * t;
        }
        h[static_cast<size_t>(k + 1) * n + k] = alpha;
        for (int i = k + 2; i < n; ++i) h[static_cast<size_t>(i) * n + k] = 0.0;
    }
}

void eig_2x2(double a, double b, double c, double d,
             std::complex<double>& l1, std::complex<double>& l2) {
    const double half = 0.5 * (a + d);
    const double det = a * d - b * c;
    const double disc = half * half - det;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        const double big = half >= 0 ? half + s : half - s;
        l1 = big;
        l2 = (big != 0.0) ? det / big : half - s; // big==0 forces det==0 and half==... 0
    } else {
        const double im = std::sqrt(-disc);
        l1 = {half, im};
        l2 = {half, -im};
    }
}

} // namespace

std::vector<std::complex<double>> eigenvalues(const Matrix& a, const EigenOptions& opt) {
    const int n = a.dim();
    if (n > opt.max_dim)
        throw ValidationError("eigen-solver dimension cap exceeded: dim " + std::to_string(n) +
                              " > " + std::to_string(opt.max_dim));
    const double scale = a.max_abs();
    if (scale == 0.0) return std::vector<std::complex<double>>(static_cast<size_t>(n), 0.0);

    std::vector<double> h(a.data());
    for (double& v : h) v /= scale;
    auto H = [&](int i, int j) -> double& { return h[static_cast<size_t>(i) * n + j]; };

    if (n == 1) return {std::complex<double>(H(0, 0) * scale)};
    householder_hessenberg(h, n);

    std::vector<std::complex<double>> eigs;
    eigs.reserve(static_cast<size_t>(n));
    const double eps = std::numeric_limits<double>::epsilon();
    const int max_sweeps = opt.max_sweeps > 0 ? opt.max_sweeps : 40 * n;
    int sweeps = 0;
    int stuck = 0; // Francis steps since the last deflation at the current corner

    int p = n - 1;
    while (p >= 0) {
        if (p == 0) {
            eigs.emplace_back(H(0, 0));
            break;
        }
        // deflation scan from the corner upward
        int l = p;
        while (l > 0) {
            double s = std::abs(H(l - 1, l - 1)) + std::abs(H(l, l));
            if (s == 0.0) s = 1.0;
            if (std::abs(H(l, l - 1)) <= eps * s) {
                H(l, l - 1) = 0.0;
                break;
            }
            --l;
        }
        if (l == p) {
            eigs.emplace_back(H(p, p));
            --p;
            stuck = 0;
            continue;
        }
        if (l == p - 1) {
            std::complex<double> l1, l2;
            eig_2x2(H(p - 1, p - 1), H(p - 1, p), H(p, p - 1), H(p, p), l1, l2);
            eigs.push_back(l1);
            eigs.push_back(l2);
            p -= 2;
            stuck = 0;
            continue;
        }
        if (++sweeps > max_sweeps) {
            double est = 0.0;
            for (const auto& e : eigs) est = std::max(est, std::abs(e));
            for (int i = 0; i <= p; ++i) est = std::max(est, std::abs(H(i, i)));
            throw ConvergenceError("QR iteration exhausted its sweep budget", est * scale);
        }

        // Francis double shift from the trailing 2x2, with the usual ad-hoc
        // exceptional shift when a corner refuses to deflate.
        double tr, det;
        ++stuck;
        if (stuck % 10 == 0) {
            const double s = std::abs(H(p, p - 1)) + std::abs(H(p - 1, p - 2));
            const double d1 = 0.75 * s + H(p, p);
            tr = 2.0 * d1;
            det = d1 * d1 + 0.4375 * s * s;
        } else {
            tr = H(p - 1, p - 1) + H(p, p);
            det = H(p - 1, p - 1) * H(p, p) - H(p - 1, p) * H(p, p - 1);
        }

        double x = H(l, l) * H(l, l) + H(l, l + 1) * H(l + 1, l) - tr * H(l, l) + det;
        double y = H(l + 1, l) * (H(l, l) + H(l + 1, l + 1) - tr);
        double z = H(l + 1, l) * H(l + 2, l + 1);

        for (int k = l; k <= p - 1; ++k) {
            const int nr = (k == p - 1) ? 2 : 3;
            double vv[3] = {x, y, nr == 3 ? z : 0.0};
            double nrm = std::sqrt(vv[0] * vv[0] + vv[1] * vv[1] + vv[2] * vv[2]);
            if (nrm != 0.0) {
                const double alpha = vv[0] >= 0 ? -nrm : nrm;
                vv[0] -= alpha;
                double vn2 = vv[0] * vv[0] + vv[1] * vv[1] + vv[2] * vv[2];
                if (vn2 != 0.0) {
                    const double inv = 2.0 / vn2;
                    const int c0 = (k == l) ? l : k - 1;
                    for (int c = c0; c <= p; ++c) {
                        double t = 0.0;
                        for (int i = 0; i < nr; ++i) t += vv[i] * H(k + i, c);
                        t *= inv;
                        for (int i = 0; i < nr; ++i) H(k + i, c) -= vv[i] * t;
                    }
                    const int rmax = std::min(k + 3, p);
                    for (int r = l; r <= rmax; ++r) {
                        double t = 0.0;
                        for (int i = 0; i < nr; ++i) t += H(r, k + i) * vv[i];
                        t *= inv;
                        for (int i = 0; i < nr; ++i) H(r, k + i) -= vv[i] * t;
                    }
                    if (k > l) {
                        H(k + 1, k - 1) = 0.0;
                        if (nr == 3) H(k + 2, k - 1) = 0.0;
                    }
                }
            }
            if (k < p - 1) {
                x = H(k + 1, k);
                y = H(k + 2, k);
                z = (k + 3 <= p) ? H(k + 3, k) : 0.0;
            }
        }
    }

    for (auto& e : eigs) e *= scale;
    return eigs;
}

double spectral_radius(const Matrix& a, const EigenOptions& opt) {
    double best = 0.0;
    for (const auto& e : eigenvalues(a, opt)) best = std::max(best, std::abs(e));
    return best;
}

} // namespace jsrlab
