#include "jsrlab/jsr/kronecker.hpp"

#include <algorithm>
#include <cmath>

#include "jsrlab/errors.hpp"

namespace jsrlab {

std::vector<double> vec_column_major(const Matrix& x) {
    const int n = x.dim();
    std::vector<double> v(static_cast<size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(j) * n + i] = x(i, j);
    return v;
}

std::vector<double> apply(const Matrix& k, const std::vector<double>& x) {
    const int n = k.dim();
    if (x.size() != static_cast<size_t>(n)) throw ValidationError("apply: vector length mismatch");
    std::vector<double> y(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += k(i, j) * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
    return y;
}

Matrix kron_left_right(const Matrix& a, const Matrix& b) {
    const int n = a.dim();
    if (b.dim() != n) throw ValidationError("kron_left_right: dimension mismatch");
    Matrix k(n * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                for (int c = 0; c < n; ++c) k(j * n + i, l * n + c) = b(l, j) * a(i, c);
    return k;
}

KroneckerLift kronecker_lift(const MatrixSet& m) {
    const int n = m.dim();
    if (n * n > 64)
        throw ValidationError("kronecker_lift: lifted dimension " + std::to_string(n * n) +
                              " exceeds 64");
    std::vector<Matrix> lifted;
    lifted.reserve(m.size() * m.size());
    for (const auto& a : m.members())
        for (const auto& b : m.members()) lifted.push_back(kron_left_right(a, b));
    return {n, MatrixSet(n * n, std::move(lifted))};
}

RlmReport verify_rlm(const MatrixSet& m, int depth, double tol, const JsrOptions& opt) {
    RlmReport rep;
    rep.tol = tol;

    rep.base = sweep_bracket(m, depth, opt);
    rep.base_sq_lower = rep.base.lower * rep.base.lower;
    rep.base_sq_upper = rep.base.upper * rep.base.upper;

    auto lift = kronecker_lift(m);
    rep.lifted = sweep_bracket(lift.lifted, depth, opt);

    rep.rho_overlap = std::max(rep.base_sq_lower, rep.lifted.lower) <=
                      std::min(rep.base_sq_upper, rep.lifted.upper) + tol;

    rep.r_base = rep.base.lower;
    rep.r_lifted = rep.lifted.lower;
    rep.r_match = std::abs(rep.r_lifted - rep.r_base * rep.r_base) <= tol;
    return rep;
}

} // namespace jsrlab
