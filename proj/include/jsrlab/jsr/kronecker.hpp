#pragma once

#include <vector>

#include "jsrlab/jsr/bracket.hpp"
#include "jsrlab/matset/matrix_set.hpp"

namespace jsrlab {

/// vec(x) with column-major stacking: vec(x)[j*n + i] = x(i, j).
std::vector<double> vec_column_major(const Matrix& x);

/// y = K * x for a dense square K acting on a stacked vector.
std::vector<double> apply(const Matrix& k, const std::vector<double>& x);

/// The two-sided multiplication x -> a*x*b as a matrix on stacked vectors.
/// Entry ((j,i),(l,k)) = b(l,j) * a(i,k), so apply(lift, vec(x)) = vec(a*x*b).
Matrix kron_left_right(const Matrix& a, const Matrix& b);

struct KroneckerLift {
    int base_dim = 0;
    MatrixSet lifted; // all pairs (a,b), deduplicated; dim = base_dim^2
};

/// Requires base_dim^2 <= 64.
KroneckerLift kronecker_lift(const MatrixSet& m);

struct RlmReport {
    Bracket base;           // enclosure of the base joint radius
    double base_sq_lower = 0.0;
    double base_sq_upper = 0.0;
    Bracket lifted;         // enclosure for the lifted set
    bool rho_overlap = false;
    double r_base = 0.0;    // witnessed lower estimate for the base set
    double r_lifted = 0.0;  // same for the lifted set
    bool r_match = false;   // |r_lifted - r_base^2| <= tol
    double tol = 0.0;
};

/// Checks that squaring the base enclosure and enclosing the lifted set agree,
/// and that the witnessed lower estimates square accordingly.
RlmReport verify_rlm(const MatrixSet& m, int depth, double tol, const JsrOptions& opt = {});

} // namespace jsrlab
