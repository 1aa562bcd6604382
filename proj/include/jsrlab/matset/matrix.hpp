#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace jsrlab {

/// Dense square real matrix, row-major. Entries must be finite.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int dim);                          // zero matrix
    Matrix(int dim, std::vector<double> entries);      // validates size & finiteness

    static Matrix identity(int dim);

    int dim() const { return dim_; }
    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const std::vector<double>& data() const { return a_; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(double s) const;
    Matrix transposed() const;

    double max_abs() const;                            // entrywise max |a_ij|
    double max_abs_diff(const Matrix& rhs) const;

    bool operator==(const Matrix& rhs) const { return dim_ == rhs.dim_ && a_ == rhs.a_; }
    // Lexicographic entry order; total (entries are finite, never NaN).
    bool lex_less(const Matrix& rhs) const;

private:
    int dim_ = 0;
    std::vector<double> a_;
};

enum class NormKind { Induced1, Induced2, InducedInf };

/// Induced operator norm. Induced-1 = max column abs sum, induced-inf = max row
/// abs sum (both exact); induced-2 is iterative via the eigen-solver on a^T a.
double mat_norm(const Matrix& a, NormKind k);

struct EigenOptions {
    int max_dim = 64;          // raise explicitly for large truncations
    int max_sweeps = 0;        // 0 -> 40 * dim
};

/// All eigenvalues of a real square matrix: Hessenberg reduction followed by
/// Francis double-shift QR; complex pairs come from the 2x2 Schur blocks.
/// Throws ConvergenceError (with the best partial estimate of the spectral
/// radius) if the sweep budget runs out, ValidationError if dim > opt.max_dim.
std::vector<std::complex<double>> eigenvalues(const Matrix& a, const EigenOptions& opt = {});

/// Max eigenvalue modulus. Relative accuracy ~1e-12 on converged spectra,
/// well inside the documented 1e-10 contract.
double spectral_radius(const Matrix& a, const EigenOptions& opt = {});

} // namespace jsrlab
