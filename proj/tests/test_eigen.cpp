#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "jsrlab/errors.hpp"
#include "jsrlab/matset/matrix.hpp"

using namespace jsrlab;

namespace {

// Orthogonal similarity of a block-diagonal matrix with a known spectrum.
// Returns the matrix and the expected eigenvalue moduli (sorted).
struct KnownSpectrum {
    Matrix m;
    std::vector<double> moduli;
};

KnownSpectrum random_known(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    std::uniform_real_distribution<double> ang(0.1, 3.0);
    Matrix d(n);
    std::vector<double> moduli;
    int i = 0;
    while (i < n) {
        if (i + 1 < n && (rng() & 1u)) {
            const double r = std::abs(uni(rng)) + 0.1;
            const double th = ang(rng);
            d(i, i) = r * std::cos(th);
            d(i, i + 1) = r * std::sin(th);
            d(i + 1, i) = -r * std::sin(th);
            d(i + 1, i + 1) = r * std::cos(th);
            moduli.push_back(r);
            moduli.push_back(r);
            i += 2;
        } else {
            const double v = uni(rng);
            d(i, i) = v;
            moduli.push_back(std::abs(v));
            ++i;
        }
    }
    // Random orthogonal Q from Gram-Schmidt on a random matrix.
    Matrix g(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) g(r, c) = uni(rng);
    std::vector<std::vector<double>> q;
    for (int c = 0; c < n; ++c) {
        std::vector<double> v(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r) v[static_cast<size_t>(r)] = g(r, c);
        for (const auto& u : q) {
            double dot = 0.0;
            for (int r = 0; r < n; ++r) dot += u[static_cast<size_t>(r)] * v[static_cast<size_t>(r)];
            for (int r = 0; r < n; ++r) v[static_cast<size_t>(r)] -= dot * u[static_cast<size_t>(r)];
        }
        double nrm = 0.0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        if (nrm < 1e-8) { // retry with a unit vector; extremely unlikely
            v.assign(static_cast<size_t>(n), 0.0);
            v[static_cast<size_t>(c)] = 1.0;
        } else {
            for (auto& x : v) x /= nrm;
        }
        q.push_back(std::move(v));
    }
    Matrix qm(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) qm(r, c) = q[static_cast<size_t>(c)][static_cast<size_t>(r)];
    const Matrix m = qm * d * qm.transposed();
    std::sort(moduli.begin(), moduli.end());
    return {m, moduli};
}

} // namespace

TEST_CASE("fixed spectra") {
    CHECK(spectral_radius(Matrix(2, {0, 1, 0, 0})) == 0.0);
    CHECK(spectral_radius(Matrix(2, {0, 1, -1, 0})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spectral_radius(Matrix(2, {2, 0, 0, 3})) == doctest::Approx(3.0).epsilon(1e-12));
    // companion matrix of (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    const Matrix comp(3, {6, -11, 6, 1, 0, 0, 0, 1, 0});
    CHECK(spectral_radius(comp) == doctest::Approx(3.0).epsilon(1e-10));
    // defective: Jordan block with eigenvalue 1/2
    const Matrix jb(3, {0.5, 1, 0, 0, 0.5, 1, 0, 0, 0.5});
    CHECK(spectral_radius(jb) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("full spectrum against constructed similarity transforms") {
    std::mt19937 rng(123u);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + static_cast<int>(rng() % 7);
        auto ks = random_known(rng, n);
        auto eig = eigenvalues(ks.m);
        REQUIRE(eig.size() == static_cast<size_t>(n));
        std::vector<double> got;
        for (const auto& e : eig) got.push_back(std::abs(e));
        std::sort(got.begin(), got.end());
        for (int i = 0; i < n; ++i)
            CHECK(got[static_cast<size_t>(i)] ==
                  doctest::Approx(ks.moduli[static_cast<size_t>(i)]).epsilon(1e-8));
    }
}

TEST_CASE("trace and determinant cross-checks") {
    std::mt19937 rng(55u);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + static_cast<int>(rng() % 5);
        Matrix a(n);
        double tr = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a(i, j) = uni(rng);
            tr += a(i, i);
        }
        auto eig = eigenvalues(a);
        std::complex<double> sum = 0.0;
        for (const auto& e : eig) sum += e;
        CHECK(sum.real() == doctest::Approx(tr).epsilon(1e-8));
        CHECK(std::abs(sum.imag()) <= 1e-8);
    }
}

TEST_CASE("power law rho(a^k) = rho(a)^k") {
    std::mt19937 rng(99u);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        Matrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = uni(rng);
        const double r = spectral_radius(a);
        Matrix p = a;
        for (int k = 2; k <= 5; ++k) {
            p = p * a;
            CHECK(spectral_radius(p) == doctest::Approx(std::pow(r, k)).epsilon(1e-8));
        }
    }
}

TEST_CASE("dimension cap is enforced and adjustable") {
    Matrix big(65);
    for (int i = 0; i < 65; ++i) big(i, i) = 1.0;
    CHECK_THROWS_AS(spectral_radius(big), ValidationError);
    EigenOptions opt;
    opt.max_dim = 128;
    CHECK(spectral_radius(big, opt) == doctest::Approx(1.0));
}
