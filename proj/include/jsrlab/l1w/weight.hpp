#pragma once

#include <vector>

namespace jsrlab::l1w {

/// The power-compressing weight w(k) = k^{-k} on indices k >= 1. It is
/// submultiplicative (w(i+j) <= w(i) w(j)) and its consecutive-ratio sequence
/// w(k+1)/w(k) decreases strictly to zero, which is exactly what makes the
/// associated convolution algebra radical: every element is quasinilpotent
/// and no nonzero element is nilpotent.

/// w(k); exact (up to one rounding) while k^k fits an integer double.
double weight(long long k);

/// ln w(k) = -k ln k; safe far past the underflow range of weight().
double log_weight(long long k);

/// w(k+1)/w(k) = k^k / (k+1)^(k+1); always < 1/(k+1).
double weight_ratio(long long k);
double log_weight_ratio(long long k);

/// w(k)^(1/n); taken as an exact integer power when n divides k.
double weight_root(long long k, long long n);

/// Certificate that the weight ratios drop below eps/2 from some cutoff on:
/// together with submultiplicativity this pins the whole tail of the algebra
/// inside an eps-net of a finite-dimensional piece. The ratio table stores the
/// trailing ratios up to the cutoff so the boundary can be replayed.
struct NetCertificate {
    double eps = 0.0;
    double threshold = 0.0;         // eps / 2
    long long cutoff = 0;           // least n with ratio(k) < threshold for all k >= n
    long long dominating_bound = 0; // least k with 1/(k+1) < threshold (a-priori cap)
    long long ratios_from = 1;      // index of ratios.front()
    std::vector<double> ratios;     // weight_ratio(k) for k = ratios_from..cutoff
};

NetCertificate epsilon_net_certificate(double eps);

} // namespace jsrlab::l1w
