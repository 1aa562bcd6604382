#include "jsrlab/l1w/weight.hpp"

#include <algorithm>
#include <cmath>

#include "jsrlab/errors.hpp"

namespace jsrlab::l1w {

namespace {

// base^e as a double, or NaN once it leaves the exactly-representable range
double ipow_checked(long long base, long long e) {
    double v = 1.0;
    for (long long i = 0; i < e; ++i) {
        v *= static_cast<double>(base);
        if (v > 9007199254740992.0) return std::nan("");
    }
    return v;
}

void check_index(long long k) {
    if (k < 1) throw ValidationError("weight index must be >= 1");
}

} // namespace

double weight(long long k) {
    check_index(k);
    const double p = ipow_checked(k, k);
    if (std::isnan(p)) return std::exp(log_weight(k));
    return 1.0 / p;
}

double log_weight(long long k) {
    check_index(k);
    return -static_cast<double>(k) * std::log(static_cast<double>(k));
}

double weight_ratio(long long k) {
    check_index(k);
    const double num = ipow_checked(k, k);
    const double den = ipow_checked(k + 1, k + 1);
    if (std::isnan(num) || std::isnan(den)) return std::exp(log_weight_ratio(k));
    return num / den;
}

double log_weight_ratio(long long k) { return log_weight(k + 1) - log_weight(k); }

double weight_root(long long k, long long n) {
    check_index(k);
    if (n < 1) throw ValidationError("root order must be >= 1");
    if (k % n == 0) {
        const double p = ipow_checked(k, k / n);
        if (!std::isnan(p)) return 1.0 / p;
    }
    return std::exp(log_weight(k) / static_cast<double>(n));
}

NetCertificate epsilon_net_certificate(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw ValidationError("net radius eps must be positive and finite");
    NetCertificate cert;
    cert.eps = eps;
    cert.threshold = eps / 2.0;

    // a-priori cap: ratio(k) < 1/(k+1), so 1/(k+1) < threshold suffices
    if (cert.threshold > 0.5) {
        cert.dominating_bound = 1;
    } else {
        long long k = std::max<long long>(1, static_cast<long long>(2.0 / eps) - 2);
        while (1.0 / static_cast<double>(k + 1) >= cert.threshold) ++k;
        cert.dominating_bound = k;
    }

    // ratios decrease strictly, so the least valid cutoff is found by
    // bisection; weight_ratio stays on the exact integer path for small k,
    // which settles boundary ties (ratio == threshold) the right way
    long long lo = 1, hi = cert.dominating_bound;
    while (lo < hi) {
        const long long mid = lo + (hi - lo) / 2;
        if (weight_ratio(mid) < cert.threshold)
            hi = mid;
        else
            lo = mid + 1;
    }
    cert.cutoff = lo;

    const long long table = 4096;
    cert.ratios_from = std::max<long long>(1, cert.cutoff - table + 1);
    for (long long k = cert.ratios_from; k <= cert.cutoff; ++k)
        cert.ratios.push_back(weight_ratio(k));
    return cert;
}

} // namespace jsrlab::l1w
