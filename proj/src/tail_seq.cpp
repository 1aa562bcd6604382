#include "jsrlab/ops/tail_seq.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jsrlab/errors.hpp"

namespace jsrlab::ops {

size_t lcm_checked(size_t a, size_t b, size_t max_cycle) {
    const size_t l = std::lcm(a, b);
    if (l == 0 || l > max_cycle)
        throw BudgetError("cycle lcm " + std::to_string(l) + " exceeds the composition budget " +
                          std::to_string(max_cycle));
    return l;
}

TailSeq::TailSeq(std::vector<double> prefix, std::vector<double> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
    if (cycle_.empty()) cycle_ = {0.0};
    for (double v : prefix_)
        if (!std::isfinite(v)) throw ValidationError("tail sequence entries must be finite");
    for (double v : cycle_)
        if (!std::isfinite(v)) throw ValidationError("tail sequence entries must be finite");
}

double TailSeq::at(long long j) const {
    if (j < 0) return 0.0;
    if (j < static_cast<long long>(prefix_.size())) return prefix_[static_cast<size_t>(j)];
    const long long k = j - static_cast<long long>(prefix_.size());
    return cycle_[static_cast<size_t>(k % static_cast<long long>(cycle_.size()))];
}

bool TailSeq::is_zero() const {
    return std::all_of(prefix_.begin(), prefix_.end(), [](double v) { return v == 0.0; }) &&
           std::all_of(cycle_.begin(), cycle_.end(), [](double v) { return v == 0.0; });
}

TailSeq TailSeq::sample(long long prefix_len, size_t cycle_len,
                        const std::function<double(long long)>& value) {
    std::vector<double> p(static_cast<size_t>(std::max<long long>(0, prefix_len)));
    for (long long j = 0; j < static_cast<long long>(p.size()); ++j)
        p[static_cast<size_t>(j)] = value(j);
    std::vector<double> c(cycle_len);
    for (size_t i = 0; i < cycle_len; ++i)
        c[i] = value(static_cast<long long>(p.size()) + static_cast<long long>(i));
    return TailSeq(std::move(p), std::move(c));
}

TailSeq TailSeq::shifted(long long shift) const {
    const long long p = static_cast<long long>(prefix_.size()) - shift;
    return sample(std::max<long long>(0, p), cycle_.size(),
                  [this, shift](long long j) { return at(j + shift); });
}

TailSeq TailSeq::masked_before(long long k) const {
    if (k <= 0) return *this;
    const long long p = std::max<long long>(k, static_cast<long long>(prefix_.size()));
    return sample(p, cycle_.size(), [this, k](long long j) { return j < k ? 0.0 : at(j); });
}

TailSeq TailSeq::abs() const {
    TailSeq out = *this;
    for (double& v : out.prefix_) v = std::abs(v);
    for (double& v : out.cycle_) v = std::abs(v);
    return out;
}

TailSeq TailSeq::add(const TailSeq& a, const TailSeq& b) {
    const size_t l = lcm_checked(a.cycle_.size(), b.cycle_.size());
    const long long p = static_cast<long long>(std::max(a.prefix_.size(), b.prefix_.size()));
    return sample(p, l, [&](long long j) { return a.at(j) + b.at(j); });
}

TailSeq TailSeq::mul(const TailSeq& a, const TailSeq& b) {
    const size_t l = lcm_checked(a.cycle_.size(), b.cycle_.size());
    const long long p = static_cast<long long>(std::max(a.prefix_.size(), b.prefix_.size()));
    return sample(p, l, [&](long long j) { return a.at(j) * b.at(j); });
}

TailSeq TailSeq::normalized() const {
    // minimal period of the cycle
    std::vector<double> c = cycle_;
    const size_t n = c.size();
    for (size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) ok = c[i] == c[i % d];
        if (ok) {
            c.resize(d);
            break;
        }
    }
    // fold prefix entries that merely restate the cycle
    std::vector<double> p = prefix_;
    while (!p.empty() && p.back() == c.back()) {
        p.pop_back();
        std::rotate(c.rbegin(), c.rbegin() + 1, c.rend());
    }
    return TailSeq(std::move(p), std::move(c));
}

double TailSeq::sup_abs() const {
    double m = 0.0;
    for (double v : prefix_) m = std::max(m, std::abs(v));
    for (double v : cycle_) m = std::max(m, std::abs(v));
    return m;
}

double TailSeq::tail_sup_abs() const {
    double m = 0.0;
    for (double v : cycle_) m = std::max(m, std::abs(v));
    return m;
}

} // namespace jsrlab::ops
