#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace jsrlab::ops {

/// Eventually periodic sequence over j >= 0: finite prefix, then a repeating
/// cycle. Closed under shift, pointwise +/*, abs — with cycle lengths combining
/// by lcm (budget-checked by the caller via lcm_checked).
class TailSeq {
public:
    TailSeq() : cycle_{0.0} {}
    TailSeq(std::vector<double> prefix, std::vector<double> cycle);

    double at(long long j) const;
    const std::vector<double>& prefix() const { return prefix_; }
    const std::vector<double>& cycle() const { return cycle_; }
    size_t prefix_len() const { return prefix_.size(); }
    size_t cycle_len() const { return cycle_.size(); }

    bool is_zero() const;

    /// j -> at(j + shift); entries that would read below index 0 are 0.
    TailSeq shifted(long long shift) const;
    /// zero out entries with j < k.
    TailSeq masked_before(long long k) const;
    TailSeq abs() const;

    static TailSeq add(const TailSeq& a, const TailSeq& b);
    static TailSeq mul(const TailSeq& a, const TailSeq& b);

    /// Minimal cycle, prefix folded into the cycle where it already repeats.
    TailSeq normalized() const;

    /// Max of |value| over the whole sequence (prefix and one full cycle).
    double sup_abs() const;
    /// Max of |value| over the periodic tail only (one cycle past the prefix).
    double tail_sup_abs() const;

    bool operator==(const TailSeq& rhs) const {
        return prefix_ == rhs.prefix_ && cycle_ == rhs.cycle_;
    }

private:
    static TailSeq sample(long long prefix_len, size_t cycle_len,
                          const std::function<double(long long)>& value);
    std::vector<double> prefix_;
    std::vector<double> cycle_; // never empty
};

/// lcm with the composition budget; throws BudgetError beyond max_cycle.
size_t lcm_checked(size_t a, size_t b, size_t max_cycle = 4096);

} // namespace jsrlab::ops
