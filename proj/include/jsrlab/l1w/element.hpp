#pragma once

#include <string>
#include <vector>

namespace jsrlab::l1w {

/// One coefficient of a weighted sequence-algebra element: coeff * e_index.
struct Term {
    long long index = 0; // >= 1
    double coeff = 0.0;

    bool operator==(const Term& rhs) const = default;
};

/// Finitely supported element of the convolution algebra over the weight
/// k^{-k}: terms sorted by index, duplicate indices merged, zeros dropped.
/// The product shifts indices additively, so the lowest-index coefficient of
/// a product is the product of the lowest-index coefficients — the mechanism
/// behind the nilpotent-free check.
class WeightedElement {
public:
    WeightedElement() = default; // zero element
    explicit WeightedElement(std::vector<Term> terms);

    static WeightedElement basis(long long index, double coeff = 1.0);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }

    /// Lowest-index term; throws ValidationError on the zero element.
    Term lowest() const;

    bool operator==(const WeightedElement& rhs) const = default;

private:
    std::vector<Term> terms_;
};

WeightedElement add(const WeightedElement& a, const WeightedElement& b);
WeightedElement scale(const WeightedElement& a, double s);

/// Convolution product; throws BudgetError when |a| * |b| term pairs exceed
/// the budget.
WeightedElement convolve(const WeightedElement& a, const WeightedElement& b,
                         size_t pair_budget = 200000);

/// Weighted norm: sum of |coeff| * weight(index).
double elem_norm(const WeightedElement& a);
/// log of the same, evaluated stably (log-sum-exp); -inf for zero.
double elem_log_norm(const WeightedElement& a);

/// The sequence ||v^n||^(1/n) for n = 1..n_max. For a single-term element with
/// |coeff| == 1 the values come out of the exact integer-power route, so the
/// generator of the algebra yields exactly 1, 1/2, 1/3, ...
std::vector<double> quasinilpotence_profile(const WeightedElement& v, int n_max,
                                            size_t pair_budget = 200000);

/// Verifies v^m != 0 by exhibiting its lowest coefficient exactly.
struct NilpotentFreeReport {
    bool ok = false;
    int power = 0;
    long long lowest_index = 0;  // m * (lowest index of v)
    double lowest_coeff = 0.0;   // left-fold power of the lowest coeff of v
};

NilpotentFreeReport nilpotent_free_check(const WeightedElement& v, int m,
                                         size_t pair_budget = 200000);

/// Tiny element grammar: terms joined by +/-, each term "[coeff][*]e<index>",
/// e.g. "2*e3 + 0.5e7 - e2". 'e' always introduces a basis index (there is no
/// scientific notation in coefficients). Errors carry a character offset.
WeightedElement parse_element(const std::string& text);
std::string element_to_string(const WeightedElement& a);

} // namespace jsrlab::l1w
