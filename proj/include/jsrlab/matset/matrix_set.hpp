#pragma once

#include <string>
#include <vector>

#include "jsrlab/matset/matrix.hpp"

namespace jsrlab {

struct SetOptions {
    double dedup_tol = 1e-12;          // entrywise, scaled by the set norm
    long long product_budget = 200000; // products formed before BudgetError
};

/// Nonempty finite set of same-dimension matrices. Members are kept in
/// canonical (lexicographic) order and deduplicated, so identical inputs
/// always produce identical member sequences.
class MatrixSet {
public:
    MatrixSet(int dim, std::vector<Matrix> members, const SetOptions& opt = {});

    int dim() const { return dim_; }
    size_t size() const { return members_.size(); }
    const Matrix& operator[](size_t i) const { return members_[i]; }
    const std::vector<Matrix>& members() const { return members_; }

private:
    int dim_;
    std::vector<Matrix> members_;
};

/// max over members of the induced norm.
double set_norm(const MatrixSet& m, NormKind k);

/// All length-n products, deduplicated canonically. Throws BudgetError when
/// |M|^n exceeds opt.product_budget.
MatrixSet set_power(const MatrixSet& m, int n, const SetOptions& opt = {});

/// Canonical sort + tolerance dedup used by MatrixSet and set_power. The
/// tolerance is dedup_tol * scale (pass scale = set norm; 0 disables scaling).
std::vector<Matrix> dedup_members(std::vector<Matrix> v, double dedup_tol, double scale);

/// Parse {"dim": n, "members": [[[row],...],...]}. Errors carry the JSON path
/// of the offending element.
MatrixSet parse_matrix_set(const std::string& json_text, const SetOptions& opt = {});
std::string matrix_set_to_json(const MatrixSet& m);

NormKind parse_norm_kind(const std::string& name); // "1" | "2" | "inf"
std::string norm_kind_name(NormKind k);

} // namespace jsrlab
