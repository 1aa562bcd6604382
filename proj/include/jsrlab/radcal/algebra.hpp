#pragma once

#include "jsrlab/radcal/expr.hpp"

#include <string>
#include <vector>

namespace jsrlab::radcal {

/// A real associative algebra given by structure constants on a finite basis:
/// e_i e_j = sum_m table[i][j][m] e_m. The constructor checks associativity.
class StructureAlgebra {
public:
    static constexpr int max_dim = 12;
    static constexpr double assoc_tol = 1e-10;

    /// `labels` names the basis elements (display only); empty means b1..bN.
    StructureAlgebra(std::string name, std::vector<std::vector<std::vector<double>>> table,
                     std::vector<std::string> labels = {});

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<std::vector<double>>>& table() const { return table_; }

    /// Product of coordinate vectors.
    std::vector<double> mul(const std::vector<double>& x, const std::vector<double>& y) const;

private:
    std::string name_;
    int dim_;
    std::vector<std::vector<std::vector<double>>> table_;
    std::vector<std::string> labels_;
};

/// A linear subspace of the algebra, stored as a canonical row-reduced basis
/// (so equal subspaces compare equal componentwise).
struct Subspace {
    int ambient = 0;
    std::vector<std::vector<double>> basis; // RREF rows, unit pivots

    int dim() const { return static_cast<int>(basis.size()); }
    bool is_zero() const { return basis.empty(); }
    bool contains(const std::vector<double>& v, double tol = 1e-8) const;
};

bool subspace_equal(const Subspace& a, const Subspace& b, double tol = 1e-8);
Subspace span(int ambient, const std::vector<std::vector<double>>& vectors);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
Subspace whole_space(int ambient);
Subspace zero_space(int ambient);

/// {x : M x in Z} for an m-by-n matrix M acting on coordinates.
Subspace preimage(const std::vector<std::vector<double>>& m, int n, const Subspace& z);

bool is_ideal(const StructureAlgebra& a, const Subspace& s, double tol = 1e-8);

/// Quotient by a (verified) ideal, with the coordinate maps both ways.
struct QuotientAlgebra {
    StructureAlgebra alg;
    std::vector<std::vector<double>> proj; // dim(alg) x dim(parent)
    std::vector<std::vector<double>> lift; // dim(parent) x dim(alg)
};
QuotientAlgebra quotient_algebra(const StructureAlgebra& a, const Subspace& ideal);

/// Restriction to an ideal (a subalgebra on the ideal's basis).
struct SubAlgebra {
    StructureAlgebra alg;
    std::vector<std::vector<double>> lift; // dim(parent) x dim(alg)
};
SubAlgebra sub_algebra(const StructureAlgebra& a, const Subspace& ideal);

/// Jacobson radical via the trace form of the left regular representation;
/// the result is independently re-verified to be a nilpotent ideal.
Subspace jacobson_radical(const StructureAlgebra& a, double tol = 1e-8);

/// Largest ideal contained in the center, as a shrinking fixpoint.
Subspace largest_central_ideal(const StructureAlgebra& a, double tol = 1e-8);

/// Preimage of the largest central ideal of a / i under the quotient map.
Subspace centralization_concrete(const StructureAlgebra& a, const Subspace& i, double tol = 1e-8);

/// Concrete evaluation of a radical expression on a finite-dimensional
/// witness. Compactness-flavoured atoms evaluate to the whole algebra,
/// quasinilpotence-flavoured atoms to the Jacobson radical, the
/// commutator-ideal map to the largest central ideal; Rgcr has no concrete
/// finite-dimensional meaning and is rejected. Closures and lattice nodes
/// run as monotone fixpoints that settle in at most dim steps.
struct EvalStats {
    int max_fixpoint_steps = 0;
};
Subspace eval_expr(const ExprPtr& e, const StructureAlgebra& a, EvalStats* stats = nullptr);

/// Built-in witness algebras (also shipped as JSON data files).
const std::vector<std::string>& witness_names();
StructureAlgebra make_witness(const std::string& name);

StructureAlgebra parse_algebra(const std::string& json_text);
std::string algebra_to_json(const StructureAlgebra& a);

} // namespace jsrlab::radcal
