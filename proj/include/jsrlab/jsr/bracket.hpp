#pragma once

#include <vector>

#include "jsrlab/matset/matrix_set.hpp"

namespace jsrlab {

/// Index word into a MatrixSet; word [i1,...,ik] names members[i1]*...*members[ik].
struct ProductWord {
    std::vector<int> indices;
    bool lex_less(const ProductWord& rhs) const {
        return indices < rhs.indices;
    }
};

/// Two-sided enclosure of the joint spectral radius.
/// lower = best witnessed rho(P_w)^(1/|w|); upper = min over fully enumerated
/// depths k of ||M^k||^(1/k). Invariant: lower <= upper + 1e-12.
struct Bracket {
    double lower = 0.0;
    double upper = 0.0;
    ProductWord lower_witness;
    int upper_depth = 0;
    long long budget_spent = 0;
    bool exhausted = false; // budget ran out before the gap reached delta
};

struct JsrOptions {
    NormKind norm = NormKind::InducedInf;
    long long budget = 200000; // matrix products formed
    int max_depth = 64;        // hard cap on enumerated depth (non-singleton)
    double dedup_tol = 1e-12;
};

/// min over 1 <= j <= n of ||M^j||^(1/j). Sound upper bound at every n.
double rho_upper(const MatrixSet& m, int n, NormKind k, const JsrOptions& opt = {});

struct LowerEstimate {
    double value = 0.0;
    ProductWord witness;
};

/// max over k <= n, a in M^k of rho(a)^(1/k), with the achieving word.
/// Ties (relative width 1e-13) resolve to the lexicographically smallest word.
LowerEstimate bw_radius_lower(const MatrixSet& m, int n, const JsrOptions& opt = {});

/// sup over the generators only (depth-1 restriction of the above).
double bw_radius_pointwise(const MatrixSet& m);

/// Branch-and-bound enclosure. Phase 1 advances complete power levels, which
/// keeps the norm-sweep upper bound sound; phase 2 spends any remaining budget
/// deepening the witnessed lower bound, discarding prefixes whose optimistic
/// growth (||P|| * ||M||^remaining)^(1/total) falls below the current lower
/// bound at the budget-derived horizon. Singletons use a squaring schedule.
Bracket jsr_bracket(const MatrixSet& m, double delta, const JsrOptions& opt = {});

/// Plain enclosure from one complete sweep to exactly `depth` levels: both
/// bounds, no pruning phase. Throws BudgetError if the full enumeration does
/// not fit in opt.budget.
Bracket sweep_bracket(const MatrixSet& m, int depth, const JsrOptions& opt = {});

struct BwRow {
    int depth = 0;
    double lower = 0.0; // running max of rho-roots up to this depth
    double upper = 0.0; // running min of norm-roots up to this depth
};

struct BwReport {
    std::vector<BwRow> rows;
    double final_gap = 0.0;
    bool converged = false; // gap < delta before n_max
};

/// Tabulates the two Berger-Wang sequences side by side up to n_max.
BwReport verify_bw(const MatrixSet& m, int n_max, double delta, const JsrOptions& opt = {});

struct ContinuityRow {
    double scale = 0.0;
    double max_excess = 0.0; // max over trials of lower(M_pert) - upper(M)
};

struct ContinuityReport {
    std::vector<ContinuityRow> rows;
    double reference_upper = 0.0;
};

/// Samples perturbed sets M + scale*D (fixed directions D across scales, seeded)
/// and reports how far their witnessed lower bounds exceed rho_upper(M).
ContinuityReport upper_continuity_probe(const MatrixSet& m, const std::vector<double>& scales,
                                        int trials, unsigned seed, int depth,
                                        const JsrOptions& opt = {});

} // namespace jsrlab
