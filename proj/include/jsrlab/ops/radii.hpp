#pragma once

#include <vector>

#include "jsrlab/jsr/bracket.hpp"
#include "jsrlab/ops/banded.hpp"

namespace jsrlab::ops {

/// One length level of the norm sequences: each value is
/// (max over deduped length-k products of the named norm)^(1/k).
struct RadiusRow {
    int k = 0;
    double op_k = 0.0;
    double chi_k = 0.0;
    double e_k = 0.0;
    double f_k = 0.0;
    size_t products = 0; // distinct products at this length
};

struct RadiusOptions {
    int max_len = 8;
    size_t product_budget = 20000;
    ComposeOptions compose;
};

std::vector<RadiusRow> radius_sequence(const std::vector<BandedOperator>& members,
                                       const RadiusOptions& opt = {});

/// Checks that the three compactness-flavored norm sequences agree exactly at
/// every computed length and sit below the operator-norm sequence.
struct MainEqualityReport {
    std::vector<RadiusRow> rows;
    bool chi_eq_e = false;
    bool e_eq_f = false;
    bool dominated = false; // chi_k <= op_k at every k
    bool ok = false;
};

MainEqualityReport verify_main_equality(const std::vector<BandedOperator>& members,
                                        const RadiusOptions& opt = {});

/// Generalized formula probe: the joint spectral radius should match
/// max(essential-route estimate, eigenvalue-route estimate).
struct GbwfOptions {
    int max_len = 8;             // symbolic product lengths and truncated sweep depth
    int squaring_rounds = 8;     // extra norm squaring for singletons
    std::vector<int> trunc_dims = {100, 200};
    double tol = 1e-2;           // residual tolerance
    double stability_tol = 1e-3; // max spread of r across truncation dims
    ComposeOptions compose;
    JsrOptions jsr;
};

struct GbwfReport {
    std::vector<RadiusRow> rows;
    double chi_est = 0.0;         // min over k of chi_k
    double op_est = 0.0;          // min over k of op_k (plus squaring refinements)
    std::vector<int> dims;
    std::vector<double> r_by_dim; // eigenvalue-route estimate per truncation dim
    double r_est = 0.0;           // value at the largest dim
    bool stable = false;
    double gbwf_max = 0.0;        // max(chi_est, r_est)
    bool branch_is_eigen = false; // true when the eigenvalue route attains the max
    double residual = 0.0;        // |op_est - gbwf_max|
    double tol = 0.0;
    bool ok = false;
};

GbwfReport verify_gbwf(const std::vector<BandedOperator>& members, const GbwfOptions& opt = {});

} // namespace jsrlab::ops
