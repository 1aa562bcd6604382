#include "jsrlab/ops/radii.hpp"

#include <algorithm>
#include <cmath>

#include "jsrlab/errors.hpp"
#include "jsrlab/matset/matrix_set.hpp"

namespace jsrlab::ops {

namespace {

int seq_cmp(const TailSeq& a, const TailSeq& b) {
    if (a.prefix() != b.prefix()) return a.prefix() < b.prefix() ? -1 : 1;
    if (a.cycle() != b.cycle()) return a.cycle() < b.cycle() ? -1 : 1;
    return 0;
}

bool banded_less(const BandedOperator& a, const BandedOperator& b) {
    const auto& da = a.diagonals();
    const auto& db = b.diagonals();
    if (da.size() != db.size()) return da.size() < db.size();
    for (size_t i = 0; i < da.size(); ++i) {
        if (da[i].offset != db[i].offset) return da[i].offset < db[i].offset;
        const int c = seq_cmp(da[i].pattern, db[i].pattern);
        if (c != 0) return c < 0;
    }
    return a.correction() < b.correction();
}

void sort_dedup(std::vector<BandedOperator>& v) {
    std::sort(v.begin(), v.end(), banded_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

double kth_root(double v, int k) { return std::pow(v, 1.0 / k); }

} // namespace

std::vector<RadiusRow> radius_sequence(const std::vector<BandedOperator>& members,
                                       const RadiusOptions& opt) {
    if (members.empty()) throw ValidationError("operator set must be nonempty");
    if (opt.max_len < 1) throw ValidationError("max_len must be >= 1");
    std::vector<BandedOperator> base = members;
    sort_dedup(base);

    std::vector<RadiusRow> rows;
    std::vector<BandedOperator> level = base;
    for (int k = 1; k <= opt.max_len; ++k) {
        if (k > 1) {
            if (level.size() * base.size() > opt.product_budget)
                throw BudgetError("length-" + std::to_string(k) + " products exceed budget " +
                                  std::to_string(opt.product_budget));
            std::vector<BandedOperator> next;
            next.reserve(level.size() * base.size());
            for (const auto& p : level)
                for (const auto& m : base) next.push_back(compose(p, m, opt.compose));
            sort_dedup(next);
            level = std::move(next);
        }
        RadiusRow row;
        row.k = k;
        row.products = level.size();
        double mx_op = 0.0, mx_chi = 0.0, mx_e = 0.0, mx_f = 0.0;
        for (const auto& p : level) {
            mx_op = std::max(mx_op, op_norm(p));
            mx_chi = std::max(mx_chi, chi_norm(p));
            mx_e = std::max(mx_e, essential_norm(p));
            mx_f = std::max(mx_f, f_norm(p));
        }
        row.op_k = kth_root(mx_op, k);
        row.chi_k = kth_root(mx_chi, k);
        row.e_k = kth_root(mx_e, k);
        row.f_k = kth_root(mx_f, k);
        rows.push_back(row);
    }
    return rows;
}

MainEqualityReport verify_main_equality(const std::vector<BandedOperator>& members,
                                        const RadiusOptions& opt) {
    MainEqualityReport rep;
    rep.rows = radius_sequence(members, opt);
    rep.chi_eq_e = rep.e_eq_f = rep.dominated = true;
    for (const auto& r : rep.rows) {
        rep.chi_eq_e = rep.chi_eq_e && r.chi_k == r.e_k;
        rep.e_eq_f = rep.e_eq_f && r.e_k == r.f_k;
        rep.dominated = rep.dominated && r.chi_k <= r.op_k;
    }
    rep.ok = rep.chi_eq_e && rep.e_eq_f && rep.dominated;
    return rep;
}

GbwfReport verify_gbwf(const std::vector<BandedOperator>& members, const GbwfOptions& opt) {
    if (members.empty()) throw ValidationError("operator set must be nonempty");
    if (opt.trunc_dims.empty()) throw ValidationError("need at least one truncation dim");
    GbwfReport rep;
    rep.tol = opt.tol;

    RadiusOptions ro;
    ro.max_len = opt.max_len;
    ro.compose = opt.compose;
    rep.rows = radius_sequence(members, ro);
    rep.chi_est = rep.rows.front().chi_k;
    rep.op_est = rep.rows.front().op_k;
    for (const auto& r : rep.rows) {
        rep.chi_est = std::min(rep.chi_est, r.chi_k);
        rep.op_est = std::min(rep.op_est, r.op_k);
    }

    if (members.size() == 1 && opt.squaring_rounds > 0) {
        // Gelfand refinement: repeated squaring with rescaling, in log scale.
        BandedOperator p = members.front();
        double log_scale = 0.0; // true power = stored * exp(log_scale)
        long long k = 1;
        for (int round = 0; round < opt.squaring_rounds; ++round) {
            const double nrm = op_norm(p);
            if (nrm == 0.0) {
                rep.op_est = 0.0;
                break;
            }
            p = p.scaled(1.0 / nrm);
            log_scale = std::log(nrm) + log_scale;
            p = compose(p, p, opt.compose);
            log_scale *= 2.0;
            k *= 2;
            const double u = std::exp((std::log(op_norm(p)) + log_scale) / static_cast<double>(k));
            rep.op_est = std::min(rep.op_est, u);
        }
    }

    rep.dims = opt.trunc_dims;
    for (int d : opt.trunc_dims) {
        if (d < 1) throw ValidationError("truncation dim must be >= 1");
        std::vector<Matrix> finite;
        finite.reserve(members.size());
        for (const auto& m : members) finite.push_back(m.truncate(d));
        MatrixSet trunc(d, std::move(finite));
        JsrOptions jo = opt.jsr;
        jo.max_depth = opt.max_len;
        rep.r_by_dim.push_back(bw_radius_lower(trunc, opt.max_len, jo).value);
    }
    rep.r_est = rep.r_by_dim.back();
    double spread = 0.0;
    for (double v : rep.r_by_dim) spread = std::max(spread, std::abs(v - rep.r_est));
    rep.stable = spread <= opt.stability_tol;

    rep.gbwf_max = std::max(rep.chi_est, rep.r_est);
    rep.branch_is_eigen = rep.r_est >= rep.chi_est;
    rep.residual = std::abs(rep.op_est - rep.gbwf_max);
    rep.ok = rep.stable && rep.residual <= rep.tol;
    return rep;
}

} // namespace jsrlab::ops
