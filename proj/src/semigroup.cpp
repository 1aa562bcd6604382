#include "jsrlab/semigroup/semigroup.hpp"

#include <algorithm>
#include <cmath>

#include "jsrlab/errors.hpp"

namespace jsrlab {

SemigroupSlice enumerate_semigroup(const MatrixSet& m, int max_len, const SemigroupOptions& opt) {
    if (max_len < 1) throw ValidationError("max_len must be >= 1");
    SemigroupSlice slice;
    slice.by_length.reserve(static_cast<size_t>(max_len));

    std::vector<Matrix> level = m.members();
    for (int n = 1; n <= max_len; ++n) {
        if (n > 1) {
            if (slice.total + level.size() * m.size() > opt.budget)
                throw BudgetError("semigroup slice exceeds budget " + std::to_string(opt.budget) +
                                  " at length " + std::to_string(n));
            std::vector<Matrix> next;
            next.reserve(level.size() * m.size());
            for (const Matrix& p : level)
                for (const Matrix& g : m.members()) next.push_back(p * g);
            double scale = 0.0;
            for (const Matrix& x : next) scale = std::max(scale, x.max_abs());
            level = dedup_members(std::move(next), opt.dedup_tol, scale);
        }
        slice.total += level.size();
        slice.by_length.push_back(level);
    }
    return slice;
}

LeadingReport leading_elements(const MatrixSet& m, int max_len, const SemigroupOptions& opt) {
    SemigroupSlice slice = enumerate_semigroup(m, max_len, opt);
    LeadingReport rep;
    rep.every_length_has_leading = true;
    double shorter = 0.0;
    for (const auto& level : slice.by_length) {
        double sup = 0.0;
        for (const Matrix& a : level) sup = std::max(sup, mat_norm(a, opt.norm));
        rep.level_sup.push_back(sup);
        rep.shorter_sup.push_back(shorter);
        std::vector<Matrix> lead;
        for (const Matrix& a : level)
            if (mat_norm(a, opt.norm) >= shorter) lead.push_back(a);
        rep.every_length_has_leading = rep.every_length_has_leading && !lead.empty();
        rep.leading.push_back(std::move(lead));
        shorter = std::max(shorter, sup);
    }
    return rep;
}

LeadingSequenceReport leading_sequence_probe(const MatrixSet& m, int max_len,
                                             const SemigroupOptions& opt) {
    if (max_len < 2) throw ValidationError("probe needs max_len >= 2");
    LeadingReport lead = leading_elements(m, max_len, opt);
    LeadingSequenceReport rep;
    double cum = 0.0;
    for (double s : lead.level_sup) {
        cum = std::max(cum, s);
        rep.cumulative_sup.push_back(cum);
    }
    const double half = rep.cumulative_sup[static_cast<size_t>(max_len / 2) - 1];
    const double full = rep.cumulative_sup.back();
    rep.growth_ratio = half > 0.0 ? full / half : (full > 0.0 ? INFINITY : 1.0);
    if (rep.growth_ratio >= 10.0)
        rep.verdict = GrowthVerdict::Found;
    else if (rep.growth_ratio <= 1.05)
        rep.verdict = GrowthVerdict::Bounded;
    else
        rep.verdict = GrowthVerdict::Inconclusive;
    return rep;
}

std::vector<LimPoint> lim_points(const MatrixSet& m, int max_len, double tol,
                                 const SemigroupOptions& opt) {
    if (!(tol > 0.0)) throw ValidationError("clustering tol must be positive");
    SemigroupSlice slice = enumerate_semigroup(m, max_len, opt);

    struct Item {
        Matrix mat;
        int length;
    };
    std::vector<Item> window;
    for (int n = (max_len + 1) / 2; n <= max_len; ++n)
        for (const Matrix& a : slice.by_length[static_cast<size_t>(n - 1)]) {
            if (a.max_abs() > opt.unbounded_guard)
                throw ValidationError("semigroup window is norm-escaping; rescale the set first");
            window.push_back({a, n});
        }

    std::sort(window.begin(), window.end(),
              [](const Item& a, const Item& b) { return a.mat.lex_less(b.mat); });

    struct Cluster {
        Matrix leader;
        std::vector<Item> items;
    };
    std::vector<Cluster> clusters;
    for (const Item& it : window) {
        bool placed = false;
        for (Cluster& c : clusters) {
            if (c.leader.max_abs_diff(it.mat) <= tol) {
                c.items.push_back(it);
                placed = true;
                break;
            }
        }
        if (!placed) clusters.push_back({it.mat, {it}});
    }

    std::vector<LimPoint> out;
    for (const Cluster& c : clusters) {
        int lo = c.items.front().length, hi = lo;
        for (const Item& it : c.items) {
            lo = std::min(lo, it.length);
            hi = std::max(hi, it.length);
        }
        if (lo == hi) continue; // need two distinct word lengths as witnesses
        LimPoint p;
        p.cluster_size = c.items.size();
        p.min_length = lo;
        p.max_length = hi;
        p.rep = c.items.front().mat;
        int best_len = c.items.front().length;
        for (const Item& it : c.items)
            if (it.length > best_len) {
                best_len = it.length;
                p.rep = it.mat;
            }
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(),
              [](const LimPoint& a, const LimPoint& b) { return a.rep.lex_less(b.rep); });
    return out;
}

std::vector<Matrix> idempotent_scan(const MatrixSet& m, int max_len, double tol,
                                    const SemigroupOptions& opt) {
    if (!(tol > 0.0)) throw ValidationError("idempotent tol must be positive");
    SemigroupSlice slice = enumerate_semigroup(m, max_len, opt);
    std::vector<Matrix> hits;
    for (const auto& level : slice.by_length)
        for (const Matrix& e : level) {
            if (mat_norm(e, opt.norm) < 0.5) continue;
            const Matrix sq = e * e;
            if (sq.max_abs_diff(e) <= tol) hits.push_back(e);
        }
    return dedup_members(std::move(hits), tol, 0.0);
}

ScaleReport scale_to_unit_rho(const MatrixSet& m, double delta, const JsrOptions& opt) {
    Bracket b = jsr_bracket(m, delta, opt);
    const double mid = 0.5 * (b.lower + b.upper);
    if (!(mid > 0.0))
        throw ValidationError("set has zero joint spectral radius; nothing to normalize");
    std::vector<Matrix> scaled;
    scaled.reserve(m.size());
    for (const Matrix& a : m.members()) scaled.push_back(a.scaled(1.0 / mid));
    ScaleReport rep{MatrixSet(m.dim(), std::move(scaled)), 1.0 / mid, mid, b};
    return rep;
}

} // namespace jsrlab
