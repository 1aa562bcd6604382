#include "jsrlab/jsr/bracket.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "jsrlab/errors.hpp"

namespace jsrlab {

namespace {

struct Entry {
    Matrix m; // stored rescaled; true product = m * exp(log_scale of the level)
    ProductWord w;
};

struct Level {
    std::vector<Entry> entries;
    double log_scale = 0.0;
    int depth = 0;
};

EigenOptions engine_eigen_opts(int dim) {
    EigenOptions o;
    o.max_dim = std::max(64, dim);
    return o;
}

void sort_dedup_level(Level& lvl, double tol) {
    std::sort(lvl.entries.begin(), lvl.entries.end(), [](const Entry& a, const Entry& b) {
        if (a.m == b.m) return a.w.lex_less(b.w);
        return a.m.lex_less(b.m);
    });
    std::vector<Entry> out;
    out.reserve(lvl.entries.size());
    for (auto& e : lvl.entries) {
        if (!out.empty() && out.back().m.max_abs_diff(e.m) <= tol) continue;
        out.push_back(std::move(e));
    }
    lvl.entries = std::move(out);
}

// Preference order for lower-bound witnesses: strictly larger value wins;
// inside a narrow tie band the lexicographically smaller word wins.
bool improves(double cand, const ProductWord& cw, double best, const ProductWord& bw) {
    if (bw.indices.empty()) return true;
    if (cand > best * (1.0 + 1e-13)) return true;
    if (cand < best * (1.0 - 1e-13)) return false;
    return cw.lex_less(bw);
}

struct SweepState {
    Level level;
    double lower = 0.0;
    ProductWord lower_witness;
    double upper = std::numeric_limits<double>::infinity();
    int upper_depth = 0;
    long long spent = 0;
    std::vector<BwRow> rows;
    bool dead = false; // all products vanished; both bounds are exactly 0
};

// Bring in the depth-1 level and score it.
SweepState init_sweep(const MatrixSet& m, NormKind norm, bool want_lower, const JsrOptions& opt) {
    SweepState st;
    st.level.depth = 1;
    double s = set_norm(m, norm);
    if (s == 0.0) {
        st.upper = 0.0;
        st.upper_depth = 1;
        st.lower = 0.0;
        st.lower_witness.indices = {0};
        st.rows.push_back({1, 0.0, 0.0});
        st.dead = true;
        return st;
    }
    st.level.log_scale = std::log(s);
    for (size_t i = 0; i < m.size(); ++i) {
        Entry e;
        e.m = m[i].scaled(1.0 / s);
        e.w.indices = {static_cast<int>(i)};
        st.level.entries.push_back(std::move(e));
    }
    sort_dedup_level(st.level, opt.dedup_tol);
    st.upper = s;
    st.upper_depth = 1;
    if (want_lower) {
        const auto eo = engine_eigen_opts(m.dim());
        for (const auto& e : st.level.entries) {
            double r = spectral_radius(e.m, eo) * s;
            if (improves(r, e.w, st.lower, st.lower_witness)) {
                st.lower = r;
                st.lower_witness = e.w;
            }
        }
    }
    st.rows.push_back({1, st.lower, st.upper});
    return st;
}

// One full level advance: M^(k+1) from M^k x M. Updates both bounds.
void advance_sweep(SweepState& st, const MatrixSet& m, NormKind norm, bool want_lower,
                   const JsrOptions& opt) {
    Level next;
    next.depth = st.level.depth + 1;
    next.log_scale = st.level.log_scale;
    next.entries.reserve(st.level.entries.size() * m.size());
    for (const auto& e : st.level.entries) {
        for (size_t j = 0; j < m.size(); ++j) {
            Entry ne;
            ne.m = e.m * m[j];
            ne.w = e.w;
            ne.w.indices.push_back(static_cast<int>(j));
            next.entries.push_back(std::move(ne));
        }
    }
    st.spent += static_cast<long long>(st.level.entries.size()) * static_cast<long long>(m.size());

    double raw = 0.0;
    for (const auto& e : next.entries) raw = std::max(raw, mat_norm(e.m, norm));
    const int k = next.depth;
    if (raw == 0.0) {
        st.upper = 0.0;
        st.upper_depth = k;
        st.dead = true;
        next.entries.resize(1);
        next.entries[0].m = Matrix(m.dim());
        st.level = std::move(next);
        st.rows.push_back({k, st.lower, st.upper});
        return;
    }
    const double log_norm = std::log(raw) + next.log_scale;
    const double upper_k = std::exp(log_norm / k);
    if (upper_k < st.upper) {
        st.upper = upper_k;
        st.upper_depth = k;
    }
    for (auto& e : next.entries) e.m = e.m.scaled(1.0 / raw);
    next.log_scale += std::log(raw);
    sort_dedup_level(next, opt.dedup_tol);

    if (want_lower) {
        const auto eo = engine_eigen_opts(m.dim());
        for (const auto& e : next.entries) {
            double r = spectral_radius(e.m, eo);
            double cand = r > 0.0 ? std::exp((std::log(r) + next.log_scale) / k) : 0.0;
            if (improves(cand, e.w, st.lower, st.lower_witness)) {
                st.lower = cand;
                st.lower_witness = e.w;
            }
        }
    }
    st.level = std::move(next);
    st.rows.push_back({k, st.lower, st.upper});
}

long long next_level_cost(const SweepState& st, const MatrixSet& m) {
    return static_cast<long long>(st.level.entries.size()) * static_cast<long long>(m.size());
}

Bracket singleton_bracket(const MatrixSet& m, double delta, const JsrOptions& opt) {
    Bracket b;
    const Matrix& a = m[0];
    b.lower = spectral_radius(a, engine_eigen_opts(a.dim()));
    b.lower_witness.indices = {0};
    double s = mat_norm(a, opt.norm);
    b.upper = s;
    b.upper_depth = 1;
    if (s == 0.0) {
        b.lower = 0.0;
        return b;
    }
    // Gelfand by repeated squaring: ||a^(2^j)||^(1/2^j) drops toward rho fast
    // enough to close a 1e-6 gap in ~25 products.
    Matrix p = a.scaled(1.0 / s);
    double log_scale = std::log(s);
    long long k = 1;
    while (b.upper - b.lower > delta && b.budget_spent < opt.budget && k < (1LL << 30)) {
        p = p * p;
        k *= 2;
        ++b.budget_spent;
        double raw = mat_norm(p, opt.norm);
        if (raw == 0.0) {
            b.upper = 0.0;
            b.upper_depth = static_cast<int>(k);
            break;
        }
        // true a^k = stored * exp(2*log_scale), so ||a^k|| = raw * exp(2*log_scale)
        log_scale = 2.0 * log_scale + std::log(raw);
        const double upper_k = std::exp(log_scale / static_cast<double>(k));
        if (upper_k < b.upper) {
            b.upper = upper_k;
            b.upper_depth = static_cast<int>(std::min<long long>(k, std::numeric_limits<int>::max()));
        }
        p = p.scaled(1.0 / raw);
    }
    b.exhausted = b.upper - b.lower > delta;
    return b;
}

} // namespace

double rho_upper(const MatrixSet& m, int n, NormKind k, const JsrOptions& opt) {
    if (n < 1) throw ValidationError("rho_upper needs n >= 1");
    JsrOptions o = opt;
    o.norm = k;
    SweepState st = init_sweep(m, k, false, o);
    while (!st.dead && st.level.depth < n) {
        if (st.spent + next_level_cost(st, m) > o.budget)
            throw BudgetError("rho_upper: product budget exhausted at depth " +
                              std::to_string(st.level.depth));
        advance_sweep(st, m, k, false, o);
    }
    return st.upper;
}

LowerEstimate bw_radius_lower(const MatrixSet& m, int n, const JsrOptions& opt) {
    if (n < 1) throw ValidationError("bw_radius_lower needs n >= 1");
    SweepState st = init_sweep(m, opt.norm, true, opt);
    while (!st.dead && st.level.depth < n) {
        if (st.spent + next_level_cost(st, m) > opt.budget)
            throw BudgetError("bw_radius_lower: product budget exhausted at depth " +
                              std::to_string(st.level.depth));
        advance_sweep(st, m, opt.norm, true, opt);
    }
    return {st.lower, st.lower_witness};
}

double bw_radius_pointwise(const MatrixSet& m) {
    double best = 0.0;
    const auto eo = engine_eigen_opts(m.dim());
    for (const auto& a : m.members()) best = std::max(best, spectral_radius(a, eo));
    return best;
}

Bracket jsr_bracket(const MatrixSet& m, double delta, const JsrOptions& opt) {
    if (delta < 0.0) throw ValidationError("jsr_bracket needs delta >= 0");
    if (m.size() == 1) return singleton_bracket(m, delta, opt);

    SweepState st = init_sweep(m, opt.norm, true, opt);
    // Phase 1: complete levels (sound upper bound).
    while (!st.dead && st.upper - st.lower > delta && st.level.depth < opt.max_depth &&
           st.spent + next_level_cost(st, m) <= opt.budget) {
        advance_sweep(st, m, opt.norm, true, opt);
    }

    Bracket b;
    b.lower = st.lower;
    b.lower_witness = st.lower_witness;
    b.upper = st.upper;
    b.upper_depth = st.upper_depth;
    b.budget_spent = st.spent;
    if (st.dead || b.upper - b.lower <= delta) {
        b.exhausted = b.upper - b.lower > delta;
        return b;
    }

    // Phase 2: pruned deepening; only the witnessed lower bound can move.
    const double log_set_norm = std::log(set_norm(m, opt.norm));
    Level frontier = st.level;
    const auto eo = engine_eigen_opts(m.dim());
    while (!frontier.entries.empty() && frontier.depth < 4 * opt.max_depth &&
           b.upper - b.lower > delta) {
        const long long cost =
            static_cast<long long>(frontier.entries.size()) * static_cast<long long>(m.size());
        if (cost <= 0 || b.budget_spent + cost > opt.budget) break;

        // Budget-derived horizon assuming the frontier keeps its width.
        long long levels_affordable = (opt.budget - b.budget_spent) / cost;
        int horizon = frontier.depth + static_cast<int>(std::max<long long>(1, levels_affordable));
        horizon = std::min(horizon, 4 * opt.max_depth);

        Level next;
        next.depth = frontier.depth + 1;
        next.log_scale = frontier.log_scale;
        for (const auto& e : frontier.entries) {
            for (size_t j = 0; j < m.size(); ++j) {
                Entry ne;
                ne.m = e.m * m[j];
                ne.w = e.w;
                ne.w.indices.push_back(static_cast<int>(j));
                next.entries.push_back(std::move(ne));
            }
        }
        b.budget_spent += cost;

        double raw = 0.0;
        for (const auto& e : next.entries) raw = std::max(raw, mat_norm(e.m, opt.norm));
        if (raw == 0.0) break;
        for (auto& e : next.entries) e.m = e.m.scaled(1.0 / raw);
        next.log_scale += std::log(raw);
        sort_dedup_level(next, opt.dedup_tol);

        const int k = next.depth;
        std::vector<Entry> kept;
        for (const auto& e : next.entries) {
            double nrm = mat_norm(e.m, opt.norm);
            double r = spectral_radius(e.m, eo);
            double cand = r > 0.0 ? std::exp((std::log(r) + next.log_scale) / k) : 0.0;
            if (improves(cand, e.w, b.lower, b.lower_witness)) {
                b.lower = cand;
                b.lower_witness = e.w;
            }
            if (nrm == 0.0) continue; // zero products never recover
            const double log_nrm = std::log(nrm) + next.log_scale;
            // Optimistic rate if extended to the horizon.
            const double optimistic =
                (log_nrm + static_cast<double>(horizon - k) * log_set_norm) /
                static_cast<double>(horizon);
            if (b.lower > 0.0 && optimistic < std::log(b.lower)) continue;
            kept.push_back(e);
        }
        next.entries = std::move(kept);
        frontier = std::move(next);
    }
    b.exhausted = b.upper - b.lower > delta;
    return b;
}

Bracket sweep_bracket(const MatrixSet& m, int depth, const JsrOptions& opt) {
    if (depth < 1) throw ValidationError("sweep_bracket needs depth >= 1");
    SweepState st = init_sweep(m, opt.norm, true, opt);
    while (!st.dead && st.level.depth < depth) {
        if (st.spent + next_level_cost(st, m) > opt.budget)
            throw BudgetError("sweep_bracket: product budget exhausted at depth " +
                              std::to_string(st.level.depth));
        advance_sweep(st, m, opt.norm, true, opt);
    }
    Bracket b;
    b.lower = st.lower;
    b.lower_witness = st.lower_witness;
    b.upper = st.upper;
    b.upper_depth = st.upper_depth;
    b.budget_spent = st.spent;
    return b;
}

BwReport verify_bw(const MatrixSet& m, int n_max, double delta, const JsrOptions& opt) {
    if (n_max < 1) throw ValidationError("verify_bw needs n_max >= 1");
    SweepState st = init_sweep(m, opt.norm, true, opt);
    while (!st.dead && st.level.depth < n_max && st.upper - st.lower >= delta &&
           st.spent + next_level_cost(st, m) <= opt.budget) {
        advance_sweep(st, m, opt.norm, true, opt);
    }
    BwReport r;
    r.rows = st.rows;
    r.final_gap = st.upper - st.lower;
    r.converged = r.final_gap < delta;
    return r;
}

ContinuityReport upper_continuity_probe(const MatrixSet& m, const std::vector<double>& scales,
                                        int trials, unsigned seed, int depth,
                                        const JsrOptions& opt) {
    if (trials < 1) throw ValidationError("continuity probe needs trials >= 1");
    ContinuityReport rep;
    rep.reference_upper = rho_upper(m, depth, opt.norm, opt);

    // Fixed perturbation directions shared across scales so each excess curve
    // is sampled along the same ray.
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const int n = m.dim();
    std::vector<std::vector<Matrix>> dirs(static_cast<size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        for (size_t j = 0; j < m.size(); ++j) {
            Matrix d(n);
            for (int i = 0; i < n; ++i)
                for (int c = 0; c < n; ++c) d(i, c) = uni(rng);
            dirs[static_cast<size_t>(t)].push_back(std::move(d));
        }
    }

    for (double s : scales) {
        double worst = -std::numeric_limits<double>::infinity();
        for (int t = 0; t < trials; ++t) {
            std::vector<Matrix> pert;
            for (size_t j = 0; j < m.size(); ++j)
                pert.push_back(m[j] + dirs[static_cast<size_t>(t)][j].scaled(s));
            MatrixSet mp(n, std::move(pert));
            auto low = bw_radius_lower(mp, depth, opt);
            worst = std::max(worst, low.value - rep.reference_upper);
        }
        rep.rows.push_back({s, worst});
    }
    return rep;
}

} // namespace jsrlab
