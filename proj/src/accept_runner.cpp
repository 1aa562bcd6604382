#include "jsrlab/accept/runner.hpp"

#include "jsrlab/errors.hpp"
#include "jsrlab/jsr/bracket.hpp"
#include "jsrlab/jsr/kronecker.hpp"
#include "jsrlab/l1w/element.hpp"
#include "jsrlab/l1w/weight.hpp"
#include "jsrlab/matset/matrix_set.hpp"
#include "jsrlab/ops/radii.hpp"
#include "jsrlab/radcal/algebra.hpp"
#include "jsrlab/radcal/engine.hpp"
#include "jsrlab/semigroup/semigroup.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace jsrlab::accept {

namespace {

// Records the first failing sub-check of a criterion with its location.
struct Ctx {
    bool ok = true;
    std::string detail;

    void fail(const char* file, int line, const std::string& msg) {
        if (!ok) return;
        ok = false;
        std::string f = file;
        if (auto slash = f.find_last_of('/'); slash != std::string::npos) f = f.substr(slash + 1);
        detail = f + ":" + std::to_string(line) + " " + msg;
    }
};

#define REQ(ctx, cond, msg)                     \
    do {                                        \
        if (!(cond)) {                          \
            (ctx).fail(__FILE__, __LINE__, msg);\
            return;                             \
        }                                       \
    } while (0)

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

Matrix random_matrix(std::mt19937& rng, int dim) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    Matrix a(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = uni(rng);
    return a;
}

Matrix random_int_matrix(std::mt19937& rng, int dim, int lo, int hi) {
    std::uniform_int_distribution<int> uni(lo, hi);
    Matrix a(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = uni(rng);
    return a;
}

// ---- criterion 1: singleton sets reduce to the ordinary spectral radius ----

void singleton_reduction(Ctx& c, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dims(2, 8);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = dims(rng);
        Matrix a = random_matrix(rng, d);
        MatrixSet m(d, {a});
        auto t0 = std::chrono::steady_clock::now();
        Bracket b = jsr_bracket(m, 1e-6);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        double r = spectral_radius(a);
        REQ(c, b.lower <= r + 1e-9, "bracket lower " + fmt(b.lower) + " above spectral radius " + fmt(r));
        REQ(c, r <= b.upper + 1e-9, "bracket upper " + fmt(b.upper) + " below spectral radius " + fmt(r));
        REQ(c, secs < 1.0, "singleton bracket took " + fmt(secs) + " s (limit 1 s)");
    }
    c.detail = "20/20 singleton brackets contain the spectral radius, each under one second";
}

// ---- criterion 2: two-sided enclosure on the free bidiagonal pair ----------

void golden_pair_enclosure(Ctx& c, unsigned seed) {
    MatrixSet golden(2, {Matrix(2, {1, 1, 0, 1}), Matrix(2, {1, 0, 1, 1})});
    Bracket b = jsr_bracket(golden, 0.05);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    REQ(c, b.lower <= phi && phi <= b.upper,
        "bracket [" + fmt(b.lower) + ", " + fmt(b.upper) + "] misses the golden ratio");
    REQ(c, b.upper - b.lower <= 0.05 + 1e-12,
        "bracket width " + fmt(b.upper - b.lower) + " exceeds 0.05");
    REQ(c, !b.exhausted, "default budget exhausted before the 0.05 gap was reached");

    std::mt19937 rng(seed + 1);
    std::uniform_int_distribution<int> dims(2, 4), nmem(2, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = dims(rng);
        std::vector<Matrix> members;
        const int k = nmem(rng);
        for (int i = 0; i < k; ++i) members.push_back(random_matrix(rng, d));
        BwReport rep = verify_bw(MatrixSet(d, std::move(members)), 5, 0.05);
        for (const auto& row : rep.rows)
            REQ(c, row.lower <= row.upper + 1e-12,
                "lower " + fmt(row.lower) + " above upper " + fmt(row.upper) + " at depth " +
                    std::to_string(row.depth));
    }
    c.detail = "golden-pair bracket holds phi within width 0.05; lower <= upper at every depth on 100 random sets";
}

// ---- criterion 3: two-sided multiplication lift squares the radius ---------

void kronecker_square(Ctx& c, unsigned seed) {
    std::mt19937 rng(seed + 2);
    std::uniform_int_distribution<int> dims(2, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = dims(rng);
        Matrix a = random_int_matrix(rng, d, -2, 2);
        Matrix b = random_int_matrix(rng, d, -2, 2);
        if (a.max_abs() == 0.0) a(0, 0) = 1.0;
        if (b.max_abs() == 0.0) b(0, 0) = 1.0;
        MatrixSet m(d, {a, b});
        RlmReport rep = verify_rlm(m, 4, 1e-2);
        REQ(c, rep.rho_overlap, "squared base bracket and lifted bracket fail to overlap");
        REQ(c, rep.r_match, "witnessed lower estimates differ: base^2 " + fmt(rep.r_base * rep.r_base) +
                                " vs lifted " + fmt(rep.r_lifted));

        // the lift must act exactly: entrywise equality on integer data
        Matrix x = random_int_matrix(rng, d, -5, 5);
        for (const auto& left : m.members())
            for (const auto& right : m.members()) {
                auto got = jsrlab::apply(kron_left_right(left, right), vec_column_major(x));
                auto want = vec_column_major(left * x * right);
                REQ(c, got.size() == want.size(), "lift action size mismatch");
                for (size_t i = 0; i < got.size(); ++i)
                    REQ(c, got[i] == want[i], "lift action differs entrywise at " + std::to_string(i));
            }
    }
    c.detail = "10/10 sets: brackets overlap within 1e-2 and the lift action is entrywise exact";
}

// ---- criterion 4: the three compactness norms agree along powers ----------

double dyadic(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-8, 8);
    return num(rng) / 8.0;
}

ops::BandedOperator random_operator(std::mt19937& rng) {
    std::uniform_int_distribution<int> noff(1, 2), off(-2, 2), plen(0, 2), clen(1, 3), nsz(0, 3);
    std::vector<ops::Diagonal> diags;
    const int nd = noff(rng);
    for (int d = 0; d < nd; ++d) {
        std::vector<double> prefix(static_cast<size_t>(plen(rng)));
        for (double& v : prefix) v = dyadic(rng);
        std::vector<double> cycle(static_cast<size_t>(clen(rng)));
        for (double& v : cycle) v = dyadic(rng);
        diags.push_back({off(rng), ops::TailSeq(std::move(prefix), std::move(cycle))});
    }
    const int n = nsz(rng);
    std::vector<std::vector<double>> corr(static_cast<size_t>(n),
                                          std::vector<double>(static_cast<size_t>(n)));
    for (auto& row : corr)
        for (double& v : row) v = dyadic(rng);
    return ops::BandedOperator(std::move(diags), std::move(corr));
}

void norm_sequences_agree(Ctx& c, unsigned seed) {
    std::mt19937 rng(seed + 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ops::BandedOperator> members{random_operator(rng), random_operator(rng)};
        ops::RadiusOptions opt;
        opt.max_len = 8;
        ops::MainEqualityReport rep = ops::verify_main_equality(members, opt);
        REQ(c, rep.ok, "norm sequence report not ok on trial " + std::to_string(trial));
        for (const auto& row : rep.rows) {
            REQ(c, row.chi_k == row.e_k, "chi and essential sequences split at length " +
                                             std::to_string(row.k));
            REQ(c, row.e_k == row.f_k, "essential and finite-rank sequences split at length " +
                                           std::to_string(row.k));
            REQ(c, row.chi_k <= row.op_k, "compactness sequence above the operator-norm sequence");
        }
    }
    c.detail = "50/50 operator sets: chi = essential = finite-rank at every length <= 8, all below the norm sequence";
}

// ---- criterion 5: generalized formula on the shift-plus-source operator ----

void gbwf_constructed(Ctx& c) {
    ops::BandedOperator t({{1, ops::TailSeq({}, {0.5})}}, {{2.0}});
    ops::GbwfOptions opt;
    opt.trunc_dims = {100, 200};
    ops::GbwfReport rep = ops::verify_gbwf({t}, opt);
    REQ(c, std::fabs(rep.chi_est - 0.5) <= 1e-9, "essential-route estimate is not 1/2");
    REQ(c, rep.stable, "eigenvalue route not stable across truncation dims 100 and 200");
    REQ(c, rep.branch_is_eigen, "maximum not attained by the eigenvalue route");
    REQ(c, std::fabs(rep.r_est - 2.0) <= 1e-2, "eigenvalue-route estimate " + fmt(rep.r_est) + " not 2 within 1e-2");
    REQ(c, std::fabs(rep.gbwf_max - 2.0) <= 1e-2, "max(chi, r) = " + fmt(rep.gbwf_max) + " not 2 within 1e-2");
    REQ(c, rep.residual <= 1e-2, "residual " + fmt(rep.residual) + " above 1e-2");
    REQ(c, rep.ok, "generalized-formula report not ok");
    c.detail = "truncation estimate matches max(chi-route 0.5, eigenvalue-route ~2) with residual " +
               fmt(rep.residual) + " <= 1e-2";
}

// ---- criterion 6: tail formulas against brute-force cutoff infima ----------

void model_norm_oracle(Ctx& c, unsigned seed) {
    std::mt19937 rng(seed + 4);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        ops::BandedOperator t = random_operator(rng);
        const long long D = 160;
        const long long rows = D + t.bandwidth() + 1;
        const long long J = D - t.bandwidth();
        std::vector<double> cs(static_cast<size_t>(J), 0.0);
        for (long long j = 0; j < J; ++j)
            for (long long i = 0; i < rows; ++i) cs[static_cast<size_t>(j)] += std::fabs(t.entry(i, j));

        // distance to the finite-rank operators: inf over cutoffs of the tail sup
        std::vector<double> suffix(cs.size() + 1, 0.0);
        for (size_t j = cs.size(); j-- > 0;) suffix[j] = std::max(cs[j], suffix[j + 1]);
        const double oracle = suffix[static_cast<size_t>(J / 2)];

        worst = std::max(worst, std::fabs(ops::f_norm(t) - oracle));
        worst = std::max(worst, std::fabs(ops::essential_norm(t) - oracle));
        REQ(c, std::fabs(ops::f_norm(t) - oracle) <= 1e-6,
            "finite-rank distance misses the brute-force infimum by " + fmt(std::fabs(ops::f_norm(t) - oracle)));
        REQ(c, std::fabs(ops::essential_norm(t) - oracle) <= 1e-6,
            "essential norm misses the brute-force infimum by " + fmt(std::fabs(ops::essential_norm(t) - oracle)));
    }
    c.detail = "50/50 operators: tail formulas within " + fmt(worst) + " (<= 1e-6) of truncation infima";
}

// ---- criterion 7: the power-compressing weight behaves as computed ---------

void weighted_algebra(Ctx& c, unsigned seed) {
    auto prof = l1w::quasinilpotence_profile(l1w::WeightedElement::basis(1), 12);
    REQ(c, prof.size() == 12, "profile length is not 12");
    for (int n = 1; n <= 12; ++n)
        REQ(c, prof[static_cast<size_t>(n - 1)] == 1.0 / n,
            "profile entry " + std::to_string(n) + " is not exactly 1/" + std::to_string(n));

    l1w::NetCertificate cert = l1w::epsilon_net_certificate(0.5);
    REQ(c, cert.cutoff == 2, "cutoff for eps = 0.5 is " + std::to_string(cert.cutoff) + ", want 2");
    REQ(c, cert.ratios_from == 1 && static_cast<long long>(cert.ratios.size()) == cert.cutoff,
        "ratio table does not span 1..cutoff");
    for (size_t i = 0; i < cert.ratios.size(); ++i)
        REQ(c, cert.ratios[i] == l1w::weight_ratio(cert.ratios_from + static_cast<long long>(i)),
            "stored ratio " + std::to_string(i) + " does not replay");
    REQ(c, l1w::weight_ratio(cert.cutoff) < cert.threshold, "ratio at the cutoff not below eps/2");
    REQ(c, l1w::weight_ratio(cert.cutoff - 1) >= cert.threshold, "cutoff is not minimal");

    std::mt19937 rng(seed + 5);
    std::uniform_int_distribution<int> idx(1, 8), sup(1, 4), pw(2, 6), num(1, 16), sign(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<l1w::Term> terms;
        const int s = sup(rng);
        for (int i = 0; i < s; ++i)
            terms.push_back({idx(rng), (sign(rng) ? 1.0 : -1.0) * num(rng) / 8.0});
        l1w::WeightedElement v(std::move(terms));
        if (v.is_zero()) v = l1w::WeightedElement::basis(idx(rng));
        l1w::NilpotentFreeReport rep = l1w::nilpotent_free_check(v, pw(rng));
        REQ(c, rep.ok && rep.lowest_coeff != 0.0,
            "a power collapsed on trial " + std::to_string(trial));
        REQ(c, rep.lowest_index == rep.power * v.lowest().index, "lowest index did not add up");
    }
    c.detail = "profile is exactly (1, 1/2, ..., 1/12); eps=0.5 certificate replays at cutoff 2; 200/200 powers stay nonzero";
}

// ---- criterion 8: limit points and leading growth of diagonal semigroups ---

void semigroup_limits(Ctx& c) {
    MatrixSet half(2, {Matrix(2, {1, 0, 0, 0.5})});
    auto lims = lim_points(half, 60, 1e-8);
    REQ(c, !lims.empty(), "no limit cluster found for diag(1, 1/2)");
    const Matrix target(2, {1, 0, 0, 0});
    bool found = false;
    for (const auto& p : lims)
        if (p.rep.max_abs_diff(target) <= 1e-8) found = true;
    REQ(c, found, "no limit representative within 1e-8 of diag(1, 0)");

    auto idems = idempotent_scan(half, 60, 1e-8);
    REQ(c, !idems.empty(), "idempotent scan found nothing for diag(1, 1/2)");
    bool idem_near_target = false;
    for (const auto& e : idems) {
        if (e.max_abs_diff(target) > 1e-8) continue;
        REQ(c, mat_norm(e * e - e, NormKind::InducedInf) <= 1e-8, "accepted idempotent violates its own tolerance");
        idem_near_target = true;
    }
    REQ(c, idem_near_target, "no accepted idempotent approximates diag(1, 0)");

    MatrixSet two(2, {Matrix(2, {2, 0, 0, 1})});
    auto lead = leading_elements(two, 20);
    REQ(c, lead.every_length_has_leading, "some length of diag(2, 1) has no leading element");
    for (int n = 1; n <= 20; ++n)
        REQ(c, lead.level_sup[static_cast<size_t>(n - 1)] == std::exp2(n),
            "leading norm at length " + std::to_string(n) + " is not 2^n");
    auto probe = leading_sequence_probe(two, 20);
    REQ(c, probe.verdict == GrowthVerdict::Found, "growth probe failed to flag diag(2, 1) as unbounded");
    c.detail = "diag(1,1/2) clusters at diag(1,0) and passes the idempotent gate; diag(2,1) leads with norms exactly 2^n";
}

// ---- criterion 9: the radical calculus prover hits its targets -------------

radcal::ExprPtr random_expr(std::mt19937& rng, int depth) {
    const auto& atoms = radcal::atom_names();
    std::uniform_int_distribution<size_t> ai(0, atoms.size() - 1);
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_int_distribution<int> nargs(2, 3);
    if (depth <= 0) return radcal::make_atom(atoms[ai(rng)]);
    switch (pick(rng)) {
    case 0: return radcal::make_node(radcal::NodeKind::Conv,
                                     {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 1: return radcal::make_node(radcal::NodeKind::Comp,
                                     {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 2: return radcal::make_node(radcal::NodeKind::Cent, {random_expr(rng, depth - 1)});
    case 3: return radcal::make_node(radcal::NodeKind::StarClose, {random_expr(rng, depth - 1)});
    case 4: return radcal::make_node(radcal::NodeKind::CircClose, {random_expr(rng, depth - 1)});
    case 5:
    case 6:
    case 7: {
        radcal::NodeKind k = pick(rng) % 2 ? radcal::NodeKind::Join : radcal::NodeKind::Meet;
        std::vector<radcal::ExprPtr> args;
        for (int i = nargs(rng); i-- > 0;) args.push_back(random_expr(rng, depth - 1));
        return radcal::make_node(k, std::move(args));
    }
    case 8:
    case 9: {
        radcal::NodeKind k = pick(rng) % 2 ? radcal::NodeKind::FamilyH : radcal::NodeKind::FamilyB;
        std::vector<radcal::ExprPtr> args;
        for (int i = nargs(rng); i-- > 0;) args.push_back(random_expr(rng, depth - 1));
        return radcal::make_node(k, std::move(args));
    }
    default: return radcal::make_atom(atoms[ai(rng)]);
    }
}

void radical_prover(Ctx& c, unsigned seed) {
    auto eq = [&](const std::string& a, const std::string& b) {
        return radcal::prove_eq(radcal::parse_expr(a), radcal::parse_expr(b)).verdict;
    };
    auto leq = [&](const std::string& a, const std::string& b) {
        return radcal::prove_leq(radcal::parse_expr(a), radcal::parse_expr(b)).verdict;
    };
    using radcal::Verdict;
    REQ(c, eq("Rad v Rhc", "Rsc") == Verdict::Yes, "scattered-radical identity not proved");
    REQ(c, eq("Rhc v Rcq", "Rbw o Rsc") == Verdict::Yes, "hypocompact join vs superposition not proved");
    REQ(c, eq("Rbw o Rsc", "Rbw ^ Rsc") == Verdict::Yes, "superposition vs meet not proved");
    REQ(c, eq("Rsbw^a^*", "Rhc v Rcq^a") == Verdict::Yes, "closed-centralized identity not proved");
    REQ(c, eq("Rbw^a", "Rbw") == Verdict::Yes, "centralization fixpoint of Rbw not proved");
    REQ(c, leq("Rhc ^ Rad", "Rcq") == Verdict::Yes, "meet-below-compact bound not proved");
    REQ(c, leq("Rcq", "Rsc") == Verdict::Yes, "compact-below-scattered bound not proved");

    for (const auto& goal : radcal::open_goals()) {
        auto v = leq(goal.lhs, goal.rhs);
        REQ(c, v == Verdict::Unknown, "open goal '" + goal.name + "' did not stay unknown");
    }

    std::mt19937 rng(seed + 6);
    for (int trial = 0; trial < 1000; ++trial) {
        auto e = random_expr(rng, 6);
        auto n1 = radcal::normalize(e);
        auto n2 = radcal::normalize(n1);
        REQ(c, radcal::expr_equal(n1, n2),
            "normalize not idempotent on " + radcal::to_string(e));
    }
    c.detail = "5 equalities and 2 bounds proved; " + std::to_string(radcal::open_goals().size()) +
               " open goals stay unknown; normalize idempotent on 1000 random expressions";
}

// ---- criterion 10: expression evaluation is consistent on the witnesses ----

void concrete_consistency(Ctx& c) {
    int max_steps = 0;
    for (const auto& name : radcal::witness_names()) {
        auto a = radcal::make_witness(name);
        auto rad = radcal::eval_expr(radcal::parse_expr("Rad"), a);
        auto q = radcal::quotient_algebra(a, rad);
        REQ(c, radcal::eval_expr(radcal::parse_expr("Rad"), q.alg).is_zero(),
            "radical of the radical-quotient of " + name + " is nonzero");

        radcal::EvalStats st;
        auto join = radcal::eval_expr(radcal::parse_expr("Rad v Rhc"), a, &st);
        auto rsc = radcal::eval_expr(radcal::parse_expr("Rsc"), a);
        REQ(c, radcal::subspace_equal(join, rsc), "join identity fails concretely on " + name);
        radcal::eval_expr(radcal::parse_expr("Rbw ^ Rsc"), a, &st);
        radcal::eval_expr(radcal::parse_expr("Sa^*"), a, &st);
        REQ(c, st.max_fixpoint_steps <= a.dim(),
            "a fixpoint on " + name + " took " + std::to_string(st.max_fixpoint_steps) + " > dim steps");
        max_steps = std::max(max_steps, st.max_fixpoint_steps);
    }
    c.detail = "all " + std::to_string(radcal::witness_names().size()) +
               " witnesses: quotient radical vanishes, join identity holds, fixpoints settle in <= dim steps (max " +
               std::to_string(max_steps) + ")";
}

// ---- criterion 11: upper continuity of the enclosure under perturbation ----

void continuity_probe(Ctx& c, unsigned seed) {
    std::mt19937 rng(seed + 7);
    std::uniform_int_distribution<int> dims(2, 3);
    double last_worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const int d = dims(rng);
        MatrixSet m(d, {random_matrix(rng, d), random_matrix(rng, d)});
        ContinuityReport rep = upper_continuity_probe(m, {1e-2, 1e-3, 1e-4}, 6, seed + 100 + static_cast<unsigned>(trial), 8);
        REQ(c, rep.rows.size() == 3, "probe row count is not 3");
        REQ(c, rep.rows[0].max_excess + 1e-12 >= rep.rows[1].max_excess,
            "excess grew from scale 1e-2 to 1e-3 on trial " + std::to_string(trial));
        REQ(c, rep.rows[1].max_excess + 1e-12 >= rep.rows[2].max_excess,
            "excess grew from scale 1e-3 to 1e-4 on trial " + std::to_string(trial));
        REQ(c, rep.rows[2].max_excess <= 1e-2,
            "excess " + fmt(rep.rows[2].max_excess) + " above 1e-2 at scale 1e-4");
        last_worst = std::max(last_worst, rep.rows[2].max_excess);
    }
    c.detail = "10/10 sets: excess decreases across scales 1e-2, 1e-3, 1e-4 and tops out at " +
               fmt(last_worst) + " at the smallest scale";
}

} // namespace

std::vector<CriterionResult> run_criteria(const AcceptanceOptions& opt) {
    std::vector<CriterionResult> results;
    auto run = [&](int id, const std::string& label, auto&& body) {
        Ctx c;
        try {
            body(c);
        } catch (const std::exception& e) {
            c.fail("<exception>", 0, e.what());
        }
        results.push_back({id, label, c.ok, c.detail});
    };

    const unsigned s = opt.seed;
    run(1, "singleton reduction to the spectral radius", [&](Ctx& c) { singleton_reduction(c, s); });
    run(2, "two-sided enclosure and per-depth ordering", [&](Ctx& c) { golden_pair_enclosure(c, s); });
    run(3, "two-sided multiplication lift squares the radius", [&](Ctx& c) { kronecker_square(c, s); });
    run(4, "compactness norm sequences coincide along powers", [&](Ctx& c) { norm_sequences_agree(c, s); });
    run(5, "generalized formula on the shift-plus-source operator", [&](Ctx& c) { gbwf_constructed(c); });
    run(6, "tail norms match brute-force truncation infima", [&](Ctx& c) { model_norm_oracle(c, s); });
    run(7, "weighted convolution algebra: profile, net, nilpotent-free", [&](Ctx& c) { weighted_algebra(c, s); });
    run(8, "semigroup limit points, idempotents, leading growth", [&](Ctx& c) { semigroup_limits(c); });
    run(9, "radical calculus identities, bounds, open goals", [&](Ctx& c) { radical_prover(c, s); });
    run(10, "concrete evaluation consistency on witness algebras", [&](Ctx& c) { concrete_consistency(c); });
    run(11, "upper continuity of the enclosure under perturbation", [&](Ctx& c) { continuity_probe(c, s); });
    return results;
}

int run_acceptance(std::ostream& out, const AcceptanceOptions& opt) {
    auto results = run_criteria(opt);
    int failures = 0;
    for (const auto& r : results) {
        out << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.label
            << " -- " << r.detail << "\n";
        if (!r.pass) ++failures;
    }
    if (failures == 0)
        out << "all " << results.size() << " acceptance criteria passed\n";
    else
        out << failures << " of " << results.size() << " acceptance criteria failed\n";
    return failures;
}

} // namespace jsrlab::accept
