#include "jsrlab/radcal/algebra.hpp"
#include "jsrlab/radcal/engine.hpp"
#include "jsrlab/errors.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace jsrlab::radcal {

namespace {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

constexpr double pivot_tol = 1e-10;

void snap(Mat& m) {
    for (auto& row : m)
        for (auto& x : row)
            if (std::fabs(x) < 1e-12) x = 0.0;
}

Mat rref(Mat m) {
    if (m.empty()) return m;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t lead = 0; lead < cols && r < rows; ++lead) {
        std::size_t best = r;
        for (std::size_t i = r + 1; i < rows; ++i)
            if (std::fabs(m[i][lead]) > std::fabs(m[best][lead])) best = i;
        if (std::fabs(m[best][lead]) <= pivot_tol) continue;
        std::swap(m[r], m[best]);
        double inv = 1.0 / m[r][lead];
        for (auto& x : m[r]) x *= inv;
        m[r][lead] = 1.0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            double f = m[i][lead];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < cols; ++c) m[i][c] -= f * m[r][c];
            m[i][lead] = 0.0;
        }
        ++r;
    }
    m.resize(r);
    snap(m);
    return m;
}

int pivot_col(const Vec& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
        if (std::fabs(row[c]) > pivot_tol) return static_cast<int>(c);
    return -1;
}

// Basis of {x : eqs * x = 0} in R^ncols; rows of `eqs` are the constraints.
Mat nullspace(const Mat& eqs, int ncols) {
    Mat r = rref(eqs);
    std::vector<std::pair<std::size_t, int>> pivots; // (row, pivot column)
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (std::size_t i = 0; i < r.size(); ++i) {
        int p = pivot_col(r[i]);
        if (p < 0) continue;
        pivots.emplace_back(i, p);
        is_pivot[static_cast<std::size_t>(p)] = true;
    }
    Mat basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec v(static_cast<std::size_t>(ncols), 0.0);
        v[static_cast<std::size_t>(f)] = 1.0;
        for (const auto& [row, p] : pivots)
            v[static_cast<std::size_t>(p)] = -r[row][static_cast<std::size_t>(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat matmul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    Mat out(a.size(), Vec(b[0].size(), 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            double aik = a[i][k];
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += aik * b[k][j];
        }
    return out;
}

Vec mat_apply(const Mat& m, const Vec& x) {
    Vec out(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
    return out;
}

double max_abs(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

} // namespace

// ---------------------------------------------------------------- subspaces

Subspace span(int ambient, const Mat& vectors) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != ambient)
            throw ValidationError("span vector has wrong length");
    Subspace s;
    s.ambient = ambient;
    s.basis = rref(vectors);
    return s;
}

Subspace whole_space(int ambient) {
    Mat id(static_cast<std::size_t>(ambient), Vec(static_cast<std::size_t>(ambient), 0.0));
    for (int i = 0; i < ambient; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    return span(ambient, id);
}

Subspace zero_space(int ambient) {
    Subspace s;
    s.ambient = ambient;
    return s;
}

bool Subspace::contains(const Vec& v, double tol) const {
    if (static_cast<int>(v.size()) != ambient) return false;
    Vec r = v;
    double scale = 1.0 + max_abs(v);
    for (const auto& row : basis) {
        int p = pivot_col(row);
        if (p < 0) continue;
        double f = r[static_cast<std::size_t>(p)];
        if (f == 0.0) continue;
        for (std::size_t c = 0; c < r.size(); ++c) r[c] -= f * row[c];
    }
    return max_abs(r) <= tol * scale;
}

bool subspace_equal(const Subspace& a, const Subspace& b, double tol) {
    if (a.ambient != b.ambient || a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.basis.size(); ++i)
        for (std::size_t j = 0; j < a.basis[i].size(); ++j)
            if (std::fabs(a.basis[i][j] - b.basis[i][j]) > tol) return false;
    return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw ValidationError("subspace sum ambient mismatch");
    Mat rows = a.basis;
    rows.insert(rows.end(), b.basis.begin(), b.basis.end());
    return span(a.ambient, rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw ValidationError("subspace intersection ambient mismatch");
    if (a.is_zero() || b.is_zero()) return zero_space(a.ambient);
    const std::size_t ra = a.basis.size(), rb = b.basis.size();
    // columns: coefficients on a-basis then b-basis; rows: ambient coordinates
    Mat eqs(static_cast<std::size_t>(a.ambient), Vec(ra + rb, 0.0));
    for (std::size_t k = 0; k < static_cast<std::size_t>(a.ambient); ++k) {
        for (std::size_t i = 0; i < ra; ++i) eqs[k][i] = a.basis[i][k];
        for (std::size_t j = 0; j < rb; ++j) eqs[k][ra + j] = -b.basis[j][k];
    }
    Mat coeffs = nullspace(eqs, static_cast<int>(ra + rb));
    Mat vectors;
    for (const auto& c : coeffs) {
        Vec v(static_cast<std::size_t>(a.ambient), 0.0);
        for (std::size_t i = 0; i < ra; ++i)
            for (std::size_t k = 0; k < v.size(); ++k) v[k] += c[i] * a.basis[i][k];
        vectors.push_back(std::move(v));
    }
    return span(a.ambient, vectors);
}

Subspace preimage(const Mat& m, int n, const Subspace& z) {
    // annihilator of z (constraints any image must satisfy)
    Mat ann = nullspace(z.basis, z.ambient);
    if (ann.empty()) return whole_space(n); // z is the whole target space
    Mat constraints = matmul(ann, m);
    if (constraints.empty()) return whole_space(n);
    return span(n, nullspace(constraints, n));
}

// ---------------------------------------------------------------- algebras

StructureAlgebra::StructureAlgebra(std::string name,
                                   std::vector<std::vector<std::vector<double>>> table,
                                   std::vector<std::string> labels)
    : name_(std::move(name)), dim_(static_cast<int>(table.size())), table_(std::move(table)),
      labels_(std::move(labels)) {
    if (dim_ > max_dim)
        throw ValidationError("algebra dimension " + std::to_string(dim_) + " exceeds the cap " +
                              std::to_string(max_dim));
    if (labels_.empty())
        for (int i = 1; i <= dim_; ++i) labels_.push_back("b" + std::to_string(i));
    if (static_cast<int>(labels_.size()) != dim_)
        throw ValidationError("label list does not match the dimension");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != dim_)
            throw ValidationError("structure table is not cubical");
        for (const auto& cell : row) {
            if (static_cast<int>(cell.size()) != dim_)
                throw ValidationError("structure table is not cubical");
            for (double x : cell)
                if (!std::isfinite(x)) throw ValidationError("structure constant is not finite");
        }
    }
    // associativity: (e_i e_j) e_k == e_i (e_j e_k)
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                for (int l = 0; l < dim_; ++l) {
                    double lhs = 0.0, rhs = 0.0;
                    for (int m = 0; m < dim_; ++m) {
                        lhs += table_[i][j][m] * table_[m][k][l];
                        rhs += table_[j][k][m] * table_[i][m][l];
                    }
                    if (std::fabs(lhs - rhs) > assoc_tol)
                        throw ValidationError("structure table is not associative at (" +
                                              std::to_string(i) + "," + std::to_string(j) + "," +
                                              std::to_string(k) + ")");
                }
}

Vec StructureAlgebra::mul(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw ValidationError("product operand has wrong length");
    Vec out(static_cast<std::size_t>(dim_), 0.0);
    for (int i = 0; i < dim_; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0.0) continue;
        for (int j = 0; j < dim_; ++j) {
            double f = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            if (f == 0.0) continue;
            for (int m = 0; m < dim_; ++m)
                out[static_cast<std::size_t>(m)] += f * table_[i][j][m];
        }
    }
    return out;
}

bool is_ideal(const StructureAlgebra& a, const Subspace& s, double tol) {
    if (s.ambient != a.dim()) return false;
    for (const auto& v : s.basis) {
        for (int i = 0; i < a.dim(); ++i) {
            Vec e(static_cast<std::size_t>(a.dim()), 0.0);
            e[static_cast<std::size_t>(i)] = 1.0;
            if (!s.contains(a.mul(e, v), tol) || !s.contains(a.mul(v, e), tol)) return false;
        }
    }
    return true;
}

QuotientAlgebra quotient_algebra(const StructureAlgebra& a, const Subspace& ideal) {
    if (!is_ideal(a, ideal)) throw ValidationError("quotient requires an ideal");
    const int n = a.dim();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (const auto& row : ideal.basis) {
        int p = pivot_col(row);
        if (p >= 0) is_pivot[static_cast<std::size_t>(p)] = true;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    const int q = static_cast<int>(free_cols.size());

    // reduce x modulo the ideal, read off the free coordinates
    auto project = [&](Vec x) {
        for (const auto& row : ideal.basis) {
            int p = pivot_col(row);
            double f = x[static_cast<std::size_t>(p)];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < x.size(); ++c) x[c] -= f * row[c];
        }
        Vec out(static_cast<std::size_t>(q), 0.0);
        for (int i = 0; i < q; ++i) out[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(i)])];
        return out;
    };

    Mat proj(static_cast<std::size_t>(q), Vec(static_cast<std::size_t>(n), 0.0));
    Mat lift(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(q), 0.0));
    for (int k = 0; k < n; ++k) {
        Vec e(static_cast<std::size_t>(n), 0.0);
        e[static_cast<std::size_t>(k)] = 1.0;
        Vec pk = project(e);
        for (int i = 0; i < q; ++i) proj[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = pk[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < q; ++i)
        lift[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(i)])][static_cast<std::size_t>(i)] = 1.0;

    std::vector<std::vector<std::vector<double>>> table(
        static_cast<std::size_t>(q),
        std::vector<std::vector<double>>(static_cast<std::size_t>(q), Vec(static_cast<std::size_t>(q), 0.0)));
    for (int i = 0; i < q; ++i) {
        Vec bi(static_cast<std::size_t>(n), 0.0);
        bi[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(i)])] = 1.0;
        for (int j = 0; j < q; ++j) {
            Vec bj(static_cast<std::size_t>(n), 0.0);
            bj[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(j)])] = 1.0;
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = project(a.mul(bi, bj));
        }
    }
    return {StructureAlgebra(a.name() + "/ideal", std::move(table)), std::move(proj), std::move(lift)};
}

SubAlgebra sub_algebra(const StructureAlgebra& a, const Subspace& ideal) {
    if (!is_ideal(a, ideal)) throw ValidationError("restriction requires an ideal");
    const int n = a.dim();
    const int r = ideal.dim();
    std::vector<int> pivots;
    for (const auto& row : ideal.basis) pivots.push_back(pivot_col(row));

    // coordinates w.r.t. the RREF basis: other rows vanish on each pivot column
    auto coords = [&](const Vec& v) {
        Vec c(static_cast<std::size_t>(r), 0.0);
        Vec rest = v;
        for (int i = 0; i < r; ++i) {
            c[static_cast<std::size_t>(i)] = rest[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])];
            for (std::size_t k = 0; k < rest.size(); ++k)
                rest[k] -= c[static_cast<std::size_t>(i)] * ideal.basis[static_cast<std::size_t>(i)][k];
        }
        if (max_abs(rest) > 1e-8 * (1.0 + max_abs(v)))
            throw ValidationError("restriction basis does not close under products");
        return c;
    };

    std::vector<std::vector<std::vector<double>>> table(
        static_cast<std::size_t>(r),
        std::vector<std::vector<double>>(static_cast<std::size_t>(r), Vec(static_cast<std::size_t>(r), 0.0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                coords(a.mul(ideal.basis[static_cast<std::size_t>(i)], ideal.basis[static_cast<std::size_t>(j)]));

    SubAlgebra out{StructureAlgebra(a.name() + "|ideal", std::move(table)), {}};
    out.lift.assign(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(r), 0.0));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < n; ++k)
            out.lift[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                ideal.basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    return out;
}

Subspace jacobson_radical(const StructureAlgebra& a, double tol) {
    const int n = a.dim();
    if (n == 0) return zero_space(0);
    // trace of left multiplication by each basis element
    Vec t(static_cast<std::size_t>(n), 0.0);
    for (int m = 0; m < n; ++m)
        for (int l = 0; l < n; ++l) t[static_cast<std::size_t>(m)] += a.table()[m][l][l];
    Mat gram(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int m = 0; m < n; ++m) s += a.table()[i][j][m] * t[static_cast<std::size_t>(m)];
            gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
        }
    Subspace rad = span(n, nullspace(gram, n));

    // independent verification: the trace-form kernel must be a nilpotent ideal
    if (!is_ideal(a, rad, tol))
        throw Error("trace-form radical failed the ideal cross-check on " + a.name());
    Subspace power = rad;
    for (int step = 0; step <= n; ++step) {
        if (power.is_zero()) return rad;
        Mat products;
        for (const auto& u : power.basis)
            for (const auto& v : rad.basis) products.push_back(a.mul(u, v));
        Subspace next = span(n, products);
        if (next.dim() >= power.dim())
            throw Error("trace-form radical failed the nilpotency cross-check on " + a.name());
        power = next;
    }
    return rad;
}

Subspace largest_central_ideal(const StructureAlgebra& a, double tol) {
    const int n = a.dim();
    if (n == 0) return zero_space(0);
    // center first: [x, e_j] = 0 for all j
    Mat eqs;
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r) {
            Vec row(static_cast<std::size_t>(n), 0.0);
            for (int c = 0; c < n; ++c)
                row[static_cast<std::size_t>(c)] = a.table()[j][c][r] - a.table()[c][j][r];
            eqs.push_back(std::move(row));
        }
    Subspace v = span(n, nullspace(eqs, n));

    // shrink to the largest ideal inside the center
    for (int step = 0; step <= n + 1; ++step) {
        if (v.is_zero()) return v;
        Mat ann = nullspace(v.basis, n);
        if (ann.empty()) {
            if (is_ideal(a, v, tol)) return v;
            throw Error("central fixpoint reached the whole space but it is not an ideal");
        }
        Mat constraints = ann; // x stays in v
        for (int j = 0; j < n; ++j) {
            Mat lj(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0.0));
            Mat rj(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n), 0.0));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    lj[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = a.table()[j][c][r];
                    rj[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = a.table()[c][j][r];
                }
            Mat cl = matmul(ann, lj), cr = matmul(ann, rj);
            constraints.insert(constraints.end(), cl.begin(), cl.end());
            constraints.insert(constraints.end(), cr.begin(), cr.end());
        }
        Subspace next = span(n, nullspace(constraints, n));
        if (next.dim() == v.dim()) return v;
        v = next;
    }
    throw Error("central ideal fixpoint failed to settle");
}

Subspace centralization_concrete(const StructureAlgebra& a, const Subspace& i, double tol) {
    QuotientAlgebra q = quotient_algebra(a, i);
    Subspace z = largest_central_ideal(q.alg, tol);
    return preimage(q.proj, a.dim(), z);
}

// ---------------------------------------------------------------- evaluator

namespace {

void bump(EvalStats* st, int steps) {
    if (st) st->max_fixpoint_steps = std::max(st->max_fixpoint_steps, steps);
}

Subspace ev(const ExprPtr& e, const StructureAlgebra& a, EvalStats* st) {
    switch (e->kind) {
    case NodeKind::Atom: {
        const std::string& n = e->atom;
        if (n == "Rad" || n == "Rcq" || n == "Sb") return jacobson_radical(a);
        if (n == "Rhc" || n == "Rhf" || n == "Rsc" || n == "Rbw" || n == "Rsbw")
            return whole_space(a.dim());
        if (n == "Sa") return largest_central_ideal(a);
        throw ValidationError("atom '" + n + "' has no concrete finite-dimensional evaluation");
    }
    case NodeKind::Conv: {
        Subspace inner = ev(e->args[1], a, st);
        QuotientAlgebra q = quotient_algebra(a, inner);
        Subspace z = ev(e->args[0], q.alg, st);
        return preimage(q.proj, a.dim(), z);
    }
    case NodeKind::Comp: {
        Subspace inner = ev(e->args[1], a, st);
        SubAlgebra s = sub_algebra(a, inner);
        Subspace z = ev(e->args[0], s.alg, st);
        Mat vectors;
        for (const auto& v : z.basis) vectors.push_back(mat_apply(s.lift, v));
        return span(a.dim(), vectors);
    }
    case NodeKind::FamilyH: {
        Subspace acc = zero_space(a.dim());
        for (const auto& arg : e->args) acc = subspace_sum(acc, ev(arg, a, st));
        return acc;
    }
    case NodeKind::FamilyB: {
        Subspace acc = whole_space(a.dim());
        for (const auto& arg : e->args) acc = subspace_intersect(acc, ev(arg, a, st));
        return acc;
    }
    case NodeKind::Join:
    case NodeKind::StarClose: {
        // upward fixpoint: grow until every operand vanishes on the quotient
        std::vector<ExprPtr> ops =
            e->kind == NodeKind::Join ? e->args : std::vector<ExprPtr>{e->args[0]};
        Subspace i = zero_space(a.dim());
        for (const auto& op : ops) i = subspace_sum(i, ev(op, a, st));
        int steps = 0;
        for (int guard = 0; guard <= a.dim() + 1; ++guard) {
            QuotientAlgebra q = quotient_algebra(a, i);
            Subspace up = zero_space(q.alg.dim());
            for (const auto& op : ops) up = subspace_sum(up, ev(op, q.alg, st));
            if (up.is_zero()) {
                bump(st, steps);
                return i;
            }
            i = preimage(q.proj, a.dim(), up);
            ++steps;
        }
        throw Error("upward fixpoint failed to settle");
    }
    case NodeKind::Meet:
    case NodeKind::CircClose: {
        // downward fixpoint: shrink until every operand holds the whole ideal
        std::vector<ExprPtr> ops =
            e->kind == NodeKind::Meet ? e->args : std::vector<ExprPtr>{e->args[0]};
        Subspace i = whole_space(a.dim());
        for (const auto& op : ops) i = subspace_intersect(i, ev(op, a, st));
        int steps = 0;
        for (int guard = 0; guard <= a.dim() + 1; ++guard) {
            SubAlgebra s = sub_algebra(a, i);
            Subspace down = whole_space(s.alg.dim());
            for (const auto& op : ops) down = subspace_intersect(down, ev(op, s.alg, st));
            Mat vectors;
            for (const auto& v : down.basis) vectors.push_back(mat_apply(s.lift, v));
            Subspace lifted = span(a.dim(), vectors);
            if (lifted.dim() == i.dim()) {
                bump(st, steps);
                return i;
            }
            i = lifted;
            ++steps;
        }
        throw Error("downward fixpoint failed to settle");
    }
    case NodeKind::Cent: // normalize() unfolds these before evaluation
    default:
        throw ValidationError("expression node is not in evaluable normal form");
    }
}

} // namespace

Subspace eval_expr(const ExprPtr& e, const StructureAlgebra& a, EvalStats* stats) {
    return ev(normalize(e), a, stats);
}

// ---------------------------------------------------------------- witnesses

namespace {

using Table = std::vector<std::vector<std::vector<double>>>;

Table zero_table(int n) {
    return Table(static_cast<std::size_t>(n),
                 std::vector<std::vector<double>>(static_cast<std::size_t>(n),
                                                  Vec(static_cast<std::size_t>(n), 0.0)));
}

// matrix-unit products E_ab E_cd = [b==c] E_ad over an index list
Table matrix_unit_table(const std::vector<std::pair<int, int>>& units) {
    const int n = static_cast<int>(units.size());
    Table t = zero_table(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (units[static_cast<std::size_t>(i)].second != units[static_cast<std::size_t>(j)].first) continue;
            std::pair<int, int> prod{units[static_cast<std::size_t>(i)].first,
                                     units[static_cast<std::size_t>(j)].second};
            for (int m = 0; m < n; ++m)
                if (units[static_cast<std::size_t>(m)] == prod)
                    t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = 1.0;
        }
    return t;
}

} // namespace

const std::vector<std::string>& witness_names() {
    static const std::vector<std::string> names = {
        "zero1",     "null2",       "dual-numbers", "poly-x3", "diag2",
        "ut2",       "strict-ut3",  "mat2",         "mat2-plus-line",
    };
    return names;
}

StructureAlgebra make_witness(const std::string& name) {
    if (name == "zero1") return StructureAlgebra(name, zero_table(1), {"z"});
    if (name == "null2") return StructureAlgebra(name, zero_table(2), {"u", "v"});
    if (name == "dual-numbers") {
        // basis 1, x with x^2 = 0
        Table t = zero_table(2);
        t[0][0][0] = 1.0;
        t[0][1][1] = 1.0;
        t[1][0][1] = 1.0;
        return StructureAlgebra(name, std::move(t), {"1", "x"});
    }
    if (name == "poly-x3") {
        // basis 1, x, x^2 with x^3 = 0
        Table t = zero_table(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i + j < 3) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(i + j)] = 1.0;
        return StructureAlgebra(name, std::move(t), {"1", "x", "x2"});
    }
    if (name == "diag2") {
        Table t = zero_table(2);
        t[0][0][0] = 1.0;
        t[1][1][1] = 1.0;
        return StructureAlgebra(name, std::move(t), {"p", "q"});
    }
    if (name == "ut2")
        return StructureAlgebra(name, matrix_unit_table({{1, 1}, {1, 2}, {2, 2}}),
                                {"e11", "e12", "e22"});
    if (name == "strict-ut3")
        return StructureAlgebra(name, matrix_unit_table({{1, 2}, {1, 3}, {2, 3}}),
                                {"e12", "e13", "e23"});
    if (name == "mat2")
        return StructureAlgebra(name, matrix_unit_table({{1, 1}, {1, 2}, {2, 1}, {2, 2}}),
                                {"e11", "e12", "e21", "e22"});
    if (name == "mat2-plus-line") {
        // scalar line f (f^2 = f) orthogonal to a full 2x2 matrix block
        Table m = matrix_unit_table({{1, 1}, {1, 2}, {2, 1}, {2, 2}});
        Table t = zero_table(5);
        t[0][0][0] = 1.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k)
                    t[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(k + 1)] =
                        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        return StructureAlgebra(name, std::move(t), {"f", "e11", "e12", "e21", "e22"});
    }
    throw ValidationError("unknown witness algebra '" + name + "'");
}

// ---------------------------------------------------------------- JSON

StructureAlgebra parse_algebra(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), "byte " + std::to_string(e.byte));
    }
    if (!j.is_object()) throw ParseError("top level must be an object", "$");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("missing integer field 'dim'", "$.dim");
    if (!j.contains("c") || !j["c"].is_array())
        throw ParseError("missing array field 'c'", "$.c");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "dim" && it.key() != "c" && it.key() != "labels")
            throw ParseError("unknown field '" + it.key() + "'", "$." + it.key());
    const int dim = j["dim"].get<int>();
    if (dim < 0) throw ParseError("'dim' must be nonnegative", "$.dim");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const auto& jl = j["labels"];
        if (!jl.is_array() || static_cast<int>(jl.size()) != dim)
            throw ParseError("'labels' must hold dim strings", "$.labels");
        for (std::size_t i = 0; i < jl.size(); ++i) {
            if (!jl[i].is_string())
                throw ParseError("expected a string", "$.labels[" + std::to_string(i) + "]");
            labels.push_back(jl[i].get<std::string>());
        }
    }
    const auto& jt = j["c"];
    if (static_cast<int>(jt.size()) != dim)
        throw ParseError("'c' must hold dim rows", "$.c");
    Table t = zero_table(dim);
    for (int i = 0; i < dim; ++i) {
        const auto& row = jt[static_cast<std::size_t>(i)];
        std::string ipath = "$.c[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw ParseError("constants row must hold dim cells", ipath);
        for (int k = 0; k < dim; ++k) {
            const auto& cell = row[static_cast<std::size_t>(k)];
            std::string cpath = ipath + "[" + std::to_string(k) + "]";
            if (!cell.is_array() || static_cast<int>(cell.size()) != dim)
                throw ParseError("constants cell must hold dim numbers", cpath);
            for (int m = 0; m < dim; ++m) {
                const auto& x = cell[static_cast<std::size_t>(m)];
                if (!x.is_number())
                    throw ParseError("expected a number", cpath + "[" + std::to_string(m) + "]");
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] =
                    x.get<double>();
            }
        }
    }
    try {
        return StructureAlgebra("", std::move(t), std::move(labels));
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), "$.c");
    }
}

std::string algebra_to_json(const StructureAlgebra& a) {
    nlohmann::json j;
    j["dim"] = a.dim();
    j["c"] = a.table();
    j["labels"] = a.labels();
    return j.dump(2);
}

} // namespace jsrlab::radcal
