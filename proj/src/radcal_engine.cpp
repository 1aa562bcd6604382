#include "jsrlab/radcal/engine.hpp"
#include "jsrlab/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace jsrlab::radcal {

namespace {

// ---------------------------------------------------------------- attributes

Attributes close_implications(Attributes a) {
    for (int pass = 0; pass < 2; ++pass) {
        if (a.utr && a.otr) a.radical = true;
        if (a.radical) {
            a.utr = a.otr = true;
            a.conv_idem = a.comp_idem = true;
        }
    }
    return a;
}

Attributes atom_attrs(const std::string& name) {
    Attributes a;
    // Sa (commutator-ideal map) and Sb (finite-rank-bounded map) are plain
    // preradicals; every named R-atom is a full radical.
    if (name != "Sa" && name != "Sb") a.radical = true;
    return close_implications(a);
}

// Order facts between bare atoms, available already during normalization
// (the convolution-with-Sa rule needs "Sb below P" checks). Reachability
// over this little table is transitive by construction of atom_leq.
const std::vector<std::pair<const char*, const char*>>& atom_edges() {
    static const std::vector<std::pair<const char*, const char*>> e = {
        {"Sb", "Rcq"}, {"Rcq", "Rad"}, {"Rhf", "Rhc"}, {"Rhc", "Rsc"}, {"Rad", "Rsc"},
    };
    return e;
}

bool atom_leq(const std::string& a, const std::string& b) {
    if (a == b) return true;
    std::vector<std::string> frontier{a};
    std::set<std::string> seen{a};
    while (!frontier.empty()) {
        std::string cur = frontier.back();
        frontier.pop_back();
        for (const auto& [from, to] : atom_edges()) {
            if (cur != from || seen.count(to)) continue;
            if (b == to) return true;
            seen.insert(to);
            frontier.push_back(to);
        }
    }
    return false;
}

// Structural attributes of an already-normalized expression.
Attributes attrs_of(const ExprPtr& e) {
    Attributes r;
    r.preradical = true;
    switch (e->kind) {
    case NodeKind::Atom: return atom_attrs(e->atom);
    case NodeKind::Conv: {
        Attributes a = attrs_of(e->args[0]), b = attrs_of(e->args[1]);
        r.utr = a.utr && b.utr;
        // centralization Sa * P lands in the join-side class once the
        // finite-rank-bounded map sits below P
        if (!r.utr && e->args[0]->kind == NodeKind::Atom && e->args[0]->atom == "Sa" &&
            e->args[1]->kind == NodeKind::Atom && atom_leq("Sb", e->args[1]->atom))
            r.utr = true;
        break;
    }
    case NodeKind::Comp: {
        Attributes a = attrs_of(e->args[0]), b = attrs_of(e->args[1]);
        r.otr = a.otr && b.otr;
        break;
    }
    case NodeKind::Cent: {
        const ExprPtr& x = e->args[0];
        r.utr = x->kind == NodeKind::Atom && atom_leq("Sb", x->atom);
        break;
    }
    case NodeKind::StarClose:
        r.utr = true;
        r.conv_idem = true;
        break;
    case NodeKind::CircClose:
        r.otr = true;
        r.comp_idem = true;
        break;
    default: break; // residual join/meet/family: nothing derivable here
    }
    return close_implications(r);
}

// ---------------------------------------------------------------- normalize

ExprPtr sa_atom() {
    static const ExprPtr sa = make_atom("Sa");
    return sa;
}

void flatten_chain(const ExprPtr& e, NodeKind kind, std::vector<ExprPtr>& out) {
    if (e->kind == kind) {
        flatten_chain(e->args[0], kind, out);
        flatten_chain(e->args[1], kind, out);
    } else {
        out.push_back(e);
    }
}

ExprPtr build_chain(const std::vector<ExprPtr>& args, NodeKind kind) {
    std::vector<ExprPtr> leaves;
    for (const auto& a : args) flatten_chain(a, kind, leaves);
    std::vector<ExprPtr> kept;
    for (auto& a : leaves) {
        if (!kept.empty() && expr_equal(kept.back(), a)) {
            Attributes at = attrs_of(a);
            if (kind == NodeKind::Conv ? at.conv_idem : at.comp_idem) continue;
        }
        kept.push_back(std::move(a));
    }
    ExprPtr cur = kept.back();
    for (std::size_t i = kept.size() - 1; i-- > 0;)
        cur = make_node(kind, {kept[i], cur});
    return cur;
}

ExprPtr chain_of(const ExprPtr& a, const ExprPtr& b, NodeKind kind) {
    return build_chain({a, b}, kind);
}

ExprPtr star_build(const ExprPtr& x) {
    if (x->kind == NodeKind::StarClose || attrs_of(x).conv_idem) return x;
    return make_node(NodeKind::StarClose, {x});
}

ExprPtr circ_build(const ExprPtr& x) {
    if (x->kind == NodeKind::CircClose || attrs_of(x).comp_idem) return x;
    return make_node(NodeKind::CircClose, {x});
}

std::vector<ExprPtr> sorted_unique_operands(std::vector<ExprPtr> args, NodeKind flat_kind) {
    std::vector<ExprPtr> flat;
    for (const auto& a : args) {
        if (a->kind == flat_kind)
            flat.insert(flat.end(), a->args.begin(), a->args.end());
        else
            flat.push_back(a);
    }
    std::sort(flat.begin(), flat.end(),
              [](const ExprPtr& x, const ExprPtr& y) { return expr_cmp(x, y) < 0; });
    flat.erase(std::unique(flat.begin(), flat.end(),
                           [](const ExprPtr& x, const ExprPtr& y) { return expr_equal(x, y); }),
               flat.end());
    return flat;
}

ExprPtr norm_rec(const ExprPtr& e) {
    switch (e->kind) {
    case NodeKind::Atom: return e;
    case NodeKind::Cent: return chain_of(sa_atom(), norm_rec(e->args[0]), NodeKind::Conv);
    case NodeKind::Conv: return chain_of(norm_rec(e->args[0]), norm_rec(e->args[1]), NodeKind::Conv);
    case NodeKind::Comp: return chain_of(norm_rec(e->args[0]), norm_rec(e->args[1]), NodeKind::Comp);
    case NodeKind::StarClose: return star_build(norm_rec(e->args[0]));
    case NodeKind::CircClose: return circ_build(norm_rec(e->args[0]));
    case NodeKind::Join:
    case NodeKind::Meet: {
        std::vector<ExprPtr> args;
        args.reserve(e->args.size());
        for (const auto& a : e->args) args.push_back(norm_rec(a));
        args = sorted_unique_operands(std::move(args), e->kind);
        if (args.size() == 1) return args[0];
        bool join = e->kind == NodeKind::Join;
        bool closable = true;
        for (const auto& a : args) {
            Attributes at = attrs_of(a);
            if (!(join ? at.utr : at.otr)) { closable = false; break; }
        }
        if (!closable) return make_node(e->kind, std::move(args));
        ExprPtr chain = build_chain(args, join ? NodeKind::Conv : NodeKind::Comp);
        return join ? star_build(chain) : circ_build(chain);
    }
    case NodeKind::FamilyH:
    case NodeKind::FamilyB: {
        std::vector<ExprPtr> args;
        args.reserve(e->args.size());
        for (const auto& a : e->args) args.push_back(norm_rec(a));
        args = sorted_unique_operands(std::move(args), e->kind);
        if (args.size() == 1) return args[0];
        return make_node(e->kind, std::move(args));
    }
    }
    throw ValidationError("corrupt expression node");
}

// ---------------------------------------------------------------- fact base

struct Edge {
    int to = -1;
    bool strict = false;
    std::string label;
};

struct AttrOverlay {
    ExprPtr key;
    bool radical = false, hereditary = false, bw = false;
};

struct Kb {
    std::vector<ExprPtr> nodes;
    std::vector<std::vector<Edge>> out;
    std::vector<AttrOverlay> overlays;
    std::vector<OpenGoal> goals;

    int find(const ExprPtr& e) const {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (expr_equal(nodes[i], e)) return static_cast<int>(i);
        return -1;
    }

    void add_edge(int from, int to, bool strict, const std::string& label) {
        out[from].push_back({to, strict, label});
    }

    // Register a normalized expression plus the order edges its shape carries.
    int intern(const ExprPtr& e) {
        int id = find(e);
        if (id >= 0) return id;
        nodes.push_back(e);
        out.emplace_back();
        id = static_cast<int>(nodes.size()) - 1;
        switch (e->kind) {
        case NodeKind::StarClose: {
            int b = intern(e->args[0]);
            add_edge(b, id, false, "a map sits below its star closure");
            std::vector<ExprPtr> chain;
            flatten_chain(e->args[0], NodeKind::Conv, chain);
            bool all_utr = chain.size() >= 2;
            for (const auto& m : chain)
                if (!attrs_of(m).utr) { all_utr = false; break; }
            if (all_utr) // the closure of this chain is exactly the join
                for (const auto& m : chain)
                    add_edge(intern(m), id, false, "join member sits below the join");
            break;
        }
        case NodeKind::CircClose: {
            int b = intern(e->args[0]);
            add_edge(id, b, false, "a circ closure sits below its base");
            std::vector<ExprPtr> chain;
            flatten_chain(e->args[0], NodeKind::Comp, chain);
            bool all_otr = chain.size() >= 2;
            for (const auto& m : chain)
                if (!attrs_of(m).otr) { all_otr = false; break; }
            if (all_otr)
                for (const auto& m : chain)
                    add_edge(id, intern(m), false, "meet sits below each member");
            break;
        }
        case NodeKind::Conv: {
            intern(e->args[0]);
            int b = intern(e->args[1]);
            add_edge(b, id, false, "right factor sits below the convolution");
            break;
        }
        case NodeKind::Comp: {
            intern(e->args[0]);
            int b = intern(e->args[1]);
            add_edge(id, b, false, "superposition sits below its right factor");
            break;
        }
        case NodeKind::Join:
        case NodeKind::FamilyH:
            for (const auto& m : e->args)
                add_edge(intern(m), id, false, "member sits below the upper bound");
            break;
        case NodeKind::Meet:
        case NodeKind::FamilyB:
            for (const auto& m : e->args)
                add_edge(id, intern(m), false, "lower bound sits below each member");
            break;
        default: break;
        }
        return id;
    }
};

const Kb& kb() {
    static const Kb instance = [] {
        Kb k;
        for (const auto& name : atom_names()) k.intern(make_atom(name));

        auto leq = [&](const char* lhs, const char* rhs, bool strict, const char* label) {
            int a = k.intern(norm_rec(parse_expr(lhs)));
            int b = k.intern(norm_rec(parse_expr(rhs)));
            k.add_edge(a, b, strict, label);
        };
        auto eq = [&](const char* lhs, const char* rhs, const char* label) {
            int a = k.intern(norm_rec(parse_expr(lhs)));
            int b = k.intern(norm_rec(parse_expr(rhs)));
            k.add_edge(a, b, false, label);
            k.add_edge(b, a, false, label);
        };

        leq("Rcq", "Rad", false,
            "compact quasinilpotence lands in the Jacobson-type radical");
        leq("Rhf", "Rhc", true,
            "the hypofinite radical is strictly below the hypocompact one");
        leq("Rhc", "Rsc", true,
            "the hypocompact radical is strictly below scattered compactness");
        leq("Rad", "Rsc", true,
            "the Jacobson-type radical is strictly below scattered compactness");
        leq("Rhc ^ Rad", "Rcq", true,
            "hypocompact-and-Jacobson meets strictly below compact quasinilpotence");
        leq("Rhc v Rcq", "Rbw", false,
            "the hypocompact/quasinilpotence join is a Berger-Wang bound");
        leq("Sb", "Rcq", false,
            "the finite-rank-bounded map sits below compact quasinilpotence");

        eq("Rad v Rhc", "Rsc",
           "scattered compactness splits into Jacobson-type and hypocompact parts");
        eq("Rhc v Rcq", "Rbw o Rsc",
           "the join equals the superposition of the Berger-Wang and scattered radicals");
        eq("Rhc v Rcq", "Rbw ^ Rsc",
           "the join equals the meet of the Berger-Wang and scattered radicals");
        eq("Rsbw^a^*", "Rhc v Rcq^a",
           "closing the centralized scattered Berger-Wang radical gives the centralized join");
        eq("Rbw^a", "Rbw",
           "the Berger-Wang radical is stable under centralization");

        auto overlay = [&](const char* key, bool radical, bool hereditary, bool bw) {
            AttrOverlay o;
            o.key = norm_rec(parse_expr(key));
            o.radical = radical;
            o.hereditary = hereditary;
            o.bw = bw;
            k.overlays.push_back(std::move(o));
        };
        overlay("Rcq^a", false, true, true);
        overlay("Rhc v Rcq", true, true, false);
        overlay("Rgcr", false, false, true);

        k.goals.push_back({"bw-under-centralized-join",
                           "whether the Berger-Wang radical lies under the join of the "
                           "hypocompact radical with the centralized compact-quasinilpotence "
                           "radical",
                           "Rbw", "Rhc v Rcq^a"});
        k.goals.push_back({"jacobson-vs-bw",
                           "whether the Jacobson-type radical is dominated by the "
                           "Berger-Wang radical",
                           "Rad", "Rbw"});
        return k;
    }();
    return instance;
}

// ---------------------------------------------------------------- prover

struct Reach {
    bool ok = false;
    bool strict = false;
    std::vector<std::string> labels;
};

Reach graph_reach(int from, int to) {
    const Kb& k = kb();
    Reach r;
    std::size_t n = k.nodes.size();
    // state = node * 2 + strict_used
    std::vector<int> parent(2 * n, -2);
    std::vector<std::string> via(2 * n);
    std::vector<int> queue{2 * from};
    parent[2 * from] = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int state = queue[qi];
        int node = state / 2, used = state % 2;
        if (node == to) {
            if (!r.ok) {
                r.ok = true;
                for (int s = state; parent[s] >= 0; s = parent[s])
                    if (!via[s].empty()) r.labels.push_back(via[s]);
                std::reverse(r.labels.begin(), r.labels.end());
            }
            if (used) { r.strict = true; return r; }
        }
        for (const Edge& e : k.out[node]) {
            int ns = e.to * 2 + (used || e.strict ? 1 : 0);
            if (parent[ns] != -2) continue;
            parent[ns] = state;
            via[ns] = e.label;
            queue.push_back(ns);
        }
    }
    return r;
}

struct ProveCtx {
    std::set<std::pair<std::string, std::string>> visited;
    int depth = 0;
};

std::optional<std::vector<std::string>> leq_core(const ExprPtr& x, const ExprPtr& y, ProveCtx& ctx);

std::optional<std::vector<std::string>> try_sub(const ExprPtr& x, const ExprPtr& y,
                                                const std::string& rule, ProveCtx& ctx) {
    auto sub = leq_core(x, y, ctx);
    if (!sub) return std::nullopt;
    std::vector<std::string> steps{rule + ": " + to_string(x) + " <= " + to_string(y)};
    steps.insert(steps.end(), sub->begin(), sub->end());
    return steps;
}

std::optional<std::vector<std::string>> leq_core(const ExprPtr& x, const ExprPtr& y, ProveCtx& ctx) {
    if (expr_equal(x, y)) return std::vector<std::string>{};
    if (ctx.depth > 64) return std::nullopt;
    auto key = std::make_pair(to_string(x), to_string(y));
    if (!ctx.visited.insert(key).second) return std::nullopt;
    ctx.depth++;
    struct DepthGuard {
        ProveCtx& c;
        ~DepthGuard() { c.depth--; }
    } guard{ctx};

    const Kb& k = kb();
    int ix = k.find(x), iy = k.find(y);
    if (ix >= 0 && iy >= 0) {
        Reach r = graph_reach(ix, iy);
        if (r.ok) {
            std::vector<std::string> steps;
            steps.push_back("fact chain: " + to_string(x) + " <= " + to_string(y));
            for (const auto& l : r.labels) steps.push_back("  - " + l);
            return steps;
        }
    }

    if (x->kind == NodeKind::StarClose && y->kind == NodeKind::StarClose)
        if (auto s = try_sub(x->args[0], y->args[0], "star closure is monotone", ctx)) return s;
    if (y->kind == NodeKind::StarClose)
        if (auto s = try_sub(x, y->args[0], "a map sits below its star closure", ctx)) return s;
    if (x->kind == NodeKind::CircClose && y->kind == NodeKind::CircClose)
        if (auto s = try_sub(x->args[0], y->args[0], "circ closure is monotone", ctx)) return s;
    if (x->kind == NodeKind::CircClose)
        if (auto s = try_sub(x->args[0], y, "a circ closure sits below its base", ctx)) return s;

    if (x->kind == NodeKind::Conv && y->kind == NodeKind::Conv) {
        ProveCtx probe = ctx;
        auto l = leq_core(x->args[0], y->args[0], probe);
        auto r = l ? leq_core(x->args[1], y->args[1], probe) : std::nullopt;
        if (l && r) {
            ctx = probe;
            std::vector<std::string> steps{"convolution is monotone componentwise"};
            steps.insert(steps.end(), l->begin(), l->end());
            steps.insert(steps.end(), r->begin(), r->end());
            return steps;
        }
    }
    if (y->kind == NodeKind::Conv)
        if (auto s = try_sub(x, y->args[1], "the right factor sits below the convolution", ctx))
            return s;
    if (x->kind == NodeKind::Comp && y->kind == NodeKind::Comp) {
        ProveCtx probe = ctx;
        auto l = leq_core(x->args[0], y->args[0], probe);
        auto r = l ? leq_core(x->args[1], y->args[1], probe) : std::nullopt;
        if (l && r) {
            ctx = probe;
            std::vector<std::string> steps{"superposition is monotone componentwise"};
            steps.insert(steps.end(), l->begin(), l->end());
            steps.insert(steps.end(), r->begin(), r->end());
            return steps;
        }
    }
    if (x->kind == NodeKind::Comp)
        if (auto s = try_sub(x->args[1], y, "superposition stays below its right factor", ctx))
            return s;

    auto all_of = [&](const std::vector<ExprPtr>& args, bool args_on_left,
                      const std::string& rule) -> std::optional<std::vector<std::string>> {
        std::vector<std::string> steps{rule};
        for (const auto& a : args) {
            auto s = args_on_left ? leq_core(a, y, ctx) : leq_core(x, a, ctx);
            if (!s) return std::nullopt;
            steps.insert(steps.end(), s->begin(), s->end());
        }
        return steps;
    };
    auto any_of = [&](const std::vector<ExprPtr>& args, bool args_on_left,
                      const std::string& rule) -> std::optional<std::vector<std::string>> {
        for (const auto& a : args) {
            auto s = args_on_left ? leq_core(a, y, ctx) : leq_core(x, a, ctx);
            if (s) {
                std::vector<std::string> steps{rule};
                steps.insert(steps.end(), s->begin(), s->end());
                return steps;
            }
        }
        return std::nullopt;
    };

    if (x->kind == NodeKind::Join || x->kind == NodeKind::FamilyH)
        if (auto s = all_of(x->args, true, "every member of the upper bound is dominated"))
            return s;
    if (y->kind == NodeKind::Join || y->kind == NodeKind::FamilyH)
        if (auto s = any_of(y->args, false, "dominated by one member of the upper bound"))
            return s;
    if (x->kind == NodeKind::Meet || x->kind == NodeKind::FamilyB)
        if (auto s = any_of(x->args, true, "the lower bound sits below one of its members"))
            return s;
    if (y->kind == NodeKind::Meet || y->kind == NodeKind::FamilyB)
        if (auto s = all_of(y->args, false, "dominated by every member of the lower bound"))
            return s;

    return std::nullopt;
}

} // namespace

ExprPtr normalize(const ExprPtr& e) {
    if (!e) throw ValidationError("null expression");
    return norm_rec(e);
}

Attributes infer_attributes(const ExprPtr& e) {
    ExprPtr n = normalize(e);
    Attributes a = attrs_of(n);
    for (const auto& o : kb().overlays) {
        if (!expr_equal(o.key, n)) continue;
        a.radical = a.radical || o.radical;
        a.hereditary = a.hereditary || o.hereditary;
        a.bw = a.bw || o.bw;
    }
    a = close_implications(a);
    if (a.radical && !a.bw) {
        ProveCtx ctx;
        if (leq_core(n, make_atom("Rbw"), ctx))
            a.bw = true; // a full radical under the Berger-Wang radical is Berger-Wang
    }
    return a;
}

ProofResult prove_leq(const ExprPtr& a, const ExprPtr& b) {
    ExprPtr x = normalize(a), y = normalize(b);
    ProofResult res;
    res.steps.push_back("lhs normal form: " + to_string(x));
    res.steps.push_back("rhs normal form: " + to_string(y));

    ProveCtx ctx;
    if (auto s = leq_core(x, y, ctx)) {
        res.verdict = Verdict::Yes;
        if (s->empty()) res.steps.push_back("normal forms agree");
        res.steps.insert(res.steps.end(), s->begin(), s->end());
        return res;
    }

    const Kb& k = kb();
    int ix = k.find(x), iy = k.find(y);
    if (ix >= 0 && iy >= 0) {
        Reach rev = graph_reach(iy, ix);
        if (rev.strict) {
            res.verdict = Verdict::No;
            res.steps.push_back("refuted: a strict chain runs the other way");
            for (const auto& l : rev.labels) res.steps.push_back("  - " + l);
            return res;
        }
    }

    res.verdict = Verdict::Unknown;
    res.steps.push_back("not derivable from the fact base within the search bounds");
    return res;
}

ProofResult prove_eq(const ExprPtr& a, const ExprPtr& b) {
    ExprPtr x = normalize(a), y = normalize(b);
    ProofResult res;
    res.steps.push_back("lhs normal form: " + to_string(x));
    res.steps.push_back("rhs normal form: " + to_string(y));
    if (expr_equal(x, y)) {
        res.verdict = Verdict::Yes;
        res.steps.push_back("normal forms agree");
        return res;
    }

    ProveCtx fwd_ctx, rev_ctx;
    auto fwd = leq_core(x, y, fwd_ctx);
    auto rev = leq_core(y, x, rev_ctx);
    if (fwd && rev) {
        res.verdict = Verdict::Yes;
        res.steps.push_back("antisymmetry: both directions are derivable");
        res.steps.insert(res.steps.end(), fwd->begin(), fwd->end());
        res.steps.insert(res.steps.end(), rev->begin(), rev->end());
        return res;
    }

    const Kb& k = kb();
    int ix = k.find(x), iy = k.find(y);
    if (ix >= 0 && iy >= 0) {
        Reach f = graph_reach(ix, iy), r = graph_reach(iy, ix);
        if (f.strict || r.strict) {
            res.verdict = Verdict::No;
            res.steps.push_back("refuted: one side is strictly below the other");
            return res;
        }
    }

    res.verdict = Verdict::Unknown;
    res.steps.push_back("not derivable from the fact base within the search bounds");
    return res;
}

const std::vector<OpenGoal>& open_goals() { return kb().goals; }

} // namespace jsrlab::radcal
