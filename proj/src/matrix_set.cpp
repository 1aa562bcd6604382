#include "jsrlab/matset/matrix_set.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "jsrlab/errors.hpp"

namespace jsrlab {

std::vector<Matrix> dedup_members(std::vector<Matrix> v, double dedup_tol, double scale) {
    std::sort(v.begin(), v.end(), [](const Matrix& a, const Matrix& b) { return a.lex_less(b); });
    const double tol = dedup_tol * (scale > 0.0 ? scale : 1.0);
    std::vector<Matrix> out;
    out.reserve(v.size());
    for (auto& m : v) {
        if (!out.empty() && out.back().max_abs_diff(m) <= tol) continue;
        out.push_back(std::move(m));
    }
    return out;
}

MatrixSet::MatrixSet(int dim, std::vector<Matrix> members, const SetOptions& opt) : dim_(dim) {
    if (members.empty()) throw ValidationError("matrix set must be nonempty");
    for (const auto& m : members)
        if (m.dim() != dim) throw ValidationError("matrix set member dimension mismatch");
    double scale = 0.0;
    for (const auto& m : members) scale = std::max(scale, mat_norm(m, NormKind::InducedInf));
    members_ = dedup_members(std::move(members), opt.dedup_tol, scale);
}

double set_norm(const MatrixSet& m, NormKind k) {
    double best = 0.0;
    for (const auto& a : m.members()) best = std::max(best, mat_norm(a, k));
    return best;
}

MatrixSet set_power(const MatrixSet& m, int n, const SetOptions& opt) {
    if (n < 1) throw ValidationError("set power exponent must be >= 1");
    double count = 1.0;
    for (int i = 0; i < n; ++i) {
        count *= static_cast<double>(m.size());
        if (count > static_cast<double>(opt.product_budget))
            throw BudgetError("set power |M|^n = " + std::to_string(m.size()) + "^" +
                              std::to_string(n) + " exceeds product budget " +
                              std::to_string(opt.product_budget));
    }
    std::vector<Matrix> level(m.members());
    const double scale = set_norm(m, NormKind::InducedInf);
    for (int step = 1; step < n; ++step) {
        std::vector<Matrix> next;
        next.reserve(level.size() * m.size());
        for (const auto& a : level)
            for (const auto& b : m.members()) next.push_back(a * b);
        // Dedup per level keeps the enumeration canonical without changing the
        // set of depth-n products (duplicates generate duplicate extensions).
        double lvl_scale = 0.0;
        for (const auto& p : next) lvl_scale = std::max(lvl_scale, mat_norm(p, NormKind::InducedInf));
        level = dedup_members(std::move(next), opt.dedup_tol, lvl_scale > 0 ? lvl_scale : scale);
    }
    return MatrixSet(m.dim(), std::move(level), opt);
}

namespace {

double number_at(const nlohmann::json& j, const std::string& path) {
    if (!j.is_number()) throw ParseError("expected a number", path);
    return j.get<double>();
}

} // namespace

MatrixSet parse_matrix_set(const std::string& json_text, const SetOptions& opt) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), "byte " + std::to_string(e.byte));
    }
    if (!j.is_object()) throw ParseError("top level must be an object", "$");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("missing integer field 'dim'", "$.dim");
    const int dim = j["dim"].get<int>();
    if (dim <= 0) throw ParseError("'dim' must be positive", "$.dim");
    if (!j.contains("members") || !j["members"].is_array() || j["members"].empty())
        throw ParseError("missing nonempty array field 'members'", "$.members");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "dim" && it.key() != "members")
            throw ParseError("unknown field '" + it.key() + "'", "$." + it.key());

    std::vector<Matrix> members;
    members.reserve(j["members"].size());
    for (size_t mi = 0; mi < j["members"].size(); ++mi) {
        const auto& jm = j["members"][mi];
        const std::string mpath = "$.members[" + std::to_string(mi) + "]";
        if (!jm.is_array() || jm.size() != static_cast<size_t>(dim))
            throw ParseError("member must be an array of " + std::to_string(dim) + " rows", mpath);
        std::vector<double> entries;
        entries.reserve(static_cast<size_t>(dim) * dim);
        for (size_t r = 0; r < jm.size(); ++r) {
            const auto& jr = jm[r];
            const std::string rpath = mpath + "[" + std::to_string(r) + "]";
            if (!jr.is_array() || jr.size() != static_cast<size_t>(dim))
                throw ParseError("row must hold " + std::to_string(dim) + " numbers", rpath);
            for (size_t c = 0; c < jr.size(); ++c)
                entries.push_back(number_at(jr[c], rpath + "[" + std::to_string(c) + "]"));
        }
        try {
            members.emplace_back(dim, std::move(entries));
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), mpath);
        }
    }
    return MatrixSet(dim, std::move(members), opt);
}

std::string matrix_set_to_json(const MatrixSet& m) {
    nlohmann::json j;
    j["dim"] = m.dim();
    auto members = nlohmann::json::array();
    for (const auto& a : m.members()) {
        auto jm = nlohmann::json::array();
        for (int r = 0; r < m.dim(); ++r) {
            auto jr = nlohmann::json::array();
            for (int c = 0; c < m.dim(); ++c) jr.push_back(a(r, c));
            jm.push_back(std::move(jr));
        }
        members.push_back(std::move(jm));
    }
    j["members"] = std::move(members);
    return j.dump();
}

NormKind parse_norm_kind(const std::string& name) {
    if (name == "1") return NormKind::Induced1;
    if (name == "2") return NormKind::Induced2;
    if (name == "inf") return NormKind::InducedInf;
    throw ParseError("unknown norm '" + name + "' (expected 1, 2 or inf)", "norm");
}

std::string norm_kind_name(NormKind k) {
    switch (k) {
    case NormKind::Induced1: return "1";
    case NormKind::Induced2: return "2";
    case NormKind::InducedInf: return "inf";
    }
    return "?";
}

} // namespace jsrlab
