// jsrlab: joint-spectral-radius laboratory driver.
//
// Every subcommand follows the same plumbing: an optional flat key=value
// config file is applied first, command-line flags override it, the run
// produces a JSON report (or its CSV table projection) embedding the
// canonical config and its hash, so identical (config, input, version)
// triples reproduce byte-identical output.
//
// Exit codes: 0 success; 1 schema/usage error; 2 verification failure (an
// asserted identity did not hold, or a proof goal was not established);
// 3 budget exhaustion.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jsrlab/accept/runner.hpp"
#include "jsrlab/cli/config.hpp"
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
#include "jsrlab/version.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using jsrlab::cli::RunConfig;
using json = nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw jsrlab::ParseError("cannot open input file '" + path + "'", path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// mirrors canonical_config: `out` and `format` are plumbing, not computation,
// so they do not appear in the embedded config (or the report bytes).
json config_json(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["input"] = cfg.input;
    j["norm"] = cfg.norm;
    j["delta"] = cfg.delta;
    j["dedup_tol"] = cfg.dedup_tol;
    j["idem_tol"] = cfg.idem_tol;
    j["budget_products"] = cfg.budget_products;
    j["budget_powers"] = cfg.budget_powers;
    j["budget_depth"] = cfg.budget_depth;
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    j["eps"] = cfg.eps;
    return j;
}

// one CSV cell: strings bare, everything else in JSON notation
std::string csv_cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

/// Writes the report to cfg.out (or stdout). JSON format embeds everything;
/// CSV projects the table and carries the config as comment lines.
void emit_report(const RunConfig& cfg, const json& result, const json& table) {
    std::string text;
    if (cfg.format == "csv") {
        if (table.is_null())
            throw jsrlab::ValidationError("command '" + cfg.command +
                                          "' has no tabular projection; use format=json");
        std::ostringstream out;
        out << "# version=" << jsrlab::library_version << "\n";
        out << "# config_hash=" << jsrlab::cli::config_hash(cfg) << "\n";
        std::istringstream canon(jsrlab::cli::canonical_config(cfg));
        for (std::string line; std::getline(canon, line);) out << "# " << line << "\n";
        bool first = true;
        for (const auto& col : table["columns"]) {
            out << (first ? "" : ",") << csv_cell(col);
            first = false;
        }
        out << "\n";
        for (const auto& row : table["rows"]) {
            first = true;
            for (const auto& cell : row) {
                out << (first ? "" : ",") << csv_cell(cell);
                first = false;
            }
            out << "\n";
        }
        text = out.str();
    } else {
        json rep;
        rep["command"] = cfg.command;
        rep["config"] = config_json(cfg);
        rep["config_hash"] = jsrlab::cli::config_hash(cfg);
        rep["version"] = jsrlab::library_version;
        rep["result"] = result;
        if (!table.is_null()) rep["table"] = table;
        text = rep.dump(2) + "\n";
    }
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) throw jsrlab::ParseError("cannot open output file '" + cfg.out + "'", cfg.out);
        out << text;
    }
}

json make_table(std::vector<std::string> columns, std::vector<std::vector<json>> rows) {
    json t;
    t["columns"] = std::move(columns);
    t["rows"] = std::move(rows);
    return t;
}

jsrlab::JsrOptions jsr_options(const RunConfig& cfg) {
    jsrlab::JsrOptions opt;
    opt.norm = jsrlab::parse_norm_kind(cfg.norm);
    opt.budget = cfg.budget_products;
    opt.max_depth = cfg.budget_depth;
    opt.dedup_tol = cfg.dedup_tol;
    return opt;
}

jsrlab::MatrixSet load_set(const RunConfig& cfg) {
    if (cfg.input.empty())
        throw jsrlab::ValidationError("command '" + cfg.command + "' requires --input");
    jsrlab::SetOptions opt;
    opt.dedup_tol = cfg.dedup_tol;
    opt.product_budget = cfg.budget_products;
    return jsrlab::parse_matrix_set(read_file(cfg.input), opt);
}

// ------------------------------------------------------------------ commands

int run_jsr(const RunConfig& cfg) {
    jsrlab::MatrixSet m = load_set(cfg);
    jsrlab::Bracket b = jsr_bracket(m, cfg.delta, jsr_options(cfg));
    json result;
    result["lower"] = b.lower;
    result["upper"] = b.upper;
    result["witness"] = b.lower_witness.indices;
    result["depth"] = b.upper_depth;
    result["budget_spent"] = b.budget_spent;
    result["exhausted"] = b.exhausted;
    emit_report(cfg, result,
                make_table({"lower", "upper", "depth", "budget_spent"},
                           {{b.lower, b.upper, b.upper_depth, b.budget_spent}}));
    return b.exhausted ? 3 : 0;
}

int run_bw_verify(const RunConfig& cfg) {
    jsrlab::MatrixSet m = load_set(cfg);
    jsrlab::BwReport rep = verify_bw(m, cfg.budget_powers, cfg.delta, jsr_options(cfg));
    bool ordered = true;
    json rows = json::array();
    std::vector<std::vector<json>> trows;
    for (const auto& r : rep.rows) {
        ordered = ordered && r.lower <= r.upper + 1e-12;
        rows.push_back({{"depth", r.depth}, {"lower", r.lower}, {"upper", r.upper}});
        trows.push_back({r.depth, r.lower, r.upper});
    }
    json result;
    result["rows"] = rows;
    result["final_gap"] = rep.final_gap;
    result["converged"] = rep.converged;
    result["ordered"] = ordered;
    emit_report(cfg, result, make_table({"depth", "lower", "upper"}, std::move(trows)));
    return ordered ? 0 : 2;
}

int run_rlm_verify(const RunConfig& cfg) {
    jsrlab::MatrixSet m = load_set(cfg);
    jsrlab::RlmReport rep = verify_rlm(m, cfg.budget_powers, cfg.delta, jsr_options(cfg));
    json result;
    result["base"] = {{"lower", rep.base.lower}, {"upper", rep.base.upper}};
    result["base_squared"] = {{"lower", rep.base_sq_lower}, {"upper", rep.base_sq_upper}};
    result["lifted"] = {{"lower", rep.lifted.lower}, {"upper", rep.lifted.upper}};
    result["rho_overlap"] = rep.rho_overlap;
    result["r_base"] = rep.r_base;
    result["r_lifted"] = rep.r_lifted;
    result["r_match"] = rep.r_match;
    result["tol"] = rep.tol;
    const bool ok = rep.rho_overlap && rep.r_match;
    result["ok"] = ok;
    emit_report(cfg, result,
                make_table({"bracket", "lower", "upper"},
                           {{"base", rep.base.lower, rep.base.upper},
                            {"base_squared", rep.base_sq_lower, rep.base_sq_upper},
                            {"lifted", rep.lifted.lower, rep.lifted.upper}}));
    return ok ? 0 : 2;
}

json radius_rows_json(const std::vector<jsrlab::ops::RadiusRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"k", r.k},
                       {"op", r.op_k},
                       {"chi", r.chi_k},
                       {"essential", r.e_k},
                       {"finite_rank", r.f_k},
                       {"products", r.products}});
    return out;
}

std::vector<std::vector<json>> radius_rows_table(const std::vector<jsrlab::ops::RadiusRow>& rows) {
    std::vector<std::vector<json>> out;
    for (const auto& r : rows) out.push_back({r.k, r.op_k, r.chi_k, r.e_k, r.f_k, r.products});
    return out;
}

int run_ops_radii(const RunConfig& cfg, const std::string& check) {
    if (cfg.input.empty())
        throw jsrlab::ValidationError("command '" + cfg.command + "' requires --input");
    auto members = jsrlab::ops::parse_operator_set(read_file(cfg.input));
    const std::vector<std::string> radius_cols = {"k", "op", "chi", "essential", "finite_rank",
                                                  "products"};
    if (check == "chain") {
        jsrlab::ops::RadiusOptions opt;
        opt.max_len = cfg.budget_powers;
        opt.product_budget = static_cast<size_t>(cfg.budget_products);
        auto rows = radius_sequence(members, opt);
        json result;
        result["rows"] = radius_rows_json(rows);
        emit_report(cfg, result, make_table(radius_cols, radius_rows_table(rows)));
        return 0;
    }
    if (check == "main-equality") {
        jsrlab::ops::RadiusOptions opt;
        opt.max_len = cfg.budget_powers;
        opt.product_budget = static_cast<size_t>(cfg.budget_products);
        auto rep = verify_main_equality(members, opt);
        json result;
        result["rows"] = radius_rows_json(rep.rows);
        result["chi_eq_essential"] = rep.chi_eq_e;
        result["essential_eq_finite_rank"] = rep.e_eq_f;
        result["dominated"] = rep.dominated;
        result["ok"] = rep.ok;
        emit_report(cfg, result, make_table(radius_cols, radius_rows_table(rep.rows)));
        return rep.ok ? 0 : 2;
    }
    if (check == "gbwf") {
        jsrlab::ops::GbwfOptions opt;
        opt.max_len = cfg.budget_powers;
        auto rep = verify_gbwf(members, opt);
        json result;
        result["rows"] = radius_rows_json(rep.rows);
        result["chi_estimate"] = rep.chi_est;
        result["op_estimate"] = rep.op_est;
        result["truncation_dims"] = rep.dims;
        result["r_by_dim"] = rep.r_by_dim;
        result["r_estimate"] = rep.r_est;
        result["stable"] = rep.stable;
        result["max_of_branches"] = rep.gbwf_max;
        result["branch_is_eigen"] = rep.branch_is_eigen;
        result["residual"] = rep.residual;
        result["tol"] = rep.tol;
        result["ok"] = rep.ok;
        std::vector<std::vector<json>> trows;
        for (size_t i = 0; i < rep.dims.size(); ++i)
            trows.push_back({rep.dims[i], rep.r_by_dim[i]});
        emit_report(cfg, result, make_table({"trunc_dim", "r_estimate"}, std::move(trows)));
        return rep.ok ? 0 : 2;
    }
    throw jsrlab::ValidationError("unknown --check '" + check +
                                  "' (expected main-equality, gbwf or chain)");
}

int run_l1w_profile(const RunConfig& cfg) {
    auto v = jsrlab::l1w::parse_element(cfg.input);
    auto prof = jsrlab::l1w::quasinilpotence_profile(v, cfg.budget_powers,
                                                     static_cast<size_t>(cfg.budget_products));
    json result;
    result["element"] = jsrlab::l1w::element_to_string(v);
    result["powers"] = cfg.budget_powers;
    result["profile"] = prof;
    std::vector<std::vector<json>> trows;
    for (size_t i = 0; i < prof.size(); ++i)
        trows.push_back({static_cast<int>(i) + 1, prof[i]});
    emit_report(cfg, result, make_table({"n", "root_norm"}, std::move(trows)));
    return 0;
}

int run_l1w_net(const RunConfig& cfg) {
    auto cert = jsrlab::l1w::epsilon_net_certificate(cfg.eps);
    json result;
    result["eps"] = cert.eps;
    result["threshold"] = cert.threshold;
    result["cutoff"] = cert.cutoff;
    result["dominating_bound"] = cert.dominating_bound;
    result["ratios_from"] = cert.ratios_from;
    result["ratios"] = cert.ratios;
    std::vector<std::vector<json>> trows;
    for (size_t i = 0; i < cert.ratios.size(); ++i)
        trows.push_back({cert.ratios_from + static_cast<long long>(i), cert.ratios[i]});
    emit_report(cfg, result, make_table({"k", "ratio"}, std::move(trows)));
    return 0;
}

int run_l1w_nilfree(const RunConfig& cfg) {
    auto v = jsrlab::l1w::parse_element(cfg.input);
    auto rep = jsrlab::l1w::nilpotent_free_check(v, cfg.budget_powers,
                                                 static_cast<size_t>(cfg.budget_products));
    json result;
    result["element"] = jsrlab::l1w::element_to_string(v);
    result["power"] = rep.power;
    result["lowest_index"] = rep.lowest_index;
    result["lowest_coeff"] = rep.lowest_coeff;
    result["ok"] = rep.ok;
    emit_report(cfg, result,
                make_table({"power", "lowest_index", "lowest_coeff"},
                           {{rep.power, rep.lowest_index, rep.lowest_coeff}}));
    return rep.ok ? 0 : 2;
}

jsrlab::SemigroupOptions semigroup_options(const RunConfig& cfg) {
    jsrlab::SemigroupOptions opt;
    opt.norm = jsrlab::parse_norm_kind(cfg.norm);
    opt.dedup_tol = cfg.dedup_tol;
    opt.budget = static_cast<size_t>(cfg.budget_products);
    return opt;
}

json matrix_json(const jsrlab::Matrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.dim(); ++j) row.push_back(a(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_semigroup(const RunConfig& cfg, const std::string& mode) {
    jsrlab::MatrixSet m = load_set(cfg);
    const auto opt = semigroup_options(cfg);
    json result;
    if (mode == "sg") {
        auto slice = enumerate_semigroup(m, cfg.budget_depth, opt);
        json counts = json::array();
        std::vector<std::vector<json>> trows;
        for (size_t n = 0; n < slice.by_length.size(); ++n) {
            counts.push_back(slice.by_length[n].size());
            trows.push_back({static_cast<int>(n) + 1, slice.by_length[n].size()});
        }
        result["distinct_by_length"] = counts;
        result["total"] = slice.total;
        emit_report(cfg, result, make_table({"length", "distinct_products"}, std::move(trows)));
        return 0;
    }
    if (mode == "leading") {
        auto rep = leading_elements(m, cfg.budget_depth, opt);
        auto probe = leading_sequence_probe(m, cfg.budget_depth, opt);
        json counts = json::array();
        for (const auto& lv : rep.leading) counts.push_back(lv.size());
        result["level_sup"] = rep.level_sup;
        result["shorter_sup"] = rep.shorter_sup;
        result["leading_counts"] = counts;
        result["every_length_has_leading"] = rep.every_length_has_leading;
        result["growth_verdict"] = probe.verdict == jsrlab::GrowthVerdict::Found      ? "found"
                                   : probe.verdict == jsrlab::GrowthVerdict::Bounded ? "bounded"
                                                                                     : "inconclusive";
        result["growth_ratio"] = probe.growth_ratio;
        std::vector<std::vector<json>> trows;
        for (size_t n = 0; n < rep.level_sup.size(); ++n)
            trows.push_back({static_cast<int>(n) + 1, rep.level_sup[n], rep.shorter_sup[n],
                             rep.leading[n].size()});
        emit_report(cfg, result,
                    make_table({"length", "level_sup", "shorter_sup", "leading_count"},
                               std::move(trows)));
        return 0;
    }
    if (mode == "lim") {
        auto pts = lim_points(m, cfg.budget_depth, cfg.idem_tol, opt);
        json clusters = json::array();
        std::vector<std::vector<json>> trows;
        for (size_t i = 0; i < pts.size(); ++i) {
            const auto& p = pts[i];
            clusters.push_back({{"representative", matrix_json(p.rep)},
                                {"cluster_size", p.cluster_size},
                                {"min_length", p.min_length},
                                {"max_length", p.max_length}});
            trows.push_back({static_cast<int>(i), p.cluster_size, p.min_length, p.max_length});
        }
        result["clusters"] = clusters;
        result["tol"] = cfg.idem_tol;
        emit_report(cfg, result,
                    make_table({"cluster", "size", "min_length", "max_length"}, std::move(trows)));
        return 0;
    }
    if (mode == "idem") {
        auto idems = idempotent_scan(m, cfg.budget_depth, cfg.idem_tol, opt);
        json list = json::array();
        std::vector<std::vector<json>> trows;
        for (size_t i = 0; i < idems.size(); ++i) {
            const auto& e = idems[i];
            const double defect = mat_norm(e * e - e, opt.norm);
            list.push_back({{"matrix", matrix_json(e)}, {"defect", defect}});
            trows.push_back({static_cast<int>(i), defect});
        }
        result["idempotents"] = list;
        result["tol"] = cfg.idem_tol;
        emit_report(cfg, result, make_table({"index", "defect"}, std::move(trows)));
        return 0;
    }
    throw jsrlab::ValidationError("unknown --mode '" + mode +
                                  "' (expected sg, leading, lim or idem)");
}

int run_radcal_normalize(const RunConfig& cfg, const std::string& expr_text) {
    auto e = jsrlab::radcal::parse_expr(expr_text);
    auto n = jsrlab::radcal::normalize(e);
    json result;
    result["input"] = expr_text;
    result["normal_form"] = jsrlab::radcal::to_string(n);
    emit_report(cfg, result, json());
    return 0;
}

int run_radcal_prove(const RunConfig& cfg, bool leq, const std::string& lhs_text,
                     const std::string& rhs_text) {
    auto lhs = jsrlab::radcal::parse_expr(lhs_text);
    auto rhs = jsrlab::radcal::parse_expr(rhs_text);
    auto res = leq ? prove_leq(lhs, rhs) : prove_eq(lhs, rhs);
    json result;
    result["mode"] = leq ? "leq" : "eq";
    result["lhs"] = lhs_text;
    result["rhs"] = rhs_text;
    result["verdict"] = res.verdict == jsrlab::radcal::Verdict::Yes  ? "yes"
                        : res.verdict == jsrlab::radcal::Verdict::No ? "no"
                                                                     : "unknown";
    result["steps"] = res.steps;
    emit_report(cfg, result, json());
    return res.verdict == jsrlab::radcal::Verdict::Yes ? 0 : 2;
}

int run_radcal_eval(const RunConfig& cfg, const std::string& algebra_path,
                    const std::string& expr_text) {
    auto a = jsrlab::radcal::parse_algebra(read_file(algebra_path));
    auto e = jsrlab::radcal::parse_expr(expr_text);
    jsrlab::radcal::EvalStats st;
    auto s = eval_expr(e, a, &st);
    json result;
    result["expression"] = expr_text;
    result["normal_form"] = jsrlab::radcal::to_string(jsrlab::radcal::normalize(e));
    result["algebra"] = {{"dim", a.dim()}, {"labels", a.labels()}};
    result["subspace"] = {{"ambient", s.ambient}, {"dim", s.dim()}, {"basis", s.basis}};
    result["max_fixpoint_steps"] = st.max_fixpoint_steps;
    std::vector<std::vector<json>> trows;
    for (const auto& v : s.basis) {
        std::vector<json> row;
        for (double x : v) row.push_back(x);
        trows.push_back(std::move(row));
    }
    emit_report(cfg, result, make_table(a.labels(), std::move(trows)));
    return 0;
}

int run_radcal_goals(const RunConfig& cfg) {
    json rows = json::array();
    std::vector<std::vector<json>> trows;
    bool all_open = true;
    for (const auto& g : jsrlab::radcal::open_goals()) {
        auto res = prove_leq(jsrlab::radcal::parse_expr(g.lhs), jsrlab::radcal::parse_expr(g.rhs));
        const std::string verdict = res.verdict == jsrlab::radcal::Verdict::Yes  ? "yes"
                                    : res.verdict == jsrlab::radcal::Verdict::No ? "no"
                                                                                 : "unknown";
        all_open = all_open && res.verdict == jsrlab::radcal::Verdict::Unknown;
        rows.push_back({{"name", g.name},
                        {"statement", g.statement},
                        {"lhs", g.lhs},
                        {"rhs", g.rhs},
                        {"verdict", verdict}});
        trows.push_back({g.name, verdict});
    }
    json result;
    result["goals"] = rows;
    result["all_open"] = all_open;
    emit_report(cfg, result, make_table({"goal", "verdict"}, std::move(trows)));
    // a resolved "open" goal means a deduction rule overreached somewhere
    return all_open ? 0 : 2;
}

int run_accept(const RunConfig& cfg) {
    jsrlab::accept::AcceptanceOptions opt;
    opt.seed = cfg.seed;
    auto results = jsrlab::accept::run_criteria(opt);
    int failures = 0;
    json rows = json::array();
    std::vector<std::vector<json>> trows;
    for (const auto& r : results) {
        if (!r.pass) ++failures;
        std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.label
                  << " -- " << r.detail << "\n";
        rows.push_back(
            {{"id", r.id}, {"label", r.label}, {"pass", r.pass}, {"detail", r.detail}});
        trows.push_back({r.id, r.pass, r.label});
    }
    std::cout << (failures == 0 ? "all criteria passed\n"
                                : std::to_string(failures) + " criteria failed\n");
    if (!cfg.out.empty()) {
        json result;
        result["criteria"] = rows;
        result["failures"] = failures;
        emit_report(cfg, result, make_table({"id", "pass", "label"}, std::move(trows)));
    }
    return failures == 0 ? 0 : 2;
}

// --------------------------------------------------------------- CLI plumbing

/// Flag values arrive as strings and flow through the same key=value door as
/// config files, so validation and precedence live in one place.
struct Staged {
    std::string config_file;
    std::vector<std::pair<std::string, std::string>> overrides;

    RunConfig build(std::string command) const {
        RunConfig cfg;
        cfg.command = std::move(command);
        if (!config_file.empty()) jsrlab::cli::apply_config_file(cfg, config_file);
        for (const auto& [key, value] : overrides) jsrlab::cli::apply_config_entry(cfg, key, value);
        jsrlab::cli::validate_config(cfg);
        return cfg;
    }
};

void add_config_option(CLI::App* cmd, Staged& st) {
    cmd->add_option("--config", st.config_file, "flat key=value config file (flags override)");
}

void add_keyed_option(CLI::App* cmd, Staged& st, const std::string& flag, const std::string& key,
                      const std::string& desc) {
    cmd->add_option_function<std::string>(
        flag, [&st, key](const std::string& v) { st.overrides.emplace_back(key, v); }, desc);
}

void add_io_options(CLI::App* cmd, Staged& st) {
    add_config_option(cmd, st);
    add_keyed_option(cmd, st, "--out", "out", "report file (default stdout)");
    add_keyed_option(cmd, st, "--format", "format", "report format: json | csv");
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const jsrlab::BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const jsrlab::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const jsrlab::ValidationError& e) {
        std::cerr << "invalid request: " << e.what() << "\n";
        return 1;
    } catch (const jsrlab::Error& e) {
        std::cerr << "verification machinery failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected failure: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"joint-spectral-radius laboratory"};
    app.require_subcommand(1);

    std::function<int()> action;

    // ---- jsr
    Staged jsr_st;
    auto* jsr_cmd = app.add_subcommand("jsr", "two-sided joint-spectral-radius enclosure");
    add_io_options(jsr_cmd, jsr_st);
    add_keyed_option(jsr_cmd, jsr_st, "--input", "input", "matrix set JSON file");
    add_keyed_option(jsr_cmd, jsr_st, "--delta", "delta", "bracket width target");
    add_keyed_option(jsr_cmd, jsr_st, "--budget", "budget_products", "product budget");
    add_keyed_option(jsr_cmd, jsr_st, "--depth", "budget_depth", "depth cap");
    add_keyed_option(jsr_cmd, jsr_st, "--norm", "norm", "norm: 1 | 2 | inf");
    add_keyed_option(jsr_cmd, jsr_st, "--dedup-tol", "dedup_tol", "member dedup tolerance");
    jsr_cmd->callback([&] { action = [&] { return run_jsr(jsr_st.build("jsr")); }; });

    // ---- bw-verify
    Staged bw_st;
    auto* bw_cmd = app.add_subcommand("bw-verify", "tabulate the two Berger-Wang sequences");
    add_io_options(bw_cmd, bw_st);
    add_keyed_option(bw_cmd, bw_st, "--input", "input", "matrix set JSON file");
    add_keyed_option(bw_cmd, bw_st, "--powers", "budget_powers", "levels to tabulate");
    add_keyed_option(bw_cmd, bw_st, "--delta", "delta", "convergence gap target");
    add_keyed_option(bw_cmd, bw_st, "--budget", "budget_products", "product budget");
    add_keyed_option(bw_cmd, bw_st, "--norm", "norm", "norm: 1 | 2 | inf");
    bw_cmd->callback([&] { action = [&] { return run_bw_verify(bw_st.build("bw-verify")); }; });

    // ---- rlm-verify
    Staged rlm_st;
    auto* rlm_cmd =
        app.add_subcommand("rlm-verify", "two-sided multiplication lift squares the radius");
    add_io_options(rlm_cmd, rlm_st);
    add_keyed_option(rlm_cmd, rlm_st, "--input", "input", "matrix set JSON file");
    add_keyed_option(rlm_cmd, rlm_st, "--powers", "budget_powers", "sweep depth");
    add_keyed_option(rlm_cmd, rlm_st, "--tol", "delta", "lower-estimate match tolerance");
    add_keyed_option(rlm_cmd, rlm_st, "--budget", "budget_products", "product budget");
    add_keyed_option(rlm_cmd, rlm_st, "--norm", "norm", "norm: 1 | 2 | inf");
    rlm_cmd->callback(
        [&] { action = [&] { return run_rlm_verify(rlm_st.build("rlm-verify")); }; });

    // ---- ops-radii
    Staged ops_st;
    std::string ops_check = "main-equality";
    auto* ops_cmd = app.add_subcommand("ops-radii", "norm-sequence checks for banded operators");
    add_io_options(ops_cmd, ops_st);
    add_keyed_option(ops_cmd, ops_st, "--input", "input", "operator set JSON file");
    add_keyed_option(ops_cmd, ops_st, "--powers", "budget_powers", "max product length");
    add_keyed_option(ops_cmd, ops_st, "--budget", "budget_products", "product budget");
    ops_cmd->add_option("--check", ops_check, "main-equality | gbwf | chain");
    ops_cmd->callback([&] {
        action = [&] { return run_ops_radii(ops_st.build("ops-radii:" + ops_check), ops_check); };
    });

    // ---- l1w
    auto* l1w_cmd = app.add_subcommand("l1w", "power-compressing weighted convolution algebra");
    l1w_cmd->require_subcommand(1);

    Staged l1wp_st;
    auto* l1wp = l1w_cmd->add_subcommand("profile", "n-th root norms of powers");
    add_io_options(l1wp, l1wp_st);
    add_keyed_option(l1wp, l1wp_st, "--element", "input", "element, e.g. \"e1+2e3\"");
    add_keyed_option(l1wp, l1wp_st, "--powers", "budget_powers", "profile length");
    l1wp->callback(
        [&] { action = [&] { return run_l1w_profile(l1wp_st.build("l1w:profile")); }; });

    Staged l1wn_st;
    auto* l1wn = l1w_cmd->add_subcommand("net", "finite-net certificate for the weight tail");
    add_io_options(l1wn, l1wn_st);
    add_keyed_option(l1wn, l1wn_st, "--eps", "eps", "net resolution");
    l1wn->callback([&] { action = [&] { return run_l1w_net(l1wn_st.build("l1w:net")); }; });

    Staged l1wf_st;
    auto* l1wf = l1w_cmd->add_subcommand("nilfree", "exact nonvanishing of a power");
    add_io_options(l1wf, l1wf_st);
    add_keyed_option(l1wf, l1wf_st, "--element", "input", "element, e.g. \"e1+2e3\"");
    add_keyed_option(l1wf, l1wf_st, "--power", "budget_powers", "power to certify");
    l1wf->callback(
        [&] { action = [&] { return run_l1w_nilfree(l1wf_st.build("l1w:nilfree")); }; });

    // ---- semigroup
    Staged sg_st;
    std::string sg_mode = "sg";
    auto* sg_cmd = app.add_subcommand("semigroup", "product semigroup structure probes");
    add_io_options(sg_cmd, sg_st);
    add_keyed_option(sg_cmd, sg_st, "--input", "input", "matrix set JSON file");
    add_keyed_option(sg_cmd, sg_st, "--length", "budget_depth", "max word length");
    add_keyed_option(sg_cmd, sg_st, "--tol", "idem_tol", "cluster / idempotent tolerance");
    add_keyed_option(sg_cmd, sg_st, "--budget", "budget_products", "product budget");
    add_keyed_option(sg_cmd, sg_st, "--norm", "norm", "norm: 1 | 2 | inf");
    sg_cmd->add_option("--mode", sg_mode, "sg | leading | lim | idem");
    sg_cmd->callback([&] {
        action = [&] { return run_semigroup(sg_st.build("semigroup:" + sg_mode), sg_mode); };
    });

    // ---- radcal
    auto* rc_cmd = app.add_subcommand("radcal", "radical calculus: rewrite, prove, evaluate");
    rc_cmd->require_subcommand(1);

    Staged rcn_st;
    std::string rcn_expr;
    auto* rcn = rc_cmd->add_subcommand("normalize", "canonical form of an expression");
    add_io_options(rcn, rcn_st);
    rcn->add_option("expr", rcn_expr, "radical expression")->required();
    rcn->callback([&] {
        action = [&] {
            auto cfg = rcn_st.build("radcal:normalize");
            cfg.input = rcn_expr;
            return run_radcal_normalize(cfg, rcn_expr);
        };
    });

    Staged rcp_st;
    std::string rcp_lhs, rcp_rhs;
    bool rcp_leq = false;
    auto* rcp = rc_cmd->add_subcommand("prove", "derive an identity or a bound");
    add_io_options(rcp, rcp_st);
    rcp->add_flag("--leq", rcp_leq, "prove lhs <= rhs instead of equality");
    rcp->add_option("lhs", rcp_lhs, "left-hand expression")->required();
    rcp->add_option("rhs", rcp_rhs, "right-hand expression")->required();
    rcp->callback([&] {
        action = [&] {
            auto cfg = rcp_st.build(rcp_leq ? "radcal:prove-leq" : "radcal:prove-eq");
            cfg.input = rcp_lhs + (rcp_leq ? " <= " : " == ") + rcp_rhs;
            return run_radcal_prove(cfg, rcp_leq, rcp_lhs, rcp_rhs);
        };
    });

    Staged rce_st;
    std::string rce_expr, rce_algebra;
    auto* rce = rc_cmd->add_subcommand("eval", "evaluate on a structure-constant witness");
    add_io_options(rce, rce_st);
    rce->add_option("--algebra", rce_algebra, "witness algebra JSON file")->required();
    rce->add_option("expr", rce_expr, "radical expression")->required();
    rce->callback([&] {
        action = [&] {
            auto cfg = rce_st.build("radcal:eval");
            cfg.input = rce_algebra + " :: " + rce_expr;
            return run_radcal_eval(cfg, rce_algebra, rce_expr);
        };
    });

    Staged rcg_st;
    auto* rcg = rc_cmd->add_subcommand("goals", "status of the deliberately-open questions");
    add_io_options(rcg, rcg_st);
    rcg->callback([&] { action = [&] { return run_radcal_goals(rcg_st.build("radcal:goals")); }; });

    // ---- accept
    Staged acc_st;
    auto* acc_cmd = app.add_subcommand("accept", "run the acceptance suite");
    add_io_options(acc_cmd, acc_st);
    add_keyed_option(acc_cmd, acc_st, "--seed", "seed", "base seed for sampled criteria");
    acc_cmd->callback([&] { action = [&] { return run_accept(acc_st.build("accept")); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // --help is a success; usage errors are schema errors
    }

    if (!action) {
        std::cerr << "no command selected\n";
        return 1;
    }
    return guarded(action);
}
