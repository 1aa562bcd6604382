#include "jsrlab/ops/banded.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "jsrlab/errors.hpp"

namespace jsrlab::ops {

BandedOperator::BandedOperator(std::vector<Diagonal> diagonals,
                               std::vector<std::vector<double>> correction) {
    // merge same-offset diagonals, normalize, drop zero ones
    std::map<int, TailSeq> merged;
    for (auto& d : diagonals) {
        auto it = merged.find(d.offset);
        if (it == merged.end())
            merged.emplace(d.offset, d.pattern);
        else
            it->second = TailSeq::add(it->second, d.pattern);
    }
    for (auto& [off, pat] : merged) {
        TailSeq norm = pat.normalized();
        if (norm.is_zero()) continue;
        diagonals_.push_back({off, std::move(norm)});
        bandwidth_ = std::max(bandwidth_, std::abs(off));
    }

    const size_t n = correction.size();
    for (const auto& row : correction) {
        if (row.size() != n) throw ValidationError("correction block must be square");
        for (double v : row)
            if (!std::isfinite(v)) throw ValidationError("correction entries must be finite");
    }
    // trim trailing all-zero rows+columns
    size_t keep = n;
    while (keep > 0) {
        bool zero = true;
        for (size_t t = 0; t < keep && zero; ++t)
            zero = correction[keep - 1][t] == 0.0 && correction[t][keep - 1] == 0.0;
        if (!zero) break;
        --keep;
    }
    correction_.assign(correction.begin(), correction.begin() + static_cast<long>(keep));
    for (auto& row : correction_) row.resize(keep);
}

double BandedOperator::entry(long long i, long long j) const {
    if (i < 0 || j < 0) return 0.0;
    double v = 0.0;
    const long long off = i - j;
    if (std::abs(off) <= bandwidth_) {
        for (const auto& d : diagonals_) {
            if (d.offset == off) {
                v += d.pattern.at(j);
                break;
            }
        }
    }
    const long long n = static_cast<long long>(correction_.size());
    if (i < n && j < n) v += correction_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return v;
}

bool BandedOperator::operator==(const BandedOperator& rhs) const {
    if (correction_ != rhs.correction_) return false;
    if (diagonals_.size() != rhs.diagonals_.size()) return false;
    for (size_t i = 0; i < diagonals_.size(); ++i) {
        if (diagonals_[i].offset != rhs.diagonals_[i].offset) return false;
        if (!(diagonals_[i].pattern == rhs.diagonals_[i].pattern)) return false;
    }
    return true;
}

BandedOperator BandedOperator::scaled(double s) const {
    if (!std::isfinite(s)) throw ValidationError("scale factor must be finite");
    std::vector<Diagonal> diags;
    diags.reserve(diagonals_.size());
    for (const auto& d : diagonals_) {
        std::vector<double> p = d.pattern.prefix();
        std::vector<double> c = d.pattern.cycle();
        for (double& v : p) v *= s;
        for (double& v : c) v *= s;
        diags.push_back({d.offset, TailSeq(std::move(p), std::move(c))});
    }
    std::vector<std::vector<double>> corr = correction_;
    for (auto& row : corr)
        for (double& v : row) v *= s;
    return BandedOperator(std::move(diags), std::move(corr));
}

Matrix BandedOperator::truncate(int d) const {
    Matrix m(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = entry(i, j);
    return m;
}

namespace {

// Band-only part of an entry (diagonals without the correction block).
double band_entry(const BandedOperator& t, long long i, long long j) {
    if (i < 0 || j < 0) return 0.0;
    const long long off = i - j;
    if (std::abs(off) > t.bandwidth()) return 0.0;
    for (const auto& d : t.diagonals())
        if (d.offset == off) return d.pattern.at(j);
    return 0.0;
}

double corr_entry(const BandedOperator& t, long long i, long long j) {
    const long long n = t.correction_size();
    if (i < 0 || j < 0 || i >= n || j >= n) return 0.0;
    return t.correction()[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

// Column abs sums of the band part as one eventually periodic sequence.
TailSeq band_colsum_seq(const BandedOperator& t) {
    TailSeq s; // zero
    for (const auto& d : t.diagonals()) {
        TailSeq contrib = d.pattern.abs().masked_before(std::max(0, -d.offset));
        s = TailSeq::add(s, contrib);
    }
    return s;
}

// Exact column abs sum at column j including the correction block.
double colsum_at(const BandedOperator& t, long long j) {
    const long long n = t.correction_size();
    if (j >= n) {
        double s = 0.0;
        for (const auto& d : t.diagonals())
            if (j + d.offset >= 0) s += std::abs(d.pattern.at(j));
        return s;
    }
    const long long hi = std::max<long long>(n, j + t.bandwidth()) ;
    double s = 0.0;
    for (long long i = 0; i <= hi; ++i) s += std::abs(t.entry(i, j));
    return s;
}

} // namespace

double op_norm(const BandedOperator& t) {
    const TailSeq s = band_colsum_seq(t);
    const long long n = t.correction_size();
    double best = 0.0;
    for (long long j = 0; j < n; ++j) best = std::max(best, colsum_at(t, j));
    const long long start = std::max<long long>(n, 0);
    const long long upto = std::max<long long>(start, static_cast<long long>(s.prefix_len())) +
                           static_cast<long long>(s.cycle_len());
    for (long long j = start; j < upto; ++j) best = std::max(best, s.at(j));
    return best;
}

double essential_norm(const BandedOperator& t) {
    // limsup of the column sums: only the periodic tail survives.
    const TailSeq s = band_colsum_seq(t);
    const long long start = static_cast<long long>(s.prefix_len());
    double best = 0.0;
    for (long long j = start; j < start + static_cast<long long>(s.cycle_len()); ++j)
        best = std::max(best, s.at(j));
    return best;
}

double f_norm(const BandedOperator& t) {
    // inf over cutoffs n of sup_{j >= n} colsum(j), via the suffix-sup sweep.
    const TailSeq s = band_colsum_seq(t);
    const long long n_max =
        std::max<long long>(t.correction_size(), static_cast<long long>(s.prefix_len()));
    double cycle_max = 0.0;
    for (long long j = n_max; j < n_max + static_cast<long long>(s.cycle_len()); ++j)
        cycle_max = std::max(cycle_max, s.at(j));
    double best = cycle_max; // suffix sup at the deepest cutoff
    double suffix = cycle_max;
    for (long long n = n_max - 1; n >= 0; --n) {
        suffix = std::max(suffix, colsum_at(t, n));
        best = std::min(best, suffix); // monotone, but keep the sweep literal
    }
    return best;
}

double chi_norm(const BandedOperator& t) {
    // Escaping tail columns force the measure of noncompactness up to the
    // reduced cycle max; a cutoff net brings it back down to the same value.
    const TailSeq s = band_colsum_seq(t).normalized();
    return s.tail_sup_abs();
}

namespace {

TailSeq band_product_term(const Diagonal& da, const Diagonal& db, const ComposeOptions& opt) {
    // column j of the composite picks A(i, j+ob) * B(j+ob, j)
    TailSeq a_valid = da.pattern.masked_before(std::max(0, -da.offset));
    TailSeq b_valid = db.pattern.masked_before(std::max(0, -db.offset));
    lcm_checked(a_valid.cycle_len(), b_valid.cycle_len(), opt.max_cycle);
    return TailSeq::mul(a_valid.shifted(db.offset), b_valid);
}

} // namespace

BandedOperator compose(const BandedOperator& a, const BandedOperator& b,
                       const ComposeOptions& opt) {
    std::map<int, TailSeq> diag;
    for (const auto& da : a.diagonals()) {
        for (const auto& db : b.diagonals()) {
            const int off = da.offset + db.offset;
            TailSeq term = band_product_term(da, db, opt);
            auto it = diag.find(off);
            if (it == diag.end())
                diag.emplace(off, std::move(term));
            else {
                lcm_checked(it->second.cycle_len(), term.cycle_len(), opt.max_cycle);
                it->second = TailSeq::add(it->second, term);
            }
        }
    }

    // Everything the correction blocks touch lives in a finite window.
    const long long na = a.correction_size();
    const long long nb = b.correction_size();
    const long long w = std::max({na, nb, nb + static_cast<long long>(a.bandwidth()),
                                  na + static_cast<long long>(b.bandwidth())});
    if (w > opt.max_correction)
        throw BudgetError("composed correction window " + std::to_string(w) +
                          " exceeds budget " + std::to_string(opt.max_correction));
    std::vector<std::vector<double>> corr(static_cast<size_t>(w),
                                          std::vector<double>(static_cast<size_t>(w), 0.0));
    const long long kmax = std::max({na, nb, w + static_cast<long long>(a.bandwidth()) +
                                                 static_cast<long long>(b.bandwidth())});
    for (long long i = 0; i < w; ++i) {
        for (long long j = 0; j < w; ++j) {
            double v = 0.0;
            for (long long k = 0; k < kmax; ++k) {
                const double ca = corr_entry(a, i, k);
                const double cb = corr_entry(b, k, j);
                if (ca != 0.0) v += ca * (band_entry(b, k, j) + cb);
                if (cb != 0.0) v += band_entry(a, i, k) * cb;
            }
            corr[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }
    }

    std::vector<Diagonal> diags;
    diags.reserve(diag.size());
    for (auto& [off, pat] : diag) diags.push_back({off, std::move(pat)});
    return BandedOperator(std::move(diags), std::move(corr));
}

ChiSubmultReport chi_submult_check(const BandedOperator& a, const BandedOperator& b,
                                   const ComposeOptions& opt) {
    ChiSubmultReport r;
    r.chi_ab = chi_norm(compose(a, b, opt));
    r.chi_a_op_b = chi_norm(a) * op_norm(b);
    r.op_a_chi_b = op_norm(a) * chi_norm(b);
    r.ok = r.chi_ab <= std::min(r.chi_a_op_b, r.op_a_chi_b);
    return r;
}

namespace {

std::vector<double> number_array(const nlohmann::json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError("expected an array of numbers", path);
    std::vector<double> out;
    out.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number())
            throw ParseError("expected a number", path + "[" + std::to_string(i) + "]");
        out.push_back(j[i].get<double>());
    }
    return out;
}

BandedOperator operator_from_json(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError("operator must be an object", path);
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "bandwidth" && it.key() != "diagonals" && it.key() != "correction")
            throw ParseError("unknown field '" + it.key() + "'", path + "." + it.key());
    if (!j.contains("bandwidth") || !j["bandwidth"].is_number_integer())
        throw ParseError("missing integer field 'bandwidth'", path + ".bandwidth");
    const int bw = j["bandwidth"].get<int>();
    if (bw < 0) throw ParseError("'bandwidth' must be >= 0", path + ".bandwidth");

    std::vector<Diagonal> diags;
    if (j.contains("diagonals")) {
        if (!j["diagonals"].is_array())
            throw ParseError("'diagonals' must be an array", path + ".diagonals");
        for (size_t i = 0; i < j["diagonals"].size(); ++i) {
            const auto& jd = j["diagonals"][i];
            const std::string dpath = path + ".diagonals[" + std::to_string(i) + "]";
            if (!jd.is_object()) throw ParseError("diagonal must be an object", dpath);
            for (auto it = jd.begin(); it != jd.end(); ++it)
                if (it.key() != "offset" && it.key() != "prefix" && it.key() != "cycle")
                    throw ParseError("unknown field '" + it.key() + "'", dpath + "." + it.key());
            if (!jd.contains("offset") || !jd["offset"].is_number_integer())
                throw ParseError("missing integer field 'offset'", dpath + ".offset");
            const int off = jd["offset"].get<int>();
            if (std::abs(off) > bw)
                throw ParseError("diagonal offset exceeds declared bandwidth", dpath + ".offset");
            std::vector<double> prefix, cycle;
            if (jd.contains("prefix")) prefix = number_array(jd["prefix"], dpath + ".prefix");
            if (!jd.contains("cycle"))
                throw ParseError("missing field 'cycle'", dpath + ".cycle");
            cycle = number_array(jd["cycle"], dpath + ".cycle");
            if (cycle.empty()) throw ParseError("'cycle' must be nonempty", dpath + ".cycle");
            diags.push_back({off, TailSeq(std::move(prefix), std::move(cycle))});
        }
    }

    std::vector<std::vector<double>> corr;
    if (j.contains("correction")) {
        if (!j["correction"].is_array())
            throw ParseError("'correction' must be an array of rows", path + ".correction");
        for (size_t r = 0; r < j["correction"].size(); ++r)
            corr.push_back(
                number_array(j["correction"][r], path + ".correction[" + std::to_string(r) + "]"));
        for (size_t r = 0; r < corr.size(); ++r)
            if (corr[r].size() != corr.size())
                throw ParseError("correction block must be square",
                                 path + ".correction[" + std::to_string(r) + "]");
    }
    try {
        return BandedOperator(std::move(diags), std::move(corr));
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), path);
    }
}

} // namespace

BandedOperator parse_operator(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), "byte " + std::to_string(e.byte));
    }
    return operator_from_json(j, "$");
}

std::vector<BandedOperator> parse_operator_set(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), "byte " + std::to_string(e.byte));
    }
    if (j.is_object() && j.contains("members")) {
        if (!j["members"].is_array() || j["members"].empty())
            throw ParseError("'members' must be a nonempty array", "$.members");
        std::vector<BandedOperator> out;
        for (size_t i = 0; i < j["members"].size(); ++i)
            out.push_back(
                operator_from_json(j["members"][i], "$.members[" + std::to_string(i) + "]"));
        return out;
    }
    return {operator_from_json(j, "$")};
}

std::string operator_to_json(const BandedOperator& t) {
    nlohmann::json j;
    j["bandwidth"] = t.bandwidth();
    auto jd = nlohmann::json::array();
    for (const auto& d : t.diagonals()) {
        nlohmann::json e;
        e["offset"] = d.offset;
        e["prefix"] = d.pattern.prefix();
        e["cycle"] = d.pattern.cycle();
        jd.push_back(std::move(e));
    }
    j["diagonals"] = std::move(jd);
    j["correction"] = t.correction();
    return j.dump();
}

} // namespace jsrlab::ops
