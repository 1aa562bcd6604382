#include "jsrlab/l1w/element.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "jsrlab/errors.hpp"
#include "jsrlab/l1w/weight.hpp"

namespace jsrlab::l1w {

WeightedElement::WeightedElement(std::vector<Term> terms) {
    std::map<long long, double> acc;
    for (const Term& t : terms) {
        if (t.index < 1) throw ValidationError("element indices must be >= 1");
        if (!std::isfinite(t.coeff)) throw ValidationError("element coefficients must be finite");
        acc[t.index] += t.coeff;
    }
    for (const auto& [idx, c] : acc)
        if (c != 0.0) terms_.push_back({idx, c});
}

WeightedElement WeightedElement::basis(long long index, double coeff) {
    return WeightedElement({{index, coeff}});
}

Term WeightedElement::lowest() const {
    if (terms_.empty()) throw ValidationError("zero element has no lowest term");
    return terms_.front();
}

WeightedElement add(const WeightedElement& a, const WeightedElement& b) {
    std::vector<Term> t = a.terms();
    t.insert(t.end(), b.terms().begin(), b.terms().end());
    return WeightedElement(std::move(t));
}

WeightedElement scale(const WeightedElement& a, double s) {
    std::vector<Term> t = a.terms();
    for (Term& x : t) x.coeff *= s;
    return WeightedElement(std::move(t));
}

WeightedElement convolve(const WeightedElement& a, const WeightedElement& b, size_t pair_budget) {
    if (a.support_size() * b.support_size() > pair_budget)
        throw BudgetError("convolution needs " +
                          std::to_string(a.support_size() * b.support_size()) +
                          " term pairs, budget is " + std::to_string(pair_budget));
    std::vector<Term> out;
    out.reserve(a.support_size() * b.support_size());
    for (const Term& x : a.terms())
        for (const Term& y : b.terms()) out.push_back({x.index + y.index, x.coeff * y.coeff});
    return WeightedElement(std::move(out));
}

double elem_norm(const WeightedElement& a) {
    double s = 0.0;
    for (const Term& t : a.terms()) s += std::abs(t.coeff) * weight(t.index);
    return s;
}

double elem_log_norm(const WeightedElement& a) {
    if (a.is_zero()) return -std::numeric_limits<double>::infinity();
    double mx = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    logs.reserve(a.support_size());
    for (const Term& t : a.terms()) {
        const double l = std::log(std::abs(t.coeff)) + log_weight(t.index);
        logs.push_back(l);
        mx = std::max(mx, l);
    }
    double s = 0.0;
    for (double l : logs) s += std::exp(l - mx);
    return mx + std::log(s);
}

std::vector<double> quasinilpotence_profile(const WeightedElement& v, int n_max,
                                            size_t pair_budget) {
    if (n_max < 1) throw ValidationError("profile length must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n_max));
    if (v.is_zero()) {
        out.assign(static_cast<size_t>(n_max), 0.0);
        return out;
    }
    if (v.support_size() == 1) {
        const Term t = v.lowest();
        for (int n = 1; n <= n_max; ++n) {
            if (std::abs(t.coeff) == 1.0) {
                out.push_back(weight_root(t.index * n, n));
            } else {
                const double l = std::log(std::abs(t.coeff)) +
                                 log_weight(t.index * n) / static_cast<double>(n);
                out.push_back(std::exp(l));
            }
        }
        return out;
    }
    WeightedElement p = v;
    for (int n = 1; n <= n_max; ++n) {
        out.push_back(std::exp(elem_log_norm(p) / static_cast<double>(n)));
        if (n < n_max) p = convolve(p, v, pair_budget);
    }
    return out;
}

NilpotentFreeReport nilpotent_free_check(const WeightedElement& v, int m, size_t pair_budget) {
    if (m < 1) throw ValidationError("power must be >= 1");
    if (v.is_zero()) throw ValidationError("nilpotent-free check needs a nonzero element");
    NilpotentFreeReport rep;
    rep.power = m;

    double expected = v.lowest().coeff;
    for (int i = 1; i < m; ++i) expected *= v.lowest().coeff;

    WeightedElement p = v;
    for (int i = 1; i < m; ++i) p = convolve(p, v, pair_budget);

    rep.lowest_index = p.is_zero() ? 0 : p.lowest().index;
    rep.lowest_coeff = p.is_zero() ? 0.0 : p.lowest().coeff;
    rep.ok = !p.is_zero() && rep.lowest_index == m * v.lowest().index &&
             rep.lowest_coeff == expected && rep.lowest_coeff != 0.0;
    return rep;
}

namespace {

[[noreturn]] void bad_parse(const std::string& msg, size_t pos) {
    throw ParseError(msg, "char " + std::to_string(pos));
}

} // namespace

WeightedElement parse_element(const std::string& text) {
    std::vector<Term> terms;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
    };

    skip_ws();
    if (i == n) bad_parse("empty element", i);
    bool first = true;
    while (true) {
        skip_ws();
        double sign = 1.0;
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            if (first && text[i] == '+') bad_parse("unexpected leading '+'", i);
            sign = text[i] == '-' ? -1.0 : 1.0;
            ++i;
            skip_ws();
        } else if (!first) {
            bad_parse("expected '+' or '-' between terms", i);
        }

        // optional coefficient: digits with at most one dot, no exponent
        double coeff = 1.0;
        const size_t cstart = i;
        bool seen_digit = false, seen_dot = false;
        while (i < n && ((text[i] >= '0' && text[i] <= '9') || (text[i] == '.' && !seen_dot))) {
            if (text[i] == '.')
                seen_dot = true;
            else
                seen_digit = true;
            ++i;
        }
        if (i > cstart) {
            if (!seen_digit) bad_parse("malformed coefficient", cstart);
            coeff = std::stod(text.substr(cstart, i - cstart));
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }

        if (i >= n || text[i] != 'e') bad_parse("expected basis term 'e<index>'", i);
        ++i;
        const size_t istart = i;
        while (i < n && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == istart) bad_parse("missing basis index", i);
        const long long index = std::stoll(text.substr(istart, i - istart));
        if (index < 1) bad_parse("basis index must be >= 1", istart);
        terms.push_back({index, sign * coeff});

        first = false;
        skip_ws();
        if (i == n) break;
        if (text[i] != '+' && text[i] != '-') bad_parse("unexpected trailing input", i);
    }
    return WeightedElement(std::move(terms));
}

std::string element_to_string(const WeightedElement& a) {
    if (a.is_zero()) return "0*e1";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : a.terms()) {
        const double c = t.coeff;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const double mag = std::abs(c);
        if (mag != 1.0) {
            // 'e' belongs to the basis grammar, so scientific notation is out
            char buf[512];
            std::snprintf(buf, sizeof buf, "%.17g", mag);
            if (std::string(buf).find('e') != std::string::npos) {
                const int prec =
                    mag >= 1.0 ? 1 : 18 + static_cast<int>(std::ceil(-std::log10(mag)));
                std::snprintf(buf, sizeof buf, "%.*f", prec, mag);
            }
            os << buf << "*";
        }
        os << "e" << t.index;
        first = false;
    }
    return os.str();
}

} // namespace jsrlab::l1w
