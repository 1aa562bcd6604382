#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "jsrlab/errors.hpp"
#include "jsrlab/l1w/element.hpp"
#include "jsrlab/l1w/weight.hpp"

using namespace jsrlab;
using namespace jsrlab::l1w;

TEST_CASE("weight values and ratios") {
    CHECK(weight(1) == 1.0);
    CHECK(weight(2) == 0.25);
    CHECK(weight(3) == 1.0 / 27.0);
    CHECK(weight(13) == 1.0 / 302875106592253.0);
    CHECK(weight(20) == doctest::Approx(std::exp(-20.0 * std::log(20.0))).epsilon(1e-12));
    CHECK(weight(200) == 0.0); // honest underflow; log_weight still works
    CHECK(log_weight(200) == doctest::Approx(-200.0 * std::log(200.0)).epsilon(1e-14));
    CHECK_THROWS_AS(weight(0), ValidationError);

    CHECK(weight_ratio(1) == 0.25);
    CHECK(weight_ratio(2) == 4.0 / 27.0);
    CHECK(weight_ratio(3) == 27.0 / 256.0);

    // strictly decreasing, and dominated by 1/(k+1)
    for (long long k = 1; k < 64; ++k) {
        CHECK(log_weight_ratio(k + 1) < log_weight_ratio(k));
        CHECK(weight_ratio(k) < 1.0 / static_cast<double>(k + 1));
    }

    // submultiplicative: w(i+j) <= w(i) w(j)
    for (long long i = 1; i <= 12; ++i)
        for (long long j = 1; j <= 12; ++j)
            CHECK(log_weight(i + j) <= log_weight(i) + log_weight(j) + 1e-12);

    CHECK(weight_root(6, 3) == 1.0 / 36.0);
    CHECK(weight_root(12, 4) == 1.0 / 1728.0);
    CHECK(weight_root(9, 9) == 1.0 / 9.0);
    CHECK(weight_root(5, 2) == doctest::Approx(std::exp(-2.5 * std::log(5.0))).epsilon(1e-13));
}

TEST_CASE("net certificate: boundary, replay table, a-priori bound") {
    NetCertificate c = epsilon_net_certificate(0.5);
    CHECK(c.threshold == 0.25);
    CHECK(c.cutoff == 2);
    CHECK(c.ratios_from == 1);
    REQUIRE(c.ratios.size() == 2);
    CHECK(c.ratios[0] == 0.25);
    CHECK(c.ratios[1] == 4.0 / 27.0);
    // replay: the ratio right below the cutoff still fails, the cutoff passes
    CHECK(c.ratios.back() < c.threshold);
    CHECK(c.ratios[c.ratios.size() - 2] >= c.threshold);
    for (size_t i = 0; i < c.ratios.size(); ++i)
        CHECK(c.ratios[i] == weight_ratio(c.ratios_from + static_cast<long long>(i)));

    NetCertificate wide = epsilon_net_certificate(2.0);
    CHECK(wide.cutoff == 1);
    CHECK(wide.dominating_bound == 1);

    NetCertificate fine = epsilon_net_certificate(1e-3);
    CHECK(fine.dominating_bound == 2000);
    CHECK(fine.cutoff <= fine.dominating_bound);
    CHECK(weight_ratio(fine.cutoff) < fine.threshold);
    CHECK(weight_ratio(fine.cutoff - 1) >= fine.threshold);

    CHECK_THROWS_AS(epsilon_net_certificate(0.0), ValidationError);
    CHECK_THROWS_AS(epsilon_net_certificate(-1.0), ValidationError);
}

TEST_CASE("element construction, arithmetic, norms") {
    WeightedElement v({{3, 2.0}, {1, 1.0}, {3, -2.0}});
    REQUIRE(v.support_size() == 1); // e3 terms cancel exactly
    CHECK(v.lowest().index == 1);

    CHECK_THROWS_AS(WeightedElement({{0, 1.0}}), ValidationError);

    WeightedElement zero;
    CHECK(zero.is_zero());
    CHECK(elem_norm(zero) == 0.0);
    CHECK(std::isinf(elem_log_norm(zero)));

    CHECK(elem_norm(WeightedElement::basis(3)) == 1.0 / 27.0);
    WeightedElement w({{1, 2.0}, {2, -1.0}});
    CHECK(elem_norm(w) == 2.25);
    CHECK(elem_log_norm(w) == doctest::Approx(std::log(2.25)).epsilon(1e-14));

    // (e1 + e2)^2 = e2 + 2 e3 + e4, exactly
    WeightedElement g = add(WeightedElement::basis(1), WeightedElement::basis(2));
    WeightedElement g2 = convolve(g, g);
    REQUIRE(g2.terms().size() == 3);
    CHECK(g2.terms()[0] == Term{2, 1.0});
    CHECK(g2.terms()[1] == Term{3, 2.0});
    CHECK(g2.terms()[2] == Term{4, 1.0});

    CHECK_THROWS_AS(convolve(g2, g2, 3), BudgetError);

    // norm is submultiplicative under convolution
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> idx(1, 8);
    std::uniform_real_distribution<double> cf(-2.0, 2.0);
    for (int trial = 0; trial < 40; ++trial) {
        WeightedElement a({{idx(rng), cf(rng)}, {idx(rng), cf(rng)}});
        WeightedElement b({{idx(rng), cf(rng)}, {idx(rng), cf(rng)}});
        CHECK(elem_norm(convolve(a, b)) <= elem_norm(a) * elem_norm(b) * (1.0 + 1e-12));
    }
}

TEST_CASE("quasinilpotence profile of the generator is exactly harmonic") {
    auto p = quasinilpotence_profile(WeightedElement::basis(1), 12);
    REQUIRE(p.size() == 12);
    for (int n = 1; n <= 12; ++n) CHECK(p[static_cast<size_t>(n - 1)] == 1.0 / n);
}

TEST_CASE("quasinilpotence profile: general elements decay") {
    // scaled singleton stays on the closed-form route
    auto q = quasinilpotence_profile(WeightedElement::basis(2, 3.0), 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(q[static_cast<size_t>(n - 1)] ==
              doctest::Approx(3.0 * std::pow(2.0 * n, -2.0)).epsilon(1e-12));

    auto g = add(WeightedElement::basis(1), WeightedElement::basis(2));
    auto p = quasinilpotence_profile(g, 12);
    CHECK(p.front() == 1.25);
    CHECK(p.back() < 0.1);

    std::mt19937 rng(987);
    std::uniform_int_distribution<int> idx(1, 6);
    std::uniform_real_distribution<double> cf(0.5, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        WeightedElement v({{idx(rng), cf(rng)}, {idx(rng), cf(rng)}, {idx(rng), cf(rng)}});
        auto prof = quasinilpotence_profile(v, 8);
        for (double x : prof) CHECK(x <= prof.front() * (1.0 + 1e-12));
    }

    auto z = quasinilpotence_profile(WeightedElement{}, 4);
    for (double x : z) CHECK(x == 0.0);
}

TEST_CASE("no nonzero nilpotents: lowest coefficients multiply out exactly") {
    WeightedElement v({{2, 3.0}, {3, 1.0}});
    NilpotentFreeReport r = nilpotent_free_check(v, 3);
    CHECK(r.ok);
    CHECK(r.lowest_index == 6);
    CHECK(r.lowest_coeff == 27.0);

    std::mt19937 rng(5656);
    std::uniform_int_distribution<int> idx(1, 9);
    std::uniform_int_distribution<int> sup(1, 3);
    std::uniform_int_distribution<int> pw(1, 5);
    std::uniform_real_distribution<double> cf(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Term> terms;
        const int s = sup(rng);
        for (int i = 0; i < s; ++i) {
            double c = cf(rng);
            if (c == 0.0) c = 1.0;
            terms.push_back({idx(rng), c});
        }
        WeightedElement v2(std::move(terms));
        if (v2.is_zero()) continue;
        const int m = pw(rng);
        NilpotentFreeReport rr = nilpotent_free_check(v2, m);
        REQUIRE(rr.ok);
        REQUIRE(rr.lowest_index == m * v2.lowest().index);
    }

    CHECK_THROWS_AS(nilpotent_free_check(WeightedElement{}, 2), ValidationError);
}

TEST_CASE("element grammar") {
    WeightedElement v = parse_element("2*e3 + 0.5e7 - e2");
    REQUIRE(v.terms().size() == 3);
    CHECK(v.terms()[0] == Term{2, -1.0});
    CHECK(v.terms()[1] == Term{3, 2.0});
    CHECK(v.terms()[2] == Term{7, 0.5});

    CHECK(parse_element("e1+e1") == WeightedElement::basis(1, 2.0));
    CHECK(parse_element("-1.5 e4") == WeightedElement::basis(4, -1.5));
    CHECK(parse_element("e2 - e2").is_zero());

    auto where_of = [](const std::string& text) {
        try {
            parse_element(text);
        } catch (const ParseError& e) {
            return e.where;
        }
        return std::string("(no error)");
    };
    CHECK(where_of("") == "char 0");
    CHECK(where_of("e0") == "char 1");
    CHECK(where_of("2*") == "char 2");
    CHECK(where_of("e3 e4") == "char 3");
    CHECK(where_of("3x") == "char 1");
    CHECK(where_of("+e1") == "char 0");

    // display round trips, including coefficients that would print scientific
    std::mt19937 rng(31415);
    std::uniform_int_distribution<int> idx(1, 30);
    std::uniform_real_distribution<double> cf(-4.0, 4.0);
    for (int trial = 0; trial < 30; ++trial) {
        WeightedElement a({{idx(rng), cf(rng)}, {idx(rng), cf(rng)}});
        CHECK(parse_element(element_to_string(a)) == a);
    }
    WeightedElement tiny({{2, 1e-6}, {5, -2.5e20}});
    CHECK(parse_element(element_to_string(tiny)) == tiny);
}
