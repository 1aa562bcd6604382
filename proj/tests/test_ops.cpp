#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "jsrlab/errors.hpp"
#include "jsrlab/ops/banded.hpp"
#include "jsrlab/ops/radii.hpp"
#include "jsrlab/ops/tail_seq.hpp"

using namespace jsrlab;
using namespace jsrlab::ops;

namespace {

// dyadic entries keep every sum in the tests exact, so == is legitimate
double dyadic(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-8, 8);
    return d(rng) / 16.0;
}

BandedOperator random_operator(std::mt19937& rng) {
    std::uniform_int_distribution<int> noff(1, 2);
    std::uniform_int_distribution<int> off(-2, 2);
    std::uniform_int_distribution<int> plen(0, 2);
    std::uniform_int_distribution<int> clen(1, 3);
    std::uniform_int_distribution<int> nsz(0, 3);
    std::vector<Diagonal> diags;
    const int nd = noff(rng);
    for (int d = 0; d < nd; ++d) {
        std::vector<double> prefix(static_cast<size_t>(plen(rng)));
        for (double& v : prefix) v = dyadic(rng);
        std::vector<double> cycle(static_cast<size_t>(clen(rng)));
        for (double& v : cycle) v = dyadic(rng);
        diags.push_back({off(rng), TailSeq(std::move(prefix), std::move(cycle))});
    }
    const int n = nsz(rng);
    std::vector<std::vector<double>> corr(static_cast<size_t>(n),
                                          std::vector<double>(static_cast<size_t>(n)));
    for (auto& row : corr)
        for (double& v : row) v = dyadic(rng);
    return BandedOperator(std::move(diags), std::move(corr));
}

double colsum_trunc(const BandedOperator& t, long long j, long long rows) {
    double s = 0.0;
    for (long long i = 0; i < rows; ++i) s += std::abs(t.entry(i, j));
    return s;
}

} // namespace

TEST_CASE("tail sequences: sampling, masks, normal form") {
    TailSeq s({1.0, 2.0}, {3.0, 4.0});
    CHECK(s.at(-3) == 0.0);
    CHECK(s.at(0) == 1.0);
    CHECK(s.at(2) == 3.0);
    CHECK(s.at(5) == 4.0);

    TailSeq sh = s.shifted(2);
    for (long long j = 0; j < 12; ++j) CHECK(sh.at(j) == s.at(j + 2));
    TailSeq back = s.shifted(-3);
    for (long long j = 0; j < 12; ++j) CHECK(back.at(j) == s.at(j - 3));

    TailSeq m = s.masked_before(3);
    CHECK(m.at(2) == 0.0);
    CHECK(m.at(3) == s.at(3));

    // minimal period + prefix folding
    TailSeq red = TailSeq({5.0, 7.0}, {7.0, 7.0, 7.0, 7.0}).normalized();
    CHECK(red.prefix_len() == 1);
    CHECK(red.cycle_len() == 1);
    CHECK(red.at(0) == 5.0);
    CHECK(red.at(1) == 7.0);

    TailSeq rot = TailSeq({1.0, 2.0}, {3.0, 2.0}).normalized();
    for (long long j = 0; j < 10; ++j) CHECK(rot.at(j) == TailSeq({1.0, 2.0}, {3.0, 2.0}).at(j));
    CHECK(rot.prefix_len() == 1);

    CHECK_THROWS_AS(lcm_checked(1029, 512, 4096), BudgetError);
    CHECK(lcm_checked(6, 4) == 12);
}

TEST_CASE("banded operator: entries, truncation, canonical form") {
    BandedOperator t({{1, TailSeq({}, {0.5})}}, {{2.0}});
    CHECK(t.bandwidth() == 1);
    CHECK(t.correction_size() == 1);
    CHECK(t.entry(0, 0) == 2.0);
    CHECK(t.entry(1, 0) == 0.5);
    CHECK(t.entry(5, 4) == 0.5);
    CHECK(t.entry(0, 1) == 0.0);

    Matrix m = t.truncate(3);
    CHECK(m(0, 0) == 2.0);
    CHECK(m(1, 0) == 0.5);
    CHECK(m(2, 1) == 0.5);
    CHECK(m(2, 2) == 0.0);

    // same-offset diagonals merge; zero diagonals and zero corrections drop
    BandedOperator merged({{0, TailSeq({}, {1.0})}, {0, TailSeq({}, {-1.0})}},
                          {{0.0, 0.0}, {0.0, 0.0}});
    CHECK(merged.diagonals().empty());
    CHECK(merged.correction_size() == 0);
    CHECK(merged.bandwidth() == 0);

    CHECK_THROWS_AS(BandedOperator({}, {{1.0, 2.0}}), ValidationError);
}

TEST_CASE("composition: shift identities") {
    BandedOperator down({{1, TailSeq({}, {1.0})}}, {});
    BandedOperator up({{-1, TailSeq({}, {1.0})}}, {});

    // up after down is the identity
    BandedOperator id = compose(up, down);
    REQUIRE(id.diagonals().size() == 1);
    CHECK(id.diagonals()[0].offset == 0);
    for (long long j = 0; j < 8; ++j) CHECK(id.entry(j, j) == 1.0);
    CHECK(id.correction_size() == 0);

    // down after up kills the first coordinate
    BandedOperator proj = compose(down, up);
    CHECK(proj.entry(0, 0) == 0.0);
    for (long long j = 1; j < 8; ++j) CHECK(proj.entry(j, j) == 1.0);
}

TEST_CASE("composition agrees with the dense entry oracle") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 30; ++trial) {
        BandedOperator a = random_operator(rng);
        BandedOperator b = random_operator(rng);
        BandedOperator ab = compose(a, b);
        const long long kmax = 64;
        for (long long i = 0; i < 24; ++i) {
            for (long long j = 0; j < 24; ++j) {
                double want = 0.0;
                for (long long k = 0; k < kmax; ++k) want += a.entry(i, k) * b.entry(k, j);
                REQUIRE(ab.entry(i, j) == want);
            }
        }
    }
}

TEST_CASE("composition matches truncated matrix products on the interior") {
    std::mt19937 rng(777);
    const int d = 48;
    for (int trial = 0; trial < 20; ++trial) {
        BandedOperator a = random_operator(rng);
        BandedOperator b = random_operator(rng);
        Matrix dense = a.truncate(d) * b.truncate(d);
        BandedOperator ab = compose(a, b);
        const int interior = d - a.bandwidth() - b.bandwidth();
        for (int i = 0; i < interior; ++i)
            for (int j = 0; j < interior; ++j) REQUIRE(ab.entry(i, j) == dense(i, j));
    }
}

TEST_CASE("norms against the brute-force cutoff oracle") {
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 40; ++trial) {
        BandedOperator t = random_operator(rng);
        const long long D = 160; // far beyond prefixes, corrections and cycles
        const long long rows = D + t.bandwidth() + 1;
        const long long J = D - t.bandwidth();

        double op_oracle = 0.0;
        std::vector<double> cs(static_cast<size_t>(J));
        for (long long j = 0; j < J; ++j) {
            cs[static_cast<size_t>(j)] = colsum_trunc(t, j, rows);
            op_oracle = std::max(op_oracle, cs[static_cast<size_t>(j)]);
        }
        REQUIRE(op_norm(t) == op_oracle);

        // essential part: suffix sup far beyond every transient
        double ess_oracle = 0.0;
        for (long long j = J / 2; j < J; ++j)
            ess_oracle = std::max(ess_oracle, cs[static_cast<size_t>(j)]);
        REQUIRE(essential_norm(t) == ess_oracle);

        // finite-rank distance: inf over cutoffs of the suffix sup
        double f_oracle = ess_oracle;
        double suffix = ess_oracle;
        for (long long n = J / 2 - 1; n >= 0; --n) {
            suffix = std::max(suffix, cs[static_cast<size_t>(n)]);
            f_oracle = std::min(f_oracle, suffix);
        }
        REQUIRE(f_norm(t) == f_oracle);

        // the noncompactness measure rides the same tail
        REQUIRE(chi_norm(t) == ess_oracle);
    }
}

TEST_CASE("frozen tail norms") {
    BandedOperator ones({{0, TailSeq({}, {1.0})}}, {});
    CHECK(chi_norm(ones) == 1.0);
    CHECK(essential_norm(ones) == 1.0);
    CHECK(op_norm(ones) == 1.0);

    BandedOperator half_shift({{1, TailSeq({}, {0.5})}}, {});
    CHECK(chi_norm(half_shift) == 0.5);
    CHECK(f_norm(half_shift) == 0.5);

    // transient-only parts are invisible to the tail measures
    BandedOperator transient({{0, TailSeq({1.0, 2.0, 3.0}, {0.0})}}, {{4.0}});
    CHECK(chi_norm(transient) == 0.0);
    CHECK(essential_norm(transient) == 0.0);
    CHECK(f_norm(transient) == 0.0);
    CHECK(op_norm(transient) == 5.0); // column 0 sees the correction too
}

TEST_CASE("noncompactness measure is submultiplicative against the operator norm") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        BandedOperator a = random_operator(rng);
        BandedOperator b = random_operator(rng);
        ChiSubmultReport r = chi_submult_check(a, b);
        REQUIRE(r.ok);
        REQUIRE(r.chi_ab <= r.chi_a_op_b);
        REQUIRE(r.chi_ab <= r.op_a_chi_b);
    }
}

TEST_CASE("radius sequence: dedup, budget, chain equalities") {
    BandedOperator half_shift({{1, TailSeq({}, {0.5})}}, {});
    RadiusOptions ro;
    ro.max_len = 4;
    auto rows = radius_sequence({half_shift, half_shift}, ro);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        CHECK(r.products == 1); // duplicates collapse
        CHECK(r.chi_k == doctest::Approx(0.5).epsilon(1e-12));
    }

    RadiusOptions tiny;
    tiny.max_len = 8;
    tiny.product_budget = 3;
    std::mt19937 rng(31337);
    CHECK_THROWS_AS(radius_sequence({random_operator(rng), random_operator(rng)}, tiny),
                    BudgetError);

    std::mt19937 rng2(90210);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<BandedOperator> members{random_operator(rng2), random_operator(rng2)};
        RadiusOptions opt;
        opt.max_len = 6;
        MainEqualityReport rep = verify_main_equality(members, opt);
        REQUIRE(rep.ok);
        for (const auto& r : rep.rows) {
            REQUIRE(r.chi_k == r.e_k);
            REQUIRE(r.e_k == r.f_k);
            REQUIRE(r.chi_k <= r.op_k);
        }
    }
}

TEST_CASE("generalized formula probe on the shift-plus-source example") {
    BandedOperator t({{1, TailSeq({}, {0.5})}}, {{2.0}});
    GbwfOptions opt;
    opt.trunc_dims = {50, 80};
    GbwfReport rep = verify_gbwf({t}, opt);
    CHECK(rep.chi_est == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rep.r_est == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rep.branch_is_eigen);
    CHECK(rep.stable);
    CHECK(rep.residual <= 1e-2);
    CHECK(rep.ok);

    // compact-free operator: the essential branch carries everything
    BandedOperator plain({{0, TailSeq({}, {0.25})}}, {});
    GbwfOptions po;
    po.trunc_dims = {30, 40};
    GbwfReport prep = verify_gbwf({plain}, po);
    CHECK(prep.chi_est == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(prep.gbwf_max == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(prep.ok);
}

TEST_CASE("operator JSON round trip and schema errors") {
    BandedOperator t({{1, TailSeq({0.25}, {0.5, -0.5})}, {-1, TailSeq({}, {1.0})}},
                     {{2.0, 0.0}, {0.125, -1.0}});
    BandedOperator back = parse_operator(operator_to_json(t));
    REQUIRE(back == t);

    auto where_of = [](const std::string& text) {
        try {
            parse_operator(text);
        } catch (const ParseError& e) {
            return e.where;
        }
        return std::string("(no error)");
    };
    CHECK(where_of(R"({"diagonals": []})") == "$.bandwidth");
    CHECK(where_of(R"({"bandwidth": 0, "diagonals": [{"offset": 2, "cycle": [1]}]})") ==
          "$.diagonals[0].offset");
    CHECK(where_of(R"({"bandwidth": 1, "diagonals": [{"offset": 1}]})") ==
          "$.diagonals[0].cycle");
    CHECK(where_of(R"({"bandwidth": 1, "correction": [[1, 2]]})") == "$.correction[0]");
    CHECK(where_of(R"({"bandwidth": 1, "extra": true})") == "$.extra");
    CHECK(where_of("{oops").rfind("byte", 0) == 0);

    auto set = parse_operator_set(
        R"({"members": [{"bandwidth": 1, "diagonals": [{"offset": 1, "cycle": [0.5]}]},
                        {"bandwidth": 0, "correction": [[1]]}]})");
    REQUIRE(set.size() == 2);
    CHECK(set[0].bandwidth() == 1);
    CHECK(set[1].correction_size() == 1);
}
