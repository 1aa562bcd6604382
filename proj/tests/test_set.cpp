#include <doctest.h>

#include <set>
#include <vector>

#include "jsrlab/errors.hpp"
#include "jsrlab/matset/matrix_set.hpp"

using namespace jsrlab;

TEST_CASE("set_norm is the max over members") {
    MatrixSet m(2, {Matrix(2, {1, 0, 0, 1}), Matrix(2, {0, 3, 0, 0})});
    CHECK(set_norm(m, NormKind::InducedInf) == 3.0);
    CHECK(set_norm(m, NormKind::Induced1) == 3.0);
}

TEST_CASE("set_power dedups commuting products") {
    // {diag(2,1), diag(1,2)} at n=2: products diag(4,1), diag(2,2), diag(1,4).
    MatrixSet m(2, {Matrix(2, {2, 0, 0, 1}), Matrix(2, {1, 0, 0, 2})});
    auto p2 = set_power(m, 2);
    CHECK(p2.size() == 3);
    auto p3 = set_power(m, 3);
    CHECK(p3.size() == 4); // exponent splits (3,0),(2,1),(1,2),(0,3)
}

TEST_CASE("set_power enumerates all words when nothing collides") {
    MatrixSet m(2, {Matrix(2, {1, 1, 0, 1}), Matrix(2, {1, 0, 1, 1})});
    CHECK(set_power(m, 2).size() == 4);
    CHECK(set_power(m, 3).size() == 8);
}

TEST_CASE("set_power respects the product budget") {
    MatrixSet m(2, {Matrix(2, {1, 1, 0, 1}), Matrix(2, {1, 0, 1, 1})});
    SetOptions opt;
    opt.product_budget = 100;
    CHECK_THROWS_AS(set_power(m, 12, opt), BudgetError);
}

TEST_CASE("canonical member order is input-order independent") {
    const Matrix a(2, {1, 1, 0, 1});
    const Matrix b(2, {1, 0, 1, 1});
    MatrixSet m1(2, {a, b});
    MatrixSet m2(2, {b, a, b}); // duplicate collapses too
    REQUIRE(m1.size() == m2.size());
    for (size_t i = 0; i < m1.size(); ++i) CHECK(m1[i] == m2[i]);
}

TEST_CASE("power composition: members of M^(j+k) appear in M^j * M^k") {
    MatrixSet m(2, {Matrix(2, {0, 1, 0, 0}), Matrix(2, {0, 0, 1, 0})});
    auto p3 = set_power(m, 3);
    auto p1 = set_power(m, 1);
    auto p2 = set_power(m, 2);
    for (const auto& c : p3.members()) {
        bool found = false;
        for (const auto& x : p1.members())
            for (const auto& y : p2.members())
                if ((x * y).max_abs_diff(c) <= 1e-12) found = true;
        CHECK(found);
    }
}

TEST_CASE("matrix set json round trip and schema errors") {
    const std::string good = R"({"dim": 2, "members": [[[1, 0], [0, 1]], [[0, 2], [0, 0]]]})";
    auto m = parse_matrix_set(good);
    CHECK(m.dim() == 2);
    CHECK(m.size() == 2);
    auto again = parse_matrix_set(matrix_set_to_json(m));
    REQUIRE(again.size() == m.size());
    for (size_t i = 0; i < m.size(); ++i) CHECK(again[i] == m[i]);

    auto expect_parse_error = [](const std::string& text, const std::string& where_substr) {
        try {
            parse_matrix_set(text);
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.where.find(where_substr) != std::string::npos);
        }
    };
    expect_parse_error(R"({"dim": 2})", "members");
    expect_parse_error(R"({"dim": 2, "members": [[[1, 0], [0, 1]], [[1], [0, 1]]]})",
                       "members[1]");
    expect_parse_error(R"({"dim": 2, "members": [[[1, 0], [0, "x"]]]})", "members[0][1]");
    expect_parse_error(R"({"dim": 2, "members": [[[1, 0], [0, 1]]], "extra": 1})", "extra");
    expect_parse_error("{", "byte");
}

TEST_CASE("near-duplicates dedup at scaled tolerance") {
    const Matrix a(2, {1, 0, 0, 1});
    Matrix b = a;
    b(0, 0) += 1e-15;
    MatrixSet m(2, {a, b});
    CHECK(m.size() == 1);
}
