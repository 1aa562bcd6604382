#include <doctest.h>

#include "jsrlab/errors.hpp"
#include "jsrlab/radcal/expr.hpp"

#include <random>

using namespace jsrlab;
using namespace jsrlab::radcal;

TEST_CASE("atoms and basic nodes") {
    auto rad = make_atom("Rad");
    CHECK(rad->kind == NodeKind::Atom);
    CHECK(rad->atom == "Rad");
    CHECK_THROWS_AS(make_atom("Bogus"), ValidationError);
    CHECK(atom_names().size() == 10);

    auto conv = make_node(NodeKind::Conv, {rad, make_atom("Rcq")});
    CHECK(conv->args.size() == 2);
    CHECK_THROWS_AS(make_node(NodeKind::Conv, {rad}), ValidationError);
    CHECK_THROWS_AS(make_node(NodeKind::Cent, {rad, rad}), ValidationError);
}

TEST_CASE("structural order and equality") {
    auto a = parse_expr("Rad * Rcq");
    auto b = parse_expr("Rad * Rcq");
    auto c = parse_expr("Rcq * Rad");
    CHECK(expr_equal(a, b));
    CHECK_FALSE(expr_equal(a, c));
    CHECK(expr_cmp(a, c) != 0);
    CHECK(expr_cmp(a, c) == -expr_cmp(c, a));
    // atoms sort before compound nodes
    CHECK(expr_cmp(make_atom("Sb"), a) < 0);
}

TEST_CASE("precedence: chains bind tighter than lattice ops") {
    auto e = parse_expr("Rad * Rcq v Rhc");
    REQUIRE(e->kind == NodeKind::Join);
    CHECK(e->args[0]->kind == NodeKind::Conv);
    CHECK(e->args[1]->atom == "Rhc");

    auto m = parse_expr("Rhc ^ Rad o Rsc");
    REQUIRE(m->kind == NodeKind::Meet);
    CHECK(m->args[0]->atom == "Rhc");
    CHECK(m->args[1]->kind == NodeKind::Comp);
}

TEST_CASE("lattice runs collect n-ary, mixing stays left associative") {
    auto j = parse_expr("Rad v Rhc v Rcq");
    REQUIRE(j->kind == NodeKind::Join);
    CHECK(j->args.size() == 3);

    auto mixed = parse_expr("Rad v Rhc ^ Rcq");
    REQUIRE(mixed->kind == NodeKind::Meet);
    REQUIRE(mixed->args.size() == 2);
    CHECK(mixed->args[0]->kind == NodeKind::Join);
}

TEST_CASE("postfix lexing: immediate suffix vs meet operator") {
    auto cent = parse_expr("Rcq^a");
    CHECK(cent->kind == NodeKind::Cent);

    auto chain = parse_expr("Rsbw^a^*");
    REQUIRE(chain->kind == NodeKind::StarClose);
    CHECK(chain->args[0]->kind == NodeKind::Cent);

    auto circ = parse_expr("Rbw^o");
    CHECK(circ->kind == NodeKind::CircClose);

    auto meet = parse_expr("Rbw ^ Rsc");
    CHECK(meet->kind == NodeKind::Meet);
    // no space but a full name after '^' still means meet
    auto meet2 = parse_expr("Rbw^Rsc");
    CHECK(meet2->kind == NodeKind::Meet);
}

TEST_CASE("parenthesised grouping and families") {
    auto e = parse_expr("(Rad v Rhc)^*");
    REQUIRE(e->kind == NodeKind::StarClose);
    CHECK(e->args[0]->kind == NodeKind::Join);

    auto h = parse_expr("H{Rad, Rhc v Rcq, Sb}");
    REQUIRE(h->kind == NodeKind::FamilyH);
    CHECK(h->args.size() == 3);
    CHECK(h->args[1]->kind == NodeKind::Join);

    auto b = parse_expr("B{Rad}");
    REQUIRE(b->kind == NodeKind::FamilyB);
    CHECK(b->args.size() == 1);
}

TEST_CASE("parse errors carry char positions") {
    auto where_of = [](const std::string& text) {
        try {
            parse_expr(text);
        } catch (const ParseError& e) {
            return std::string(e.where);
        }
        return std::string("no error");
    };
    CHECK(where_of("Rad &") == "char 5");
    CHECK(where_of("Frob") == "char 1");
    CHECK(where_of("Rad * ") == "char 7");
    CHECK(where_of("(Rad v Rhc") == "char 11");
    CHECK(where_of("H{Rad") == "char 6");
    CHECK(where_of("Rad Rhc") == "char 5"); // trailing input
    CHECK(where_of("Rad ^ o Rhc") == "char 7");
}

TEST_CASE("printer emits re-parseable text") {
    const char* samples[] = {
        "Rad",
        "Rad * Rcq",
        "Rad * (Rcq * Rhc)",
        "(Rad * Rcq) * Rhc",
        "Rad v Rhc v Rcq",
        "(Rad v Rhc) ^ Rcq",
        "Rcq^a",
        "(Rsbw^a)^*",
        "(Rad v Rhc)^o",
        "H{Rad, Rhc ^ Rcq}",
        "B{Sa, Sb}",
        "Rbw o Rsc v Rad * Rcq",
    };
    for (const char* s : samples) {
        auto e = parse_expr(s);
        auto round = parse_expr(to_string(e));
        CHECK_MESSAGE(expr_equal(e, round), "sample: ", s, " printed: ", to_string(e));
    }
}

namespace {

ExprPtr random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> atom_pick(0, 9);
    if (depth <= 0 || std::uniform_int_distribution<int>(0, 3)(rng) == 0)
        return make_atom(atom_names()[static_cast<std::size_t>(atom_pick(rng))]);
    switch (std::uniform_int_distribution<int>(0, 8)(rng)) {
    case 0: return make_node(NodeKind::Conv, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 1: return make_node(NodeKind::Comp, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 2: return make_node(NodeKind::Join, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 3: return make_node(NodeKind::Meet, {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    case 4: return make_node(NodeKind::Cent, {random_expr(rng, depth - 1)});
    case 5: return make_node(NodeKind::StarClose, {random_expr(rng, depth - 1)});
    case 6: return make_node(NodeKind::CircClose, {random_expr(rng, depth - 1)});
    case 7:
        return make_node(NodeKind::FamilyH,
                         {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    default:
        return make_node(NodeKind::FamilyB,
                         {random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
    }
}

} // namespace

TEST_CASE("random print/parse round trips") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        auto e = random_expr(rng, 5);
        auto round = parse_expr(to_string(e));
        CHECK_MESSAGE(expr_equal(e, round), "printed: ", to_string(e));
    }
}
