#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lkd/heckeparse.hpp"
#include "lkd/suites.hpp"

using namespace lkd;

TEST_CASE("expression parsing") {
    const RootDatum& d = RootDatum::from_label("A1");
    ExprPtr e = parse_hecke_expr("theta[1]*T[1]", d);
    REQUIRE(e->kind == ExprNode::Kind::Mul);
    REQUIRE(e->children.size() == 2);
    CHECK(e->children[0]->kind == ExprNode::Kind::Theta);
    CHECK(e->children[0]->coords == std::vector<long long>{1});
    CHECK(e->children[1]->kind == ExprNode::Kind::T);
    CHECK(e->children[1]->indices == std::vector<int>{1});

    ExprPtr a = parse_hecke_expr("IM(T[1])", d);
    REQUIRE(a->kind == ExprNode::Kind::Apply);
    CHECK(a->func == "IM");
    REQUIRE(a->children.size() == 1);
    CHECK(a->children[0]->kind == ExprNode::Kind::T);

    CHECK(parse_hecke_expr("v^-2", d)->kind == ExprNode::Kind::VPow);
    CHECK(parse_hecke_expr("T[1]^-1", d)->kind == ExprNode::Kind::Inv);
}

TEST_CASE("parse errors carry offsets") {
    const RootDatum& d = RootDatum::from_label("A1");
    try {
        parse_hecke_expr("theta[1,", d);
        FAIL("expected a parse error");
    } catch (const HeckeParseError& e) {
        CHECK(e.offset == 8);
        CHECK(std::string(e.what()).find("offset 8") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_hecke_expr("theta[1,2]", d), HeckeParseError);  // wrong arity
    CHECK_THROWS_AS(parse_hecke_expr("T[1] +", d), HeckeParseError);
    CHECK_THROWS_AS(parse_hecke_expr("", d), HeckeParseError);
}

TEST_CASE("evaluation") {
    const RootDatum& d = RootDatum::from_label("A1");
    HeckeAlgebra h(d);
    auto eval = [&](const std::string& s) { return eval_expr(parse_hecke_expr(s, d), h); };

    HeckeElt expect = h.t_generator(1) - (LaurentPoly::v(1) - LaurentPoly::v(-1)) * h.one();
    CHECK(eval("KIM(T[1])") == expect);
    CHECK(eval("T[1]^-1") == expect);
    CHECK(eval("theta[0]") == h.one());
    CHECK(eval("theta[2]") == h.theta({2}));
    CHECK(eval("v*T[1] - v*T[1]") == HeckeElt());
    CHECK(eval("iota(IM(T[1]))") == h.k_im(h.t_generator(1)));
    CHECK_THROWS_AS(eval("(T[1] + 1)^-1"), HeckeEvalError);
}

TEST_CASE("rendering round-trips through the parser") {
    const RootDatum& d = RootDatum::from_label("B2");
    HeckeAlgebra h(d);
    Rng rng(17);
    for (int t = 0; t < 25; ++t) {
        HeckeElt a = random_hecke_elt(rng, h, 2, 3);
        CHECK(eval_expr(parse_hecke_expr(a.to_string(), d), h) == a);
    }
}

TEST_CASE("suite reports are deterministic") {
    HeckeSuiteParams p;
    p.type = "A2";
    p.trials = 5;
    p.seed = 42;
    Report r1 = run_hecke_suite(p);
    Report r2 = run_hecke_suite(p);
    CHECK(r1.to_json() == r2.to_json());
    CHECK(r1.all_pass());
    // every check appears in the serialization
    std::string json = r1.to_json();
    for (const auto& c : r1.checks) CHECK(json.find("\"" + c.name + "\"") != std::string::npos);
}

TEST_CASE("failing specs produce failing reports") {
    HeckeSuiteParams p;
    p.type = "A1";
    p.trials = 2;
    p.spec_override = "T->T+1";
    Report r = run_hecke_suite(p);
    CHECK(!r.all_pass());
    bool witnessed = false;
    for (const auto& c : r.checks)
        if (c.status == "fail" && !c.witness.empty()) witnessed = true;
    CHECK(witnessed);
}
