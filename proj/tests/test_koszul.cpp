#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lkd/koszul.hpp"
#include "lkd/suites.hpp"

using namespace lkd;

namespace {

DualityContext point_ctx(Window w) {
    // n = 1, F1 = F2 = 0
    SubspacePair pair;
    pair.ambient_dim = 1;
    return DualityContext(pair, w);
}

}  // namespace

TEST_CASE("presentations attached to a subspace pair") {
    {
        DualityContext ctx = point_ctx(Window::all());
        REQUIRE(ctx.T()->ext_gens().size() == 1);  // F1^perp = E^dual
        CHECK(ctx.T()->sym_gens().empty());        // F2 = 0
        CHECK(ctx.T()->ext_gens()[0].deg == Bidegree{-1, 2});
        REQUIRE(ctx.R()->sym_gens().size() == 1);  // E/F1 = E
        CHECK(ctx.R()->ext_gens().empty());
        CHECK(ctx.R()->sym_gens()[0].deg == Bidegree{0, -2});
        CHECK(ctx.S()->sym_gens()[0].deg == Bidegree{2, -2});
    }
    {
        // n = 1, F1 = 0, F2 = V: the pairing is the identity
        SubspacePair pair;
        pair.ambient_dim = 1;
        pair.f2_basis = {{Rat(1)}};
        DualityContext ctx(pair, Window::all());
        REQUIRE(ctx.T()->ext_gens().size() == 1);
        REQUIRE(ctx.T()->sym_gens().size() == 1);
        CHECK(ctx.T()->sym_gens()[0].deg == Bidegree{0, 2});
        CHECK(ctx.pairing()(0, 0) == Rat(1));
        CHECK(ctx.T()->diff_on_ext()(0, 0) == Rat(1));
        // R differential is minus the pairing
        CHECK(ctx.R()->diff_on_ext()(0, 0) == Rat(-1));
        CHECK(ctx.S()->ext_gens()[0].deg == Bidegree{1, -2});
    }
    {
        // n = 2, F1 = F2 = span(e1): xi spans F1^perp, so it kills F2
        SubspacePair pair;
        pair.ambient_dim = 2;
        pair.f1_basis = {{Rat(1), Rat(0)}};
        pair.f2_basis = {{Rat(1), Rat(0)}};
        DualityContext ctx(pair, Window::all());
        REQUIRE(ctx.xi_basis().size() == 1);
        CHECK(ctx.pairing()(0, 0) == Rat(0));
        CHECK(ctx.T()->diff_on_ext()(0, 0) == Rat(0));
        CHECK(ctx.R()->diff_on_ext()(0, 0) == Rat(0));
    }
}

TEST_CASE("graded dual") {
    DualityContext ctx = point_ctx({-8, 8});
    DgModule s = skyscraper(ctx.T(), {2, 4});
    DgModule d = dualize(ctx, s);
    CHECK(d.dim({-2, -4}) == 1);
    CHECK(d.components().size() == 1);
    CHECK(!d.validate());

    Rng rng(21);
    DgModule m = random_t_module(rng, ctx);
    DgModule dd = dualize(ctx, dualize(ctx, m));
    CHECK(dd.components() == m.components());
    CHECK(dd.cohomology() == m.cohomology());
    CHECK(!dd.validate());
}

TEST_CASE("transform of a point") {
    DualityContext ctx = point_ctx({-8, 0});
    DgModule m = skyscraper(ctx.T(), {0, 0});
    DgModule t = koszul_transform(ctx, dualize(ctx, m), -8);
    CHECK(!t.validate());
    // free polynomial tail: one class y^k at (2k, -2k)
    BigradedDims expect;
    for (int k = 0; 2 * k <= 8; ++k) expect[{2 * k, -2 * k}] = 1;
    CHECK(dims_equal_within(t.cohomology(), expect, t.window()));

    DgModule k = kappa(ctx, m);
    BigradedDims expect_k;
    for (int j = 0; 2 * j <= 8; ++j) expect_k[{0, -2 * j}] = 1;
    CHECK(dims_equal_within(k.cohomology(), expect_k, k.window()));
}

TEST_CASE("transform of the free exterior module is a point") {
    DualityContext ctx = point_ctx({-8, 8});
    // free Lambda(xi): Q at (0,0) and (-1,2), xi acting by 1, d = 0
    DgModule m(ctx.T());
    m.set_component({0, 0}, 1);
    m.set_component({-1, 2}, 1);
    m.set_action(0, {0, 0}, Mat::identity(1));
    REQUIRE(!m.validate());
    DgModule k = kappa(ctx, m);
    CHECK(!k.validate());
    int total = 0;
    for (const auto& [bd, dim] : k.cohomology())
        if (dim != 0 && k.window().contains(bd.i)) {
            ++total;
            CHECK(dim == 1);
        }
    CHECK(total == 1);
}

TEST_CASE("regrade") {
    DualityContext ctx = point_ctx({-6, 6});
    DgModule s(ctx.S());
    s.set_component({1, -2}, 2);
    s.set_component({0, 0}, 1);
    DgModule r = regrade(ctx, s);
    CHECK(r.dim({-1, -2}) == 2);  // (1,-2) -> (1 + -2, -2)
    CHECK(r.dim({0, 0}) == 1);
    CHECK(r.components().size() == 2);
}

TEST_CASE("additivity of the duality functor") {
    SubspacePair pair;
    pair.ambient_dim = 2;
    pair.f1_basis = {{Rat(1), Rat(1)}};
    pair.f2_basis = {{Rat(0), Rat(1)}};
    DualityContext ctx(pair, {-6, 6});
    Rng rng(4);
    DgModule a = random_t_module(rng, ctx);
    DgModule b = skyscraper(ctx.T(), {1, 2});
    DgModule ks = kappa(ctx, direct_sum(a, b));
    DgModule ka = kappa(ctx, a);
    BigradedDims expect = ka.cohomology();
    for (const auto& [bd, d] : kappa(ctx, b).cohomology()) expect[bd] += d;
    CHECK(dims_equal_within(ks.cohomology(), expect, ks.window().intersect(ka.window())));
}

TEST_CASE("double duality on a small module") {
    SubspacePair pair;
    pair.ambient_dim = 1;
    pair.f2_basis = {{Rat(1)}};
    DualityContext ctx(pair, {-6, 6});
    DgModule m = skyscraper(ctx.T(), {0, 0});
    DgModule k = kappa(ctx, m);
    CHECK(!k.validate());
    DualityContext ctxd = ctx.dual();
    DgModule back = as_dual_input(ctxd.dual(), kappa(ctxd, as_dual_input(ctxd, k)));
    CHECK(!back.validate());
    Window cmp = back.window().intersect(m.window());
    CHECK(dims_equal_within(back.cohomology(), m.cohomology(), cmp));
}

TEST_CASE("sign perturbation breaks the transform") {
    SubspacePair pair;
    pair.ambient_dim = 1;
    pair.f2_basis = {{Rat(1)}};
    DualityContext ctx(pair, {-4, 4});
    // free rank-one module over T = Lambda(xi) (x) Sym(u), truncated:
    // the polynomial action is nonzero, so the twist terms interact
    DgModule probe(ctx.T());
    const int jmax = 4;
    Mat one = Mat::identity(1);
    for (int t = 0; 2 * t <= jmax; ++t) probe.set_component({0, 2 * t}, 1);
    for (int t = 0; 2 * t + 2 <= jmax; ++t) probe.set_component({-1, 2 * t + 2}, 1);
    for (int t = 0; 2 * t + 2 <= jmax; ++t) {
        probe.set_diff({-1, 2 * t + 2}, one);
        probe.set_action(0, {0, 2 * t}, one);
        probe.set_action(1, {0, 2 * t}, one);
        if (2 * t + 4 <= jmax) probe.set_action(1, {-1, 2 * t + 2}, one);
    }
    probe.set_window({Window::kNegInf, jmax + 1});
    REQUIRE(!probe.validate());
    CHECK(!koszul_transform(ctx, probe, -4, false).validate());
    CHECK(koszul_transform(ctx, probe, -4, true).validate().has_value());
}
