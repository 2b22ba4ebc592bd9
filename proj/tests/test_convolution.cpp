#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lkd/convolution.hpp"
#include "lkd/suites.hpp"

using namespace lkd;

TEST_CASE("the unit object") {
    ConvolutionContext zero(1, {}, {-6, 6});
    DgModule u0 = unit(zero);
    CHECK(!u0.validate());
    CHECK(u0.components().size() == 1);
    CHECK(u0.dim({0, 0}) == 1);
    CHECK(u0.euler_class() == LaurentPoly::one());

    ConvolutionContext full(1, {{Rat(1)}}, {-6, 6});
    DgModule uf = unit(full);
    CHECK(!uf.validate());
    // Sym(F^dual) in degrees (0, 2t), both polynomial copies acting alike
    for (int t = 0; 2 * t <= 6; ++t) {
        CHECK(uf.dim({0, 2 * t}) == 1);
        CHECK(uf.diff({0, 2 * t}).rows() == 0);
        CHECK(uf.action(1, {0, 2 * t}) == uf.action(2, {0, 2 * t}));
    }
    CHECK(uf.dim({-1, 2}) == 0);
}

TEST_CASE("convolution of skyscrapers over a point") {
    ConvolutionContext ctx(1, {}, {-6, 6});
    DgModule a = skyscraper(ctx.A(), {0, 0});
    DgModule c = convolve(ctx, a, a);
    CHECK(!c.validate());
    BigradedDims expect{{{0, 0}, 1}};
    CHECK(dims_equal_within(c.cohomology(), expect, c.window()));
}

TEST_CASE("unit laws on cohomology") {
    for (int f = 0; f <= 1; ++f) {
        ConvolutionContext ctx(1, f ? std::vector<Vec>{{Rat(1)}} : std::vector<Vec>{}, {-6, 6});
        DgModule u = unit(ctx);
        DgModule uu = convolve(ctx, u, u);
        CHECK(!uu.validate());
        CHECK(dims_equal_within(uu.cohomology(), u.cohomology(),
                                uu.window().intersect(u.window())));
        Rng rng(7);
        DgModule a = random_conv_module(rng, ctx, false);
        DgModule ua = convolve(ctx, u, a);
        DgModule au = convolve(ctx, a, u);
        CHECK(dims_equal_within(ua.cohomology(), a.cohomology(),
                                ua.window().intersect(a.window())));
        CHECK(dims_equal_within(au.cohomology(), a.cohomology(),
                                au.window().intersect(a.window())));
    }
}

TEST_CASE("duality swaps the units of a subspace and its annihilator") {
    for (int f = 0; f <= 1; ++f) {
        ConvolutionContext ctx(1, f ? std::vector<Vec>{{Rat(1)}} : std::vector<Vec>{}, {-6, 6});
        ConvolutionContext ctxd = ctx.dual();
        CHECK(ctxd.f_dim() == 1 - f);
        DgModule ku = frak_K(ctx, ctxd, unit(ctx));
        CHECK(!ku.validate());
        DgModule ud = unit(ctxd);
        CHECK(dims_equal_within(ku.cohomology(), ud.cohomology(),
                                ku.window().intersect(ud.window())));
    }
}

TEST_CASE("duality applied to a point over the zero subspace") {
    ConvolutionContext ctx(1, {}, {-6, 6});
    DgModule k = frak_K(ctx, ctx.dual(), skyscraper(ctx.A(), {0, 0}));
    CHECK(!k.validate());
    BigradedDims expect;
    for (int t = 0; 2 * t <= 6; ++t) expect[{0, 2 * t}] = 1;
    Window cmp = k.window().intersect({0, 6});
    CHECK(dims_equal_within(k.cohomology(), expect, cmp));
}

TEST_CASE("character twists") {
    ConvolutionContext ctx(1, {{Rat(1)}}, {-6, 6});
    Rng rng(3);
    DgModule a = random_conv_module(rng, ctx, false);
    DgModule t1 = twist_by_character(twist_by_character(a, 2), 4);
    DgModule t2 = twist_by_character(a, 6);
    CHECK(t1.to_json() == t2.to_json());
    CHECK(twist_by_character(a, 0).to_json() == a.to_json());
    // a twist is an internal shift
    CHECK(twist_by_character(a, 2).cohomology() == a.shift(0, 2).cohomology());

    // duality turns the twist into a combined shift
    ConvolutionContext ctxd = ctx.dual();
    DgModule lhs = frak_K(ctx, ctxd, twist_by_character(a, 2));
    DgModule rhs = frak_K(ctx, ctxd, a).shift(2, 2);
    CHECK(dims_equal_within(lhs.cohomology(), rhs.cohomology(),
                            lhs.window().intersect(rhs.window())));
}

TEST_CASE("associativity on cohomology in two variables") {
    ConvolutionContext ctx(2, {{Rat(1), Rat(0)}}, {-4, 4});
    Rng rng(11);
    DgModule a = random_conv_module(rng, ctx, true);
    DgModule b = random_conv_module(rng, ctx, true);
    DgModule c = random_conv_module(rng, ctx, true);
    DgModule lhs = convolve(ctx, convolve(ctx, a, b), c);
    DgModule rhs = convolve(ctx, a, convolve(ctx, b, c));
    CHECK(!lhs.validate());
    CHECK(!rhs.validate());
    CHECK(dims_equal_within(lhs.cohomology(), rhs.cohomology(),
                            lhs.window().intersect(rhs.window())));
}
