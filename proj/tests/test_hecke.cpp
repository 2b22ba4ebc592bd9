#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lkd/hecke.hpp"
#include "lkd/suites.hpp"

using namespace lkd;

namespace {

const LaurentPoly kQ = LaurentPoly::v(1) - LaurentPoly::v(-1);

}  // namespace

TEST_CASE("commutation past theta in A1") {
    const RootDatum& d = RootDatum::from_label("A1");
    HeckeAlgebra h(d);
    // T theta_w = theta_{-w} T + (v - v^-1) theta_w
    HeckeElt lhs = h.mul(h.t_generator(1), h.theta({1}));
    HeckeElt rhs = h.mul(h.theta({-1}), h.t_generator(1)) + kQ * h.theta({1});
    CHECK(lhs == rhs);
    // oracle: the returned value satisfies theta_w = T theta_{s(w)} T
    CHECK(h.theta({1}) == h.mul(h.mul(h.t_generator(1), h.theta({-1})), h.t_generator(1)));
}

TEST_CASE("theta subalgebra") {
    const RootDatum& d = RootDatum::from_label("A2");
    HeckeAlgebra h(d);
    CHECK(h.theta({0, 0}) == h.one());
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        Weight x{rand_range(rng, -3, 3), rand_range(rng, -3, 3)};
        Weight y{rand_range(rng, -3, 3), rand_range(rng, -3, 3)};
        CHECK(h.mul(h.theta(x), h.theta(y)) == h.theta(weight_add(x, y)));
    }
}

TEST_CASE("quadratic relation and inverses") {
    for (const char* label : {"A1", "B2"}) {
        const RootDatum& d = RootDatum::from_label(label);
        HeckeAlgebra h(d);
        for (int i = 1; i <= d.rank(); ++i) {
            HeckeElt t = h.t_generator(i);
            CHECK(h.mul(t, t) == h.one() + kQ * t);
            CHECK(h.mul(t, h.t_generator_inverse(i)) == h.one());
            CHECK(h.t_generator_inverse(i) == t - kQ * h.one());
        }
    }
}

TEST_CASE("monomial inverses") {
    const RootDatum& d = RootDatum::from_label("A2");
    HeckeAlgebra h(d);
    Rng rng(5);
    const auto& elts = d.all_elements();
    for (int t = 0; t < 30; ++t) {
        Weight x{rand_range(rng, -2, 2), rand_range(rng, -2, 2)};
        const WeylElt& w = elts[rand_below(rng, elts.size())];
        HeckeElt m = HeckeElt::monomial(x, w);
        CHECK(h.mul(m, h.monomial_inverse(x, w)) == h.one());
        CHECK(h.mul(h.monomial_inverse(x, w), m) == h.one());
    }
}

TEST_CASE("the bar involution") {
    const RootDatum& d = RootDatum::from_label("A2");
    HeckeAlgebra h(d);
    CHECK(h.im(h.theta({1, -2})) == h.theta({-1, 2}));
    CHECK(h.im(h.one()) == h.one());
    // IM(T) = -T^-1 = -T + v - v^-1
    for (int i = 1; i <= 2; ++i)
        CHECK(h.im(h.t_generator(i)) == -h.t_generator(i) + kQ * h.one());
    Rng rng(9);
    for (int t = 0; t < 40; ++t) {
        HeckeElt a = random_hecke_elt(rng, h, 2, 2);
        CHECK(h.im(h.im(a)) == a);
    }
}

TEST_CASE("the sign involution") {
    const RootDatum& d = RootDatum::from_label("A1");
    HeckeAlgebra h(d);
    CHECK(h.iota(h.t_alpha(1)) == h.t_alpha(1));
    CHECK(h.iota(h.theta({2})) == h.theta({2}));
    CHECK(h.iota(LaurentPoly::v(1) * h.one()) == LaurentPoly::term(-1, 1) * h.one());
    Rng rng(13);
    for (int t = 0; t < 40; ++t) {
        HeckeElt a = random_hecke_elt(rng, h, 2, 2);
        HeckeElt b = random_hecke_elt(rng, h, 2, 2);
        CHECK(h.iota(h.iota(a)) == a);
        CHECK(h.iota(h.mul(a, b)) == h.mul(h.iota(a), h.iota(b)));
    }
}

TEST_CASE("the composite duality") {
    const RootDatum& d = RootDatum::from_label("B2");
    HeckeAlgebra h(d);
    for (int i = 1; i <= 2; ++i) {
        CHECK(h.k_im(h.t_generator(i)) == h.t_generator(i) - kQ * h.one());
        // k_im(t_alpha) = -t_alpha + v^2 - 1 = -q t_alpha^-1
        HeckeElt img = h.k_im(h.t_alpha(i));
        CHECK(img == -h.t_alpha(i) + (LaurentPoly::v(2) - LaurentPoly::one()) * h.one());
        HeckeElt t_alpha_inv = LaurentPoly::v(-1) * h.t_generator_inverse(i);
        CHECK(img == LaurentPoly::term(-1, 2) * t_alpha_inv);
    }
    CHECK(h.k_im(h.theta({1, 1})) == h.theta({-1, -1}));
}

TEST_CASE("relation verification") {
    const RootDatum& d = RootDatum::from_label("A2");
    HeckeAlgebra h(d);
    for (const auto& c : h.verify_relations(h.identity_spec(), 2)) CHECK(c.pass);
    for (const auto& c : h.verify_relations(h.im_spec(), 2)) CHECK(c.pass);
    for (const auto& c : h.verify_relations(h.k_im_spec(), 2)) CHECK(c.pass);
}

TEST_CASE("negative control fails the quadratic relation") {
    const RootDatum& d = RootDatum::from_label("A1");
    HeckeAlgebra h(d);
    AlgebraMorphismSpec bad = parse_spec_override(h, "T->T+1");
    bool quadratic_failed = false;
    for (const auto& c : h.verify_relations(bad, 1))
        if (!c.pass && c.name.find("(vi)") != std::string::npos && !c.witness.empty())
            quadratic_failed = true;
    CHECK(quadratic_failed);
}

TEST_CASE("rendering round-trips") {
    const RootDatum& d = RootDatum::from_label("A1");
    HeckeAlgebra h(d);
    HeckeElt e = kQ * h.theta({1}) + HeckeElt::monomial({-1}, d.simple_reflection(1));
    CHECK(e.to_string() == "theta[-1] * T[1] + (v - v^-1) * theta[1] * T[]");
}
