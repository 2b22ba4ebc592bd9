#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lkd/rootdata.hpp"

using namespace lkd;

TEST_CASE("reflections") {
    const RootDatum& a1 = RootDatum::from_label("A1");
    CHECK(a1.reflect(1, {1}) == Weight{-1});
    CHECK(a1.reflect(1, {0}) == Weight{0});

    const RootDatum& a2 = RootDatum::from_label("A2");
    CHECK(a2.reflect(1, {0, 0}) == Weight{0, 0});
    CHECK(a2.reflect(1, {1, 0}) == Weight{-1, 1});
    // s_i is an involution and negates the pairing with alpha_i
    for (int i = 1; i <= 2; ++i)
        for (long long x0 = -2; x0 <= 2; ++x0)
            for (long long x1 = -2; x1 <= 2; ++x1) {
                Weight x{x0, x1};
                Weight sx = a2.reflect(i, x);
                CHECK(a2.reflect(i, sx) == x);
                CHECK(sx[i - 1] == -x[i - 1]);
            }
}

TEST_CASE("braid orders") {
    CHECK(RootDatum::from_label("A1xA1").braid_order(1, 2) == 2);
    CHECK(RootDatum::from_label("A2").braid_order(1, 2) == 3);
    CHECK(RootDatum::from_label("B2").braid_order(1, 2) == 4);
    CHECK(RootDatum::from_label("G2").braid_order(1, 2) == 6);
    // oracle: iterate multiplication
    for (const char* label : {"A1xA1", "A2", "B2", "G2", "A3"}) {
        const RootDatum& d = RootDatum::from_label(label);
        for (int i = 1; i <= d.rank(); ++i)
            for (int j = 1; j <= d.rank(); ++j) {
                if (i == j) continue;
                WeylElt sij = d.mul(d.simple_reflection(i), d.simple_reflection(j));
                WeylElt acc = d.identity();
                int order = 0;
                do {
                    acc = d.mul(acc, sij);
                    ++order;
                } while (acc != d.identity());
                CHECK(order == d.braid_order(i, j));
            }
    }
}

TEST_CASE("multiplication and canonical words") {
    const RootDatum& a2 = RootDatum::from_label("A2");
    WeylElt s1 = a2.simple_reflection(1), s2 = a2.simple_reflection(2);
    CHECK(a2.mul(a2.identity(), s1) == s1);
    CHECK(a2.mul(s1, s1) == a2.identity());
    // s1 s2 s1 = s2 s1 s2 reduce to the same canonical word
    WeylElt lhs = a2.mul(a2.mul(s1, s2), s1);
    WeylElt rhs = a2.mul(a2.mul(s2, s1), s2);
    CHECK(lhs == rhs);
    CHECK(lhs.length() == 3);
}

TEST_CASE("group enumeration") {
    CHECK(RootDatum::from_label("A1").order() == 2);
    CHECK(RootDatum::from_label("A1xA1").order() == 4);
    CHECK(RootDatum::from_label("A2").order() == 6);
    CHECK(RootDatum::from_label("B2").order() == 8);
    CHECK(RootDatum::from_label("G2").order() == 12);
    CHECK(RootDatum::from_label("A3").order() == 24);

    // closure under multiplication and inverse, and length subadditivity
    const RootDatum& b2 = RootDatum::from_label("B2");
    for (const auto& u : b2.all_elements())
        for (const auto& w : b2.all_elements()) {
            WeylElt p = b2.mul(u, w);
            CHECK(p.length() <= u.length() + w.length());
            CHECK(b2.mul(b2.inverse(u), b2.mul(u, w)) == w);
        }
}

TEST_CASE("reduced words") {
    const RootDatum& a2 = RootDatum::from_label("A2");
    for (const auto& w : a2.all_elements()) {
        auto words = a2.reduced_words(w);
        CHECK(!words.empty());
        for (const auto& rw : words) {
            CHECK(rw.size() == w.length());
            WeylElt acc = a2.identity();
            for (int i : rw) acc = a2.mul(acc, a2.simple_reflection(i));
            CHECK(acc == w);
        }
    }
    // the long element of A2 has exactly two reduced words
    WeylElt w0 = a2.mul(a2.mul(a2.simple_reflection(1), a2.simple_reflection(2)),
                        a2.simple_reflection(1));
    CHECK(a2.reduced_words(w0).size() == 2);
}

TEST_CASE("weyl action on weights") {
    const RootDatum& g2 = RootDatum::from_label("G2");
    Weight rho{1, 1};
    for (const auto& w : g2.all_elements()) {
        Weight x = g2.act(w, rho);
        // the action is faithful on a strictly dominant weight
        if (!(w == g2.identity())) CHECK(x != rho);
        CHECK(g2.act(g2.inverse(w), x) == rho);
    }
}
