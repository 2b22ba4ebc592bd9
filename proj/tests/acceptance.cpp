// Acceptance checks: one line per criterion, exit code = number of failures.
#include "lkd/heckeparse.hpp"
#include "lkd/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace lkd;

namespace {

const char* kTypes[] = {"A1", "A1xA1", "A2", "B2", "G2"};

int failures = 0;

void criterion(int num, const std::string& desc, const std::function<bool(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", num, desc.c_str(),
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

std::vector<Weight> weight_box(int rank, int bound) {
    std::vector<Weight> out;
    Weight x(rank, -bound);
    while (true) {
        out.push_back(x);
        int k = 0;
        while (k < rank && x[k] == bound) x[k++] = -bound;
        if (k == rank) break;
        ++x[k];
    }
    return out;
}

Weight negated(const Weight& x) {
    Weight y = x;
    for (auto& c : y) c = -c;
    return y;
}

const LaurentPoly kQ = LaurentPoly::v(1) - LaurentPoly::v(-1);

SubspacePair random_pair(Rng& rng, int n) {
    SubspacePair pair;
    pair.ambient_dim = n;
    pair.f1_basis = random_subspace(rng, n, static_cast<int>(rand_below(rng, n + 1)));
    pair.f2_basis = random_subspace(rng, n, static_cast<int>(rand_below(rng, n + 1)));
    return pair;
}

// results of the shared koszul sample, filled once and reported as two criteria
bool grading_ok = true, double_dual_ok = true;
std::string grading_detail, double_dual_detail;

void run_koszul_sample() {
    Rng rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rand_below(rng, 3));
        const int half = 10 - 2 * n;
        DualityContext ctx(random_pair(rng, n), {-half, half});
        DgModule m = random_t_module(rng, ctx);
        DgModule k = kappa(ctx, m);
        for (int a = -2; a <= 2 && grading_ok; ++a)
            for (int b = -2; b <= 2 && grading_ok; ++b) {
                DgModule lhs = kappa(ctx, m.shift(a, b));
                DgModule rhs = k.shift(b - a, -b);
                Window cmp = lhs.window().intersect(rhs.window());
                if (!dims_equal_within(lhs.cohomology(), rhs.cohomology(), cmp)) {
                    grading_ok = false;
                    grading_detail = "trial " + std::to_string(trial) + ", shift [" +
                                     std::to_string(a) + "]<" + std::to_string(b) + ">";
                }
            }
        if (double_dual_ok) {
            DualityContext ctxd = ctx.dual();
            DgModule back = as_dual_input(ctxd.dual(), kappa(ctxd, as_dual_input(ctxd, k)));
            Window cmp = back.window().intersect(m.window());
            if (!dims_equal_within(back.cohomology(), m.cohomology(), cmp)) {
                double_dual_ok = false;
                double_dual_detail = "trial " + std::to_string(trial);
            }
        }
    }
}

}  // namespace

int main() {
    criterion(1, "duality images of the generators in all five types", [](std::string& detail) {
        for (const char* label : kTypes) {
            const RootDatum& d = RootDatum::from_label(label);
            HeckeAlgebra h(d);
            for (int i = 1; i <= d.rank(); ++i)
                if (h.k_im(h.t_generator(i)) != h.t_generator(i) - kQ * h.one()) {
                    detail = std::string(label) + ", T[" + std::to_string(i) + "]";
                    return false;
                }
            for (const Weight& x : weight_box(d.rank(), 3))
                if (h.k_im(h.theta(x)) != h.theta(negated(x))) {
                    detail = std::string(label) + ", theta " + render_weight(x);
                    return false;
                }
        }
        return true;
    });

    criterion(2, "the duality assignment is an algebra morphism", [](std::string& detail) {
        for (const char* label : kTypes) {
            const RootDatum& d = RootDatum::from_label(label);
            HeckeAlgebra h(d);
            for (const auto& c : h.verify_relations(h.k_im_spec(), 3))
                if (!c.pass) {
                    detail = std::string(label) + ": " + c.name + ": " + c.witness;
                    return false;
                }
            Rng rng(2);
            for (int t = 0; t < 500; ++t) {
                HeckeElt a = random_hecke_elt(rng, h, 2, 2);
                HeckeElt b = random_hecke_elt(rng, h, 2, 2);
                if (h.k_im(h.mul(a, b)) != h.mul(h.k_im(a), h.k_im(b))) {
                    detail = std::string(label) + ", pair " + std::to_string(t);
                    return false;
                }
            }
        }
        return true;
    });

    criterion(3, "the three dualities are commuting involutions", [](std::string& detail) {
        for (const char* label : kTypes) {
            const RootDatum& d = RootDatum::from_label(label);
            HeckeAlgebra h(d);
            for (const Weight& x : weight_box(d.rank(), 2))
                for (const WeylElt& w : d.all_elements()) {
                    HeckeElt m = HeckeElt::monomial(x, w);
                    bool ok = h.im(h.im(m)) == m && h.iota(h.iota(m)) == m &&
                              h.k_im(h.k_im(m)) == m && h.im(h.iota(m)) == h.iota(h.im(m));
                    if (!ok) {
                        detail = std::string(label) + ", " + m.to_string();
                        return false;
                    }
                }
        }
        return true;
    });

    criterion(4, "closed form of the duality on the rescaled generators", [](std::string& detail) {
        for (const char* label : kTypes) {
            const RootDatum& d = RootDatum::from_label(label);
            HeckeAlgebra h(d);
            for (int i = 1; i <= d.rank(); ++i) {
                HeckeElt img = h.k_im(h.t_alpha(i));
                HeckeElt stated =
                    -h.t_alpha(i) + (LaurentPoly::v(2) - LaurentPoly::one()) * h.one();
                HeckeElt t_alpha_inv = LaurentPoly::v(-1) * h.t_generator_inverse(i);
                if (img != stated || img != LaurentPoly::term(-1, 2) * t_alpha_inv) {
                    detail = std::string(label) + ", index " + std::to_string(i);
                    return false;
                }
            }
        }
        return true;
    });

    criterion(5, "euler classes descend to cohomology, cones and shifts", [](std::string& detail) {
        Rng rng(5);
        for (int t = 0; t < 200; ++t) {
            const int n = 1 + static_cast<int>(rand_below(rng, 3));
            DualityContext ctx(random_pair(rng, n), Window::all());
            DgModule m = random_complex(rng, ctx.T(), 6);
            LaurentPoly e = m.euler_class();
            if (cohomology_module(m).euler_class() != e) {
                detail = "shadow, trial " + std::to_string(t);
                return false;
            }
            DgModule s = skyscraper(ctx.T(), {static_cast<int>(rand_range(rng, -2, 2)),
                                              static_cast<int>(rand_range(rng, -2, 2))});
            if (cone(m, s, {}).euler_class() != s.euler_class() - e) {
                detail = "cone, trial " + std::to_string(t);
                return false;
            }
            const int a = static_cast<int>(rand_range(rng, -2, 2));
            const int b = static_cast<int>(rand_range(rng, -2, 2));
            LaurentPoly expect = (a % 2 == 0 ? LaurentPoly::term(1, b) : LaurentPoly::term(-1, b)) * e;
            if (m.shift(a, b).euler_class() != expect) {
                detail = "shift, trial " + std::to_string(t);
                return false;
            }
        }
        return true;
    });

    criterion(6, "the duality functor intertwines shifts and twists", [](std::string& detail) {
        run_koszul_sample();
        detail = grading_detail;
        return grading_ok;
    });
    criterion(7, "applying the duality functor twice recovers cohomology", [](std::string& detail) {
        detail = double_dual_detail;
        return double_dual_ok;
    });

    criterion(8, "duality exchanges the units of a subspace and its annihilator",
              [](std::string& detail) {
                  Rng rng(8);
                  for (int n = 1; n <= 3; ++n)
                      for (int f = 0; f <= n; ++f)
                          for (int rep = 0; rep < 3; ++rep) {
                              Window w = n == 3 ? Window{-4, 4} : Window{-6, 6};
                              ConvolutionContext ctx(n, random_subspace(rng, n, f), w);
                              ConvolutionContext ctxd = ctx.dual();
                              DgModule ku = frak_K(ctx, ctxd, unit(ctx));
                              DgModule ud = unit(ctxd);
                              Window cmp = ku.window().intersect(ud.window());
                              if (!dims_equal_within(ku.cohomology(), ud.cohomology(), cmp)) {
                                  detail = "n=" + std::to_string(n) + ", dim F=" +
                                           std::to_string(f) + ", rep " + std::to_string(rep);
                                  return false;
                              }
                          }
                  return true;
              });

    criterion(9, "duality is compatible with convolution, units and associativity",
              [](std::string& detail) {
                  Rng rng(9);
                  for (int n = 1; n <= 2; ++n)
                      for (int f = 0; f <= n; ++f) {
                          Window w = n == 2 ? Window{-2, 2} : Window{-6, 6};
                          ConvolutionContext ctx(n, random_subspace(rng, n, f), w);
                          ConvolutionContext ctxd = ctx.dual();
                          DgModule u = unit(ctx);
                          for (int t = 0; t < 50; ++t) {
                              DgModule a = random_conv_module(rng, ctx, true);
                              DgModule b = random_conv_module(rng, ctx, true);
                              DgModule ab = convolve(ctx, a, b);
                              std::string where = "n=" + std::to_string(n) + ", dim F=" +
                                                  std::to_string(f) + ", pair " + std::to_string(t);
                              {
                                  DgModule lhs = frak_K(ctx, ctxd, ab);
                                  DgModule rhs =
                                      convolve(ctxd, frak_K(ctx, ctxd, a), frak_K(ctx, ctxd, b));
                                  Window cmp = lhs.window().intersect(rhs.window());
                                  if (!dims_equal_within(lhs.cohomology(), rhs.cohomology(), cmp)) {
                                      detail = "compatibility, " + where;
                                      return false;
                                  }
                              }
                              {
                                  DgModule ua = convolve(ctx, u, a);
                                  Window cmp = ua.window().intersect(a.window());
                                  if (!dims_equal_within(ua.cohomology(), a.cohomology(), cmp)) {
                                      detail = "unit law, " + where;
                                      return false;
                                  }
                              }
                              {
                                  DgModule c = random_conv_module(rng, ctx, true);
                                  DgModule lhs = convolve(ctx, ab, c);
                                  DgModule rhs = convolve(ctx, a, convolve(ctx, b, c));
                                  Window cmp = lhs.window().intersect(rhs.window());
                                  if (!dims_equal_within(lhs.cohomology(), rhs.cohomology(), cmp)) {
                                      detail = "associativity, " + where;
                                      return false;
                                  }
                              }
                          }
                      }
                  return true;
              });

    criterion(10, "negative controls genuinely fail", [](std::string& detail) {
        {
            const RootDatum& d = RootDatum::from_label("A1");
            HeckeAlgebra h(d);
            AlgebraMorphismSpec bad = parse_spec_override(h, "T->T+1");
            bool quadratic_failed = false;
            for (const auto& c : h.verify_relations(bad, 1))
                if (!c.pass && c.name.find("(vi)") != std::string::npos && !c.witness.empty())
                    quadratic_failed = true;
            if (!quadratic_failed) {
                detail = "the shifted generator assignment passed the quadratic relation";
                return false;
            }
        }
        {
            SubspacePair pair;
            pair.ambient_dim = 1;
            pair.f2_basis = {{Rat(1)}};
            DualityContext ctx(pair, {-4, 4});
            DgModule probe(ctx.T());
            Mat one = Mat::identity(1);
            for (int t = 0; t <= 2; ++t) probe.set_component({0, 2 * t}, 1);
            for (int t = 0; t <= 1; ++t) probe.set_component({-1, 2 * t + 2}, 1);
            for (int t = 0; t <= 1; ++t) {
                probe.set_diff({-1, 2 * t + 2}, one);
                probe.set_action(0, {0, 2 * t}, one);
                probe.set_action(1, {0, 2 * t}, one);
                if (t == 0) probe.set_action(1, {-1, 2}, one);
            }
            probe.set_window({Window::kNegInf, 5});
            if (probe.validate()) {
                detail = "the probe module is invalid";
                return false;
            }
            if (koszul_transform(ctx, probe, -4, false).validate()) {
                detail = "the unperturbed transform failed";
                return false;
            }
            if (!koszul_transform(ctx, probe, -4, true).validate()) {
                detail = "the sign-perturbed transform still squares to zero";
                return false;
            }
        }
        return true;
    });

    return failures;
}
