#include "lkd/convolution.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lkd {

namespace {

Vec concat(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Vec unit_vec(int n, int k) {
    Vec v(n);
    v[k] = 1;
    return v;
}

int sign_before(unsigned set, unsigned j) {
    return std::popcount(set & ((1u << j) - 1u)) % 2 == 0 ? 1 : -1;
}

}  // namespace

ConvolutionContext::ConvolutionContext(int v_dim, std::vector<Vec> f_basis, Window materialize)
    : n_(v_dim), f_(std::move(f_basis)), window_(materialize) {
    SubspacePair pair;
    pair.ambient_dim = 2 * n_;
    std::vector<Vec> xi, ybar;
    for (int k = 0; k < n_; ++k) {
        Vec e = unit_vec(n_, k);
        pair.f1_basis.push_back(concat(e, e));
        Vec neg(n_);
        for (int j = 0; j < n_; ++j) neg[j] = -e[j];
        xi.push_back(concat(e, neg));
        ybar.push_back(concat(e, Vec(n_)));
    }
    for (const auto& f : f_) pair.f2_basis.push_back(concat(f, Vec(n_)));
    for (const auto& f : f_) pair.f2_basis.push_back(concat(Vec(n_), f));
    pair_ctx_ = std::make_shared<DualityContext>(std::move(pair), std::move(xi), std::move(ybar),
                                                 materialize);
}

std::vector<Vec> ConvolutionContext::f_perp_basis() const {
    Mat rows(f_.size(), n_);
    for (std::size_t l = 0; l < f_.size(); ++l)
        for (int j = 0; j < n_; ++j) rows(l, j) = f_[l][j];
    return rows.kernel_basis();
}

ConvolutionContext ConvolutionContext::dual() const {
    return ConvolutionContext(n_, f_perp_basis(), window_);
}

KoszulAlgebraPtr ConvolutionContext::inverted_algebra() const {
    auto ext = A()->ext_gens();
    auto sym = A()->sym_gens();
    for (auto& g : ext) g.deg.i = -g.deg.i;
    for (auto& g : sym) g.deg.i = -g.deg.i;
    return std::make_shared<KoszulAlgebra>(std::move(ext), std::move(sym), A()->diff_on_ext());
}

DgModule unit(const ConvolutionContext& ctx) {
    const int f = ctx.f_dim();
    DgModule m(ctx.A());
    if (f > 0 && ctx.materialize().hi == Window::kPosInf)
        throw std::invalid_argument("unit needs a finite materialization window");
    const int kmax = f == 0 ? 0 : std::max(0, ctx.materialize().hi) / 2;
    std::vector<std::vector<std::vector<int>>> bases;
    for (int k = 0; k <= kmax; ++k) {
        bases.push_back(multi_indices(f, k));
        m.set_component({0, 2 * k}, static_cast<int>(bases.back().size()));
    }
    for (int k = 0; k + 1 <= kmax; ++k) {
        std::map<std::vector<int>, int> next_index;
        for (std::size_t i = 0; i < bases[k + 1].size(); ++i) next_index[bases[k + 1][i]] = (int)i;
        for (int l = 0; l < f; ++l) {
            Mat mul(bases[k + 1].size(), bases[k].size());
            for (std::size_t i = 0; i < bases[k].size(); ++i) {
                auto mu = bases[k][i];
                mu[l] += 1;
                mul(next_index.at(mu), i) = 1;
            }
            // both copies act through the diagonal
            m.set_action(ctx.v_dim() + l, {0, 2 * k}, mul);
            m.set_action(ctx.v_dim() + f + l, {0, 2 * k}, mul);
        }
    }
    m.set_window({Window::kNegInf, 2 * kmax + 1});
    return m;
}

namespace {

struct ConvKey {
    Bidegree b1;
    int i1;
    unsigned sig;
    Bidegree b2;
    int i2;
    auto operator<=>(const ConvKey&) const = default;
};

}  // namespace

DgModule convolve(const ConvolutionContext& ctx, const DgModule& m1, const DgModule& m2) {
    if (m1.algebra() != ctx.A() || m2.algebra() != ctx.A())
        throw std::invalid_argument("convolve: modules over a different context");
    const int n = ctx.v_dim();
    const int nf = ctx.f_dim();

    std::map<Bidegree, std::vector<ConvKey>> basis;
    for (const auto& [b1, d1] : m1.components())
        for (const auto& [b2, d2] : m2.components())
            for (unsigned sig = 0; sig < (1u << nf); ++sig) {
                const int p = std::popcount(sig);
                Bidegree out{b1.c + b2.c - p, b1.i + b2.i + 2 * p};
                for (int i1 = 0; i1 < d1; ++i1)
                    for (int i2 = 0; i2 < d2; ++i2) basis[out].push_back({b1, i1, sig, b2, i2});
            }
    std::map<ConvKey, std::pair<Bidegree, int>> index;
    for (auto& [bd, keys] : basis) {
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = {bd, static_cast<int>(i)};
    }

    DgModule out(ctx.A());
    for (const auto& [bd, keys] : basis) out.set_component(bd, static_cast<int>(keys.size()));

    auto assemble = [&](auto&& emit) {
        std::map<Bidegree, Mat> blocks;
        auto add = [&](Bidegree src, int si, const ConvKey& tgt, const Rat& coeff) {
            if (coeff == 0) return;
            auto it = index.find(tgt);
            if (it == index.end()) return;
            auto bit = blocks.find(src);
            if (bit == blocks.end())
                bit = blocks.emplace(src, Mat::zero(out.dim(it->second.first), out.dim(src))).first;
            bit->second(it->second.second, si) += coeff;
        };
        for (const auto& [bd, keys] : basis)
            for (std::size_t si = 0; si < keys.size(); ++si)
                emit(bd, static_cast<int>(si), keys[si], add);
        return blocks;
    };

    // differential
    auto dblocks = assemble([&](Bidegree bd, int si, const ConvKey& key, auto add) {
        const int p = std::popcount(key.sig);
        const Rat s1 = (key.b1.c % 2 == 0) ? 1 : -1;
        const Rat s12 = ((key.b1.c + p) % 2 == 0) ? 1 : -1;
        Mat d1 = m1.diff(key.b1);
        for (std::size_t r = 0; r < d1.rows(); ++r)
            if (d1(r, key.i1) != 0) {
                ConvKey t = key;
                t.b1 = {key.b1.c + 1, key.b1.i};
                t.i1 = static_cast<int>(r);
                add(bd, si, t, d1(r, key.i1));
            }
        Mat d2 = m2.diff(key.b2);
        for (std::size_t r = 0; r < d2.rows(); ++r)
            if (d2(r, key.i2) != 0) {
                ConvKey t = key;
                t.b2 = {key.b2.c + 1, key.b2.i};
                t.i2 = static_cast<int>(r);
                add(bd, si, t, s12 * d2(r, key.i2));
            }
        for (unsigned j = 0; j < static_cast<unsigned>(nf); ++j) {
            if (!(key.sig & (1u << j))) continue;
            const Rat s = s1 * sign_before(key.sig, j);
            Mat x1 = m1.action(n + nf + j, key.b1);  // second copy acting on M1
            for (std::size_t r = 0; r < x1.rows(); ++r)
                if (x1(r, key.i1) != 0) {
                    ConvKey t = key;
                    t.sig &= ~(1u << j);
                    t.b1 = {key.b1.c, key.b1.i + 2};
                    t.i1 = static_cast<int>(r);
                    add(bd, si, t, s * x1(r, key.i1));
                }
            Mat x2 = m2.action(n + j, key.b2);  // first copy acting on M2
            for (std::size_t r = 0; r < x2.rows(); ++r)
                if (x2(r, key.i2) != 0) {
                    ConvKey t = key;
                    t.sig &= ~(1u << j);
                    t.b2 = {key.b2.c, key.b2.i + 2};
                    t.i2 = static_cast<int>(r);
                    add(bd, si, t, -s * x2(r, key.i2));
                }
        }
    });
    for (auto& [bd, mat] : dblocks) out.set_diff(bd, std::move(mat));

    // outer sym copies
    for (int l = 0; l < nf; ++l) {
        auto b1l = assemble([&](Bidegree bd, int si, const ConvKey& key, auto add) {
            Mat x = m1.action(n + l, key.b1);
            for (std::size_t r = 0; r < x.rows(); ++r)
                if (x(r, key.i1) != 0) {
                    ConvKey t = key;
                    t.b1 = {key.b1.c, key.b1.i + 2};
                    t.i1 = static_cast<int>(r);
                    add(bd, si, t, x(r, key.i1));
                }
        });
        for (auto& [bd, mat] : b1l) out.set_action(n + l, bd, std::move(mat));
        auto b2l = assemble([&](Bidegree bd, int si, const ConvKey& key, auto add) {
            Mat x = m2.action(n + nf + l, key.b2);
            for (std::size_t r = 0; r < x.rows(); ++r)
                if (x(r, key.i2) != 0) {
                    ConvKey t = key;
                    t.b2 = {key.b2.c, key.b2.i + 2};
                    t.i2 = static_cast<int>(r);
                    add(bd, si, t, x(r, key.i2));
                }
        });
        for (auto& [bd, mat] : b2l) out.set_action(n + nf + l, bd, std::move(mat));
    }

    // exterior generators: coproduct plus the wedge correction making the
    // Leibniz rule hold on the resolution
    for (int k = 0; k < n; ++k) {
        auto blocks = assemble([&](Bidegree bd, int si, const ConvKey& key, auto add) {
            const int p = std::popcount(key.sig);
            const Rat s1 = (key.b1.c % 2 == 0) ? 1 : -1;
            const Rat s12 = ((key.b1.c + p) % 2 == 0) ? 1 : -1;
            Mat x1 = m1.action(k, key.b1);
            for (std::size_t r = 0; r < x1.rows(); ++r)
                if (x1(r, key.i1) != 0) {
                    ConvKey t = key;
                    t.b1 = {key.b1.c - 1, key.b1.i + 2};
                    t.i1 = static_cast<int>(r);
                    add(bd, si, t, x1(r, key.i1));
                }
            Mat x2 = m2.action(k, key.b2);
            for (std::size_t r = 0; r < x2.rows(); ++r)
                if (x2(r, key.i2) != 0) {
                    ConvKey t = key;
                    t.b2 = {key.b2.c - 1, key.b2.i + 2};
                    t.i2 = static_cast<int>(r);
                    add(bd, si, t, s12 * x2(r, key.i2));
                }
            for (unsigned j = 0; j < static_cast<unsigned>(nf); ++j) {
                if (key.sig & (1u << j)) continue;
                const Rat c = ctx.f_basis()[j][k];  // xi_k|_F in the dual basis
                if (c == 0) continue;
                ConvKey t = key;
                t.sig |= (1u << j);
                add(bd, si, t, s1 * Rat(sign_before(key.sig, j)) * c);
            }
        });
        for (auto& [bd, mat] : blocks) out.set_action(k, bd, std::move(mat));
    }

    auto jmin = [](const DgModule& m) {
        int lo = 0;
        bool first = true;
        for (const auto& [b, d] : m.components()) {
            (void)d;
            if (first || b.i < lo) lo = b.i;
            first = false;
        }
        return lo;
    };
    Window w;
    auto sat_add = [](int a, int b) {
        if (a == Window::kPosInf || a == Window::kNegInf) return a;
        return a + b;
    };
    w.hi = std::min(sat_add(m1.window().hi, jmin(m2)), sat_add(m2.window().hi, jmin(m1)));
    w.lo = std::max(m1.window().lo == Window::kNegInf ? Window::kNegInf
                                                      : sat_add(m1.window().lo, jmin(m2)),
                    m2.window().lo == Window::kNegInf ? Window::kNegInf
                                                      : sat_add(m2.window().lo, jmin(m1)));
    out.set_window(w);
    return out;
}

DgModule frak_K(const ConvolutionContext& ctx, const ConvolutionContext& dual_ctx,
                const DgModule& m, bool invert_internal) {
    const int n = ctx.v_dim();
    const int nf = ctx.f_dim();
    const auto& psi = dual_ctx.f_basis();  // basis of F^perp
    const int np = static_cast<int>(psi.size());

    // representatives mu_m of V/F dual to psi
    Mat pmat(np, n);
    for (int l = 0; l < np; ++l)
        for (int j = 0; j < n; ++j) pmat(l, j) = psi[l][j];
    std::vector<Vec> mu;
    for (int k = 0; k < np; ++k) {
        Vec delta(np);
        delta[k] = 1;
        mu.push_back(solve(pmat, delta));
    }

    // the pair (F x F, diagonal V): its T receives A along a quasi-iso and
    // its R is the dual context's algebra up to flip and one sign
    SubspacePair pair;
    pair.ambient_dim = 2 * n;
    for (const auto& f : ctx.f_basis()) pair.f1_basis.push_back(concat(f, Vec(n)));
    for (const auto& f : ctx.f_basis()) pair.f1_basis.push_back(concat(Vec(n), f));
    for (int k = 0; k < n; ++k) {
        Vec e = unit_vec(n, k);
        pair.f2_basis.push_back(concat(e, e));
    }
    std::vector<Vec> xi, ybar;
    for (int c = 0; c < 2; ++c)
        for (int mm = 0; mm < np; ++mm) {
            xi.push_back(c == 0 ? concat(psi[mm], Vec(n)) : concat(Vec(n), psi[mm]));
            ybar.push_back(c == 0 ? concat(mu[mm], Vec(n)) : concat(Vec(n), mu[mm]));
        }
    DualityContext tprime(std::move(pair), std::move(xi), std::move(ybar),
                          dual_ctx.materialize().negated());

    // restriction along the quasi-isomorphism T' -> A:
    //   psi (first copy) -> psi as a combination of the anti-diagonal xi_k,
    //   psi (second copy) -> 0,
    //   u'_k (dual of the diagonal basis) -> sum_l eps_k(f_l) u^1_l
    DgModule res(tprime.T());
    for (const auto& [b, d] : m.components()) res.set_component(b, d);
    for (const auto& [b, d] : m.components()) {
        (void)d;
        Mat dm = m.diff(b);
        if (!dm.is_zero()) res.set_diff(b, dm);
        for (int mm = 0; mm < np; ++mm) {
            Mat a = Mat::zero(m.dim(b + Bidegree{-1, 2}), m.dim(b));
            for (int k = 0; k < n; ++k)
                if (psi[mm][k] != 0) a = a + psi[mm][k] * m.action(k, b);
            if (!a.is_zero()) res.set_action(mm, b, a);
        }
        for (int k = 0; k < n; ++k) {
            Mat a = Mat::zero(m.dim(b + Bidegree{0, 2}), m.dim(b));
            for (int l = 0; l < nf; ++l)
                if (ctx.f_basis()[l][k] != 0) a = a + ctx.f_basis()[l][k] * m.action(n + l, b);
            if (!a.is_zero()) res.set_action(2 * np + k, b, a);
        }
    }
    res.set_window(m.window());

    DgModule k_out = kappa(tprime, res);

    std::vector<Rat> signs(static_cast<std::size_t>(n + 2 * np), 1);
    for (int mm = 0; mm < np; ++mm) signs[n + mm] = -1;  // Xi: negate one copy
    DgModule out = transport(k_out, dual_ctx.A(), true, signs);
    if (invert_internal) {
        std::vector<Rat> plus(static_cast<std::size_t>(n + 2 * np), 1);
        out = transport(out, dual_ctx.inverted_algebra(), true, plus);
    }
    return out;
}

DgModule twist_by_character(const DgModule& m, int amount) { return m.shift(0, amount); }

}  // namespace lkd
