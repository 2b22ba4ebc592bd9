#include "lkd/koszul.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lkd {

namespace {

Mat basis_matrix(const std::vector<Vec>& vecs, int dim) {
    return from_columns(vecs, static_cast<std::size_t>(dim));
}

Rat pair_eval(const Vec& functional, const Vec& vec) {
    Rat s = 0;
    for (std::size_t i = 0; i < functional.size(); ++i) s += functional[i] * vec[i];
    return s;
}

std::string idx_name(const std::string& stem, std::size_t i) {
    return stem + "_" + std::to_string(i + 1);
}

/// All multi-indices over n variables with total degree t, lex order.
void enum_multi(int n, int t, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(t);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = t; a >= 0; --a) {
        cur.push_back(a);
        enum_multi(n, t - a, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> multi_indices(int n, int t) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        if (t == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur;
    enum_multi(n, t, cur, out);
    return out;
}

DualityContext::DualityContext(SubspacePair pair, Window materialize)
    : pair_(std::move(pair)), window_(materialize) {
    const int n = pair_.ambient_dim;
    // F1^perp = null space of the matrix whose rows are the F1 basis
    Mat rows(pair_.f1_basis.size(), n);
    for (std::size_t i = 0; i < pair_.f1_basis.size(); ++i)
        for (int j = 0; j < n; ++j) rows(i, j) = pair_.f1_basis[i][j];
    xi_ = rows.kernel_basis();
    // representatives of the E/F1 basis dual to xi: solve xi_l(y_k) = delta
    Mat xmat(xi_.size(), n);
    for (std::size_t l = 0; l < xi_.size(); ++l)
        for (int j = 0; j < n; ++j) xmat(l, j) = xi_[l][j];
    for (std::size_t k = 0; k < xi_.size(); ++k) {
        Vec delta(xi_.size());
        delta[k] = 1;
        ybar_.push_back(solve(xmat, delta));
    }
    finish();
}

DualityContext::DualityContext(SubspacePair pair, std::vector<Vec> xi_basis,
                               std::vector<Vec> ybar_reps, Window materialize)
    : pair_(std::move(pair)), window_(materialize), xi_(std::move(xi_basis)),
      ybar_(std::move(ybar_reps)) {
    const int n = pair_.ambient_dim;
    if (static_cast<int>(xi_.size() + pair_.f1_basis.size()) != n)
        throw std::invalid_argument("xi basis has wrong size for F1^perp");
    for (const auto& xi : xi_)
        for (const auto& f : pair_.f1_basis)
            if (pair_eval(xi, f) != 0) throw std::invalid_argument("xi does not annihilate F1");
    if (ybar_.size() != xi_.size()) throw std::invalid_argument("ybar size mismatch");
    for (std::size_t l = 0; l < xi_.size(); ++l)
        for (std::size_t k = 0; k < ybar_.size(); ++k)
            if (pair_eval(xi_[l], ybar_[k]) != Rat(l == k ? 1 : 0))
                throw std::invalid_argument("ybar is not dual to xi");
    Mat check = basis_matrix(xi_, n);
    if (check.rank() != xi_.size()) throw std::invalid_argument("xi basis is dependent");
    finish();
}

void DualityContext::finish() {
    const std::size_t nxi = xi_.size(), nf = pair_.f2_basis.size();
    pairing_ = Mat(nxi, nf);
    for (std::size_t k = 0; k < nxi; ++k)
        for (std::size_t l = 0; l < nf; ++l) pairing_(k, l) = pair_eval(xi_[k], pair_.f2_basis[l]);

    std::vector<KoszulGenerator> t_ext, t_sym, r_ext, r_sym, s_ext, s_sym;
    for (std::size_t k = 0; k < nxi; ++k)
        t_ext.push_back({idx_name("xi", k), {-1, 2}, true});
    for (std::size_t l = 0; l < nf; ++l)
        t_sym.push_back({idx_name("u", l), {0, 2}, false});
    for (std::size_t l = 0; l < nf; ++l) {
        r_ext.push_back({idx_name("f", l), {-1, -2}, true});
        s_ext.push_back({idx_name("f", l), {1, -2}, true});
    }
    for (std::size_t k = 0; k < nxi; ++k) {
        r_sym.push_back({idx_name("y", k), {0, -2}, false});
        s_sym.push_back({idx_name("y", k), {2, -2}, false});
    }
    // d_T(xi_k) = sum_l xi_k(f_l) u_l : matrix rows u_l, cols xi_k
    Mat t_diff = pairing_.transpose();
    // d_R(f_l) = -[f_l] = -sum_k xi_k(f_l) y_k
    Mat r_diff = Rat(-1) * pairing_;
    t_ = std::make_shared<KoszulAlgebra>(std::move(t_ext), std::move(t_sym), std::move(t_diff));
    r_ = std::make_shared<KoszulAlgebra>(r_ext, r_sym, r_diff);
    s_ = std::make_shared<KoszulAlgebra>(std::move(s_ext), std::move(s_sym), std::move(r_diff));
}

DualityContext DualityContext::dual() const {
    const int n = pair_.ambient_dim;
    SubspacePair p;
    p.ambient_dim = n;
    // F1' = F2^perp inside E^dual
    Mat rows(pair_.f2_basis.size(), n);
    for (std::size_t i = 0; i < pair_.f2_basis.size(); ++i)
        for (int j = 0; j < n; ++j) rows(i, j) = pair_.f2_basis[i][j];
    p.f1_basis = rows.kernel_basis();
    p.f2_basis = xi_;
    // F1'^perp = F2 canonically inside E; dual E/F1' basis: eta_k(f_l) = delta
    std::vector<Vec> xi_prime = pair_.f2_basis;
    Mat fmat(pair_.f2_basis.size(), n);
    for (std::size_t l = 0; l < pair_.f2_basis.size(); ++l)
        for (int j = 0; j < n; ++j) fmat(l, j) = pair_.f2_basis[l][j];
    std::vector<Vec> ybar_prime;
    for (std::size_t k = 0; k < pair_.f2_basis.size(); ++k) {
        Vec delta(pair_.f2_basis.size());
        delta[k] = 1;
        ybar_prime.push_back(solve(fmat, delta));
    }
    return DualityContext(std::move(p), std::move(xi_prime), std::move(ybar_prime), window_);
}

DgModule dualize(const DualityContext& ctx, const DgModule& m) {
    DgModule r(ctx.T());
    for (const auto& [b, d] : m.components()) r.set_component({-b.c, -b.i}, d);
    for (const auto& [b, d] : m.components()) {
        (void)d;
        Bidegree nb{-b.c, -b.i};
        // block at nb-(1,0): dual of the differential out of b
        Mat dm = m.diff(b);
        if (!dm.is_zero()) {
            Bidegree src{nb.c - 1, nb.i};  // = (-b.c-1, -b.i)
            Mat block = dm.transpose();
            if (src.c % 2 == 0) block = Rat(-1) * block;  // -(-1)^i with i = src.c
            r.set_diff(src, block);
        }
        for (std::size_t g = 0; g < ctx.T()->num_gens(); ++g) {
            const auto deg = ctx.T()->gen(g).deg;
            Mat am = m.action(g, b);
            if (am.is_zero()) continue;
            Bidegree src{-b.c - deg.c, -b.i - deg.i};
            Mat block = am.transpose();
            if ((deg.c % 2 != 0) && (src.c % 2 != 0)) block = Rat(-1) * block;
            r.set_action(g, src, block);
        }
    }
    r.set_window(m.window().negated());
    return r;
}

namespace {

struct TransKey {
    unsigned lam;          // exterior subset of f-generators
    std::vector<int> mu;   // polynomial multi-index over y-generators
    Bidegree mb;           // input component bidegree
    int mi;                // index within that component
    auto operator<=>(const TransKey&) const = default;
};

int popcount(unsigned x) { return std::popcount(x); }

int sign_before(unsigned lam, unsigned l) {
    // parity of #{a in lam : a < l}
    const unsigned below = lam & ((1u << l) - 1u);
    return popcount(below) % 2 == 0 ? 1 : -1;
}

}  // namespace

DgModule koszul_transform(const DualityContext& ctx, const DgModule& m, int jlo,
                          bool perturb_sign) {
    if (jlo == Window::kNegInf)
        throw std::invalid_argument("transform needs a finite materialization bound");
    const std::size_t nf = ctx.pair().f2_basis.size();
    const std::size_t ny = ctx.xi_basis().size();
    const Mat& c = ctx.pairing();

    // enumerate the basis, grouped by output bidegree
    std::map<Bidegree, std::vector<TransKey>> basis;
    for (const auto& [mb, dm] : m.components()) {
        for (unsigned lam = 0; lam < (1u << nf); ++lam) {
            const int p = popcount(lam);
            const int tmax = (mb.i - jlo) / 2 - p;
            for (int t = 0; t <= tmax; ++t) {
                Bidegree out{mb.c + p + 2 * t, mb.i - 2 * (p + t)};
                for (const auto& mu : multi_indices(static_cast<int>(ny), t))
                    for (int mi = 0; mi < dm; ++mi)
                        basis[out].push_back({lam, mu, mb, mi});
            }
        }
    }
    std::map<TransKey, std::pair<Bidegree, int>> index;
    for (auto& [bd, keys] : basis) {
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = {bd, static_cast<int>(i)};
    }

    DgModule out(ctx.S());
    for (const auto& [bd, keys] : basis) out.set_component(bd, static_cast<int>(keys.size()));

    std::map<Bidegree, Mat> diff_blocks;
    auto block_for = [&](std::map<Bidegree, Mat>& store, Bidegree src, Bidegree dst) -> Mat& {
        auto it = store.find(src);
        if (it == store.end())
            it = store.emplace(src, Mat::zero(out.dim(dst), out.dim(src))).first;
        return it->second;
    };
    auto add = [&](std::map<Bidegree, Mat>& store, Bidegree src, int si, const TransKey& tgt,
                   Bidegree tgt_expected, const Rat& coeff) {
        if (coeff == 0) return;
        auto it = index.find(tgt);
        if (it == index.end()) return;  // truncated away below jlo
        block_for(store, src, it->second.first)(it->second.second, si) += coeff;
        (void)tgt_expected;
    };

    const Rat tw2_sign = perturb_sign ? Rat(-1) : Rat(1);
    for (const auto& [bd, keys] : basis) {
        Bidegree dst{bd.c + 1, bd.i};
        for (std::size_t si = 0; si < keys.size(); ++si) {
            const TransKey& key = keys[si];
            const int p = popcount(key.lam);
            const Rat psign = (p % 2 == 0) ? 1 : -1;
            // d_S on the exterior factor: f_l -> -[f_l]
            for (unsigned l = 0; l < nf; ++l) {
                if (!(key.lam & (1u << l))) continue;
                const Rat s = sign_before(key.lam, l);
                for (std::size_t k = 0; k < ny; ++k) {
                    if (c(k, l) == 0) continue;
                    TransKey tgt = key;
                    tgt.lam &= ~(1u << l);
                    tgt.mu[k] += 1;
                    add(diff_blocks, bd, static_cast<int>(si), tgt, dst, s * -c(k, l));
                }
            }
            // (-1)^{|s|} id (x) d_M
            Mat dm = m.diff(key.mb);
            for (std::size_t r = 0; r < dm.rows(); ++r) {
                if (dm(r, key.mi) == 0) continue;
                TransKey tgt = key;
                tgt.mb = {key.mb.c + 1, key.mb.i};
                tgt.mi = static_cast<int>(r);
                add(diff_blocks, bd, static_cast<int>(si), tgt, dst, psign * dm(r, key.mi));
            }
            // first twist: sum_l (f_l wedge -) (x) (u_l action)
            for (unsigned l = 0; l < nf; ++l) {
                if (key.lam & (1u << l)) continue;
                const Rat s = sign_before(key.lam, l);
                Mat ul = m.action(ny + l, key.mb);  // sym gens follow ext gens in T
                for (std::size_t r = 0; r < ul.rows(); ++r) {
                    if (ul(r, key.mi) == 0) continue;
                    TransKey tgt = key;
                    tgt.lam |= (1u << l);
                    tgt.mb = {key.mb.c, key.mb.i + 2};
                    tgt.mi = static_cast<int>(r);
                    add(diff_blocks, bd, static_cast<int>(si), tgt, dst, s * ul(r, key.mi));
                }
            }
            // second twist: sum_k (-1)^{|s|} (y_k mult) (x) (xi_k action)
            for (std::size_t k = 0; k < ny; ++k) {
                Mat xk = m.action(k, key.mb);
                for (std::size_t r = 0; r < xk.rows(); ++r) {
                    if (xk(r, key.mi) == 0) continue;
                    TransKey tgt = key;
                    tgt.mu[k] += 1;
                    tgt.mb = {key.mb.c - 1, key.mb.i + 2};
                    tgt.mi = static_cast<int>(r);
                    add(diff_blocks, bd, static_cast<int>(si), tgt, dst,
                        tw2_sign * psign * xk(r, key.mi));
                }
            }
        }
    }
    for (auto& [bd, mat] : diff_blocks) out.set_diff(bd, std::move(mat));

    // module structure over S: f_l wedges on the left, y_k multiplies
    for (std::size_t g = 0; g < nf + ny; ++g) {
        std::map<Bidegree, Mat> blocks;
        const Bidegree gd = ctx.S()->gen(g).deg;
        for (const auto& [bd, keys] : basis) {
            Bidegree dst = bd + gd;
            for (std::size_t si = 0; si < keys.size(); ++si) {
                const TransKey& key = keys[si];
                if (g < nf) {
                    const unsigned l = static_cast<unsigned>(g);
                    if (key.lam & (1u << l)) continue;
                    TransKey tgt = key;
                    tgt.lam |= (1u << l);
                    add(blocks, bd, static_cast<int>(si), tgt, dst,
                        Rat(sign_before(key.lam, l)));
                } else {
                    TransKey tgt = key;
                    tgt.mu[g - nf] += 1;
                    add(blocks, bd, static_cast<int>(si), tgt, dst, Rat(1));
                }
            }
        }
        for (auto& [bd, mat] : blocks) out.set_action(g, bd, std::move(mat));
    }

    Window w = m.window();
    w.lo = std::max(w.lo, jlo);
    out.set_window(w);
    return out;
}

DgModule regrade(const DualityContext& ctx, const DgModule& m) {
    DgModule r(ctx.R());
    for (const auto& [b, d] : m.components()) r.set_component({b.c + b.i, b.i}, d);
    for (const auto& [b, d] : m.components()) {
        (void)d;
        Bidegree nb{b.c + b.i, b.i};
        Mat dm = m.diff(b);
        if (!dm.is_zero()) r.set_diff(nb, dm);
        for (std::size_t g = 0; g < ctx.S()->num_gens(); ++g) {
            Mat am = m.action(g, b);
            if (!am.is_zero()) r.set_action(g, nb, am);
        }
    }
    r.set_window(m.window());
    return r;
}

DgModule kappa(const DualityContext& ctx, const DgModule& m) {
    DgModule d = dualize(ctx, m);
    DgModule t = koszul_transform(ctx, d, ctx.materialize().lo);
    return regrade(ctx, t);
}

DgModule transport(const DgModule& m, KoszulAlgebraPtr algebra, bool flip_internal,
                   const std::vector<Rat>& gen_signs) {
    if (algebra->num_gens() != m.algebra()->num_gens() || gen_signs.size() != algebra->num_gens())
        throw std::invalid_argument("transport: generator count mismatch");
    DgModule r(std::move(algebra));
    auto remap = [&](Bidegree b) { return Bidegree{b.c, flip_internal ? -b.i : b.i}; };
    for (const auto& [b, d] : m.components()) r.set_component(remap(b), d);
    for (const auto& [b, d] : m.components()) {
        (void)d;
        Mat dm = m.diff(b);
        if (!dm.is_zero()) r.set_diff(remap(b), dm);
        for (std::size_t g = 0; g < m.algebra()->num_gens(); ++g) {
            Mat am = m.action(g, b);
            if (am.is_zero()) continue;
            r.set_action(g, remap(b), gen_signs[g] * am);
        }
    }
    r.set_window(flip_internal ? m.window().negated() : m.window());
    return r;
}

DgModule as_dual_input(const DualityContext& dual_ctx, const DgModule& r_module) {
    // R has ext gens f_l and sym gens y_k; T of the dual context has ext
    // gens f_l (as functionals on E^dual) and sym gens dual to xi. After the
    // internal flip the two presentations differ only in the sign of the
    // algebra differential, absorbed by negating the polynomial actions.
    std::vector<Rat> signs(dual_ctx.T()->num_gens(), Rat(1));
    for (std::size_t g = dual_ctx.T()->ext_gens().size(); g < signs.size(); ++g) signs[g] = -1;
    return transport(r_module, dual_ctx.T(), true, signs);
}

DgModule skyscraper(KoszulAlgebraPtr algebra, Bidegree b) {
    DgModule m(std::move(algebra));
    m.set_component(b, 1);
    return m;
}

}  // namespace lkd
