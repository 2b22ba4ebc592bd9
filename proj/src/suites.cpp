#include "lkd/suites.hpp"

#include "lkd/heckeparse.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace lkd {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

int total_dim(const DgModule& m) {
    int t = 0;
    for (const auto& [b, d] : m.components()) {
        (void)b;
        t += d;
    }
    return t;
}

/// Accumulates one named property over many trials; first failure wins the
/// witness slot.
struct Agg {
    bool pass = true;
    int runs = 0;
    std::string witness;
    void note(bool ok, const std::string& w = "") {
        ++runs;
        if (!ok && pass) {
            pass = false;
            witness = w;
        }
    }
    void note_error(const std::optional<std::string>& err) { note(!err, err ? *err : ""); }
};

void finish(Report& r, const std::string& name, const Agg& a) {
    if (a.runs == 0) {
        r.add_fail(name, "property was never exercised");
        return;
    }
    r.add(name, a.pass, a.witness);
}

BigradedDims dims_sum(const BigradedDims& a, const BigradedDims& b) {
    BigradedDims r = a;
    for (const auto& [bd, d] : b) {
        r[bd] += d;
        if (r[bd] == 0) r.erase(bd);
    }
    return r;
}

std::string dims_witness(const BigradedDims& lhs, const BigradedDims& rhs) {
    return "lhs " + dims_to_string(lhs) + " vs rhs " + dims_to_string(rhs);
}

// --- random linear algebra -------------------------------------------------

struct BasisChange {
    Mat p, pinv;
};

/// Random unimodular matrix together with its inverse, as a product of
/// elementary row operations.
BasisChange random_basis_change(Rng& rng, std::size_t n) {
    BasisChange bc{Mat::identity(n), Mat::identity(n)};
    if (n < 2) return bc;
    for (std::size_t step = 0; step < 2 * n; ++step) {
        const std::size_t i = rand_below(rng, n), j = rand_below(rng, n);
        const Rat c = Rat(rand_range(rng, -2, 2));
        if (i == j || c == 0) continue;
        for (std::size_t k = 0; k < n; ++k) bc.p(i, k) += c * bc.p(j, k);
        for (std::size_t k = 0; k < n; ++k) bc.pinv(k, j) -= c * bc.pinv(k, i);
    }
    return bc;
}

/// Three-term complex with prescribed ranks, conjugated by random basis
/// changes; generator actions are zero.
DgModule random_strand(Rng& rng, const KoszulAlgebraPtr& algebra) {
    const int i0 = static_cast<int>(rand_range(rng, -2, 1));
    const int j0 = 2 * static_cast<int>(rand_range(rng, -1, 2));
    int n0 = 0, n1 = 0, n2 = 0;
    while (n0 + n1 + n2 == 0) {
        n0 = static_cast<int>(rand_below(rng, 3));
        n1 = static_cast<int>(rand_below(rng, 3));
        n2 = static_cast<int>(rand_below(rng, 3));
    }
    const int r1 = std::min(n0, n1) > 0
                       ? static_cast<int>(rand_below(rng, std::min(n0, n1) + 1))
                       : 0;
    const int r2 = std::min(n1 - r1, n2) > 0
                       ? static_cast<int>(rand_below(rng, std::min(n1 - r1, n2) + 1))
                       : 0;
    Mat d1(n1, n0), d2(n2, n1);
    for (int r = 0; r < r1; ++r) d1(r, r) = 1;
    for (int r = 0; r < r2; ++r) d2(r, r1 + r) = 1;
    auto b0 = random_basis_change(rng, n0);
    auto b1 = random_basis_change(rng, n1);
    auto b2 = random_basis_change(rng, n2);
    DgModule m(algebra);
    m.set_component({i0, j0}, n0);
    m.set_component({i0 + 1, j0}, n1);
    m.set_component({i0 + 2, j0}, n2);
    if (n0 && n1) m.set_diff({i0, j0}, b1.p * d1 * b0.pinv);
    if (n1 && n2) m.set_diff({i0 + 1, j0}, b2.p * d2 * b1.pinv);
    return m;
}

// --- structured module fixtures ---------------------------------------------

int popcount(unsigned x) { return std::popcount(x); }

int sign_before(unsigned lam, unsigned l) {
    return popcount(lam & ((1u << l) - 1u)) % 2 == 0 ? 1 : -1;
}

/// The free rank-one module T over itself, truncated to internal degrees
/// <= jmax (a quotient module: both kinds of generators raise the internal
/// degree).
DgModule free_truncated(const DualityContext& ctx, int jmax) {
    const std::size_t nxi = ctx.xi_basis().size();
    const std::size_t nf = ctx.pair().f2_basis.size();
    const Mat& c = ctx.pairing();

    using Key = std::pair<unsigned, std::vector<int>>;  // (xi subset, u exponents)
    std::map<Bidegree, std::vector<Key>> basis;
    for (unsigned lam = 0; lam < (1u << nxi); ++lam) {
        const int p = popcount(lam);
        for (int t = 0; 2 * (p + t) <= jmax; ++t)
            for (const auto& mu : multi_indices(static_cast<int>(nf), t))
                basis[{-p, 2 * (p + t)}].push_back({lam, mu});
    }
    std::map<Key, std::pair<Bidegree, int>> index;
    for (auto& [bd, keys] : basis) {
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = {bd, static_cast<int>(i)};
    }

    DgModule m(ctx.T());
    for (const auto& [bd, keys] : basis) m.set_component(bd, static_cast<int>(keys.size()));

    auto add_block = [&](std::map<Bidegree, Mat>& store, Bidegree src, int si, const Key& tgt,
                         const Rat& coeff) {
        if (coeff == 0) return;
        auto it = index.find(tgt);
        if (it == index.end()) return;  // truncated away
        auto jt = store.find(src);
        if (jt == store.end())
            jt = store.emplace(src, Mat::zero(m.dim(it->second.first), m.dim(src))).first;
        jt->second(it->second.second, si) += coeff;
    };

    std::map<Bidegree, Mat> diff_blocks;
    std::vector<std::map<Bidegree, Mat>> act_blocks(nxi + nf);
    for (const auto& [bd, keys] : basis) {
        for (std::size_t si = 0; si < keys.size(); ++si) {
            const auto& [lam, mu] = keys[si];
            // d(xi^lam u^mu) from d(xi_k) = sum_l c(k,l) u_l
            for (unsigned k = 0; k < nxi; ++k) {
                if (!(lam & (1u << k))) continue;
                for (std::size_t l = 0; l < nf; ++l) {
                    if (c(k, l) == 0) continue;
                    Key tgt{lam & ~(1u << k), mu};
                    tgt.second[l] += 1;
                    add_block(diff_blocks, bd, static_cast<int>(si), tgt,
                              Rat(sign_before(lam, k)) * c(k, l));
                }
            }
            for (unsigned k = 0; k < nxi; ++k) {
                if (lam & (1u << k)) continue;
                add_block(act_blocks[k], bd, static_cast<int>(si), {lam | (1u << k), mu},
                          Rat(sign_before(lam, k)));
            }
            for (std::size_t l = 0; l < nf; ++l) {
                Key tgt{lam, mu};
                tgt.second[l] += 1;
                add_block(act_blocks[nxi + l], bd, static_cast<int>(si), tgt, Rat(1));
            }
        }
    }
    for (auto& [bd, mat] : diff_blocks) m.set_diff(bd, std::move(mat));
    for (std::size_t g = 0; g < nxi + nf; ++g)
        for (auto& [bd, mat] : act_blocks[g]) m.set_action(g, bd, std::move(mat));
    m.set_window({Window::kNegInf, jmax + 1});
    return m;
}

/// Exterior algebra of the odd generators tensored with a random two-term
/// complex; polynomial generators act by zero.
DgModule exterior_free(Rng& rng, const DualityContext& ctx) {
    const std::size_t nxi = ctx.xi_basis().size();
    const std::size_t nf = ctx.pair().f2_basis.size();
    const int i0 = static_cast<int>(rand_range(rng, -1, 1));
    const int j0 = 2 * static_cast<int>(rand_range(rng, 0, 1));
    const int c0 = 1 + static_cast<int>(rand_below(rng, 2));
    const int c1 = 1 + static_cast<int>(rand_below(rng, 2));
    Mat d(c1, c0);
    for (int i = 0; i < c1; ++i)
        for (int j = 0; j < c0; ++j) d(i, j) = Rat(rand_range(rng, -1, 1));

    // basis of the lam-component: strand index within {0 -> 1}
    auto bid = [&](unsigned lam, int which) {
        const int p = popcount(lam);
        return Bidegree{i0 + which - p, j0 + 2 * p};
    };
    // subsets with equal popcount share a bidegree; order them by value
    std::map<Bidegree, std::vector<std::pair<unsigned, int>>> layout;  // (lam, which)
    for (unsigned lam = 0; lam < (1u << nxi); ++lam)
        for (int which = 0; which < 2; ++which) layout[bid(lam, which)].push_back({lam, which});
    std::map<std::pair<unsigned, int>, int> offset;  // first basis slot of (lam, which)
    DgModule m(ctx.T());
    for (auto& [bd, slots] : layout) {
        std::sort(slots.begin(), slots.end());
        int total = 0;
        for (const auto& s : slots) {
            offset[s] = total;
            total += s.second == 0 ? c0 : c1;
        }
        m.set_component(bd, total);
    }
    auto size_of = [&](int which) { return which == 0 ? c0 : c1; };
    std::map<Bidegree, Mat> diff_blocks;
    std::vector<std::map<Bidegree, Mat>> act_blocks(nxi + nf);
    auto block = [&](std::map<Bidegree, Mat>& store, Bidegree src, Bidegree dst) -> Mat& {
        auto it = store.find(src);
        if (it == store.end()) it = store.emplace(src, Mat::zero(m.dim(dst), m.dim(src))).first;
        return it->second;
    };
    for (unsigned lam = 0; lam < (1u << nxi); ++lam) {
        const int p = popcount(lam);
        // differential: (-1)^p d on each exterior layer
        Bidegree src = bid(lam, 0), dst = bid(lam, 1);
        Mat& dm = block(diff_blocks, src, dst);
        for (int i = 0; i < c1; ++i)
            for (int j = 0; j < c0; ++j)
                dm(offset[{lam, 1}] + i, offset[{lam, 0}] + j) =
                    (p % 2 == 0 ? d(i, j) : -d(i, j));
        // xi_k: wedge on the left
        for (unsigned k = 0; k < nxi; ++k) {
            if (lam & (1u << k)) continue;
            const unsigned tgt = lam | (1u << k);
            for (int which = 0; which < 2; ++which) {
                Bidegree s = bid(lam, which), t = bid(tgt, which);
                Mat& am = block(act_blocks[k], s, t);
                for (int i = 0; i < size_of(which); ++i)
                    am(offset[{tgt, which}] + i, offset[{lam, which}] + i) =
                        Rat(sign_before(lam, k));
            }
        }
    }
    for (auto& [bd, mat] : diff_blocks)
        if (!mat.is_zero()) m.set_diff(bd, std::move(mat));
    for (std::size_t g = 0; g < nxi; ++g)
        for (auto& [bd, mat] : act_blocks[g]) m.set_action(g, bd, std::move(mat));
    return m;
}

}  // namespace

// --- random object generators -----------------------------------------------

HeckeElt random_hecke_elt(Rng& rng, const HeckeAlgebra& h, int weight_bound, int max_terms) {
    const int rank = h.datum().rank();
    const auto& elts = h.datum().all_elements();
    HeckeElt e;
    const int terms = 1 + static_cast<int>(rand_below(rng, std::max(1, max_terms)));
    for (int t = 0; t < terms; ++t) {
        Weight x(rank);
        for (int i = 0; i < rank; ++i) x[i] = rand_range(rng, -weight_bound, weight_bound);
        const WeylElt& w = elts[rand_below(rng, elts.size())];
        LaurentPoly c;
        const int cterms = 1 + static_cast<int>(rand_below(rng, 2));
        for (int k = 0; k < cterms; ++k) {
            long long coeff = rand_range(rng, -3, 3);
            if (coeff == 0) coeff = 1;
            c += LaurentPoly::term(coeff, static_cast<int>(rand_range(rng, -2, 2)));
        }
        e += c * HeckeElt::monomial(x, w);
    }
    if (e.is_zero()) e = h.one();
    return e;
}

std::vector<Vec> random_subspace(Rng& rng, int n, int dim) {
    if (dim == 0) return {};
    for (;;) {
        std::vector<Vec> vecs;
        for (int k = 0; k < dim; ++k) {
            Vec v(n);
            for (int i = 0; i < n; ++i) v[i] = Rat(rand_range(rng, -2, 2));
            vecs.push_back(std::move(v));
        }
        if (from_columns(vecs, static_cast<std::size_t>(n)).rank() ==
            static_cast<std::size_t>(dim))
            return vecs;
    }
}

DgModule random_complex(Rng& rng, KoszulAlgebraPtr algebra, int max_positions) {
    const int strands = 1 + static_cast<int>(rand_below(rng, max_positions >= 6 ? 2 : 1));
    DgModule out = random_strand(rng, algebra);
    for (int s = 1; s < strands; ++s) out = direct_sum(out, random_strand(rng, algebra));
    return out;
}

DgModule random_t_module(Rng& rng, const DualityContext& ctx) {
    const std::size_t gens = ctx.T()->num_gens();
    const bool big = gens >= 4;  // keep transforms tractable in high rank
    const int pieces = big ? 1 : 1 + static_cast<int>(rand_below(rng, 2));
    DgModule out;
    for (int piece = 0; piece < pieces; ++piece) {
        DgModule m;
        const int kind = static_cast<int>(rand_below(rng, 4));
        if (big || kind == 0) {
            m = skyscraper(ctx.T(), {static_cast<int>(rand_range(rng, -2, 2)),
                                     2 * static_cast<int>(rand_range(rng, 0, 2))});
        } else if (kind == 1) {
            m = random_complex(rng, ctx.T(), 3);
        } else if (kind == 2 && !ctx.T()->ext_gens().empty()) {
            m = exterior_free(rng, ctx);
        } else {
            m = free_truncated(ctx, 2 + 2 * static_cast<int>(rand_below(rng, 2)));
        }
        if (rand_below(rng, 2) == 0)
            m = m.shift(static_cast<int>(rand_range(rng, -1, 1)),
                        2 * static_cast<int>(rand_range(rng, -1, 1)));
        out = piece == 0 ? m : direct_sum(out, m);
    }
    return out;
}

DgModule random_conv_module(Rng& rng, const ConvolutionContext& ctx, bool small) {
    const int pieces = small ? 1 : 1 + static_cast<int>(rand_below(rng, 2));
    DgModule out;
    for (int piece = 0; piece < pieces; ++piece) {
        DgModule m;
        const int kind = static_cast<int>(rand_below(rng, small ? 2u : 3u));
        if (kind == 0) {
            m = skyscraper(ctx.A(), {static_cast<int>(rand_range(rng, -1, 1)),
                                     2 * static_cast<int>(rand_below(rng, small ? 2u : 3u))});
        } else if (kind == 1) {
            const int i0 = static_cast<int>(rand_range(rng, -1, 0));
            const int j0 = 2 * static_cast<int>(rand_below(rng, 2));
            const int c0 = 1, c1 = 1 + static_cast<int>(rand_below(rng, 2));
            Mat d(c1, c0);
            for (int i = 0; i < c1; ++i) d(i, 0) = Rat(rand_range(rng, -1, 1));
            m = DgModule(ctx.A());
            m.set_component({i0, j0}, c0);
            m.set_component({i0 + 1, j0}, c1);
            m.set_diff({i0, j0}, d);
        } else {
            m = twist_by_character(unit(ctx), 2 * static_cast<int>(rand_below(rng, 2)))
                    .shift(static_cast<int>(rand_range(rng, -1, 1)), 0);
        }
        out = piece == 0 ? m : direct_sum(out, m);
    }
    return out;
}

// --- hecke suite --------------------------------------------------------------

AlgebraMorphismSpec parse_spec_override(const HeckeAlgebra& h, const std::string& text) {
    const auto arrow = text.find("->");
    if (arrow == std::string::npos)
        throw std::invalid_argument("override must have the form T-><expr>");
    if (trim(text.substr(0, arrow)) != "T")
        throw std::invalid_argument("only overrides of the T generator images are supported");
    const std::string rhs = trim(text.substr(arrow + 2));
    AlgebraMorphismSpec spec = h.identity_spec();
    for (int i = 1; i <= h.datum().rank(); ++i) {
        std::string inst;
        for (std::size_t k = 0; k < rhs.size(); ++k) {
            const bool bare_t =
                rhs[k] == 'T' && (k + 1 >= rhs.size() || (rhs[k + 1] != '[' && !std::isalnum(static_cast<unsigned char>(rhs[k + 1])))) &&
                (k == 0 || (!std::isalnum(static_cast<unsigned char>(rhs[k - 1])) && rhs[k - 1] != '_'));
            if (bare_t)
                inst += "T[" + std::to_string(i) + "]";
            else
                inst += rhs[k];
        }
        spec.image_of_T[i] = eval_expr(parse_hecke_expr(inst, h.datum()), h);
    }
    return spec;
}

namespace {

std::string relation_family(const std::string& name) {
    const auto sp = name.find(' ');
    return sp == std::string::npos ? name : name.substr(0, sp);
}

}  // namespace

Report run_hecke_suite(const HeckeSuiteParams& p) {
    Report r;
    r.suite = "hecke";
    r.seed = p.seed;
    r.params["type"] = p.type;
    r.params["weight_bound"] = std::to_string(p.weight_bound);
    r.params["trials"] = std::to_string(p.trials);
    const RootDatum& d = RootDatum::from_label(p.type);
    HeckeAlgebra h(d);

    if (!p.spec_override.empty()) {
        r.params["spec"] = p.spec_override;
        AlgebraMorphismSpec spec = parse_spec_override(h, p.spec_override);
        std::map<std::string, Agg> fam;
        for (const auto& c : h.verify_relations(spec, p.weight_bound))
            fam[relation_family(c.name)].note(c.pass, c.name + ": " + c.witness);
        for (const auto& [f, a] : fam)
            finish(r, "override satisfies the defining relations " + f, a);
        return r;
    }

    {
        std::map<std::string, Agg> fam;
        for (const auto& c : h.verify_relations(h.k_im_spec(), p.weight_bound))
            fam[relation_family(c.name)].note(c.pass, c.name + ": " + c.witness);
        for (const auto& [f, a] : fam)
            finish(r, "duality images satisfy the defining relations " + f, a);
    }

    const LaurentPoly vv = LaurentPoly::v(1) - LaurentPoly::v(-1);
    Agg timg, thimg, talpha;
    for (int i = 1; i <= d.rank(); ++i) {
        HeckeElt expected = h.t_generator(i) - vv * h.one();
        timg.note(h.k_im(h.t_generator(i)) == expected, "index " + std::to_string(i));
        // both closed forms of the image of t_alpha
        HeckeElt lhs = h.k_im(h.t_alpha(i));
        HeckeElt rhs1 = -h.t_alpha(i) + (LaurentPoly::v(2) - LaurentPoly::one()) * h.one();
        HeckeElt rhs2 = LaurentPoly::term(-1, 2) *
                        (LaurentPoly::v(-1) * h.t_generator_inverse(i));
        talpha.note(lhs == rhs1 && rhs1 == rhs2, "index " + std::to_string(i));
    }
    finish(r, "duality sends T to T - v + v^-1", timg);
    finish(r, "duality sends t_alpha to -q t_alpha^-1", talpha);

    // theta images and the involution laws, on a monomial box
    const int inv_bound = std::min(p.weight_bound, 2);
    Agg invol;
    {
        Weight cur(d.rank(), -inv_bound);
        bool done = false;
        while (!done) {
            thimg.note(h.k_im(h.theta(cur)) == h.theta(weight_neg(cur)), render_weight(cur));
            for (const auto& w : d.all_elements()) {
                HeckeElt m = HeckeElt::monomial(cur, w);
                bool ok = h.im(h.im(m)) == m && h.iota(h.iota(m)) == m &&
                          h.k_im(h.k_im(m)) == m && h.im(h.iota(m)) == h.iota(h.im(m));
                invol.note(ok, "theta" + render_weight(cur) + " T_w, l(w)=" +
                                   std::to_string(w.length()));
            }
            int i = d.rank() - 1;
            while (i >= 0 && cur[i] == inv_bound) cur[i--] = -inv_bound;
            if (i < 0)
                done = true;
            else
                ++cur[i];
        }
    }
    finish(r, "duality sends theta_x to theta_-x", thimg);
    finish(r, "the three dualities are commuting involutions on monomials", invol);

    // multiplicativity on random pairs
    Rng rng(p.seed);
    Agg multk, multim;
    for (int t = 0; t < p.trials; ++t) {
        HeckeElt a = random_hecke_elt(rng, h, p.weight_bound, 2);
        HeckeElt b = random_hecke_elt(rng, h, p.weight_bound, 2);
        multk.note(h.k_im(h.mul(a, b)) == h.mul(h.k_im(a), h.k_im(b)),
                   "a = " + a.to_string() + ", b = " + b.to_string());
        multim.note(h.im(h.mul(a, b)) == h.mul(h.im(a), h.im(b)),
                    "a = " + a.to_string() + ", b = " + b.to_string());
    }
    finish(r, "duality is multiplicative on random products", multk);
    finish(r, "the bar involution is multiplicative on random products", multim);

    // the morphism does not depend on the chosen reduced word
    Agg words;
    for (const auto& w : d.all_elements()) {
        if (w.length() < 2) continue;
        HeckeElt expected = h.k_im(HeckeElt::monomial(Weight(d.rank(), 0), w));
        for (const auto& rw : d.reduced_words(w)) {
            HeckeElt prod = h.one();
            for (int i : rw) prod = h.mul(prod, h.k_im(h.t_generator(i)));
            words.note(prod == expected, "word length " + std::to_string(rw.size()));
        }
    }
    if (d.rank() >= 2) finish(r, "generator images are independent of the reduced word", words);

    // text rendering round-trips through the parser
    Agg roundtrip;
    for (int t = 0; t < std::max(10, p.trials / 4); ++t) {
        HeckeElt e = random_hecke_elt(rng, h, p.weight_bound, 3);
        bool ok = false;
        std::string why;
        try {
            ok = eval_expr(parse_hecke_expr(e.to_string(), d), h) == e;
            if (!ok) why = e.to_string();
        } catch (const std::exception& ex) {
            why = std::string(ex.what()) + " on " + e.to_string();
        }
        roundtrip.note(ok, why);
    }
    finish(r, "rendered elements parse back to themselves", roundtrip);

    return r;
}

// --- koszul suite ---------------------------------------------------------------

Report run_koszul_suite(const KoszulSuiteParams& p) {
    Report r;
    r.suite = "koszul";
    r.seed = p.seed;
    r.params["dim"] = std::to_string(p.dim);
    r.params["trials"] = std::to_string(p.trials);
    r.params["window"] = std::to_string(p.window_lo) + "," + std::to_string(p.window_hi);

    Rng rng(p.seed);
    Agg valid, kvalid, shifts, dd, additive, acyclic, euler_shadow, euler_cone, euler_shift;

    static const int shift_grid[][2] = {{1, 0}, {0, 1}, {-1, 2}, {2, -1}, {-2, -2}};

    for (int trial = 0; trial < p.trials; ++trial) {
        const int n = 1 + static_cast<int>(rand_below(rng, std::max(1, p.dim)));
        SubspacePair pair;
        pair.ambient_dim = n;
        pair.f1_basis = random_subspace(rng, n, static_cast<int>(rand_below(rng, n + 1)));
        pair.f2_basis = random_subspace(rng, n, static_cast<int>(rand_below(rng, n + 1)));
        // clamp the materialization so exact ranks stay cheap in high rank
        Window w{std::max(p.window_lo, -(10 - 2 * n)), p.window_hi};
        DualityContext ctx(pair, w);

        DgModule m = random_t_module(rng, ctx);
        valid.note_error(m.validate());

        DgModule k = kappa(ctx, m);
        kvalid.note_error(k.validate());

        // grading: kappa(M[a]<b>) = kappa(M)[b-a]<-b> on cohomology
        const auto& g = shift_grid[trial % 5];
        {
            DgModule lhs = kappa(ctx, m.shift(g[0], g[1]));
            DgModule rhs = k.shift(g[1] - g[0], -g[1]);
            Window cmp = lhs.window().intersect(rhs.window());
            BigradedDims hl = lhs.cohomology(), hr = rhs.cohomology();
            shifts.note(dims_equal_within(hl, hr, cmp),
                        "shift [" + std::to_string(g[0]) + "]<" + std::to_string(g[1]) + ">: " +
                            dims_witness(hl, hr));
        }

        // double duality, over the dual context (size-gated)
        if (total_dim(k) <= 400) {
            DualityContext ctxd = ctx.dual();
            DgModule k2 = kappa(ctxd, as_dual_input(ctxd, k));
            DgModule back = as_dual_input(ctxd.dual(), k2);
            Window cmp = back.window().intersect(m.window());
            BigradedDims hb = back.cohomology(), hm = m.cohomology();
            dd.note(dims_equal_within(hb, hm, cmp), dims_witness(hb, hm));
        }

        // additivity on direct sums
        {
            DgModule m2 = skyscraper(ctx.T(), {static_cast<int>(rand_range(rng, -1, 1)),
                                               2 * static_cast<int>(rand_below(rng, 2))});
            DgModule ks = kappa(ctx, direct_sum(m, m2));
            BigradedDims expect = dims_sum(k.cohomology(), kappa(ctx, m2).cohomology());
            Window cmp = ks.window().intersect(k.window());
            additive.note(dims_equal_within(ks.cohomology(), expect, cmp),
                          dims_witness(ks.cohomology(), expect));
        }

        // acyclic input -> acyclic output
        {
            std::map<Bidegree, Mat> id;
            for (const auto& [bd, dim] : m.components()) id[bd] = Mat::identity(dim);
            DgModule c = cone(m, m, id);
            DgModule kc = kappa(ctx, c);
            BigradedDims hk = kc.cohomology();
            bool ok = true;
            for (const auto& [bd, dim] : hk)
                if (dim != 0 && kc.window().contains(bd.i)) ok = false;
            acyclic.note(ok, dims_to_string(hk));
        }

        // Euler classes
        {
            DgModule e = random_complex(rng, ctx.T(), 6);
            euler_shadow.note(e.euler_class() == cohomology_module(e).euler_class(),
                              e.euler_class().to_string());
            DgModule e2 = random_complex(rng, ctx.T(), 3);
            DgModule c = cone(e, e2, {});
            euler_cone.note(c.euler_class() == e2.euler_class() - e.euler_class(),
                            c.euler_class().to_string());
            const int a = static_cast<int>(rand_range(rng, -2, 2));
            const int b = static_cast<int>(rand_range(rng, -2, 2));
            LaurentPoly expect = LaurentPoly::term(a % 2 == 0 ? 1 : -1, b) * e.euler_class();
            euler_shift.note(e.shift(a, b).euler_class() == expect,
                             "[" + std::to_string(a) + "]<" + std::to_string(b) + ">");
        }
    }

    finish(r, "random inputs are valid dg-modules", valid);
    finish(r, "the duality functor outputs valid dg-modules", kvalid);
    finish(r, "the duality functor intertwines shifts and twists on cohomology", shifts);
    finish(r, "applying the duality functor twice recovers cohomology", dd);
    finish(r, "the duality functor is additive on direct sums", additive);
    finish(r, "the duality functor sends acyclic modules to acyclic modules", acyclic);
    finish(r, "euler classes agree with the cohomology shadow", euler_shadow);
    finish(r, "euler classes are alternating on cones", euler_cone);
    finish(r, "euler classes transform correctly under shifts", euler_shift);

    // sign controls on a context where the twist terms genuinely interact
    {
        SubspacePair pair;
        pair.ambient_dim = 1;
        pair.f2_basis = {{Rat(1)}};
        DualityContext ctx(pair, {-4, 4});
        DgModule m = free_truncated(ctx, 4);
        DgModule good = koszul_transform(ctx, m, -4, false);
        r.add("the transform differential squares to zero on a free module", !good.validate(),
              good.validate() ? *good.validate() : "");
        DgModule bad = koszul_transform(ctx, m, -4, true);
        r.add("the sign-perturbed transform is rejected", bad.validate().has_value(),
              "perturbed differential still squares to zero");
    }

    return r;
}

// --- convolution suite -----------------------------------------------------------

Report run_convolution_suite(const ConvolutionSuiteParams& p) {
    Report r;
    r.suite = "convolution";
    r.seed = p.seed;
    r.params["dim"] = std::to_string(p.dim);
    r.params["fdim"] = p.fdim < 0 ? "all" : std::to_string(p.fdim);
    r.params["trials"] = std::to_string(p.trials);
    r.params["window"] = std::to_string(p.window_lo) + "," + std::to_string(p.window_hi);

    Rng rng(p.seed);
    Agg unit_valid, conv_valid, fk_valid, unit_left, unit_right, assoc, compat, unit_dual,
        twist_comp, twist_dual;
    int full_subspace_trials = 0;  // F = V degenerates the exterior action; flagged

    for (int trial = 0; trial < p.trials; ++trial) {
        const int n = 1 + static_cast<int>(rand_below(rng, std::max(1, p.dim)));
        const int f = p.fdim >= 0 ? std::min(p.fdim, n)
                                  : static_cast<int>(rand_below(rng, n + 1));
        if (f == n) ++full_subspace_trials;
        Window w{p.window_lo, p.window_hi};
        if (n >= 2) w = w.intersect({-4, 6});  // keep exact ranks cheap
        ConvolutionContext ctx(n, random_subspace(rng, n, f), w);
        ConvolutionContext ctxd = ctx.dual();

        DgModule u = unit(ctx);
        unit_valid.note_error(u.validate());

        DgModule a = random_conv_module(rng, ctx, true);
        DgModule b = random_conv_module(rng, ctx, true);
        DgModule ab = convolve(ctx, a, b);
        conv_valid.note_error(ab.validate());

        {
            DgModule ua = convolve(ctx, u, a);
            DgModule au = convolve(ctx, a, u);
            BigradedDims ha = a.cohomology();
            unit_left.note(
                dims_equal_within(ua.cohomology(), ha, ua.window().intersect(a.window())),
                dims_witness(ua.cohomology(), ha));
            unit_right.note(
                dims_equal_within(au.cohomology(), ha, au.window().intersect(a.window())),
                dims_witness(au.cohomology(), ha));
        }

        {
            DgModule c = random_conv_module(rng, ctx, true);
            DgModule lhs = convolve(ctx, ab, c);
            DgModule rhs = convolve(ctx, a, convolve(ctx, b, c));
            Window cmp = lhs.window().intersect(rhs.window());
            assoc.note(dims_equal_within(lhs.cohomology(), rhs.cohomology(), cmp),
                       dims_witness(lhs.cohomology(), rhs.cohomology()));
        }

        DgModule ka = frak_K(ctx, ctxd, a);
        fk_valid.note_error(ka.validate());

        if (total_dim(ka) <= 120) {
            DgModule kb = frak_K(ctx, ctxd, b);
            if (total_dim(kb) <= 120) {
                DgModule lhs = frak_K(ctx, ctxd, ab);
                DgModule rhs = convolve(ctxd, ka, kb);
                Window cmp = lhs.window().intersect(rhs.window());
                compat.note(dims_equal_within(lhs.cohomology(), rhs.cohomology(), cmp),
                            dims_witness(lhs.cohomology(), rhs.cohomology()));
            }
        }

        {
            DgModule ku = frak_K(ctx, ctxd, u);
            DgModule ud = unit(ctxd);
            Window cmp = ku.window().intersect(ud.window());
            unit_dual.note(dims_equal_within(ku.cohomology(), ud.cohomology(), cmp),
                           dims_witness(ku.cohomology(), ud.cohomology()));
        }

        {
            DgModule t1 = twist_by_character(twist_by_character(a, 2), 4);
            DgModule t2 = twist_by_character(a, 6);
            twist_comp.note(t1.components() == t2.components() &&
                                t1.cohomology() == t2.cohomology(),
                            dims_witness(t1.cohomology(), t2.cohomology()));
        }

        {
            const int amount = 2 * static_cast<int>(rand_below(rng, 2));
            DgModule lhs = frak_K(ctx, ctxd, twist_by_character(a, amount));
            DgModule rhs = ka.shift(amount, amount);
            Window cmp = lhs.window().intersect(rhs.window());
            twist_dual.note(dims_equal_within(lhs.cohomology(), rhs.cohomology(), cmp),
                            "amount " + std::to_string(amount) + ": " +
                                dims_witness(lhs.cohomology(), rhs.cohomology()));
        }
    }

    r.params["f_equals_v_trials"] = std::to_string(full_subspace_trials);

    finish(r, "the unit is a valid dg-module", unit_valid);
    finish(r, "convolution outputs are valid dg-modules", conv_valid);
    finish(r, "the duality functor outputs valid dg-modules", fk_valid);
    finish(r, "the unit is a left identity on cohomology", unit_left);
    finish(r, "the unit is a right identity on cohomology", unit_right);
    finish(r, "convolution is associative on cohomology", assoc);
    finish(r, "duality is compatible with convolution", compat);
    finish(r, "duality sends the unit to the dual unit", unit_dual);
    finish(r, "character twists compose additively", twist_comp);
    finish(r, "duality intertwines character twists with shifts", twist_dual);

    return r;
}

}  // namespace lkd
