#include "lkd/hecke.hpp"

#include <cstdlib>
#include <sstream>

namespace lkd {

std::string render_weight(const Weight& x) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) os << ",";
        os << x[i];
    }
    os << "]";
    return os.str();
}

namespace {

std::string render_word(const std::vector<int>& w) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << "]";
    return os.str();
}

}  // namespace

std::string HeckeElt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool is_one = (c == LaurentPoly::one());
        if (!is_one) {
            const bool simple = c.terms().size() == 1 && c.terms().begin()->second > 0;
            if (simple)
                os << c.to_string() << " * ";
            else
                os << "(" << c.to_string() << ") * ";
        }
        os << "theta" << render_weight(key.first) << " * T" << render_word(key.second.word);
    }
    return os.str();
}

HeckeElt HeckeAlgebra::t_generator_inverse(int i) const {
    HeckeElt r = t_generator(i);
    r -= (LaurentPoly::v(1) - LaurentPoly::v(-1)) * one();
    return r;
}

// T_i theta_z = theta_{s_i z} T_i + (v - v^-1) * (theta-part), where the
// theta-part is the telescoping expansion of (theta_z - theta_{s_i z}) /
// (1 - theta_{-alpha_i}); k = <z, alpha_i^vee> determines its length.
HeckeElt HeckeAlgebra::commute_T_theta(int i, const Weight& z) const {
    HeckeElt r = HeckeElt::monomial(d_.reflect(i, z), d_.simple_reflection(i));
    const long long k = z[i - 1];
    const LaurentPoly q = LaurentPoly::v(1) - LaurentPoly::v(-1);
    const Weight alpha = d_.simple_root(i);
    if (k > 0) {
        Weight cur = z;
        for (long long j = 0; j < k; ++j) {
            r.add_term(cur, d_.identity(), q);
            cur = weight_add(cur, weight_neg(alpha));
        }
    } else if (k < 0) {
        Weight cur = weight_add(z, alpha);
        for (long long j = 0; j < -k; ++j) {
            r.add_term(cur, d_.identity(), -q);
            cur = weight_add(cur, alpha);
        }
    }
    return r;
}

HeckeElt HeckeAlgebra::lmul_T(int i, const HeckeElt& e) const {
    const LaurentPoly q = LaurentPoly::v(1) - LaurentPoly::v(-1);
    HeckeElt out;
    for (const auto& [key, c] : e.terms()) {
        const Weight& z = key.first;
        const WeylElt& p = key.second;
        // T_i theta_z T_p, term by term of the commutation
        const HeckeElt commuted = commute_T_theta(i, z);
        for (const auto& [key2, c2] : commuted.terms()) {
            const LaurentPoly coeff = c * c2;
            const WeylElt& mid = key2.second;  // e or s_i
            if (mid.length() == 0) {
                out.add_term(key2.first, p, coeff);
            } else {
                // T_i T_p
                WeylElt sip = d_.mul(mid, p);
                if (sip.length() > p.length()) {
                    out.add_term(key2.first, sip, coeff);
                } else {
                    out.add_term(key2.first, sip, coeff);
                    out.add_term(key2.first, p, q * coeff);
                }
            }
        }
    }
    return out;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
    HeckeElt out;
    for (const auto& [kb, cb] : b.terms()) {
        for (const auto& [ka, ca] : a.terms()) {
            const Weight& x = ka.first;
            const WeylElt& u = ka.second;
            // T_u (theta_y T_w): apply generators of u right-to-left
            HeckeElt cur = HeckeElt::monomial(kb.first, kb.second);
            for (auto it = u.word.rbegin(); it != u.word.rend(); ++it) cur = lmul_T(*it, cur);
            // prefix theta_x and the coefficient
            const LaurentPoly coeff = ca * cb;
            for (const auto& [kc, cc] : cur.terms())
                out.add_term(weight_add(x, kc.first), kc.second, coeff * cc);
        }
    }
    return out;
}

HeckeElt HeckeAlgebra::monomial_inverse(const Weight& x, const WeylElt& w) const {
    // (theta_x T_w)^-1 = T_w^-1 theta_{-x}; T_w^-1 = T_{s_ik}^-1 ... T_{s_i1}^-1
    HeckeElt inv = one();
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
        inv = mul(inv, t_generator_inverse(*it));
    return mul(inv, theta(weight_neg(x)));
}

AlgebraMorphismSpec HeckeAlgebra::identity_spec() const {
    AlgebraMorphismSpec s;
    for (int i = 1; i <= d_.rank(); ++i) s.image_of_T[i] = t_generator(i);
    for (int i = 1; i <= d_.rank(); ++i) {
        Weight w(d_.rank(), 0);
        w[i - 1] = 1;
        s.image_of_theta[{i, +1}] = theta(w);
        s.image_of_theta[{i, -1}] = theta(weight_neg(w));
    }
    return s;
}

AlgebraMorphismSpec HeckeAlgebra::im_spec() const {
    AlgebraMorphismSpec s;
    for (int i = 1; i <= d_.rank(); ++i) s.image_of_T[i] = -t_generator_inverse(i);
    for (int i = 1; i <= d_.rank(); ++i) {
        Weight w(d_.rank(), 0);
        w[i - 1] = 1;
        s.image_of_theta[{i, +1}] = theta(weight_neg(w));
        s.image_of_theta[{i, -1}] = theta(w);
    }
    return s;
}

AlgebraMorphismSpec HeckeAlgebra::iota_spec() const {
    AlgebraMorphismSpec s = identity_spec();
    for (int i = 1; i <= d_.rank(); ++i) s.image_of_T[i] = -t_generator(i);
    s.coefficient_twist = CoeffTwist::NegV;
    return s;
}

AlgebraMorphismSpec HeckeAlgebra::k_im_spec() const {
    AlgebraMorphismSpec s = im_spec();
    // iota(im(T)) = T - v + v^-1; iota(im(theta_x)) = theta_{-x}
    for (int i = 1; i <= d_.rank(); ++i) {
        HeckeElt img = t_generator(i);
        img -= (LaurentPoly::v(1) - LaurentPoly::v(-1)) * one();
        s.image_of_T[i] = img;
    }
    s.coefficient_twist = CoeffTwist::NegV;
    return s;
}

HeckeElt HeckeAlgebra::theta_image(const AlgebraMorphismSpec& spec, const Weight& x) const {
    HeckeElt r = one();
    for (int i = 1; i <= d_.rank(); ++i) {
        const long long c = x[i - 1];
        if (c == 0) continue;
        const int sign = c > 0 ? +1 : -1;
        auto it = spec.image_of_theta.find({i, sign});
        if (it == spec.image_of_theta.end())
            throw std::invalid_argument("morphism spec missing theta generator image");
        for (long long k = 0; k < std::llabs(c); ++k) r = mul(r, it->second);
    }
    return r;
}

HeckeElt HeckeAlgebra::apply_morphism(const AlgebraMorphismSpec& spec, const HeckeElt& a) const {
    HeckeElt out;
    for (const auto& [key, c] : a.terms()) {
        HeckeElt img = theta_image(spec, key.first);
        for (int i : key.second.word) {
            auto it = spec.image_of_T.find(i);
            if (it == spec.image_of_T.end())
                throw std::invalid_argument("morphism spec missing T generator image");
            img = mul(img, it->second);
        }
        const LaurentPoly cc =
            spec.coefficient_twist == CoeffTwist::NegV ? c.substitute_neg_v() : c;
        out += cc * img;
    }
    return out;
}

HeckeElt HeckeAlgebra::iota(const HeckeElt& a) const {
    HeckeElt out;
    for (const auto& [key, c] : a.terms()) {
        LaurentPoly cc = c.substitute_neg_v();
        if (key.second.length() % 2 == 1) cc = -cc;
        out.add_term(key.first, key.second, cc);
    }
    return out;
}

namespace {

/// All weights with |coords|_inf <= bound, in lexicographic order.
std::vector<Weight> weight_box(int rank, int bound) {
    std::vector<Weight> out;
    Weight cur(rank, -bound);
    while (true) {
        out.push_back(cur);
        int i = rank - 1;
        while (i >= 0 && cur[i] == bound) {
            cur[i] = -bound;
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

}  // namespace

std::vector<RelationCheck> HeckeAlgebra::verify_relations(const AlgebraMorphismSpec& spec,
                                                          int weight_bound) const {
    std::vector<RelationCheck> out;
    const int n = d_.rank();
    auto record = [&](std::string name, const HeckeElt& lhs, const HeckeElt& rhs) {
        HeckeElt diff = lhs - rhs;
        RelationCheck c;
        c.name = std::move(name);
        c.pass = diff.is_zero();
        if (!c.pass) c.witness = "lhs - rhs = " + diff.to_string();
        out.push_back(std::move(c));
    };

    std::vector<HeckeElt> timg(n + 1);
    for (int i = 1; i <= n; ++i) {
        auto it = spec.image_of_T.find(i);
        if (it == spec.image_of_T.end())
            throw std::invalid_argument("morphism spec missing T generator image");
        timg[i] = it->second;
    }

    // (i) braid relations
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const int m = d_.braid_order(i, j);
            HeckeElt lhs = one(), rhs = one();
            for (int k = 0; k < m; ++k) {
                lhs = mul(lhs, timg[k % 2 == 0 ? i : j]);
                rhs = mul(rhs, timg[k % 2 == 0 ? j : i]);
            }
            record("(i) braid(" + std::to_string(i) + "," + std::to_string(j) + ")", lhs, rhs);
        }

    // (ii) theta_0 = 1 via generator inverses, plus commutativity of the
    // theta generator images (needed for the multiplicative extension)
    for (int i = 1; i <= n; ++i) {
        Weight w(n, 0);
        w[i - 1] = 1;
        record("(ii) theta[" + std::to_string(i) + "] inverse",
               mul(theta_image(spec, w), theta_image(spec, weight_neg(w))), one());
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int si : {+1, -1})
                for (int sj : {+1, -1}) {
                    if (i == j && si >= sj) continue;
                    const HeckeElt& a = spec.image_of_theta.at({i, si});
                    const HeckeElt& b = spec.image_of_theta.at({j, sj});
                    record("(ii) theta gens commute (" + std::to_string(si * i) + "," +
                               std::to_string(sj * j) + ")",
                           mul(a, b), mul(b, a));
                }

    // (iii) theta_x theta_y = theta_{x+y}, exhaustively on the box
    const auto box = weight_box(n, weight_bound);
    for (const auto& x : box)
        for (const auto& y : box) {
            HeckeElt lhs = mul(theta_image(spec, x), theta_image(spec, y));
            HeckeElt rhs = theta_image(spec, weight_add(x, y));
            record("(iii) theta" + render_weight(x) + "*theta" + render_weight(y), lhs, rhs);
        }

    // (iv)/(v) commutation with T_alpha on fixed / reflected-by-alpha weights
    for (int i = 1; i <= n; ++i) {
        const Weight alpha = d_.simple_root(i);
        for (const auto& x : box) {
            const Weight sx = d_.reflect(i, x);
            if (sx == x) {
                record("(iv) T[" + std::to_string(i) + "] commutes with theta" + render_weight(x),
                       mul(timg[i], theta_image(spec, x)), mul(theta_image(spec, x), timg[i]));
            } else if (sx == weight_add(x, weight_neg(alpha))) {
                HeckeElt rhs = mul(mul(timg[i], theta_image(spec, sx)), timg[i]);
                record("(v) theta" + render_weight(x) + " = T theta T (alpha=" +
                           std::to_string(i) + ")",
                       theta_image(spec, x), rhs);
            }
        }
    }

    // (vi) quadratic relation; the only relation with explicit coefficients,
    // so it is the only one that sees a semilinear coefficient twist
    auto tw = [&](const LaurentPoly& c) {
        return spec.coefficient_twist == CoeffTwist::NegV ? c.substitute_neg_v() : c;
    };
    for (int i = 1; i <= n; ++i) {
        HeckeElt lhs = mul(timg[i] + tw(LaurentPoly::v(-1)) * one(),
                           timg[i] - tw(LaurentPoly::v(1)) * one());
        record("(vi) quadratic T[" + std::to_string(i) + "]", lhs, HeckeElt());
    }

    return out;
}

}  // namespace lkd
