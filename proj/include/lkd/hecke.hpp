#pragma once

#include "lkd/laurent.hpp"
#include "lkd/rootdata.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lkd {

/// Element of the extended affine Hecke algebra in the Bernstein basis:
/// a finite sum of terms c_{x,w}(v) theta_x T_w keyed by (x, w).
class HeckeElt {
public:
    using Key = std::pair<Weight, WeylElt>;
    using Terms = std::map<Key, LaurentPoly>;

    HeckeElt() = default;

    static HeckeElt monomial(Weight x, WeylElt w, LaurentPoly c = LaurentPoly::one()) {
        HeckeElt e;
        e.add_term(std::move(x), std::move(w), std::move(c));
        return e;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const HeckeElt& o) const { return terms_ == o.terms_; }
    bool operator!=(const HeckeElt& o) const { return !(*this == o); }

    HeckeElt& operator+=(const HeckeElt& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    HeckeElt& operator-=(const HeckeElt& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
    friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
    friend HeckeElt operator-(const HeckeElt& a) {
        HeckeElt r;
        for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
        return r;
    }
    friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& a) {
        HeckeElt r;
        if (c.is_zero()) return r;
        for (const auto& [k, cc] : a.terms_) r.add_term(k.first, k.second, c * cc);
        return r;
    }

    void add_term(Weight x, WeylElt w, LaurentPoly c) {
        if (c.is_zero()) return;
        Key key{std::move(x), std::move(w)};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string to_string() const;

private:
    Terms terms_;
};

enum class CoeffTwist { Identity, NegV };

/// Generator images defining an algebra morphism candidate: images of the
/// T_alpha and of theta on +-fundamental weights, plus a coefficient twist.
struct AlgebraMorphismSpec {
    std::map<int, HeckeElt> image_of_T;                    // 1-based index -> image
    std::map<std::pair<int, int>, HeckeElt> image_of_theta;  // (index, sign) -> image
    CoeffTwist coefficient_twist = CoeffTwist::Identity;
};

struct RelationCheck {
    std::string name;
    bool pass;
    std::string witness;  // nonempty iff fail
};

/// The algebra H_aff attached to a root datum. All operations are pure.
class HeckeAlgebra {
public:
    explicit HeckeAlgebra(const RootDatum& datum) : d_(datum) {}

    const RootDatum& datum() const { return d_; }

    HeckeElt one() const { return theta(Weight(d_.rank(), 0)); }
    HeckeElt theta(const Weight& x) const {
        return HeckeElt::monomial(x, d_.identity());
    }
    /// Basis element theta_0 T_{s_i}.
    HeckeElt t_generator(int i) const {
        return HeckeElt::monomial(Weight(d_.rank(), 0), d_.simple_reflection(i));
    }
    /// t_alpha = v T_alpha.
    HeckeElt t_alpha(int i) const { return LaurentPoly::v(1) * t_generator(i); }
    /// T_alpha^-1 = T_alpha - (v - v^-1), from the quadratic relation.
    HeckeElt t_generator_inverse(int i) const;

    HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;

    /// Inverse of theta_x T_w (always invertible); general elements are not
    /// inverted.
    HeckeElt monomial_inverse(const Weight& x, const WeylElt& w) const;

    AlgebraMorphismSpec identity_spec() const;
    AlgebraMorphismSpec im_spec() const;
    AlgebraMorphismSpec iota_spec() const;
    AlgebraMorphismSpec k_im_spec() const;

    /// Extends generator images along the canonical factorization of each
    /// basis monomial (canonical reduced word; +-fundamental weight powers).
    HeckeElt apply_morphism(const AlgebraMorphismSpec& spec, const HeckeElt& a) const;

    HeckeElt im(const HeckeElt& a) const { return apply_morphism(im_spec(), a); }
    /// Closed form: theta_x T_w -> (-1)^{l(w)} theta_x T_w with v -> -v.
    HeckeElt iota(const HeckeElt& a) const;
    HeckeElt k_im(const HeckeElt& a) const { return iota(im(a)); }

    /// Substitutes the spec's generator images into every defining relation
    /// instance with |x|_inf, |y|_inf <= weight_bound and reports each check.
    std::vector<RelationCheck> verify_relations(const AlgebraMorphismSpec& spec,
                                                int weight_bound) const;

private:
    // Left multiplication of a normal-form element by T_i.
    HeckeElt lmul_T(int i, const HeckeElt& e) const;
    // T_i theta_z in normal form (Bernstein-Lusztig commutation).
    HeckeElt commute_T_theta(int i, const Weight& z) const;
    HeckeElt theta_image(const AlgebraMorphismSpec& spec, const Weight& x) const;

    const RootDatum& d_;
};

std::string render_weight(const Weight& x);

}  // namespace lkd
