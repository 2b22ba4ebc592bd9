#pragma once

#include "lkd/dgmodule.hpp"

#include <string>
#include <vector>

namespace lkd {

using Vec = std::vector<Rat>;

/// A pair of subspaces F1, F2 of E = Q^n, each given by a basis.
struct SubspacePair {
    int ambient_dim = 0;
    std::vector<Vec> f1_basis;
    std::vector<Vec> f2_basis;
};

/// Holds the two Koszul presentations attached to a subspace pair:
///   T = Lambda(F1^perp) (x) Sym(F2^dual),   ext (-1,2), sym (0,2)
///   R = Lambda(F2) (x) Sym(E/F1),           ext (-1,-2), sym (0,-2)
/// together with compatible dual bases: the E/F1 basis is represented by
/// vectors ybar_reps dual to the chosen basis xi of F1^perp, and the
/// Sym(F2^dual) generators are dual to f2_basis. The differential of T sends
/// xi to its restriction to F2; the differential of R sends f in F2 to
/// minus its class in E/F1.
class DualityContext {
public:
    DualityContext(SubspacePair pair, Window materialize);
    /// Prescribed bases: xi must span F1^perp and ybar_reps must represent
    /// the dual basis of E/F1 (checked).
    DualityContext(SubspacePair pair, std::vector<Vec> xi_basis, std::vector<Vec> ybar_reps,
                   Window materialize);

    const SubspacePair& pair() const { return pair_; }
    Window materialize() const { return window_; }

    const KoszulAlgebraPtr& T() const { return t_; }
    const KoszulAlgebraPtr& R() const { return r_; }
    /// Transform target before regrading: same generators as R placed at
    /// (1,-2) and (2,-2).
    const KoszulAlgebraPtr& S() const { return s_; }

    const std::vector<Vec>& xi_basis() const { return xi_; }
    const std::vector<Vec>& ybar_reps() const { return ybar_; }
    /// pairing(k, l) = xi_k(f_l), the matrix behind both differentials.
    const Mat& pairing() const { return pairing_; }

    /// The pair (F2^perp, F1^perp) in E^dual; kappa over it inverts kappa.
    DualityContext dual() const;

private:
    void finish();

    SubspacePair pair_;
    Window window_;
    std::vector<Vec> xi_;
    std::vector<Vec> ybar_;
    Mat pairing_;
    KoszulAlgebraPtr t_, r_, s_;
};

/// Graded dual over T: component (i,j) is the dual of M^{-i}_{-j}, with
/// (d phi)(m) = -(-1)^{|phi|} phi(d m) and (g phi)(m) = (-1)^{|g||phi|} phi(g m).
DgModule dualize(const DualityContext& ctx, const DgModule& m);

/// Lambda(F2) (x) Sym(E/F1) (x) M with the twisted differential. Output is a
/// module over ctx.S(); components are materialized for internal degrees
/// >= jlo. With perturb_sign the second twist term enters with the wrong
/// sign (negative control: d^2 then fails).
DgModule koszul_transform(const DualityContext& ctx, const DgModule& m, int jlo,
                          bool perturb_sign = false);

/// (i,j) -> (i+j, j), turning an S-module into an R-module.
DgModule regrade(const DualityContext& ctx, const DgModule& m);

/// kappa = regrade o koszul_transform o dualize, materialized on
/// ctx.materialize().
DgModule kappa(const DualityContext& ctx, const DgModule& m);

/// Relabel a module over an algebra with the same generator count: optional
/// internal-degree flip j -> -j and per-generator sign twists on the
/// actions. Caller guarantees compatibility (validate() still checks).
DgModule transport(const DgModule& m, KoszulAlgebraPtr algebra, bool flip_internal,
                   const std::vector<Rat>& gen_signs);

/// Re-reads a module over R(ctx) as a module over T(ctx.dual()): internal
/// flip plus a sign on the polynomial generators (the two presentations
/// differ by the sign of the algebra differential). dual_ctx must be
/// ctx.dual() or share its generator bases.
DgModule as_dual_input(const DualityContext& dual_ctx, const DgModule& r_module);

/// Free rank-one module Q at a single bidegree, all actions zero.
DgModule skyscraper(KoszulAlgebraPtr algebra, Bidegree b);

/// All multi-indices over n variables of total degree t, in a fixed order.
std::vector<std::vector<int>> multi_indices(int n, int t);

}  // namespace lkd
