#pragma once

#include "lkd/koszul.hpp"

namespace lkd {

/// Ambient V = Q^n with a subspace F, packaged as the duality context of
/// the pair (diagonal V, F x F) inside E = V x V. The algebra A acting on
/// convolution modules is T of that pair:
///   ext gens: xi_k = (eps_k, -eps_k), k = 1..n, at (-1,2)
///     (the anti-diagonal copy of V^dual), d(xi) = (xi|_F, -xi|_F)
///   sym gens: the dual basis of the F-basis, first copy then second copy,
///     at (0,2).
class ConvolutionContext {
public:
    ConvolutionContext(int v_dim, std::vector<Vec> f_basis, Window materialize);

    int v_dim() const { return n_; }
    const std::vector<Vec>& f_basis() const { return f_; }
    int f_dim() const { return static_cast<int>(f_.size()); }
    Window materialize() const { return window_; }

    const KoszulAlgebraPtr& A() const { return pair_ctx_->T(); }
    const DualityContext& pair_context() const { return *pair_ctx_; }

    /// The context for F^perp inside V^dual; frak_K lands over its algebra.
    ConvolutionContext dual() const;

    /// Basis of F^perp (the dual context's F).
    std::vector<Vec> f_perp_basis() const;

    /// Algebra with the internal degrees of A negated, for the optional
    /// grading inversion of frak_K.
    KoszulAlgebraPtr inverted_algebra() const;

private:
    int n_;
    std::vector<Vec> f_;
    Window window_;
    std::shared_ptr<DualityContext> pair_ctx_;
};

/// O of the diagonal copy of F: Sym(F^dual) in internal degrees 0,2,4,...
/// (truncated by the context window), both sym copies acting by the same
/// multiplication, ext generators acting by zero, zero differential.
DgModule unit(const ConvolutionContext& ctx);

/// M1 * M2: derived tensor over the middle Sym(F^dual) copy via the Koszul
/// resolution of the middle factor; exterior generators act by the
/// coproduct corrected by wedging with the resolution generators.
DgModule convolve(const ConvolutionContext& ctx, const DgModule& m1, const DgModule& m2);

/// The duality functor: kappa of the pair (F x F, diagonal V) applied to
/// the restriction of M along the quasi-isomorphism from that pair's T
/// into A, then re-identified (internal flip + one sym copy negated) as a
/// module over dual_ctx.A(). dual_ctx must be ctx.dual(). With
/// invert_internal the extra grading inversion j -> -j is applied and the
/// result lives over dual_ctx.inverted_algebra().
DgModule frak_K(const ConvolutionContext& ctx, const ConvolutionContext& dual_ctx,
                const DgModule& m, bool invert_internal = false);

/// M<m>.
DgModule twist_by_character(const DgModule& m, int amount);

}  // namespace lkd
