#pragma once

#include "lkd/convolution.hpp"
#include "lkd/hecke.hpp"
#include "lkd/report.hpp"

#include <random>

namespace lkd {

using Rng = std::mt19937_64;

/// rng() reduced to [0, n); avoids std::uniform_int_distribution so that
/// reports are bit-identical across standard libraries.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) { return rng() % n; }
inline long long rand_range(Rng& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

struct HeckeSuiteParams {
    std::string type = "A2";
    int weight_bound = 2;
    int trials = 200;
    std::uint64_t seed = 1;
    std::string spec_override;  // e.g. "T->T+1"; empty = the duality morphism
};

struct KoszulSuiteParams {
    int dim = 2;
    int trials = 25;
    std::uint64_t seed = 1;
    int window_lo = -10;
    int window_hi = 10;
};

struct ConvolutionSuiteParams {
    int dim = 1;
    int fdim = -1;  // -1: sweep all subspace dimensions
    int trials = 25;
    std::uint64_t seed = 1;
    int window_lo = -6;
    int window_hi = 6;
};

Report run_hecke_suite(const HeckeSuiteParams& p);
Report run_koszul_suite(const KoszulSuiteParams& p);
Report run_convolution_suite(const ConvolutionSuiteParams& p);

/// Parses a generator-image override like "T->T+1" (the right side is an
/// expression in v and T, instantiated at each simple reflection; theta
/// generators keep their duality images).
AlgebraMorphismSpec parse_spec_override(const HeckeAlgebra& h, const std::string& text);

// Deterministic random objects shared with the acceptance tests.
HeckeElt random_hecke_elt(Rng& rng, const HeckeAlgebra& h, int weight_bound, int max_terms);
/// Random subspace of Q^n of the given dimension (small integer entries).
std::vector<Vec> random_subspace(Rng& rng, int n, int dim);
/// Random complex with zero generator actions (elementary complexes
/// conjugated by random basis changes).
DgModule random_complex(Rng& rng, KoszulAlgebraPtr algebra, int max_positions);
/// Random module over T(ctx): direct sum of complexes, exterior-free
/// pieces and truncated polynomial pieces.
DgModule random_t_module(Rng& rng, const DualityContext& ctx);
/// Random convolution module: sums of skyscrapers and shifted units.
DgModule random_conv_module(Rng& rng, const ConvolutionContext& ctx, bool small);

}  // namespace lkd
