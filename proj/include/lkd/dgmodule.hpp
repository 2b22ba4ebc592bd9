#pragma once

#include "lkd/laurent.hpp"
#include "lkd/linalg.hpp"

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lkd {

/// (cohomological degree, internal degree)
struct Bidegree {
    int c = 0;
    int i = 0;
    friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.c + b.c, a.i + b.i}; }
    auto operator<=>(const Bidegree&) const = default;
};

/// Internal-degree interval on which a (possibly truncated) module agrees
/// with the module it models. Sentinels mean unbounded.
struct Window {
    static constexpr int kNegInf = std::numeric_limits<int>::min();
    static constexpr int kPosInf = std::numeric_limits<int>::max();
    int lo = kNegInf;
    int hi = kPosInf;

    static Window all() { return {}; }
    Window negated() const {
        return {hi == kPosInf ? kNegInf : -hi, lo == kNegInf ? kPosInf : -lo};
    }
    Window shifted(int m) const {
        return {lo == kNegInf ? kNegInf : lo + m, hi == kPosInf ? kPosInf : hi + m};
    }
    Window intersect(Window o) const { return {std::max(lo, o.lo), std::min(hi, o.hi)}; }
    bool contains(int j) const { return lo <= j && j <= hi; }
};

/// Koszul-type dg-algebra presented by odd (exterior) and even (polynomial)
/// generators with a linear differential from the odd ones into the even
/// ones. Generators carry bidegrees; the differential has bidegree (1,0).
struct KoszulGenerator {
    std::string name;
    Bidegree deg;
    bool odd;  // exterior generator (odd cohomological degree)
};

class KoszulAlgebra {
public:
    KoszulAlgebra() = default;
    /// diff(k, l) = coefficient of sym generator k in d(ext generator l).
    KoszulAlgebra(std::vector<KoszulGenerator> ext, std::vector<KoszulGenerator> sym, Mat diff);

    const std::vector<KoszulGenerator>& ext_gens() const { return ext_; }
    const std::vector<KoszulGenerator>& sym_gens() const { return sym_; }
    std::size_t num_gens() const { return ext_.size() + sym_.size(); }

    /// Flat generator indexing: ext generators first, then sym generators.
    const KoszulGenerator& gen(std::size_t g) const {
        return g < ext_.size() ? ext_[g] : sym_[g - ext_.size()];
    }
    bool is_ext(std::size_t g) const { return g < ext_.size(); }
    /// d(ext g) = sum_k diff_coeff(k, g) * sym_k; zero columns for sym gens.
    const Mat& diff_on_ext() const { return diff_; }

private:
    std::vector<KoszulGenerator> ext_;
    std::vector<KoszulGenerator> sym_;
    Mat diff_;  // rows: sym gens, cols: ext gens
};

using KoszulAlgebraPtr = std::shared_ptr<const KoszulAlgebra>;

/// Cohomology fingerprint: bidegree -> dimension, zero entries omitted.
using BigradedDims = std::map<Bidegree, int>;

bool dims_equal_within(const BigradedDims& a, const BigradedDims& b, Window w);
std::string dims_to_string(const BigradedDims& d);

/// Finite-dimensional bigraded dg-module over a Koszul algebra. Immutable
/// in use: build with the setters, then treat as a value.
class DgModule {
public:
    DgModule() = default;
    explicit DgModule(KoszulAlgebraPtr algebra) : algebra_(std::move(algebra)) {}

    const KoszulAlgebraPtr& algebra() const { return algebra_; }

    void set_component(Bidegree b, int dim) {
        if (dim != 0) dims_[b] = dim;
    }
    int dim(Bidegree b) const {
        auto it = dims_.find(b);
        return it == dims_.end() ? 0 : it->second;
    }
    const std::map<Bidegree, int>& components() const { return dims_; }

    /// Differential block from b to b+(1,0).
    void set_diff(Bidegree b, Mat m);
    Mat diff(Bidegree b) const;

    /// Action block of generator g from b to b+deg(g).
    void set_action(std::size_t g, Bidegree b, Mat m);
    Mat action(std::size_t g, Bidegree b) const;

    Window window() const { return window_; }
    void set_window(Window w) { window_ = w; }

    /// Verifies d^2 = 0, the graded Leibniz rule for every generator, that
    /// exterior actions square to zero and that generator actions graded-
    /// commute. Returns an error description, or nullopt when valid.
    std::optional<std::string> validate() const;

    BigradedDims cohomology() const;
    LaurentPoly euler_class() const;

    /// M[n]<m>: component (i,j) of the result is M^{i+n}_{j-m}; the
    /// differential picks up (-1)^n and odd generator actions likewise.
    DgModule shift(int n, int m) const;

    friend DgModule direct_sum(const DgModule& a, const DgModule& b);

    std::string to_json() const;
    static DgModule from_json(const std::string& text, KoszulAlgebraPtr algebra);

private:
    KoszulAlgebraPtr algebra_;
    std::map<Bidegree, int> dims_;
    std::map<Bidegree, Mat> diff_;
    std::vector<std::map<Bidegree, Mat>> actions_;  // indexed by flat generator id
    Window window_;
};

/// Mapping cone of a chain map f: A -> B (blocks f[b]: A(b) -> B(b)).
/// Used by the Euler-class tests; f must commute with the differentials.
DgModule cone(const DgModule& a, const DgModule& b, const std::map<Bidegree, Mat>& f);

/// Module with the same algebra whose components are H(M) with zero
/// differential and zero generator actions (the associated-graded shadow
/// used by the Grothendieck-group tests).
DgModule cohomology_module(const DgModule& m);

}  // namespace lkd
