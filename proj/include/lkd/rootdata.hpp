#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lkd {

/// Weight in fundamental-weight coordinates.
using Weight = std::vector<long long>;

inline Weight weight_add(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Weight weight_neg(const Weight& a) {
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
inline bool weight_is_zero(const Weight& a) {
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

/// Weyl group element, stored as the canonical (lexicographically least)
/// reduced word of 1-based simple-reflection indices. Equality of group
/// elements is structural equality of words.
struct WeylElt {
    std::vector<int> word;

    bool operator==(const WeylElt& o) const { return word == o.word; }
    bool operator!=(const WeylElt& o) const { return word != o.word; }
    bool operator<(const WeylElt& o) const {
        if (word.size() != o.word.size()) return word.size() < o.word.size();
        return word < o.word;
    }
    std::size_t length() const { return word.size(); }
};

/// Finite root datum of rank <= 3 with precomputed Weyl group tables.
/// Cartan matrix convention: cartan[i][j] = <alpha_j, alpha_i^vee>, so the
/// simple root alpha_i has fundamental-weight coordinates cartan[.][i]
/// (column i) and <x, alpha_i^vee> = coords[i].
class RootDatum {
public:
    static const RootDatum& from_label(const std::string& label);
    explicit RootDatum(std::string label, std::vector<std::vector<int>> cartan);

    const std::string& label() const { return label_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    /// alpha_i in fundamental-weight coordinates (i is 1-based).
    Weight simple_root(int i) const;

    /// s_i(x) = x - <x, alpha_i^vee> alpha_i.
    Weight reflect(int i, const Weight& x) const;

    /// Action of w on a weight (w = s_{i1}...s_{ik} applied left to right
    /// onto x as s_{i1}(s_{i2}(...(x)))).
    Weight act(const WeylElt& w, const Weight& x) const;

    /// Order of s_i s_j: 2, 3, 4 or 6. Requires i != j.
    int braid_order(int i, int j) const;

    WeylElt identity() const { return WeylElt{}; }
    WeylElt simple_reflection(int i) const;

    /// Canonical reduced word of the product uw.
    WeylElt mul(const WeylElt& u, const WeylElt& w) const;
    WeylElt inverse(const WeylElt& w) const;

    std::size_t length(const WeylElt& w) const { return w.word.size(); }

    /// True iff l(w s_i) < l(w).
    bool right_descent(const WeylElt& w, int i) const;

    const std::vector<WeylElt>& all_elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

    /// All reduced words of w (for morphism well-definedness checks).
    std::vector<std::vector<int>> reduced_words(const WeylElt& w) const;

private:
    using IntMat = std::vector<std::vector<long long>>;  // action on weight lattice

    std::size_t index_of(const WeylElt& w) const;
    void build_group();

    std::string label_;
    int rank_;
    std::vector<std::vector<int>> cartan_;

    std::vector<WeylElt> elements_;          // canonical words, index = element id
    std::vector<IntMat> matrices_;           // lattice action per element
    std::vector<std::vector<std::size_t>> rmul_;  // rmul_[e][i-1] = index of e*s_i
    std::vector<std::size_t> inverse_;
    std::map<std::vector<int>, std::size_t> word_index_;
};

}  // namespace lkd
