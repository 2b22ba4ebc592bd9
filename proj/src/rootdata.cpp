#include "lkd/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace lkd {

namespace {

std::vector<std::vector<int>> cartan_for(const std::string& label) {
    if (label == "A1") return {{2}};
    if (label == "A1xA1") return {{2, 0}, {0, 2}};
    if (label == "A2") return {{2, -1}, {-1, 2}};
    if (label == "B2") return {{2, -1}, {-2, 2}};
    if (label == "G2") return {{2, -1}, {-3, 2}};
    if (label == "A3") return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    throw std::invalid_argument("unknown root datum label: " + label);
}

}  // namespace

const RootDatum& RootDatum::from_label(const std::string& label) {
    static std::map<std::string, std::unique_ptr<RootDatum>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(label);
    if (it == cache.end())
        it = cache.emplace(label, std::make_unique<RootDatum>(label, cartan_for(label))).first;
    return *it->second;
}

RootDatum::RootDatum(std::string label, std::vector<std::vector<int>> cartan)
    : label_(std::move(label)), rank_(static_cast<int>(cartan.size())), cartan_(std::move(cartan)) {
    if (rank_ < 1 || rank_ > 3)
        throw std::invalid_argument("rank must be between 1 and 3 for exhaustive enumeration");
    for (int i = 0; i < rank_; ++i) {
        if (cartan_[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
        for (int j = 0; j < rank_; ++j) {
            if (i == j) continue;
            if (cartan_[i][j] > 0) throw std::invalid_argument("off-diagonal entries must be <= 0");
            int p = cartan_[i][j] * cartan_[j][i];
            if (p > 3) throw std::invalid_argument("not a finite-type Cartan matrix");
        }
    }
    build_group();
}

Weight RootDatum::simple_root(int i) const {
    if (i < 1 || i > rank_) throw std::out_of_range("simple root index");
    Weight a(rank_);
    for (int j = 0; j < rank_; ++j) a[j] = cartan_[j][i - 1];
    return a;
}

Weight RootDatum::reflect(int i, const Weight& x) const {
    if (i < 1 || i > rank_) throw std::out_of_range("simple root index");
    const long long pairing = x[i - 1];
    Weight r = x;
    for (int j = 0; j < rank_; ++j) r[j] -= pairing * cartan_[j][i - 1];
    return r;
}

Weight RootDatum::act(const WeylElt& w, const Weight& x) const {
    Weight r = x;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = reflect(*it, r);
    return r;
}

int RootDatum::braid_order(int i, int j) const {
    if (i == j) throw std::invalid_argument("braid_order requires i != j");
    if (i < 1 || i > rank_ || j < 1 || j > rank_) throw std::out_of_range("simple root index");
    switch (cartan_[i - 1][j - 1] * cartan_[j - 1][i - 1]) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: throw std::logic_error("invalid Cartan product");
    }
}

WeylElt RootDatum::simple_reflection(int i) const {
    if (i < 1 || i > rank_) throw std::out_of_range("simple root index");
    return WeylElt{{i}};
}

void RootDatum::build_group() {
    const int n = rank_;
    auto mat_mul = [n](const IntMat& a, const IntMat& b) {
        IntMat r(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (a[i][k] != 0)
                    for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        return r;
    };

    // s_i as a matrix on fundamental-weight coordinates
    std::vector<IntMat> gen_mat(n);
    for (int i = 0; i < n; ++i) {
        IntMat m(n, std::vector<long long>(n, 0));
        for (int j = 0; j < n; ++j) m[j][j] = 1;
        for (int j = 0; j < n; ++j) m[j][i] -= cartan_[j][i];
        gen_mat[i] = m;
    }

    IntMat id(n, std::vector<long long>(n, 0));
    for (int j = 0; j < n; ++j) id[j][j] = 1;

    std::map<IntMat, std::size_t> seen;
    matrices_.push_back(id);
    seen[id] = 0;
    std::vector<std::vector<int>> words{{}};  // BFS word per element (shortest)
    rmul_.push_back(std::vector<std::size_t>(n, 0));

    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t e = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            IntMat prod = mat_mul(matrices_[e], gen_mat[i]);
            auto it = seen.find(prod);
            std::size_t idx;
            if (it == seen.end()) {
                idx = matrices_.size();
                seen[prod] = idx;
                matrices_.push_back(prod);
                auto w = words[e];
                w.push_back(i + 1);
                words.push_back(std::move(w));
                rmul_.push_back(std::vector<std::size_t>(n, 0));
                queue.push_back(idx);
            } else {
                idx = it->second;
            }
            rmul_[e][i] = idx;
        }
    }

    // Canonical word = lex-least reduced word. BFS words are shortest;
    // recompute lex-least by recursing on left descents, in length order.
    const std::size_t sz = matrices_.size();
    std::vector<std::size_t> by_length(sz);
    for (std::size_t e = 0; e < sz; ++e) by_length[e] = e;
    std::sort(by_length.begin(), by_length.end(),
              [&](std::size_t a, std::size_t b) { return words[a].size() < words[b].size(); });

    std::vector<std::vector<int>> canon(sz);
    std::vector<bool> done(sz, false);
    // index of s_i * e for the left-descent recursion
    auto lmul = [&](int i, std::size_t e) { return seen.at(mat_mul(gen_mat[i], matrices_[e])); };

    for (std::size_t e : by_length) {
        if (words[e].empty()) {
            canon[e] = {};
            done[e] = true;
            continue;
        }
        std::vector<int> best;
        for (int i = 0; i < n; ++i) {
            std::size_t rest = lmul(i, e);
            if (!done[rest] || words[rest].size() + 1 != words[e].size()) continue;
            std::vector<int> cand{i + 1};
            cand.insert(cand.end(), canon[rest].begin(), canon[rest].end());
            if (best.empty() || cand < best) best = std::move(cand);
        }
        canon[e] = std::move(best);
        done[e] = true;
    }

    elements_.resize(sz);
    inverse_.resize(sz);
    for (std::size_t e = 0; e < sz; ++e) {
        elements_[e] = WeylElt{canon[e]};
        word_index_[canon[e]] = e;
    }
    for (std::size_t e = 0; e < sz; ++e) {
        std::size_t inv = 0;
        for (auto it = canon[e].rbegin(); it != canon[e].rend(); ++it) inv = rmul_[inv][*it - 1];
        inverse_[e] = inv;
    }
}

std::size_t RootDatum::index_of(const WeylElt& w) const {
    auto it = word_index_.find(w.word);
    if (it != word_index_.end()) return it->second;
    // non-canonical word: reduce by multiplying out
    std::size_t e = 0;
    for (int i : w.word) e = rmul_[e][i - 1];
    return e;
}

WeylElt RootDatum::mul(const WeylElt& u, const WeylElt& w) const {
    std::size_t e = index_of(u);
    for (int i : w.word) e = rmul_[e][i - 1];
    return elements_[e];
}

WeylElt RootDatum::inverse(const WeylElt& w) const { return elements_[inverse_[index_of(w)]]; }

bool RootDatum::right_descent(const WeylElt& w, int i) const {
    std::size_t e = index_of(w);
    return elements_[rmul_[e][i - 1]].length() < elements_[e].length();
}

std::vector<std::vector<int>> RootDatum::reduced_words(const WeylElt& w) const {
    std::vector<std::vector<int>> out;
    std::size_t target = index_of(w);
    const std::size_t len = elements_[target].length();
    // enumerate words backwards through right descents
    struct Frame {
        std::size_t e;
        std::vector<int> suffix;
    };
    std::vector<Frame> stack{{target, {}}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (elements_[f.e].length() == 0) {
            std::vector<int> word(f.suffix.rbegin(), f.suffix.rend());
            out.push_back(std::move(word));
            continue;
        }
        for (int i = 1; i <= rank_; ++i) {
            if (!right_descent(elements_[f.e], i)) continue;
            Frame g;
            g.e = rmul_[f.e][i - 1];
            g.suffix = f.suffix;
            g.suffix.push_back(i);
            stack.push_back(std::move(g));
        }
    }
    (void)len;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lkd
