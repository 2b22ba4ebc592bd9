#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace lkd {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[v,v^-1], stored as exponent -> nonzero coefficient.
/// The map is always canonical (no zero coefficients), so operator== is
/// structural equality of the ring.
class LaurentPoly {
public:
    using Terms = std::map<int, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) terms_[0] = c; }
    LaurentPoly(BigInt c) { if (c != 0) terms_[0] = std::move(c); }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }

    /// c * v^k
    static LaurentPoly term(BigInt c, int k) {
        LaurentPoly p;
        if (c != 0) p.terms_[k] = std::move(c);
        return p;
    }
    static LaurentPoly v(int k = 1) { return term(1, k); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    // map ordering, usable as container key
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// v -> -v: negates odd-exponent coefficients.
    LaurentPoly substitute_neg_v() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_[k] = (k % 2 == 0) ? c : -c;
        return r;
    }

    /// Descending exponent order, e.g. "v^2 - 2 + v^-2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            BigInt c = it->second;
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            int k = it->first;
            if (k == 0) {
                os << c;
            } else {
                if (c != 1) os << c << "*";
                os << "v";
                if (k != 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void add_term(int k, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

}  // namespace lkd
