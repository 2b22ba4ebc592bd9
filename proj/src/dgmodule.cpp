#include "lkd/dgmodule.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace lkd {

KoszulAlgebra::KoszulAlgebra(std::vector<KoszulGenerator> ext, std::vector<KoszulGenerator> sym,
                             Mat diff)
    : ext_(std::move(ext)), sym_(std::move(sym)), diff_(std::move(diff)) {
    if (diff_.rows() != sym_.size() || diff_.cols() != ext_.size())
        throw std::invalid_argument("differential matrix shape mismatch");
    for (std::size_t l = 0; l < ext_.size(); ++l)
        for (std::size_t k = 0; k < sym_.size(); ++k)
            if (diff_(k, l) != 0 &&
                !(sym_[k].deg.c == ext_[l].deg.c + 1 && sym_[k].deg.i == ext_[l].deg.i))
                throw std::invalid_argument("algebra differential is not of bidegree (1,0)");
}

bool dims_equal_within(const BigradedDims& a, const BigradedDims& b, Window w) {
    for (const auto& [bd, d] : a)
        if (w.contains(bd.i) && d != 0) {
            auto it = b.find(bd);
            if (it == b.end() || it->second != d) return false;
        }
    for (const auto& [bd, d] : b)
        if (w.contains(bd.i) && d != 0 && a.find(bd) == a.end()) return false;
    return true;
}

std::string dims_to_string(const BigradedDims& d) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [bd, n] : d) {
        if (!first) os << ", ";
        first = false;
        os << "(" << bd.c << "," << bd.i << "):" << n;
    }
    os << "}";
    return os.str();
}

void DgModule::set_diff(Bidegree b, Mat m) {
    if (m.is_zero()) return;
    if (m.cols() != static_cast<std::size_t>(dim(b)) ||
        m.rows() != static_cast<std::size_t>(dim(b + Bidegree{1, 0})))
        throw std::invalid_argument("differential block shape mismatch");
    diff_[b] = std::move(m);
}

Mat DgModule::diff(Bidegree b) const {
    auto it = diff_.find(b);
    if (it != diff_.end()) return it->second;
    return Mat::zero(dim(b + Bidegree{1, 0}), dim(b));
}

void DgModule::set_action(std::size_t g, Bidegree b, Mat m) {
    if (actions_.size() < algebra_->num_gens()) actions_.resize(algebra_->num_gens());
    if (m.is_zero()) return;
    if (m.cols() != static_cast<std::size_t>(dim(b)) ||
        m.rows() != static_cast<std::size_t>(dim(b + algebra_->gen(g).deg)))
        throw std::invalid_argument("action block shape mismatch");
    actions_[g][b] = std::move(m);
}

Mat DgModule::action(std::size_t g, Bidegree b) const {
    if (g < actions_.size()) {
        auto it = actions_[g].find(b);
        if (it != actions_[g].end()) return it->second;
    }
    return Mat::zero(dim(b + algebra_->gen(g).deg), dim(b));
}

std::optional<std::string> DgModule::validate() const {
    const auto& alg = *algebra_;
    auto fail = [](const std::string& what, Bidegree b) {
        std::ostringstream os;
        os << what << " at (" << b.c << "," << b.i << ")";
        return os.str();
    };
    for (const auto& [b, n] : dims_) {
        (void)n;
        if (!(diff(b + Bidegree{1, 0}) * diff(b)).is_zero()) return fail("d^2 != 0", b);
        for (std::size_t g = 0; g < alg.num_gens(); ++g) {
            const auto& gen = alg.gen(g);
            // d(g.m) = d_A(g).m + (-1)^|g| g.d(m)
            Mat lhs = diff(b + gen.deg) * action(g, b);
            Mat rhs = action(g, b + Bidegree{1, 0}) * diff(b);
            if (gen.odd) rhs = Rat(-1) * rhs;
            if (alg.is_ext(g)) {
                Bidegree hd{gen.deg.c + 1, gen.deg.i};
                for (std::size_t k = 0; k < alg.sym_gens().size(); ++k) {
                    const Rat& c = alg.diff_on_ext()(k, g);
                    if (c == 0) continue;
                    (void)hd;
                    rhs = rhs + c * action(alg.ext_gens().size() + k, b);
                }
            }
            if (!(lhs == rhs)) return fail("Leibniz fails for " + gen.name, b);
            if (alg.is_ext(g) && !(action(g, b + gen.deg) * action(g, b)).is_zero())
                return fail("exterior square nonzero for " + gen.name, b);
        }
        for (std::size_t g = 0; g < alg.num_gens(); ++g)
            for (std::size_t h = g + 1; h < alg.num_gens(); ++h) {
                const auto& gg = alg.gen(g);
                const auto& gh = alg.gen(h);
                Mat lhs = action(g, b + gh.deg) * action(h, b);
                Mat rhs = action(h, b + gg.deg) * action(g, b);
                if (gg.odd && gh.odd) rhs = Rat(-1) * rhs;
                if (!(lhs == rhs))
                    return fail("generators " + gg.name + ", " + gh.name + " do not commute", b);
            }
    }
    return std::nullopt;
}

BigradedDims DgModule::cohomology() const {
    BigradedDims h;
    for (const auto& [b, n] : dims_) {
        const std::size_t rk_out = diff(b).rank();
        const std::size_t rk_in = diff(Bidegree{b.c - 1, b.i}).rank();
        const int hd = n - static_cast<int>(rk_out) - static_cast<int>(rk_in);
        if (hd != 0) h[b] = hd;
    }
    return h;
}

LaurentPoly DgModule::euler_class() const {
    LaurentPoly e;
    for (const auto& [b, n] : cohomology())
        e += LaurentPoly::term(b.c % 2 == 0 ? n : -n, b.i);
    return e;
}

DgModule DgModule::shift(int n, int m) const {
    DgModule r(algebra_);
    const bool odd_shift = (n % 2 != 0);
    for (const auto& [b, d] : dims_) r.set_component({b.c - n, b.i + m}, d);
    for (const auto& [b, mat] : diff_) {
        Bidegree nb{b.c - n, b.i + m};
        r.set_diff(nb, odd_shift ? Rat(-1) * mat : mat);
    }
    for (std::size_t g = 0; g < actions_.size(); ++g)
        for (const auto& [b, mat] : actions_[g]) {
            Bidegree nb{b.c - n, b.i + m};
            const bool flip = odd_shift && algebra_->gen(g).odd;
            r.set_action(g, nb, flip ? Rat(-1) * mat : mat);
        }
    r.set_window(window_.shifted(m));
    return r;
}

DgModule direct_sum(const DgModule& a, const DgModule& b) {
    if (a.algebra_ != b.algebra_) throw std::invalid_argument("direct_sum: different algebras");
    DgModule r(a.algebra_);
    auto block = [&](Bidegree bd, const Mat& ma, const Mat& mb) {
        Mat m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
        for (std::size_t i = 0; i < ma.rows(); ++i)
            for (std::size_t j = 0; j < ma.cols(); ++j) m(i, j) = ma(i, j);
        for (std::size_t i = 0; i < mb.rows(); ++i)
            for (std::size_t j = 0; j < mb.cols(); ++j) m(ma.rows() + i, ma.cols() + j) = mb(i, j);
        (void)bd;
        return m;
    };
    std::map<Bidegree, int> keys;
    for (const auto& [bd, n] : a.dims_) keys[bd] += n;
    for (const auto& [bd, n] : b.dims_) keys[bd] += n;
    for (const auto& [bd, n] : keys) r.set_component(bd, n);
    for (const auto& [bd, n] : keys) {
        (void)n;
        r.set_diff(bd, block(bd, a.diff(bd), b.diff(bd)));
        for (std::size_t g = 0; g < a.algebra_->num_gens(); ++g)
            r.set_action(g, bd, block(bd, a.action(g, bd), b.action(g, bd)));
    }
    r.set_window(a.window_.intersect(b.window_));
    return r;
}

DgModule cone(const DgModule& a, const DgModule& b, const std::map<Bidegree, Mat>& f) {
    if (a.algebra() != b.algebra()) throw std::invalid_argument("cone: different algebras");
    // cone(f) = A[1] (+) B with differential (-d_A, f + d_B)
    DgModule r(b.algebra());
    auto fat = [&](Bidegree bd) {
        auto it = f.find(bd);
        if (it != f.end()) return it->second;
        return Mat::zero(b.dim(bd), a.dim(bd));
    };
    std::map<Bidegree, std::pair<int, int>> keys;  // (dim from A[1], dim from B)
    for (const auto& [bd, n] : a.components()) keys[{bd.c - 1, bd.i}].first = n;
    for (const auto& [bd, n] : b.components()) keys[bd].second = n;
    for (const auto& [bd, nn] : keys) r.set_component(bd, nn.first + nn.second);
    for (const auto& [bd, nn] : keys) {
        (void)nn;
        Bidegree abd{bd.c + 1, bd.i};  // A-degree sitting at cone degree bd
        const Mat da = a.diff(abd), db = b.diff(bd), fb = fat(abd);
        Mat m(da.rows() + db.rows(), da.cols() + db.cols());
        for (std::size_t i = 0; i < da.rows(); ++i)
            for (std::size_t j = 0; j < da.cols(); ++j) m(i, j) = -da(i, j);
        for (std::size_t i = 0; i < fb.rows(); ++i)
            for (std::size_t j = 0; j < fb.cols(); ++j) m(da.rows() + i, j) = fb(i, j);
        for (std::size_t i = 0; i < db.rows(); ++i)
            for (std::size_t j = 0; j < db.cols(); ++j) m(da.rows() + i, da.cols() + j) = db(i, j);
        r.set_diff(bd, m);
        for (std::size_t g = 0; g < b.algebra()->num_gens(); ++g) {
            const auto gen = b.algebra()->gen(g);
            const Mat ga0 = a.action(g, abd), gb0 = b.action(g, bd);
            Mat gm(ga0.rows() + gb0.rows(), ga0.cols() + gb0.cols());
            const bool flip = gen.odd;  // action on the shifted summand
            for (std::size_t i = 0; i < ga0.rows(); ++i)
                for (std::size_t j = 0; j < ga0.cols(); ++j)
                    gm(i, j) = flip ? -ga0(i, j) : ga0(i, j);
            for (std::size_t i = 0; i < gb0.rows(); ++i)
                for (std::size_t j = 0; j < gb0.cols(); ++j)
                    gm(ga0.rows() + i, ga0.cols() + j) = gb0(i, j);
            r.set_action(g, bd, gm);
        }
    }
    r.set_window(a.window().intersect(b.window()));
    return r;
}

DgModule cohomology_module(const DgModule& m) {
    DgModule r(m.algebra());
    for (const auto& [bd, n] : m.cohomology()) r.set_component(bd, n);
    r.set_window(m.window());
    return r;
}

namespace {

nlohmann::json rat_to_json(const Rat& r) {
    return {boost::multiprecision::numerator(r).str(),
            boost::multiprecision::denominator(r).str()};
}

Rat rat_from_json(const nlohmann::json& j) {
    return Rat(boost::multiprecision::cpp_int(j.at(0).get<std::string>()),
               boost::multiprecision::cpp_int(j.at(1).get<std::string>()));
}

nlohmann::json mat_to_json(const Mat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Mat mat_from_json(const nlohmann::json& j) {
    Mat m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& rows = j.at("entries");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t jj = 0; jj < m.cols(); ++jj) m(i, jj) = rat_from_json(rows.at(i).at(jj));
    return m;
}

}  // namespace

std::string DgModule::to_json() const {
    nlohmann::json j;
    j["components"] = nlohmann::json::array();
    for (const auto& [b, n] : dims_) j["components"].push_back({b.c, b.i, n});
    j["diff"] = nlohmann::json::array();
    for (const auto& [b, m] : diff_) j["diff"].push_back({{"at", {b.c, b.i}}, {"mat", mat_to_json(m)}});
    j["actions"] = nlohmann::json::array();
    for (std::size_t g = 0; g < actions_.size(); ++g)
        for (const auto& [b, m] : actions_[g])
            j["actions"].push_back({{"gen", g}, {"at", {b.c, b.i}}, {"mat", mat_to_json(m)}});
    if (window_.lo != Window::kNegInf) j["window_lo"] = window_.lo;
    if (window_.hi != Window::kPosInf) j["window_hi"] = window_.hi;
    return j.dump(2);
}

DgModule DgModule::from_json(const std::string& text, KoszulAlgebraPtr algebra) {
    nlohmann::json j = nlohmann::json::parse(text);
    DgModule m(std::move(algebra));
    for (const auto& c : j.at("components"))
        m.set_component({c.at(0).get<int>(), c.at(1).get<int>()}, c.at(2).get<int>());
    for (const auto& d : j.at("diff"))
        m.set_diff({d.at("at").at(0).get<int>(), d.at("at").at(1).get<int>()},
                   mat_from_json(d.at("mat")));
    for (const auto& a : j.at("actions"))
        m.set_action(a.at("gen").get<std::size_t>(),
                     {a.at("at").at(0).get<int>(), a.at("at").at(1).get<int>()},
                     mat_from_json(a.at("mat")));
    Window w;
    if (j.contains("window_lo")) w.lo = j.at("window_lo").get<int>();
    if (j.contains("window_hi")) w.hi = j.at("window_hi").get<int>();
    m.set_window(w);
    return m;
}

}  // namespace lkd
