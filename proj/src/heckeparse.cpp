#include "lkd/heckeparse.hpp"

#include <cctype>

namespace lkd {

namespace {

class Parser {
public:
    Parser(const std::string& src, const RootDatum& d) : src_(src), d_(d) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw HeckeParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const std::string& what) {
        if (!accept(c)) fail(what);
    }

    long long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+'))
            neg = (src_[pos_++] == '-');
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected integer");
        long long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            v = v * 10 + (src_[pos_++] - '0');
        return neg ? -v : v;
    }

    std::vector<long long> int_list() {
        std::vector<long long> out;
        skip_ws();
        if (peek(']')) return out;
        out.push_back(integer());
        while (accept(',')) out.push_back(integer());
        return out;
    }

    ExprPtr make(ExprNode n) { return std::make_shared<ExprNode>(std::move(n)); }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (accept('+')) {
                ExprNode n{ExprNode::Kind::Add};
                n.children = {e, term()};
                e = make(std::move(n));
            } else if (accept('-')) {
                ExprNode n{ExprNode::Kind::Sub};
                n.children = {e, term()};
                e = make(std::move(n));
            } else {
                break;
            }
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (accept('*')) {
            ExprNode n{ExprNode::Kind::Mul};
            n.children = {e, factor()};
            e = make(std::move(n));
        }
        return e;
    }

    ExprPtr factor() {
        ExprPtr e = atom();
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '^') {
            // only '^-1' is allowed here; 'v^k' is consumed inside atom
            if (src_.compare(pos_, 3, "^-1") != 0) fail("expected ^-1");
            pos_ += 3;
            ExprNode n{ExprNode::Kind::Inv};
            n.children = {e};
            return make(std::move(n));
        }
        return e;
    }

    bool lookahead_word(const std::string& w) {
        skip_ws();
        return src_.compare(pos_, w.size(), w) == 0;
    }

    ExprPtr atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected expression");
        const char c = src_[pos_];
        if (c == '-') {
            ++pos_;
            ExprNode n{ExprNode::Kind::Neg};
            n.children = {atom()};
            return make(std::move(n));
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')', "expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            ExprNode n{ExprNode::Kind::IntLit};
            n.int_value = integer();
            return make(std::move(n));
        }
        if (lookahead_word("theta[")) {
            pos_ += 6;
            ExprNode n{ExprNode::Kind::Theta};
            n.coords = int_list();
            expect(']', "expected ']'");
            if (static_cast<int>(n.coords.size()) != d_.rank())
                fail("theta arity does not match rank " + std::to_string(d_.rank()));
            return make(std::move(n));
        }
        if (lookahead_word("T[")) {
            pos_ += 2;
            ExprNode n{ExprNode::Kind::T};
            for (long long i : int_list()) {
                if (i < 1 || i > d_.rank()) fail("T index out of range");
                n.indices.push_back(static_cast<int>(i));
            }
            expect(']', "expected ']'");
            return make(std::move(n));
        }
        if (c == 'v' && !followed_by_ident_char(pos_ + 1)) {
            ++pos_;
            ExprNode n{ExprNode::Kind::VPow};
            if (pos_ < src_.size() && src_[pos_] == '^' &&
                !(src_.compare(pos_, 3, "^-1") == 0 && !after_is_digit(pos_ + 3))) {
                ++pos_;
                n.v_exp = static_cast<int>(integer());
            } else if (pos_ < src_.size() && src_[pos_] == '^') {
                // 'v^-1' parses as the power, not as inversion (same value)
                pos_ += 3;
                n.v_exp = -1;
            } else {
                n.v_exp = 1;
            }
            return make(std::move(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            expect('(', "expected '(' after " + name);
            ExprNode n{ExprNode::Kind::Apply};
            n.func = name;
            n.children = {expr()};
            expect(')', "expected ')'");
            return make(std::move(n));
        }
        fail("unexpected character");
    }

    bool followed_by_ident_char(std::size_t i) const {
        return i < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i])) || src_[i] == '_');
    }
    bool after_is_digit(std::size_t i) const {
        return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]));
    }

    const std::string& src_;
    const RootDatum& d_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_hecke_expr(const std::string& src, const RootDatum& d) {
    return Parser(src, d).run();
}

namespace {

HeckeElt invert(const HeckeElt& e, const HeckeAlgebra& h) {
    if (e.terms().size() != 1) throw HeckeEvalError("cannot invert a sum");
    const auto& [key, c] = *e.terms().begin();
    if (c.terms().size() != 1 || (c.terms().begin()->second != 1 && c.terms().begin()->second != -1))
        throw HeckeEvalError("coefficient is not a unit");
    const int exp = c.terms().begin()->first;
    LaurentPoly cinv = LaurentPoly::term(c.terms().begin()->second, -exp);
    return cinv * h.monomial_inverse(key.first, key.second);
}

}  // namespace

HeckeElt eval_expr(const ExprPtr& ast, const HeckeAlgebra& h) {
    using K = ExprNode::Kind;
    switch (ast->kind) {
        case K::IntLit:
            return LaurentPoly::term(ast->int_value, 0) * h.one();
        case K::VPow:
            return LaurentPoly::v(ast->v_exp) * h.one();
        case K::Theta:
            return h.theta(ast->coords);
        case K::T: {
            HeckeElt e = h.one();
            for (int i : ast->indices) e = h.mul(e, h.t_generator(i));
            return e;
        }
        case K::Add:
            return eval_expr(ast->children[0], h) + eval_expr(ast->children[1], h);
        case K::Sub:
            return eval_expr(ast->children[0], h) - eval_expr(ast->children[1], h);
        case K::Mul:
            return h.mul(eval_expr(ast->children[0], h), eval_expr(ast->children[1], h));
        case K::Neg:
            return -eval_expr(ast->children[0], h);
        case K::Inv:
            return invert(eval_expr(ast->children[0], h), h);
        case K::Apply: {
            HeckeElt arg = eval_expr(ast->children[0], h);
            if (ast->func == "IM") return h.im(arg);
            if (ast->func == "iota") return h.iota(arg);
            if (ast->func == "KIM") return h.k_im(arg);
            throw HeckeEvalError("unknown morphism: " + ast->func);
        }
    }
    throw HeckeEvalError("corrupt AST");
}

}  // namespace lkd
