#pragma once

#include "lkd/hecke.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lkd {

struct HeckeParseError : std::runtime_error {
    HeckeParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

struct HeckeEvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { IntLit, VPow, Theta, T, Add, Sub, Mul, Neg, Inv, Apply };
    Kind kind;
    long long int_value = 0;             // IntLit
    int v_exp = 1;                       // VPow
    std::vector<long long> coords;       // Theta
    std::vector<int> indices;            // T
    std::string func;                    // Apply
    std::vector<ExprPtr> children;
};

/// Recursive-descent parser for the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^-1']
///   atom   := INT | 'v' ['^' SINT] | 'theta[' ints ']' | 'T[' ints ']'
///           | IDENT '(' expr ')' | '(' expr ')' | '-' atom
/// Theta arity against the rank is checked at parse time.
ExprPtr parse_hecke_expr(const std::string& src, const RootDatum& d);

/// Apply dispatches IM/iota/KIM; Inv inverts unit monomials via the
/// quadratic relation and raises HeckeEvalError otherwise.
HeckeElt eval_expr(const ExprPtr& ast, const HeckeAlgebra& h);

}  // namespace lkd
