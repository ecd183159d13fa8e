#pragma once

#include "algrest/forms.hpp"
#include "algrest/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace algrest {

// Expression AST. '^' is power after a polynomial base and wedge between
// differentials, resolved by one-token lookahead.
struct Ast {
    enum class Kind { Num, Var, Add, Sub, Mul, Pow, DBlock, Coeff };

    Kind kind;
    Rat value;                        // Num
    std::string name;                 // Var
    std::shared_ptr<Ast> lhs, rhs;    // Add/Sub/Mul, Coeff (lhs coeff, rhs block)
    int exponent = 0;                 // Pow (lhs base)
    std::vector<std::string> dvars;   // DBlock
};

using AstPtr = std::shared_ptr<Ast>;

bool ast_equal(const AstPtr &a, const AstPtr &b);
std::string render_ast(const AstPtr &a);

// Parses a polynomial expression; `names` fixes the variable order and makes
// unknown identifiers an error.
AstPtr parse_poly_ast(const std::string &text, const std::vector<std::string> &names);
AstPtr parse_form_ast(const std::string &text, const std::vector<std::string> &names);

Poly parse_poly(const std::string &text, const std::vector<std::string> &names);
DiffForm parse_form(const std::string &text, const std::vector<std::string> &names);
// Comma-separated polynomial list.
std::vector<Poly> parse_poly_list(const std::string &text,
                                  const std::vector<std::string> &names);

std::string render_poly(const Poly &f, const std::vector<std::string> &names);
std::string render_form(const DiffForm &omega, const std::vector<std::string> &names);

}  // namespace algrest
