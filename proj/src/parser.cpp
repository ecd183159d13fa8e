#include "algrest/parser.hpp"

#include "algrest/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace algrest {

namespace {

struct Token {
    enum Type { Int, Ident, Punct, End } type;
    std::string text;
    int pos;
};

[[noreturn]] void fail(int pos, const std::string &what) {
    throw DomainError("syntax_error",
                      "at position " + std::to_string(pos) + ": " + what);
}

std::vector<Token> tokenize(const std::string &s) {
    std::vector<Token> out;
    int i = 0, n = static_cast<int>(s.size());
    while (i < n) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Int, s.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int start = i;
            while (i < n && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Token::Ident, s.substr(start, i - start), start});
            continue;
        }
        if (std::string("+-*/^(),").find(c) != std::string::npos) {
            out.push_back({Token::Punct, std::string(1, c), i});
            ++i;
            continue;
        }
        fail(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::End, "", n});
    return out;
}

AstPtr make(Ast::Kind k) {
    auto a = std::make_shared<Ast>();
    a->kind = k;
    return a;
}

AstPtr make_binary(Ast::Kind k, AstPtr l, AstPtr r) {
    auto a = make(k);
    a->lhs = std::move(l);
    a->rhs = std::move(r);
    return a;
}

class Parser {
public:
    Parser(std::vector<Token> toks, const std::vector<std::string> &names, bool form_mode)
        : toks_(std::move(toks)), names_(names), form_mode_(form_mode) {}

    AstPtr parse_expr() {
        AstPtr lhs;
        if (is_punct("-")) {
            advance();
            auto zero = make(Ast::Kind::Num);
            zero->value = 0;
            lhs = make_binary(Ast::Kind::Sub, zero, parse_term());
        } else {
            lhs = parse_term();
        }
        while (is_punct("+") || is_punct("-")) {
            bool plus = cur().text == "+";
            advance();
            lhs = make_binary(plus ? Ast::Kind::Add : Ast::Kind::Sub, lhs, parse_term());
        }
        return lhs;
    }

    void expect_end() {
        if (cur().type != Token::End) fail(cur().pos, "unexpected '" + cur().text + "'");
    }

    bool at_comma() const { return is_punct(","); }
    void eat_comma() { advance(); }

private:
    const Token &cur() const { return toks_[pos_]; }
    const Token &peek(int k = 1) const {
        return toks_[std::min(pos_ + k, static_cast<int>(toks_.size()) - 1)];
    }
    void advance() { ++pos_; }
    bool is_punct(const std::string &t) const {
        return cur().type == Token::Punct && cur().text == t;
    }

    // Identifier of the form d<var> with <var> declared, and not itself a
    // declared variable name.
    bool is_differential(const Token &t) const {
        if (!form_mode_ || t.type != Token::Ident) return false;
        if (std::find(names_.begin(), names_.end(), t.text) != names_.end()) return false;
        return t.text.size() > 1 && t.text[0] == 'd' &&
               std::find(names_.begin(), names_.end(), t.text.substr(1)) != names_.end();
    }

    AstPtr parse_term() {
        if (is_differential(cur())) return parse_dblock();
        AstPtr chain = parse_factor();
        while (is_punct("*")) {
            if (is_differential(peek())) {
                advance();
                return make_binary(Ast::Kind::Coeff, chain, parse_dblock());
            }
            advance();
            chain = make_binary(Ast::Kind::Mul, chain, parse_factor());
        }
        return chain;
    }

    AstPtr parse_dblock() {
        auto block = make(Ast::Kind::DBlock);
        block->dvars.push_back(take_differential());
        while (is_punct("^")) {
            if (!is_differential(peek()))
                fail(peek().pos, "expected a differential after '^' in a wedge block");
            advance();
            block->dvars.push_back(take_differential());
        }
        std::set<std::string> seen(block->dvars.begin(), block->dvars.end());
        if (seen.size() != block->dvars.size())
            fail(cur().pos, "repeated differential in a wedge block");
        return block;
    }

    std::string take_differential() {
        std::string v = cur().text.substr(1);
        advance();
        return v;
    }

    AstPtr parse_factor() {
        AstPtr base = parse_base();
        if (is_punct("^")) {
            if (peek().type != Token::Int)
                fail(peek().pos, "expected an integer exponent after '^'");
            advance();
            auto p = make(Ast::Kind::Pow);
            p->lhs = base;
            p->exponent = std::stoi(cur().text);
            advance();
            return p;
        }
        return base;
    }

    AstPtr parse_base() {
        const Token &t = cur();
        if (t.type == Token::Int) {
            auto a = make(Ast::Kind::Num);
            Rat num(t.text);
            advance();
            if (is_punct("/") && peek().type == Token::Int) {
                advance();
                if (Rat(cur().text) == 0) fail(cur().pos, "zero denominator");
                num /= Rat(cur().text);
                advance();
            }
            a->value = num;
            return a;
        }
        if (t.type == Token::Ident) {
            if (is_differential(t))
                fail(t.pos, "differential '" + t.text + "' is not valid here");
            if (std::find(names_.begin(), names_.end(), t.text) == names_.end())
                throw DomainError("unknown_variable",
                                  "'" + t.text + "' at position " + std::to_string(t.pos));
            auto a = make(Ast::Kind::Var);
            a->name = t.text;
            advance();
            return a;
        }
        if (is_punct("(")) {
            advance();
            bool saved = form_mode_;
            form_mode_ = false;  // parenthesized subexpressions are coefficients
            AstPtr inner = parse_expr();
            form_mode_ = saved;
            if (!is_punct(")")) fail(cur().pos, "expected ')'");
            advance();
            return inner;
        }
        fail(t.pos, t.type == Token::End ? "unexpected end of input"
                                         : "unexpected '" + t.text + "'");
    }

    std::vector<Token> toks_;
    const std::vector<std::string> &names_;
    bool form_mode_;
    int pos_ = 0;
};

int var_index(const std::string &name, const std::vector<std::string> &names) {
    auto it = std::find(names.begin(), names.end(), name);
    return static_cast<int>(it - names.begin());
}

Poly eval_poly(const AstPtr &a, const std::vector<std::string> &names) {
    int m = static_cast<int>(names.size());
    switch (a->kind) {
        case Ast::Kind::Num:
            return Poly::constant(m, a->value);
        case Ast::Kind::Var:
            return Poly::variable(m, var_index(a->name, names));
        case Ast::Kind::Add:
            return eval_poly(a->lhs, names) + eval_poly(a->rhs, names);
        case Ast::Kind::Sub:
            return eval_poly(a->lhs, names) - eval_poly(a->rhs, names);
        case Ast::Kind::Mul:
            return eval_poly(a->lhs, names) * eval_poly(a->rhs, names);
        case Ast::Kind::Pow:
            return eval_poly(a->lhs, names).pow(a->exponent);
        default:
            throw DomainError("syntax_error", "differential in a polynomial context");
    }
}

DiffForm eval_form(const AstPtr &a, const std::vector<std::string> &names) {
    int m = static_cast<int>(names.size());
    auto combine = [&](const DiffForm &l, const DiffForm &r, bool plus) {
        if (l.degree() != r.degree()) {
            if (l.is_zero()) return plus ? r : -r;
            if (r.is_zero()) return l;
            throw DomainError("form_degree", "sum of forms of different degrees");
        }
        return plus ? l + r : l - r;
    };
    switch (a->kind) {
        case Ast::Kind::Add:
            return combine(eval_form(a->lhs, names), eval_form(a->rhs, names), true);
        case Ast::Kind::Sub:
            return combine(eval_form(a->lhs, names), eval_form(a->rhs, names), false);
        case Ast::Kind::DBlock: {
            IdxTuple idx;
            for (const std::string &v : a->dvars) idx.push_back(var_index(v, names));
            return DiffForm::monomial_form(Poly::constant(m, 1), idx);
        }
        case Ast::Kind::Coeff: {
            IdxTuple idx;
            for (const std::string &v : a->rhs->dvars) idx.push_back(var_index(v, names));
            return DiffForm::monomial_form(eval_poly(a->lhs, names), idx);
        }
        default:
            return DiffForm::from_poly(eval_poly(a, names));
    }
}

int prec(const AstPtr &a) {
    switch (a->kind) {
        case Ast::Kind::Add:
        case Ast::Kind::Sub:
            return 1;
        case Ast::Kind::Mul:
        case Ast::Kind::Coeff:
            return 2;
        case Ast::Kind::Pow:
            return 3;
        default:
            return 4;
    }
}

std::string render(const AstPtr &a, int min_prec) {
    std::string s;
    switch (a->kind) {
        case Ast::Kind::Num:
            s = rat_to_string(a->value);
            break;
        case Ast::Kind::Var:
            s = a->name;
            break;
        case Ast::Kind::Add:
            s = render(a->lhs, 1) + "+" + render(a->rhs, 2);
            break;
        case Ast::Kind::Sub:
            s = render(a->lhs, 1) + "-" + render(a->rhs, 2);
            break;
        case Ast::Kind::Mul:
            s = render(a->lhs, 2) + "*" + render(a->rhs, 3);
            break;
        case Ast::Kind::Coeff:
            s = render(a->lhs, 2) + "*" + render(a->rhs, 4);
            break;
        case Ast::Kind::Pow:
            s = render(a->lhs, 4) + "^" + std::to_string(a->exponent);
            break;
        case Ast::Kind::DBlock: {
            bool first = true;
            for (const std::string &v : a->dvars) {
                if (!first) s += "^";
                s += "d" + v;
                first = false;
            }
            break;
        }
    }
    if (prec(a) < min_prec) return "(" + s + ")";
    return s;
}

}  // namespace

bool ast_equal(const AstPtr &a, const AstPtr &b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Ast::Kind::Num:
            return a->value == b->value;
        case Ast::Kind::Var:
            return a->name == b->name;
        case Ast::Kind::DBlock:
            return a->dvars == b->dvars;
        case Ast::Kind::Pow:
            return a->exponent == b->exponent && ast_equal(a->lhs, b->lhs);
        default:
            return ast_equal(a->lhs, b->lhs) && ast_equal(a->rhs, b->rhs);
    }
}

std::string render_ast(const AstPtr &a) { return render(a, 0); }

AstPtr parse_poly_ast(const std::string &text, const std::vector<std::string> &names) {
    Parser p(tokenize(text), names, false);
    AstPtr a = p.parse_expr();
    p.expect_end();
    return a;
}

AstPtr parse_form_ast(const std::string &text, const std::vector<std::string> &names) {
    Parser p(tokenize(text), names, true);
    AstPtr a = p.parse_expr();
    p.expect_end();
    return a;
}

Poly parse_poly(const std::string &text, const std::vector<std::string> &names) {
    return eval_poly(parse_poly_ast(text, names), names);
}

DiffForm parse_form(const std::string &text, const std::vector<std::string> &names) {
    return eval_form(parse_form_ast(text, names), names);
}

std::vector<Poly> parse_poly_list(const std::string &text,
                                  const std::vector<std::string> &names) {
    Parser p(tokenize(text), names, false);
    std::vector<Poly> out;
    out.push_back(eval_poly(p.parse_expr(), names));
    while (p.at_comma()) {
        p.eat_comma();
        out.push_back(eval_poly(p.parse_expr(), names));
    }
    p.expect_end();
    return out;
}

namespace {

// One monomial with its |coefficient|, e.g. "3*y^2*z" or "y" or "1/2".
std::string render_mono(const Rat &abs_coeff, const Exp &e,
                        const std::vector<std::string> &names) {
    std::vector<std::string> parts;
    bool unit = abs_coeff == 1;
    if (!unit) parts.push_back(rat_to_string(abs_coeff));
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        std::string v = names[i];
        if (e[i] > 1) v += "^" + std::to_string(e[i]);
        parts.push_back(v);
    }
    if (parts.empty()) return "1";
    std::string s = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
    return s;
}

}  // namespace

std::string render_poly(const Poly &f, const std::vector<std::string> &names) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto &[e, c] : f.terms()) {
        bool neg = c < 0;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? "-" : "+";
        s += render_mono(neg ? Rat(-c) : c, e, names);
        first = false;
    }
    return s;
}

std::string render_form(const DiffForm &omega, const std::vector<std::string> &names) {
    if (omega.degree() == 0) return render_poly(omega.as_poly(), names);
    if (omega.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto &[idx, c] : omega.components()) {
        std::string block;
        for (size_t i = 0; i < idx.size(); ++i) {
            if (i) block += "^";
            block += "d" + names[idx[i]];
        }
        if (c.terms().size() == 1) {
            const auto &[e, coeff] = *c.terms().begin();
            bool neg = coeff < 0;
            if (first)
                s += neg ? "-" : "";
            else
                s += neg ? "-" : "+";
            Rat abs_c = neg ? Rat(-coeff) : coeff;
            std::string mono = render_mono(abs_c, e, names);
            s += mono == "1" ? block : mono + "*" + block;
        } else {
            if (!first) s += "+";
            s += "(" + render_poly(c, names) + ")*" + block;
        }
        first = false;
    }
    return s;
}

}  // namespace algrest
