#pragma once

#include <cctype>
#include <string>

#include "dcsym/expr.hpp"

namespace dcsym {

struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | base ('^' factor)?
//   base   := NUMBER | IDENT | KERNEL '(' expr ')' | '(' expr ')'
// '^' is right-associative; unary minus binds looser than '^', so -x^2
// parses as -(x^2) while x^-2 is x^(-2). Ratios like 3/4 come in through
// the division operator and normalize to exact rationals.
class Parser {
public:
    explicit Parser(std::string text) : s_(std::move(text)) {}

    Expr parse() {
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat(char c) {
        if (peek(c)) { ++pos_; return true; }
        return false;
    }

    Expr parse_expr() {
        Expr acc = parse_term();
        for (;;) {
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else return acc;
        }
    }

    Expr parse_term() {
        Expr acc = parse_factor();
        for (;;) {
            if (eat('*')) acc = acc * parse_factor();
            else if (eat('/')) acc = acc / parse_factor();
            else return acc;
        }
    }

    Expr parse_factor() {
        if (eat('-')) return -parse_factor();
        Expr b = parse_base();
        if (eat('^')) return make_pow(b, parse_factor());
        return b;
    }

    Expr parse_base() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        if (eat('(')) {
            Expr e = parse_expr();
            if (!eat(')')) throw parse_error("expected ')'", pos_);
            return e;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    Expr parse_number() {
        std::size_t start = pos_;
        long long ipart = 0;
        bool any = false;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ipart = ipart * 10 + (s_[pos_] - '0');
            ++pos_;
            any = true;
        }
        Rational r(ipart);
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            long long frac = 0, scale = 1;
            bool fany = false;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                frac = frac * 10 + (s_[pos_] - '0');
                scale *= 10;
                ++pos_;
                fany = true;
            }
            if (!any && !fany) throw parse_error("malformed number", start);
            r += Rational(frac, scale);
        } else if (!any) {
            throw parse_error("malformed number", start);
        }
        return Expr(r);
    }

    Expr parse_ident() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        if (peek('(')) {
            Fn fn;
            if (name == "exp") fn = Fn::Exp;
            else if (name == "ln") fn = Fn::Ln;
            else if (name == "abs") fn = Fn::Abs;
            else if (name == "sign") fn = Fn::Sign;
            else if (name == "sqrt") { eat('('); Expr a = parse_expr();
                if (!eat(')')) throw parse_error("expected ')'", pos_);
                return sqrt_(a); }
            else if (name == "sin") fn = Fn::Sin;
            else if (name == "cos") fn = Fn::Cos;
            else if (name == "tan") { eat('('); Expr a = parse_expr();
                if (!eat(')')) throw parse_error("expected ')'", pos_);
                return tan_(a); }
            else if (name == "sinh") fn = Fn::Sinh;
            else if (name == "cosh") fn = Fn::Cosh;
            else if (name == "arctan") fn = Fn::Arctan;
            else throw parse_error("unknown kernel '" + name + "'", start);
            eat('(');
            Expr a = parse_expr();
            if (!eat(')')) throw parse_error("expected ')'", pos_);
            return make_kernel(fn, a);
        }
        return Expr::symbol(name);
    }
};

inline Expr parse(const std::string& text) { return Parser(text).parse(); }

// ----------------------------------------------------------------- printer

namespace detail {

inline void print_expr(std::string& out, const Expr& e);

inline bool needs_parens_in_product(const Expr& e) {
    return e.is_add() || (e.is_rat() && (e.rat().is_negative() || !e.rat().is_integer()));
}

inline void print_base(std::string& out, const Expr& e) {
    if (e.is_sym()) { out += e.sym(); return; }
    if (e.is_ker()) { print_expr(out, e); return; }
    if (e.is_rat() && e.rat().is_integer() && !e.rat().is_negative()) {
        out += e.rat().str();
        return;
    }
    out += '(';
    print_expr(out, e);
    out += ')';
}

inline void print_exponent(std::string& out, const Expr& e) {
    if (e.is_sym()) { out += e.sym(); return; }
    if (e.is_rat() && e.rat().is_integer() && !e.rat().is_negative()) {
        out += e.rat().str();
        return;
    }
    out += '(';
    print_expr(out, e);
    out += ')';
}

inline void print_factor(std::string& out, const Expr& e) {
    if (e.is_pow()) {
        print_base(out, e.base());
        out += '^';
        print_exponent(out, e.expo());
        return;
    }
    if (needs_parens_in_product(e) || e.is_mul()) {
        out += '(';
        print_expr(out, e);
        out += ')';
        return;
    }
    print_expr(out, e);
}

inline void print_term(std::string& out, const Expr& e) {
    // e is a normalized non-Add term
    if (e.is_mul()) {
        bool first = true;
        for (const auto& k : e.kids()) {
            if (!first) out += '*';
            if (k.is_rat()) out += k.rat().is_integer() ? k.rat().str()
                                                        : k.rat().str();  // a/b parses via division
            else print_factor(out, k);
            first = false;
        }
        return;
    }
    if (e.is_rat()) { out += e.rat().str(); return; }
    print_factor(out, e);
}

inline void print_expr(std::string& out, const Expr& e) {
    switch (e.kind()) {
        case Kind::Rat:
            if (e.rat().is_negative()) { out += '-'; out += (-e.rat()).str(); }
            else out += e.rat().str();
            return;
        case Kind::Sym:
            out += e.sym();
            return;
        case Kind::Ker:
            out += fn_name(e.fn());
            out += '(';
            print_expr(out, e.arg());
            out += ')';
            return;
        case Kind::Pow:
            print_factor(out, e);
            return;
        case Kind::Mul: {
            auto [c, mono] = coeff_split(e);
            if (c.is_negative()) {
                out += '-';
                Expr pos = make_mul({Expr(-c), mono});
                print_term(out, pos);
            } else {
                print_term(out, e);
            }
            return;
        }
        case Kind::Add: {
            bool first = true;
            for (const auto& k : e.kids()) {
                auto [c, mono] = coeff_split(k);
                if (!first) out += c.is_negative() ? "-" : "+";
                else if (c.is_negative()) out += '-';
                Rational cc = c.is_negative() ? -c : c;
                Expr term = mono.is_one_lit() ? Expr(cc) : make_mul({Expr(cc), mono});
                print_term(out, term);
                first = false;
            }
            return;
        }
    }
}

} // namespace detail

inline std::string to_string(const Expr& e) {
    std::string out;
    detail::print_expr(out, e);
    return out;
}

} // namespace dcsym
