#include "voa/formula.hpp"

#include <cctype>

namespace voa {

struct Formula::Node {
    enum Kind { Num, Var, Add, Sub, Mul, Div, Neg, Pow } kind;
    Rat value;         // Num
    std::string name;  // Var
    long exponent = 0; // Pow
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }

    NodePtr make(Formula::Node n) { return std::make_shared<Formula::Node>(std::move(n)); }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++i;
                NodePtr rhs = parse_term();
                Formula::Node n;
                n.kind = (c == '+') ? Formula::Node::Add : Formula::Node::Sub;
                n.lhs = lhs;
                n.rhs = rhs;
                lhs = make(std::move(n));
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++i;
                NodePtr rhs = parse_factor();
                Formula::Node n;
                n.kind = (c == '*') ? Formula::Node::Mul : Formula::Node::Div;
                n.lhs = lhs;
                n.rhs = rhs;
                lhs = make(std::move(n));
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_factor() {
        if (accept('-')) {
            Formula::Node n;
            n.kind = Formula::Node::Neg;
            n.lhs = parse_factor();
            return make(std::move(n));
        }
        if (accept('+')) return parse_factor();
        NodePtr base = parse_primary();
        if (peek() == '^') {
            ++i;
            skip_ws();
            bool neg = false;
            if (accept('-')) neg = true;
            size_t start = i;
            long e = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                e = e * 10 + (s[i] - '0');
                ++i;
            }
            if (i == start) throw ParseError("expected integer exponent", i);
            Formula::Node n;
            n.kind = Formula::Node::Pow;
            n.exponent = neg ? -e : e;
            n.lhs = base;
            return make(std::move(n));
        }
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (i >= s.size()) throw ParseError("unexpected end of input", i);
        char c = s[i];
        if (c == '(') {
            ++i;
            NodePtr inner = parse_expr();
            if (!accept(')')) throw ParseError("expected ')'", i);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            Formula::Node n;
            n.kind = Formula::Node::Num;
            n.value = Rat(s.substr(start, i - start));
            return make(std::move(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            Formula::Node n;
            n.kind = Formula::Node::Var;
            n.name = s.substr(start, i - start);
            return make(std::move(n));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
};

Scalar eval_node(const Formula::Node& n, const std::string& free_var,
                 const std::map<std::string, Rat>& bindings) {
    using N = Formula::Node;
    switch (n.kind) {
        case N::Num:
            return Scalar(CycRat(n.value));
        case N::Var: {
            if (n.name == free_var) return Scalar::x();
            if (n.name == "h") return Scalar(CycRat::eta());
            auto it = bindings.find(n.name);
            if (it == bindings.end())
                throw std::domain_error("unbound variable '" + n.name + "' in formula");
            return Scalar(CycRat(it->second));
        }
        case N::Add:
            return eval_node(*n.lhs, free_var, bindings) + eval_node(*n.rhs, free_var, bindings);
        case N::Sub:
            return eval_node(*n.lhs, free_var, bindings) - eval_node(*n.rhs, free_var, bindings);
        case N::Mul:
            return eval_node(*n.lhs, free_var, bindings) * eval_node(*n.rhs, free_var, bindings);
        case N::Div:
            return eval_node(*n.lhs, free_var, bindings) / eval_node(*n.rhs, free_var, bindings);
        case N::Neg:
            return -eval_node(*n.lhs, free_var, bindings);
        case N::Pow: {
            Scalar base = eval_node(*n.lhs, free_var, bindings);
            long e = n.exponent;
            Scalar acc(1);
            bool invert = e < 0;
            if (invert) e = -e;
            for (long k = 0; k < e; ++k) acc *= base;
            return invert ? acc.inverse() : acc;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Formula Formula::parse(const std::string& text) {
    Parser p(text);
    Formula f;
    f.root_ = p.parse_expr();
    if (!p.eof()) throw ParseError("trailing input", p.i);
    f.text_ = text;
    return f;
}

Scalar Formula::eval(const std::string& free_var,
                     const std::map<std::string, Rat>& bindings) const {
    return eval_node(*root_, free_var, bindings);
}

CycRat Formula::eval_value(const std::map<std::string, Rat>& bindings) const {
    Scalar s = eval_node(*root_, "", bindings);
    if (!s.is_polynomial() || s.num().degree() > 0)
        throw std::domain_error("formula did not evaluate to a constant");
    return s.num().is_zero() ? CycRat() : s.num()[0];
}

}  // namespace voa
