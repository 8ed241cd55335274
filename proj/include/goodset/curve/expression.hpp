#pragma once

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "goodset/curve/series.hpp"

namespace goodset::curve {

struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error("parse error at offset " + std::to_string(pos) + ": " + msg), position(pos) {}
    std::size_t position;
};

struct unknown_name : error {
    explicit unknown_name(const std::string& n) : error("unknown name '" + n + "'"), name(n) {}
    std::string name;
};

// Precedence, loosest first:  + -  |  *  |  unary -  |  ^ (exponent is a literal)
//   expr    := term (('+'|'-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | identifier | '(' expr ')'
class Expression {
public:
    enum class Op { literal, name, add, sub, mul, neg, pow };

    struct Node {
        Op op;
        Rational value;        // literal
        std::string ident;     // name
        unsigned exponent = 0; // pow
        std::vector<std::shared_ptr<const Node>> kids;
    };

    static Expression parse(std::string_view src) {
        Parser p{src, 0};
        auto root = p.expr();
        p.skip();
        if (p.pos != src.size()) throw parse_error("unexpected '" + std::string(1, src[p.pos]) + "'", p.pos);
        return Expression(std::string(src), std::move(root));
    }

    const std::string& source() const noexcept { return src_; }

    std::set<std::string> names() const {
        std::set<std::string> out;
        collect(*root_, out);
        return out;
    }

    /// Evaluate with `lookup(name) -> T`; `lift(Rational) -> T` builds constants.
    template <class T, class Lookup, class Lift>
    T evaluate(Lookup&& lookup, Lift&& lift) const {
        return eval<T>(*root_, lookup, lift);
    }

private:
    Expression(std::string src, std::shared_ptr<const Node> root) : src_(std::move(src)), root_(std::move(root)) {}

    struct Parser {
        std::string_view s;
        std::size_t pos;

        void skip() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        bool eat(char c) {
            skip();
            if (pos < s.size() && s[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }
        static std::shared_ptr<const Node> make(Op op, std::vector<std::shared_ptr<const Node>> kids) {
            auto n = std::make_shared<Node>();
            n->op = op;
            n->kids = std::move(kids);
            return n;
        }
        std::string integer() {
            skip();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw parse_error("expected integer", pos);
            return std::string(s.substr(start, pos - start));
        }
        std::shared_ptr<const Node> expr() {
            auto lhs = term();
            for (;;) {
                if (eat('+'))
                    lhs = make(Op::add, {lhs, term()});
                else if (eat('-'))
                    lhs = make(Op::sub, {lhs, term()});
                else
                    return lhs;
            }
        }
        std::shared_ptr<const Node> term() {
            auto lhs = unary();
            while (eat('*')) lhs = make(Op::mul, {lhs, unary()});
            return lhs;
        }
        std::shared_ptr<const Node> unary() {
            if (eat('-')) return make(Op::neg, {unary()});
            return power();
        }
        std::shared_ptr<const Node> power() {
            auto base = primary();
            if (eat('^')) {
                const std::size_t at = pos;
                auto digits = integer();
                if (digits.size() > 6) throw parse_error("exponent too large", at);
                auto n = std::make_shared<Node>();
                n->op = Op::pow;
                n->exponent = static_cast<unsigned>(std::stoul(digits));
                n->kids = {base};
                return n;
            }
            return base;
        }
        std::shared_ptr<const Node> primary() {
            skip();
            if (pos >= s.size()) throw parse_error("unexpected end of input", pos);
            const char c = s[pos];
            if (c == '(') {
                ++pos;
                auto e = expr();
                if (!eat(')')) throw parse_error("expected ')'", pos);
                return e;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                auto n = std::make_shared<Node>();
                n->op = Op::literal;
                Rational num{boost::multiprecision::cpp_int(integer())};
                if (eat('/')) {
                    const std::size_t at = pos;
                    boost::multiprecision::cpp_int den(integer());
                    if (den == 0) throw parse_error("zero denominator", at);
                    num /= Rational(den);
                }
                n->value = num;
                return n;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos;
                while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
                auto n = std::make_shared<Node>();
                n->op = Op::name;
                n->ident = std::string(s.substr(start, pos - start));
                return n;
            }
            throw parse_error("unexpected '" + std::string(1, c) + "'", pos);
        }
    };

    static void collect(const Node& n, std::set<std::string>& out) {
        if (n.op == Op::name) out.insert(n.ident);
        for (const auto& k : n.kids) collect(*k, out);
    }

    template <class T, class Lookup, class Lift>
    static T eval(const Node& n, Lookup& lookup, Lift& lift) {
        switch (n.op) {
            case Op::literal: return lift(n.value);
            case Op::name: return lookup(n.ident);
            case Op::add: return eval<T>(*n.kids[0], lookup, lift) + eval<T>(*n.kids[1], lookup, lift);
            case Op::sub: return eval<T>(*n.kids[0], lookup, lift) - eval<T>(*n.kids[1], lookup, lift);
            case Op::mul: return eval<T>(*n.kids[0], lookup, lift) * eval<T>(*n.kids[1], lookup, lift);
            case Op::neg: return -eval<T>(*n.kids[0], lookup, lift);
            case Op::pow: return eval<T>(*n.kids[0], lookup, lift).pow(n.exponent);
        }
        throw error("corrupt expression tree");
    }

    std::string src_;
    std::shared_ptr<const Node> root_;
};

}  // namespace goodset::curve
