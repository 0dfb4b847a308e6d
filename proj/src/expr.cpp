#include "fracl1/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "fracl1/errors.hpp"
#include "fracl1/specfun.hpp"

namespace fracl1::expr {

std::size_t arity(Function fn) {
    switch (fn) {
        case Function::Pow: return 2;
        case Function::Ml2: return 3;
        default: return 1;
    }
}

std::string_view name(Function fn) {
    switch (fn) {
        case Function::Sin: return "sin";
        case Function::Cos: return "cos";
        case Function::Exp: return "exp";
        case Function::Pow: return "pow";
        case Function::Gamma: return "gamma";
        case Function::Ml2: return "ml2";
    }
    return "?";
}

std::string_view name(Variable v) {
    switch (v) {
        case Variable::X: return "x";
        case Variable::T: return "t";
        case Variable::Alpha: return "alpha";
    }
    return "?";
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string_view text;
    double number = 0.0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) {
            cur_ = {Tok::End, start, {}};
            return;
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number(start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            cur_ = {Tok::Ident, start, src_.substr(start, pos_ - start)};
            return;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            case ',': kind = Tok::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        ++pos_;
        cur_ = {kind, start, src_.substr(start, 1)};
    }

    void lex_number(std::size_t start) {
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t mantissa = digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) throw ParseError("malformed number", start);
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (digits() == 0) throw ParseError("malformed exponent", start);
        }
        const std::string_view text = src_.substr(start, pos_ - start);
        double value = 0.0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
        if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
            throw ParseError("number out of range", start);
        }
        cur_ = {Tok::Number, start, text, value};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token cur_{Tok::End, 0, {}};
};

// Binding powers. Unary minus sits between the multiplicative operators and
// '^', so -2^2 = -(2^2) and 2*-3 = 2*(-3).
constexpr int kAdditive = 10;
constexpr int kMultiplicative = 20;
constexpr int kUnary = 25;
constexpr int kPower = 30;

NodePtr make(auto&& alt) { return std::make_shared<const Node>(Node{std::forward<decltype(alt)>(alt)}); }

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    NodePtr parse_all() {
        if (lex_.peek().kind == Tok::End) throw ParseError("empty expression", 0);
        NodePtr e = parse(0);
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) {
            throw ParseError("unexpected '" + std::string(t.text) + "'", t.offset);
        }
        return e;
    }

private:
    NodePtr parse(int min_bp) {
        NodePtr lhs = prefix();
        for (;;) {
            const Token& t = lex_.peek();
            int lbp, rbp;
            BinaryOp op;
            switch (t.kind) {
                case Tok::Plus: op = BinaryOp::Add; lbp = kAdditive; rbp = kAdditive + 1; break;
                case Tok::Minus: op = BinaryOp::Sub; lbp = kAdditive; rbp = kAdditive + 1; break;
                case Tok::Star: op = BinaryOp::Mul; lbp = kMultiplicative; rbp = kMultiplicative + 1; break;
                case Tok::Slash: op = BinaryOp::Div; lbp = kMultiplicative; rbp = kMultiplicative + 1; break;
                case Tok::Caret: op = BinaryOp::Pow; lbp = kPower; rbp = kPower; break;
                default: return lhs;
            }
            if (lbp < min_bp) return lhs;
            lex_.take();
            NodePtr rhs = parse(rbp);
            lhs = make(Binary{op, std::move(lhs), std::move(rhs)});
        }
    }

    NodePtr prefix() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Number: return make(Constant{t.number});
            case Tok::Minus: return make(Negate{parse(kUnary)});
            case Tok::LParen: {
                NodePtr e = parse(0);
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident: return identifier(t);
            case Tok::End: throw ParseError("unexpected end of expression", t.offset);
            default: throw ParseError("unexpected '" + std::string(t.text) + "'", t.offset);
        }
    }

    NodePtr identifier(const Token& t) {
        if (t.text == "x") return make(VariableRef{Variable::X});
        if (t.text == "t") return make(VariableRef{Variable::T});
        if (t.text == "alpha") return make(VariableRef{Variable::Alpha});
        if (t.text == "pi") return make(Constant{std::numbers::pi});
        static constexpr Function kFunctions[] = {Function::Sin, Function::Cos, Function::Exp,
                                                  Function::Pow, Function::Gamma, Function::Ml2};
        for (Function fn : kFunctions) {
            if (t.text != name(fn)) continue;
            expect(Tok::LParen, "'(' after function name");
            std::vector<NodePtr> args;
            args.push_back(parse(0));
            while (lex_.peek().kind == Tok::Comma) {
                lex_.take();
                args.push_back(parse(0));
            }
            const std::size_t close = lex_.peek().offset;
            expect(Tok::RParen, "')'");
            if (args.size() != arity(fn)) {
                throw ParseError(std::string(name(fn)) + " takes " + std::to_string(arity(fn)) +
                                     " argument(s), got " + std::to_string(args.size()),
                                 close);
            }
            return make(Call{fn, std::move(args)});
        }
        throw ParseError("unknown identifier '" + std::string(t.text) + "'", t.offset);
    }

    void expect(Tok kind, const char* what) {
        const Token& t = lex_.peek();
        if (t.kind != kind) throw ParseError(std::string("expected ") + what, t.offset);
        lex_.take();
    }

    Lexer lex_;
};

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

double eval_node(const Node& n, double x, double t, double alpha) {
    auto rec = [&](const NodePtr& p) { return eval_node(*p, x, t, alpha); };
    return std::visit(
        Overloaded{
            [](const Constant& c) { return c.value; },
            [&](const VariableRef& v) {
                switch (v.var) {
                    case Variable::X: return x;
                    case Variable::T: return t;
                    case Variable::Alpha: return alpha;
                }
                return 0.0;
            },
            [&](const Negate& u) { return -rec(u.operand); },
            [&](const Binary& b) {
                const double l = rec(b.lhs);
                const double r = rec(b.rhs);
                switch (b.op) {
                    case BinaryOp::Add: return l + r;
                    case BinaryOp::Sub: return l - r;
                    case BinaryOp::Mul: return l * r;
                    case BinaryOp::Div:
                        if (r == 0.0) throw DomainError("expression: division by zero");
                        return l / r;
                    case BinaryOp::Pow: return std::pow(l, r);
                }
                return 0.0;
            },
            [&](const Call& c) {
                const double a0 = rec(c.args[0]);
                switch (c.fn) {
                    case Function::Sin: return std::sin(a0);
                    case Function::Cos: return std::cos(a0);
                    case Function::Exp: return std::exp(a0);
                    case Function::Pow: return std::pow(a0, rec(c.args[1]));
                    case Function::Gamma: return specfun::gamma(a0);
                    case Function::Ml2:
                        return specfun::mittag_leffler({a0, rec(c.args[1])}, rec(c.args[2]));
                }
                return 0.0;
            },
        },
        n.data);
}

void print_node(const Node& n, std::string& out) {
    std::visit(Overloaded{
                   [&](const Constant& c) {
                       char buf[32];
                       std::snprintf(buf, sizeof buf, "%.17g", c.value);
                       out += buf;
                   },
                   [&](const VariableRef& v) { out += name(v.var); },
                   [&](const Negate& u) {
                       out += "(-";
                       print_node(*u.operand, out);
                       out += ')';
                   },
                   [&](const Binary& b) {
                       static constexpr char kOps[] = {'+', '-', '*', '/', '^'};
                       out += '(';
                       print_node(*b.lhs, out);
                       out += kOps[static_cast<int>(b.op)];
                       print_node(*b.rhs, out);
                       out += ')';
                   },
                   [&](const Call& c) {
                       out += name(c.fn);
                       out += '(';
                       for (std::size_t i = 0; i < c.args.size(); ++i) {
                           if (i) out += ',';
                           print_node(*c.args[i], out);
                       }
                       out += ')';
                   },
               },
               n.data);
}

bool uses_node(const Node& n, Variable v) {
    return std::visit(Overloaded{
                          [](const Constant&) { return false; },
                          [&](const VariableRef& r) { return r.var == v; },
                          [&](const Negate& u) { return uses_node(*u.operand, v); },
                          [&](const Binary& b) { return uses_node(*b.lhs, v) || uses_node(*b.rhs, v); },
                          [&](const Call& c) {
                              for (const auto& a : c.args) {
                                  if (uses_node(*a, v)) return true;
                              }
                              return false;
                          },
                      },
                      n.data);
}

}  // namespace

Expr Expr::parse(std::string_view src) {
    Parser p(src);
    return Expr(p.parse_all(), std::string(src));
}

double Expr::eval(double x, double t, double alpha) const { return eval_node(*root_, x, t, alpha); }

std::string Expr::to_string() const {
    std::string out;
    print_node(*root_, out);
    return out;
}

bool Expr::uses(Variable v) const { return uses_node(*root_, v); }

}  // namespace fracl1::expr
