#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fracl1::expr {

enum class Variable { X, T, Alpha };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Function { Sin, Cos, Exp, Pow, Gamma, Ml2 };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Constant {
    double value;
};
struct VariableRef {
    Variable var;
};
struct Negate {
    NodePtr operand;
};
struct Binary {
    BinaryOp op;
    NodePtr lhs, rhs;
};
struct Call {
    Function fn;
    std::vector<NodePtr> args;
};

struct Node {
    std::variant<Constant, VariableRef, Negate, Binary, Call> data;
};

/// Number of arguments each function takes (ml2(a, b, z) = E_{a,b}(z) takes 3).
std::size_t arity(Function fn);
std::string_view name(Function fn);
std::string_view name(Variable v);

/// Immutable parsed expression over the variables x, t and alpha. The
/// identifier `pi` denotes the constant.
///
/// Grammar, loosest to tightest: `+ -` (left), `* /` (left), unary `-`,
/// `^` (right). Numbers are decimal literals with an optional exponent.
class Expr {
public:
    /// Throws ParseError with the byte offset of the offending token.
    static Expr parse(std::string_view src);

    /// Throws PoleError at gamma poles and DomainError on division by zero.
    double eval(double x, double t, double alpha) const;

    /// Canonical form: every compound node parenthesized, constants printed
    /// with 17 significant digits. Parsing it yields the same tree.
    std::string to_string() const;

    const Node& root() const { return *root_; }
    const std::string& source() const noexcept { return source_; }

    /// True if the variable occurs anywhere in the tree.
    bool uses(Variable v) const;

private:
    Expr(NodePtr root, std::string source) : root_(std::move(root)), source_(std::move(source)) {}

    NodePtr root_;
    std::string source_;
};

}  // namespace fracl1::expr
