#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "blochlab/errors.hpp"

namespace blochlab {

using cplx = std::complex<double>;

enum class NodeKind : std::uint8_t { Constant, Var, Add, Sub, Mul, Div, Neg, Pow, Func };
enum class FuncKind : std::uint8_t { Exp, Log, Sqrt, Sin, Cos };

const char* func_name(FuncKind f);

struct ExprNode;
using ExprNodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    NodeKind kind = NodeKind::Constant;
    FuncKind func = FuncKind::Exp; // Func only
    int exponent = 0;              // Pow only
    cplx value{0.0, 0.0};          // Constant only
    ExprNodePtr lhs;
    ExprNodePtr rhs;               // binary nodes only
};

/// Immutable analytic expression in one complex variable. Built through the
/// factories and operators below, which fold constants and neutral elements
/// so that derivative output stays in closed form. log and sqrt take the
/// principal branch.
class Expr {
public:
    Expr(); // the zero constant

    static Expr constant(cplx c);
    static Expr constant(double c) { return constant(cplx{c, 0.0}); }
    static Expr var(); // z
    static Expr func(FuncKind f, const Expr& arg);

    const ExprNode& node() const { return *node_; }
    const ExprNodePtr& ptr() const { return node_; }
    static Expr wrap(ExprNodePtr n) { return Expr(std::move(n)); }

    bool is_constant() const { return node_->kind == NodeKind::Constant; }
    cplx constant_value() const { return node_->value; }

    /// Tree-walk evaluation. Throws EvalError if the result is not finite.
    cplx eval(cplx z) const;

    /// Canonical text form; reparses to a structurally equal expression.
    std::string str() const;

    std::size_t size() const; // node count

private:
    explicit Expr(ExprNodePtr n) : node_(std::move(n)) {}
    ExprNodePtr node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

/// f^n as a value-power node (repeated squaring at evaluation; never
/// expanded). pow_int(f, 0) is the constant 1.
Expr pow_int(const Expr& f, int n);

/// Exact symbolic derivative.
Expr derivative(const Expr& f);

/// z -> f(inner(z)) by substitution.
Expr compose(const Expr& f, const Expr& inner);

/// z -> f(r z); requires 0 < r < 1.
Expr dilate(const Expr& f, double r);

bool structurally_equal(const Expr& a, const Expr& b);

/// Sub-expressions whose zeros make evaluation singular: denominators,
/// negative-power bases, and log arguments.
std::vector<Expr> singularity_candidates(const Expr& f);

/// b^n by repeated squaring (n may be negative).
cplx pow_int_value(cplx b, int n);

/// Postorder instruction tape for tight grid loops; value-identical to
/// Expr::eval and safe to share across threads.
class CompiledExpr {
public:
    explicit CompiledExpr(const Expr& e);

    cplx eval(cplx z) const;

private:
    struct Op {
        NodeKind kind;
        FuncKind func;
        int exponent;
        cplx value;
    };
    std::vector<Op> tape_;
    std::size_t depth_ = 0;

    cplx run(cplx z, cplx* stack) const;
};

} // namespace blochlab
