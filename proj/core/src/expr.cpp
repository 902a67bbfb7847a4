#include "blochlab/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace blochlab {

const char* func_name(FuncKind f) {
    switch (f) {
        case FuncKind::Exp: return "exp";
        case FuncKind::Log: return "log";
        case FuncKind::Sqrt: return "sqrt";
        case FuncKind::Sin: return "sin";
        case FuncKind::Cos: return "cos";
    }
    return "?";
}

namespace {

ExprNodePtr make_node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

ExprNodePtr const_node(cplx c) {
    ExprNode n;
    n.kind = NodeKind::Constant;
    n.value = c;
    return make_node(std::move(n));
}

bool is_const(const ExprNodePtr& p, cplx c) {
    return p->kind == NodeKind::Constant && p->value == c;
}

cplx apply_func(FuncKind f, cplx v) {
    switch (f) {
        case FuncKind::Exp: return std::exp(v);
        case FuncKind::Log: return std::log(v);
        case FuncKind::Sqrt: return std::sqrt(v);
        case FuncKind::Sin: return std::sin(v);
        case FuncKind::Cos: return std::cos(v);
    }
    return {};
}

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

} // namespace

cplx pow_int_value(cplx b, int n) {
    if (n < 0) return 1.0 / pow_int_value(b, -n);
    cplx acc{1.0, 0.0};
    cplx base = b;
    unsigned e = static_cast<unsigned>(n);
    while (e != 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

Expr::Expr() : node_(const_node({0.0, 0.0})) {}

Expr Expr::constant(cplx c) { return Expr(const_node(c)); }

Expr Expr::var() {
    static const ExprNodePtr z = [] {
        ExprNode n;
        n.kind = NodeKind::Var;
        return make_node(std::move(n));
    }();
    return Expr(z);
}

Expr Expr::func(FuncKind f, const Expr& arg) {
    if (arg.is_constant()) {
        const cplx v = apply_func(f, arg.constant_value());
        if (finite(v)) return constant(v);
    }
    ExprNode n;
    n.kind = NodeKind::Func;
    n.func = f;
    n.lhs = arg.ptr();
    return Expr(make_node(std::move(n)));
}

Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant()) {
        const cplx v = a.constant_value() + b.constant_value();
        if (finite(v)) return Expr::constant(v);
    }
    if (is_const(a.ptr(), {0.0, 0.0})) return b;
    if (is_const(b.ptr(), {0.0, 0.0})) return a;
    ExprNode n;
    n.kind = NodeKind::Add;
    n.lhs = a.ptr();
    n.rhs = b.ptr();
    return Expr::wrap(make_node(std::move(n)));
}

Expr operator-(const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant()) {
        const cplx v = a.constant_value() - b.constant_value();
        if (finite(v)) return Expr::constant(v);
    }
    if (is_const(b.ptr(), {0.0, 0.0})) return a;
    if (is_const(a.ptr(), {0.0, 0.0})) return -b;
    ExprNode n;
    n.kind = NodeKind::Sub;
    n.lhs = a.ptr();
    n.rhs = b.ptr();
    return Expr::wrap(make_node(std::move(n)));
}

Expr operator-(const Expr& a) {
    if (a.is_constant()) return Expr::constant(-a.constant_value());
    if (a.node().kind == NodeKind::Neg) return Expr::wrap(a.node().lhs);
    ExprNode n;
    n.kind = NodeKind::Neg;
    n.lhs = a.ptr();
    return Expr::wrap(make_node(std::move(n)));
}

Expr operator*(const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant()) {
        const cplx v = a.constant_value() * b.constant_value();
        if (finite(v)) return Expr::constant(v);
    }
    if (is_const(a.ptr(), {0.0, 0.0}) || is_const(b.ptr(), {0.0, 0.0}))
        return Expr::constant(0.0);
    if (is_const(a.ptr(), {1.0, 0.0})) return b;
    if (is_const(b.ptr(), {1.0, 0.0})) return a;
    if (a.node().kind == NodeKind::Neg) return -(Expr::wrap(a.node().lhs) * b);
    if (b.node().kind == NodeKind::Neg) return -(a * Expr::wrap(b.node().lhs));
    ExprNode n;
    n.kind = NodeKind::Mul;
    n.lhs = a.ptr();
    n.rhs = b.ptr();
    return Expr::wrap(make_node(std::move(n)));
}

Expr operator/(const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant() && b.constant_value() != cplx{0.0, 0.0}) {
        const cplx v = a.constant_value() / b.constant_value();
        if (finite(v)) return Expr::constant(v);
    }
    if (is_const(a.ptr(), {0.0, 0.0}) && !is_const(b.ptr(), {0.0, 0.0}))
        return Expr::constant(0.0);
    if (is_const(b.ptr(), {1.0, 0.0})) return a;
    if (a.node().kind == NodeKind::Neg) return -(Expr::wrap(a.node().lhs) / b);
    if (b.node().kind == NodeKind::Neg) return -(a / Expr::wrap(b.node().lhs));
    ExprNode n;
    n.kind = NodeKind::Div;
    n.lhs = a.ptr();
    n.rhs = b.ptr();
    return Expr::wrap(make_node(std::move(n)));
}

Expr pow_int(const Expr& f, int n) {
    if (n == 0) return Expr::constant(1.0); // g_0 == 1 by convention
    if (n == 1) return f;
    if (f.is_constant()) {
        const cplx v = pow_int_value(f.constant_value(), n);
        if (finite(v)) return Expr::constant(v);
    }
    ExprNode node;
    node.kind = NodeKind::Pow;
    node.exponent = n;
    node.lhs = f.ptr();
    return Expr::wrap(make_node(std::move(node)));
}

namespace {

cplx eval_node(const ExprNode& n, cplx z) {
    switch (n.kind) {
        case NodeKind::Constant: return n.value;
        case NodeKind::Var: return z;
        case NodeKind::Add: return eval_node(*n.lhs, z) + eval_node(*n.rhs, z);
        case NodeKind::Sub: return eval_node(*n.lhs, z) - eval_node(*n.rhs, z);
        case NodeKind::Mul: return eval_node(*n.lhs, z) * eval_node(*n.rhs, z);
        case NodeKind::Div: return eval_node(*n.lhs, z) / eval_node(*n.rhs, z);
        case NodeKind::Neg: return -eval_node(*n.lhs, z);
        case NodeKind::Pow: return pow_int_value(eval_node(*n.lhs, z), n.exponent);
        case NodeKind::Func: return apply_func(n.func, eval_node(*n.lhs, z));
    }
    return {};
}

} // namespace

cplx Expr::eval(cplx z) const {
    const cplx v = eval_node(*node_, z);
    if (!finite(v)) throw EvalError("expression is singular", z);
    return v;
}

std::size_t Expr::size() const {
    std::size_t count = 0;
    const std::function<void(const ExprNode&)> walk = [&](const ExprNode& n) {
        ++count;
        if (n.lhs) walk(*n.lhs);
        if (n.rhs) walk(*n.rhs);
    };
    walk(*node_);
    return count;
}

Expr derivative(const Expr& f) {
    const ExprNode& n = f.node();
    switch (n.kind) {
        case NodeKind::Constant: return Expr::constant(0.0);
        case NodeKind::Var: return Expr::constant(1.0);
        case NodeKind::Add: return derivative(Expr::wrap(n.lhs)) + derivative(Expr::wrap(n.rhs));
        case NodeKind::Sub: return derivative(Expr::wrap(n.lhs)) - derivative(Expr::wrap(n.rhs));
        case NodeKind::Neg: return -derivative(Expr::wrap(n.lhs));
        case NodeKind::Mul: {
            const Expr a = Expr::wrap(n.lhs), b = Expr::wrap(n.rhs);
            return derivative(a) * b + a * derivative(b);
        }
        case NodeKind::Div: {
            const Expr a = Expr::wrap(n.lhs), b = Expr::wrap(n.rhs);
            return (derivative(a) * b - a * derivative(b)) / pow_int(b, 2);
        }
        case NodeKind::Pow: {
            const Expr base = Expr::wrap(n.lhs);
            return Expr::constant(static_cast<double>(n.exponent)) *
                   pow_int(base, n.exponent - 1) * derivative(base);
        }
        case NodeKind::Func: {
            const Expr arg = Expr::wrap(n.lhs);
            const Expr darg = derivative(arg);
            switch (n.func) {
                case FuncKind::Exp: return Expr::func(FuncKind::Exp, arg) * darg;
                case FuncKind::Log: return darg / arg;
                case FuncKind::Sqrt:
                    return darg / (Expr::constant(2.0) * Expr::func(FuncKind::Sqrt, arg));
                case FuncKind::Sin: return Expr::func(FuncKind::Cos, arg) * darg;
                case FuncKind::Cos: return -Expr::func(FuncKind::Sin, arg) * darg;
            }
            break;
        }
    }
    throw std::logic_error("derivative: unreachable node kind");
}

Expr compose(const Expr& f, const Expr& inner) {
    const ExprNode& n = f.node();
    switch (n.kind) {
        case NodeKind::Constant: return f;
        case NodeKind::Var: return inner;
        case NodeKind::Add: return compose(Expr::wrap(n.lhs), inner) + compose(Expr::wrap(n.rhs), inner);
        case NodeKind::Sub: return compose(Expr::wrap(n.lhs), inner) - compose(Expr::wrap(n.rhs), inner);
        case NodeKind::Mul: return compose(Expr::wrap(n.lhs), inner) * compose(Expr::wrap(n.rhs), inner);
        case NodeKind::Div: return compose(Expr::wrap(n.lhs), inner) / compose(Expr::wrap(n.rhs), inner);
        case NodeKind::Neg: return -compose(Expr::wrap(n.lhs), inner);
        case NodeKind::Pow: return pow_int(compose(Expr::wrap(n.lhs), inner), n.exponent);
        case NodeKind::Func: return Expr::func(n.func, compose(Expr::wrap(n.lhs), inner));
    }
    throw std::logic_error("compose: unreachable node kind");
}

Expr dilate(const Expr& f, double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("dilation radius must lie in (0, 1)");
    return compose(f, Expr::constant(r) * Expr::var());
}

bool structurally_equal(const Expr& a, const Expr& b) {
    const ExprNode& x = a.node();
    const ExprNode& y = b.node();
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case NodeKind::Constant: return x.value == y.value;
        case NodeKind::Var: return true;
        case NodeKind::Pow:
            return x.exponent == y.exponent &&
                   structurally_equal(Expr::wrap(x.lhs), Expr::wrap(y.lhs));
        case NodeKind::Func:
            return x.func == y.func &&
                   structurally_equal(Expr::wrap(x.lhs), Expr::wrap(y.lhs));
        case NodeKind::Neg:
            return structurally_equal(Expr::wrap(x.lhs), Expr::wrap(y.lhs));
        default:
            return structurally_equal(Expr::wrap(x.lhs), Expr::wrap(y.lhs)) &&
                   structurally_equal(Expr::wrap(x.rhs), Expr::wrap(y.rhs));
    }
}

namespace {

void collect_singular(const ExprNode& n, std::vector<Expr>& out) {
    switch (n.kind) {
        case NodeKind::Div:
            out.push_back(Expr::wrap(n.rhs));
            break;
        case NodeKind::Pow:
            if (n.exponent < 0) out.push_back(Expr::wrap(n.lhs));
            break;
        case NodeKind::Func:
            if (n.func == FuncKind::Log) out.push_back(Expr::wrap(n.lhs));
            break;
        default:
            break;
    }
    if (n.lhs) collect_singular(*n.lhs, out);
    if (n.rhs) collect_singular(*n.rhs, out);
}

} // namespace

std::vector<Expr> singularity_candidates(const Expr& f) {
    std::vector<Expr> out;
    collect_singular(f.node(), out);
    return out;
}

// ----------------------------------------------------------------- printer

namespace {

// precedence: additive 1, multiplicative 2, power 3, atom 4
constexpr int kPrecAdd = 1;
constexpr int kPrecMul = 2;
constexpr int kPrecPow = 3;
constexpr int kPrecAtom = 4;

std::string real_repr(double x) {
    std::array<char, 32> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

// Constants print so that reparsing folds back to the same literal:
// nonnegative reals bare, everything else parenthesized.
std::string const_repr(cplx c) {
    const double re = c.real(), im = c.imag();
    if (im == 0.0) {
        if (re >= 0.0 && !std::signbit(re)) return real_repr(re);
        return "(-" + real_repr(-re) + ")";
    }
    if (re == 0.0) {
        if (im >= 0.0 && !std::signbit(im)) return real_repr(im) + "i";
        return "(-" + real_repr(-im) + "i)";
    }
    std::string s = "(";
    if (re >= 0.0 && !std::signbit(re)) s += real_repr(re);
    else s += "-" + real_repr(-re);
    if (im >= 0.0 && !std::signbit(im)) s += " + " + real_repr(im) + "i";
    else s += " - " + real_repr(-im) + "i";
    return s + ")";
}

std::string print_node(const ExprNode& n, int parent_prec, bool rhs_of_same);

std::string wrap_if(const std::string& s, bool cond) {
    return cond ? "(" + s + ")" : s;
}

std::string print_node(const ExprNode& n, int parent_prec, bool rhs_of_same) {
    switch (n.kind) {
        case NodeKind::Constant: return const_repr(n.value);
        case NodeKind::Var: return "z";
        case NodeKind::Add: {
            std::string s = print_node(*n.lhs, kPrecAdd, false) + " + " +
                            print_node(*n.rhs, kPrecAdd, true);
            return wrap_if(s, parent_prec > kPrecAdd || (parent_prec == kPrecAdd && rhs_of_same));
        }
        case NodeKind::Sub: {
            std::string s = print_node(*n.lhs, kPrecAdd, false) + " - " +
                            print_node(*n.rhs, kPrecAdd + 1, false);
            return wrap_if(s, parent_prec > kPrecAdd || (parent_prec == kPrecAdd && rhs_of_same));
        }
        case NodeKind::Mul: {
            std::string s = print_node(*n.lhs, kPrecMul, false) + "*" +
                            print_node(*n.rhs, kPrecMul, true);
            return wrap_if(s, parent_prec > kPrecMul || (parent_prec == kPrecMul && rhs_of_same));
        }
        case NodeKind::Div: {
            std::string s = print_node(*n.lhs, kPrecMul, false) + "/" +
                            print_node(*n.rhs, kPrecMul + 1, false);
            return wrap_if(s, parent_prec > kPrecMul || (parent_prec == kPrecMul && rhs_of_same));
        }
        case NodeKind::Neg: {
            std::string s = "-" + print_node(*n.lhs, kPrecMul, false);
            // a leading sign only binds at expression level
            return wrap_if(s, parent_prec > kPrecAdd || rhs_of_same);
        }
        case NodeKind::Pow:
            return print_node(*n.lhs, kPrecAtom, false) + "^" + std::to_string(n.exponent);
        case NodeKind::Func:
            return std::string(func_name(n.func)) + "(" + print_node(*n.lhs, 0, false) + ")";
    }
    return "?";
}

} // namespace

std::string Expr::str() const { return print_node(*node_, 0, false); }

// ------------------------------------------------------------ compiled tape

namespace {

void flatten(const ExprNode& n, std::vector<CompiledExpr>* /*unused*/) {}

} // namespace

CompiledExpr::CompiledExpr(const Expr& e) {
    // postorder flatten; track the stack high-water mark
    std::size_t depth = 0;
    std::size_t max_depth = 0;
    const std::function<void(const ExprNode&)> walk = [&](const ExprNode& n) {
        switch (n.kind) {
            case NodeKind::Constant:
            case NodeKind::Var:
                ++depth;
                if (depth > max_depth) max_depth = depth;
                break;
            case NodeKind::Add:
            case NodeKind::Sub:
            case NodeKind::Mul:
            case NodeKind::Div:
                walk(*n.lhs);
                walk(*n.rhs);
                --depth; // two popped, one pushed
                break;
            case NodeKind::Neg:
            case NodeKind::Pow:
            case NodeKind::Func:
                walk(*n.lhs);
                break;
        }
        tape_.push_back(Op{n.kind, n.func, n.exponent, n.value});
    };
    walk(e.node());
    depth_ = max_depth;
}

cplx CompiledExpr::run(cplx z, cplx* stack) const {
    cplx* top = stack;
    for (const Op& op : tape_) {
        switch (op.kind) {
            case NodeKind::Constant: *top++ = op.value; break;
            case NodeKind::Var: *top++ = z; break;
            case NodeKind::Add: top[-2] += top[-1]; --top; break;
            case NodeKind::Sub: top[-2] -= top[-1]; --top; break;
            case NodeKind::Mul: top[-2] *= top[-1]; --top; break;
            case NodeKind::Div: top[-2] /= top[-1]; --top; break;
            case NodeKind::Neg: top[-1] = -top[-1]; break;
            case NodeKind::Pow: top[-1] = pow_int_value(top[-1], op.exponent); break;
            case NodeKind::Func: top[-1] = apply_func(op.func, top[-1]); break;
        }
    }
    return top[-1];
}

cplx CompiledExpr::eval(cplx z) const {
    constexpr std::size_t kInlineDepth = 64;
    cplx v;
    if (depth_ <= kInlineDepth) {
        std::array<cplx, kInlineDepth> stack;
        v = run(z, stack.data());
    } else {
        std::vector<cplx> stack(depth_);
        v = run(z, stack.data());
    }
    if (!finite(v)) throw EvalError("expression is singular", z);
    return v;
}

} // namespace blochlab
