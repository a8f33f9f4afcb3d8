#include "wforge/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

namespace wf {

class ExprNode {
public:
    NodeKind kind;
    cplx value{};            // Literal
    int exponent = 0;        // Pow
    FuncKind func{};         // Func
    ExprPtr lhs, rhs;        // children (lhs only for Neg/Func/Pow)
    bool holomorphic = true;
    bool has_abs = false;

    static ExprPtr make_literal(cplx v) {
        auto n = std::make_shared<ExprNode>();
        n->kind = NodeKind::Literal;
        n->value = v;
        return n;
    }
    static ExprPtr make_var(bool bar) {
        auto n = std::make_shared<ExprNode>();
        n->kind = bar ? NodeKind::VarZbar : NodeKind::VarZ;
        n->holomorphic = !bar;
        return n;
    }
    static ExprPtr make_binary(NodeKind k, ExprPtr a, ExprPtr b) {
        auto n = std::make_shared<ExprNode>();
        n->kind = k;
        n->holomorphic = a->holomorphic && b->holomorphic;
        n->has_abs = a->has_abs || b->has_abs;
        n->lhs = std::move(a);
        n->rhs = std::move(b);
        return n;
    }
    static ExprPtr make_neg(ExprPtr a) {
        auto n = std::make_shared<ExprNode>();
        n->kind = NodeKind::Neg;
        n->holomorphic = a->holomorphic;
        n->has_abs = a->has_abs;
        n->lhs = std::move(a);
        return n;
    }
    static ExprPtr make_pow(ExprPtr base, int e) {
        auto n = std::make_shared<ExprNode>();
        n->kind = NodeKind::Pow;
        n->exponent = e;
        n->holomorphic = base->holomorphic;
        n->has_abs = base->has_abs;
        n->lhs = std::move(base);
        return n;
    }
    static ExprPtr make_func(FuncKind f, ExprPtr a) {
        auto n = std::make_shared<ExprNode>();
        n->kind = NodeKind::Func;
        n->func = f;
        bool antiholo = (f == FuncKind::Conj || f == FuncKind::Re || f == FuncKind::Im ||
                         f == FuncKind::Abs);
        n->holomorphic = a->holomorphic && !antiholo;
        n->has_abs = a->has_abs || f == FuncKind::Abs;
        n->lhs = std::move(a);
        return n;
    }
};

namespace {

bool is_literal_value(const ExprPtr& n, cplx v) {
    return n->kind == NodeKind::Literal && n->value == v;
}

// Folding constructors used when building derivative trees. The parser never
// folds, so parse(print(e)) reproduces printed trees verbatim.
ExprPtr fadd(ExprPtr a, ExprPtr b) {
    if (is_literal_value(a, 0.0)) return b;
    if (is_literal_value(b, 0.0)) return a;
    if (a->kind == NodeKind::Literal && b->kind == NodeKind::Literal)
        return ExprNode::make_literal(a->value + b->value);
    return ExprNode::make_binary(NodeKind::Add, std::move(a), std::move(b));
}
ExprPtr fsub(ExprPtr a, ExprPtr b) {
    if (is_literal_value(b, 0.0)) return a;
    if (a->kind == NodeKind::Literal && b->kind == NodeKind::Literal)
        return ExprNode::make_literal(a->value - b->value);
    if (is_literal_value(a, 0.0)) return ExprNode::make_neg(std::move(b));
    return ExprNode::make_binary(NodeKind::Sub, std::move(a), std::move(b));
}
ExprPtr fmul(ExprPtr a, ExprPtr b) {
    if (is_literal_value(a, 0.0) || is_literal_value(b, 0.0))
        return ExprNode::make_literal(0.0);
    if (is_literal_value(a, 1.0)) return b;
    if (is_literal_value(b, 1.0)) return a;
    if (a->kind == NodeKind::Literal && b->kind == NodeKind::Literal)
        return ExprNode::make_literal(a->value * b->value);
    return ExprNode::make_binary(NodeKind::Mul, std::move(a), std::move(b));
}
ExprPtr fdiv(ExprPtr a, ExprPtr b) {
    if (is_literal_value(a, 0.0)) return ExprNode::make_literal(0.0);
    if (is_literal_value(b, 1.0)) return a;
    return ExprNode::make_binary(NodeKind::Div, std::move(a), std::move(b));
}
ExprPtr fpow(ExprPtr base, int e) {
    if (e == 0) return ExprNode::make_literal(1.0);
    if (e == 1) return base;
    return ExprNode::make_pow(std::move(base), e);
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over a byte string, reporting byte offsets.

struct Parser {
    std::string_view src;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool match(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    ExprPtr parse_expression() {
        ExprPtr lhs = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                ExprPtr rhs = parse_term();
                lhs = ExprNode::make_binary(c == '+' ? NodeKind::Add : NodeKind::Sub,
                                            std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos;
                ExprPtr rhs = parse_factor();
                lhs = ExprNode::make_binary(c == '*' ? NodeKind::Mul : NodeKind::Div,
                                            std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    // factor := ('-')* power
    ExprPtr parse_factor() {
        if (match('-')) return ExprNode::make_neg(parse_factor());
        if (match('+')) return parse_factor();
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (peek() == '^') {
            ++pos;
            long long e = parse_exponent();
            if (e > 64 || e < -64) fail("exponent magnitude exceeds 64");
            return ExprNode::make_pow(std::move(base), static_cast<int>(e));
        }
        return base;
    }

    // exponent := ['-'] digits ['^' exponent] | '(' exponent ')'
    // A tower of integer exponents folds right-associatively into one integer.
    long long parse_exponent() {
        skip_ws();
        if (match('(')) {
            long long inner = parse_exponent();
            if (!match(')')) fail("expected ')' in exponent");
            return inner;
        }
        bool negative = false;
        if (match('-')) negative = true;
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) fail("expected integer exponent");
        // Reject fractional exponents like z^2.5 explicitly.
        if (pos < src.size() && (src[pos] == '.' || src[pos] == 'e' || src[pos] == 'E')) {
            pos = start;
            throw NonIntegerExponent("non-integer exponent", start);
        }
        long long value = 0;
        auto res = std::from_chars(src.data() + start, src.data() + pos, value);
        if (res.ec != std::errc()) fail("invalid integer exponent");
        if (negative) value = -value;
        if (peek() == '^') {
            ++pos;
            long long upper = parse_exponent();
            if (upper < 0) throw NonIntegerExponent("negative exponent in tower", pos);
            long long folded = 1;
            for (long long k = 0; k < upper; ++k) {
                folded *= value;
                if (folded > (1 << 20) || folded < -(1 << 20)) fail("exponent tower overflow");
            }
            value = folded;
        }
        return value;
    }

    ExprPtr parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            ExprPtr inner = parse_expression();
            if (!match(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
        fail("expected operand");
    }

    ExprPtr parse_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos < src.size() && src[pos] == '.') {
            ++pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        }
        if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
            std::size_t mark = pos;
            ++pos;
            if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
            if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
                    ++pos;
            } else {
                pos = mark;  // 'e' was an identifier boundary, not an exponent
            }
        }
        double value = 0;
        auto res = std::from_chars(src.data() + start, src.data() + pos, value);
        if (res.ec != std::errc() || res.ptr != src.data() + pos) {
            pos = start;
            fail("malformed number literal");
        }
        return ExprNode::make_literal(value);
    }

    ExprPtr parse_identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
        std::string_view name = src.substr(start, pos - start);
        if (name == "z") return ExprNode::make_var(false);
        if (name == "zbar") return ExprNode::make_var(true);
        if (name == "i") return ExprNode::make_literal(cplx(0.0, 1.0));
        FuncKind f;
        if (name == "exp") f = FuncKind::Exp;
        else if (name == "log") f = FuncKind::Log;
        else if (name == "sin") f = FuncKind::Sin;
        else if (name == "cos") f = FuncKind::Cos;
        else if (name == "sqrt") f = FuncKind::Sqrt;
        else if (name == "conj") f = FuncKind::Conj;
        else if (name == "re") f = FuncKind::Re;
        else if (name == "im") f = FuncKind::Im;
        else if (name == "abs") f = FuncKind::Abs;
        else {
            pos = start;
            throw UnknownIdentifier("unknown identifier '" + std::string(name) + "'", start);
        }
        if (!match('(')) fail("expected '(' after function name");
        ExprPtr arg = parse_expression();
        if (!match(')')) fail("expected ')' after function argument");
        return ExprNode::make_func(f, std::move(arg));
    }
};

// ---------------------------------------------------------------------------
// Evaluation

void check_finite(cplx v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw PoleSignal("evaluation overflowed to a non-finite value");
}

cplx ipow(cplx base, int e) {
    bool invert = e < 0;
    unsigned n = invert ? static_cast<unsigned>(-static_cast<long long>(e))
                        : static_cast<unsigned>(e);
    cplx acc(1.0, 0.0), p = base;
    while (n) {
        if (n & 1u) acc *= p;
        p *= p;
        n >>= 1u;
    }
    if (invert) {
        if (std::abs(acc) < kPoleThreshold) throw PoleSignal();
        return cplx(1.0, 0.0) / acc;
    }
    return acc;
}

cplx eval_node(const ExprNode* n, cplx z, cplx zb) {
    switch (n->kind) {
        case NodeKind::Literal: return n->value;
        case NodeKind::VarZ: return z;
        case NodeKind::VarZbar: return zb;
        case NodeKind::Add: {
            cplx v = eval_node(n->lhs.get(), z, zb) + eval_node(n->rhs.get(), z, zb);
            check_finite(v);
            return v;
        }
        case NodeKind::Sub: {
            cplx v = eval_node(n->lhs.get(), z, zb) - eval_node(n->rhs.get(), z, zb);
            check_finite(v);
            return v;
        }
        case NodeKind::Mul: {
            cplx v = eval_node(n->lhs.get(), z, zb) * eval_node(n->rhs.get(), z, zb);
            check_finite(v);
            return v;
        }
        case NodeKind::Div: {
            cplx den = eval_node(n->rhs.get(), z, zb);
            if (std::abs(den) < kPoleThreshold) throw PoleSignal();
            cplx v = eval_node(n->lhs.get(), z, zb) / den;
            check_finite(v);
            return v;
        }
        case NodeKind::Pow: {
            cplx v = ipow(eval_node(n->lhs.get(), z, zb), n->exponent);
            check_finite(v);
            return v;
        }
        case NodeKind::Neg: return -eval_node(n->lhs.get(), z, zb);
        case NodeKind::Func: {
            cplx a = eval_node(n->lhs.get(), z, zb);
            cplx v;
            switch (n->func) {
                case FuncKind::Exp: v = std::exp(a); break;
                case FuncKind::Log:
                    if (std::abs(a) < kPoleThreshold)
                        throw DomainError("log of zero");
                    v = std::log(a);
                    break;
                case FuncKind::Sin: v = std::sin(a); break;
                case FuncKind::Cos: v = std::cos(a); break;
                case FuncKind::Sqrt: v = std::sqrt(a); break;
                case FuncKind::Conj: v = std::conj(a); break;
                case FuncKind::Re: v = cplx(a.real(), 0.0); break;
                case FuncKind::Im: v = cplx(a.imag(), 0.0); break;
                case FuncKind::Abs: v = cplx(std::abs(a), 0.0); break;
            }
            check_finite(v);
            return v;
        }
    }
    throw Error("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Wirtinger differentiation, treating z and zbar as independent variables.

ExprPtr diff(const ExprPtr& n, WirtingerVar which);

ExprPtr diff_other(const ExprPtr& n, WirtingerVar which) {
    return diff(n, which == WirtingerVar::DZ ? WirtingerVar::DZbar : WirtingerVar::DZ);
}

ExprPtr diff(const ExprPtr& n, WirtingerVar which) {
    const bool dz = which == WirtingerVar::DZ;
    switch (n->kind) {
        case NodeKind::Literal: return ExprNode::make_literal(0.0);
        case NodeKind::VarZ: return ExprNode::make_literal(dz ? 1.0 : 0.0);
        case NodeKind::VarZbar: return ExprNode::make_literal(dz ? 0.0 : 1.0);
        case NodeKind::Add: return fadd(diff(n->lhs, which), diff(n->rhs, which));
        case NodeKind::Sub: return fsub(diff(n->lhs, which), diff(n->rhs, which));
        case NodeKind::Mul:
            return fadd(fmul(diff(n->lhs, which), n->rhs), fmul(n->lhs, diff(n->rhs, which)));
        case NodeKind::Div:
            // (a/b)' = (a'b - a b') / b^2
            return fdiv(fsub(fmul(diff(n->lhs, which), n->rhs),
                             fmul(n->lhs, diff(n->rhs, which))),
                        fpow(n->rhs, 2));
        case NodeKind::Pow:
            // (a^k)' = k a^(k-1) a'
            return fmul(fmul(ExprNode::make_literal(static_cast<double>(n->exponent)),
                             fpow(n->lhs, n->exponent - 1)),
                        diff(n->lhs, which));
        case NodeKind::Neg: return ExprNode::make_neg(diff(n->lhs, which));
        case NodeKind::Func: {
            switch (n->func) {
                case FuncKind::Exp:
                    return fmul(ExprNode::make_func(FuncKind::Exp, n->lhs), diff(n->lhs, which));
                case FuncKind::Log: return fdiv(diff(n->lhs, which), n->lhs);
                case FuncKind::Sin:
                    return fmul(ExprNode::make_func(FuncKind::Cos, n->lhs), diff(n->lhs, which));
                case FuncKind::Cos:
                    return ExprNode::make_neg(fmul(ExprNode::make_func(FuncKind::Sin, n->lhs),
                                                   diff(n->lhs, which)));
                case FuncKind::Sqrt:
                    // d sqrt(a) = a' / (2 sqrt(a))
                    return fdiv(diff(n->lhs, which),
                                fmul(ExprNode::make_literal(2.0),
                                     ExprNode::make_func(FuncKind::Sqrt, n->lhs)));
                case FuncKind::Conj:
                    // d/dz conj(a) = conj(d/dzbar a), and symmetrically.
                    return ExprNode::make_func(FuncKind::Conj, diff_other(n->lhs, which));
                case FuncKind::Re: {
                    // re(a) = (a + conj a)/2
                    ExprPtr da = diff(n->lhs, which);
                    ExprPtr dconj = ExprNode::make_func(FuncKind::Conj, diff_other(n->lhs, which));
                    return fdiv(fadd(std::move(da), std::move(dconj)),
                                ExprNode::make_literal(2.0));
                }
                case FuncKind::Im: {
                    // im(a) = (a - conj a)/(2i)
                    ExprPtr da = diff(n->lhs, which);
                    ExprPtr dconj = ExprNode::make_func(FuncKind::Conj, diff_other(n->lhs, which));
                    return fdiv(fsub(std::move(da), std::move(dconj)),
                                ExprNode::make_literal(cplx(0.0, 2.0)));
                }
                case FuncKind::Abs:
                    throw UnsupportedNode("abs is not Wirtinger-differentiable");
            }
        }
    }
    throw Error("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Canonical printer. parse(print(e)) prints back to the same string.

int precedence(const ExprNode* n) {
    switch (n->kind) {
        case NodeKind::Add:
        case NodeKind::Sub: return 1;
        case NodeKind::Neg: return 1;  // printed with explicit parens when nested
        case NodeKind::Mul:
        case NodeKind::Div: return 2;
        case NodeKind::Pow: return 3;
        default: return 4;
    }
}

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt_literal(cplx v) {
    double re = v.real(), im = v.imag();
    if (im == 0.0) return fmt_double(re);
    if (re == 0.0) {
        if (im == 1.0) return "i";
        if (im == -1.0) return "-i";
        return fmt_double(im) + "*i";
    }
    std::string imag = (im == 1.0 || im == -1.0) ? "i" : fmt_double(std::abs(im)) + "*i";
    return "(" + fmt_double(re) + (im < 0 ? "-" : "+") + imag + ")";
}

void print_node(const ExprNode* n, std::string& out);

void print_child(const ExprNode* child, int parent_prec, bool is_right_of_nonassoc,
                 std::string& out) {
    int cp = precedence(child);
    bool parens = cp < parent_prec || (is_right_of_nonassoc && cp == parent_prec) ||
                  child->kind == NodeKind::Neg;
    if (parens) out.push_back('(');
    print_node(child, out);
    if (parens) out.push_back(')');
}

void print_node(const ExprNode* n, std::string& out) {
    switch (n->kind) {
        case NodeKind::Literal: out += fmt_literal(n->value); return;
        case NodeKind::VarZ: out += "z"; return;
        case NodeKind::VarZbar: out += "zbar"; return;
        case NodeKind::Add:
            print_child(n->lhs.get(), 1, false, out);
            out.push_back('+');
            print_child(n->rhs.get(), 1, false, out);
            return;
        case NodeKind::Sub:
            print_child(n->lhs.get(), 1, false, out);
            out.push_back('-');
            print_child(n->rhs.get(), 1, true, out);
            return;
        case NodeKind::Mul:
            print_child(n->lhs.get(), 2, false, out);
            out.push_back('*');
            print_child(n->rhs.get(), 2, false, out);
            return;
        case NodeKind::Div:
            print_child(n->lhs.get(), 2, false, out);
            out.push_back('/');
            print_child(n->rhs.get(), 2, true, out);
            return;
        case NodeKind::Pow: {
            const ExprNode* b = n->lhs.get();
            bool parens = precedence(b) < 4 || b->kind == NodeKind::Neg ||
                          (b->kind == NodeKind::Literal &&
                           (b->value.real() < 0 || b->value.imag() != 0));
            if (parens) out.push_back('(');
            print_node(b, out);
            if (parens) out.push_back(')');
            out.push_back('^');
            if (n->exponent < 0) {
                out += "(" + std::to_string(n->exponent) + ")";
            } else {
                out += std::to_string(n->exponent);
            }
            return;
        }
        case NodeKind::Neg:
            out.push_back('-');
            print_child(n->lhs.get(), 4, false, out);
            return;
        case NodeKind::Func: {
            static const char* names[] = {"exp", "log", "sin", "cos",
                                          "sqrt", "conj", "re", "im", "abs"};
            out += names[static_cast<int>(n->func)];
            out.push_back('(');
            print_node(n->lhs.get(), out);
            out.push_back(')');
            return;
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexExpr interface

ComplexExpr ComplexExpr::parse(std::string_view source) {
    Parser p{source};
    ExprPtr root = p.parse_expression();
    p.skip_ws();
    if (p.pos != source.size()) p.fail("unexpected trailing input");
    return ComplexExpr(std::move(root));
}

ComplexExpr ComplexExpr::literal(cplx value) { return ComplexExpr(ExprNode::make_literal(value)); }
ComplexExpr ComplexExpr::var_z() { return ComplexExpr(ExprNode::make_var(false)); }
ComplexExpr ComplexExpr::var_zbar() { return ComplexExpr(ExprNode::make_var(true)); }
ComplexExpr ComplexExpr::apply(FuncKind f, const ComplexExpr& arg) {
    return ComplexExpr(ExprNode::make_func(f, arg.root_));
}
ComplexExpr ComplexExpr::pow(const ComplexExpr& base, int exponent) {
    return ComplexExpr(fpow(base.root_, exponent));
}
ComplexExpr ComplexExpr::operator+(const ComplexExpr& o) const {
    return ComplexExpr(fadd(root_, o.root_));
}
ComplexExpr ComplexExpr::operator-(const ComplexExpr& o) const {
    return ComplexExpr(fsub(root_, o.root_));
}
ComplexExpr ComplexExpr::operator*(const ComplexExpr& o) const {
    return ComplexExpr(fmul(root_, o.root_));
}
ComplexExpr ComplexExpr::operator/(const ComplexExpr& o) const {
    return ComplexExpr(fdiv(root_, o.root_));
}
ComplexExpr ComplexExpr::operator-() const { return ComplexExpr(ExprNode::make_neg(root_)); }

cplx ComplexExpr::eval(cplx z) const {
    if (!root_) throw Error("evaluating an empty expression");
    return eval_node(root_.get(), z, std::conj(z));
}

ComplexExpr ComplexExpr::wirtinger(WirtingerVar which) const {
    if (!root_) throw Error("differentiating an empty expression");
    if (root_->has_abs) throw UnsupportedNode("abs is not Wirtinger-differentiable");
    if (which == WirtingerVar::DZbar && root_->holomorphic)
        return ComplexExpr(ExprNode::make_literal(0.0));
    return ComplexExpr(diff(root_, which));
}

std::string ComplexExpr::str() const {
    if (!root_) return "";
    std::string out;
    print_node(root_.get(), out);
    return out;
}

bool ComplexExpr::holomorphic() const { return root_ && root_->holomorphic; }
bool ComplexExpr::contains_abs() const { return root_ && root_->has_abs; }
bool ComplexExpr::is_zero_literal() const {
    return root_ && root_->kind == NodeKind::Literal && root_->value == cplx(0.0);
}

// ---------------------------------------------------------------------------
// Order estimation

OrderEstimate estimate_order_at(const ComplexExpr& e, cplx p) {
    if (!e.holomorphic())
        throw Error("order estimation requires a holomorphic-flagged expression");
    constexpr int kAngles = 8;
    constexpr double kRadii[] = {1e-2, 1e-3, 1e-4, 1e-5};
    constexpr int kNr = 4;
    // Fixed angular offset so rays do not line up with coordinate axes, where
    // factors like (1 - z^4) have nearby zeros.
    constexpr double kOffset = 0.37;

    double slopes[kAngles];
    for (int a = 0; a < kAngles; ++a) {
        double theta = kOffset + 2.0 * M_PI * a / kAngles;
        cplx dir = std::polar(1.0, theta);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (double r : kRadii) {
            cplx v = e.eval(p + r * dir);
            double mag = std::abs(v);
            if (mag == 0.0) throw InconclusiveOrder(std::numeric_limits<double>::infinity());
            double x = std::log(r), y = std::log(mag);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        slopes[a] = (kNr * sxy - sx * sy) / (kNr * sxx - sx * sx);
    }
    double mean = 0;
    for (double s : slopes) mean += s;
    mean /= kAngles;
    int order = static_cast<int>(std::lround(mean));
    double confidence = 0;
    for (double s : slopes) confidence = std::max(confidence, std::abs(s - order));
    if (confidence > 0.1) throw InconclusiveOrder(confidence);
    return {order, confidence};
}

int order_at(const ComplexExpr& e, cplx p) { return estimate_order_at(e, p).order; }

}  // namespace wf
