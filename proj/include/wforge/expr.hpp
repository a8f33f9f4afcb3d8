// Immutable expression trees in the variables z and zbar.
//
// Grammar (bit-exact):
//   literals   3  2.5  1e-3  i
//   variables  z  zbar
//   operators  + - * / ^   with standard precedence, ^ right-associative
//              and restricted to integer exponents
//   functions  exp log sin cos sqrt conj re im abs
//   parentheses
//
// Evaluation substitutes zbar = conj(z) and uses principal branches for log
// and sqrt. A division whose denominator has modulus below kPoleThreshold
// raises PoleSignal instead of producing an IEEE infinity.
//
// An expression containing neither zbar nor any of conj/re/im/abs is flagged
// holomorphic; its d/dzbar Wirtinger derivative is the zero literal.
#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "wforge/errors.hpp"
#include "wforge/numeric.hpp"

namespace wf {

enum class NodeKind : unsigned char {
    Literal,
    VarZ,
    VarZbar,
    Add,
    Sub,
    Mul,
    Div,
    Pow,   // integer exponent
    Neg,
    Func,
};

enum class FuncKind : unsigned char { Exp, Log, Sin, Cos, Sqrt, Conj, Re, Im, Abs };

enum class WirtingerVar : unsigned char { DZ, DZbar };

class ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

class ComplexExpr {
public:
    ComplexExpr() = default;  // empty handle; evaluating throws

    static ComplexExpr parse(std::string_view source);

    // building blocks
    static ComplexExpr literal(cplx value);
    static ComplexExpr var_z();
    static ComplexExpr var_zbar();
    static ComplexExpr apply(FuncKind f, const ComplexExpr& arg);
    static ComplexExpr pow(const ComplexExpr& base, int exponent);

    ComplexExpr operator+(const ComplexExpr& o) const;
    ComplexExpr operator-(const ComplexExpr& o) const;
    ComplexExpr operator*(const ComplexExpr& o) const;
    ComplexExpr operator/(const ComplexExpr& o) const;
    ComplexExpr operator-() const;

    cplx eval(cplx z) const;
    ComplexExpr wirtinger(WirtingerVar which) const;
    std::string str() const;

    bool holomorphic() const;
    bool contains_abs() const;
    bool is_zero_literal() const;
    bool valid() const { return root_ != nullptr; }

private:
    explicit ComplexExpr(ExprPtr root) : root_(std::move(root)) {}
    ExprPtr root_;
    friend class ExprBuilder;
};

struct OrderEstimate {
    int order = 0;
    double confidence = 0.0;  // max per-direction deviation from the rounded order
};

// Numeric estimate of the vanishing/pole order of a holomorphic-flagged
// expression at p: least-squares slope of log|e| against log r over
// r in {1e-2, 1e-3, 1e-4, 1e-5}, one fit per each of 8 ray directions, then
// averaged and rounded. Throws InconclusiveOrder if the rays disagree with
// the rounded value by more than 0.1.
OrderEstimate estimate_order_at(const ComplexExpr& e, cplx p);

// Convenience wrapper returning just the integer order.
int order_at(const ComplexExpr& e, cplx p);

}  // namespace wf
