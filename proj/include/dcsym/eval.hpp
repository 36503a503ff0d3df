#pragma once

#include <cmath>
#include <map>
#include <string>

#include "dcsym/expr.hpp"

namespace dcsym {

struct eval_error : std::runtime_error {
    enum What { Unbound, Singular } what_kind;
    eval_error(What w, const std::string& m) : std::runtime_error(m), what_kind(w) {}
};

using Point = std::map<std::string, double>;

inline double eval(const Expr& e, const Point& pt);

namespace detail {

inline double eval_pow(double b, const Expr& expo, const Point& pt) {
    if (expo.is_rat() && expo.rat().is_integer()) {
        long long n = expo.rat().num();
        if (b == 0.0 && n <= 0) throw eval_error(eval_error::Singular, "0 to non-positive power");
        double acc = 1.0, base = b;
        long long k = n < 0 ? -n : n;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return n < 0 ? 1.0 / acc : acc;
    }
    double e = eval(expo, pt);
    if (b > 0.0) return std::exp(e * std::log(b));
    if (b == 0.0) {
        if (e > 0.0) return 0.0;
        throw eval_error(eval_error::Singular, "0 to non-positive power");
    }
    // negative base, non-integer exponent: exact odd-denominator rationals only
    if (expo.is_rat() && expo.rat().den() % 2 == 1) {
        double mag = std::exp(e * std::log(-b));
        return expo.rat().num() % 2 == 0 ? mag : -mag;
    }
    throw eval_error(eval_error::Singular, "negative base with non-integer exponent");
}

} // namespace detail

inline double eval(const Expr& e, const Point& pt) {
    switch (e.kind()) {
        case Kind::Rat:
            return e.rat().to_double();
        case Kind::Sym: {
            auto it = pt.find(e.sym());
            if (it == pt.end())
                throw eval_error(eval_error::Unbound, "unbound symbol '" + e.sym() + "'");
            return it->second;
        }
        case Kind::Add: {
            double s = 0.0;
            for (const auto& k : e.kids()) s += eval(k, pt);
            return s;
        }
        case Kind::Mul: {
            double p = 1.0;
            for (const auto& k : e.kids()) p *= eval(k, pt);
            return p;
        }
        case Kind::Pow:
            return detail::eval_pow(eval(e.base(), pt), e.expo(), pt);
        case Kind::Ker: {
            double a = eval(e.arg(), pt);
            switch (e.fn()) {
                case Fn::Exp: return std::exp(a);
                case Fn::Ln:
                    if (a <= 0.0) throw eval_error(eval_error::Singular, "ln of non-positive value");
                    return std::log(a);
                case Fn::Abs: return std::fabs(a);
                case Fn::Sign: return a > 0 ? 1.0 : (a < 0 ? -1.0 : 0.0);
                case Fn::Sin: return std::sin(a);
                case Fn::Cos: return std::cos(a);
                case Fn::Sinh: return std::sinh(a);
                case Fn::Cosh: return std::cosh(a);
                case Fn::Arctan: return std::atan(a);
            }
        }
    }
    throw eval_error(eval_error::Singular, "unreachable");
}

// Evaluates a sum term-by-term, reporting the value together with the
// largest term magnitude; the scale makes the zero test robust against
// catastrophic cancellation masking a real residual.
inline std::pair<double, double> eval_with_scale(const Expr& e, const Point& pt) {
    if (!e.is_add()) {
        double v = eval(e, pt);
        return {v, std::fabs(v)};
    }
    double sum = 0.0, scale = 0.0;
    for (const auto& k : e.kids()) {
        double v = eval(k, pt);
        sum += v;
        scale = std::max(scale, std::fabs(v));
    }
    return {sum, scale};
}

} // namespace dcsym
