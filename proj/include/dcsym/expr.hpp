#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dcsym/rational.hpp"

namespace dcsym {

// Immutable expression tree in a fixed normal form:
//   - sums of terms, each term a rational coefficient times a power-product
//     of atoms (symbols, kernel applications, atomic powers);
//   - rational constants reduced, at most one per sum / product;
//   - products contain no sums (fully distributed) except inside atomic
//     powers such as (x+t)^(-1) or (1+x/d)^p with a non-integer exponent;
//   - exponents on a common base are added, kernels are folded where the
//     identity holds on the sampling branch (exp(ln s) = s, |z|^2 = z^2,
//     cos^2 = 1 - sin^2, sign*|z| = z, ...).
//
// Values are shared, never mutated; everything here is safe to use from
// multiple threads.

class Expr;
enum class Kind { Rat, Sym, Add, Mul, Pow, Ker };
enum class Fn { Exp, Ln, Abs, Sign, Sin, Cos, Sinh, Cosh, Arctan };

struct Node {
    Kind kind;
    Rational rat;             // Kind::Rat
    std::string sym;          // Kind::Sym
    Fn fn = Fn::Exp;          // Kind::Ker
    std::vector<Expr> kids;   // Add/Mul: children; Pow: {base, expo}; Ker: {arg}
    std::size_t hash = 0;
};

class Expr {
public:
    Expr() : p_(zero_node()) {}
    Expr(long long n) : Expr(Rational(n)) {}
    explicit Expr(const Rational& r) : p_(make_rat_node(r)) {}

    static Expr rational(const Rational& r) { return Expr(r); }
    static Expr symbol(const std::string& name);

    Kind kind() const { return p_->kind; }
    bool is_rat() const { return p_->kind == Kind::Rat; }
    bool is_sym() const { return p_->kind == Kind::Sym; }
    bool is_add() const { return p_->kind == Kind::Add; }
    bool is_mul() const { return p_->kind == Kind::Mul; }
    bool is_pow() const { return p_->kind == Kind::Pow; }
    bool is_ker() const { return p_->kind == Kind::Ker; }

    bool is_zero_lit() const { return is_rat() && p_->rat.is_zero(); }
    bool is_one_lit() const { return is_rat() && p_->rat.is_one(); }
    bool is_int() const { return is_rat() && p_->rat.is_integer(); }

    const Rational& rat() const { return p_->rat; }
    const std::string& sym() const { return p_->sym; }
    Fn fn() const { return p_->fn; }
    const std::vector<Expr>& kids() const { return p_->kids; }
    const Expr& base() const { return p_->kids[0]; }
    const Expr& expo() const { return p_->kids[1]; }
    const Expr& arg() const { return p_->kids[0]; }
    std::size_t hash() const { return p_->hash; }

    const Node* raw() const { return p_.get(); }

private:
    std::shared_ptr<const Node> p_;

    explicit Expr(std::shared_ptr<const Node> p) : p_(std::move(p)) {}

    static std::shared_ptr<const Node> zero_node();
    static std::shared_ptr<const Node> make_rat_node(const Rational& r);

    friend Expr finish(Node&& n);
};

namespace detail {
inline std::size_t hash_combine(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}
inline std::size_t node_hash(const Node& n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ULL + 0xcbf29ce484222325ULL;
    switch (n.kind) {
        case Kind::Rat: h = hash_combine(h, n.rat.hash()); break;
        case Kind::Sym: h = hash_combine(h, std::hash<std::string>{}(n.sym)); break;
        case Kind::Ker: h = hash_combine(h, static_cast<std::size_t>(n.fn)); break;
        default: break;
    }
    for (const auto& k : n.kids) h = hash_combine(h, k.hash());
    return h;
}
} // namespace detail

inline Expr finish(Node&& n) {
    n.hash = detail::node_hash(n);
    return Expr(std::make_shared<const Node>(std::move(n)));
}

inline std::shared_ptr<const Node> Expr::zero_node() {
    static const std::shared_ptr<const Node> z = [] {
        Node n;
        n.kind = Kind::Rat;
        n.rat = Rational(0);
        n.hash = detail::node_hash(n);
        return std::make_shared<const Node>(std::move(n));
    }();
    return z;
}

inline std::shared_ptr<const Node> Expr::make_rat_node(const Rational& r) {
    Node n;
    n.kind = Kind::Rat;
    n.rat = r;
    return std::make_shared<const Node>([&] {
        n.hash = detail::node_hash(n);
        return std::move(n);
    }());
}

inline Expr Expr::symbol(const std::string& name) {
    Node n;
    n.kind = Kind::Sym;
    n.sym = name;
    return finish(std::move(n));
}

// ---------------------------------------------------------------- ordering

inline int cmp(const Expr& a, const Expr& b);

inline int cmp_kids(const std::vector<Expr>& a, const std::vector<Expr>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

inline int cmp(const Expr& a, const Expr& b) {
    if (a.raw() == b.raw()) return 0;
    int ka = static_cast<int>(a.kind()), kb = static_cast<int>(b.kind());
    if (ka != kb) return ka < kb ? -1 : 1;
    switch (a.kind()) {
        case Kind::Rat: {
            if (a.rat() == b.rat()) return 0;
            return a.rat() < b.rat() ? -1 : 1;
        }
        case Kind::Sym: {
            int c = a.sym().compare(b.sym());
            return c < 0 ? -1 : (c > 0 ? 1 : 0);
        }
        case Kind::Ker: {
            if (a.fn() != b.fn())
                return static_cast<int>(a.fn()) < static_cast<int>(b.fn()) ? -1 : 1;
            return cmp(a.arg(), b.arg());
        }
        default:
            return cmp_kids(a.kids(), b.kids());
    }
}

inline bool equal(const Expr& a, const Expr& b) {
    if (a.raw() == b.raw()) return true;
    if (a.hash() != b.hash()) return false;
    return cmp(a, b) == 0;
}

struct ExprLess {
    bool operator()(const Expr& a, const Expr& b) const { return cmp(a, b) < 0; }
};

// ------------------------------------------------------------ constructors

Expr make_add(std::vector<Expr> terms);
Expr make_mul(std::vector<Expr> factors);
Expr make_pow(Expr base, Expr expo);
Expr make_kernel(Fn fn, Expr arg);

inline Expr operator+(const Expr& a, const Expr& b) { return make_add({a, b}); }
inline Expr operator-(const Expr& a, const Expr& b) {
    return make_add({a, make_mul({Expr(-1), b})});
}
inline Expr operator*(const Expr& a, const Expr& b) { return make_mul({a, b}); }
inline Expr operator/(const Expr& a, const Expr& b) {
    return make_mul({a, make_pow(b, Expr(-1))});
}
inline Expr operator-(const Expr& a) { return make_mul({Expr(-1), a}); }

inline Expr pow(const Expr& b, const Expr& e) { return make_pow(b, e); }
inline Expr pow(const Expr& b, long long e) { return make_pow(b, Expr(e)); }
inline Expr exp_(const Expr& a) { return make_kernel(Fn::Exp, a); }
inline Expr ln_(const Expr& a) { return make_kernel(Fn::Ln, a); }
inline Expr abs_(const Expr& a) { return make_kernel(Fn::Abs, a); }
inline Expr sign_(const Expr& a) { return make_kernel(Fn::Sign, a); }
inline Expr sin_(const Expr& a) { return make_kernel(Fn::Sin, a); }
inline Expr cos_(const Expr& a) { return make_kernel(Fn::Cos, a); }
inline Expr sinh_(const Expr& a) { return make_kernel(Fn::Sinh, a); }
inline Expr cosh_(const Expr& a) { return make_kernel(Fn::Cosh, a); }
inline Expr arctan_(const Expr& a) { return make_kernel(Fn::Arctan, a); }
inline Expr sqrt_(const Expr& a) { return make_pow(a, Expr(Rational(1, 2))); }
inline Expr tan_(const Expr& a) {
    return make_mul({make_kernel(Fn::Sin, a), make_pow(make_kernel(Fn::Cos, a), Expr(-1))});
}

// Split a normalized term into (rational coefficient, remaining monomial).
inline std::pair<Rational, Expr> coeff_split(const Expr& t) {
    if (t.is_rat()) return {t.rat(), Expr(1)};
    if (t.is_mul() && t.kids()[0].is_rat()) {
        const auto& ks = t.kids();
        if (ks.size() == 2) return {ks[0].rat(), ks[1]};
        Node n;
        n.kind = Kind::Mul;
        n.kids.assign(ks.begin() + 1, ks.end());
        return {ks[0].rat(), finish(std::move(n))};
    }
    return {Rational(1), t};
}

namespace detail {

// Rebuild helpers that assume the parts are already in normal form.
inline Expr raw_mul(Rational coeff, std::vector<Expr> factors) {
    if (coeff.is_zero()) return Expr(0);
    if (factors.empty()) return Expr(coeff);
    if (coeff.is_one() && factors.size() == 1) return factors[0];
    Node n;
    n.kind = Kind::Mul;
    if (!coeff.is_one()) n.kids.push_back(Expr(coeff));
    for (auto& f : factors) n.kids.push_back(std::move(f));
    if (n.kids.size() == 1) return n.kids[0];
    return finish(std::move(n));
}

inline Expr raw_add(std::vector<Expr> terms) {
    if (terms.empty()) return Expr(0);
    if (terms.size() == 1) return terms[0];
    Node n;
    n.kind = Kind::Add;
    n.kids = std::move(terms);
    return finish(std::move(n));
}

inline Expr raw_pow(Expr b, Expr e) {
    Node n;
    n.kind = Kind::Pow;
    n.kids = {std::move(b), std::move(e)};
    return finish(std::move(n));
}

inline Expr raw_ker(Fn fn, Expr a) {
    Node n;
    n.kind = Kind::Ker;
    n.fn = fn;
    n.kids = {std::move(a)};
    return finish(std::move(n));
}

// True when the leading (first in canonical order) term carries a negative
// coefficient; used to pull signs out of odd kernels and atomic power bases.
inline bool leading_negative(const Expr& e) {
    if (e.is_rat()) return e.rat().is_negative();
    if (e.is_add()) return leading_negative(e.kids()[0]);
    if (e.is_mul()) return coeff_split(e).first.is_negative();
    return false;
}

} // namespace detail

inline Expr make_add(std::vector<Expr> terms) {
    Rational constant(0);
    std::map<Expr, Rational, ExprLess> acc;
    std::vector<Expr> stack(terms.rbegin(), terms.rend());
    while (!stack.empty()) {
        Expr t = std::move(stack.back());
        stack.pop_back();
        if (t.is_add()) {
            for (auto it = t.kids().rbegin(); it != t.kids().rend(); ++it) stack.push_back(*it);
            continue;
        }
        if (t.is_rat()) {
            constant += t.rat();
            continue;
        }
        auto [c, mono] = coeff_split(t);
        if (mono.is_one_lit()) { constant += c; continue; }
        auto [it, fresh] = acc.emplace(std::move(mono), c);
        if (!fresh) it->second += c;
    }
    std::vector<Expr> out;
    out.reserve(acc.size() + 1);
    if (!constant.is_zero()) out.push_back(Expr(constant));
    for (auto& [mono, c] : acc) {
        if (c.is_zero()) continue;
        if (c.is_one()) {
            out.push_back(mono);
        } else if (mono.is_mul()) {
            std::vector<Expr> fs(mono.kids());
            out.push_back(detail::raw_mul(c, std::move(fs)));
        } else {
            out.push_back(detail::raw_mul(c, {mono}));
        }
    }
    return detail::raw_add(std::move(out));
}

namespace detail {

// Factor decomposition target used while normalizing a product.
struct MulAcc {
    Rational coeff{1};
    std::map<Expr, std::vector<Expr>, ExprLess> powers;  // base -> exponents
    std::vector<Expr> exp_args;                          // merged exp() arguments

    void put(const Expr& base, const Expr& expo);
};

} // namespace detail

inline Expr make_pow(Expr base, Expr expo);

inline void detail::MulAcc::put(const Expr& base, const Expr& expo) {
    powers[base].push_back(expo);
}

inline Expr make_mul(std::vector<Expr> factors) {
    detail::MulAcc acc;
    std::vector<Expr> stack(factors.rbegin(), factors.rend());
    std::vector<Expr> sum_factors;  // expanded at the end
    while (!stack.empty()) {
        Expr f = std::move(stack.back());
        stack.pop_back();
        if (f.is_mul()) {
            for (auto it = f.kids().rbegin(); it != f.kids().rend(); ++it) stack.push_back(*it);
            continue;
        }
        if (f.is_rat()) {
            if (f.rat().is_zero()) return Expr(0);
            acc.coeff *= f.rat();
            continue;
        }
        if (f.is_ker() && f.fn() == Fn::Exp) {
            acc.exp_args.push_back(f.arg());
            continue;
        }
        if (f.is_add()) {
            sum_factors.push_back(std::move(f));
            continue;
        }
        if (f.is_pow()) {
            acc.put(f.base(), f.expo());
            continue;
        }
        acc.put(f, Expr(1));
    }

    // exp factors merge by adding arguments
    if (!acc.exp_args.empty()) {
        Expr a = make_add(std::move(acc.exp_args));
        Expr e = make_kernel(Fn::Exp, a);
        if (e.is_rat()) {
            acc.coeff *= e.rat();
        } else if (e.is_pow()) {
            acc.put(e.base(), e.expo());  // exp(c*ln z) folded to z^c
        } else if (e.is_mul() || e.is_add()) {
            // folding produced a composite; restart with it as a plain factor
            std::vector<Expr> redo{std::move(e), Expr(acc.coeff)};
            for (auto& [b, exps] : acc.powers)
                for (auto& x : exps) redo.push_back(make_pow(b, x));
            for (auto& s : sum_factors) redo.push_back(std::move(s));
            return make_mul(std::move(redo));
        } else {
            acc.put(e, Expr(1));
        }
    }

    // combine exponents per base, fold rational^integer into the coefficient
    std::vector<Expr> flat;
    bool sign_seen = false;
    for (auto& [base, exps] : acc.powers) {
        Expr etot = exps.size() == 1 ? exps[0] : make_add(std::move(exps));
        if (etot.is_zero_lit()) continue;
        Expr p = make_pow(base, etot);
        if (p.is_rat()) { acc.coeff *= p.rat(); continue; }
        if (p.is_add()) { sum_factors.push_back(std::move(p)); continue; }
        if (p.is_mul()) {
            for (const auto& k : p.kids()) {
                if (k.is_rat()) acc.coeff *= k.rat();
                else if (k.is_add()) sum_factors.push_back(k);
                else flat.push_back(k);
            }
            continue;
        }
        if (p.is_ker() && p.fn() == Fn::Sign) sign_seen = true;
        flat.push_back(std::move(p));
    }
    if (acc.coeff.is_zero()) return Expr(0);

    // sign(z) * |z|^e -> z * |z|^(e-1); applies with e's odd part already
    // reduced to a single |z| factor for integer exponents
    if (sign_seen) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < flat.size() && !changed; ++i) {
                if (!(flat[i].is_ker() && flat[i].fn() == Fn::Sign)) continue;
                Expr z = flat[i].arg();
                for (std::size_t j = 0; j < flat.size(); ++j) {
                    Expr b, e;
                    if (flat[j].is_ker() && flat[j].fn() == Fn::Abs) { b = flat[j].arg(); e = Expr(1); }
                    else if (flat[j].is_pow() && flat[j].base().is_ker() &&
                             flat[j].base().fn() == Fn::Abs) { b = flat[j].base().arg(); e = flat[j].expo(); }
                    else continue;
                    if (!equal(b, z)) continue;
                    flat.erase(flat.begin() + (i < j ? j : i));
                    flat.erase(flat.begin() + (i < j ? i : j));
                    Expr repl = make_mul({z, make_pow(make_kernel(Fn::Abs, z), e - Expr(1))});
                    Expr rest = detail::raw_mul(Rational(1), std::move(flat));
                    std::vector<Expr> nf{repl, rest, Expr(acc.coeff)};
                    for (auto& sf : sum_factors) nf.push_back(std::move(sf));
                    return make_mul(std::move(nf));
                }
            }
        }
    }

    std::sort(flat.begin(), flat.end(), ExprLess{});
    Expr core = detail::raw_mul(acc.coeff, std::move(flat));
    if (sum_factors.empty()) return core;

    // distribute over the remaining sums
    Expr out = core;
    for (auto& s : sum_factors) {
        std::vector<Expr> terms;
        terms.reserve(s.kids().size());
        for (const auto& t : s.kids()) terms.push_back(make_mul({out, t}));
        out = make_add(std::move(terms));
    }
    return out;
}

inline Expr make_pow(Expr base, Expr expo) {
    if (expo.is_zero_lit()) {
        if (base.is_zero_lit()) throw arithmetic_error("pow: 0^0");
        return Expr(1);
    }
    if (expo.is_one_lit()) return base;
    if (base.is_zero_lit()) {
        if (expo.is_rat() && !expo.rat().is_negative()) return Expr(0);
        throw arithmetic_error("pow: zero base with non-positive exponent");
    }
    if (base.is_one_lit()) return Expr(1);

    if (base.is_rat() && expo.is_rat()) {
        const Rational& r = base.rat();
        const Rational& e = expo.rat();
        if (e.is_integer()) return Expr(r.pow_int(e.num()));
        Rational root;
        if (r.nth_root(e.den(), root)) return Expr(root.pow_int(e.num()));
        // keep symbolic, but normalize the sign for odd denominators
    }

    bool int_expo = expo.is_int();
    long long ie = int_expo ? expo.rat().num() : 0;

    if (base.is_pow()) {
        // (b^e1)^n = b^(n*e1) for integer n
        if (int_expo) return make_pow(base.base(), make_mul({base.expo(), expo}));
        return detail::raw_pow(std::move(base), std::move(expo));
    }
    if (base.is_ker() && base.fn() == Fn::Exp)
        return make_kernel(Fn::Exp, make_mul({base.arg(), expo}));

    if (base.is_ker() && base.fn() == Fn::Abs && int_expo) {
        // |z|^(2k) = z^(2k);  |z|^(2k+1) = z^(2k) * |z|
        long long even = (ie % 2 == 0) ? ie : ie - 1;
        if (even != 0) {
            Expr zpart = make_pow(base.arg(), Expr(even));
            Expr apart = (ie == even) ? Expr(1) : base;
            return make_mul({zpart, apart});
        }
        return base;  // ie == 1 handled earlier
    }
    if (base.is_ker() && base.fn() == Fn::Sign && int_expo) {
        if (ie % 2 == 0) return Expr(1);
        return base;
    }
    if (base.is_ker() && (base.fn() == Fn::Cos || base.fn() == Fn::Cosh) && int_expo &&
        (ie >= 2 || ie <= -2)) {
        // cos^2 = 1 - sin^2, cosh^2 = 1 + sinh^2: canonical trig polynomials,
        // applied to negative powers as well so both routes to 1/cos^2 agree
        long long rem = ((ie % 2) + 2) % 2;
        long long half = (ie - rem) / 2;
        Expr s = make_kernel(base.fn() == Fn::Cos ? Fn::Sin : Fn::Sinh, base.arg());
        Expr s2 = make_pow(s, Expr(2));
        Expr one_ms = base.fn() == Fn::Cos ? make_add({Expr(1), make_mul({Expr(-1), s2})})
                                           : make_add({Expr(1), s2});
        Expr head = make_pow(one_ms, Expr(half));
        return rem ? make_mul({head, base}) : head;
    }

    if (base.is_mul() && int_expo) {
        std::vector<Expr> fs;
        fs.reserve(base.kids().size());
        for (const auto& k : base.kids()) fs.push_back(make_pow(k, expo));
        return make_mul(std::move(fs));
    }
    if (base.is_mul()) {
        // split manifestly positive factors out of a non-integer power
        auto positive_factor = [](const Expr& k) {
            if (k.is_rat()) return !k.rat().is_negative() && !k.rat().is_zero();
            if (k.is_ker()) return k.fn() == Fn::Exp || k.fn() == Fn::Cosh || k.fn() == Fn::Abs;
            if (k.is_pow()) {
                if (k.expo().is_int() && k.expo().rat().num() % 2 == 0) return true;
                if (k.base().is_ker() &&
                    (k.base().fn() == Fn::Exp || k.base().fn() == Fn::Cosh ||
                     k.base().fn() == Fn::Abs))
                    return true;
            }
            return false;
        };
        std::vector<Expr> pos, rest;
        for (const auto& k : base.kids())
            (positive_factor(k) ? pos : rest).push_back(k);
        if (!pos.empty()) {
            std::vector<Expr> out;
            out.reserve(pos.size() + 1);
            for (const auto& k : pos) out.push_back(make_pow(k, expo));
            if (rest.size() == 1)
                out.push_back(make_pow(rest[0], expo));
            else if (!rest.empty())
                out.push_back(detail::raw_pow(make_mul(std::move(rest)), expo));
            return make_mul(std::move(out));
        }
    }

    if (base.is_add()) {
        constexpr long long kExpandLimit = 16;
        if (int_expo && ie >= 2 && ie <= kExpandLimit) {
            Expr acc = base;
            for (long long i = 1; i < ie; ++i) acc = make_mul({acc, base});
            return acc;
        }
        // atomic power of a sum: extract rational content and leading sign
        if (expo.is_rat()) {
            auto rat_gcd = [](const Rational& a, const Rational& b) {
                // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s)
                __int128 n1 = (__int128)a.num() * b.den();
                __int128 n2 = (__int128)b.num() * a.den();
                if (n1 < 0) n1 = -n1;
                if (n2 < 0) n2 = -n2;
                while (n2 != 0) { __int128 t = n1 % n2; n1 = n2; n2 = t; }
                return Rational::from_i128(n1, (__int128)a.den() * b.den());
            };
            Rational content(0);
            bool first = true;
            for (const auto& t : base.kids()) {
                Rational c = coeff_split(t).first.abs();
                content = first ? c : rat_gcd(content, c);
                first = false;
            }
            if (detail::leading_negative(base)) content = -content;
            if (!content.is_one() && !content.is_zero()) {
                Expr inner = make_mul({Expr(Rational(1) / content), base});
                Expr scale = make_pow(Expr(content), expo);
                return make_mul({scale, detail::raw_pow(std::move(inner), std::move(expo))});
            }
        }
    }

    if (base.is_rat() && base.rat().is_negative() && expo.is_rat() && expo.rat().den() % 2 == 1) {
        // (-r)^(p/q) with odd q: pull the sign out exactly
        Expr mag = make_pow(Expr(base.rat().abs()), expo);
        Expr sgn = (expo.rat().num() % 2 == 0) ? Expr(1) : Expr(-1);
        return make_mul({sgn, mag});
    }

    return detail::raw_pow(std::move(base), std::move(expo));
}

inline Expr make_kernel(Fn fn, Expr arg) {
    switch (fn) {
        case Fn::Exp:
            if (arg.is_zero_lit()) return Expr(1);
            if (arg.is_ker() && arg.fn() == Fn::Ln) return arg.arg();
            // exp(c * ln z * R) = z^(c*R): fold a single first-power ln factor
            if (arg.is_mul()) {
                const auto& ks = arg.kids();
                for (std::size_t i = 0; i < ks.size(); ++i) {
                    if (ks[i].is_ker() && ks[i].fn() == Fn::Ln) {
                        std::vector<Expr> rest;
                        for (std::size_t j = 0; j < ks.size(); ++j)
                            if (j != i) rest.push_back(ks[j]);
                        return make_pow(ks[i].arg(), make_mul(std::move(rest)));
                    }
                }
            }
            // exp(a + c ln z + ...) = z^c exp(a + ...)
            if (arg.is_add()) {
                auto ln_part = [](const Expr& term) -> std::optional<std::pair<Expr, Expr>> {
                    if (term.is_ker() && term.fn() == Fn::Ln)
                        return std::make_pair(term.arg(), Expr(1));
                    if (term.is_mul()) {
                        const auto& ks = term.kids();
                        for (std::size_t i = 0; i < ks.size(); ++i)
                            if (ks[i].is_ker() && ks[i].fn() == Fn::Ln) {
                                std::vector<Expr> rest;
                                for (std::size_t j = 0; j < ks.size(); ++j)
                                    if (j != i) rest.push_back(ks[j]);
                                return std::make_pair(ks[i].arg(), make_mul(std::move(rest)));
                            }
                    }
                    return std::nullopt;
                };
                std::vector<Expr> fold, keep;
                for (const auto& term : arg.kids()) {
                    if (auto lp = ln_part(term)) fold.push_back(make_pow(lp->first, lp->second));
                    else keep.push_back(term);
                }
                if (!fold.empty()) {
                    fold.push_back(make_kernel(Fn::Exp, make_add(std::move(keep))));
                    return make_mul(std::move(fold));
                }
            }
            break;
        case Fn::Ln:
            if (arg.is_one_lit()) return Expr(0);
            if (arg.is_ker() && arg.fn() == Fn::Exp) return arg.arg();
            break;
        case Fn::Abs:
            if (arg.is_rat()) return Expr(arg.rat().abs());
            if (arg.is_ker() && (arg.fn() == Fn::Abs || arg.fn() == Fn::Exp || arg.fn() == Fn::Cosh))
                return arg;
            if (arg.is_mul()) {
                auto [c, mono] = coeff_split(arg);
                if (!c.is_one())
                    return make_mul({Expr(c.abs()), make_kernel(Fn::Abs, mono)});
                // |a*b| with an even-power factor: pull it out
                for (std::size_t i = 0; i < arg.kids().size(); ++i) {
                    const Expr& k = arg.kids()[i];
                    if (k.is_pow() && k.expo().is_int() && k.expo().rat().num() % 2 == 0) {
                        std::vector<Expr> rest;
                        for (std::size_t j = 0; j < arg.kids().size(); ++j)
                            if (j != i) rest.push_back(arg.kids()[j]);
                        return make_mul({k, make_kernel(Fn::Abs, make_mul(std::move(rest)))});
                    }
                }
            }
            if (arg.is_pow() && arg.expo().is_int() && arg.expo().rat().num() % 2 == 0) return arg;
            if (detail::leading_negative(arg))
                return make_kernel(Fn::Abs, make_mul({Expr(-1), arg}));
            break;
        case Fn::Sign:
            if (arg.is_rat()) return Expr(arg.rat().sign());
            if (arg.is_ker() && (arg.fn() == Fn::Abs || arg.fn() == Fn::Exp || arg.fn() == Fn::Cosh))
                return Expr(1);
            if (arg.is_ker() && arg.fn() == Fn::Sign) return arg;
            if (arg.is_pow() && arg.expo().is_int() && arg.expo().rat().num() % 2 == 0) return Expr(1);
            if (arg.is_mul()) {
                auto [c, mono] = coeff_split(arg);
                if (!c.is_one())
                    return make_mul({Expr(c.sign()), make_kernel(Fn::Sign, mono)});
            }
            if (detail::leading_negative(arg))
                return make_mul({Expr(-1), make_kernel(Fn::Sign, make_mul({Expr(-1), arg}))});
            break;
        case Fn::Sin:
        case Fn::Sinh:
        case Fn::Arctan:
            if (arg.is_zero_lit()) return Expr(0);
            if (detail::leading_negative(arg))
                return make_mul({Expr(-1), make_kernel(fn, make_mul({Expr(-1), arg}))});
            break;
        case Fn::Cos:
        case Fn::Cosh:
            if (arg.is_zero_lit()) return Expr(1);
            if (detail::leading_negative(arg))
                return make_kernel(fn, make_mul({Expr(-1), arg}));
            break;
    }
    return detail::raw_ker(fn, std::move(arg));
}

// Renormalize (idempotent on already-normal trees).
inline Expr normalize(const Expr& e) {
    switch (e.kind()) {
        case Kind::Rat:
        case Kind::Sym:
            return e;
        case Kind::Add: {
            std::vector<Expr> ts;
            ts.reserve(e.kids().size());
            for (const auto& k : e.kids()) ts.push_back(normalize(k));
            return make_add(std::move(ts));
        }
        case Kind::Mul: {
            std::vector<Expr> fs;
            fs.reserve(e.kids().size());
            for (const auto& k : e.kids()) fs.push_back(normalize(k));
            return make_mul(std::move(fs));
        }
        case Kind::Pow:
            return make_pow(normalize(e.base()), normalize(e.expo()));
        case Kind::Ker:
            return make_kernel(e.fn(), normalize(e.arg()));
    }
    return e;
}

// ----------------------------------------------------------------- queries

inline void free_symbols(const Expr& e, std::set<std::string>& out) {
    switch (e.kind()) {
        case Kind::Sym: out.insert(e.sym()); return;
        case Kind::Rat: return;
        default:
            for (const auto& k : e.kids()) free_symbols(k, out);
    }
}

inline std::set<std::string> free_symbols(const Expr& e) {
    std::set<std::string> s;
    free_symbols(e, s);
    return s;
}

inline bool depends_on(const Expr& e, const std::string& s) {
    switch (e.kind()) {
        case Kind::Sym: return e.sym() == s;
        case Kind::Rat: return false;
        default:
            for (const auto& k : e.kids())
                if (depends_on(k, s)) return true;
            return false;
    }
}

inline Expr substitute(const Expr& e, const std::map<std::string, Expr>& m) {
    switch (e.kind()) {
        case Kind::Rat: return e;
        case Kind::Sym: {
            auto it = m.find(e.sym());
            return it == m.end() ? e : it->second;
        }
        case Kind::Add: {
            std::vector<Expr> ts;
            ts.reserve(e.kids().size());
            for (const auto& k : e.kids()) ts.push_back(substitute(k, m));
            return make_add(std::move(ts));
        }
        case Kind::Mul: {
            std::vector<Expr> fs;
            fs.reserve(e.kids().size());
            for (const auto& k : e.kids()) fs.push_back(substitute(k, m));
            return make_mul(std::move(fs));
        }
        case Kind::Pow:
            return make_pow(substitute(e.base(), m), substitute(e.expo(), m));
        case Kind::Ker:
            return make_kernel(e.fn(), substitute(e.arg(), m));
    }
    return e;
}

inline const char* fn_name(Fn f) {
    switch (f) {
        case Fn::Exp: return "exp";
        case Fn::Ln: return "ln";
        case Fn::Abs: return "abs";
        case Fn::Sign: return "sign";
        case Fn::Sin: return "sin";
        case Fn::Cos: return "cos";
        case Fn::Sinh: return "sinh";
        case Fn::Cosh: return "cosh";
        case Fn::Arctan: return "arctan";
    }
    return "?";
}

} // namespace dcsym
