#pragma once

#include <map>
#include <set>
#include <string>

#include "dcsym/expr.hpp"

namespace dcsym {

struct order_overflow : std::runtime_error {
    explicit order_overflow(const std::string& m) : std::runtime_error(m) {}
};

struct non_polynomial : std::runtime_error {
    explicit non_polynomial(const std::string& m) : std::runtime_error(m) {}
};

// Partial derivative treating every symbol as independent.
inline Expr diff(const Expr& e, const std::string& s) {
    if (!depends_on(e, s)) return Expr(0);
    switch (e.kind()) {
        case Kind::Rat:
            return Expr(0);
        case Kind::Sym:
            return e.sym() == s ? Expr(1) : Expr(0);
        case Kind::Add: {
            std::vector<Expr> ts;
            ts.reserve(e.kids().size());
            for (const auto& k : e.kids()) ts.push_back(diff(k, s));
            return make_add(std::move(ts));
        }
        case Kind::Mul: {
            std::vector<Expr> terms;
            const auto& ks = e.kids();
            for (std::size_t i = 0; i < ks.size(); ++i) {
                if (!depends_on(ks[i], s)) continue;
                std::vector<Expr> fs;
                fs.reserve(ks.size());
                for (std::size_t j = 0; j < ks.size(); ++j)
                    fs.push_back(j == i ? diff(ks[i], s) : ks[j]);
                terms.push_back(make_mul(std::move(fs)));
            }
            return make_add(std::move(terms));
        }
        case Kind::Pow: {
            const Expr& b = e.base();
            const Expr& n = e.expo();
            if (!depends_on(n, s)) {
                // n * b^(n-1) * b'
                return make_mul({n, make_pow(b, n - Expr(1)), diff(b, s)});
            }
            // b^n * (n' ln b + n b'/b)
            Expr dn = diff(n, s);
            Expr db = diff(b, s);
            Expr inner = make_add({make_mul({dn, ln_(b)}),
                                   make_mul({n, db, make_pow(b, Expr(-1))})});
            return make_mul({e, inner});
        }
        case Kind::Ker: {
            Expr da = diff(e.arg(), s);
            const Expr& a = e.arg();
            switch (e.fn()) {
                case Fn::Exp: return make_mul({e, da});
                case Fn::Ln: return make_mul({da, make_pow(a, Expr(-1))});
                case Fn::Abs: return make_mul({sign_(a), da});
                case Fn::Sign: return Expr(0);
                case Fn::Sin: return make_mul({cos_(a), da});
                case Fn::Cos: return make_mul({Expr(-1), sin_(a), da});
                case Fn::Sinh: return make_mul({cosh_(a), da});
                case Fn::Cosh: return make_mul({sinh_(a), da});
                case Fn::Arctan:
                    return make_mul({da, make_pow(Expr(1) + make_pow(a, Expr(2)), Expr(-1))});
            }
        }
    }
    return Expr(0);
}

// Chain-rule table for a total derivative: rule maps each dependent symbol
// to its derivative with respect to the direction; frontier symbols are the
// truncation boundary, and differentiating an expression that still contains
// one is an order overflow.
struct JetTable {
    std::map<std::string, Expr> rule;
    std::set<std::string> frontier;

    JetTable& set(const std::string& s, Expr d) {
        rule[s] = std::move(d);
        return *this;
    }
    JetTable& stop(const std::string& s) {
        frontier.insert(s);
        return *this;
    }
    JetTable merged(const JetTable& o) const {
        JetTable t = *this;
        for (const auto& [k, v] : o.rule) t.rule[k] = v;
        for (const auto& s : o.frontier) t.frontier.insert(s);
        return t;
    }
};

inline Expr total_diff(const Expr& e, const std::string& indep, const JetTable& jt) {
    std::set<std::string> syms = free_symbols(e);
    for (const auto& s : syms)
        if (jt.frontier.count(s) && !jt.rule.count(s))
            throw order_overflow("total derivative needs a rule for '" + s + "'");
    std::vector<Expr> parts;
    parts.push_back(diff(e, indep));
    for (const auto& s : syms) {
        auto it = jt.rule.find(s);
        if (it == jt.rule.end()) continue;
        parts.push_back(make_mul({it->second, diff(e, s)}));
    }
    return make_add(std::move(parts));
}

// Coefficients of a polynomial in s. Throws if s occurs with a non-integer
// or negative exponent, or inside a kernel/composite factor.
inline std::map<long long, Expr> collect_poly(const Expr& e0, const std::string& s) {
    Expr e = normalize(e0);
    std::map<long long, std::vector<Expr>> acc;
    auto add_term = [&](const Expr& term) {
        long long deg = 0;
        std::vector<Expr> rest;
        auto consume = [&](const Expr& f) {
            if (f.is_sym() && f.sym() == s) {
                deg += 1;
                return;
            }
            if (f.is_pow() && f.base().is_sym() && f.base().sym() == s) {
                if (!f.expo().is_int() || f.expo().rat().is_negative())
                    throw non_polynomial("non-polynomial power of '" + s + "'");
                deg += f.expo().rat().num();
                return;
            }
            if (depends_on(f, s))
                throw non_polynomial("'" + s + "' occurs inside a non-polynomial factor");
            rest.push_back(f);
        };
        if (term.is_mul())
            for (const auto& f : term.kids()) consume(f);
        else
            consume(term);
        acc[deg].push_back(rest.empty() ? Expr(1) : make_mul(std::move(rest)));
    };
    if (e.is_add())
        for (const auto& t : e.kids()) add_term(t);
    else if (!e.is_zero_lit())
        add_term(e);
    std::map<long long, Expr> out;
    for (auto& [deg, terms] : acc) {
        Expr c = make_add(std::move(terms));
        if (!c.is_zero_lit()) out[deg] = c;
    }
    return out;
}

// ------------------------------------------------------------ fraction form

// Numerator/denominator split: den is a product of atomic powers with
// positive integer exponents, num carries everything else. Sums are brought
// over a least common denominator (per-base max exponents), which keeps
// rational-function identities polynomial and lets the normal form cancel
// them structurally.
struct Fraction {
    Expr num{1};
    std::map<Expr, long long, ExprLess> den;  // base -> positive exponent

    Expr den_expr() const {
        std::vector<Expr> fs;
        for (const auto& [b, e] : den) fs.push_back(make_pow(b, Expr(e)));
        return make_mul(std::move(fs));
    }
    Expr joined() const { return num * make_pow(den_expr(), Expr(-1)); }
};

inline Fraction as_fraction(const Expr& e) {
    switch (e.kind()) {
        case Kind::Rat: {
            Fraction f;
            if (!e.rat().is_integer()) {
                f.num = Expr(Rational(e.rat().num()));
                f.den[Expr(Rational(e.rat().den()))] = 1;
            } else {
                f.num = e;
            }
            return f;
        }
        case Kind::Sym:
        case Kind::Ker: {
            Fraction f;
            f.num = e;
            return f;
        }
        case Kind::Pow: {
            if (e.expo().is_int()) {
                long long k = e.expo().rat().num();
                Fraction b = as_fraction(e.base());
                Fraction f;
                if (k >= 0) {
                    f.num = make_pow(b.num, Expr(k));
                    for (const auto& [bb, ee] : b.den) f.den[bb] += ee * k;
                } else {
                    f.num = make_pow(b.den_expr(), Expr(-k));
                    auto [c, mono] = coeff_split(b.num);
                    if (!c.is_one()) f.num = f.num * Expr(c.pow_int(k));
                    auto add_den = [&](const Expr& fac, long long times) {
                        if (fac.is_pow() && fac.expo().is_int() &&
                            !fac.expo().rat().is_negative())
                            f.den[fac.base()] += fac.expo().rat().num() * times;
                        else
                            f.den[fac] += times;
                    };
                    if (mono.is_mul())
                        for (const auto& kk : mono.kids()) add_den(kk, -k);
                    else if (!mono.is_one_lit())
                        add_den(mono, -k);
                }
                return f;
            }
            Fraction f;
            f.num = e;  // non-integer power stays atomic
            return f;
        }
        case Kind::Mul: {
            Fraction f;
            std::vector<Expr> nums;
            for (const auto& k : e.kids()) {
                Fraction kf = as_fraction(k);
                nums.push_back(kf.num);
                for (const auto& [b, ee] : kf.den) f.den[b] += ee;
            }
            f.num = make_mul(std::move(nums));
            return f;
        }
        case Kind::Add: {
            // common denominator with per-base max exponents
            std::vector<Fraction> parts;
            std::map<Expr, long long, ExprLess> lcm;
            for (const auto& k : e.kids()) {
                parts.push_back(as_fraction(k));
                for (const auto& [b, ee] : parts.back().den) {
                    auto it = lcm.find(b);
                    if (it == lcm.end() || it->second < ee) lcm[b] = ee;
                }
            }
            std::vector<Expr> terms;
            for (const auto& p : parts) {
                std::vector<Expr> fs{p.num};
                for (const auto& [b, ee] : lcm) {
                    long long have = 0;
                    auto it = p.den.find(b);
                    if (it != p.den.end()) have = it->second;
                    if (ee - have > 0) fs.push_back(make_pow(b, Expr(ee - have)));
                }
                terms.push_back(make_mul(std::move(fs)));
            }
            Fraction f;
            f.num = make_add(std::move(terms));
            f.den = std::move(lcm);
            return f;
        }
    }
    return Fraction{};
}

// Nearest small rational to v (continued fractions); used to recover exact
// proportionality factors from sampled ratios.
inline std::optional<Rational> rationalize(double v, long long max_den = 100000,
                                           double tol = 1e-6) {
    if (!std::isfinite(v)) return std::nullopt;
    bool neg = v < 0;
    double x = neg ? -v : v;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double y = x;
    for (int i = 0; i < 40; ++i) {
        long long a = (long long)std::floor(y);
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = y - (double)a;
        if (frac < 1e-12) break;
        y = 1.0 / frac;
    }
    if (q1 == 0) return std::nullopt;
    Rational r(neg ? -p1 : p1, q1);
    if (std::fabs(r.to_double() - v) > tol * (1.0 + std::fabs(v))) return std::nullopt;
    return r;
}

// --------------------------------------------------------------- jet names

// Canonical jet symbol: base name + '_' + sorted derivative suffix,
// e.g. jet("u", "xt") == "u_tx".
inline std::string jet(const std::string& base, std::string suffix) {
    auto rank = [](char c) {
        switch (c) {
            case 't': return 0;
            case 'x': return 1;
            case 'u': return 2;
            case 'w': return 3;
            default: return 4 + (int)c;
        }
    };
    std::sort(suffix.begin(), suffix.end(),
              [&](char a, char b) { return rank(a) < rank(b); });
    return base + "_" + suffix;
}

// Jet chain for a dependent variable: d/d(dir) of var_S is var_{S+dir},
// truncated at total order `depth`.
inline JetTable var_chain(const std::string& var, char dir, int depth) {
    JetTable t;
    std::vector<std::string> level{""};
    for (int d = 0; d < depth; ++d) {
        std::vector<std::string> next;
        std::set<std::string> seen;
        for (const auto& suf : level) {
            std::string from = suf.empty() ? var : jet(var, suf);
            std::string to_suf = suf + dir;
            std::string to = jet(var, to_suf);
            t.set(from, Expr::symbol(to));
            // enumerate all suffixes of this order over {t, x}
            for (char c : std::string("tx")) {
                std::string ns = suf + c;
                std::string cn = jet(var, ns);
                if (seen.insert(cn).second) next.push_back(ns.substr(0));
            }
        }
        level = std::move(next);
    }
    // frontier: order == depth jets
    for (const auto& suf : level) t.stop(jet(var, suf));
    return t;
}

} // namespace dcsym
