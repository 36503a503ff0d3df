#pragma once

#include "dcsym/catalog.hpp"

namespace dcsym {

struct reduction_error : std::runtime_error {
    explicit reduction_error(const std::string& m) : std::runtime_error(m) {}
};

// Reduced residual as a fraction; den == 1 except for ansatzes whose
// similarity variable enters through non-polynomial substitutions.
struct ReducedODE {
    Expr num{0};
    Expr den{1};
};

// Ansatz u = U(t, x, phi(omega)) ready to substitute: built from a catalog
// reduction row at a concrete parameter pick.
struct Ansatz {
    Expr form;           // U in (t, x, phi)
    Expr omega;          // similarity variable in (t, x)
    std::vector<std::pair<std::string, Expr>> eliminate;
    Expr factor{1};
    std::string branch;  // "", "t>0", "t<0", "x>0"
};

namespace detail {

inline Expr apply_branch(const Expr& e, const std::string& branch) {
    if (branch.empty()) return e;
    std::string v = branch.substr(0, branch.find_first_of("<>"));
    bool positive = branch.find('>') != std::string::npos;
    // |v| -> +-v, sign(v) -> +-1
    struct Walk {
        std::string v;
        bool pos;
        Expr run(const Expr& e) {
            switch (e.kind()) {
                case Kind::Rat:
                case Kind::Sym:
                    return e;
                case Kind::Ker:
                    if (e.arg().is_sym() && e.arg().sym() == v) {
                        if (e.fn() == Fn::Abs)
                            return pos ? e.arg() : make_mul({Expr(-1), e.arg()});
                        if (e.fn() == Fn::Sign) return Expr(pos ? 1 : -1);
                    }
                    return make_kernel(e.fn(), run(e.arg()));
                case Kind::Pow:
                    return make_pow(run(e.base()), run(e.expo()));
                case Kind::Add:
                case Kind::Mul: {
                    std::vector<Expr> ks;
                    for (const auto& k : e.kids()) ks.push_back(run(k));
                    return e.is_add() ? make_add(std::move(ks)) : make_mul(std::move(ks));
                }
            }
            return e;
        }
    };
    return Walk{v, positive}.run(e);
}

} // namespace detail

inline Ansatz make_ansatz(const ReductionRec& rec, const std::map<std::string, Rational>& vals) {
    std::map<std::string, Expr> sub;
    for (const auto& [k, v] : vals) sub[k] = Expr(v);
    Ansatz a;
    a.branch = rec.branch;
    a.form = detail::apply_branch(substitute(parse(rec.form), sub), rec.branch);
    a.omega = detail::apply_branch(substitute(parse(rec.omega), sub), rec.branch);
    a.factor = detail::apply_branch(substitute(parse(rec.factor), sub), rec.branch);
    for (const auto& line : rec.eliminate.empty() ? std::vector<std::string>{}
                                                  : detail::split(rec.eliminate, '|')) {
        auto parts = detail::split(line, ';');
        if (parts.size() != 2) throw catalog_error("reduction " + rec.id + ": bad eliminate");
        a.eliminate.emplace_back(parts[0],
                                 detail::apply_branch(substitute(parse(parts[1]), sub), rec.branch));
    }
    return a;
}

// Substitute the ansatz into the equation, eliminate the base variables in
// favor of the similarity variable, divide by the declared common factor and
// return the reduced residual over (w, phi, phi_w, phi_ww, phi_www).
inline ReducedODE reduce(const DCEquation& eq0, const Ansatz& a) {
    DCEquation eq = eq0;
    if (!a.branch.empty()) {
        for (Expr* el : {&eq.f, &eq.g, &eq.h, &eq.A, &eq.B})
            *el = detail::apply_branch(*el, a.branch);
        if (eq.residual_override)
            eq.residual_override = detail::apply_branch(*eq.residual_override, a.branch);
    }
    Expr wt = diff(a.omega, "t");
    Expr wx = diff(a.omega, "x");
    JetTable Tt, Tx;
    Tt.set("phi", Expr::symbol("phi_w") * wt)
        .set("phi_w", Expr::symbol("phi_ww") * wt)
        .set("phi_ww", Expr::symbol("phi_www") * wt)
        .stop("phi_www");
    Tx.set("phi", Expr::symbol("phi_w") * wx)
        .set("phi_w", Expr::symbol("phi_ww") * wx)
        .set("phi_ww", Expr::symbol("phi_www") * wx)
        .stop("phi_www");

    Expr u = a.form;
    Expr ut = total_diff(u, "t", Tt);
    Expr ux = total_diff(u, "x", Tx);
    Expr uxx = total_diff(ux, "x", Tx);
    Expr r = substitute(lhs_residual(eq), {{eq.var, u},
                                           {jet(eq.var, "t"), ut},
                                           {jet(eq.var, "x"), ux},
                                           {jet(eq.var, "xx"), uxx}});
    for (const auto& [v, expr] : a.eliminate) r = substitute(r, {{v, expr}});
    r = r * make_pow(a.factor, Expr(-1));
    Fraction f = as_fraction(r);
    ReducedODE out;
    out.num = normalize(f.num);
    out.den = normalize(f.den_expr());
    if (out.den.is_rat()) {
        out.num = normalize(out.num / out.den);
        out.den = Expr(1);
    }
    if (equal(out.den, Expr(1))) {
        for (const char* v : {"t", "x"})
            if (depends_on(out.num, v))
                throw reduction_error("ansatz is not invariant: residual keeps " +
                                      std::string(v));
    }
    return out;
}

// reduce() reproduces the expected ODE up to a nonzero rational factor.
inline CheckReport verify_reduced(const Catalog& cat, const ReductionRec& rec,
                                  const std::map<std::string, Rational>& vals,
                                  Domain d = Domain{}) {
    CheckReport rep;
    rep.subject = rec.id;
    std::map<std::string, Expr> sub;
    for (const auto& [k, v] : vals) sub[k] = Expr(v);
    DCEquation eq = cat.equation(rec.equation, vals);
    Ansatz a = make_ansatz(rec, vals);
    if (!rec.branch.empty() && rec.branch.find('<') != std::string::npos)
        d.set(rec.branch.substr(0, 1), -2.0, -0.5);
    ReducedODE r;
    try {
        r = reduce(eq, a);
    } catch (const reduction_error& e) {
        rep.pass = false;
        rep.note = e.what();
        return rep;
    }
    Expr expected = detail::apply_branch(substitute(parse(rec.ode), sub), rec.branch);

    // residual = c * expected * den for one rational c
    Expr rhs = expected * r.den;
    std::set<std::string> syms = free_symbols(r.num);
    free_symbols(rhs, syms);
    std::mt19937_64 rng(mix_seed(d.seed, rec.id));
    std::optional<Rational> c;
    for (int i = 0; i < 25 && !c; ++i) {
        Point pt = sample_point(d, rng, syms);
        try {
            double a0 = eval(r.num, pt), b0 = eval(rhs, pt);
            if (std::fabs(b0) < 1e-6 || !std::isfinite(a0) || !std::isfinite(b0)) continue;
            c = rationalize(a0 / b0, 100000, 1e-5);
        } catch (const eval_error&) {
            continue;
        }
    }
    if (!c || c->is_zero()) {
        rep.pass = false;
        rep.note = "no rational proportionality factor found";
        return rep;
    }
    Expr dcheck = r.num - Expr(*c) * rhs;
    Domain dd = d.with_seed(mix_seed(d.seed, rec.id + ".z"));
    for (const auto& s : free_symbols(dcheck))
        if (!dd.vars.count(s)) dd.vars[s] = default_interval(s);
    auto z = is_zero(dcheck, dd);
    rep.pass = z.zero;
    rep.detail = z;
    rep.note = "factor " + c->str();
    return rep;
}

// phi(w) solves the reduced equation.
inline CheckReport verify_ode_solution(const Expr& ode_residual, const Expr& phi_of_w,
                                       Domain d = Domain{}) {
    Expr s = phi_of_w;
    Expr s1 = diff(s, "w");
    Expr s2 = diff(s1, "w");
    Expr s3 = diff(s2, "w");
    Expr r = substitute(ode_residual, {{"phi", s},
                                       {"phi_w", s1},
                                       {"phi_ww", s2},
                                       {"phi_www", s3}});
    CheckReport rep;
    for (const auto& sym : free_symbols(r))
        if (!d.vars.count(sym)) d.vars[sym] = default_interval(sym);
    rep.detail = is_zero(r, d);
    rep.pass = rep.detail.zero;
    return rep;
}

// Composing the ansatz with a phi(w) solution solves the full PDE.
inline CheckReport triangle_check(const Catalog& cat, const ReductionRec& rec,
                                  const std::map<std::string, Rational>& vals,
                                  const std::string& sol_w, Domain d = Domain{}) {
    std::map<std::string, Expr> sub;
    for (const auto& [k, v] : vals) sub[k] = Expr(v);
    DCEquation eq = cat.equation(rec.equation, vals);
    Ansatz a = make_ansatz(rec, vals);
    Expr phi = substitute(substitute(parse(sol_w), sub), {{"w", a.omega}});
    Expr full = substitute(a.form, {{"phi", phi}});
    if (!a.branch.empty()) {
        // sample the branch the ansatz was fixed on
        std::string v = a.branch.substr(0, 1);
        if (a.branch.find('<') != std::string::npos) d.set(v, -2.0, -0.5);
    }
    DCEquation eqb = eq;
    if (!a.branch.empty()) {
        for (Expr* el : {&eqb.f, &eqb.g, &eqb.h, &eqb.A, &eqb.B})
            *el = detail::apply_branch(*el, a.branch);
        if (eqb.residual_override)
            eqb.residual_override = detail::apply_branch(*eqb.residual_override, a.branch);
    }
    return solution_residual(eqb, full, d);
}

// ------------------------------------------------- polynomial antireduction

// Substitute v = sum_i phi^i(t) x^i into an evolution residual and collect
// the coefficient conditions by powers of x.
inline std::map<long long, Expr> antireduce_poly(const DCEquation& eq, const Expr& form,
                                                 const std::vector<std::string>& unknowns) {
    JetTable Tt;
    for (const auto& f : unknowns) Tt.set(f, Expr::symbol(f + "_t")).stop(f + "_t");
    Expr vt = total_diff(form, "t", Tt);
    Expr vx = diff(form, "x");
    Expr vxx = diff(vx, "x");
    Expr r = substitute(lhs_residual(eq), {{eq.var, form},
                                           {jet(eq.var, "t"), vt},
                                           {jet(eq.var, "x"), vx},
                                           {jet(eq.var, "xx"), vxx}});
    return collect_poly(r, "x");
}

// The pinned ansatz v = 2x^3 + phi4 x^4 + phi5 x^5 + phi6 x^6 reduces (10)
// to three first-order conditions; all other powers must cancel identically.
struct AntireductionSystem {
    Expr c4;  // phi4_t - 7 phi5 + 4/3 phi4^2        (power x^6)
    Expr c5;  // phi5_t - 18 phi6 + 4/3 phi4 phi5    (power x^7)
    Expr c6;  // phi6_t + 5/6 phi5^2 - 2 phi4 phi6   (power x^8)
};

inline AntireductionSystem antireduce_eq10(const Catalog& cat) {
    DCEquation eq10 = cat.equation("eq10");
    Expr form = parse("2*x^3 + phi4*x^4 + phi5*x^5 + phi6*x^6");
    auto cond = antireduce_poly(eq10, form, {"phi4", "phi5", "phi6"});
    AntireductionSystem sys;
    for (const auto& [k, c] : cond) {
        if (k == 6) sys.c4 = c;
        else if (k == 7) sys.c5 = c;
        else if (k == 8) sys.c6 = c;
        else if (!normalize(c).is_zero_lit())
            throw reduction_error("antireduction: unexpected condition at power x^" +
                                  std::to_string(k));
    }
    return sys;
}

// Eliminate phi5, phi6 from the system: a single third-order equation for
// phi4 comes out, proportional to
// 63 a''' + 387 a'^2 + 126 a a'' + 192 a^2 a' + 16 a^4.
inline Expr eliminate_to_third_order(const Catalog& cat) {
    AntireductionSystem sys = antireduce_eq10(cat);
    Expr a = Expr::symbol("phi4");
    JetTable T;
    T.set("phi4", Expr::symbol("phi4_t"))
        .set("phi4_t", Expr::symbol("phi4_tt"))
        .set("phi4_tt", Expr::symbol("phi4_ttt"))
        .stop("phi4_ttt");
    // c4 = 0  =>  phi5 in terms of phi4
    Expr phi5 = (Expr::symbol("phi4_t") + Expr(Rational(4, 3)) * a * a) / Expr(7);
    Expr phi5_t = total_diff(phi5, "t", T);
    Expr phi6 = (phi5_t + Expr(Rational(4, 3)) * a * phi5) / Expr(18);
    Expr phi6_t = total_diff(phi6, "t", T);
    Expr third = substitute(sys.c6, {{"phi5", phi5}, {"phi6", phi6}, {"phi6_t", phi6_t}});
    return normalize(third);
}

// Exact rational roots of a polynomial condition: the expected roots kill it
// and the rational-root screen finds no others.
inline CheckReport check_algebraic_reduction(const Expr& poly, const std::string& var,
                                             const std::vector<Rational>& expected_roots) {
    CheckReport rep;
    rep.subject = "roots of " + to_string(poly);
    rep.pass = true;
    auto coeffs = collect_poly(poly, var);
    for (const auto& r : expected_roots) {
        Expr v = normalize(substitute(poly, {{var, Expr(r)}}));
        if (!v.is_zero_lit()) {
            rep.pass = false;
            rep.note += "claimed root " + r.str() + " does not vanish; ";
        }
    }
    // rational root screen: p | constant term, q | leading coefficient
    long long lead = 1, tail = 1;
    if (!coeffs.empty()) {
        long long lo = coeffs.begin()->first, hi = coeffs.rbegin()->first;
        if (coeffs.at(hi).is_rat()) lead = std::llabs(coeffs.at(hi).rat().num());
        for (auto k = lo; k <= hi; ++k)
            if (coeffs.count(k) && coeffs.at(k).is_rat() && !coeffs.at(k).rat().is_zero()) {
                tail = std::llabs(coeffs.at(k).rat().num());
                break;
            }
    }
    auto divisors = [](long long n) {
        std::vector<long long> out;
        for (long long d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
        return out;
    };
    for (long long p : divisors(tail))
        for (long long q : divisors(lead))
            for (int sgn : {1, -1}) {
                Rational cand(sgn * p, q);
                bool claimed = false;
                for (const auto& r : expected_roots)
                    if (r == cand) claimed = true;
                if (claimed) continue;
                Expr v = normalize(substitute(poly, {{var, Expr(cand)}}));
                if (v.is_zero_lit()) {
                    rep.pass = false;
                    rep.note += "unexpected rational root " + cand.str() + "; ";
                }
            }
    return rep;
}

// Characteristic of the third-order operator behind ansatz (15):
// x^3 v_xxx - 12 x^2 v_xx + 60 x v_x - 120 v + 12 x^3.
inline Expr antireduction_characteristic(const Expr& v_of_tx) {
    Expr vx = diff(v_of_tx, "x");
    Expr vxx = diff(vx, "x");
    Expr vxxx = diff(vxx, "x");
    Expr x = Expr::symbol("x");
    return normalize(make_pow(x, Expr(3)) * vxxx - Expr(12) * make_pow(x, Expr(2)) * vxx +
                     Expr(60) * x * vx - Expr(120) * v_of_tx + Expr(12) * make_pow(x, Expr(3)));
}

// v = phi(t) x + psi(t) in (7): nonlinear separation gives the two-ODE
// system phi' = phi^2 - 2p phi, psi' = phi psi - 2p psi.
struct AntireductionEq7 {
    Expr c1;  // coefficient of x
    Expr c0;  // constant coefficient
};

inline AntireductionEq7 antireduce_eq7(const Catalog& cat,
                                       const std::map<std::string, Rational>& vals) {
    DCEquation eq7 = cat.equation("eq7", vals);
    auto cond = antireduce_poly(eq7, parse("phi*x + psi"), {"phi", "psi"});
    AntireductionEq7 out;
    for (const auto& [k, c] : cond) {
        if (k == 1) out.c1 = c;
        else if (k == 0) out.c0 = c;
        else if (!normalize(c).is_zero_lit())
            throw reduction_error("eq7 antireduction: unexpected power x^" + std::to_string(k));
    }
    return out;
}

} // namespace dcsym
