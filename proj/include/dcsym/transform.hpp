#pragma once

#include "dcsym/lie.hpp"

namespace dcsym {

// Point transformation between two equations. Forward expressions give the
// target coordinates in terms of the source ones, inverse expressions the
// other way around; both sides use plain (t, x, var) names, the direction
// disambiguates. The base map (t, x) must not involve the dependent
// variable. Differential substitutions (Cole-Hopf) carry jets of the source
// variable in fwd_u and support solution pushforward only.
struct PointTransform {
    std::string id;
    std::string src_eq, tgt_eq;
    std::string src_var = "u", tgt_var = "u";
    Expr fwd_t, fwd_x, fwd_u;
    Expr inv_t, inv_x, inv_u;
    bool differential = false;
};

struct TransformJets {
    Expr ut, ux, uxx, utx;
};

// Second-order prolongation of the map: target-variable jets as expressions
// in the source jets, obtained from the chain rule through the 2x2 base
// Jacobian.
inline TransformJets prolong_transform(const PointTransform& T) {
    if (T.differential)
        throw arithmetic_error("transform '" + T.id + "' is a differential substitution");
    JetTable DX = var_chain(T.src_var, 'x', 4);
    JetTable DT = var_chain(T.src_var, 't', 4);
    auto Dx = [&](const Expr& e) { return total_diff(e, "x", DX); };
    auto Dt = [&](const Expr& e) { return total_diff(e, "t", DT); };

    Expr tt = Dt(T.fwd_t), tx = Dx(T.fwd_t);
    Expr xt = Dt(T.fwd_x), xx = Dx(T.fwd_x);
    Expr det = tt * xx - tx * xt;
    Expr idet = make_pow(det, Expr(-1));

    auto solve = [&](const Expr& F) -> std::pair<Expr, Expr> {
        Expr Ft = Dt(F), Fx = Dx(F);
        Expr d_dt = (Ft * xx - Fx * xt) * idet;   // d/dt~
        Expr d_dx = (Fx * tt - Ft * tx) * idet;   // d/dx~
        return {d_dt, d_dx};
    };

    TransformJets out;
    auto [ut, ux] = solve(T.fwd_u);
    out.ut = ut;
    out.ux = ux;
    auto [utx, uxx] = solve(ux);
    out.utx = utx;
    out.uxx = uxx;
    return out;
}

// Pull an expression living in the target jet space back to source jets.
inline Expr pullback(const PointTransform& T, const Expr& target_expr) {
    TransformJets J = prolong_transform(T);
    std::map<std::string, Expr> m{
        {"t", T.fwd_t},
        {"x", T.fwd_x},
        {T.tgt_var, T.fwd_u},
        {jet(T.tgt_var, "t"), J.ut},
        {jet(T.tgt_var, "x"), J.ux},
        {jet(T.tgt_var, "xx"), J.uxx},
        {jet(T.tgt_var, "tx"), J.utx},
    };
    return substitute(target_expr, m);
}

// Sampling check that the pullback of the target residual is a nonzero
// multiple of the source residual; the multiplier may depend on the base
// point but not on the jet coordinates.
inline CheckReport check_equation_map(const PointTransform& T, const DCEquation& src,
                                      const DCEquation& tgt, Domain d = Domain{},
                                      int bases = 12, int jets_per_base = 4) {
    CheckReport rep;
    rep.subject = T.id;
    Expr pulled = pullback(T, lhs_residual(tgt));
    Expr orig = lhs_residual(src);
    std::set<std::string> syms = free_symbols(pulled);
    free_symbols(orig, syms);
    std::vector<std::string> jet_syms, base_syms;
    for (const auto& s : syms) {
        if (s.rfind(T.src_var + "_", 0) == 0) jet_syms.push_back(s);
        else base_syms.push_back(s);
    }
    std::mt19937_64 rng(mix_seed(d.seed, T.id));
    auto draw_for = [&](const std::string& s) {
        auto it = d.vars.find(s);
        Interval iv = it != d.vars.end() ? it->second : default_interval(s);
        return detail::draw(rng, iv);
    };
    int checked = 0;
    double worst = 0.0;
    for (int b = 0; b < bases; ++b) {
        Point pt;
        for (const auto& s : base_syms) pt[s] = draw_for(s);
        double ratio0 = 0.0;
        int good = 0;
        for (int attempt = 0; attempt < 6 * jets_per_base && good < jets_per_base; ++attempt) {
            for (const auto& s : jet_syms) pt[s] = draw_for(s);
            double vp, vo;
            try {
                vp = eval(pulled, pt);
                vo = eval(orig, pt);
            } catch (const eval_error&) {
                continue;
            }
            if (!std::isfinite(vp) || !std::isfinite(vo) || std::fabs(vo) < 1e-8) continue;
            double ratio = vp / vo;
            if (good == 0) {
                if (std::fabs(ratio) < 1e-10) continue;  // zero multiplier: try elsewhere
                ratio0 = ratio;
            } else {
                worst = std::max(worst, std::fabs(ratio - ratio0) / std::fabs(ratio0));
            }
            ++good;
        }
        if (good >= 2) ++checked;
    }
    rep.pass = checked > 0 && worst <= 1e-7;
    rep.detail.max_rel = worst;
    rep.detail.sampled = checked;
    if (!rep.pass) rep.note = "pullback not proportional to source residual";
    return rep;
}

// Map a solution of the source equation to one of the target equation.
inline Expr push_solution(const PointTransform& T, const Expr& sol_src) {
    std::map<std::string, Expr> sub{{T.src_var, sol_src}};
    if (T.differential) {
        sub[jet(T.src_var, "x")] = diff(sol_src, "x");
        sub[jet(T.src_var, "t")] = diff(sol_src, "t");
        sub[jet(T.src_var, "xx")] = diff(diff(sol_src, "x"), "x");
    }
    Expr vu = substitute(T.fwd_u, sub);
    return substitute(vu, {{"t", T.inv_t}, {"x", T.inv_x}});
}

// Map a solution of the target equation back to the source equation.
inline Expr pull_solution(const PointTransform& T, const Expr& sol_tgt) {
    if (T.differential)
        throw arithmetic_error("transform '" + T.id + "' only pushes solutions forward");
    Expr u = substitute(T.inv_u, {{T.tgt_var, sol_tgt}});
    return substitute(u, {{"t", T.fwd_t}, {"x", T.fwd_x}});
}

// Push an infinitesimal generator through the transformation.
inline VectorField push_field(const PointTransform& T, const VectorField& q) {
    auto apply = [&](const Expr& F) {
        return q.tau * diff(F, "t") + q.xi * diff(F, "x") + q.eta * diff(F, T.src_var);
    };
    std::map<std::string, Expr> to_tgt{
        {"t", T.inv_t}, {"x", T.inv_x}, {T.src_var, T.inv_u}};
    VectorField out;
    out.var = T.tgt_var;
    out.name = q.name;
    out.tau = substitute(apply(T.fwd_t), to_tgt);
    out.xi = substitute(apply(T.fwd_x), to_tgt);
    out.eta = substitute(apply(T.fwd_u), to_tgt);
    return out;
}

inline PointTransform inverse(const PointTransform& T) {
    PointTransform R = T;
    R.id = T.id + "^-1";
    std::swap(R.src_eq, R.tgt_eq);
    std::swap(R.src_var, R.tgt_var);
    std::swap(R.fwd_t, R.inv_t);
    std::swap(R.fwd_x, R.inv_x);
    std::swap(R.fwd_u, R.inv_u);
    return R;
}

// Round trip T^-1(T(p)) = p at sampled points.
inline CheckReport check_transform_roundtrip(const PointTransform& T, Domain d = Domain{},
                                             int samples = 50) {
    CheckReport rep;
    rep.subject = T.id;
    Expr back_t = substitute(T.inv_t, {{"t", T.fwd_t}, {"x", T.fwd_x}, {T.tgt_var, T.fwd_u}});
    Expr back_x = substitute(T.inv_x, {{"t", T.fwd_t}, {"x", T.fwd_x}, {T.tgt_var, T.fwd_u}});
    Expr back_u = substitute(T.inv_u, {{"t", T.fwd_t}, {"x", T.fwd_x}, {T.tgt_var, T.fwd_u}});
    std::set<std::string> syms = free_symbols(back_t);
    free_symbols(back_x, syms);
    free_symbols(back_u, syms);
    syms.insert({"t", "x", T.src_var});
    std::mt19937_64 rng(mix_seed(d.seed, T.id + ".rt"));
    double worst = 0.0;
    int ok = 0;
    for (int i = 0; i < samples; ++i) {
        Point pt = sample_point(d, rng, syms);
        try {
            double dt = std::fabs(eval(back_t, pt) - pt["t"]);
            double dx = std::fabs(eval(back_x, pt) - pt["x"]);
            double du = std::fabs(eval(back_u, pt) - pt[T.src_var]);
            worst = std::max({worst, dt, dx, du});
            ++ok;
        } catch (const eval_error&) {
            continue;
        }
    }
    rep.pass = ok > 0 && worst <= 1e-9;
    rep.detail.max_abs = worst;
    rep.detail.sampled = ok;
    return rep;
}

// ------------------------------------------------- equivalence group member

// t~ = d1 t + d2, x~ = X(x), u~ = d3 u + d4, with the arbitrary elements
// transforming as
//   f~ = e1 d1 phi / X_x f,  g~ = e1/e2 X_x phi g,  h~ = e1/e3 phi h,
//   A~ = e2 A,               B~ = e3 (B + e4 A),
// phi = exp(-e4 * Int(h/g)). The antiderivative is carried either as an
// explicit expression or as an opaque symbol Phi with Phi_x = h/g.
struct EquivParams {
    Expr d1{1}, d2{0}, d3{1}, d4{0};
    Expr X = Expr::symbol("x");
    Expr Xinv = Expr::symbol("x");
    Expr e1{1}, e2{1}, e3{1}, e4{0};
    std::optional<Expr> phi;
};

inline PointTransform equiv_point_transform(const EquivParams& p, const std::string& var,
                                            const std::string& id = "equiv") {
    PointTransform T;
    T.id = id;
    T.src_var = T.tgt_var = var;
    Expr t = Expr::symbol("t"), u = Expr::symbol(var);
    T.fwd_t = p.d1 * t + p.d2;
    T.fwd_x = p.X;
    T.fwd_u = p.d3 * u + p.d4;
    T.inv_t = (t - p.d2) / p.d1;
    T.inv_x = p.Xinv;
    T.inv_u = (u - p.d4) / p.d3;
    return T;
}

inline DCEquation apply_equivalence(const EquivParams& p, const DCEquation& eq) {
    if (eq.residual_override)
        throw arithmetic_error("apply_equivalence needs a class-form equation");
    Expr phi{1};
    std::vector<OpaqueFn> extra;
    if (!normalize(p.e4).is_zero_lit()) {
        if (p.phi) {
            phi = *p.phi;
        } else {
            if (!equal(normalize(p.X), Expr::symbol("x")))
                throw arithmetic_error("opaque antiderivative only with identity X");
            phi = exp_(-p.e4 * Expr::symbol("Phi"));
            extra.push_back(OpaqueFn::with_rule("Phi", eq.h / eq.g));
        }
    }
    Expr Xx = diff(p.X, "x");
    std::map<std::string, Expr> to_new_x{{"x", p.Xinv}};
    std::map<std::string, Expr> to_new_u{{eq.var, (Expr::symbol(eq.var) - p.d4) / p.d3}};

    DCEquation out = eq;
    out.id = eq.id + "~";
    out.f = substitute(p.e1 * p.d1 * phi / Xx * eq.f, to_new_x);
    out.g = substitute(p.e1 / p.e2 * Xx * phi * eq.g, to_new_x);
    out.h = substitute(p.e1 / p.e3 * phi * eq.h, to_new_x);
    out.A = p.e2 * substitute(eq.A, to_new_u);
    out.B = p.e3 * (substitute(eq.B, to_new_u) + p.e4 * substitute(eq.A, to_new_u));
    for (auto& fn : extra) out.opaque.push_back(fn);
    return out;
}

} // namespace dcsym
