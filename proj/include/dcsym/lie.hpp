#pragma once

#include <tuple>

#include "dcsym/pde.hpp"

namespace dcsym {

// Infinitesimal generator tau d_t + xi d_x + eta d_u, coefficients in
// (t, x, u) -- possibly through opaque functions carried by the context.
struct VectorField {
    Expr tau{0}, xi{0}, eta{0};
    std::string name;
    std::string var = "u";
};

inline VectorField vf(const std::string& tau, const std::string& xi, const std::string& eta,
                      const std::string& name = "", const std::string& var = "u") {
    return VectorField{parse(tau), parse(xi), parse(eta), name, var};
}

struct Prolong2 {
    Expr eta_t, eta_x, eta_xx;
};

// Second prolongation via the recursion eta^{J,i} = D_i eta^J - u_{J,t} D_i tau
// - u_{J,x} D_i xi.
inline Prolong2 prolong2(const VectorField& q, const JetCtx& ctx) {
    JetTable DX = ctx.DX();
    JetTable DT = ctx.DT();
    Expr ut = Expr::symbol(jet(ctx.var, "t"));
    Expr ux = Expr::symbol(jet(ctx.var, "x"));
    Expr utx = Expr::symbol(jet(ctx.var, "tx"));
    Expr uxx = Expr::symbol(jet(ctx.var, "xx"));

    Expr dxt = total_diff(q.tau, "x", DX), dxx = total_diff(q.xi, "x", DX);
    Expr dtt = total_diff(q.tau, "t", DT), dtx = total_diff(q.xi, "t", DT);

    Prolong2 p;
    p.eta_t = total_diff(q.eta, "t", DT) - ut * dtt - ux * dtx;
    p.eta_x = total_diff(q.eta, "x", DX) - ut * dxt - ux * dxx;
    p.eta_xx = total_diff(p.eta_x, "x", DX) - utx * dxt - uxx * dxx;
    return p;
}

inline Prolong2 prolong2(const VectorField& q) {
    JetCtx ctx;
    ctx.var = q.var;
    return prolong2(q, ctx);
}

// pr Q applied to the residual, then restricted to the solution manifold
// u_t = K, u_tx = D_x K, u_tt = D_t K.
inline Expr invariance_residual(const DCEquation& eq, const VectorField& q) {
    JetCtx ctx = context_of(eq);
    Expr L = lhs_residual(eq);
    Prolong2 p = prolong2(q, ctx);

    Expr applied = make_add({
        q.tau * total_diff(L, "t", ctx.PT()),
        q.xi * total_diff(L, "x", ctx.PX()),
        q.eta * total_diff(L, eq.var, ctx.PU()),
        p.eta_t * diff(L, jet(eq.var, "t")),
        p.eta_x * diff(L, jet(eq.var, "x")),
        p.eta_xx * diff(L, jet(eq.var, "xx")),
    });

    Expr K = evolution_rhs(eq);
    JetTable DX = ctx.DX();
    Expr kx = total_diff(K, "x", DX);
    Expr kxx = total_diff(kx, "x", DX);
    Expr kt = substitute(total_diff(K, "t", ctx.DT()),
                         {{jet(eq.var, "t"), K}, {jet(eq.var, "tx"), kx},
                          {jet(eq.var, "txx"), kxx}});
    return substitute(applied, {{jet(eq.var, "t"), K},
                                {jet(eq.var, "tx"), kx},
                                {jet(eq.var, "tt"), kt}});
}

inline CheckReport check_symmetry(const DCEquation& eq, const VectorField& q,
                                  Domain d = Domain{}) {
    Expr r = invariance_residual(eq, q);
    for (const auto& s : free_symbols(r))
        if (!d.vars.count(s)) d.vars[s] = default_interval(s);
    CheckReport rep;
    rep.subject = eq.id + (q.name.empty() ? "" : " / " + q.name);
    try {
        rep.detail = is_zero(r, d);
        rep.pass = rep.detail.zero;
    } catch (const singular_domain& e) {
        rep.pass = false;
        rep.note = e.what();
    }
    return rep;
}

// Lie bracket [Q1, Q2]; coefficients must be explicit in (t, x, u).
inline VectorField commutator(const VectorField& a, const VectorField& b) {
    auto apply = [](const VectorField& q, const Expr& F, const std::string& var) {
        return q.tau * diff(F, "t") + q.xi * diff(F, "x") + q.eta * diff(F, var);
    };
    VectorField r;
    r.var = a.var;
    r.tau = apply(a, b.tau, a.var) - apply(b, a.tau, a.var);
    r.xi = apply(a, b.xi, a.var) - apply(b, a.xi, a.var);
    r.eta = apply(a, b.eta, a.var) - apply(b, a.eta, a.var);
    return r;
}

inline bool field_zero(const VectorField& q, const Domain& d0 = Domain{}) {
    for (const Expr* c : {&q.tau, &q.xi, &q.eta}) {
        Domain d = d0;
        for (const auto& s : free_symbols(*c))
            if (!d.vars.count(s)) d.vars[s] = default_interval(s);
        if (!is_zero(*c, d).zero) return false;
    }
    return true;
}

// Structure-constant table: (i, j) -> list of (k, coefficient), i < j.
struct AlgebraSpec {
    std::string id;
    std::vector<VectorField> basis;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Expr>>> brackets;
    std::string var = "u";
};

inline CheckReport check_algebra(const AlgebraSpec& spec) {
    CheckReport rep;
    rep.subject = spec.id;
    rep.pass = true;
    int n = (int)spec.basis.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            VectorField got = commutator(spec.basis[i], spec.basis[j]);
            VectorField want;
            want.var = spec.var;
            auto it = spec.brackets.find({i, j});
            if (it != spec.brackets.end())
                for (const auto& [k, c] : it->second) {
                    want.tau = want.tau + c * spec.basis[k].tau;
                    want.xi = want.xi + c * spec.basis[k].xi;
                    want.eta = want.eta + c * spec.basis[k].eta;
                }
            VectorField dfr;
            dfr.tau = got.tau - want.tau;
            dfr.xi = got.xi - want.xi;
            dfr.eta = got.eta - want.eta;
            if (!field_zero(dfr)) {
                rep.pass = false;
                rep.note += "[Q" + std::to_string(i + 1) + ",Q" + std::to_string(j + 1) +
                            "] mismatch; ";
            }
        }
    return rep;
}

// [[Q1,Q2],Q3] + [[Q2,Q3],Q1] + [[Q3,Q1],Q2] = 0
inline bool jacobi_holds(const VectorField& a, const VectorField& b, const VectorField& c) {
    VectorField s1 = commutator(commutator(a, b), c);
    VectorField s2 = commutator(commutator(b, c), a);
    VectorField s3 = commutator(commutator(c, a), b);
    VectorField sum;
    sum.tau = s1.tau + s2.tau + s3.tau;
    sum.xi = s1.xi + s2.xi + s3.xi;
    sum.eta = s1.eta + s2.eta + s3.eta;
    return field_zero(sum);
}

} // namespace dcsym
