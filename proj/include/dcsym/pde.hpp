#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcsym/calculus.hpp"
#include "dcsym/domain.hpp"
#include "dcsym/parse.hpp"

namespace dcsym {

// An arbitrary (unspecified) smooth function entering an equation or an
// operator. `deps` lists its arguments out of {t,x,u}; `deriv_rule`, when
// set, replaces the x-jet chain by an explicit derivative (used for the
// f-profiles defined through an integral: f_x = f * integrand).
struct OpaqueFn {
    std::string name;
    std::string deps;                    // subset of "txu", canonical order
    std::optional<Expr> deriv_rule;      // d(name)/dx when deps == "x"

    static OpaqueFn of(const std::string& name, const std::string& deps) {
        return OpaqueFn{name, deps, std::nullopt};
    }
    static OpaqueFn with_rule(const std::string& name, Expr dfdx) {
        return OpaqueFn{name, "x", std::move(dfdx)};
    }
};

// Member of the diffusion-convection class f(x) u_t = (g(x) A(u) u_x)_x
// + h(x) B(u) u_x, or an explicit evolution residual for equations that
// fall outside it.
struct DCEquation {
    std::string id;
    std::string var = "u";
    Expr f{1}, g{1}, h{1}, A{1}, B{0};
    std::vector<OpaqueFn> opaque;
    std::optional<Expr> residual_override;  // lhs residual in jet coordinates
    Domain domain;                          // sampling overrides

    // Same equation written for another dependent variable name.
    DCEquation renamed(const std::string& nv) const {
        DCEquation eq = *this;
        if (nv == var) return eq;
        std::map<std::string, Expr> m{{var, Expr::symbol(nv)}};
        for (const char* s : {"t", "x", "tt", "tx", "xx", "txx", "xxx"})
            m[jet(var, s)] = Expr::symbol(jet(nv, s));
        eq.A = substitute(A, m);
        eq.B = substitute(B, m);
        if (residual_override) eq.residual_override = substitute(*residual_override, m);
        eq.var = nv;
        return eq;
    }
};

// Chain-rule tables for one equation/operator context: total derivatives
// D_t, D_x on jet coordinates, and the partial derivatives that only chain
// through the opaque functions.
struct JetCtx {
    std::string var = "u";
    std::vector<OpaqueFn> fams;
    int depth = 3;

    JetTable DX() const { return total_table('x'); }
    JetTable DT() const { return total_table('t'); }
    JetTable PX() const { return partial_table('x'); }
    JetTable PT() const { return partial_table('t'); }
    JetTable PU() const { return partial_table('u'); }

private:
    // all suffix multisets over `deps` up to the given order
    static std::vector<std::string> suffixes(const std::string& deps, int order) {
        std::vector<std::string> cur{""};
        std::vector<std::string> all{""};
        for (int d = 0; d < order; ++d) {
            std::vector<std::string> next;
            std::set<std::string> seen;
            for (const auto& s : cur)
                for (char c : deps) {
                    std::string canon = jet("F", s + c);
                    if (seen.insert(canon).second) next.push_back(s + c);
                }
            for (const auto& s : next) all.push_back(s);
            cur = std::move(next);
        }
        return all;
    }

    void fam_entries(JetTable& t, const OpaqueFn& fn, char dir, bool total) const {
        if (fn.deriv_rule) {
            if (dir == 'x') t.set(fn.name, *fn.deriv_rule);
            return;  // no jet symbols for rule-backed functions
        }
        bool has_dir = fn.deps.find(dir) != std::string::npos;
        bool has_u = fn.deps.find('u') != std::string::npos && dir != 'u';
        if (!has_dir && !(total && has_u)) return;
        for (const auto& s : suffixes(fn.deps, depth - 1)) {
            std::string from = s.empty() ? fn.name : jet(fn.name, s);
            std::vector<Expr> parts;
            if (has_dir) parts.push_back(Expr::symbol(jet(fn.name, s + dir)));
            if (total && has_u)
                parts.push_back(Expr::symbol(jet(fn.name, s + 'u')) *
                                Expr::symbol(jet(var, std::string(1, dir))));
            t.set(from, make_add(std::move(parts)));
        }
        for (const auto& s : suffixes(fn.deps, depth)) {
            if ((int)s.size() == depth) t.stop(jet(fn.name, s));
        }
    }

    JetTable total_table(char dir) const {
        JetTable t = var_chain(var, dir, depth + 1);
        for (const auto& fn : fams) fam_entries(t, fn, dir, true);
        return t;
    }

    JetTable partial_table(char dir) const {
        JetTable t;
        for (const auto& fn : fams) fam_entries(t, fn, dir, false);
        return t;
    }
};

inline JetCtx context_of(const DCEquation& eq, int depth = 3) {
    return JetCtx{eq.var, eq.opaque, depth};
}

// f u_t - (g A u_x)_x - h B u_x, expanded over jet coordinates.
inline Expr lhs_residual(const DCEquation& eq) {
    if (eq.residual_override) return *eq.residual_override;
    JetCtx ctx = context_of(eq);
    Expr ux = Expr::symbol(jet(eq.var, "x"));
    Expr ut = Expr::symbol(jet(eq.var, "t"));
    Expr flux = eq.g * eq.A * ux;
    return eq.f * ut - total_diff(flux, "x", ctx.DX()) - eq.h * eq.B * ux;
}

// u_t as a function of (x, u, u_x, u_xx); substituting it back into the
// residual gives zero identically.
inline Expr evolution_rhs(const DCEquation& eq) {
    Expr r = lhs_residual(eq);
    std::string ut = jet(eq.var, "t");
    Expr c = diff(r, ut);
    if (c.is_zero_lit())
        throw arithmetic_error("equation '" + eq.id + "' has no u_t term");
    Expr b = substitute(r, {{ut, Expr(0)}});
    return make_mul({Expr(-1), b, make_pow(c, Expr(-1))});
}

struct CheckReport {
    std::string subject;
    bool pass = false;
    ZeroCheck detail;
    std::string note;
};

// Substitute an explicit solution u = s(t, x) and its derivatives into the
// residual, then run the randomized zero test over (t, x) and any remaining
// free constants.
inline CheckReport solution_residual(const DCEquation& eq, const Expr& sol, Domain d) {
    Expr st = diff(sol, "t");
    Expr sx = diff(sol, "x");
    Expr sxx = diff(sx, "x");
    std::map<std::string, Expr> m{
        {eq.var, sol},
        {jet(eq.var, "t"), st},
        {jet(eq.var, "x"), sx},
        {jet(eq.var, "xx"), sxx},
    };
    Expr r = substitute(lhs_residual(eq), m);
    for (const auto& s : free_symbols(r))
        if (!d.vars.count(s)) d.vars[s] = default_interval(s);
    CheckReport rep;
    rep.subject = eq.id;
    rep.detail = is_zero(r, d);
    rep.pass = rep.detail.zero;
    return rep;
}

} // namespace dcsym
