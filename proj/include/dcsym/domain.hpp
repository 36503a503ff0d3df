#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "dcsym/eval.hpp"

namespace dcsym {

struct singular_domain : std::runtime_error {
    explicit singular_domain(const std::string& m) : std::runtime_error(m) {}
};

struct Interval {
    double lo = 0.5, hi = 2.0;
    double exclude = 0.0;  // radius around 0 removed from the interval

    bool valid() const { return lo < hi && exclude < (hi - lo) / 2; }
};

// Per-symbol sampling ranges plus the tolerances and seed for the
// randomized zero test. Deterministic for a fixed seed.
struct Domain {
    std::map<std::string, Interval> vars;
    int samples = 50;
    std::uint64_t seed = 0x5eedbead;
    double atol = 1e-9;
    double rtol = 1e-9;

    Domain& set(const std::string& s, double lo, double hi, double excl = 0.0) {
        vars[s] = Interval{lo, hi, excl};
        return *this;
    }

    Domain with_seed(std::uint64_t s) const {
        Domain d = *this;
        d.seed = s;
        return d;
    }
};

// Base variables and positive opaque quantities sample one positive branch;
// jets, derivatives and parameters sample a sign-symmetric range with a
// hole around zero.
inline Interval default_interval(const std::string& name) {
    static const std::set<std::string> positive = {
        "t", "x", "u", "v", "w", "f", "g", "h", "A", "B",
        "phi", "psi", "phi2", "psi2", "omega", "Phi", "W"};
    if (positive.count(name)) return Interval{0.5, 2.0, 0.0};
    return Interval{-2.0, 2.0, 0.1};
}

inline Domain default_domain(const Expr& e) {
    Domain d;
    for (const auto& s : free_symbols(e)) d.vars[s] = default_interval(s);
    return d;
}

inline std::uint64_t mix_seed(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ seed;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct Witness {
    Point point;
    double residual = 0.0;
    double scale = 0.0;
};

struct ZeroCheck {
    bool zero = false;
    bool structural = false;  // normal form was literally 0
    double max_abs = 0.0;
    double max_rel = 0.0;
    int sampled = 0;
    int skipped = 0;
    std::optional<Witness> witness;
};

namespace detail {

inline double draw(std::mt19937_64& rng, const Interval& iv) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    if (iv.hi <= iv.lo) return iv.lo;  // pinned value
    if (iv.exclude <= 0.0 || iv.lo >= iv.exclude || iv.hi <= -iv.exclude) {
        return iv.lo + (iv.hi - iv.lo) * uni(rng);
    }
    // sample the union [lo,-e] U [e,hi] proportionally to length
    double left = std::max(0.0, -iv.exclude - iv.lo);
    double right = std::max(0.0, iv.hi - iv.exclude);
    double pick = uni(rng) * (left + right);
    if (pick < left) return iv.lo + pick;
    return iv.exclude + (pick - left);
}

} // namespace detail

inline Point sample_point(const Domain& d, std::mt19937_64& rng,
                          const std::set<std::string>& syms) {
    Point pt;
    for (const auto& s : syms) {
        auto it = d.vars.find(s);
        Interval iv = it != d.vars.end() ? it->second : default_interval(s);
        pt[s] = detail::draw(rng, iv);
    }
    return pt;
}

// Randomized zero-equivalence test backstopped by the normal form: exact
// zero short-circuits, otherwise the residual must stay below
// atol + rtol * (largest term magnitude) at every sampled point.
inline ZeroCheck is_zero(const Expr& e0, const Domain& d) {
    ZeroCheck r;
    Expr e = normalize(e0);
    if (e.is_zero_lit()) {
        r.zero = true;
        r.structural = true;
        return r;
    }
    std::set<std::string> syms = free_symbols(e);
    if (syms.empty()) {
        // constant, nonzero normal form; evaluate exactly
        double v = eval(e, {});
        r.max_abs = std::fabs(v);
        r.zero = r.max_abs <= d.atol;
        if (!r.zero) r.witness = Witness{{}, v, std::fabs(v)};
        return r;
    }
    std::mt19937_64 rng(d.seed);
    for (int i = 0; i < d.samples; ++i) {
        Point pt = sample_point(d, rng, syms);
        double val, scale;
        try {
            auto [v, sc] = eval_with_scale(e, pt);
            val = v;
            scale = sc;
        } catch (const eval_error& ee) {
            if (ee.what_kind == eval_error::Singular) {
                ++r.skipped;
                continue;
            }
            throw;
        }
        if (!std::isfinite(val) || !std::isfinite(scale)) {
            ++r.skipped;
            continue;
        }
        ++r.sampled;
        double tol = d.atol + d.rtol * scale;
        double rel = std::fabs(val) / (1.0 + scale);
        r.max_abs = std::max(r.max_abs, std::fabs(val));
        r.max_rel = std::max(r.max_rel, rel);
        if (std::fabs(val) > tol && !r.witness)
            r.witness = Witness{pt, val, scale};
    }
    if (r.sampled == 0)
        throw singular_domain("all sampled points were singular");
    r.zero = !r.witness.has_value();
    return r;
}

} // namespace dcsym
