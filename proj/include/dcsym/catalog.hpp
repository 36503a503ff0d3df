#pragma once

#include <array>
#include <sstream>

#include "dcsym/transform.hpp"

namespace dcsym {

struct catalog_error : std::runtime_error {
    explicit catalog_error(const std::string& m) : std::runtime_error(m) {}
};

struct constraint_violation : std::runtime_error {
    explicit constraint_violation(const std::string& m) : std::runtime_error(m) {}
};

// ------------------------------------------------------------ record format
//
// Line-oriented records:
//   [kind id]
//   key = value
//   key = a ; b ; c        (tuple)
//   gen = tau ; xi ; eta   (repeatable keys: gen, sol, recipe, constraint)
// '#' starts a comment. An external file in the same format can extend or
// override the built-in catalog.

struct Record {
    std::string kind, id;
    std::map<std::string, std::vector<std::string>> fields;

    bool has(const std::string& k) const { return fields.count(k) > 0; }
    const std::string& one(const std::string& k) const {
        auto it = fields.find(k);
        if (it == fields.end() || it->second.size() != 1)
            throw catalog_error("record " + id + ": expected single '" + k + "'");
        return it->second[0];
    }
    std::string get(const std::string& k, const std::string& dflt) const {
        auto it = fields.find(k);
        return it == fields.end() ? dflt : it->second.at(0);
    }
    const std::vector<std::string>& all(const std::string& k) const {
        static const std::vector<std::string> empty;
        auto it = fields.find(k);
        return it == fields.end() ? empty : it->second;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '{') ++depth;
        if (c == ')' || c == '}') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

} // namespace detail

inline std::vector<Record> parse_records(const std::string& text) {
    std::vector<Record> out;
    std::istringstream in(text);
    std::string line;
    Record* cur = nullptr;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw catalog_error("line " + std::to_string(lineno) + ": malformed header");
            auto body = detail::trim(line.substr(1, line.size() - 2));
            auto sp = body.find(' ');
            if (sp == std::string::npos)
                throw catalog_error("line " + std::to_string(lineno) + ": header needs kind and id");
            out.push_back(Record{body.substr(0, sp), detail::trim(body.substr(sp + 1)), {}});
            cur = &out.back();
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos || !cur)
            throw catalog_error("line " + std::to_string(lineno) + ": expected key = value");
        cur->fields[detail::trim(line.substr(0, eq))].push_back(detail::trim(line.substr(eq + 1)));
    }
    return out;
}

// "p=1, q=-1/2" -> rational bindings
inline std::map<std::string, Rational> parse_bindings(const std::string& s) {
    std::map<std::string, Rational> out;
    if (detail::trim(s).empty()) return out;
    for (const auto& part : detail::split(s, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw catalog_error("bad binding '" + part + "'");
        Expr v = parse(detail::trim(part.substr(eq + 1)));
        v = normalize(v);
        if (!v.is_rat()) throw catalog_error("binding value not rational: '" + part + "'");
        out[detail::trim(part.substr(0, eq))] = v.rat();
    }
    return out;
}

// "p != -2" or "eps in {-1,1}"
struct Constraint {
    enum Op { Neq, In } op;
    Expr lhs;
    Expr rhs;                      // Neq
    std::vector<Rational> set;     // In
    std::string text;

    static Constraint parse_one(const std::string& s) {
        Constraint c;
        c.text = s;
        auto neq = s.find("!=");
        if (neq != std::string::npos) {
            c.op = Neq;
            c.lhs = parse(detail::trim(s.substr(0, neq)));
            c.rhs = parse(detail::trim(s.substr(neq + 2)));
            return c;
        }
        auto in = s.find(" in ");
        if (in != std::string::npos) {
            c.op = In;
            c.lhs = parse(detail::trim(s.substr(0, in)));
            std::string setpart = detail::trim(s.substr(in + 4));
            if (setpart.size() < 2 || setpart.front() != '{' || setpart.back() != '}')
                throw catalog_error("bad set constraint '" + s + "'");
            for (const auto& v : detail::split(setpart.substr(1, setpart.size() - 2), ','))
                c.set.push_back(normalize(parse(v)).rat());
            return c;
        }
        throw catalog_error("unsupported constraint '" + s + "'");
    }

    bool satisfied(const std::map<std::string, Rational>& vals) const {
        std::map<std::string, Expr> sub;
        for (const auto& [k, v] : vals) sub[k] = Expr(v);
        Expr l = normalize(substitute(lhs, sub));
        if (op == In) {
            if (!l.is_rat()) return true;  // unresolved, nothing to check
            for (const auto& r : set)
                if (l.rat() == r) return true;
            return false;
        }
        Expr r;
        try {
            r = normalize(substitute(rhs, sub));
        } catch (const arithmetic_error&) {
            return true;  // excluded value formula itself degenerate here
        }
        if (!l.is_rat() || !r.is_rat()) return true;
        return !(l.rat() == r.rat());
    }
};

// Replace |s| -> s and sign(s) -> 1 for declared-positive base symbols.
inline Expr branch_positive(const Expr& e, const std::set<std::string>& syms) {
    switch (e.kind()) {
        case Kind::Rat:
        case Kind::Sym:
            return e;
        case Kind::Ker:
            if ((e.fn() == Fn::Abs || e.fn() == Fn::Sign) && e.arg().is_sym() &&
                syms.count(e.arg().sym()))
                return e.fn() == Fn::Abs ? e.arg() : Expr(1);
            return make_kernel(e.fn(), branch_positive(e.arg(), syms));
        case Kind::Pow:
            return make_pow(branch_positive(e.base(), syms), branch_positive(e.expo(), syms));
        case Kind::Add:
        case Kind::Mul: {
            std::vector<Expr> ks;
            ks.reserve(e.kids().size());
            for (const auto& k : e.kids()) ks.push_back(branch_positive(k, syms));
            return e.is_add() ? make_add(std::move(ks)) : make_mul(std::move(ks));
        }
    }
    return e;
}

// --------------------------------------------------------------- case rows

struct CaseRow {
    std::string id;
    int table = 0;
    std::string var = "u";
    std::string gauge = "g1";  // g1 | gh
    std::string link;          // equivalent partner row (asterisked numeration)
    std::string f = "1", g = "1", h = "1", A = "1", B = "0";
    std::vector<std::string> params;
    std::vector<Constraint> constraints;
    std::vector<std::map<std::string, Rational>> picks;
    std::vector<std::array<std::string, 3>> gens;
    std::string note;

    static CaseRow from(const Record& r) {
        CaseRow c;
        c.id = r.id;
        c.table = std::stoi(r.get("table", "0"));
        c.var = r.get("var", "u");
        c.gauge = r.get("gauge", "g1");
        c.link = r.get("link", "");
        c.f = r.get("f", "1");
        c.g = r.get("g", "1");
        c.h = r.get("h", "1");
        c.A = r.get("A", "1");
        c.B = r.get("B", "0");
        c.note = r.get("note", "");
        if (r.has("params"))
            for (const auto& p : detail::split(r.one("params"), ','))
                if (!p.empty()) c.params.push_back(p);
        for (const auto& s : r.all("constraint")) c.constraints.push_back(Constraint::parse_one(s));
        if (r.has("picks"))
            for (const auto& s : detail::split(r.one("picks"), ';'))
                if (!s.empty()) c.picks.push_back(parse_bindings(s));
        for (const auto& g : r.all("gen")) {
            auto parts = detail::split(g, ';');
            if (parts.size() != 3) throw catalog_error("case " + r.id + ": gen needs 3 parts");
            c.gens.push_back({parts[0], parts[1], parts[2]});
        }
        return c;
    }
};

struct CaseInstance {
    DCEquation eq;
    std::vector<VectorField> gens;
};

// Symbolic instantiation: parameters may map to arbitrary expressions and
// constraints are not enforced. Elements named in `overrides` replace the
// row entry (keeps the opaque registration when the slot was opaque).
inline CaseInstance instantiate_case_sym(const CaseRow& row,
                                         const std::map<std::string, Expr>& sub,
                                         const std::map<std::string, std::string>& overrides = {},
                                         bool branch_fix = true) {
    std::set<std::string> pos{"x", row.var};
    auto fix = [&](Expr e) { return branch_fix ? branch_positive(e, pos) : e; };

    CaseInstance inst;
    inst.eq.id = row.id;
    inst.eq.var = row.var;
    auto element = [&](const std::string& spec, const std::string& name,
                       const std::string& deps) -> Expr {
        std::string s = detail::trim(spec);
        Expr slot;
        if (s == "opaque") {
            inst.eq.opaque.push_back(OpaqueFn::of(name, deps));
            slot = Expr::symbol(name);
        } else if (s.rfind("rule ", 0) == 0) {
            Expr integrand = fix(substitute(parse(s.substr(5)), sub));
            inst.eq.opaque.push_back(
                OpaqueFn::with_rule(name, Expr::symbol(name) * integrand));
            slot = Expr::symbol(name);
        } else {
            slot = fix(substitute(parse(s), sub));
        }
        auto ov = overrides.find(name);
        if (ov != overrides.end()) slot = fix(substitute(parse(ov->second), sub));
        return slot;
    };
    inst.eq.f = element(row.f, "f", "x");
    inst.eq.g = element(row.g, "g", "x");
    inst.eq.h = element(row.h, "h", "x");
    inst.eq.A = element(row.A, "A", "u");
    inst.eq.B = element(row.B, "B", "u");

    for (std::size_t i = 0; i < row.gens.size(); ++i) {
        VectorField q;
        q.var = row.var;
        q.name = "Q" + std::to_string(i + 1);
        q.tau = fix(substitute(parse(row.gens[i][0]), sub));
        q.xi = fix(substitute(parse(row.gens[i][1]), sub));
        q.eta = fix(substitute(parse(row.gens[i][2]), sub));
        inst.gens.push_back(std::move(q));
    }
    return inst;
}

// Build the concrete equation and generator basis for one parameter choice.
// Arbitrary elements sample the positive branch of |x|, |u|.
inline CaseInstance instantiate_case(const CaseRow& row,
                                     const std::map<std::string, Rational>& vals) {
    for (const auto& p : row.params)
        if (!vals.count(p))
            throw catalog_error("case " + row.id + ": missing parameter '" + p + "'");
    for (const auto& c : row.constraints)
        if (!c.satisfied(vals))
            throw constraint_violation("case " + row.id + ": constraint '" + c.text + "' violated");
    std::map<std::string, Expr> sub;
    for (const auto& [k, v] : vals) sub[k] = Expr(v);
    return instantiate_case_sym(row, sub);
}

// ------------------------------------------------------- equations / rest

struct EquationRec {
    std::string id;
    std::string var = "u";
    std::string residual;                 // empty for class form
    std::string f = "1", g = "1", h = "1", A = "1", B = "0";
    std::string case_ref;                 // instance of a classification case
    std::string with;                     // bindings for case_ref
    std::vector<std::string> params;
    std::vector<std::map<std::string, Rational>> picks;

    static EquationRec from(const Record& r) {
        EquationRec e;
        e.id = r.id;
        e.var = r.get("var", "u");
        e.residual = r.get("residual", "");
        e.f = r.get("f", "1");
        e.g = r.get("g", "1");
        e.h = r.get("h", "1");
        e.A = r.get("A", "1");
        e.B = r.get("B", "0");
        e.case_ref = r.get("case", "");
        e.with = r.get("with", "");
        if (r.has("params"))
            for (const auto& p : detail::split(r.one("params"), ','))
                if (!p.empty()) e.params.push_back(p);
        if (r.has("picks"))
            for (const auto& s : detail::split(r.one("picks"), ';'))
                if (!s.empty()) e.picks.push_back(parse_bindings(s));
        return e;
    }
};

struct SolutionRec {
    std::string id;
    std::string equation;
    std::string expr;
    std::map<std::string, std::vector<Rational>> constants;
    std::map<std::string, Interval> domain;
    std::string note;

    static SolutionRec from(const Record& r) {
        SolutionRec s;
        s.id = r.id;
        s.equation = r.one("equation");
        s.expr = r.one("expr");
        s.note = r.get("note", "");
        for (const auto& line : r.all("constants"))
            for (const auto& part : detail::split(line, ';')) {
                if (part.empty()) continue;
                Constraint c = Constraint::parse_one(part);
                if (c.op != Constraint::In || !c.lhs.is_sym())
                    throw catalog_error("solution " + r.id + ": constants need 'name in {..}'");
                s.constants[c.lhs.sym()] = c.set;
            }
        for (const auto& line : r.all("domain"))
            for (const auto& part : detail::split(line, ';')) {
                if (part.empty()) continue;
                auto bits = detail::split(part, ':');
                if (bits.size() < 3) throw catalog_error("solution " + r.id + ": bad domain");
                Interval iv;
                iv.lo = std::stod(bits[1]);
                iv.hi = std::stod(bits[2]);
                if (bits.size() > 3) iv.exclude = std::stod(bits[3]);
                s.domain[bits[0]] = iv;
            }
        return s;
    }
};

struct TransformRec {
    std::string id;
    PointTransform T;
    std::vector<std::string> params;
    std::vector<std::map<std::string, Rational>> picks;
    std::string note;

    static TransformRec from(const Record& r) {
        TransformRec t;
        t.id = r.id;
        t.T.id = r.id;
        t.T.src_eq = r.get("src", "");
        t.T.tgt_eq = r.get("tgt", "");
        t.T.src_var = r.get("src_var", "u");
        t.T.tgt_var = r.get("tgt_var", "u");
        t.T.differential = r.get("differential", "false") == "true";
        auto fwd = detail::split(r.one("fwd"), ';');
        if (fwd.size() != 3) throw catalog_error("transform " + r.id + ": fwd needs 3 parts");
        t.T.fwd_t = parse(fwd[0]);
        t.T.fwd_x = parse(fwd[1]);
        t.T.fwd_u = parse(fwd[2]);
        if (r.has("inv")) {
            auto inv = detail::split(r.one("inv"), ';');
            if (inv.size() != 3) throw catalog_error("transform " + r.id + ": inv needs 3 parts");
            t.T.inv_t = parse(inv[0]);
            t.T.inv_x = parse(inv[1]);
            t.T.inv_u = parse(inv[2]);
        }
        if (r.has("params"))
            for (const auto& p : detail::split(r.one("params"), ','))
                if (!p.empty()) t.params.push_back(p);
        if (r.has("picks"))
            for (const auto& s : detail::split(r.one("picks"), ';'))
                if (!s.empty()) t.picks.push_back(parse_bindings(s));
        t.note = r.get("note", "");
        return t;
    }

    PointTransform instantiate(const std::map<std::string, Rational>& vals) const {
        std::map<std::string, Expr> sub;
        for (const auto& [k, v] : vals) sub[k] = Expr(v);
        PointTransform out = T;
        for (Expr* e : {&out.fwd_t, &out.fwd_x, &out.fwd_u, &out.inv_t, &out.inv_x, &out.inv_u})
            *e = substitute(*e, sub);
        return out;
    }
};

struct ReductionRec {
    std::string id;
    std::string equation;     // equation record id
    std::string subalgebra;   // human label
    std::string form;         // dependent variable as expr in (t, x, phi)
    std::string omega;        // similarity variable as expr in (t, x)
    std::string eliminate;    // "x ; <expr in w,t>" or "t ; <expr in w,x>" or ""
    std::string factor = "1"; // declared common factor to divide out
    std::string ode;          // expected reduced residual in (w, phi, phi_w, ...)
    std::string branch;       // "t>0", "t<0", "x>0" presubstitutions
    std::vector<std::string> sols;  // known phi(w) solutions
    std::vector<std::string> params;
    std::vector<std::map<std::string, Rational>> picks;

    static ReductionRec from(const Record& r) {
        ReductionRec d;
        d.id = r.id;
        d.equation = r.one("equation");
        d.subalgebra = r.get("subalgebra", "");
        d.form = r.one("form");
        d.omega = r.one("omega");
        d.eliminate = r.get("eliminate", "");
        d.factor = r.get("factor", "1");
        d.ode = r.get("ode", "");
        d.branch = r.get("branch", "");
        for (const auto& s : r.all("sol")) d.sols.push_back(s);
        if (r.has("params"))
            for (const auto& p : detail::split(r.one("params"), ','))
                if (!p.empty()) d.params.push_back(p);
        if (r.has("picks"))
            for (const auto& s : detail::split(r.one("picks"), ';'))
                if (!s.empty()) d.picks.push_back(parse_bindings(s));
        return d;
    }
};

struct ContractionRec {
    std::string id;
    std::string kind = "equation";  // "equation" | "ansatz"
    std::string source, target;     // case ids, or reduction-row ids for ansatz kind
    std::string lambda = "delta";
    std::string limit = "inf";      // "inf" or a rational
    std::string srcsub;             // source params as exprs in lambda/target params
    std::string scale = "1;0;1;0";  // d1;d2;d3;d4 of the equivalence member
    std::string xmap = "x;x";       // X(x);Xinv(x)
    std::string gauge = "1;1;1;0";  // e1;e2;e3;e4
    std::string srcA, srcB;         // element overrides (opaque rescalings)
    std::string odescale = "1";     // multiplier for ansatz-kind ODE contraction
    std::vector<std::string> recipes;  // per target generator, expr over Q1..Qn
    std::vector<std::map<std::string, Rational>> picks;
    int rate = 1;

    static ContractionRec from(const Record& r) {
        ContractionRec c;
        c.id = r.id;
        c.kind = r.get("kind", "equation");
        c.source = r.one("source");
        c.target = r.one("target");
        c.lambda = r.get("lambda", "delta");
        c.limit = r.get("limit", "inf");
        c.srcsub = r.get("srcsub", "");
        c.scale = r.get("scale", "1;0;1;0");
        c.xmap = r.get("xmap", "x;x");
        c.gauge = r.get("gauge", "1;1;1;0");
        c.srcA = r.get("srcA", "");
        c.srcB = r.get("srcB", "");
        c.odescale = r.get("odescale", "1");
        c.rate = std::stoi(r.get("rate", "1"));
        for (const auto& s : r.all("recipe")) c.recipes.push_back(s);
        if (r.has("picks"))
            for (const auto& s : detail::split(r.one("picks"), ';'))
                if (!s.empty()) c.picks.push_back(parse_bindings(s));
        return c;
    }
};

struct AlgebraRec {
    std::string id;
    std::string var = "u";
    std::vector<std::array<std::string, 3>> gens;
    // "i, j ; k = coeff, k = coeff" with 1-based indices
    std::vector<std::string> brackets;
    std::vector<std::string> params;
    std::vector<std::map<std::string, Rational>> picks;

    static AlgebraRec from(const Record& r) {
        AlgebraRec a;
        a.id = r.id;
        a.var = r.get("var", "u");
        for (const auto& g : r.all("gen")) {
            auto parts = detail::split(g, ';');
            if (parts.size() != 3) throw catalog_error("algebra " + r.id + ": gen needs 3 parts");
            a.gens.push_back({parts[0], parts[1], parts[2]});
        }
        for (const auto& b : r.all("bracket")) a.brackets.push_back(b);
        if (r.has("params"))
            for (const auto& p : detail::split(r.one("params"), ','))
                if (!p.empty()) a.params.push_back(p);
        if (r.has("picks"))
            for (const auto& s : detail::split(r.one("picks"), ';'))
                if (!s.empty()) a.picks.push_back(parse_bindings(s));
        return a;
    }

    AlgebraSpec instantiate(const std::map<std::string, Rational>& vals) const {
        std::map<std::string, Expr> sub;
        for (const auto& [k, v] : vals) sub[k] = Expr(v);
        AlgebraSpec spec;
        spec.id = id;
        spec.var = var;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            VectorField q;
            q.var = var;
            q.name = "Q" + std::to_string(i + 1);
            q.tau = substitute(parse(gens[i][0]), sub);
            q.xi = substitute(parse(gens[i][1]), sub);
            q.eta = substitute(parse(gens[i][2]), sub);
            spec.basis.push_back(std::move(q));
        }
        for (const auto& btxt : brackets) {
            auto halves = detail::split(btxt, ';');
            if (halves.size() != 2) throw catalog_error("algebra " + id + ": bad bracket");
            auto ij = detail::split(halves[0], ',');
            if (ij.size() != 2) throw catalog_error("algebra " + id + ": bad bracket indices");
            int i = std::stoi(ij[0]) - 1, j = std::stoi(ij[1]) - 1;
            std::vector<std::pair<int, Expr>> terms;
            for (const auto& part : detail::split(halves[1], ',')) {
                if (part.empty()) continue;
                auto eq = part.find('=');
                if (eq == std::string::npos)
                    throw catalog_error("algebra " + id + ": bad bracket term");
                int k = std::stoi(detail::trim(part.substr(0, eq))) - 1;
                terms.emplace_back(k, substitute(parse(detail::trim(part.substr(eq + 1))), sub));
            }
            spec.brackets[{i, j}] = std::move(terms);
        }
        return spec;
    }
};

// ----------------------------------------------------------------- catalog

struct Catalog {
    std::map<std::string, CaseRow> cases;
    std::map<std::string, EquationRec> equations;
    std::map<std::string, SolutionRec> solutions;
    std::map<std::string, TransformRec> transforms;
    std::map<std::string, ReductionRec> reductions;
    std::map<std::string, ContractionRec> contractions;
    std::map<std::string, AlgebraRec> algebras;

    void load_text(const std::string& text) {
        for (const auto& r : parse_records(text)) {
            if (r.kind == "case") cases[r.id] = CaseRow::from(r);
            else if (r.kind == "equation") equations[r.id] = EquationRec::from(r);
            else if (r.kind == "solution") solutions[r.id] = SolutionRec::from(r);
            else if (r.kind == "transform") transforms[r.id] = TransformRec::from(r);
            else if (r.kind == "reduction") reductions[r.id] = ReductionRec::from(r);
            else if (r.kind == "contraction") contractions[r.id] = ContractionRec::from(r);
            else if (r.kind == "algebra") algebras[r.id] = AlgebraRec::from(r);
            else throw catalog_error("unknown record kind '" + r.kind + "'");
        }
    }

    static const Catalog& builtin();

    const CaseRow& case_row(const std::string& id) const {
        auto it = cases.find(id);
        if (it == cases.end()) throw catalog_error("unknown case '" + id + "'");
        return it->second;
    }

    DCEquation equation(const std::string& id,
                        const std::map<std::string, Rational>& vals = {}) const {
        auto it = equations.find(id);
        if (it == equations.end()) throw catalog_error("unknown equation '" + id + "'");
        const EquationRec& e = it->second;
        std::map<std::string, Expr> sub;
        for (const auto& [k, v] : vals) sub[k] = Expr(v);
        if (!e.case_ref.empty()) {
            auto binds = parse_bindings(e.with);
            for (const auto& [k, v] : vals) binds[k] = v;
            CaseInstance inst = instantiate_case(case_row(e.case_ref), binds);
            inst.eq.id = id;
            inst.eq.var = e.var;
            return inst.eq.renamed(e.var);
        }
        DCEquation eq;
        eq.id = id;
        eq.var = e.var;
        std::set<std::string> pos{"x", e.var};
        if (!e.residual.empty()) {
            eq.residual_override = branch_positive(substitute(parse(e.residual), sub), pos);
        } else {
            eq.f = branch_positive(substitute(parse(e.f), sub), pos);
            eq.g = branch_positive(substitute(parse(e.g), sub), pos);
            eq.h = branch_positive(substitute(parse(e.h), sub), pos);
            eq.A = branch_positive(substitute(parse(e.A), sub), pos);
            eq.B = branch_positive(substitute(parse(e.B), sub), pos);
        }
        return eq;
    }
};

// --------------------------------------------------------------- verifiers

// Every listed generator is a Lie symmetry of the instantiated equation.
inline std::vector<CheckReport> verify_case(const Catalog& cat, const std::string& id,
                                            const std::map<std::string, Rational>& vals,
                                            Domain d = Domain{}) {
    CaseInstance inst = instantiate_case(cat.case_row(id), vals);
    std::vector<CheckReport> out;
    for (const auto& q : inst.gens) {
        Domain dq = d.with_seed(mix_seed(d.seed, id + "/" + q.name));
        out.push_back(check_symmetry(inst.eq, q, dq));
    }
    return out;
}

// Run a case over all its catalog picks (or once when parameter-free).
inline std::vector<CheckReport> verify_case_all(const Catalog& cat, const std::string& id,
                                                Domain d = Domain{}) {
    const CaseRow& row = cat.case_row(id);
    std::vector<CheckReport> out;
    std::vector<std::map<std::string, Rational>> picks = row.picks;
    if (picks.empty()) picks.push_back({});
    for (const auto& p : picks) {
        auto reports = verify_case(cat, id, p, d);
        for (auto& r : reports) {
            std::string tag;
            for (const auto& [k, v] : p) tag += (tag.empty() ? "" : ",") + k + "=" + v.str();
            if (!tag.empty()) r.subject += " [" + tag + "]";
            out.push_back(std::move(r));
        }
    }
    return out;
}

// Exact-solution verification over all constant picks.
inline CheckReport verify_solution(const Catalog& cat, const SolutionRec& sol,
                                   Domain d = Domain{}) {
    CheckReport agg;
    agg.subject = sol.id;
    agg.pass = true;
    auto it = cat.equations.find(sol.equation);
    if (it == cat.equations.end()) throw catalog_error("solution " + sol.id + ": unknown equation");
    const EquationRec& erec = it->second;

    std::vector<std::map<std::string, Rational>> eq_picks = erec.picks;
    if (eq_picks.empty()) eq_picks.push_back({});

    // cartesian product over the solution constants
    std::vector<std::map<std::string, Rational>> combos{{}};
    for (const auto& [name, set] : sol.constants) {
        std::vector<std::map<std::string, Rational>> next;
        for (const auto& base : combos)
            for (const auto& v : set) {
                auto m = base;
                m[name] = v;
                next.push_back(std::move(m));
            }
        combos = std::move(next);
    }

    for (const auto& ep : eq_picks)
        for (const auto& cp : combos) {
            DCEquation eq = cat.equation(sol.equation, ep);
            std::map<std::string, Expr> sub;
            for (const auto& [k, v] : ep) sub[k] = Expr(v);
            for (const auto& [k, v] : cp) sub[k] = Expr(v);
            Expr s = substitute(parse(sol.expr), sub);
            Domain dd = d.with_seed(mix_seed(d.seed, sol.id));
            for (const auto& [k, iv] : sol.domain) dd.vars[k] = iv;
            CheckReport r = solution_residual(eq, s, dd);
            agg.detail.max_rel = std::max(agg.detail.max_rel, r.detail.max_rel);
            agg.detail.max_abs = std::max(agg.detail.max_abs, r.detail.max_abs);
            agg.detail.sampled += r.detail.sampled;
            if (!r.pass) {
                agg.pass = false;
                if (!agg.detail.witness) agg.detail.witness = r.detail.witness;
            }
        }
    return agg;
}

} // namespace dcsym
