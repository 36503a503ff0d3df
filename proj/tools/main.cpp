// Command-line front end: runs the verification suites over the built-in
// catalog (optionally extended from a file) and emits text or JSON reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "dcsym/catalog_data.hpp"
#include "dcsym/contraction.hpp"
#include "dcsym/nonclassical.hpp"
#include "dcsym/report.hpp"

using namespace dcsym;

namespace {

struct Options {
    std::uint64_t seed = 0x5eedbead;
    int samples = 50;
    double tolerance = 1e-9;
    std::string catalog_file;
    std::string format = "text";
};

Domain base_domain(const Options& o) {
    Domain d;
    d.seed = o.seed;
    d.samples = o.samples;
    d.atol = o.tolerance;
    d.rtol = o.tolerance;
    return d;
}

Catalog load_catalog(const Options& o) {
    Catalog cat = Catalog::builtin();
    if (!o.catalog_file.empty()) {
        std::ifstream in(o.catalog_file);
        if (!in) throw catalog_error("cannot open catalog file '" + o.catalog_file + "'");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        cat.load_text(text);
    }
    return cat;
}

std::vector<std::map<std::string, Rational>> picks_or_empty(
    const std::vector<std::map<std::string, Rational>>& p) {
    return p.empty() ? std::vector<std::map<std::string, Rational>>{{}} : p;
}

std::string pick_tag(const std::map<std::string, Rational>& p) {
    std::string tag;
    for (const auto& [k, v] : p) tag += (tag.empty() ? "" : ",") + k + "=" + v.str();
    return tag.empty() ? "" : " [" + tag + "]";
}

void run_cases(const Catalog& cat, const Options& o, ReportStream& out,
               const std::string& only = "") {
    for (const auto& [id, row] : cat.cases) {
        if (!only.empty() && id != only) continue;
        for (const auto& r : verify_case_all(cat, id, base_domain(o)))
            out.add(r.subject, r.pass, r.detail, r.note);
    }
}

void run_solutions(const Catalog& cat, const Options& o, ReportStream& out,
                   const std::string& equation = "") {
    for (const auto& [id, sol] : cat.solutions) {
        if (!equation.empty() && sol.equation != equation) continue;
        CheckReport r = verify_solution(cat, sol, base_domain(o));
        out.add(id + " (" + sol.equation + ")", r.pass, r.detail, r.note);
    }
}

void run_algebras(const Catalog& cat, const Options& o, ReportStream& out) {
    (void)o;
    for (const auto& [id, rec] : cat.algebras) {
        for (const auto& p : picks_or_empty(rec.picks)) {
            CheckReport r = check_algebra(rec.instantiate(p));
            out.add(id + pick_tag(p), r.pass, r.detail, r.note);
        }
    }
}

void run_reductions(const Catalog& cat, const Options& o, ReportStream& out,
                    const std::string& equation = "", const std::string& subalgebra = "") {
    for (const auto& [id, rec] : cat.reductions) {
        if (!equation.empty() && rec.equation != equation) continue;
        if (!subalgebra.empty() && rec.subalgebra != subalgebra) continue;
        for (const auto& p : picks_or_empty(rec.picks)) {
            CheckReport r = verify_reduced(cat, rec, p, base_domain(o));
            out.add(id + " (" + rec.subalgebra + ")" + pick_tag(p), r.pass, r.detail, r.note);
        }
    }
}

void run_contraction(const Catalog& cat, const Options& o, ReportStream& out,
                     const ContractionRec& rec, bool verbose) {
    if (rec.kind == "ansatz") {
        CheckReport r = contract_ansatz(cat, rec, base_domain(o));
        out.add(rec.id + " (" + rec.source + " -> " + rec.target + ")", r.pass, r.detail, r.note);
        return;
    }
    for (const auto& p : picks_or_empty(rec.picks)) {
        ContractionInstance inst = build_contraction(cat, rec, p);
        CheckReport lim = check_limit_equation(inst, base_domain(o));
        out.add(rec.id + pick_tag(p) + " limit_equation", lim.pass, lim.detail, lim.note);
        ConvergenceReport wc = check_weak_convergence(inst, {}, base_domain(o));
        {
            VerificationReport vr;
            vr.subject = rec.id + pick_tag(p) + " weak-convergence";
            vr.status = wc.pass ? "pass" : "fail";
            vr.max_residual = wc.deviations.empty() ? 0.0 : wc.deviations.back();
            vr.samples = (int)wc.lambdas.size();
            vr.notes = wc.exact ? "exact family" : "rate " + format_double(wc.rate);
            if (verbose && !wc.exact) {
                vr.notes += "; deviations:";
                for (std::size_t i = 0; i < wc.lambdas.size(); ++i)
                    vr.notes += " " + format_double(wc.lambdas[i]) + "->" +
                                format_double(wc.deviations[i]);
            }
            out.add(std::move(vr));
        }
        for (std::size_t k = 0; k < inst.recipes.size(); ++k) {
            ConvergenceReport rr = contract_operator(inst, k, {}, base_domain(o));
            VerificationReport vr;
            vr.subject = rec.id + pick_tag(p) + " operator Q" + std::to_string(k + 1);
            vr.status = rr.pass ? "pass" : "fail";
            vr.max_residual = rr.deviations.empty() ? 0.0 : rr.deviations.back();
            vr.samples = (int)rr.lambdas.size();
            vr.notes = rr.exact ? "exact" : "rate " + format_double(rr.rate);
            if (!rr.note.empty()) vr.notes += "; " + rr.note;
            out.add(std::move(vr));
        }
    }
}

void run_nonclassical(const Options& o, ReportStream& out) {
    for (int id = 1; id <= 4; ++id) {
        CheckReport r = verify_example(id, base_domain(o));
        out.add("example-" + std::to_string(id), r.pass, r.detail, r.note);
    }
    for (const auto& r : verify_literature_operators(base_domain(o)))
        out.add(r.subject, r.pass, r.detail, r.note);
}

void run_determining(const Options& o, ReportStream& out) {
    DeterminingSystem sys = determining_system_tau1();
    struct Row {
        std::string name;
        Expr derived;
        Expr printed;
    };
    std::vector<Row> rows{
        {"(18) u_x^3", sys.cubic, Expr::symbol("A") * printed_18()},
        {"(19) u_x^2", sys.quadratic, printed_19()},
        {"(20) u_x^1 (line-break '+')", sys.linear, printed_20_corrected()},
        {"(21) u_x^0", sys.constant, printed_21()},
        {"tau=0 (14 terms)", determining_tau0(), printed_tau0()},
    };
    for (const auto& row : rows) {
        Expr d = row.derived - row.printed;
        Domain dz = base_domain(o);
        for (const auto& s : free_symbols(d))
            if (!dz.vars.count(s)) dz.vars[s] = default_interval(s);
        auto z = is_zero(d, dz);
        out.add("determining " + row.name, z.zero, z);
    }
}

int emit(const ReportStream& out, const Options& o) {
    if (o.format == "json") std::cout << out.emit_json();
    else std::cout << out.emit_text();
    return out.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic verification of diffusion-convection symmetry analysis"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--seed", opt.seed, "random seed for the sampling checks");
    app.add_option("--samples", opt.samples, "sample points per zero test");
    app.add_option("--tolerance", opt.tolerance, "absolute/relative tolerance");
    app.add_option("--catalog", opt.catalog_file, "extend the built-in catalog from a file");
    app.add_option("--format", opt.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->require_subcommand(1);
    auto* vcase = verify->add_subcommand("case", "check the generators of one table row");
    std::string case_id, params_str;
    vcase->add_option("id", case_id, "case id, e.g. 3.13")->required();
    vcase->add_option("--params", params_str, "parameter bindings, e.g. p=1/2,eps=1");
    auto* vsol = verify->add_subcommand("solutions", "check the exact-solution database");
    std::string eq_filter;
    vsol->add_option("--equation", eq_filter, "restrict to one equation id");
    auto* valg = verify->add_subcommand("algebra", "check structure constants");
    auto* vall = verify->add_subcommand("all", "everything in catalog order");

    auto* tr = app.add_subcommand("transform", "apply point transformations");
    tr->require_subcommand(1);
    auto* tapply = tr->add_subcommand("apply", "map an equation and verify the pullback");
    std::string tr_id, tr_params;
    tapply->add_option("--transform", tr_id, "transform id")->required();
    tapply->add_option("--params", tr_params, "parameter bindings");
    auto* tmap = tr->add_subcommand("map-solution", "carry a solution across");
    std::string ms_transform, ms_solution, ms_dir = "push";
    tmap->add_option("--transform", ms_transform, "transform id")->required();
    tmap->add_option("--solution", ms_solution, "solution id")->required();
    tmap->add_option("--direction", ms_dir, "push (src->tgt) or pull (tgt->src)")
        ->check(CLI::IsMember({"push", "pull"}));

    auto* red = app.add_subcommand("reduce", "derive reduced ODEs and compare");
    std::string red_case, red_sub;
    red->add_option("--case", red_case, "equation id (eq7, eq10, eq22, eq23)");
    red->add_option("--subalgebra", red_sub, "subalgebra label, e.g. Q2+eps*Q3");

    auto* con = app.add_subcommand("contract", "run a contraction spec");
    std::string con_spec;
    bool con_all = false;
    con->add_option("--spec", con_spec, "contraction id, e.g. 3.14a-to-2.7a");
    con->add_flag("--all", con_all, "run every registered contraction");

    auto* ncl = app.add_subcommand("nonclassical", "conditional-symmetry checks");
    int ncl_example = 0;
    bool ncl_derive = false;
    std::string ncl_case, ncl_params;
    ncl->add_option("--example", ncl_example, "worked example id (1-4)");
    ncl->add_flag("--derive", ncl_derive, "re-derive the determining system");
    ncl->add_option("--case", ncl_case, "instantiate the derived system at a table row");
    ncl->add_option("--params", ncl_params, "parameter bindings for --case");

    auto* lst = app.add_subcommand("list", "list catalog contents");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Catalog cat = load_catalog(opt);
        ReportStream out;

        if (*lst) {
            auto dump = [](const char* kind, const auto& m) {
                std::cout << kind << ":";
                for (const auto& [id, _] : m) std::cout << " " << id;
                std::cout << "\n";
            };
            dump("cases", cat.cases);
            dump("equations", cat.equations);
            dump("solutions", cat.solutions);
            dump("transforms", cat.transforms);
            dump("reductions", cat.reductions);
            dump("contractions", cat.contractions);
            dump("algebras", cat.algebras);
            std::cout << "nonclassical examples: 1 2 3 4\n";
            return 0;
        }

        if (*vcase) {
            if (params_str.empty()) {
                run_cases(cat, opt, out, case_id);
                if (out.reports.empty()) {
                    std::cerr << "error: unknown case '" << case_id << "'\n";
                    return 2;
                }
            } else {
                auto vals = parse_bindings(params_str);
                for (const auto& r : verify_case(cat, case_id, vals, base_domain(opt)))
                    out.add(r.subject + pick_tag(vals), r.pass, r.detail, r.note);
            }
            return emit(out, opt);
        }
        if (*vsol) {
            run_solutions(cat, opt, out, eq_filter);
            return emit(out, opt);
        }
        if (*valg) {
            run_algebras(cat, opt, out);
            return emit(out, opt);
        }
        if (*vall) {
            run_cases(cat, opt, out);
            run_solutions(cat, opt, out);
            run_algebras(cat, opt, out);
            run_reductions(cat, opt, out);
            for (const auto& [id, rec] : cat.contractions)
                run_contraction(cat, opt, out, rec, false);
            run_determining(opt, out);
            run_nonclassical(opt, out);
            return emit(out, opt);
        }
        if (*tapply) {
            const TransformRec& rec = cat.transforms.at(tr_id);
            auto vals = !tr_params.empty() ? parse_bindings(tr_params)
                        : rec.picks.empty() ? std::map<std::string, Rational>{}
                                            : rec.picks.front();
            PointTransform T = rec.instantiate(vals);
            DCEquation src = cat.equation(rec.T.src_eq, vals);
            DCEquation tgt = cat.equation(rec.T.tgt_eq, vals);
            std::cout << "source " << rec.T.src_eq << ": " << to_string(lhs_residual(src))
                      << " = 0\ntarget " << rec.T.tgt_eq << ": " << to_string(lhs_residual(tgt))
                      << " = 0\n";
            if (T.differential) {
                VerificationReport vr;
                vr.subject = tr_id + " pullback";
                vr.status = "skipped";
                vr.notes = "differential substitution, validated solution-wise";
                out.add(std::move(vr));
            } else {
                CheckReport r = check_equation_map(T, src, tgt, base_domain(opt));
                out.add(tr_id + pick_tag(vals) + " pullback", r.pass, r.detail, r.note);
            }
            return emit(out, opt);
        }
        if (*tmap) {
            const TransformRec& rec = cat.transforms.at(ms_transform);
            const SolutionRec& sol = cat.solutions.at(ms_solution);
            auto vals = rec.picks.empty() ? std::map<std::string, Rational>{} : rec.picks.front();
            PointTransform T = rec.instantiate(vals);
            std::map<std::string, Expr> consts;
            for (const auto& [name, set] : sol.constants) consts[name] = Expr(set.front());
            for (const auto& [k, v] : vals) consts[k] = Expr(v);
            Expr s = substitute(parse(sol.expr), consts);
            Expr mapped = ms_dir == "push" ? push_solution(T, s) : pull_solution(T, s);
            std::string target_eq = ms_dir == "push" ? rec.T.tgt_eq : rec.T.src_eq;
            std::cout << (ms_dir == "push" ? "pushed" : "pulled") << " solution: "
                      << to_string(mapped) << "\n";
            DCEquation eq = cat.equation(target_eq, vals);
            CheckReport r = solution_residual(eq, mapped, base_domain(opt));
            out.add(ms_solution + " via " + ms_transform + " -> " + target_eq, r.pass, r.detail);
            return emit(out, opt);
        }
        if (*red) {
            bool printed_one = false;
            for (const auto& [id, rec] : cat.reductions) {
                if (!red_case.empty() && rec.equation != red_case) continue;
                if (!red_sub.empty() && rec.subalgebra != red_sub) continue;
                auto p = picks_or_empty(rec.picks).front();
                DCEquation eq = cat.equation(rec.equation, p);
                Ansatz a = make_ansatz(rec, p);
                ReducedODE ode = reduce(eq, a);
                std::cout << id << " (" << rec.subalgebra << ")" << pick_tag(p)
                          << "\n  ansatz: " << eq.var << " = " << to_string(a.form)
                          << ",  w = " << to_string(a.omega) << "\n  reduced: "
                          << to_string(ode.num)
                          << (equal(ode.den, Expr(1)) ? "" : " / (" + to_string(ode.den) + ")")
                          << " = 0\n";
                CheckReport r = verify_reduced(cat, rec, p, base_domain(opt));
                out.add(id + " vs expected", r.pass, r.detail, r.note);
                printed_one = true;
            }
            if (!printed_one) {
                std::cerr << "no reduction rows matched\n";
                return 2;
            }
            return emit(out, opt);
        }
        if (*con) {
            if (con_all) {
                for (const auto& [id, rec] : cat.contractions)
                    run_contraction(cat, opt, out, rec, false);
            } else if (!con_spec.empty()) {
                run_contraction(cat, opt, out, cat.contractions.at(con_spec), true);
            } else {
                std::cerr << "contract needs --spec <id> or --all\n";
                return 2;
            }
            return emit(out, opt);
        }
        if (*ncl) {
            if (ncl_derive) {
                DeterminingSystem sys = determining_system_tau1();
                std::vector<std::pair<const char*, Expr>> comps{
                    {"u_x^3", sys.cubic}, {"u_x^2", sys.quadratic},
                    {"u_x^1", sys.linear}, {"u_x^0", sys.constant}};
                std::map<std::string, Expr> elem;
                if (!ncl_case.empty()) {
                    auto vals = ncl_params.empty() ? std::map<std::string, Rational>{}
                                                   : parse_bindings(ncl_params);
                    if (cat.case_row(ncl_case).picks.size() && ncl_params.empty())
                        vals = cat.case_row(ncl_case).picks.front();
                    CaseInstance ci = instantiate_case(cat.case_row(ncl_case), vals);
                    auto put = [&](const char* n, const Expr& v, const std::string& dep) {
                        if (v.is_sym() && v.sym() == n) return;  // opaque slot
                        elem[n] = v;
                        elem[std::string(n) + "_" + dep] = diff(v, dep);
                        elem[std::string(n) + "_" + dep + dep] = diff(diff(v, dep), dep);
                    };
                    put("f", ci.eq.f, "x");
                    put("h", ci.eq.h, "x");
                    put("A", ci.eq.A, "u");
                    put("B", ci.eq.B, "u");
                    std::cout << "determining system on case " << ncl_case << ":\n";
                }
                for (auto& [name, c] : comps)
                    std::cout << name << ": " << to_string(normalize(substitute(c, elem)))
                              << "\n";
                std::cout << "tau=0: " << to_string(normalize(substitute(determining_tau0(), elem)))
                          << "\n";
                run_determining(opt, out);
            } else if (ncl_example >= 1 && ncl_example <= 4) {
                CheckReport r = verify_example(ncl_example, base_domain(opt));
                out.add("example-" + std::to_string(ncl_example), r.pass, r.detail, r.note);
            } else {
                run_nonclassical(opt, out);
            }
            return emit(out, opt);
        }
    } catch (const catalog_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const constraint_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range&) {
        std::cerr << "error: unknown catalog id\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
