#include <catch2/catch.hpp>

#include "dcsym/catalog_data.hpp"
#include "dcsym/reduction.hpp"

using namespace dcsym;

namespace {
const Catalog& cat = Catalog::builtin();
}

TEST_CASE("reduce: traveling wave of (7)") {
    std::map<std::string, Rational> vals{{"p", Rational(1, 2)}, {"alpha", Rational(1)}};
    DCEquation eq = cat.equation("eq7", vals);
    Ansatz a = make_ansatz(cat.reductions.at("t4.1"), vals);
    ReducedODE r = reduce(eq, a);
    CHECK(equal(r.den, Expr(1)));
    Expr expected = substitute(parse("phi_ww + (phi+alpha)*phi_w - 2*p*phi"),
                               {{"p", Expr(Rational(1, 2))}, {"alpha", Expr(1)}});
    // derivation lands on the other side of the equation: factor -1
    Expr d = r.num + expected;
    CHECK(is_zero(d, default_domain(d)).zero);
}

TEST_CASE("reduce: every catalog reduction row reproduces its ODE") {
    for (const auto& [id, rec] : cat.reductions) {
        auto picks = rec.picks.empty() ? std::vector<std::map<std::string, Rational>>{{}}
                                       : rec.picks;
        for (const auto& p : picks) {
            CheckReport r = verify_reduced(cat, rec, p);
            std::string tag;
            for (const auto& [k, v] : p) tag += k + "=" + v.str() + " ";
            INFO(id << " " << tag << " " << r.note);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("reduce: non-invariant ansatz is rejected") {
    DCEquation eq = cat.equation("eq10");
    Ansatz a;
    a.form = Expr::symbol("phi");
    a.omega = parse("x - t");  // (10) is not invariant under this wave
    a.eliminate = {{"x", parse("w + t")}};
    CHECK_THROWS_AS(reduce(eq, a), reduction_error);
}

TEST_CASE("verify_ode_solution: partial solutions of (11)-(13)") {
    Expr ode11 = parse("phi*phi_ww - 5/6*phi_w^2 + w^2*phi_w");
    CHECK(verify_ode_solution(ode11, parse("2*w^3")).pass);
    CHECK(verify_ode_solution(ode11, Expr::symbol("C")).pass);

    Expr ode12 = parse("phi*phi_ww - 5/6*phi_w^2 - 3*w^2*phi + (w+1)*w^2*phi_w");
    for (const char* s : {"2*w^3", "3/4*w^4 + 2*w^3", "2*w^3*(w+1)^3",
                          "5/4*w^4*(w+1)^2 + 2*w^3*(w+1)^2"})
        CHECK(verify_ode_solution(ode12, parse(s)).pass);

    Expr ode13 = parse("phi*phi_ww - 5/6*phi_w^2 + phi_w*sin(w)^2 + 6*phi^2");
    CHECK_FALSE(verify_ode_solution(ode13, parse("w")).pass);
}

TEST_CASE("consistency triangle: ansatz composed with phi-solution solves the PDE") {
    for (const auto& [id, rec] : cat.reductions) {
        if (rec.sols.empty()) continue;
        auto picks = rec.picks.empty() ? std::vector<std::map<std::string, Rational>>{{}}
                                       : rec.picks;
        for (const auto& p : picks)
            for (const auto& s : rec.sols) {
                CheckReport r = triangle_check(cat, rec, p, s);
                INFO(id << " sol " << s);
                CHECK(r.pass);
            }
    }
}

TEST_CASE("antireduction of (10): pinned ansatz gives system (16) exactly") {
    AntireductionSystem sys = antireduce_eq10(cat);
    CHECK(equal(sys.c4, parse("phi4_t - 7*phi5 + 4/3*phi4^2")));
    CHECK(equal(sys.c5, parse("phi5_t - 18*phi6 + 4/3*phi4*phi5")));
    CHECK(equal(sys.c6, parse("phi6_t + 5/6*phi5^2 - 2*phi4*phi6")));
}

TEST_CASE("antireduction of (10): known members") {
    DCEquation eq10 = cat.equation("eq10");

    // v = 2x^3: every coefficient vanishes
    auto z = antireduce_poly(eq10, parse("2*x^3"), {});
    for (const auto& [k, c] : z) {
        INFO("power " << k);
        CHECK(normalize(c).is_zero_lit());
    }

    // v = C x^3: the x^4 balance is 3/2 C(C-2)
    auto c3 = antireduce_poly(eq10, parse("C*x^3"), {});
    REQUIRE(c3.count(4) == 1);
    CHECK(equal(c3[4], parse("3/2*C^2 - 3*C")));
    CHECK(check_algebraic_reduction(parse("C^2 - 2*C"), "C", {Rational(0), Rational(2)}).pass);
}

TEST_CASE("elimination to the third-order equation (17)") {
    Expr r = eliminate_to_third_order(cat);
    Expr target = parse("63*phi4_ttt + 387*phi4_t^2 + 126*phi4*phi4_tt"
                        " + 192*phi4^2*phi4_t + 16*phi4^4");
    // independent hand elimination fixes the factor at 1/7938
    CHECK(equal(normalize(Expr(7938) * r), target));

    // phi4 = 0 satisfies it
    Expr at0 = substitute(target, {{"phi4", Expr(0)}, {"phi4_t", Expr(0)},
                                   {"phi4_tt", Expr(0)}, {"phi4_ttt", Expr(0)}});
    CHECK(normalize(at0).is_zero_lit());
}

TEST_CASE("scaling ansatz phi4 = C/t reduces (17) to the quartic") {
    Expr target = parse("63*phi4_ttt + 387*phi4_t^2 + 126*phi4*phi4_tt"
                        " + 192*phi4^2*phi4_t + 16*phi4^4");
    Expr a = parse("C/t");
    Expr sub = substitute(target, {{"phi4", a},
                                   {"phi4_t", diff(a, "t")},
                                   {"phi4_tt", diff(diff(a, "t"), "t")},
                                   {"phi4_ttt", diff(diff(diff(a, "t"), "t"), "t")}});
    Expr quartic = normalize(make_pow(Expr::symbol("t"), Expr(4)) * sub);
    CHECK(equal(quartic, parse("16*C^4 - 192*C^3 + 639*C^2 - 378*C")));
    CheckReport roots = check_algebraic_reduction(
        quartic, "C", {Rational(0), Rational(3, 4), Rational(21, 4), Rational(6)});
    INFO(roots.note);
    CHECK(roots.pass);
}

TEST_CASE("projective ansatz phi4 = (6t+C)/(t^2+1) gives an equation with no real roots") {
    Expr target = parse("63*phi4_ttt + 387*phi4_t^2 + 126*phi4*phi4_tt"
                        " + 192*phi4^2*phi4_t + 16*phi4^4");
    Expr a = parse("(6*t+C)/(t^2+1)");
    Expr sub = substitute(target, {{"phi4", a},
                                   {"phi4_t", diff(a, "t")},
                                   {"phi4_tt", diff(diff(a, "t"), "t")},
                                   {"phi4_ttt", diff(diff(diff(a, "t"), "t"), "t")}});
    // residual = q(C) W(t) with q = (4C^2+81)(C^2+36); W recovered at C = 0
    Expr q = parse("(4*C^2+81)*(C^2+36)");
    Expr w_of_t = substitute(sub, {{"C", Expr(0)}}) / Expr(81 * 36);
    Expr d = sub - q * w_of_t;
    CHECK(is_zero(d, default_domain(d)).zero);

    CheckReport none = check_algebraic_reduction(q, "C", {});
    CHECK(none.pass);
    // positive definite over the screen
    for (double c : {-10.0, -1.0, 0.0, 0.5, 3.0, 10.0})
        CHECK(eval(q, {{"C", c}}) > 0.0);
}

TEST_CASE("check_algebraic_reduction rejects wrong root claims") {
    // 2 is not a root of C^2 - 3C
    CheckReport r = check_algebraic_reduction(parse("C^2 - 3*C"), "C", {Rational(0), Rational(2)});
    CHECK_FALSE(r.pass);
    // and an omitted rational root is flagged by the screen
    CheckReport r2 = check_algebraic_reduction(parse("C^2 - 3*C"), "C", {Rational(0)});
    CHECK_FALSE(r2.pass);
}

TEST_CASE("generalized nonclassical operator annihilates the family (15)") {
    Expr fam = parse("2*x^3 + phi4*x^4 + phi5*x^5 + phi6*x^6");
    CHECK(normalize(antireduction_characteristic(fam)).is_zero_lit());
    CHECK(normalize(antireduction_characteristic(parse("2*x^3"))).is_zero_lit());

    Expr bad = antireduction_characteristic(parse("x^2"));
    CHECK(equal(bad, parse("12*x^3 - 24*x^2")));
}

TEST_CASE("nonlinear separation in (7): the two-ODE system") {
    std::map<std::string, Rational> vals{{"p", Rational(1, 2)}};
    AntireductionEq7 sys = antireduce_eq7(cat, vals);
    std::map<std::string, Expr> psub{{"p", Expr(Rational(1, 2))}};
    CHECK(equal(sys.c1, substitute(parse("phi_t - phi^2 + 2*p*phi"), psub)));
    CHECK(equal(sys.c0, substitute(parse("psi_t - phi*psi + 2*p*psi"), psub)));
}
