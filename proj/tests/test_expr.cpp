#include <catch2/catch.hpp>

#include <random>

#include "dcsym/calculus.hpp"
#include "dcsym/domain.hpp"
#include "dcsym/parse.hpp"

using namespace dcsym;

namespace {

Expr S(const std::string& n) { return Expr::symbol(n); }

bool zero_eq(const Expr& a, const Expr& b) {
    Expr d = a - b;
    return is_zero(d, default_domain(d)).zero;
}

// Small random expression generator over a fixed symbol pool; used by the
// property tests below.
Expr random_expr(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_int_distribution<int> coef(-4, 4);
    static const char* syms[] = {"x", "u", "t"};
    if (depth <= 0 || pick(rng) < 3) {
        if (pick(rng) < 4) return Expr(coef(rng));
        return S(syms[pick(rng) % 3]);
    }
    switch (pick(rng)) {
        case 0:
        case 1: return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
        case 2:
        case 3: return random_expr(rng, depth - 1) * random_expr(rng, depth - 1);
        case 4: return make_pow(S(syms[pick(rng) % 3]), Expr(1 + pick(rng) % 3));
        case 5: return sin_(random_expr(rng, depth - 1));
        case 6: return cos_(random_expr(rng, depth - 1));
        case 7: return exp_(S(syms[pick(rng) % 3]) * Expr(Rational(coef(rng), 3)));
        case 8: return random_expr(rng, depth - 1) - random_expr(rng, depth - 1);
        default: return make_pow(S(syms[pick(rng) % 3]), Expr(-1 - pick(rng) % 2));
    }
}

} // namespace

TEST_CASE("parse: grammar basics") {
    CHECK(equal(parse("u^(-1)*u_x"), make_mul({make_pow(S("u"), Expr(-1)), S("u_x")})));
    CHECK(equal(parse("2*t/cos(x)^2"), make_mul({Expr(2), S("t"), parse("cos(x)^(-2)")})));
    CHECK(zero_eq(parse("2*t/cos(x)^2"), parse("2*t") * make_pow(cos_(S("x")), Expr(-2))));
    CHECK_THROWS_AS(parse("x^^2"), parse_error);
    try {
        parse("x^^2");
    } catch (const parse_error& pe) {
        CHECK(pe.offset == 2);
    }
    CHECK_THROWS_AS(parse("foo(x)"), parse_error);

    // unary minus binds looser than '^'
    CHECK(equal(parse("-x^2"), -make_pow(S("x"), Expr(2))));
    CHECK(equal(parse("x^-2"), make_pow(S("x"), Expr(-2))));
    CHECK(equal(parse("2^3^2"), Expr(512)));
    CHECK(equal(parse("3/4"), Expr(Rational(3, 4))));
    CHECK(equal(parse("1.5*x"), make_mul({Expr(Rational(3, 2)), S("x")})));
    CHECK(equal(parse("x - -y"), parse("x + y")));
}

TEST_CASE("normal form: arithmetic identities") {
    CHECK(equal(parse("x + x"), parse("2*x")));
    CHECK(equal(parse("x*x"), parse("x^2")));
    CHECK(equal(parse("x^2*x^(-2)"), Expr(1)));
    CHECK(equal(parse("(x+1)*(x-1)"), parse("x^2-1")));
    CHECK(equal(parse("(1+u/4)^4"), parse("1 + u + 3/8*u^2 + 1/16*u^3 + 1/256*u^4")));
    CHECK(equal(parse("exp(x)*exp(-x)"), Expr(1)));
    CHECK(equal(parse("exp(x)*exp(y)"), exp_(S("x") + S("y"))));
    CHECK(equal(parse("exp(ln(x))"), S("x")));
    CHECK(equal(parse("ln(exp(x))"), S("x")));
    CHECK(equal(parse("sqrt(4)"), Expr(2)));
    CHECK(equal(parse("sqrt(9/16)"), Expr(Rational(3, 4))));
    CHECK(equal(parse("abs(x)^2"), parse("x^2")));
    CHECK(equal(parse("abs(x)^3"), make_mul({make_pow(S("x"), Expr(2)), abs_(S("x"))})));
    CHECK(equal(parse("sign(x)^2"), Expr(1)));
    CHECK(equal(parse("sign(x)*abs(x)"), S("x")));
    CHECK(equal(parse("cos(x)^2 + sin(x)^2"), Expr(1)));
    CHECK(equal(parse("cosh(x)^2 - sinh(x)^2"), Expr(1)));
    CHECK(equal(parse("sin(-x)"), -sin_(S("x"))));
    CHECK(equal(parse("cos(-x)"), cos_(S("x"))));
    CHECK(equal(parse("(2*x+2)^(-1)"), parse("1/2*(x+1)^(-1)")));
    CHECK(equal(parse("tan(x)"), parse("sin(x)/cos(x)")));
    CHECK(equal(parse("(exp(x))^2"), exp_(parse("2*x"))));
    CHECK(equal(parse("(u^(-1))^2"), parse("u^(-2)")));
    CHECK(equal(parse("(-8)^(1/3)"), Expr(-2)));
}

TEST_CASE("normal form is idempotent") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        Expr e = random_expr(rng, 4);
        Expr n1 = normalize(e);
        Expr n2 = normalize(n1);
        CHECK(equal(n1, n2));
    }
}

TEST_CASE("print/parse round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        Expr e = normalize(random_expr(rng, 4));
        Expr back = parse(to_string(e));
        INFO(to_string(e));
        CHECK(equal(e, back));
    }
    // assorted hand cases with fractions, powers, kernels
    for (const char* txt : {"u^(-6/5)*u_x", "2*t/cos(x)^2", "-3/4*x + x^2*exp(-2*t)",
                            "abs(u)^(1/2)", "(x - t + C*t*exp(-x/t))^(-1)",
                            "x^(p+2)", "exp(p*x^2+q*x)", "1/(1+delta*exp(x+t))"}) {
        Expr e = parse(txt);
        CHECK(equal(e, parse(to_string(e))));
    }
}

TEST_CASE("diff: partial derivatives") {
    CHECK(equal(diff(parse("x^2"), "x"), parse("2*x")));
    CHECK(equal(diff(parse("exp(mu*u)"), "u"), parse("mu*exp(mu*u)")));
    CHECK(equal(diff(parse("u^(-1)*u_x"), "u_x"), parse("u^(-1)")));
    CHECK(equal(diff(parse("abs(u)"), "u"), sign_(S("u"))));
    CHECK(equal(diff(parse("sign(u)"), "u"), Expr(0)));
    CHECK(equal(diff(parse("arctan(x)"), "x"), parse("(1+x^2)^(-1)")));
    CHECK(equal(diff(parse("x^p"), "x"), parse("p*x^(p-1)")));
    // exponent depending on the variable
    CHECK(zero_eq(diff(parse("x^x"), "x"), parse("x^x*(ln(x)+1)")));
}

TEST_CASE("diff: linearity property") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        Expr e1 = random_expr(rng, 3), e2 = random_expr(rng, 3);
        Rational a(3, 2), b(-2, 5);
        Expr lhs = diff(Expr(a) * e1 + Expr(b) * e2, "x");
        Expr rhs = Expr(a) * diff(e1, "x") + Expr(b) * diff(e2, "x");
        CHECK(zero_eq(lhs, rhs));
    }
}

TEST_CASE("total_diff: chain rule over jets") {
    JetTable jt;
    jt.set("u", S("u_x")).set("u_x", S("u_xx")).stop("u_xx");
    CHECK(equal(total_diff(parse("u^2"), "x", jt), parse("2*u*u_x")));
    CHECK(equal(total_diff(parse("t*u"), "t", JetTable{}.set("u", S("u_t")).stop("u_t")),
                parse("u + t*u_t")));

    // opaque A(u): the table carries its chain entry
    JetTable ja;
    ja.set("u", S("u_x")).set("u_x", S("u_xx")).set("A", parse("A_u*u_x")).stop("u_xx").stop("A_u");
    CHECK(equal(total_diff(parse("A*u_x"), "x", ja), parse("A_u*u_x^2 + A*u_xx")));

    // order overflow: frontier symbol present in the input
    CHECK_THROWS_AS(total_diff(parse("u_xx"), "x", jt), order_overflow);
}

TEST_CASE("total_diff: Leibniz property") {
    std::mt19937_64 rng(13);
    JetTable jt;
    jt.set("u", S("u_x")).set("u_x", S("u_xx")).set("u_xx", S("u_xxx"));
    for (int i = 0; i < 40; ++i) {
        Expr e1 = random_expr(rng, 3), e2 = random_expr(rng, 3);
        Expr lhs = total_diff(e1 * e2, "x", jt);
        Expr rhs = e1 * total_diff(e2, "x", jt) + e2 * total_diff(e1, "x", jt);
        CHECK(zero_eq(lhs, rhs));
    }
}

TEST_CASE("substitute") {
    CHECK(equal(substitute(parse("u_t - u_xx"), {{"u_t", parse("u_xx")}}), Expr(0)));
    CHECK(equal(substitute(S("v"), {{"v", parse("2*x^3")}}), parse("2*x^3")));
    CHECK(equal(substitute(parse("(1+u/delta)^delta"), {{"delta", Expr(4)}, {"u", Expr(4)}}),
                Expr(16)));
    // simultaneous, not sequential
    CHECK(equal(substitute(parse("x+y"), {{"x", S("y")}, {"y", S("x")}}), parse("x+y")));
}

TEST_CASE("eval") {
    CHECK(eval(parse("u^(-1)*u_x"), {{"u", 2.0}, {"u_x", 4.0}}) == Approx(2.0));
    CHECK(eval(parse("sin(x)^2+cos(x)^2"), {{"x", 0.7}}) == Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(eval(parse("ln(u)"), Point{{"u", -1.0}}), eval_error);
    CHECK_THROWS_AS(eval(parse("x+y"), Point{{"x", 1.0}}), eval_error);
    CHECK(eval(parse("2^(1/2)"), {}) == Approx(std::sqrt(2.0)));
    CHECK(eval(parse("u^mu"), {{"u", 2.0}, {"mu", -1.5}}) == Approx(std::pow(2.0, -1.5)));
}

TEST_CASE("eval: derivative matches central finite differences") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> uni(0.6, 1.8);
    int done = 0;
    for (int i = 0; done < 100 && i < 400; ++i) {
        Expr e = random_expr(rng, 3);
        if (!depends_on(e, "x")) continue;
        Expr de = diff(e, "x");
        Point pt{{"x", uni(rng)}, {"u", uni(rng)}, {"t", uni(rng)}};
        double h = 1e-6;
        Point lo = pt, hi = pt;
        lo["x"] -= h;
        hi["x"] += h;
        double fd, an;
        try {
            fd = (eval(e, hi) - eval(e, lo)) / (2 * h);
            an = eval(de, pt);
        } catch (const eval_error&) {
            continue;
        }
        if (!std::isfinite(fd) || !std::isfinite(an) || std::fabs(an) > 1e6) continue;
        INFO(to_string(e));
        CHECK(std::fabs(an - fd) <= 1e-5 * (1.0 + std::fabs(an)));
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("collect_poly") {
    auto m = collect_poly(parse("(a+x)^2"), "x");
    REQUIRE(m.size() == 3);
    CHECK(equal(m[0], parse("a^2")));
    CHECK(equal(m[1], parse("2*a")));
    CHECK(equal(m[2], Expr(1)));

    auto m2 = collect_poly(parse("2*x^3 + phi4*x^4"), "x");
    REQUIRE(m2.size() == 2);
    CHECK(equal(m2[3], Expr(2)));
    CHECK(equal(m2[4], S("phi4")));

    CHECK_THROWS_AS(collect_poly(parse("exp(x)"), "x"), non_polynomial);
    CHECK_THROWS_AS(collect_poly(parse("x^(-1)"), "x"), non_polynomial);
}

TEST_CASE("collect_poly: reassembly is zero-equivalent") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        // build a guaranteed polynomial in x
        Expr e = Expr(0);
        std::uniform_int_distribution<int> deg(0, 4), c(-3, 3);
        for (int k = 0; k <= deg(rng); ++k)
            e = e + Expr(c(rng)) * make_pow(S("x"), Expr(k)) * (c(rng) > 0 ? S("u") : Expr(1));
        auto m = collect_poly(e, "x");
        Expr back(0);
        for (auto& [k, coeff] : m) back = back + coeff * make_pow(S("x"), Expr(k));
        CHECK(zero_eq(e, back));
    }
}

TEST_CASE("is_zero") {
    Expr e1 = parse("sin(x)^2+cos(x)^2-1");
    auto r1 = is_zero(e1, default_domain(e1));
    CHECK(r1.zero);
    CHECK(r1.structural);  // collapses in the normal form

    Expr e2 = parse("x^2 - x*x");
    CHECK(is_zero(e2, default_domain(e2)).structural);

    Expr e3 = parse("x^2 - x");
    auto r3 = is_zero(e3, default_domain(e3));
    CHECK_FALSE(r3.zero);
    REQUIRE(r3.witness.has_value());
    CHECK(std::fabs(r3.witness->residual) > 1e-9);

    // numeric-only zero: mixed abs/plain powers on the positive branch
    Domain dpos;
    dpos.set("x", 0.5, 2.0);
    CHECK(is_zero(parse("abs(x)^(1/2) - x^(1/2)"), dpos).zero);

    CHECK_THROWS_AS(is_zero(parse("ln(-1-x^2)"), default_domain(parse("ln(-1-x^2)"))),
                    singular_domain);
}

TEST_CASE("is_zero: determinism for a fixed seed") {
    Expr e = parse("x^3 - u");
    Domain d = default_domain(e);
    auto a = is_zero(e, d);
    auto b = is_zero(e, d);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.witness->point.at("x") == b.witness->point.at("x"));
    CHECK(a.max_abs == b.max_abs);
}

TEST_CASE("as_fraction: joined form is zero-equivalent to the input") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        Expr e = random_expr(rng, 4);
        Fraction f = as_fraction(e);
        INFO(to_string(e));
        CHECK(zero_eq(f.joined(), e));
    }
    // denominators collect with per-base max exponents
    Fraction f = as_fraction(parse("1/x*(x+1)^(-1) + (x+1)^(-1)*(x+1)^(-1)"));
    CHECK(zero_eq(f.num, parse("2*x+1")));
    CHECK(zero_eq(f.den_expr(), parse("x^3 + 2*x^2 + x")));
}

TEST_CASE("rationalize recovers small rationals") {
    CHECK(*rationalize(0.75) == Rational(3, 4));
    CHECK(*rationalize(-2.0 / 3.0) == Rational(-2, 3));
    CHECK(*rationalize(7938.0) == Rational(7938));
    // nothing with a small denominator sits within 1e-9 of this
    CHECK_FALSE(rationalize(0.123456789123, 50, 1e-9).has_value());
}

TEST_CASE("parser survives malformed input") {
    std::mt19937_64 rng(99);
    const std::string alphabet = "xut+-*/^()_0123456789. abesinchoqrlg";
    std::uniform_int_distribution<int> len(1, 24);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    int parsed = 0, rejected = 0;
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        int n = len(rng);
        for (int k = 0; k < n; ++k) s += alphabet[pick(rng)];
        try {
            parse(s);
            ++parsed;
        } catch (const parse_error&) {
            ++rejected;
        } catch (const arithmetic_error&) {
            ++rejected;  // e.g. division by a literal zero
        }
    }
    CHECK(parsed + rejected == 2000);
    CHECK(parsed > 0);
    CHECK(rejected > 0);
}

TEST_CASE("rationals stay exact in lowest terms") {
    CHECK(equal(parse("2/4"), Expr(Rational(1, 2))));
    CHECK(equal(parse("0.25"), Expr(Rational(1, 4))));
    Rational r(6, -8);
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK_THROWS_AS(Rational(1, 0), arithmetic_error);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    Rational root;
    CHECK(Rational(27, 8).nth_root(3, root));
    CHECK(root == Rational(3, 2));
}
