#include <catch2/catch.hpp>

#include "dcsym/catalog_data.hpp"
#include "dcsym/contraction.hpp"

using namespace dcsym;

namespace {
const Catalog& cat = Catalog::builtin();

std::vector<std::map<std::string, Rational>> picks_of(const ContractionRec& rec) {
    return rec.picks.empty() ? std::vector<std::map<std::string, Rational>>{{}} : rec.picks;
}
} // namespace

TEST_CASE("limit engine: registered family forms") {
    std::set<std::string> pos{"u", "x", "delta"};
    auto lim = [&](const char* s) { return limit_at_infinity(parse(s), "delta", pos); };

    CHECK(equal(lim("(1+u/delta)^delta"), parse("exp(u)")));
    CHECK(equal(lim("abs(1+u/delta)^(2*delta)"), parse("exp(2*u)")));
    CHECK(equal(lim("delta*ln(abs(1+u/delta))"), parse("u")));
    CHECK(equal(lim("(1+x/delta)^(-1)"), Expr(1)));
    CHECK(equal(lim("x^(2/delta)"), Expr(1)));
    CHECK(equal(lim("delta*(x^(2/delta)-1)"), parse("2*ln(x)")));
    CHECK(equal(lim("abs(x)^(-(3*delta+4)/(delta+1))"), parse("x^(-3)")));
    CHECK(equal(lim("(delta+2)/(delta*(delta+1))"), Expr(0)));
    CHECK(equal(lim("(delta^2+x*delta)/(delta^2+1)"), Expr(1)));
    CHECK(equal(lim("delta*((1+u/delta)*(1+x/delta)-1)"), parse("u+x")));
    CHECK_THROWS_AS(lim("delta*x"), no_limit);
    CHECK_THROWS_AS(lim("delta^(1/2)"), no_limit);

    // finite limits by continuity of the elements
    CHECK(equal(normalize(substitute(parse("abs(x)^p"), {{"p", Expr(-2)}})), parse("x^(-2)")));
}

TEST_CASE("limit_equation: every registered contraction lands on its target") {
    for (const auto& [id, rec] : cat.contractions) {
        if (rec.kind != "equation") continue;
        for (const auto& p : picks_of(rec)) {
            ContractionInstance inst = build_contraction(cat, rec, p);
            CheckReport r = check_limit_equation(inst);
            std::string tag;
            for (const auto& [k, v] : p) tag += k + "=" + v.str() + " ";
            INFO(id << " " << tag << " " << r.note);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("weak convergence along the lambda sequence") {
    for (const auto& [id, rec] : cat.contractions) {
        if (rec.kind != "equation") continue;
        // one representative pick per spec keeps the suite quick
        auto p = picks_of(rec).front();
        ContractionInstance inst = build_contraction(cat, rec, p);
        ConvergenceReport r = check_weak_convergence(inst);
        INFO(id << " rate " << r.rate << " devs " << r.deviations.front() << " -> "
                << r.deviations.back() << " jac " << r.jacobian_min << " " << r.note);
        CHECK(r.pass);
    }
}

TEST_CASE("weak convergence: deliberately wrong target is rejected") {
    ContractionRec rec = cat.contractions.at("3.14a-to-2.7a");
    rec.target = "2.7b";  // wrong equation
    ContractionInstance inst = build_contraction(cat, rec, {});
    ConvergenceReport r = check_weak_convergence(inst);
    CHECK_FALSE(r.pass);
}

TEST_CASE("operator contraction: recipes converge and limits are symmetries") {
    for (const auto& [id, rec] : cat.contractions) {
        if (rec.kind != "equation") continue;
        auto p = picks_of(rec).front();
        ContractionInstance inst = build_contraction(cat, rec, p);
        for (std::size_t k = 0; k < inst.recipes.size(); ++k) {
            ConvergenceReport r = contract_operator(inst, k);
            INFO(id << " Q" << k + 1 << " rate " << r.rate << " devs "
                    << (r.deviations.empty() ? 0.0 : r.deviations.front()) << " -> "
                    << (r.deviations.empty() ? 0.0 : r.deviations.back()) << " " << r.note);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("corollary-1 finite-difference check for 2.6b -> 2.6c") {
    for (auto eps : {Rational(1), Rational(-1)}) {
        CheckReport r = corollary_fd_check(cat, eps);
        INFO("eps=" << eps.str() << " worst " << r.detail.max_abs);
        CHECK(r.pass);
        CHECK(r.detail.max_abs <= 1e-6);
    }
}

TEST_CASE("ansatz contraction: table 5 rows map onto table 6 rows") {
    for (const auto& [id, rec] : cat.contractions) {
        if (rec.kind != "ansatz") continue;
        CheckReport r = contract_ansatz(cat, rec);
        INFO(id << " " << r.note);
        CHECK(r.pass);
    }
}
