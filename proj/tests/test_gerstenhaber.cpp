#include "doctest.h"

#include "ahh/gerstenhaber.hpp"
#include "ahh/parse.hpp"
#include "gen.hpp"

using namespace ahh;

namespace {

const Field Q = Field::rationals();
AlgebraPtr alg(const char* h) { return OreAlgebra::create(parse_poly(h, Q)); }
Poly P(const char* s) { return parse_poly(s, Q); }
Scalar S(long long a, long long b = 1) { return Scalar::fraction(Q, a, b); }

HH2Class yh(const Poly& mod, unsigned l, const Poly& c) {
    std::vector<Poly> v(l + 1, Poly(Q));
    v[l] = c;
    return HH2Class(mod, v);
}

}  // namespace

TEST_CASE("delta_0") {
    CHECK(delta0(P("1"), P("x^2")) == P("-1"));
    CHECK(delta0(P("1"), P("x^3")) == P("-2"));
}

TEST_CASE("closed bracket formulas") {
    Poly mod = P("x^2");  // h = x^3
    for (unsigned k = 0; k <= 5; ++k) {
        auto a = yh(mod, k, P("1"));
        auto b = bracket_Dg(P("x+1"), a);
        CHECK(b == (k == 0 ? HH2Class(mod, {}) : yh(mod, k - 1, P("x+1") * S(k))));
        // central classes act trivially
        CHECK(bracket_Dg(P("x^2*(x+5)"), a).is_zero());
        CHECK(bracket_adgan(P("x^3"), P("3*x^2"), 2, a).is_zero());
    }
    Poly x = P("x");
    for (unsigned l = 0; l <= 6; ++l) {
        auto a = yh(x, l, P("1"));
        CHECK(bracket_adgan(P("x^2"), P("1"), 1, a) == yh(x, l, P("1") * S(static_cast<long long>(l) - 2)));
    }
    // n = 0 is -delta_0(g) d/dyh
    testgen::Rng r(4);
    for (int t = 0; t < 20; ++t) {
        Poly g = testgen::poly(r, Q, 4);
        auto a = HH2Class(mod, {testgen::poly(r, Q, 3), testgen::poly(r, Q, 3), testgen::poly(r, Q, 3)});
        CHECK(bracket_adgan(P("x^3"), g, 0, a) == bracket_Dg(-delta0(g, P("x^3")), a));
    }
}

TEST_CASE("general bracket route") {
    auto A = alg("x^2");
    for (unsigned k = 0; k <= 5; ++k) {
        auto a = pow(OreElement::yhat(A), k);
        CHECK(bracket_general(D_g(A, P("1")), a) == (k == 0 ? HH2Class(P("x"), {}) : yh(P("x"), k - 1, P("1") * S(k))));
        CHECK(bracket_general(ad_gan(A, P("1"), 1), a) == yh(P("x"), k, P("1") * S(static_cast<long long>(k) - 2)));
        // D_h is inner with witness -x
        CHECK(bracket_general(D_g(A, A->h()), a).is_zero());
    }
    CHECK_THROWS_AS(bracket_general(D_g(alg("x^2+1"), P("1")), OreElement::x(alg("x^2+1"))), DomainError);
    auto F = OreAlgebra::create(parse_poly("x^2", Field::prime(3)));
    CHECK_THROWS_AS(bracket_general(D_g(F, Poly::constant(Field::prime(3), 1)), OreElement::x(F)), DomainError);
}

TEST_CASE("bracket is well defined on classes") {
    testgen::Rng r(11);
    for (const char* h : {"x^3", "x^2*(x-1)"}) {
        auto A = alg(h);
        Poly g = gcd(A->h(), derivative(A->h()));
        for (int t = 0; t < 10; ++t) {
            auto D = ad_gan(A, testgen::poly(r, Q, 2), static_cast<unsigned>(r.range(0, 3)));
            auto a = testgen::ore(r, A, 3, 3);
            auto shift = g * testgen::ore(r, A, 3, 3);
            LiftedDerivation L(D);
            CHECK(L.bracket(a) == L.bracket(a + shift));
        }
    }
}

TEST_CASE("HH^1 brackets of derivations") {
    auto A = alg("x^2");
    auto D = ad_gan(A, P("x+1"), 2);
    auto z = hh1_bracket(D, D);
    CHECK(z.dx().is_zero());
    CHECK(z.dyhat().is_zero());
    auto c = hh1_bracket(D_g(A, P("x")), D_g(A, P("x^2+1")));
    CHECK(c.dx().is_zero());
    CHECK(c.dyhat().is_zero());
    auto m = hh1_bracket(ad_gan(A, P("1"), 1), D_g(A, P("1")));
    CHECK(is_derivation(m.dx(), m.dyhat()));
}

TEST_CASE("Witt and Virasoro brackets") {
    CHECK(witt_bracket(WittElement::w(0), WittElement::w(1)) == WittElement::w(1));
    CHECK(witt_bracket(WittElement::w(3), WittElement::w(3)).terms.empty());
    VirasoroElement a{WittElement::w(2), S(0)}, b{WittElement::w(-2), S(0)};
    auto c = virasoro_bracket(a, b);
    CHECK(c.w == WittElement::w(Q, 0, S(-4)));
    CHECK(c.central == S(1, 2));
    CHECK(c.to_string() == "(-4)w_0 + (1/2)c");
}

TEST_CASE("V_mu and U_mu actions") {
    CHECK(vmu_action(-1, VmuVector::basis(S(2), 0)).is_zero());
    auto v = vmu_action(1, VmuVector::basis(S(2), 1));
    CHECK(v.coeffs.size() == 1);
    CHECK(v.coeffs.at(2) == S(-3));
    for (long long l = 1; l <= 8; ++l) {
        auto e = vmu_action(-1, VmuVector::basis(S(2), l));
        CHECK(e.coeffs.at(l - 1) == S(l));
    }
    CHECK_THROWS_AS(vmu_action(-2, VmuVector::basis(S(2), 3)), DomainError);
    auto u = umu_action(-3, VmuVector::basis(S(1, 2), 1, true));
    CHECK(u.coeffs.at(-2) == S(2));
    // central charge acts by zero on U_mu
    VirasoroElement cc{WittElement{Q, {}}, S(1)};
    CHECK(act(cc, VmuVector::basis(S(3), 4, true)).is_zero());
}

TEST_CASE("irreducibility and isomorphism certificates") {
    auto z = vmu_irreducible(S(0));
    CHECK_FALSE(z.irreducible);
    CHECK(z.witness == "F yh^0");
    CHECK(vmu_irreducible(S(2), 10).irreducible);
    CHECK(vmu_irreducible(S(3, 2), 10).irreducible);
    CHECK(vmu_isomorphic(S(2), S(2)).isomorphic);
    CHECK_FALSE(vmu_isomorphic(S(2), S(3, 2)).isomorphic);
    CHECK(vmu_isomorphic(S(2), S(1), 8).recovered_mu == S(2));
    auto sp = w0_spectrum(S(2), 8);
    for (unsigned l = 0; l <= 8; ++l) CHECK(sp[l] == S(static_cast<long long>(l) - 2));
}

TEST_CASE("witt-rep suite") {
    auto r = verify_witt_rep({S(2), S(3, 2), S(1), S(0)});
    CHECK(r.passed());
}

TEST_CASE("nu") {
    CHECK(nu_element(P("x^2")) == P("-1"));
    CHECK(nu_element(P("x^3")) == P("-1/2"));
    Poly h = P("x^3*(x-1)^2");
    Poly nu = nu_element(h), dpi = derivative(pi_of(h));
    CHECK(rem(nu * dpi - P("-1/2"), P("x")).is_zero());
    CHECK(rem(nu * dpi - P("-1"), P("x-1")).is_zero());
    CHECK_THROWS_AS(nu_element(P("x^2+1")), DomainError);
}

TEST_CASE("composition series") {
    auto r = composition_series(parse_factored("x^2", Q));
    CHECK(r.length == 1);
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].mu == S(2));
    CHECK(r.semisimple);
    for (unsigned n = 2; n <= 5; ++n) {
        auto s = composition_series(pow(P("x"), n));
        CHECK(s.length == n - 1);
        CHECK(s.semisimple == (n <= 2));
        for (unsigned i = 0; i + 1 < n; ++i) CHECK(s.factors[i].mu == S(n - i, n - 1));
    }
    auto t = composition_series(parse_factored("x^3,(x-1)^2", Q));
    CHECK(t.length == 3);
    CHECK_FALSE(t.semisimple);
    REQUIRE(t.factors.size() == 3);
    CHECK(t.factors[0].mu == S(3, 2));
    CHECK(t.factors[1].mu == S(1));
    CHECK(t.factors[2].mu == S(2));
    CHECK(t.factors[2].j == 2);
    // unfactored input splits rational roots
    auto u = composition_series(P("x^3*(x-1)^2"));
    CHECK(u.length == 3);
    CHECK(u.factorisation_certified);
    // (x^2+1)^2 (x^2-2)^2: the quartic part stays whole and the report says so
    auto w = composition_series(P("(x^2+1)^2*(x^2-2)^2"));
    CHECK_FALSE(w.factorisation_certified);
    CHECK(w.length == 1);
    CHECK(w.semisimple);
    auto wf = composition_series(parse_factored("(x^2+1)^2,(x^2-2)^2", Q));
    CHECK(wf.factorisation_certified);
    CHECK(wf.length == 2);
    CHECK(w.in_filtration(HH2Class(P("(x^2+1)*(x^2-2)"), {P("x^2+1")}), 0));
}

TEST_CASE("semisimple iff cube-free") {
    for (const char* h : {"x", "x^2", "x^3", "x^4", "x^2*(x-1)^2", "x^3*(x-1)", "(x^2+1)^2", "(x^2+1)^3*x",
                          "x^2*(x-1)*(x+2)^2", "(x-3)^5"}) {
        Poly hp = P(h);
        bool cube_free = true;
        for (const auto& f : squarefree_decomposition(hp).factors()) cube_free = cube_free && f.alpha < 3;
        CHECK(composition_series(hp).semisimple == cube_free);
    }
}

TEST_CASE("S_i action: closed and lifted routes agree") {
    auto r2 = composition_series(parse_factored("x^2", Q));
    CHECK(si_action(r2, 0, 1, P("1"), 0, P("1"), 0, SiRoute::Closed).rep() == P("-2"));
    CHECK(si_action(r2, 0, 1, P("1"), 0, P("1"), 0, SiRoute::Lifted).rep() == P("-2"));
    CHECK(si_action(r2, 1, 1, P("1"), 0, P("1"), 0, SiRoute::Closed).is_zero());

    testgen::Rng r(5);
    auto r3 = composition_series(parse_factored("x^3", Q));
    for (int t = 0; t < 6; ++t) {
        Poly g = testgen::poly(r, Q, 2), f = testgen::poly(r, Q, 2);
        for (long long m = -1; m <= 3; ++m)
            for (unsigned l = 0; l <= 4; ++l)
                for (unsigned i = 0; i <= 1; ++i)
                    CHECK(si_action(r3, i, 1, g, m, f, l, SiRoute::Closed) ==
                          si_action(r3, i, 1, g, m, f, l, SiRoute::Lifted));
    }
    auto rm = composition_series(parse_factored("x^3,(x-1)^2", Q));
    for (unsigned j = 1; j <= 2; ++j)
        for (long long m = -1; m <= 1; ++m)
            for (unsigned l = 0; l <= 2; ++l)
                CHECK(si_action(rm, 0, j, P("x+2"), m, P("1"), l, SiRoute::Closed) ==
                      si_action(rm, 0, j, P("x+2"), m, P("1"), l, SiRoute::Lifted));
    CHECK(si_action(rm, 1, 1, P("1"), 1, P("1"), 1, SiRoute::Closed) ==
          si_action(rm, 1, 1, P("1"), 1, P("1"), 1, SiRoute::Lifted));
}

TEST_CASE("filtration is stable and the nilradical shifts it") {
    testgen::Rng r(8);
    for (const char* h : {"x^3", "x^4", "x^3*(x-1)^2"}) {
        auto A = alg(h);
        auto rep = composition_series(A->h());
        Poly mod = gcd(A->h(), derivative(A->h()));
        for (unsigned i = 0; i <= rep.m_h; ++i)
            for (int t = 0; t < 8; ++t) {
                Poly th = rep.thetas[i];
                HH2Class a(mod, {th * testgen::poly(r, Q, 3), th * testgen::poly(r, Q, 3)});
                REQUIRE(rep.in_filtration(a, i));
                Poly g = testgen::poly(r, Q, 3);
                unsigned n = static_cast<unsigned>(r.range(0, 3));
                CHECK(rep.in_filtration(bracket_adgan(A->h(), g, n, a), i));
                CHECK(rep.in_filtration(bracket_Dg(g, a), i));
                CHECK(rep.in_filtration(bracket_adgan(A->h(), rep.thetas[1] * g, n, a), i + 1));
            }
    }
}

TEST_CASE("congruence lemmas") {
    for (const char* h : {"x^2", "x^3", "x^2*(x-1)", "x^3*(x-1)^2", "(x^2+1)^2"}) {
        auto A = alg(h);
        for (unsigned k = 0; k <= 6; ++k) CHECK(yhat_power_congruence(A, k));
        for (unsigned i = 0; i <= 4; ++i) {
            CHECK(theta_derivative_congruence(A->h(), i));
            CHECK(theta(A->h(), i) == theta(factor_for_analysis(A->h()).factored, i));
        }
    }
}

TEST_CASE("bracket suites: serial and parallel agree") {
    auto A = alg("x^2*(x-1)");
    BracketSuiteOptions o;
    o.trials = 6;
    auto s = verify_bracket_agreement(A, o, 3, Exec::Serial);
    auto p = verify_bracket_agreement(A, o, 3, Exec::Parallel);
    CHECK(s.passed());
    CHECK(s.identities == p.identities);
    CHECK(verify_lie_module(A, 10, 3).passed());
}

TEST_CASE("closed action of HH^1 normal forms") {
    auto A = alg("x^3*(x-1)^2");
    Poly mod = gcd(A->h(), derivative(A->h()));
    testgen::Rng r(21);
    for (int t = 0; t < 5; ++t) {
        HH1Element e(A, testgen::poly(r, Q, 6), {{1, testgen::poly(r, Q, 3)}, {3, testgen::poly(r, Q, 3)}});
        auto a = testgen::ore(r, A, 3, 3);
        CHECK(bracket_closed(e, project_hh2(a)) == bracket_general(e.representative(), a));
    }
}
