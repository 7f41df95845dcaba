#include "doctest.h"

#include "ahh/center.hpp"
#include "ahh/cohomology.hpp"
#include "ahh/parse.hpp"
#include "gen.hpp"

using namespace ahh;

namespace {

const Field Q = Field::rationals();
AlgebraPtr alg(const char* h, Field f = Q) { return OreAlgebra::create(parse_poly(h, f)); }
Poly P(const char* s, Field f = Q) { return parse_poly(s, f); }

bool coefficients_divisible(const OreElement& a, const Poly& g) {
    for (const auto& c : a.coeffs())
        if (!divides(g, c)) return false;
    return true;
}

}  // namespace

TEST_CASE("rD2 rD1 = 0 and im rD2 lies in gcd(h,h') A") {
    testgen::Rng r(41);
    for (const char* h : {"x", "x^2", "x^3", "x^2*(x-1)", "x^2+1"})
        for (unsigned p : {0u, 3u}) {
            auto A = alg(h, testgen::field_of(p));
            Poly g = gcd(A->h(), derivative(A->h()));
            for (int k = 0; k < 20; ++k) {
                auto a = testgen::ore(r, A, 4, 3);
                auto [dx, dy] = cochain_d1(a);
                CHECK(cochain_d2(dx, dy).is_zero());
                if (p == 0) CHECK(coefficients_divisible(cochain_d2(a, testgen::ore(r, A, 4, 3)), g));
            }
        }
}

TEST_CASE("derivation validation") {
    auto A = alg("x^2");
    CHECK(is_derivation(OreElement(A), OreElement::x(A)));
    CHECK_FALSE(is_derivation(OreElement::x(A), OreElement(A)));
    CHECK_THROWS_AS(Derivation::make(OreElement::x(A), OreElement(A)), InvalidDerivation);
}

TEST_CASE("inner derivations") {
    auto A = alg("x^2");
    auto w = is_inner(D_g(A, A->h()), 4);
    REQUIRE(w.has_value());
    CHECK(*w - (-OreElement::x(A)) == OreElement::constant(A, (*w).coeff(0).coeff(0)));
    CHECK_FALSE(is_inner(D_g(A, P("1")), 6).has_value());
    CHECK_FALSE(is_inner(D_g(A, P("x")), 6).has_value());
    auto B = alg("x");
    CHECK_FALSE(is_inner(D_g(B, P("1")), 6).has_value());
    CHECK(is_inner(D_g(B, P("x")), 6).has_value());
}

TEST_CASE("ad(g a_n) values and innerness") {
    for (const char* h : {"x^2", "x^3", "x^2*(x-1)"}) {
        auto A = alg(h);
        Poly pi = pi_of(A->h()), gc = gcd(A->h(), derivative(A->h()));
        for (const char* gs : {"1", "x", "x^2+2"})
            for (unsigned n = 1; n <= 3; ++n) {
                Poly g = P(gs);
                auto D = ad_gan(A, g, n);
                std::vector<Poly> c(n, Poly(Q));
                c[n - 1] = pi * g * pow(A->h(), n - 1) * Scalar(Q, n);
                CHECK(ore_to_weyl(D.dx()) == WeylElement(Q, c));
                CHECK(coefficients_divisible(D.dx(), pi));
                CHECK(coefficients_divisible(apply_derivation(D, OreElement::from_poly(A, A->h())), A->h()));
                CHECK(coefficients_divisible(apply_derivation(D, OreElement::from_poly(A, gc)), gc));
                bool inner = is_inner(D, 9).has_value();
                CHECK(inner == divides(gc, g));
            }
    }
    // n = 0 is -D_{delta_0(g)}; for h = x^2, delta_0(1) = -1
    auto A = alg("x^2");
    auto D0 = ad_gan(A, P("1"), 0);
    CHECK(D0.dyhat() == OreElement::constant(A, Scalar(Q, 1)));
}

TEST_CASE("HH^0 descriptions") {
    CHECK(hh0(alg("x^2")).trivial);
    auto r = hh0(alg("1", Field::prime(3)));
    REQUIRE(r.generators.size() == 2);
    CHECK(r.generators[0] == "x^3");
    CHECK(r.generators[1] == "y^3");
    auto s = hh0(alg("x", Field::prime(2)));
    CHECK(s.generators[1] == "(x^2)*y^2");
}

TEST_CASE("HH^1 in characteristic 0") {
    auto a = hh1_char0(alg("x"));
    CHECK(a.center_basis.size() == 1);
    CHECK(a.witt_copies == 0);
    auto b = hh1_char0(alg("x^2"));
    CHECK(b.center_basis.size() == 1);
    CHECK(b.witt_copies == 1);
    auto A = alg("x^2*(x-1)");
    auto c = hh1_char0(A);
    // enumerate g = gcd * x^i below deg h
    CHECK(c.center_basis.size() == static_cast<std::size_t>(A->h().degree() - c.gcd_part.degree()));
    for (const auto& g : c.center_basis) {
        auto D = D_g(A, g);
        CHECK_FALSE(is_inner(D, 6).has_value());
        // central: commutes with every ad(g a_n)
        for (unsigned n = 0; n <= 2; ++n) {
            auto E = ad_gan(A, P("1"), n);
            auto br = hh1_bracket(D, E);
            CHECK(is_inner(br, 8).has_value());
        }
    }
    CHECK(c.nilradical_modulus == P("x"));
    REQUIRE(c.semisimple_factors.size() == 1);
    CHECK(c.semisimple_factors[0].u == P("x"));
    CHECK_THROWS_AS(hh1_char0(alg("x", Field::prime(3))), DomainError);
}

TEST_CASE("HH^2 in characteristic 0") {
    CHECK(hh2_char0(alg("x^2")).modulus == P("x"));
    CHECK(hh2_char0(alg("x")).zero);
    CHECK(hh2_char0(alg("x^2+1")).zero);
    auto A = alg("x^3");
    auto c = project_hh2(parse_ore("x^3*yh^2 + (x+1)*yh + 5", A));
    CHECK(c.to_string() == "(x + 1)*yh^1 + 5");
}

TEST_CASE("rD2 preimages") {
    auto A = alg("x^2");
    std::vector<OreElement> targets{parse_ore("x", A), parse_ore("x*yh^2", A), parse_ore("1", A)};
    auto s = rd2_preimages(A, targets, 5, 4);
    REQUIRE(s[0].has_value());
    CHECK(cochain_d2(s[0]->first, s[0]->second) == targets[0]);
    REQUIRE(s[1].has_value());
    CHECK(cochain_d2(s[1]->first, s[1]->second) == targets[1]);
    CHECK_FALSE(s[2].has_value());
}

TEST_CASE("kappa is F[x^p]-linear and its kernel is F[x^p] h/rho") {
    Field F3 = Field::prime(3);
    testgen::Rng r(2);
    Poly h = P("x^2*(x+1)", F3);
    for (int k = 0; k < 20; ++k) {
        Poly g = testgen::poly(r, F3, 6);
        Poly xp = P("x^3", F3);
        CHECK(kappa(xp * g, h) == xp * kappa(g, h));
    }
    for (const char* hs : {"x", "x^3", "x^2,(x+1)"}) {
        auto fh = parse_factored(hs, F3);
        auto chk = kappa_kernel_check(fh, 9);
        CHECK(chk.equal);
        CHECK(chk.brute_dimension > 0);
    }
    auto c3 = kappa_kernel_check(parse_factored("x^3", F3), 9);
    CHECK(c3.generator.is_one());
}

TEST_CASE("characteristic p HH^2") {
    for (unsigned p : {3u, 5u, 7u}) {
        Field f = Field::prime(p);
        Poly xp1 = Poly::monomial(Scalar(f, 1), p - 1);
        auto A1 = alg("1", f);
        auto r1 = hh2_charp(A1);
        CHECK(r1.free);
        CHECK(r1.K_rank == p - 1);
        REQUIRE(r1.xi.has_value());
        CHECK(*r1.xi == xp1);
        CHECK(r1.top_monomial(p - 1, A1->h()).to_string() == "(x^" + std::to_string(p - 1) + ")*y^" + std::to_string(p - 1));

        auto Ax = alg("x", f);
        auto rx = hh2_charp(Ax);
        CHECK(rx.free);
        REQUIRE(rx.xi.has_value());
        CHECK(*rx.xi == Poly::x(f));
        CHECK(rx.top_monomial(1, Ax->h()).to_string() == "(x^" + std::to_string(p) + ")*y^" + std::to_string(p - 1));
        std::vector<Poly> expect{Poly::constant(f, 1)};
        for (unsigned i = 2; i < p; ++i) expect.push_back(Poly::monomial(Scalar(f, 1), i));
        CHECK(rx.K_basis == expect);
    }
    Field F3 = Field::prime(3);
    auto A = alg("x^2", F3);
    auto r = hh2_charp(A);
    CHECK_FALSE(r.free);
    REQUIRE(r.torsion_generators.size() == 2);
    CHECK(r.torsion_generators[0].to_string() == "1");
    CHECK(r.torsion_generators[1].to_string() == "(x^2)*y^1");
    CHECK(r.K_basis == std::vector<Poly>{P("x", F3), P("x^2", F3)});
    REQUIRE(r.top_summands.size() == 1);
    CHECK(r.top_summands[0].first == 0);
    CHECK(r.top_summands[0].second.is_zero());
    CHECK(r.top_monomial(0, A->h()).to_string() == "(x^4)*y^2");
}

TEST_CASE("freeness flag matches separability") {
    for (unsigned p : {2u, 3u, 5u, 7u})
        for (const char* h : {"1", "x", "x^2", "x^3", "x^2+1", "x*(x-1)", "x^2*(x-1)", "x^5-x", "x^3+1"}) {
            Field f = Field::prime(p);
            auto A = alg(h, f);
            auto fr = hh2_freeness(A);
            INFO("p=" << p << " h=" << h);
            CHECK(fr.free == gcd(A->h(), derivative(A->h())).is_one());
            auto rep = hh2_charp(A);
            CHECK(rep.K_rank == p - 1);
            if (fr.free) CHECK(fr.xi.has_value());
        }
}

TEST_CASE("HH^1 normal form") {
    auto A = alg("x^2*(x-1)");
    Poly h = A->h(), g = gcd(h, derivative(h));
    testgen::Rng r(17);
    for (int t = 0; t < 10; ++t) {
        Poly d = testgen::poly(r, Q, 5);
        std::map<unsigned, Poly> ad{{1, testgen::poly(r, Q, 3)}, {2, testgen::poly(r, Q, 3)}};
        HH1Element e(A, d, ad);
        CHECK(e.dpart().degree() < h.degree());
        for (const auto& [n, c] : e.adparts()) CHECK(c.degree() < g.degree());
        // the unreduced sum differs from the normal form by an inner derivation
        Derivation raw = D_g(A, d) + ad_gan(A, ad[1], 1) + ad_gan(A, ad[2], 2);
        CHECK(is_inner(raw + (-e.representative()), 9).has_value());
    }
    CHECK(HH1Element(A, h * P("x+3"), {{1, g}, {2, g * P("x")}}).is_zero());
    // the a_0 part folds into the D part
    auto z = HH1Element(A, Poly(Q), {{0, P("1")}});
    CHECK(z.dpart() == -delta0(P("1"), h));
    CHECK(z.adparts().empty());
    CHECK_THROWS_AS(project_hh2(parse_ore("x", alg("x^2+1"))), DomainError);
}
