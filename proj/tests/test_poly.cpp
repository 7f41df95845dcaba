#include "doctest.h"

#include "ahh/parse.hpp"
#include "gen.hpp"

using namespace ahh;

namespace {
const Field Q = Field::rationals();
Poly P(const char* s, Field f = Field::rationals()) { return parse_poly(s, f); }
}  // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
    Scalar a = Scalar::fraction(Q, 3, 2);
    CHECK((a * Scalar::fraction(Q, 2, 3)).is_one());
    CHECK((a - a).is_zero());
    CHECK(a.to_string() == "3/2");
    Field F7 = Field::prime(7);
    Scalar b(F7, -1);
    CHECK(b.residue() == 6);
    CHECK((b * b).is_one());
    CHECK((Scalar(F7, 3) * Scalar(F7, 3).inverse()).is_one());
    CHECK_THROWS_AS(Field::prime(9), DomainError);
    CHECK_THROWS_AS(Scalar(F7).inverse(), DomainError);
    CHECK_THROWS_AS(Scalar::fraction(F7, 1, 7), DomainError);
}

TEST_CASE("scalar overflow promotes to big rationals") {
    Scalar big(Q, 1LL << 62);
    Scalar sq = big * big;
    CHECK(sq.to_mpq() == mpq_class(mpz_class(1) << 124));
    CHECK((sq / big) == big);
    CHECK(((big + big) - big) == big);
}

TEST_CASE("parser and printer") {
    CHECK(P("x^2+1").to_string() == "x^2 + 1");
    CHECK(P("3/2*x - 1").to_string() == "3/2*x - 1");
    CHECK(P("(x-1)^2") == P("x^2 - 2*x + 1"));
    CHECK(P(" 2 * x ^ 3 ") == Poly::monomial(Scalar(Q, 2), 3));
    CHECK(P("-x^2").to_string() == "-x^2");
    CHECK(P("x*x^2") == P("x^3"));
    CHECK(P("0").is_zero());
    CHECK(parse_poly("2*x", Field::prime(2)).is_zero());
    CHECK_THROWS_AS(parse_poly("1/3", Field::prime(3)), ParseError);
    CHECK_THROWS_AS(P("x^"), ParseError);
    CHECK_THROWS_AS(P("y"), ParseError);
    CHECK_THROWS_AS(P("(x+1"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
}

TEST_CASE("print/parse round trip (property)") {
    testgen::Rng r(11);
    for (unsigned p : {0u, 3u, 7u}) {
        Field f = testgen::field_of(p);
        for (int k = 0; k < 200; ++k) {
            Poly a = testgen::poly(r, f, 7, true);
            CHECK(parse_poly(a.to_string(), f) == a);
        }
    }
}

TEST_CASE("division and gcd") {
    Poly h = P("x^2*(x-1)");
    CHECK(gcd(h, derivative(h)) == P("x"));
    CHECK(pi_of(h) == P("x^2 - x"));
    CHECK(gcd(P("2*x^2"), Poly(Q)) == P("x^2"));
    CHECK(gcd(Poly(Q), Poly(Q)).is_zero());
    CHECK_THROWS_AS(divrem(h, Poly(Q)), DomainError);
    CHECK_THROWS_AS(exact_div(h, P("x+1")), DomainError);
    testgen::Rng r(5);
    for (unsigned p : {0u, 2u, 5u}) {
        Field f = testgen::field_of(p);
        for (int k = 0; k < 200; ++k) {
            Poly a = testgen::poly(r, f, 6), b = testgen::nonzero_poly(r, f, 4);
            auto [q, rm] = divrem(a, b);
            CHECK(q * b + rm == a);
            CHECK(rm.degree() < b.degree());
            auto e = extended_gcd(a, b);
            CHECK(e.s * a + e.t * b == e.d);
            CHECK(e.d == gcd(a, b));
            CHECK(divides(e.d, a));
            CHECK(divides(e.d, b));
        }
    }
}

TEST_CASE("squarefree decomposition") {
    auto sf = squarefree_decomposition(P("x^3*(x-1)^2"));
    REQUIRE(sf.factors().size() == 2);
    CHECK(sf.factors()[0].u == P("x-1"));
    CHECK(sf.factors()[0].alpha == 2);
    CHECK(sf.factors()[1].u == P("x"));
    CHECK(sf.factors()[1].alpha == 3);
    CHECK_THROWS_AS(squarefree_decomposition(parse_poly("x^2", Field::prime(3))), DomainError);

    // random products of coprime pieces with multiplicities; the decomposition must rebuild h
    testgen::Rng r(9);
    const char* pieces[] = {"x", "x-1", "x+2", "x^2+1", "x^2-3"};
    for (int k = 0; k < 40; ++k) {
        Poly h = Poly::constant(Scalar(Q, r.range(1, 4)));
        for (auto* pc : pieces)
            if (r.coin()) h *= pow(P(pc), static_cast<unsigned>(r.range(1, 4)));
        auto d = squarefree_decomposition(h);
        CHECK(d.expand() == h);
        for (const auto& fc : d.factors()) CHECK(gcd(fc.u, derivative(fc.u)).is_one());
    }
}

TEST_CASE("theta via iterated gcds matches the exponent formula") {
    auto fx = parse_factored("x^3,(x-1)^2", Q);
    Poly h = fx.expand();
    CHECK(theta(h, 0) == P("1"));
    CHECK(theta(h, 1) == P("x*(x-1)"));
    CHECK(theta(h, 2) == P("x^2*(x-1)"));
    CHECK(theta(h, 3) == P("x^2*(x-1)"));
    testgen::Rng r(21);
    const char* pieces[] = {"x", "x-1", "x+2", "x^2+1"};
    for (int k = 0; k < 40; ++k) {
        std::vector<Factor> fs;
        for (auto* pc : pieces)
            if (r.coin()) fs.push_back({P(pc), static_cast<unsigned>(r.range(1, 6))});
        auto f = FactoredPoly::make(Scalar(Q, 1), fs, true);
        for (unsigned i = 0; i <= 5; ++i) CHECK(theta(f.expand(), i) == theta(f, i));
    }
}

TEST_CASE("factored input") {
    auto f = parse_factored("x^3,(x-1)^2", Q);
    REQUIRE(f.factors().size() == 2);
    CHECK(f.factors()[1].alpha == 2);
    CHECK(f.expand() == P("x^3*(x-1)^2"));
    auto g = parse_factored("2,(x^2+1)", Q);
    CHECK(g.expand() == P("2*x^2+2"));
    CHECK_THROWS_AS(parse_factored("x,x^2", Q), DomainError);
    CHECK_THROWS_AS(parse_factored("(x^2-1)", Q), DomainError);  // has a root
    CHECK_THROWS_AS(parse_factored("x,", Q), ParseError);
}

TEST_CASE("factor_for_analysis") {
    auto a = factor_for_analysis(P("x^3*(x-1)^2*(x^2+1)"));
    CHECK(a.certified);
    CHECK(a.factored.expand() == P("x^3*(x-1)^2*(x^2+1)"));
    CHECK(a.factored.factors().size() == 3);
    auto b = factor_for_analysis(P("(x^2-1)^2"));
    CHECK(b.factored.factors().size() == 2);
    auto c = factor_for_analysis(P("(x^4+1)^2"));
    CHECK_FALSE(c.certified);
    Field F5 = Field::prime(5);
    auto d = factor_for_analysis(parse_poly("x^5*(x+1)^2", F5));
    CHECK(d.certified);
    CHECK(d.factored.factors()[0].alpha == 5);
}

TEST_CASE("CRT idempotents") {
    std::vector<Poly> m{P("x^2"), P("x-1"), P("x^2+1")};
    auto e = crt_idempotents(m);
    Poly sum(Q);
    for (std::size_t j = 0; j < m.size(); ++j) {
        sum += e[j];
        for (std::size_t k = 0; k < m.size(); ++k)
            CHECK(rem(e[j] - Poly::constant(Q, j == k ? 1 : 0), m[k]).is_zero());
    }
    CHECK(rem(sum - Poly::constant(Q, 1), P("x^2*(x-1)*(x^2+1)")).is_zero());
    CHECK_THROWS_AS(crt_idempotents({P("x"), P("x^2")}), DomainError);
}

TEST_CASE("rho over F_p") {
    Field F3 = Field::prime(3);
    CHECK(rho(parse_factored("x^3", F3)) == parse_poly("x^3", F3));
    CHECK(rho(parse_factored("x", F3)).is_one());
    CHECK(rho(parse_factored("x^4,(x+1)^6", F3)) == parse_poly("x^3*(x+1)^6", F3));
    CHECK_THROWS_AS(rho(parse_factored("x^3", Q)), DomainError);
}

TEST_CASE("residues") {
    Residue a(P("x^3"), P("x^2+1"));
    CHECK(a.rep() == P("-x"));
    CHECK((a * a.inverse()).rep().is_one());
    CHECK_THROWS_AS(Residue(P("x"), P("2*x")), DomainError);
}
