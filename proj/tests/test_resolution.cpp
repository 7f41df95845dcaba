#include "doctest.h"

#include "ahh/parse.hpp"
#include "ahh/verify.hpp"
#include "gen.hpp"

using namespace ahh;

namespace {

const Field Q = Field::rationals();
AlgebraPtr alg(const char* h, Field f = Q) { return OreAlgebra::create(parse_poly(h, f)); }
OreElement one(const AlgebraPtr& A) { return OreElement::constant(A, Scalar(A->field(), 1)); }
OreElement poly(const AlgebraPtr& A, const Poly& f) { return OreElement::from_poly(A, f); }

const char* kH[] = {"1", "x", "x^2", "x^3", "x^2+1", "x^2*(x-1)"};

}  // namespace

TEST_CASE("small worked values") {
    auto A = alg("x^2");
    Resolution R(A);
    auto X = OreElement::x(A), Y = OreElement::yhat(A), I = one(A);
    TensorR unit(A);
    unit.add({0, 0}, RelMid{}, {0, 0}, Scalar(Q, 1));
    CHECK(*R.s1_generator(1, S1Mode::Recursive) == unit);
    CHECK(R.s1(R.gen(Y, Gen::X, I)) == unit);
    CHECK(R.s1(R.gen(I, Gen::X, I)).is_zero());
    CHECK(R.s1(R.gen(X, Gen::YHat, Y)).is_zero());
    TensorR g(A);
    g.add({0, 0}, RelMid{}, {1, 0}, Scalar(Q, 1));
    g.add({1, 0}, RelMid{}, {0, 0}, Scalar(Q, 1));
    CHECK(R.G(X * X) == g);
    // d0 of the generators
    TensorAA d(A);
    d.add({1, 0}, NoMid{}, {0, 0}, Scalar(Q, 1));
    d.add({0, 0}, NoMid{}, {1, 0}, Scalar(Q, -1));
    CHECK(R.d0(R.gen(I, Gen::X, I)) == d);
}

TEST_CASE("homotopy and chain identities across fields") {
    Bounds b;
    for (const char* h : kH)
        for (unsigned p : {0u, 2u, 3u, 5u}) {
            auto A = alg(h, testgen::field_of(p));
            auto hom = verify_homotopy(A, b, 15, 100 + p, Exec::Serial);
            INFO(h << " p=" << p << "\n" << hom.to_string());
            CHECK(hom.passed());
            auto ch = verify_chain(A, b, 15, 200 + p, Exec::Serial);
            CHECK(ch.passed());
        }
}

TEST_CASE("parallel harness agrees with the serial reference") {
    auto A = alg("x^2*(x-1)");
    Bounds b;
    auto s = verify_homotopy(A, b, 20, 7, Exec::Serial);
    auto p = verify_homotopy(A, b, 20, 7, Exec::Parallel);
    CHECK(s.identities == p.identities);
}

TEST_CASE("a broken identity is reported") {
    auto A = alg("x");
    auto res = run_trials("always fails", 5, 1, Exec::Parallel, [](Rng&) { return std::optional<std::string>("no"); });
    CHECK(res.failures == 5);
    CHECK(res.first_failure == "no");
}

TEST_CASE("s1 closed form equals the recursion") {
    for (const char* h : kH)
        for (unsigned p : {0u, 3u}) CHECK(verify_s1_closed_form(alg(h, testgen::field_of(p)), 6).passed());
}

TEST_CASE("structural identities of s0, s1 and G (property)") {
    testgen::Rng r(31);
    for (const char* h : {"x", "x^2", "x^2*(x-1)", "x^2+1"}) {
        auto A = alg(h);
        Resolution R(A);
        auto I = one(A), Y = OreElement::yhat(A);
        for (int k = 0; k < 12; ++k) {
            auto a = testgen::ore(r, A, 4, 3), b = testgen::ore(r, A, 4, 3);
            Poly f = testgen::poly(r, Q, 3), g = testgen::poly(r, Q, 3);
            TensorAA ab = TensorAA::make(a, NoMid{}, b);
            // s1 s0 = 0
            CHECK(R.s1(R.s0(ab)).is_zero());
            // s1 is left F[x]-linear
            auto t = TensorV::make(a, Gen::X, b) + TensorV::make(b, Gen::YHat, a);
            CHECK(R.s1(t.left_mul(poly(A, g))) == R.s1(t).left_mul(poly(A, g)));
            // s1(yh s0(a (x) b)) = G(a) b
            CHECK(R.s1(R.s0(ab).left_mul(Y)) == R.G(a).right_mul(b));
            // s0(f a (x) b) = f s0(a (x) b) + s0(f (x) a b)
            CHECK(R.s0(TensorAA::make(poly(A, f) * a, NoMid{}, b)) ==
                  R.s0(ab).left_mul(poly(A, f)) + R.s0(TensorAA::make(poly(A, f), NoMid{}, a * b)));
            // G is a derivation on F[x]
            CHECK(R.G(poly(A, f * g)) == R.G(poly(A, f)).right_mul(poly(A, g)) + R.G(poly(A, g)).left_mul(poly(A, f)));
            // d1 G(f) = 1(x)yh(x)f - f(x)yh(x)1 - s0(f(x)yh) - s0(delta(f)(x)1) + yh s0(f(x)1)
            auto F = poly(A, f);
            TensorV rhs = TensorV::make(I, Gen::YHat, F) - TensorV::make(F, Gen::YHat, I) -
                          R.s0(TensorAA::make(F, NoMid{}, Y)) -
                          R.s0(TensorAA::make(poly(A, delta(f, A->h())), NoMid{}, I)) +
                          R.s0(TensorAA::make(F, NoMid{}, I)).left_mul(Y);
            CHECK(R.d1(R.G(F)) == rhs);
            // s1(yh^{l+1} s0(f (x) 1)) = yh s1(yh^l s0(f (x) 1)) + sum_j C(l,j) G(delta^j(f)) yh^{l-j}
            auto sf = R.s0(TensorAA::make(F, NoMid{}, I));
            for (unsigned l = 0; l <= 3; ++l) {
                auto lhs = R.s1(sf.left_mul(pow(Y, l + 1)));
                auto acc = R.s1(sf.left_mul(pow(Y, l))).left_mul(Y);
                for (unsigned j = 0; j <= l; ++j)
                    acc.add_scaled(R.G(poly(A, delta(f, A->h(), j)) * pow(Y, l - j)), binomial(Q, l, j));
                CHECK(lhs == acc);
            }
        }
    }
}

TEST_CASE("lifting a derivation commutes with the differentials") {
    testgen::Rng r(77);
    for (const char* h : {"x^2", "x^3", "x^2*(x-1)"}) {
        auto A = alg(h);
        Resolution R(A);
        auto X = OreElement::x(A), Y = OreElement::yhat(A);
        // D_g : x -> 0, yh -> g, and an inner derivation ad_c
        for (int k = 0; k < 4; ++k) {
            auto g = poly(A, testgen::poly(r, Q, 3));
            auto c = testgen::ore(r, A, 3, 2);
            for (const auto& D : {Derivation::make(OreElement(A), g),
                                  Derivation::make(commutator(c, X), commutator(c, Y))}) {
                TensorR unit(A);
                unit.add({0, 0}, RelMid{}, {0, 0}, Scalar(Q, 1));
                CHECK(R.d1(R.lift2_element(D)) == R.lift1(D, R.d1(unit)));
                auto t = testgen::ore(r, A, 3, 2);
                auto tv = TensorV::make(t, Gen::X, X * t);
                auto d0t = R.d0(tv);
                TensorAA D0(A);
                for (const auto& [key, co] : d0t.terms()) {
                    auto U = OreElement::monomial(A, std::get<0>(key), co);
                    auto W = OreElement::monomial(A, std::get<2>(key), Scalar(Q, 1));
                    D0 += TensorAA::make(apply_derivation(D, U), NoMid{}, W) +
                          TensorAA::make(U, NoMid{}, apply_derivation(D, W));
                }
                CHECK(R.d0(R.lift1(D, tv)) == D0);
            }
        }
    }
}
