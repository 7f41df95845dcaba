#pragma once

#include "ahh/scalar.hpp"

#include <utility>
#include <vector>

namespace ahh {

// Dense univariate polynomial in x. Coefficient i belongs to x^i; no trailing zeros.
class Poly {
public:
    Poly() = default;  // zero over Q
    explicit Poly(Field f) : f_(f) {}
    Poly(Field f, std::vector<Scalar> coeffs);

    static Poly constant(const Scalar& c);
    static Poly constant(Field f, long long c) { return constant(Scalar(f, c)); }
    static Poly monomial(const Scalar& c, unsigned deg);
    static Poly x(Field f) { return monomial(Scalar(f, 1), 1); }

    Field field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(f_); }
    Scalar lead() const { return c_.empty() ? Scalar(f_) : c_.back(); }
    const std::vector<Scalar>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Scalar& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }

    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }

    Poly shifted(unsigned k) const;  // x^k * this
    Scalar evaluate(const Scalar& t) const;
    Poly monic() const;  // zero stays zero

    std::string to_string() const;

private:
    void trim();
    void check(const Poly& o) const;

    Field f_;
    std::vector<Scalar> c_;
};

Poly derivative(const Poly& f, unsigned k = 1);
Poly pow(const Poly& f, unsigned e);

// Quotient and remainder; g must be nonzero.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
Poly rem(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);
// f / g, throws DomainError when g does not divide f.
Poly exact_div(const Poly& f, const Poly& g);

// Always monic; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);

struct ExtendedGcd {
    Poly d, s, t;  // s f + t g = d, d monic
};
ExtendedGcd extended_gcd(const Poly& f, const Poly& g);

// Inverse of f modulo m, throws when they are not coprime.
Poly inverse_mod(const Poly& f, const Poly& m);

// f(x) = sum_r x^r f_r(x^p); returns the f_r as polynomials in t = x^p.
std::vector<Poly> slice_by_residue(const Poly& f, unsigned p);
// Inverse of slice_by_residue.
Poly unslice(const std::vector<Poly>& parts, unsigned p);
// g(t) -> g(x^p)
Poly compose_power(const Poly& g, unsigned p);

}  // namespace ahh
