#pragma once

#include "ahh/factored.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string_view>

namespace ahh {

// x^x yhat^y
struct Mono {
    unsigned x = 0, y = 0;
    auto operator<=>(const Mono&) const = default;
};

struct MonoTerm {
    Mono m;
    Scalar c;
};

// delta(f) = f' h, iterated k times.
Poly delta(const Poly& f, const Poly& h, unsigned k = 1);

// The algebra A_h = F<x, yh> / (yh x - x yh - h). Shared by every element built over it.
class OreAlgebra {
public:
    static std::shared_ptr<const OreAlgebra> create(const Poly& h);

    Field field() const { return h_.field(); }
    const Poly& h() const { return h_; }
    bool same_as(const OreAlgebra& o) const { return this == &o || h_ == o.h_; }

    // yh^b x^c in normal form, cached.
    std::shared_ptr<const std::vector<MonoTerm>> yx(unsigned b, unsigned c) const;
    // (x^a.x yh^a.y)(x^b.x yh^b.y), appended to out scaled by s.
    void mono_mul(Mono a, Mono b, const Scalar& s, std::vector<MonoTerm>& out) const;

private:
    explicit OreAlgebra(Poly h) : h_(std::move(h)) {}
    Poly h_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const std::vector<MonoTerm>>> yx_cache_;
};

using AlgebraPtr = std::shared_ptr<const OreAlgebra>;

// sum_j f_j(x) yh^j, coefficients on the left. No trailing zero coefficients.
class OreElement {
public:
    explicit OreElement(AlgebraPtr A) : A_(std::move(A)) {}
    OreElement(AlgebraPtr A, std::vector<Poly> coeffs);

    static OreElement constant(AlgebraPtr A, const Scalar& c);
    static OreElement from_poly(AlgebraPtr A, const Poly& f);
    static OreElement x(AlgebraPtr A);
    static OreElement yhat(AlgebraPtr A);
    static OreElement monomial(AlgebraPtr A, Mono m, const Scalar& c);
    static OreElement from_terms(AlgebraPtr A, const std::vector<MonoTerm>& terms);

    const AlgebraPtr& algebra() const { return A_; }
    Field field() const { return A_->field(); }
    bool is_zero() const { return c_.empty(); }
    int yhat_degree() const { return static_cast<int>(c_.size()) - 1; }
    int x_degree() const;
    Poly coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Poly(field()); }
    const std::vector<Poly>& coeffs() const { return c_; }
    std::vector<MonoTerm> terms() const;

    OreElement operator-() const;
    OreElement& operator+=(const OreElement& o);
    OreElement& operator-=(const OreElement& o);
    friend OreElement operator+(OreElement a, const OreElement& b) { return a += b; }
    friend OreElement operator-(OreElement a, const OreElement& b) { return a -= b; }
    friend OreElement operator*(const OreElement& a, const OreElement& b);
    friend OreElement operator*(OreElement a, const Scalar& s);
    friend OreElement operator*(const Poly& f, OreElement a);  // left multiplication by f(x)
    bool operator==(const OreElement& o) const;

    // "(2*x^2)*yh^1 + x^3"
    std::string to_string() const;

private:
    void check(const OreElement& o) const;
    void trim();
    AlgebraPtr A_;
    std::vector<Poly> c_;
};

OreElement commutator(const OreElement& a, const OreElement& b);
OreElement pow(const OreElement& a, unsigned e);

// F_alpha(f) = sum_s f_s sum_{l<s} x^l alpha x^{s-l-1}
OreElement F_alpha(const OreElement& alpha, const Poly& f);

// Weyl algebra A_1 = F<x, y>/(yx - xy - 1), elements sum_j f_j(x) y^j.
class WeylElement {
public:
    explicit WeylElement(Field f) : f_(f) {}
    WeylElement(Field f, std::vector<Poly> coeffs);

    static WeylElement constant(const Scalar& c);
    static WeylElement from_poly(const Poly& f);
    static WeylElement x(Field f);
    static WeylElement y(Field f);

    Field field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    int y_degree() const { return static_cast<int>(c_.size()) - 1; }
    Poly coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Poly(f_); }
    const std::vector<Poly>& coeffs() const { return c_; }

    WeylElement operator-() const;
    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator*(const Poly& f, WeylElement a);
    bool operator==(const WeylElement& o) const { return f_ == o.f_ && c_ == o.c_; }

    std::string to_string() const;

private:
    void trim();
    Field f_;
    std::vector<Poly> c_;
};

WeylElement commutator(const WeylElement& a, const WeylElement& b);
WeylElement pow(const WeylElement& a, unsigned e);

// Raised when a Weyl element is not in the image of A_h; `degree` is the y-degree j at which
// h^j failed to divide the remaining coefficient.
struct NotInSubalgebra : DomainError {
    unsigned degree;
    NotInSubalgebra(const std::string& msg, unsigned j) : DomainError(msg), degree(j) {}
};

// yh -> y h = h y + h'
WeylElement ore_to_weyl(const OreElement& a);
OreElement weyl_to_ore(const WeylElement& w, const AlgebraPtr& A);

// a = sum_j c_j(x) h^j y^j in A_1
struct HYBasisForm {
    AlgebraPtr A;
    std::vector<Poly> c;
};
HYBasisForm hy_basis(const OreElement& a);
OreElement from_hy_basis(const HYBasisForm& form);

OreElement parse_ore(std::string_view text, const AlgebraPtr& A);  // variables x, yh
WeylElement parse_weyl(std::string_view text, Field f);               // variables x, y

}  // namespace ahh
