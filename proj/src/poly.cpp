#include "ahh/poly.hpp"

namespace ahh {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : f_(f), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!(c.field() == f_)) throw DomainError("coefficient field mismatch");
    trim();
}

Poly Poly::constant(const Scalar& c) {
    Poly p(c.field());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Poly Poly::monomial(const Scalar& c, unsigned deg) {
    Poly p(c.field());
    if (c.is_zero()) return p;
    p.c_.assign(deg + 1, Scalar(c.field()));
    p.c_[deg] = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check(const Poly& o) const {
    if (!(f_ == o.f_)) throw DomainError("polynomials over different fields");
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(f_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(f_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.f_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar(a.f_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
    if (!(s.field() == f_)) throw DomainError("scalar field mismatch");
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly Poly::shifted(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    Poly r(f_);
    r.c_.assign(k, Scalar(f_));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Scalar Poly::evaluate(const Scalar& t) const {
    Scalar acc(f_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Scalar& c = c_[i];
        if (c.is_zero()) continue;
        bool neg = f_.is_rational() && c.sign() < 0;
        Scalar a = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        if (mono.empty())
            out += a.to_string();
        else if (a.is_one())
            out += mono;
        else
            out += a.to_string() + "*" + mono;
    }
    return out;
}

Poly derivative(const Poly& f, unsigned k) {
    Poly r = f;
    for (unsigned step = 0; step < k; ++step) {
        if (r.degree() <= 0) return Poly(f.field());
        std::vector<Scalar> c;
        c.reserve(r.degree());
        for (int i = 1; i <= r.degree(); ++i) c.push_back(r.coeff(i) * Scalar(f.field(), i));
        r = Poly(f.field(), std::move(c));
    }
    return r;
}

Poly pow(const Poly& f, unsigned e) {
    Poly r = Poly::constant(f.field(), 1);
    Poly b = f;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DomainError("polynomial division by zero");
    Field fd = f.field();
    if (!(fd == g.field())) throw DomainError("polynomials over different fields");
    if (f.degree() < g.degree()) return {Poly(fd), f};
    std::vector<Scalar> r = f.coeffs();
    std::vector<Scalar> q(f.degree() - g.degree() + 1, Scalar(fd));
    Scalar inv = g.lead().inverse();
    int dg = g.degree();
    for (int i = f.degree(); i >= dg; --i) {
        if (r[i].is_zero()) continue;
        Scalar t = r[i] * inv;
        q[i - dg] = t;
        for (int j = 0; j <= dg; ++j) r[i - dg + j] -= t * g.coeff(j);
    }
    r.resize(dg);
    return {Poly(fd, std::move(q)), Poly(fd, std::move(r))};
}

Poly rem(const Poly& f, const Poly& g) { return divrem(f, g).second; }

bool divides(const Poly& g, const Poly& f) {
    if (g.is_zero()) return f.is_zero();
    return rem(f, g).is_zero();
}

Poly exact_div(const Poly& f, const Poly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw DomainError("(" + g.to_string() + ") does not divide (" + f.to_string() + ")");
    return q;
}

Poly gcd(const Poly& f, const Poly& g) {
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const Poly& f, const Poly& g) {
    Field fd = f.field();
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::constant(fd, 1), s1(fd);
    Poly t0(fd), t1 = Poly::constant(fd, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar inv = r0.lead().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Poly inverse_mod(const Poly& f, const Poly& m) {
    auto e = extended_gcd(rem(f, m), m);
    if (!e.d.is_one()) throw DomainError("(" + f.to_string() + ") is not invertible modulo (" + m.to_string() + ")");
    return rem(e.s, m);
}

std::vector<Poly> slice_by_residue(const Poly& f, unsigned p) {
    Field fd = f.field();
    std::vector<std::vector<Scalar>> parts(p);
    for (int i = 0; i <= f.degree(); ++i) {
        auto& part = parts[i % p];
        std::size_t q = i / p;
        if (part.size() <= q) part.resize(q + 1, Scalar(fd));
        part[q] = f.coeff(i);
    }
    std::vector<Poly> out;
    out.reserve(p);
    for (auto& part : parts) out.emplace_back(fd, std::move(part));
    return out;
}

Poly unslice(const std::vector<Poly>& parts, unsigned p) {
    if (parts.empty()) return Poly();
    Field fd = parts.front().field();
    Poly out(fd);
    for (unsigned r = 0; r < parts.size(); ++r) out += compose_power(parts[r], p).shifted(r);
    return out;
}

Poly compose_power(const Poly& g, unsigned p) {
    Field fd = g.field();
    if (g.is_zero()) return Poly(fd);
    std::vector<Scalar> c(g.degree() * p + 1, Scalar(fd));
    for (int i = 0; i <= g.degree(); ++i) c[i * p] = g.coeff(i);
    return Poly(fd, std::move(c));
}

}  // namespace ahh
