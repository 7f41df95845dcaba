#include "ahh/factored.hpp"

#include <algorithm>

namespace ahh {

namespace {

bool has_root(const Poly& f) { return !roots(f).empty(); }

std::string factor_text(const Factor& fc) {
    std::string base = fc.u.to_string();
    bool atom = fc.u.degree() == 1 && fc.u.coeff(0).is_zero();
    if (!atom) base = "(" + base + ")";
    return fc.alpha == 1 ? base : base + "^" + std::to_string(fc.alpha);
}

}  // namespace

FactoredPoly FactoredPoly::make(const Scalar& unit, std::vector<Factor> factors, bool irreducible) {
    if (unit.is_zero()) throw DomainError("factored polynomial with zero unit");
    Field f = unit.field();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& fc = factors[i];
        if (!(fc.u.field() == f)) throw DomainError("factor over a different field");
        if (fc.u.degree() < 1) throw DomainError("factor " + fc.u.to_string() + " is constant");
        if (!fc.u.lead().is_one()) throw DomainError("factor " + fc.u.to_string() + " is not monic");
        if (fc.alpha == 0) throw DomainError("factor multiplicity must be positive");
        for (std::size_t j = 0; j < i; ++j)
            if (!gcd(fc.u, factors[j].u).is_one())
                throw DomainError("factors " + factors[j].u.to_string() + " and " + fc.u.to_string() +
                                  " are not coprime");
        if (irreducible && (fc.u.degree() == 2 || fc.u.degree() == 3) && has_root(fc.u))
            throw DomainError("factor " + fc.u.to_string() + " has a root, so it is not irreducible");
        if (irreducible && !gcd(fc.u, derivative(fc.u)).is_one())
            throw DomainError("factor " + fc.u.to_string() + " is not squarefree");
    }
    FactoredPoly r;
    r.unit_ = unit;
    r.factors_ = std::move(factors);
    r.irreducible_ = irreducible;
    return r;
}

Poly FactoredPoly::expand() const {
    Poly r = Poly::constant(unit_);
    for (const auto& fc : factors_) r *= pow(fc.u, fc.alpha);
    return r;
}

unsigned FactoredPoly::max_multiplicity() const {
    unsigned m = 0;
    for (const auto& fc : factors_) m = std::max(m, fc.alpha);
    return m;
}

std::string FactoredPoly::to_string() const {
    std::string out;
    if (!unit_.is_one()) out = unit_.to_string();
    for (const auto& fc : factors_) {
        if (!out.empty()) out += ",";
        out += factor_text(fc);
    }
    return out.empty() ? "1" : out;
}

Residue::Residue(Poly rep, Poly modulus) : mod_(std::move(modulus)) {
    if (mod_.is_zero() || !mod_.lead().is_one()) throw DomainError("residue modulus must be monic");
    rep_ = rem(rep, mod_);
}

void Residue::check(const Residue& o) const {
    if (!(mod_ == o.mod_)) throw DomainError("residues with different moduli");
}

Residue Residue::operator+(const Residue& o) const {
    check(o);
    return Residue(rep_ + o.rep_, mod_);
}

Residue Residue::operator-(const Residue& o) const {
    check(o);
    return Residue(rep_ - o.rep_, mod_);
}

Residue Residue::operator*(const Residue& o) const {
    check(o);
    return Residue(rep_ * o.rep_, mod_);
}

Residue Residue::inverse() const { return Residue(inverse_mod(rep_, mod_), mod_); }

FactoredPoly squarefree_decomposition(const Poly& h) {
    if (!h.field().is_rational()) throw DomainError("squarefree decomposition is implemented for characteristic 0 only");
    if (h.is_zero()) throw DomainError("squarefree decomposition of 0");
    Field f = h.field();
    Scalar unit = h.lead();
    Poly m = h.monic();
    std::vector<Factor> out;
    if (m.degree() == 0) return FactoredPoly::make(unit, out, false);
    Poly dm = derivative(m);
    Poly a = gcd(m, dm);
    Poly b = exact_div(m, a);
    Poly c = exact_div(dm, a);
    Poly d = c - derivative(b);
    unsigned i = 1;
    while (b.degree() > 0) {
        Poly ai = gcd(b, d);
        Poly nb = exact_div(b, ai);
        Poly nc = exact_div(d, ai);
        if (ai.degree() > 0) out.push_back({ai, i});
        b = std::move(nb);
        d = nc - derivative(b);
        ++i;
    }
    (void)f;
    return FactoredPoly::make(unit, std::move(out), false);
}

Poly pi_of(const Poly& h) { return exact_div(h, gcd(h, derivative(h))).monic(); }

Poly theta(const Poly& h, unsigned i) {
    Field f = h.field();
    Poly result = Poly::constant(f, 1);
    Poly d = gcd(h, derivative(h));
    for (unsigned m = 1; m <= i && d.degree() > 0; ++m) {
        Poly next = gcd(d, derivative(d));
        result *= exact_div(d, next);
        d = std::move(next);
    }
    return result.monic();
}

Poly theta(const FactoredPoly& h, unsigned i) {
    Poly result = Poly::constant(h.field(), 1);
    for (const auto& fc : h.factors()) result *= pow(fc.u, std::min(fc.alpha - 1, i));
    return result;
}

std::vector<Poly> crt_idempotents(const std::vector<Poly>& moduli) {
    if (moduli.empty()) return {};
    Field f = moduli.front().field();
    Poly big = Poly::constant(f, 1);
    for (const auto& m : moduli) big *= m;
    big = big.monic();
    std::vector<Poly> out;
    for (const auto& m : moduli) {
        Poly cof = exact_div(big, m.monic());
        Poly inv = inverse_mod(cof, m.monic());
        out.push_back(rem(cof * inv, big));
    }
    return out;
}

Poly rho(const FactoredPoly& h) {
    Field f = h.field();
    if (f.is_rational()) throw DomainError("rho_h is defined over a prime field only");
    unsigned p = static_cast<unsigned>(f.characteristic());
    Poly e = Poly::constant(f, 1);
    for (const auto& fc : h.factors()) e *= pow(fc.u, fc.alpha / p);
    return pow(e, p);
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

const mpz_class kDivisorSearchLimit("1000000000000");

}  // namespace

std::vector<Scalar> roots(const Poly& fin) {
    Field f = fin.field();
    std::vector<Scalar> out;
    if (fin.degree() < 1) return out;
    Poly g = fin;
    if (g.coeff(0).is_zero()) {
        out.push_back(Scalar(f));
        while (!g.is_zero() && g.coeff(0).is_zero()) g = exact_div(g, Poly::x(f));
    }
    if (g.degree() < 1) return out;
    if (!f.is_rational()) {
        std::uint64_t p = f.characteristic();
        if (p > 2000000) throw DomainError("root search in F_p needs p <= 2000000");
        for (std::uint64_t r = 1; r < p; ++r) {
            Scalar s(f, static_cast<long long>(r));
            if (g.evaluate(s).is_zero()) out.push_back(s);
        }
        return out;
    }
    mpz_class l = 1;
    for (const auto& c : g.coeffs()) {
        mpz_class den = c.to_mpq().get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    mpz_class a0 = mpq_class(g.coeff(0).to_mpq() * l).get_num();
    mpz_class an = mpq_class(g.lead().to_mpq() * l).get_num();
    if (abs(a0) > kDivisorSearchLimit || abs(an) > kDivisorSearchLimit)
        throw DomainError("coefficients too large for rational root search");
    auto num = divisors(a0), den = divisors(an);
    std::vector<mpq_class> seen;
    for (const auto& a : num)
        for (const auto& b : den)
            for (int sgn : {1, -1}) {
                mpq_class q(a * sgn, b);
                q.canonicalize();
                if (std::find(seen.begin(), seen.end(), q) != seen.end()) continue;
                seen.push_back(q);
                Scalar s(f, q);
                if (g.evaluate(s).is_zero()) out.push_back(s);
            }
    return out;
}

AnalysedFactorisation factor_for_analysis(const Poly& h) {
    Field f = h.field();
    if (h.is_zero()) throw DomainError("cannot factor 0");
    Scalar unit = h.lead();
    std::vector<Factor> out;
    bool certified = true;
    auto split = [&](Poly part, unsigned alpha) {
        for (const auto& r : roots(part)) {
            Poly lin(f, {-r, Scalar(f, 1)});
            unsigned k = 0;
            while (part.degree() > 0 && divides(lin, part)) {
                part = exact_div(part, lin);
                ++k;
            }
            out.push_back({lin, alpha * k});
        }
        return part.monic();
    };
    if (f.is_rational()) {
        auto sq = squarefree_decomposition(h);
        for (const auto& fc : sq.factors()) {
            Poly rest = split(fc.u, fc.alpha);
            if (rest.degree() > 0) {
                if (rest.degree() >= 4) certified = false;
                out.push_back({rest, fc.alpha});
            }
        }
    } else {
        Poly rest = split(h.monic(), 1);
        if (rest.degree() > 0) {
            if (!gcd(rest, derivative(rest)).is_one())
                throw DomainError("cannot factor " + h.to_string() + " over " + f.to_string() +
                                  "; supply an explicit factorisation");
            if (rest.degree() >= 4) certified = false;
            out.push_back({rest, 1});
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (a.u.degree() != b.u.degree()) return a.u.degree() < b.u.degree();
        return a.u.to_string() < b.u.to_string();
    });
    return {FactoredPoly::make(unit, std::move(out), certified), certified};
}

}  // namespace ahh
