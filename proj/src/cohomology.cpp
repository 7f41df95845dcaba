#include "ahh/cohomology.hpp"

#include "ahh/factored.hpp"

namespace ahh {

namespace {

std::map<std::pair<int, Mono>, Scalar> stack_pair(const OreElement& a, const OreElement& b) {
    std::map<std::pair<int, Mono>, Scalar> out;
    for (const auto& t : a.terms()) out.emplace(std::make_pair(0, t.m), t.c);
    for (const auto& t : b.terms()) out.emplace(std::make_pair(1, t.m), t.c);
    return out;
}

std::map<Mono, Scalar> as_map(const OreElement& a) {
    std::map<Mono, Scalar> out;
    for (const auto& t : a.terms()) out.emplace(t.m, t.c);
    return out;
}

Poly gcd_part(const Poly& h) { return gcd(h, derivative(h)); }

void require_char0(const AlgebraPtr& A, const char* what) {
    if (!A->field().is_rational()) throw DomainError(std::string(what) + " is implemented for characteristic 0");
}

}  // namespace

std::pair<OreElement, OreElement> cochain_d1(const OreElement& alpha) {
    const auto& A = alpha.algebra();
    return {commutator(OreElement::x(A), alpha), commutator(OreElement::yhat(A), alpha)};
}

bool is_derivation(const OreElement& dx, const OreElement& dyhat) { return cochain_d2(dx, dyhat).is_zero(); }

Derivation D_g(const AlgebraPtr& A, const Poly& g) {
    return Derivation::make(OreElement(A), OreElement::from_poly(A, g));
}

Poly pi_hprime_over_h(const Poly& h) { return exact_div(pi_of(h) * derivative(h), h); }

Poly delta0(const Poly& g, const Poly& h) { return derivative(g * pi_of(h)) - g * pi_hprime_over_h(h); }

Derivation ad_gan(const AlgebraPtr& A, const Poly& g, unsigned n) {
    const Poly& h = A->h();
    Field f = A->field();
    if (n == 0) return D_g(A, -delta0(g, h));
    std::vector<Poly> c(n + 1, Poly(f));
    c[n] = g * pi_of(h) * pow(h, n - 1);
    WeylElement u(f, std::move(c));
    WeylElement yh = ore_to_weyl(OreElement::yhat(A));
    OreElement dx = weyl_to_ore(commutator(u, WeylElement::x(f)), A);
    OreElement dy = weyl_to_ore(commutator(u, yh), A);
    return Derivation::make(std::move(dx), std::move(dy));
}

std::optional<OreElement> is_inner(const Derivation& D, unsigned bound) {
    const auto& A = D.algebra();
    Field f = A->field();
    ColumnAssembler<std::pair<int, Mono>> asm_(f);
    std::vector<Mono> unknowns;
    OreElement X = OreElement::x(A), Y = OreElement::yhat(A);
    for (unsigned i = 0; i <= bound; ++i)
        for (unsigned j = 0; j <= bound; ++j) {
            OreElement m = OreElement::monomial(A, {i, j}, Scalar(f, 1));
            asm_.add_column(stack_pair(commutator(m, X), commutator(m, Y)));
            unknowns.push_back({i, j});
        }
    auto rhs = asm_.vector_for(stack_pair(D.dx(), D.dyhat()));
    Matrix m = asm_.matrix();
    rhs.resize(m.rows, Scalar(f));
    auto sol = solve_many(m, {rhs});
    if (!sol[0]) return std::nullopt;
    std::vector<MonoTerm> terms;
    for (std::size_t k = 0; k < unknowns.size(); ++k)
        if (!(*sol[0])[k].is_zero()) terms.push_back({unknowns[k], (*sol[0])[k]});
    return OreElement::from_terms(A, terms);
}

HH0Report hh0(const AlgebraPtr& A) {
    HH0Report r;
    Field f = A->field();
    if (f.is_rational()) return r;
    unsigned p = static_cast<unsigned>(f.characteristic());
    r.trivial = false;
    r.generators.push_back(WeylElement::from_poly(Poly::monomial(Scalar(f, 1), p)).to_string());
    std::vector<Poly> c(p + 1, Poly(f));
    c[p] = pow(A->h(), p);
    r.generators.push_back(WeylElement(f, std::move(c)).to_string());
    return r;
}

HH1Report hh1_char0(const AlgebraPtr& A, const FactoredPoly& fh) {
    require_char0(A, "HH^1");
    const Poly& h = A->h();
    if (!(fh.expand() == h)) throw DomainError("factorisation does not multiply out to h");
    HH1Report r;
    r.gcd_part = gcd_part(h);
    r.pi = pi_of(h);
    for (int i = 0; i < r.pi.degree(); ++i) r.center_basis.push_back(r.gcd_part.shifted(i));
    r.witt_copies = static_cast<unsigned>(std::max(r.gcd_part.degree(), 0));
    r.nilradical_modulus = theta(h, 1);
    for (const auto& fc : fh.factors())
        if (fc.alpha >= 2) r.semisimple_factors.push_back(fc);
    r.factorisation_certified = fh.irreducible();
    return r;
}

HH1Report hh1_char0(const AlgebraPtr& A) {
    require_char0(A, "HH^1");
    auto a = factor_for_analysis(A->h());
    return hh1_char0(A, a.factored);
}

HH2Class::HH2Class(Poly modulus, std::vector<Poly> coeffs) : mod_(modulus.monic()) {
    if (mod_.is_zero()) throw DomainError("HH^2 modulus must be nonzero");
    for (auto& c : coeffs) c_.push_back(rem(c, mod_));
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OreElement HH2Class::lift(const AlgebraPtr& A) const { return OreElement(A, c_); }

HH2Class HH2Class::operator+(const HH2Class& o) const {
    if (!(mod_ == o.mod_)) throw DomainError("HH^2 classes with different moduli");
    std::vector<Poly> c(std::max(c_.size(), o.c_.size()), Poly(mod_.field()));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = coeff(j) + o.coeff(j);
    return HH2Class(mod_, std::move(c));
}

HH2Class HH2Class::operator-(const HH2Class& o) const { return *this + o * Scalar(mod_.field(), -1); }

HH2Class HH2Class::operator*(const Scalar& s) const {
    std::vector<Poly> c = c_;
    for (auto& p : c) p *= s;
    return HH2Class(mod_, std::move(c));
}

std::string HH2Class::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int j = static_cast<int>(c_.size()) - 1; j >= 0; --j) {
        if (c_[j].is_zero()) continue;
        std::string piece = j == 0 ? c_[j].to_string()
                                   : (c_[j].is_one() ? "yh^" + std::to_string(j)
                                                     : "(" + c_[j].to_string() + ")*yh^" + std::to_string(j));
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out;
}

HH2Char0 hh2_char0(const AlgebraPtr& A) {
    require_char0(A, "HH^2 = D[yh]");
    Poly g = gcd_part(A->h());
    return {g, g.degree() == 0};
}

HH2Class project_hh2(const OreElement& a) {
    require_char0(a.algebra(), "projection to D[yh]");
    Poly g = gcd_part(a.algebra()->h());
    if (g.degree() == 0) throw DomainError("HH^2 vanishes for separable h");
    return HH2Class(g, a.coeffs());
}

HH1Element::HH1Element(AlgebraPtr A, Poly dpart, std::map<unsigned, Poly> adparts)
    : A_(std::move(A)), d_(rem(dpart, A_->h())) {
    require_char0(A_, "HH^1");
    Poly g = gcd_part(A_->h());
    for (auto& [n, c] : adparts) {
        Poly r = rem(c, g);
        if (n == 0) {
            // ad(g a_0) = -D_{delta_0(g)}
            d_ = rem(d_ - delta0(r, A_->h()), A_->h());
        } else if (!r.is_zero()) {
            ad_[n] = r;
        }
    }
}

Derivation HH1Element::representative() const {
    Derivation D = D_g(A_, d_);
    for (const auto& [n, c] : ad_) D = D + ad_gan(A_, c, n);
    return D;
}

HH1Element HH1Element::operator+(const HH1Element& o) const {
    auto ad = ad_;
    for (const auto& [n, c] : o.ad_) {
        auto [it, fresh] = ad.try_emplace(n, c);
        if (!fresh) it->second += c;
    }
    return HH1Element(A_, d_ + o.d_, std::move(ad));
}

std::string HH1Element::to_string() const {
    std::string out;
    if (!d_.is_zero()) out = "D[" + d_.to_string() + "]";
    for (const auto& [n, c] : ad_) out += std::string(out.empty() ? "" : " + ") + "ad[(" + c.to_string() + ") a_" + std::to_string(n) + "]";
    return out.empty() ? "0" : out;
}

std::vector<std::optional<std::pair<OreElement, OreElement>>> rd2_preimages(const AlgebraPtr& A,
                                                                          const std::vector<OreElement>& targets,
                                                                          unsigned cap_x, unsigned cap_y) {
    Field f = A->field();
    ColumnAssembler<Mono> asm_(f);
    std::vector<std::pair<int, Mono>> unknowns;
    OreElement zero(A);
    for (int which = 0; which < 2; ++which)
        for (unsigned i = 0; i <= cap_x; ++i)
            for (unsigned j = 0; j <= cap_y; ++j) {
                OreElement m = OreElement::monomial(A, {i, j}, Scalar(f, 1));
                asm_.add_column(as_map(which == 0 ? cochain_d2(m, zero) : cochain_d2(zero, m)));
                unknowns.push_back({which, {i, j}});
            }
    std::vector<std::vector<Scalar>> rhs;
    for (const auto& t : targets) rhs.push_back(asm_.vector_for(as_map(t)));
    Matrix m = asm_.matrix();
    for (auto& v : rhs) v.resize(m.rows, Scalar(f));
    auto sols = solve_many(m, rhs);
    std::vector<std::optional<std::pair<OreElement, OreElement>>> out;
    for (const auto& s : sols) {
        if (!s) {
            out.emplace_back(std::nullopt);
            continue;
        }
        std::vector<MonoTerm> ta, tb;
        for (std::size_t k = 0; k < unknowns.size(); ++k) {
            if ((*s)[k].is_zero()) continue;
            (unknowns[k].first == 0 ? ta : tb).push_back({unknowns[k].second, (*s)[k]});
        }
        out.emplace_back(std::make_pair(OreElement::from_terms(A, ta), OreElement::from_terms(A, tb)));
    }
    return out;
}

Poly kappa(const Poly& g, const Poly& h) { return derivative(g) * h - derivative(h) * g; }

KappaKernelCheck kappa_kernel_check(const FactoredPoly& fh, unsigned bound) {
    Field f = fh.field();
    if (f.is_rational()) throw DomainError("kappa kernel check is for characteristic p");
    unsigned p = static_cast<unsigned>(f.characteristic());
    Poly h = fh.expand();
    KappaKernelCheck r;
    r.generator = exact_div(h, rho(fh));
    ColumnAssembler<unsigned> asm_(f);
    for (unsigned i = 0; i <= bound; ++i) {
        Poly k = kappa(Poly::monomial(Scalar(f, 1), i), h);
        std::map<unsigned, Scalar> col;
        for (int d = 0; d <= k.degree(); ++d)
            if (!k.coeff(d).is_zero()) col.emplace(d, k.coeff(d));
        asm_.add_column(col);
    }
    r.brute_dimension = nullspace(asm_.matrix()).size();
    bool all_in_kernel = true;
    for (unsigned s = 0; static_cast<int>(s * p) + r.generator.degree() <= static_cast<int>(bound); ++s) {
        ++r.predicted_dimension;
        if (!kappa(r.generator.shifted(s * p), h).is_zero()) all_in_kernel = false;
    }
    r.equal = all_in_kernel && r.brute_dimension == r.predicted_dimension;
    return r;
}

WeylElement CharPHH2Report::top_monomial(unsigned slot, const Poly& h) const {
    Field f = h.field();
    std::vector<Poly> c(p, Poly(f));
    c[p - 1] = Poly::monomial(Scalar(f, 1), slot) * pow(h, p - 1);
    return WeylElement(f, std::move(c));
}

CharPHH2Report hh2_charp(const AlgebraPtr& A, const std::optional<FactoredPoly>& factored) {
    Field f = A->field();
    if (f.is_rational()) throw DomainError("characteristic-p HH^2 requested over Q");
    unsigned p = static_cast<unsigned>(f.characteristic());
    const Poly& h = A->h();
    CharPHH2Report r;
    r.p = p;
    r.gcd_part = gcd_part(h);
    if (r.gcd_part.degree() > 0)
        for (unsigned j = 0; j + 2 <= p; ++j) {
            std::vector<Poly> c(j + 1, Poly(f));
            c[j] = pow(h, j);
            r.torsion_generators.emplace_back(f, std::move(c));
        }

    std::vector<PolyColumn> cols;
    for (unsigned i = 0; i < p; ++i) cols.push_back(slice_by_residue(kappa(Poly::monomial(Scalar(f, 1), i), h), p));
    auto ech = column_echelon(cols, p);
    r.K_rank = static_cast<unsigned>(ech.basis.size());
    for (const auto& col : ech.basis) r.K_basis.push_back(unslice(col, p));

    if (r.K_rank + 1 == p) {
        // maximal minors: delete one row
        std::vector<Poly> cof(p, Poly(f));
        Poly g(f);
        for (unsigned del = 0; del < p; ++del) {
            std::vector<PolyColumn> sub;
            for (const auto& col : ech.basis) {
                PolyColumn c;
                for (unsigned i = 0; i < p; ++i)
                    if (i != del) c.push_back(col[i]);
                sub.push_back(std::move(c));
            }
            Poly minor = sub.empty() ? Poly::constant(f, 1) : poly_det(sub);
            cof[del] = ((del + p - 1) % 2 == 0) ? minor : -minor;
            g = gcd(g, minor);
        }
        r.K_summand = g.is_one();
        if (r.K_summand) {
            PolyColumn xi(p, Poly(f));
            bool found = false;
            for (unsigned i = 0; i < p && !found; ++i)
                if (cof[i].degree() == 0) {
                    xi[i] = Poly::constant(f, 1);
                    found = true;
                }
            if (!found) {
                Poly acc(f);
                std::vector<Poly> coef(p, Poly(f));
                for (unsigned i = 0; i < p; ++i) {
                    auto e = extended_gcd(acc, cof[i]);
                    for (auto& c : coef) c *= e.s;
                    coef[i] = e.t;
                    acc = e.d;
                }
                xi = coef;
            }
            std::vector<PolyColumn> full = ech.basis;
            full.push_back(xi);
            Poly d = poly_det(full);
            if (d.degree() != 0) throw DomainError("internal: complement of K is not certified");
            r.xi = unslice(xi, p);
        }
        r.diagonal = true;
        for (const auto& col : ech.basis) {
            int nz = 0;
            for (const auto& e : col) nz += !e.is_zero();
            if (nz != 1) r.diagonal = false;
        }
        if (r.diagonal) {
            std::vector<bool> seen(p, false);
            for (std::size_t k = 0; k < ech.basis.size(); ++k) {
                unsigned slot = static_cast<unsigned>(ech.pivot_rows[k]);
                seen[slot] = true;
                const Poly& c = ech.basis[k][slot];
                if (c.degree() > 0) r.top_summands.push_back({slot, c});
            }
            for (unsigned i = 0; i < p; ++i)
                if (!seen[i]) r.top_summands.push_back({i, Poly(f)});
        }
    }
    if (factored) r.rho = rho(*factored);
    r.free = r.gcd_part.degree() == 0 && r.K_summand && r.xi.has_value();
    r.rank = r.free ? 1 : 0;
    return r;
}

Freeness hh2_freeness(const AlgebraPtr& A) {
    auto r = hh2_charp(A);
    return {r.free, r.free ? r.xi : std::nullopt, r.rank};
}

}  // namespace ahh
