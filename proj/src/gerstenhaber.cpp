#include "ahh/gerstenhaber.hpp"

#include <algorithm>

namespace ahh {

namespace {

void require_char0(Field f, const char* what) {
    if (!f.is_rational()) throw DomainError(std::string(what) + " is implemented for characteristic 0");
}

Poly gcd_part(const Poly& h) { return gcd(h, derivative(h)); }

}  // namespace

HH2Class bracket_Dg(const Poly& g, const HH2Class& a) {
    Field f = g.field();
    std::vector<Poly> out;
    for (std::size_t j = 1; j < a.coeffs().size(); ++j) out.push_back(g * a.coeffs()[j] * Scalar(f, static_cast<long long>(j)));
    return HH2Class(a.modulus(), std::move(out));
}

HH2Class bracket_adgan(const Poly& h, const Poly& g, unsigned n, const HH2Class& a) {
    require_char0(h.field(), "the HH^1 action");
    Field f = h.field();
    Poly pi = pi_of(h), q = pi_hprime_over_h(h), d0 = delta0(g, h);
    Scalar nn(f, static_cast<long long>(n));
    std::vector<Poly> out(a.coeffs().size() + n, Poly(f));
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
        const Poly& c = a.coeffs()[j];
        if (n > 0) out[j + n - 1] += pi * g * derivative(c) * nn - g * q * c * nn;
        if (j > 0) out[j + n - 1] -= d0 * c * Scalar(f, static_cast<long long>(j));
    }
    return HH2Class(a.modulus(), std::move(out));
}

HH2Class bracket_closed(const HH1Element& h1, const HH2Class& a) {
    HH2Class out = bracket_Dg(h1.dpart(), a);
    for (const auto& [n, g] : h1.adparts()) out = out + bracket_adgan(h1.algebra()->h(), g, n, a);
    return out;
}

LiftedDerivation::LiftedDerivation(Derivation D) : D_(std::move(D)), d2_(D_.algebra()) {
    const auto& A = D_.algebra();
    require_char0(A->field(), "the HH^1 action");
    if (gcd_part(A->h()).degree() == 0) throw DomainError("HH^2 vanishes for separable h");
    Resolution R(A);
    d2_ = R.lift2_element(D_);
}

HH2Class LiftedDerivation::bracket(const OreElement& a) const {
    const auto& A = D_.algebra();
    OreElement chi(A);
    // group by the left factor so each product is taken once
    std::map<Mono, OreElement> right;
    for (const auto& [k, c] : d2_.terms()) {
        auto [it, fresh] = right.try_emplace(std::get<0>(k), A);
        it->second += OreElement::monomial(A, std::get<2>(k), c);
    }
    for (const auto& [l, r] : right) chi += OreElement::monomial(A, l, Scalar(A->field(), 1)) * a * r;
    return project_hh2(apply_derivation(D_, a) - chi);
}

HH2Class bracket_general(const Derivation& D, const OreElement& a) { return LiftedDerivation(D).bracket(a); }

WittElement WittElement::w(Field f, long long m, const Scalar& c) {
    WittElement e{f, {}};
    if (!c.is_zero()) e.terms.emplace(m, c);
    return e;
}

namespace {

void add_term(std::map<long long, Scalar>& t, long long k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

std::string index_text(const std::map<long long, Scalar>& t, const std::string& sym) {
    std::string out;
    for (const auto& [k, c] : t) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")" + sym + "_" + std::to_string(k);
    }
    return out;
}

}  // namespace

std::string WittElement::to_string() const {
    return terms.empty() ? "0" : index_text(terms, "w");
}

std::string VirasoroElement::to_string() const {
    std::string out = w.terms.empty() ? "" : index_text(w.terms, "w");
    if (!central.is_zero()) out += (out.empty() ? "" : " + ") + std::string("(") + central.to_string() + ")c";
    return out.empty() ? "0" : out;
}

WittElement witt_bracket(const WittElement& u, const WittElement& v) {
    WittElement out{u.field, {}};
    for (const auto& [m, a] : u.terms)
        for (const auto& [n, b] : v.terms) add_term(out.terms, m + n, a * b * Scalar(u.field, n - m));
    return out;
}

VirasoroElement virasoro_bracket(const VirasoroElement& u, const VirasoroElement& v) {
    Field f = u.w.field;
    VirasoroElement out{witt_bracket(u.w, v.w), Scalar(f)};
    for (const auto& [m, a] : u.w.terms) {
        auto it = v.w.terms.find(-m);
        if (it != v.w.terms.end()) out.central += a * it->second * Scalar::fraction(f, m * m * m - m, 12);
    }
    return out;
}

VmuVector VmuVector::basis(const Scalar& mu, long long l, bool full) {
    VmuVector v{mu, {}, full};
    return v.add(l, Scalar(mu.field(), 1));
}

VmuVector& VmuVector::add(long long l, const Scalar& c) {
    if (!full && l < 0 && !c.is_zero()) throw DomainError("V_mu has no negative powers of yh");
    add_term(coeffs, l, c);
    return *this;
}

VmuVector& VmuVector::operator+=(const VmuVector& o) {
    for (const auto& [l, c] : o.coeffs) add(l, c);
    return *this;
}

std::string VmuVector::to_string() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [l, c] : coeffs) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")yh^" + std::to_string(l);
    }
    return out;
}

namespace {

VmuVector act_basis(long long m, const VmuVector& v) {
    Field f = v.mu.field();
    VmuVector out{v.mu, {}, v.full};
    for (const auto& [l, c] : v.coeffs) out.add(m + l, c * (Scalar(f, l) - Scalar(f, m + 1) * v.mu));
    return out;
}

}  // namespace

VmuVector vmu_action(long long m, const VmuVector& v) {
    if (v.full) throw DomainError("vector lies in U_mu");
    if (m < -1) throw DomainError("w_m with m < -1 does not act on V_mu");
    return act_basis(m, v);
}

VmuVector umu_action(long long m, const VmuVector& v) {
    if (!v.full) throw DomainError("vector lies in V_mu");
    return act_basis(m, v);
}

VmuVector act(const WittElement& w, const VmuVector& v) {
    VmuVector out{v.mu, {}, v.full};
    for (const auto& [m, c] : w.terms) {
        VmuVector t = v.full ? umu_action(m, v) : vmu_action(m, v);
        for (const auto& [l, a] : t.coeffs) out.add(l, a * c);
    }
    return out;
}

VmuVector act(const VirasoroElement& w, const VmuVector& v) {
    if (!v.full) throw DomainError("the Virasoro algebra acts on U_mu");
    return act(w.w, v);
}

IrreducibilityCertificate vmu_irreducible(const Scalar& mu, unsigned N) {
    if (N < 2) throw DomainError("truncation must be at least 2");
    Field f = mu.field();
    IrreducibilityCertificate cert{mu, N, false, ""};
    if (mu.is_zero()) {
        VmuVector one = VmuVector::basis(mu, 0);
        for (long long m = -1; m <= static_cast<long long>(N); ++m)
            if (!vmu_action(m, one).is_zero()) {
                cert.witness = "w_" + std::to_string(m) + " moves yh^0";
                return cert;
            }
        cert.witness = "F yh^0";
        return cert;
    }
    for (unsigned l = 0; l <= N; ++l) {
        VmuVector v = VmuVector::basis(mu, l);
        for (unsigned k = 0; k < l; ++k) v = vmu_action(-1, v);
        if (!(v.coeffs.size() == 1 && v.coeffs.begin()->first == 0 && v.coeffs.begin()->second == factorial(f, l))) {
            cert.witness = "w_{-1}^" + std::to_string(l) + " yh^" + std::to_string(l) + " = " + v.to_string();
            return cert;
        }
    }
    VmuVector one = VmuVector::basis(mu, 0);
    for (unsigned m = 0; m <= N; ++m) {
        VmuVector v = vmu_action(m, one);
        Scalar want = -(Scalar(f, m + 1) * mu);
        if (!(v.coeffs.size() == 1 && v.coeffs.begin()->first == static_cast<long long>(m) &&
              v.coeffs.begin()->second == want)) {
            cert.witness = "w_" + std::to_string(m) + " yh^0 = " + v.to_string();
            return cert;
        }
    }
    cert.irreducible = true;
    return cert;
}

std::vector<Scalar> w0_spectrum(const Scalar& mu, unsigned N) {
    std::vector<Scalar> out;
    for (unsigned l = 0; l <= N; ++l) {
        VmuVector v = vmu_action(0, VmuVector::basis(mu, l));
        auto it = v.coeffs.find(l);
        out.push_back(it == v.coeffs.end() ? Scalar(mu.field()) : it->second);
    }
    return out;
}

namespace {

Scalar recover_mu(const Scalar& mu, unsigned N) {
    auto eig = w0_spectrum(mu, N);
    Scalar one(mu.field(), 1);
    std::vector<Scalar> bottom;
    for (const auto& lam : eig)
        if (std::find(eig.begin(), eig.end(), lam - one) == eig.end()) bottom.push_back(lam);
    if (bottom.size() != 1) throw DomainError("w_0 spectrum does not single out mu");
    return -bottom[0];
}

}  // namespace

IsomorphismCheck vmu_isomorphic(const Scalar& mu, const Scalar& mu2, unsigned N) {
    IsomorphismCheck c;
    c.recovered_mu = recover_mu(mu, N);
    c.recovered_mu2 = recover_mu(mu2, N);
    c.isomorphic = c.recovered_mu == c.recovered_mu2;
    return c;
}

Poly nu_element(const Poly& h) {
    require_char0(h.field(), "nu");
    Poly t1 = theta(h, 1);
    if (t1.degree() < 1) throw DomainError("nu needs gcd(h, h') != 1");
    Poly d = delta0(Poly::constant(h.field(), 1), h);
    if (!gcd(d, t1).is_one()) throw DomainError("delta_0(1) is not a unit modulo Theta_1");
    return inverse_mod(rem(d, t1), t1);
}

bool CompositionReport::in_filtration(const HH2Class& a, unsigned i) const {
    const Poly& t = thetas[std::min<std::size_t>(i, thetas.size() - 1)];
    for (const auto& c : a.coeffs())
        if (!divides(t, c)) return false;
    return true;
}

CompositionReport composition_series(const FactoredPoly& h) {
    require_char0(h.field(), "the composition series");
    CompositionReport r{0, {}, 0, true, {}, h.irreducible(), h};
    unsigned top = h.max_multiplicity();
    r.m_h = top > 0 ? top - 1 : 0;
    for (unsigned i = 0; i <= r.m_h; ++i) r.thetas.push_back(theta(h, i));
    Field f = h.field();
    for (std::size_t j = 0; j < h.factors().size(); ++j) {
        const auto& fc = h.factors()[j];
        for (unsigned i = 0; i + 2 <= fc.alpha; ++i)
            r.factors.push_back({i, static_cast<unsigned>(j + 1), fc.u, fc.alpha,
                                 Scalar::fraction(f, fc.alpha - i, fc.alpha - 1)});
        r.length += fc.alpha - 1;
    }
    r.semisimple = r.m_h <= 1;
    return r;
}

CompositionReport composition_series(const Poly& h) {
    auto a = factor_for_analysis(h);
    auto r = composition_series(a.factored);
    r.factorisation_certified = a.certified;
    return r;
}

Residue si_action(const CompositionReport& rep, unsigned i, unsigned j, const Poly& g, long long m, const Poly& f,
                  unsigned l, SiRoute route) {
    if (j == 0 || j > rep.h.factors().size()) throw DomainError("factor index out of range");
    if (m < -1) throw DomainError("w_m needs m >= -1");
    const Factor& fc = rep.h.factors()[j - 1];
    Field F = g.field();
    Residue zero(Poly(F), fc.u);
    if (fc.alpha <= i + 1) return zero;
    if (m + static_cast<long long>(l) < 0) return zero;
    if (route == SiRoute::Closed) {
        Scalar mu = Scalar::fraction(F, fc.alpha - i, fc.alpha - 1);
        Scalar c = Scalar(F, l) - Scalar(F, m + 1) * mu;
        return Residue(g * f * c, fc.u);
    }
    Poly h = rep.h.expand();
    auto A = OreAlgebra::create(h);
    std::vector<Poly> moduli;
    for (const auto& k : rep.h.factors()) moduli.push_back(pow(k.u, k.alpha));
    Poly e = crt_idempotents(moduli)[j - 1];
    Poly G = g * e * nu_element(h);
    Derivation E = -ad_gan(A, G, static_cast<unsigned>(m + 1));
    const Poly& th = rep.thetas[std::min<std::size_t>(i, rep.thetas.size() - 1)];
    std::vector<Poly> c(l + 1, Poly(F));
    c[l] = th * f * e;
    HH2Class cls(gcd_part(h), c);
    HH2Class out = LiftedDerivation(E).bracket(cls.lift(A));
    Poly top = out.coeff(static_cast<std::size_t>(m + l));
    return Residue(exact_div(top, th), fc.u);
}

bool yhat_power_congruence(const AlgebraPtr& A, unsigned k) {
    auto form = hy_basis(pow(OreElement::yhat(A), k));
    Poly g = gcd_part(A->h());
    if (form.c.size() != k + 1 || !form.c[k].is_one()) return false;
    for (unsigned j = 0; j < k; ++j)
        if (!divides(g, form.c[j])) return false;
    return true;
}

bool theta_derivative_congruence(const Poly& h, unsigned i) {
    Poly pi = pi_of(h), t = theta(h, i);
    Poly lhs = pi * derivative(t) - t * derivative(pi) * Scalar(h.field(), i);
    return divides(theta(h, i + 1), lhs);
}

namespace {

std::optional<std::string> compare_classes(const HH2Class& got, const HH2Class& want, const std::string& what) {
    if (got == want) return std::nullopt;
    return what + ": general " + got.to_string() + ", closed " + want.to_string();
}

HH2Class yhat_class(const Poly& mod, unsigned l) {
    std::vector<Poly> c(l + 1, Poly(mod.field()));
    c[l] = Poly::constant(mod.field(), 1);
    return HH2Class(mod, c);
}

}  // namespace

VerificationReport verify_bracket_agreement(const AlgebraPtr& A, const BracketSuiteOptions& o, std::uint64_t seed,
                                            Exec exec) {
    require_char0(A->field(), "bracket agreement");
    Poly mod = gcd_part(A->h());
    if (mod.degree() == 0) throw DomainError("HH^2 vanishes for separable h");
    Field f = A->field();
    VerificationReport rep{"bracket-agreement", {}};
    rep.identities.push_back(run_trials("[D_g, -] general = closed", o.trials, seed, exec, [&](Rng& r) {
        Poly g = random_poly(r, f, o.max_g_degree);
        LiftedDerivation L(D_g(A, g));
        for (unsigned l = 0; l <= o.max_l; ++l) {
            auto cls = yhat_class(mod, l);
            if (auto e = compare_classes(L.bracket(cls.lift(A)), bracket_Dg(g, cls),
                                         "g=" + g.to_string() + " l=" + std::to_string(l)))
                return e;
        }
        return std::optional<std::string>{};
    }));
    rep.identities.push_back(run_trials("[ad(g a_n), -] general = closed", o.trials, seed + 1, exec, [&](Rng& r) {
        Poly g = random_poly(r, f, o.max_g_degree);
        for (unsigned n = 0; n <= o.max_n; ++n) {
            LiftedDerivation L(ad_gan(A, g, n));
            for (unsigned l = 0; l <= o.max_l; ++l) {
                auto cls = yhat_class(mod, l);
                if (auto e = compare_classes(L.bracket(cls.lift(A)), bracket_adgan(A->h(), g, n, cls),
                                             "g=" + g.to_string() + " n=" + std::to_string(n) +
                                                 " l=" + std::to_string(l)))
                    return e;
            }
        }
        return std::optional<std::string>{};
    }));
    return rep;
}

namespace {

Derivation random_generator(Rng& r, const AlgebraPtr& A) {
    Poly g = random_poly(r, A->field(), 2);
    if (r.range(0, 2) == 0) return D_g(A, g);
    return ad_gan(A, g, static_cast<unsigned>(r.range(0, 2)));
}

}  // namespace

VerificationReport verify_lie_module(const AlgebraPtr& A, unsigned trials, std::uint64_t seed, Exec exec) {
    require_char0(A->field(), "the Lie-module axiom");
    VerificationReport rep{"lie-module", {}};
    Bounds small{3, 3, 2};
    rep.identities.push_back(run_trials("[[D,E],a] = [D,[E,a]] - [E,[D,a]]", trials, seed, exec, [&](Rng& r) {
        Derivation D = random_generator(r, A), E = random_generator(r, A);
        OreElement a = random_ore(r, A, small);
        LiftedDerivation LD(D), LE(E), LDE(hh1_bracket(D, E));
        HH2Class lhs = LDE.bracket(a);
        HH2Class rhs = LD.bracket(LE.bracket(a).lift(A)) - LE.bracket(LD.bracket(a).lift(A));
        return compare_classes(lhs, rhs, "a=" + a.to_string());
    }));
    rep.identities.push_back(run_trials("inner derivations act by 0", trials, seed + 1, exec, [&](Rng& r) {
        OreElement gamma = random_ore(r, A, small);
        Derivation D = Derivation::make(commutator(gamma, OreElement::x(A)), commutator(gamma, OreElement::yhat(A)));
        OreElement a = random_ore(r, A, small);
        HH2Class b = LiftedDerivation(D).bracket(a);
        if (b.is_zero()) return std::optional<std::string>{};
        return std::optional<std::string>("gamma=" + gamma.to_string() + " a=" + a.to_string() + ": " + b.to_string());
    }));
    return rep;
}

VerificationReport verify_witt_rep(const std::vector<Scalar>& mus, unsigned max_mn, unsigned max_l) {
    VerificationReport rep{"witt-rep", {}};
    IdentityResult repn{"[w_m, w_n] acts as the commutator", 0, 0, ""};
    IdentityResult restr{"U_mu restricts to V_mu", 0, 0, ""};
    IdentityResult irr{"irreducible iff mu != 0", 0, 0, ""};
    IdentityResult spectrum{"w_0 spectrum recovers mu", 0, 0, ""};
    auto fail = [](IdentityResult& r, const std::string& msg) {
        if (r.failures++ == 0) r.first_failure = msg;
    };
    const long long top = max_mn;
    for (const auto& mu : mus) {
        Field f = mu.field();
        for (long long m = -1; m <= top; ++m)
            for (long long n = -1; n <= top; ++n)
                for (unsigned l = 0; l <= max_l; ++l) {
                    ++repn.checked;
                    VmuVector v = VmuVector::basis(mu, l);
                    WittElement br = witt_bracket(WittElement::w(f, m, Scalar(f, 1)), WittElement::w(f, n, Scalar(f, 1)));
                    VmuVector lhs = act(br, v);
                    VmuVector rhs = vmu_action(m, vmu_action(n, v));
                    VmuVector t = vmu_action(n, vmu_action(m, v));
                    for (const auto& [k, c] : t.coeffs) rhs.add(k, -c);
                    if (!(lhs == rhs))
                        fail(repn, "mu=" + mu.to_string() + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                       " l=" + std::to_string(l));
                }
        for (long long m = -1; m <= top; ++m)
            for (unsigned l = 0; l <= max_l; ++l) {
                ++restr.checked;
                VmuVector a = vmu_action(m, VmuVector::basis(mu, l));
                VmuVector b = umu_action(m, VmuVector::basis(mu, l, true));
                if (a.coeffs != b.coeffs) fail(restr, "mu=" + mu.to_string() + " m=" + std::to_string(m));
            }
        ++irr.checked;
        auto cert = vmu_irreducible(mu, 10);
        if (cert.irreducible != !mu.is_zero() || (mu.is_zero() && cert.witness != "F yh^0"))
            fail(irr, "mu=" + mu.to_string() + ": " + cert.witness);
        ++spectrum.checked;
        if (!(vmu_isomorphic(mu, mu, 8).recovered_mu == mu)) fail(spectrum, "mu=" + mu.to_string());
    }
    rep.identities = {repn, restr, irr, spectrum};
    return rep;
}

}  // namespace ahh
