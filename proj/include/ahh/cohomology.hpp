#pragma once

#include "ahh/derivation.hpp"
#include "ahh/linalg.hpp"

namespace ahh {

// rD1(alpha) = ([x, alpha], [yh, alpha])
std::pair<OreElement, OreElement> cochain_d1(const OreElement& alpha);
bool is_derivation(const OreElement& dx, const OreElement& dyhat);

// D_g : x -> 0, yh -> g
Derivation D_g(const AlgebraPtr& A, const Poly& g);

// delta_0(g) = (g pi_h)' - g pi_h h'/h
Poly delta0(const Poly& g, const Poly& h);
// pi_h h'/h
Poly pi_hprime_over_h(const Poly& h);

// ad of g a_n with a_n = pi_h h^{n-1} y^n, computed in the Weyl algebra and pulled back.
// For n = 0 this is -D_{delta_0(g)}.
Derivation ad_gan(const AlgebraPtr& A, const Poly& g, unsigned n);

// gamma with D = ad_gamma = [gamma, -], searching x- and yh-degrees up to `bound`.
std::optional<OreElement> is_inner(const Derivation& D, unsigned bound);

// Class of D_dpart + sum_n ad(g_n a_n) in HH^1 (characteristic 0), in normal form:
// dpart reduced mod h, each g_n reduced mod gcd(h, h').
class HH1Element {
public:
    HH1Element(AlgebraPtr A, Poly dpart, std::map<unsigned, Poly> adparts);
    const AlgebraPtr& algebra() const { return A_; }
    const Poly& dpart() const { return d_; }
    const std::map<unsigned, Poly>& adparts() const { return ad_; }
    bool is_zero() const { return d_.is_zero() && ad_.empty(); }
    Derivation representative() const;
    HH1Element operator+(const HH1Element& o) const;
    bool operator==(const HH1Element& o) const { return d_ == o.d_ && ad_ == o.ad_; }
    std::string to_string() const;

private:
    AlgebraPtr A_;
    Poly d_;
    std::map<unsigned, Poly> ad_;
};

struct HH0Report {
    bool trivial = true;                // characteristic 0: HH^0 = F
    std::vector<std::string> generators;  // characteristic p: x^p, h^p y^p
};
HH0Report hh0(const AlgebraPtr& A);

struct HH1Report {
    Poly gcd_part, pi;
    std::vector<Poly> center_basis;  // D_g for these g span the center of HH^1
    unsigned witt_copies = 0;        // deg gcd(h, h'): [HH1, HH1] is W (x) F[x]/gcd(h, h')
    Poly nilradical_modulus;         // Theta_1
    std::vector<Factor> semisimple_factors;  // the u_j with alpha_j >= 2
    bool factorisation_certified = true;
};
HH1Report hh1_char0(const AlgebraPtr& A);
HH1Report hh1_char0(const AlgebraPtr& A, const FactoredPoly& h);

// Element of HH^2 = D[yh] with D = F[x]/gcd(h, h') (characteristic 0).
class HH2Class {
public:
    HH2Class(Poly modulus, std::vector<Poly> coeffs);
    const Poly& modulus() const { return mod_; }
    const std::vector<Poly>& coeffs() const { return c_; }
    Poly coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Poly(mod_.field()); }
    bool is_zero() const { return c_.empty(); }
    OreElement lift(const AlgebraPtr& A) const;

    HH2Class operator+(const HH2Class& o) const;
    HH2Class operator-(const HH2Class& o) const;
    HH2Class operator*(const Scalar& s) const;
    bool operator==(const HH2Class& o) const { return mod_ == o.mod_ && c_ == o.c_; }
    std::string to_string() const;

private:
    Poly mod_;
    std::vector<Poly> c_;
};

struct HH2Char0 {
    Poly modulus;  // gcd(h, h')
    bool zero;     // h separable
};
HH2Char0 hh2_char0(const AlgebraPtr& A);
HH2Class project_hh2(const OreElement& a);

// Exact preimages under rD2 with unknowns of x-degree <= cap_x and yh-degree <= cap_y.
std::vector<std::optional<std::pair<OreElement, OreElement>>> rd2_preimages(const AlgebraPtr& A,
                                                                          const std::vector<OreElement>& targets,
                                                                          unsigned cap_x, unsigned cap_y);

// kappa(g) = g'h - h'g
Poly kappa(const Poly& g, const Poly& h);

struct KappaKernelCheck {
    Poly generator;  // h / rho_h
    std::size_t brute_dimension = 0, predicted_dimension = 0;
    bool equal = false;
};
// Brute-force kernel of kappa on polynomials of degree <= bound against F[x^p] (h/rho_h).
KappaKernelCheck kappa_kernel_check(const FactoredPoly& h, unsigned bound);

struct CharPHH2Report {
    unsigned p = 0;
    Poly gcd_part;
    // J / gcd J = (+)_{j <= p-2} D h^j y^j with D = C_A(x)/gcd C_A(x); empty when gcd = 1
    std::vector<WeylElement> torsion_generators;
    std::vector<Poly> K_basis;  // F[x^p]-basis of K = im kappa
    unsigned K_rank = 0;
    bool K_summand = false;     // F[x]/K torsion-free
    std::optional<Poly> xi;     // F[x] = K (+) F[x^p] xi
    // When K has a basis of monomial multiples t^a x^i, C_A(x)/Z K splits slotwise:
    // (slot i, order c(t)); order zero means a free summand Z x^i h^{p-1} y^{p-1}.
    bool diagonal = false;
    std::vector<std::pair<unsigned, Poly>> top_summands;
    std::optional<Poly> rho;
    bool free = false;
    unsigned rank = 0;
    WeylElement top_monomial(unsigned slot, const Poly& h) const;
};
CharPHH2Report hh2_charp(const AlgebraPtr& A, const std::optional<FactoredPoly>& factored = std::nullopt);

struct Freeness {
    bool free = false;
    std::optional<Poly> xi;
    unsigned rank = 0;
};
Freeness hh2_freeness(const AlgebraPtr& A);

}  // namespace ahh
