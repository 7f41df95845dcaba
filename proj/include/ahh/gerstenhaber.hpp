#pragma once

#include "ahh/cohomology.hpp"
#include "ahh/resolution.hpp"
#include "ahh/verify.hpp"

namespace ahh {

// Closed-form action of HH^1 on HH^2 = D[yh], characteristic 0.
// [D_g, -] = g d/dyh
HH2Class bracket_Dg(const Poly& g, const HH2Class& a);
// [ad(g a_n), -] = n pi g yh^{n-1} d/dx - delta_0(g) yh^n d/dyh - n g (pi h'/h) yh^{n-1}
HH2Class bracket_adgan(const Poly& h, const Poly& g, unsigned n, const HH2Class& a);

// Sum of the two closed formulas over the parts of h1.
HH2Class bracket_closed(const HH1Element& h1, const HH2Class& a);

// [D, a] = D(a) - chi_a(D2(1 (x) r (x) 1)), projected to D[yh]. D2 is computed once.
class LiftedDerivation {
public:
    explicit LiftedDerivation(Derivation D);
    const Derivation& derivation() const { return D_; }
    HH2Class bracket(const OreElement& a) const;

private:
    Derivation D_;
    TensorR d2_;
};
HH2Class bracket_general(const Derivation& D, const OreElement& a);

// Witt algebra span{w_m : m >= -1}; the full Witt algebra allows every integer index.
struct WittElement {
    Field field;
    std::map<long long, Scalar> terms;

    static WittElement w(Field f, long long m, const Scalar& c);
    static WittElement w(long long m) { return w(Field::rationals(), m, Scalar(Field::rationals(), 1)); }
    bool operator==(const WittElement& o) const { return field == o.field && terms == o.terms; }
    std::string to_string() const;
};
struct VirasoroElement {
    WittElement w;
    Scalar central;
    bool operator==(const VirasoroElement& o) const { return w == o.w && central == o.central; }
    std::string to_string() const;
};
WittElement witt_bracket(const WittElement& u, const WittElement& v);
VirasoroElement virasoro_bracket(const VirasoroElement& u, const VirasoroElement& v);

// Element of V_mu (non-negative powers) or U_mu (all integer powers) of yh.
struct VmuVector {
    Scalar mu;
    std::map<long long, Scalar> coeffs;
    bool full = false;  // U_mu

    static VmuVector basis(const Scalar& mu, long long l, bool full = false);
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const VmuVector& o) const { return mu == o.mu && full == o.full && coeffs == o.coeffs; }
    VmuVector& add(long long l, const Scalar& c);
    VmuVector& operator+=(const VmuVector& o);
    std::string to_string() const;
};
// w_m . yh^l = (l - (m+1) mu) yh^{m+l}
VmuVector vmu_action(long long m, const VmuVector& v);
VmuVector umu_action(long long m, const VmuVector& v);
VmuVector act(const WittElement& w, const VmuVector& v);
VmuVector act(const VirasoroElement& w, const VmuVector& v);  // U_mu, central charge acts by 0

struct IrreducibilityCertificate {
    Scalar mu;
    unsigned truncation = 0;
    bool irreducible = false;
    std::string witness;  // invariant line for mu = 0, otherwise the failing step if any
};
// Evidence at truncation N, not a proof: w_{-1}^l yh^l = l! yh^0 and w_m yh^0 = -(m+1) mu yh^m.
IrreducibilityCertificate vmu_irreducible(const Scalar& mu, unsigned N = 10);

struct IsomorphismCheck {
    bool isomorphic = false;
    Scalar recovered_mu, recovered_mu2;  // -lambda for the unique w_0 eigenvalue lambda with lambda - 1 absent
};
IsomorphismCheck vmu_isomorphic(const Scalar& mu, const Scalar& mu2, unsigned N = 10);
// w_0 eigenvalues l - mu for l = 0..N, read off the diagonal action
std::vector<Scalar> w0_spectrum(const Scalar& mu, unsigned N);

// nu delta_0(1) = 1 mod Theta_1, reduced
Poly nu_element(const Poly& h);

struct SeriesFactor {
    unsigned i = 0, j = 0;  // j is 1-based
    Poly u;
    unsigned alpha = 0;
    Scalar mu;
};
struct CompositionReport {
    unsigned m_h = 0;
    std::vector<Poly> thetas;  // Theta_0 .. Theta_{m_h}
    unsigned length = 0;
    bool semisimple = true;
    std::vector<SeriesFactor> factors;  // ordered by j, then i
    bool factorisation_certified = true;
    FactoredPoly h;

    // a in P_i = Theta_i D[yh]
    bool in_filtration(const HH2Class& a, unsigned i) const;
};
CompositionReport composition_series(const FactoredPoly& h);
CompositionReport composition_series(const Poly& h);  // factor_for_analysis fallback

// Action of (g e_j) (x) w_m on f e_j yh^l in S_i = P_i / P_{i+1}, as a residue mod u_j
// (the coefficient of yh^{m+l}).
enum class SiRoute { Closed, Lifted };
Residue si_action(const CompositionReport& rep, unsigned i, unsigned j, const Poly& g, long long m, const Poly& f,
                  unsigned l, SiRoute route);

// yh^k = h^k y^k mod gcd(h, h') A_1, via the HY coefficients
bool yhat_power_congruence(const AlgebraPtr& A, unsigned k);
// pi Theta_i' = i Theta_i pi' mod Theta_{i+1}
bool theta_derivative_congruence(const Poly& h, unsigned i);

// Verification suites for the bracket action.
struct BracketSuiteOptions {
    unsigned trials = 20;
    unsigned max_g_degree = 4;
    unsigned max_n = 3;
    unsigned max_l = 5;
};
VerificationReport verify_bracket_agreement(const AlgebraPtr& A, const BracketSuiteOptions& o, std::uint64_t seed,
                                            Exec exec = Exec::Parallel);
VerificationReport verify_lie_module(const AlgebraPtr& A, unsigned trials, std::uint64_t seed,
                                     Exec exec = Exec::Parallel);
VerificationReport verify_witt_rep(const std::vector<Scalar>& mus, unsigned max_mn = 6, unsigned max_l = 10);

}  // namespace ahh
