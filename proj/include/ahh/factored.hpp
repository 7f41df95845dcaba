#pragma once

#include "ahh/poly.hpp"

#include <optional>

namespace ahh {

struct Factor {
    Poly u;          // monic, nonconstant
    unsigned alpha;  // multiplicity >= 1
};

// h = unit * prod u_j^alpha_j with the u_j pairwise coprime.
class FactoredPoly {
public:
    // Validates monic nonconstant factors, positive multiplicities and pairwise coprimality.
    // `irreducible` records that the supplier vouches for irreducibility of every u_j;
    // degree 1 always holds, degrees 2 and 3 are checked by root search when possible.
    static FactoredPoly make(const Scalar& unit, std::vector<Factor> factors, bool irreducible);

    Field field() const { return unit_.field(); }
    const Scalar& unit() const { return unit_; }
    const std::vector<Factor>& factors() const { return factors_; }
    bool irreducible() const { return irreducible_; }
    Poly expand() const;
    unsigned max_multiplicity() const;
    std::string to_string() const;  // "x^3,(x - 1)^2"

private:
    Scalar unit_;
    std::vector<Factor> factors_;
    bool irreducible_ = false;
};

// Residue class modulo a monic nonconstant polynomial; rep is always reduced.
class Residue {
public:
    Residue(Poly rep, Poly modulus);
    const Poly& rep() const { return rep_; }
    const Poly& modulus() const { return mod_; }
    bool is_zero() const { return rep_.is_zero(); }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue inverse() const;
    bool operator==(const Residue& o) const { return mod_ == o.mod_ && rep_ == o.rep_; }

private:
    void check(const Residue& o) const;
    Poly rep_, mod_;
};

// Yun's algorithm; characteristic 0 only. Factors are the nontrivial squarefree parts s_m with alpha = m.
FactoredPoly squarefree_decomposition(const Poly& h);

// Monic h / gcd(h, h').
Poly pi_of(const Poly& h);
// prod_j u_j^{min(alpha_j - 1, i)}, computed with iterated gcds of h; valid in characteristic 0
// and for factorisations with all alpha_j < p.
Poly theta(const Poly& h, unsigned i);
Poly theta(const FactoredPoly& h, unsigned i);

// e_j with e_j = 1 mod m_j and 0 mod m_k (k != j), reduced mod prod m_k. Moduli must be pairwise coprime.
std::vector<Poly> crt_idempotents(const std::vector<Poly>& moduli);

// rho_h = (prod u_j^{floor(alpha_j/p)})^p over F_p.
Poly rho(const FactoredPoly& h);

// Best-effort factorisation without a general factoring routine. Over Q: squarefree
// decomposition, then rational roots are split off; remaining parts of degree <= 3 are
// irreducible. Over F_p: roots are split off by enumeration. `certified` is false when a
// part of degree >= 4 (Q) or any nonlinear part (F_p) had to be kept whole.
struct AnalysedFactorisation {
    FactoredPoly factored;
    bool certified;
};
AnalysedFactorisation factor_for_analysis(const Poly& h);

// Rational (or F_p) roots of f.
std::vector<Scalar> roots(const Poly& f);

}  // namespace ahh
