#include "ahh/derivation.hpp"

namespace ahh {

OreElement cochain_d2(const OreElement& alpha, const OreElement& beta) {
    const auto& A = alpha.algebra();
    return commutator(beta, OreElement::x(A)) + commutator(OreElement::yhat(A), alpha) - F_alpha(alpha, A->h());
}

Derivation Derivation::make(OreElement dx, OreElement dyhat) {
    if (!dx.algebra()->same_as(*dyhat.algebra())) throw DomainError("derivation values in different algebras");
    OreElement res = cochain_d2(dx, dyhat);
    if (!res.is_zero()) throw InvalidDerivation(res.to_string());
    return Derivation(std::move(dx), std::move(dyhat));
}

OreElement apply_derivation(const Derivation& D, const OreElement& a) {
    const auto& A = a.algebra();
    OreElement Y = OreElement::yhat(A);
    OreElement out(A);
    OreElement ypow = OreElement::constant(A, Scalar(A->field(), 1));  // yh^{j}
    OreElement dypow(A);                                              // D(yh^j)
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
        if (j > 0) {
            dypow = dypow * Y + ypow * D.dyhat();
            ypow = ypow * Y;
        }
        const Poly& f = a.coeffs()[j];
        if (f.is_zero()) continue;
        out += F_alpha(D.dx(), f) * ypow;
        out += f * dypow;
    }
    return out;
}

Derivation hh1_bracket(const Derivation& D, const Derivation& E) {
    OreElement dx = apply_derivation(D, E.dx()) - apply_derivation(E, D.dx());
    OreElement dy = apply_derivation(D, E.dyhat()) - apply_derivation(E, D.dyhat());
    return Derivation::make(std::move(dx), std::move(dy));
}

}  // namespace ahh
