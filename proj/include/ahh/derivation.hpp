#pragma once

#include "ahh/ore.hpp"

namespace ahh {

// rD2(alpha, beta) = [beta, x] + [yh, alpha] - F_alpha(h)
OreElement cochain_d2(const OreElement& alpha, const OreElement& beta);

struct InvalidDerivation : DomainError {
    std::string residual;
    explicit InvalidDerivation(const std::string& r)
        : DomainError("values do not define a derivation; residual " + r), residual(r) {}
};

// A derivation of A_h, determined by its values on x and yh.
class Derivation {
public:
    // Throws InvalidDerivation unless rD2(dx, dyhat) = 0.
    static Derivation make(OreElement dx, OreElement dyhat);

    const OreElement& dx() const { return dx_; }
    const OreElement& dyhat() const { return dyhat_; }
    const AlgebraPtr& algebra() const { return dx_.algebra(); }

    Derivation operator-() const { return Derivation(-dx_, -dyhat_); }
    friend Derivation operator+(const Derivation& a, const Derivation& b) {
        return Derivation(a.dx_ + b.dx_, a.dyhat_ + b.dyhat_);
    }
    friend Derivation operator*(const Derivation& a, const Scalar& s) { return Derivation(a.dx_ * s, a.dyhat_ * s); }

private:
    Derivation(OreElement dx, OreElement dyhat) : dx_(std::move(dx)), dyhat_(std::move(dyhat)) {}
    OreElement dx_, dyhat_;
};

// Leibniz extension; D(f(x)) = F_{D(x)}(f).
OreElement apply_derivation(const Derivation& D, const OreElement& a);

// [D, E](v) = D(E(v)) - E(D(v)) on generators
Derivation hh1_bracket(const Derivation& D, const Derivation& E);

}  // namespace ahh
