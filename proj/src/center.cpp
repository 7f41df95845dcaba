#include "ahh/center.hpp"

namespace ahh {

CenterDescription center_charp(const AlgebraPtr& A) {
    CenterDescription d{true, WeylElement(A->field()), WeylElement(A->field()), OreElement(A), OreElement(A)};
    Field f = A->field();
    if (f.is_rational()) {
        d.ore_x = OreElement::constant(A, Scalar(f, 1));
        return d;
    }
    unsigned p = static_cast<unsigned>(f.characteristic());
    d.trivial = false;
    d.gen_x = WeylElement::from_poly(Poly::monomial(Scalar(f, 1), p));
    std::vector<Poly> c(p + 1, Poly(f));
    c[p] = pow(A->h(), p);
    d.gen_y = WeylElement(f, std::move(c));
    d.ore_x = weyl_to_ore(d.gen_x, A);
    d.ore_y = weyl_to_ore(d.gen_y, A);
    return d;
}

bool is_central(const OreElement& a) {
    const auto& A = a.algebra();
    return commutator(a, OreElement::x(A)).is_zero() && commutator(a, OreElement::yhat(A)).is_zero();
}

ZDecomposition z_decompose(const OreElement& a) {
    Field f = a.field();
    if (f.is_rational()) throw DomainError("Z-decomposition needs characteristic p");
    unsigned p = static_cast<unsigned>(f.characteristic());
    auto form = hy_basis(a);
    ZDecomposition out;
    for (unsigned j = 0; j < form.c.size(); ++j) {
        auto parts = slice_by_residue(form.c[j], p);
        for (unsigned i = 0; i < p; ++i) {
            if (parts[i].is_zero()) continue;
            out[{i, j % p}][j / p] = parts[i];
        }
    }
    return out;
}

bool in_hA(const OreElement& a) {
    for (const auto& c : a.coeffs())
        if (!divides(a.algebra()->h(), c)) return false;
    return true;
}

CommutatorMembership commutator_subspace_membership(const OreElement& a) {
    Field f = a.field();
    if (f.is_rational())
        throw DomainError("commutator subspace description is for characteristic p; use in_hA in characteristic 0");
    unsigned p = static_cast<unsigned>(f.characteristic());
    CommutatorMembership m;
    m.in_hA = in_hA(a);
    if (!m.in_hA) return m;
    const Poly& h = a.algebra()->h();
    std::vector<Poly> c;
    for (const auto& cj : a.coeffs()) c.push_back(exact_div(cj, h));
    auto z = z_decompose(OreElement(a.algebra(), std::move(c)));
    m.in_x_commutators = true;
    m.in_commutator_sum = true;
    for (const auto& [key, val] : z) {
        if (key.second == p - 1) m.in_x_commutators = false;
        if (key.first == p - 1 && key.second == p - 1) m.in_commutator_sum = false;
    }
    return m;
}

}  // namespace ahh
