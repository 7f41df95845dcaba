#pragma once

#include "ahh/ore.hpp"

namespace ahh {

// Generators of Z(A_h) in characteristic p: x^p and h^p y^p. In characteristic 0 the center is F.
struct CenterDescription {
    bool trivial = true;  // characteristic 0
    WeylElement gen_x{Field()}, gen_y{Field()};
    OreElement ore_x, ore_y;
};
CenterDescription center_charp(const AlgebraPtr& A);

bool is_central(const OreElement& a);

// In characteristic p, A = (+)_{i,r<p} Z x^i h^r y^r with Z = F[x^p, h^p y^p].
// Key (i, r); value maps q to the F[x^p]-coefficient (as a polynomial in t = x^p) of (h^p y^p)^q.
using ZDecomposition = std::map<std::pair<unsigned, unsigned>, std::map<unsigned, Poly>>;
ZDecomposition z_decompose(const OreElement& a);

struct CommutatorMembership {
    bool in_hA = false;
    bool in_x_commutators = false;    // [x, A]
    bool in_commutator_sum = false;   // [x, A] + [yh, A]
};
// Characteristic p only.
CommutatorMembership commutator_subspace_membership(const OreElement& a);

// a in hA: every yh-coefficient is divisible by h.
bool in_hA(const OreElement& a);

}  // namespace ahh
