#pragma once

#include "ahh/derivation.hpp"
#include "ahh/tensor.hpp"

namespace ahh {

enum class S1Mode { Recursive, ClosedForm };

// The length-two bimodule resolution of A_h with its contracting homotopy:
//   0 -> A(x)R(x)A --d1--> A(x)V(x)A --d0--> A(x)A --mu--> A -> 0
// with V = span{x, yh} and R spanned by the single relation.
class Resolution {
public:
    explicit Resolution(AlgebraPtr A) : A_(std::move(A)) {}
    const AlgebraPtr& algebra() const { return A_; }

    OreElement mu(const TensorAA& t) const;
    TensorAA d0(const TensorV& t) const;
    TensorV d1(const TensorR& t) const;

    TensorAA s_minus1(const OreElement& a) const;
    TensorV s0(const TensorAA& t) const;
    TensorR s1(const TensorV& t, S1Mode mode = S1Mode::Recursive) const;

    // G(x^k yh^l) = sum_{i<k} x^i (x) r (x) x^{k-1-i} yh^l
    TensorR G(const OreElement& a) const;

    // d1(1 (x) r (x) 1)
    const TensorV& relation_image() const;
    // s1(yh^l (x) x (x) 1)
    std::shared_ptr<const TensorR> s1_generator(unsigned l, S1Mode mode) const;

    // Lift of a derivation to degree 1 of the resolution.
    TensorV lift1(const Derivation& D, const TensorV& t) const;
    // D2(1 (x) r (x) 1) = G(D(x)) + s1(D(yh) (x) x (x) 1) - s1(D1(s0(h (x) 1)))
    TensorR lift2_element(const Derivation& D) const;

    TensorV gen(const OreElement& a, Gen g, const OreElement& b) const { return TensorV::make(a, g, b); }

private:
    TensorR s1_closed(unsigned l) const;

    AlgebraPtr A_;
    mutable std::mutex mu_;
    mutable std::unique_ptr<TensorV> rel_;
    mutable std::vector<std::shared_ptr<const TensorR>> s1_rec_, s1_closed_;
};

}  // namespace ahh
