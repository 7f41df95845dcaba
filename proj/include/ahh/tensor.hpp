#pragma once

#include "ahh/ore.hpp"

#include <tuple>

namespace ahh {

// Middle slots of the three free bimodules A(x)A, A(x)V(x)A and A(x)R(x)A.
struct NoMid {
    auto operator<=>(const NoMid&) const = default;
};
enum class Gen : unsigned char { X = 0, YHat = 1 };
struct RelMid {
    auto operator<=>(const RelMid&) const = default;
};

// Finite combination of basis tensors  x^i yh^j (x) m (x) x^k yh^l  with exact coefficients.
template <class Mid>
class Tensor {
public:
    using Key = std::tuple<Mono, Mid, Mono>;

    explicit Tensor(AlgebraPtr A) : A_(std::move(A)) {}

    static Tensor make(const OreElement& a, Mid m, const OreElement& b) {
        Tensor t(a.algebra());
        auto bt = b.terms();
        for (const auto& ta : a.terms())
            for (const auto& tb : bt) t.add(ta.m, m, tb.m, ta.c * tb.c);
        return t;
    }

    const AlgebraPtr& algebra() const { return A_; }
    Field field() const { return A_->field(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(Mono l, Mid m, Mono r, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(Key{l, m, r}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Tensor& add_scaled(const Tensor& o, const Scalar& s) {
        check(o);
        for (const auto& [k, c] : o.terms_) add(std::get<0>(k), std::get<1>(k), std::get<2>(k), c * s);
        return *this;
    }
    Tensor& operator+=(const Tensor& o) { return add_scaled(o, Scalar(field(), 1)); }
    Tensor& operator-=(const Tensor& o) { return add_scaled(o, Scalar(field(), -1)); }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Tensor& a, const Scalar& s) {
        Tensor r(a.A_);
        return r.add_scaled(a, s);
    }
    bool operator==(const Tensor& o) const { return A_->same_as(*o.A_) && terms_ == o.terms_; }

    // a * t, acting on the left factor
    Tensor left_mul(const OreElement& a) const {
        Tensor r(A_);
        std::vector<MonoTerm> buf;
        auto at = a.terms();
        for (const auto& [k, c] : terms_)
            for (const auto& ta : at) {
                buf.clear();
                A_->mono_mul(ta.m, std::get<0>(k), ta.c * c, buf);
                for (const auto& t : buf) r.add(t.m, std::get<1>(k), std::get<2>(k), t.c);
            }
        return r;
    }

    // t * b, acting on the right factor
    Tensor right_mul(const OreElement& b) const {
        Tensor r(A_);
        std::vector<MonoTerm> buf;
        auto bt = b.terms();
        for (const auto& [k, c] : terms_)
            for (const auto& tb : bt) {
                buf.clear();
                A_->mono_mul(std::get<2>(k), tb.m, tb.c * c, buf);
                for (const auto& t : buf) r.add(std::get<0>(k), std::get<1>(k), t.m, t.c);
            }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")" + mono_text(std::get<0>(k)) + "|" + mid_text(std::get<1>(k)) + "|" +
                   mono_text(std::get<2>(k));
        }
        return out;
    }

private:
    void check(const Tensor& o) const {
        if (!A_->same_as(*o.A_)) throw DomainError("tensors over different algebras");
    }
    static std::string mono_text(Mono m) {
        return "x^" + std::to_string(m.x) + "yh^" + std::to_string(m.y);
    }
    static std::string mid_text(NoMid) { return ""; }
    static std::string mid_text(Gen g) { return g == Gen::X ? "x" : "yh"; }
    static std::string mid_text(RelMid) { return "r"; }

    AlgebraPtr A_;
    std::map<Key, Scalar> terms_;
};

using TensorAA = Tensor<NoMid>;
using TensorV = Tensor<Gen>;
using TensorR = Tensor<RelMid>;

}  // namespace ahh
