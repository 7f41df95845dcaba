#include "ahh/resolution.hpp"

#include <map>

namespace ahh {

namespace {

constexpr Mono kX{1, 0};
constexpr Mono kY{0, 1};

Mono mid_mono(Gen g) { return g == Gen::X ? kX : kY; }

}  // namespace

OreElement Resolution::mu(const TensorAA& t) const {
    std::vector<MonoTerm> out;
    for (const auto& [k, c] : t.terms()) A_->mono_mul(std::get<0>(k), std::get<2>(k), c, out);
    return OreElement::from_terms(A_, out);
}

TensorAA Resolution::d0(const TensorV& t) const {
    TensorAA r(A_);
    std::vector<MonoTerm> buf;
    for (const auto& [k, c] : t.terms()) {
        auto [u, g, w] = k;
        Mono v = mid_mono(g);
        buf.clear();
        A_->mono_mul(u, v, c, buf);
        for (const auto& m : buf) r.add(m.m, NoMid{}, w, m.c);
        buf.clear();
        A_->mono_mul(v, w, -c, buf);
        for (const auto& m : buf) r.add(u, NoMid{}, m.m, m.c);
    }
    return r;
}

const TensorV& Resolution::relation_image() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!rel_) {
        Field f = A_->field();
        Scalar one(f, 1), minus(f, -1);
        TensorV t(A_);
        t.add({0, 0}, Gen::YHat, kX, one);
        t.add(kY, Gen::X, {0, 0}, one);
        t.add({0, 0}, Gen::X, kY, minus);
        t.add(kX, Gen::YHat, {0, 0}, minus);
        TensorAA h1 = TensorAA::make(OreElement::from_poly(A_, A_->h()), NoMid{}, OreElement::constant(A_, one));
        t -= s0(h1);
        rel_ = std::make_unique<TensorV>(std::move(t));
    }
    return *rel_;
}

TensorV Resolution::d1(const TensorR& t) const {
    const TensorV& rel = relation_image();
    TensorV r(A_);
    std::vector<MonoTerm> lb, rb;
    Scalar one(A_->field(), 1);
    for (const auto& [k, c] : t.terms()) {
        const Mono& u = std::get<0>(k);
        const Mono& w = std::get<2>(k);
        for (const auto& [rk, e] : rel.terms()) {
            lb.clear();
            rb.clear();
            A_->mono_mul(u, std::get<0>(rk), c * e, lb);
            A_->mono_mul(std::get<2>(rk), w, one, rb);
            for (const auto& l : lb)
                for (const auto& rr : rb) r.add(l.m, std::get<1>(rk), rr.m, l.c * rr.c);
        }
    }
    return r;
}

TensorAA Resolution::s_minus1(const OreElement& a) const {
    TensorAA r(A_);
    for (const auto& t : a.terms()) r.add({0, 0}, NoMid{}, t.m, t.c);
    return r;
}

TensorV Resolution::s0(const TensorAA& t) const {
    TensorV r(A_);
    std::vector<MonoTerm> buf;
    for (const auto& [k, c] : t.terms()) {
        const Mono& u = std::get<0>(k);
        const Mono& w = std::get<2>(k);
        for (unsigned i = 0; i < u.x; ++i) {
            buf.clear();
            A_->mono_mul({u.x - 1 - i, u.y}, w, c, buf);
            for (const auto& m : buf) r.add({i, 0}, Gen::X, m.m, m.c);
        }
        for (unsigned j = 0; j < u.y; ++j) {
            buf.clear();
            A_->mono_mul({0, u.y - 1 - j}, w, c, buf);
            for (const auto& m : buf) r.add({u.x, j}, Gen::YHat, m.m, m.c);
        }
    }
    return r;
}

TensorR Resolution::G(const OreElement& a) const {
    TensorR r(A_);
    for (const auto& t : a.terms())
        for (unsigned i = 0; i < t.m.x; ++i) r.add({i, 0}, RelMid{}, {t.m.x - 1 - i, t.m.y}, t.c);
    return r;
}

TensorR Resolution::s1_closed(unsigned l) const {
    TensorR out(A_);
    if (l == 0) return out;
    unsigned lp = l - 1;
    Field f = A_->field();
    Poly dx = Poly::x(f);
    for (unsigned j = 0; j <= lp; ++j) {
        for (unsigned k = 0; k + j <= lp; ++k) {
            Scalar b = binomial(f, lp - k, j);
            if (b.is_zero()) continue;
            OreElement tail = OreElement::monomial(A_, {0, lp - j - k}, Scalar(f, 1));
            TensorR g = G(dx * tail);
            out.add_scaled(g.left_mul(OreElement::monomial(A_, {0, k}, Scalar(f, 1))), b);
        }
        dx = delta(dx, A_->h());
    }
    return out;
}

std::shared_ptr<const TensorR> Resolution::s1_generator(unsigned l, S1Mode mode) const {
    std::lock_guard<std::mutex> lock(mu_);
    Field f = A_->field();
    if (mode == S1Mode::ClosedForm) {
        if (s1_closed_.size() <= l) s1_closed_.resize(l + 1);
        if (!s1_closed_[l]) s1_closed_[l] = std::make_shared<const TensorR>(s1_closed(l));
        return s1_closed_[l];
    }
    if (s1_rec_.empty()) s1_rec_.push_back(std::make_shared<const TensorR>(A_));
    OreElement Y = OreElement::yhat(A_);
    while (s1_rec_.size() <= l) {
        unsigned cur = static_cast<unsigned>(s1_rec_.size()) - 1;  // have S(cur), build S(cur+1)
        TensorR next = s1_rec_.back()->left_mul(Y);
        Poly dx = Poly::x(f);
        for (unsigned j = 0; j <= cur; ++j) {
            OreElement term = dx * OreElement::monomial(A_, {0, cur - j}, Scalar(f, 1));
            next.add_scaled(G(term), binomial(f, cur, j));
            dx = delta(dx, A_->h());
        }
        s1_rec_.push_back(std::make_shared<const TensorR>(std::move(next)));
    }
    return s1_rec_[l];
}

TensorR Resolution::s1(const TensorV& t, S1Mode mode) const {
    TensorR r(A_);
    std::vector<MonoTerm> buf;
    for (const auto& [k, c] : t.terms()) {
        auto [u, g, w] = k;
        if (g == Gen::YHat) continue;
        auto S = s1_generator(u.y, mode);
        for (const auto& [sk, e] : S->terms()) {
            Mono left = std::get<0>(sk);
            left.x += u.x;
            buf.clear();
            A_->mono_mul(std::get<2>(sk), w, c * e, buf);
            for (const auto& m : buf) r.add(left, RelMid{}, m.m, m.c);
        }
    }
    return r;
}

TensorV Resolution::lift1(const Derivation& D, const TensorV& t) const {
    Field f = A_->field();
    Scalar one(f, 1);
    std::map<Mono, OreElement> dcache;
    auto Dm = [&](Mono m) -> const OreElement& {
        auto it = dcache.find(m);
        if (it == dcache.end())
            it = dcache.emplace(m, apply_derivation(D, OreElement::monomial(A_, m, one))).first;
        return it->second;
    };
    TensorV r(A_);
    for (const auto& [k, c] : t.terms()) {
        auto [u, g, w] = k;
        OreElement U = OreElement::monomial(A_, u, c);
        OreElement W = OreElement::monomial(A_, w, one);
        const OreElement& Dv = g == Gen::X ? D.dx() : D.dyhat();
        r += s0(TensorAA::make(Dv, NoMid{}, W)).left_mul(U);
        r += TensorV::make(Dm(u) * c, g, W);
        r += TensorV::make(U, g, Dm(w));
    }
    return r;
}

TensorR Resolution::lift2_element(const Derivation& D) const {
    Field f = A_->field();
    OreElement one = OreElement::constant(A_, Scalar(f, 1));
    TensorR r = G(D.dx());
    r += s1(TensorV::make(D.dyhat(), Gen::X, one));
    TensorV sh = s0(TensorAA::make(OreElement::from_poly(A_, A_->h()), NoMid{}, one));
    r -= s1(lift1(D, sh));
    return r;
}

}  // namespace ahh
