#include "ahh/ore.hpp"

#include "ahh/expr_parser.hpp"

namespace ahh {

namespace {

std::vector<std::vector<Scalar>> binomial_table(Field f, unsigned n) {
    std::vector<std::vector<Scalar>> t(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        t[i].assign(i + 1, Scalar(f, 1));
        for (unsigned k = 1; k < i; ++k) t[i][k] = t[i - 1][k - 1] + t[i - 1][k];
    }
    return t;
}

void trim_polys(std::vector<Poly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// (sum a_i D^i)(sum b_j D^j) with D g = g D + step(g):  D^i g = sum_k C(i,k) step^k(g) D^{i-k}
template <class Step>
std::vector<Poly> skew_mul(const std::vector<Poly>& a, const std::vector<Poly>& b, Field f, Step step) {
    if (a.empty() || b.empty()) return {};
    unsigned maxi = static_cast<unsigned>(a.size()) - 1;
    auto binom = binomial_table(f, maxi);
    std::vector<Poly> r(a.size() + b.size() - 1, Poly(f));
    std::vector<Poly> d;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].is_zero()) continue;
        d.assign(1, b[j]);
        for (unsigned k = 1; k <= maxi; ++k) {
            d.push_back(d.back().is_zero() ? Poly(f) : step(d.back()));
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (unsigned k = 0; k <= i; ++k) {
                if (d[k].is_zero()) break;
                r[i - k + j] += a[i] * (d[k] * binom[i][k]);
            }
        }
    }
    trim_polys(r);
    return r;
}

std::string format_skew(const std::vector<Poly>& c, const char* var) {
    if (c.empty()) return "0";
    std::string out;
    for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
        const Poly& p = c[j];
        if (p.is_zero()) continue;
        std::string piece;
        if (j == 0)
            piece = p.to_string();
        else if (p.is_one())
            piece = std::string(var) + "^" + std::to_string(j);
        else
            piece = "(" + p.to_string() + ")*" + var + "^" + std::to_string(j);
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out;
}

}  // namespace

Poly delta(const Poly& f, const Poly& h, unsigned k) {
    Poly r = f;
    for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = derivative(r) * h;
    return r;
}

std::shared_ptr<const OreAlgebra> OreAlgebra::create(const Poly& h) {
    if (h.is_zero()) throw DomainError("h must be nonzero");
    return std::shared_ptr<const OreAlgebra>(new OreAlgebra(h));
}

std::shared_ptr<const std::vector<MonoTerm>> OreAlgebra::yx(unsigned b, unsigned c) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = yx_cache_.find({b, c});
        if (it != yx_cache_.end()) return it->second;
    }
    Field f = field();
    auto out = std::make_shared<std::vector<MonoTerm>>();
    Poly d = Poly::monomial(Scalar(f, 1), c);
    for (unsigned k = 0; k <= b && !d.is_zero(); ++k) {
        Scalar bin = binomial(f, b, k);
        if (!bin.is_zero())
            for (int i = 0; i <= d.degree(); ++i) {
                Scalar co = d.coeff(i);
                if (!co.is_zero()) out->push_back({{static_cast<unsigned>(i), b - k}, co * bin});
            }
        d = delta(d, h_);
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = yx_cache_.emplace(std::make_pair(b, c), std::move(out));
    return it->second;
}

void OreAlgebra::mono_mul(Mono a, Mono b, const Scalar& s, std::vector<MonoTerm>& out) const {
    if (a.y == 0) {
        out.push_back({{a.x + b.x, b.y}, s});
        return;
    }
    auto t = yx(a.y, b.x);
    for (const auto& term : *t) out.push_back({{term.m.x + a.x, term.m.y + b.y}, term.c * s});
}

OreElement::OreElement(AlgebraPtr A, std::vector<Poly> coeffs) : A_(std::move(A)), c_(std::move(coeffs)) {
    for (const auto& p : c_)
        if (!(p.field() == A_->field())) throw DomainError("coefficient over the wrong field");
    trim();
}

void OreElement::trim() { trim_polys(c_); }

void OreElement::check(const OreElement& o) const {
    if (!A_->same_as(*o.A_)) throw DomainError("elements of different algebras A_h");
}

OreElement OreElement::constant(AlgebraPtr A, const Scalar& c) {
    Poly p = Poly::constant(c);
    return OreElement(std::move(A), {p});
}

OreElement OreElement::from_poly(AlgebraPtr A, const Poly& f) { return OreElement(std::move(A), {f}); }

OreElement OreElement::x(AlgebraPtr A) {
    Field f = A->field();
    return OreElement(std::move(A), {Poly::x(f)});
}

OreElement OreElement::yhat(AlgebraPtr A) {
    Field f = A->field();
    return OreElement(std::move(A), {Poly(f), Poly::constant(f, 1)});
}

OreElement OreElement::monomial(AlgebraPtr A, Mono m, const Scalar& c) {
    Field f = A->field();
    std::vector<Poly> v(m.y + 1, Poly(f));
    v[m.y] = Poly::monomial(c, m.x);
    return OreElement(std::move(A), std::move(v));
}

OreElement OreElement::from_terms(AlgebraPtr A, const std::vector<MonoTerm>& terms) {
    Field f = A->field();
    std::vector<std::vector<Scalar>> grid;
    for (const auto& t : terms) {
        if (grid.size() <= t.m.y) grid.resize(t.m.y + 1);
        auto& row = grid[t.m.y];
        if (row.size() <= t.m.x) row.resize(t.m.x + 1, Scalar(f));
        row[t.m.x] += t.c;
    }
    std::vector<Poly> c;
    c.reserve(grid.size());
    for (auto& row : grid) c.emplace_back(f, std::move(row));
    return OreElement(std::move(A), std::move(c));
}

int OreElement::x_degree() const {
    int d = -1;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

std::vector<MonoTerm> OreElement::terms() const {
    std::vector<MonoTerm> out;
    for (std::size_t j = 0; j < c_.size(); ++j)
        for (int i = 0; i <= c_[j].degree(); ++i) {
            const Scalar& co = c_[j].coeffs()[i];
            if (!co.is_zero()) out.push_back({{static_cast<unsigned>(i), static_cast<unsigned>(j)}, co});
        }
    return out;
}

OreElement OreElement::operator-() const {
    OreElement r(*this);
    for (auto& p : r.c_) p = -p;
    return r;
}

OreElement& OreElement::operator+=(const OreElement& o) {
    check(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Poly(field()));
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

OreElement& OreElement::operator-=(const OreElement& o) {
    check(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Poly(field()));
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
}

OreElement operator*(const OreElement& a, const OreElement& b) {
    a.check(b);
    const Poly& h = a.A_->h();
    return OreElement(a.A_, skew_mul(a.c_, b.c_, a.field(), [&h](const Poly& g) { return derivative(g) * h; }));
}

OreElement operator*(OreElement a, const Scalar& s) {
    for (auto& p : a.c_) p *= s;
    a.trim();
    return a;
}

OreElement operator*(const Poly& f, OreElement a) {
    for (auto& p : a.c_) p = f * p;
    a.trim();
    return a;
}

bool OreElement::operator==(const OreElement& o) const { return A_->same_as(*o.A_) && c_ == o.c_; }

std::string OreElement::to_string() const { return format_skew(c_, "yh"); }

OreElement commutator(const OreElement& a, const OreElement& b) { return a * b - b * a; }

OreElement pow(const OreElement& a, unsigned e) {
    OreElement r = OreElement::constant(a.algebra(), Scalar(a.field(), 1));
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

OreElement F_alpha(const OreElement& alpha, const Poly& f) {
    const auto& A = alpha.algebra();
    OreElement out(A);
    if (f.degree() < 1) return out;
    OreElement X = OreElement::x(A);
    std::vector<OreElement> right;  // alpha x^m
    right.push_back(alpha);
    for (int m = 1; m < f.degree(); ++m) right.push_back(right.back() * X);
    for (int s = 1; s <= f.degree(); ++s) {
        Scalar fs = f.coeff(s);
        if (fs.is_zero()) continue;
        OreElement inner(A);
        for (int l = 0; l < s; ++l) inner += Poly::monomial(Scalar(A->field(), 1), l) * right[s - l - 1];
        out += inner * fs;
    }
    return out;
}

WeylElement::WeylElement(Field f, std::vector<Poly> coeffs) : f_(f), c_(std::move(coeffs)) {
    for (const auto& p : c_)
        if (!(p.field() == f_)) throw DomainError("coefficient over the wrong field");
    trim();
}

void WeylElement::trim() { trim_polys(c_); }

WeylElement WeylElement::constant(const Scalar& c) { return WeylElement(c.field(), {Poly::constant(c)}); }
WeylElement WeylElement::from_poly(const Poly& f) { return WeylElement(f.field(), {f}); }
WeylElement WeylElement::x(Field f) { return WeylElement(f, {Poly::x(f)}); }
WeylElement WeylElement::y(Field f) { return WeylElement(f, {Poly(f), Poly::constant(f, 1)}); }

WeylElement WeylElement::operator-() const {
    WeylElement r(*this);
    for (auto& p : r.c_) p = -p;
    return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    if (!(f_ == o.f_)) throw DomainError("Weyl elements over different fields");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Poly(f_));
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
    if (!(f_ == o.f_)) throw DomainError("Weyl elements over different fields");
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Poly(f_));
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    if (!(a.f_ == b.f_)) throw DomainError("Weyl elements over different fields");
    return WeylElement(a.f_, skew_mul(a.c_, b.c_, a.f_, [](const Poly& g) { return derivative(g); }));
}

WeylElement operator*(const Poly& f, WeylElement a) {
    for (auto& p : a.c_) p = f * p;
    a.trim();
    return a;
}

std::string WeylElement::to_string() const { return format_skew(c_, "y"); }

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

WeylElement pow(const WeylElement& a, unsigned e) {
    WeylElement r = WeylElement::constant(Scalar(a.field(), 1));
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

namespace {

WeylElement yh_in_weyl(const Poly& h) { return WeylElement(h.field(), {derivative(h), h}); }

}  // namespace

WeylElement ore_to_weyl(const OreElement& a) {
    Field f = a.field();
    WeylElement Y = yh_in_weyl(a.algebra()->h());
    WeylElement power = WeylElement::constant(Scalar(f, 1));
    WeylElement out(f);
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
        if (j > 0) power = power * Y;
        if (!a.coeffs()[j].is_zero()) out += a.coeffs()[j] * power;
    }
    return out;
}

OreElement weyl_to_ore(const WeylElement& w, const AlgebraPtr& A) {
    Field f = A->field();
    if (!(w.field() == f)) throw DomainError("Weyl element over the wrong field");
    const Poly& h = A->h();
    WeylElement Y = yh_in_weyl(h);
    int n = w.y_degree();
    std::vector<WeylElement> powers{WeylElement::constant(Scalar(f, 1))};
    std::vector<Poly> hpow{Poly::constant(f, 1)};
    for (int j = 1; j <= n; ++j) {
        powers.push_back(powers.back() * Y);
        hpow.push_back(hpow.back() * h);
    }
    std::vector<Poly> out(std::max(n + 1, 0), Poly(f));
    WeylElement rest = w;
    for (int j = n; j >= 0; --j) {
        Poly fj = rest.coeff(j);
        if (fj.is_zero()) continue;
        auto [q, r] = divrem(fj, hpow[j]);
        if (!r.is_zero())
            throw NotInSubalgebra("y^" + std::to_string(j) + " coefficient " + fj.to_string() +
                                      " is not divisible by h^" + std::to_string(j),
                                  static_cast<unsigned>(j));
        out[j] = q;
        rest -= q * powers[j];
    }
    return OreElement(A, std::move(out));
}

HYBasisForm hy_basis(const OreElement& a) {
    WeylElement w = ore_to_weyl(a);
    const Poly& h = a.algebra()->h();
    HYBasisForm form{a.algebra(), {}};
    Poly hp = Poly::constant(a.field(), 1);
    for (int j = 0; j <= w.y_degree(); ++j) {
        form.c.push_back(exact_div(w.coeff(j), hp));
        hp *= h;
    }
    return form;
}

OreElement from_hy_basis(const HYBasisForm& form) {
    Field f = form.A->field();
    const Poly& h = form.A->h();
    std::vector<Poly> c;
    Poly hp = Poly::constant(f, 1);
    for (const auto& cj : form.c) {
        c.push_back(cj * hp);
        hp *= h;
    }
    return weyl_to_ore(WeylElement(f, std::move(c)), form.A);
}

OreElement parse_ore(std::string_view text, const AlgebraPtr& A) {
    detail::ExprParser<OreElement> p(
        text, A->field(),
        [&A](const std::string& id, std::size_t at) -> OreElement {
            if (id == "x") return OreElement::x(A);
            if (id == "yh") return OreElement::yhat(A);
            throw ParseError("unknown variable '" + id + "' (expected x or yh)", at);
        },
        [&A](const Scalar& c) { return OreElement::constant(A, c); });
    return p.parse();
}

WeylElement parse_weyl(std::string_view text, Field f) {
    detail::ExprParser<WeylElement> p(
        text, f,
        [f](const std::string& id, std::size_t at) -> WeylElement {
            if (id == "x") return WeylElement::x(f);
            if (id == "y") return WeylElement::y(f);
            throw ParseError("unknown variable '" + id + "' (expected x or y)", at);
        },
        [](const Scalar& c) { return WeylElement::constant(c); });
    return p.parse();
}

}  // namespace ahh
