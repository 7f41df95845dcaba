#include "ahh/scalar.hpp"

namespace ahh {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1ULL << 62)) throw DomainError("characteristic too large");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::to_string() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

namespace {

std::int64_t mod_reduce(long long v, std::uint64_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return r;
}

std::int64_t mpz_reduce(const mpz_class& v, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return static_cast<std::int64_t>(r.get_ui());
}

std::int64_t inv_mod(std::int64_t a, std::uint64_t p) {
    __int128 t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::int64_t>(t);
}

bool fits(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

Scalar::Scalar(Field f, long long v) : f_(f) {
    if (f.is_rational())
        small_ = v;
    else
        small_ = mod_reduce(v, f.characteristic());
}

Scalar::Scalar(Field f, const mpz_class& v) : f_(f) {
    if (!f.is_rational())
        small_ = mpz_reduce(v, f.characteristic());
    else if (fits(v))
        small_ = v.get_si();
    else
        set_big(mpq_class(v));
}

Scalar::Scalar(Field f, const mpq_class& v) : f_(f) {
    if (f.is_rational()) {
        set_big(v);
    } else {
        *this = fraction(f, v.get_num(), v.get_den());
    }
}

Scalar Scalar::fraction(Field f, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("zero denominator");
    if (f.is_rational()) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(f, q);
    }
    Scalar n(f, num), d(f, den);
    if (d.is_zero())
        throw DomainError("denominator " + den.get_str() + " vanishes in " + f.to_string());
    return n / d;
}

void Scalar::set_big(mpq_class q) {
    if (q.get_den() == 1 && fits(q.get_num())) {
        small_ = q.get_num().get_si();
        big_.reset();
    } else {
        small_ = 0;
        big_ = std::make_shared<const mpq_class>(std::move(q));
    }
}

void Scalar::check(const Scalar& o) const {
    if (!(f_ == o.f_)) throw DomainError("mixing scalars of " + f_.to_string() + " and " + o.f_.to_string());
}

int Scalar::sign() const {
    if (big_) return sgn(*big_);
    return small_ > 0 ? 1 : (small_ < 0 ? -1 : 0);
}

mpq_class Scalar::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(static_cast<long>(small_));
}

std::uint64_t Scalar::residue() const { return static_cast<std::uint64_t>(small_); }

Scalar Scalar::operator-() const {
    Scalar r(f_);
    if (!f_.is_rational()) {
        r.small_ = small_ == 0 ? 0 : static_cast<std::int64_t>(f_.characteristic()) - small_;
    } else if (big_ || small_ == INT64_MIN) {
        r.set_big(-to_mpq());
    } else {
        r.small_ = -small_;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check(o);
    if (!f_.is_rational()) {
        std::uint64_t p = f_.characteristic();
        std::uint64_t s = static_cast<std::uint64_t>(small_) + static_cast<std::uint64_t>(o.small_);
        if (s >= p) s -= p;
        small_ = static_cast<std::int64_t>(s);
        return *this;
    }
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
    }
    set_big(to_mpq() + o.to_mpq());
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check(o);
    if (!f_.is_rational()) {
        std::uint64_t p = f_.characteristic();
        std::int64_t s = small_ - o.small_;
        if (s < 0) s += static_cast<std::int64_t>(p);
        small_ = s;
        return *this;
    }
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
    }
    set_big(to_mpq() - o.to_mpq());
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check(o);
    if (!f_.is_rational()) {
        unsigned __int128 m = static_cast<unsigned __int128>(small_) * static_cast<unsigned __int128>(o.small_);
        small_ = static_cast<std::int64_t>(m % f_.characteristic());
        return *this;
    }
    std::int64_t r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
        small_ = r;
        return *this;
    }
    set_big(to_mpq() * o.to_mpq());
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    Scalar r(f_);
    if (!f_.is_rational()) {
        r.small_ = inv_mod(small_, f_.characteristic());
        return r;
    }
    if (small_ == 1 || small_ == -1) {
        r.small_ = small_;
        return r;
    }
    r.set_big(1 / to_mpq());
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check(o);
    if (o.is_zero()) throw DomainError("division by zero");
    if (!f_.is_rational()) return *this *= o.inverse();
    if (!big_ && !o.big_ && o.small_ != 0 && small_ % o.small_ == 0 && !(small_ == INT64_MIN && o.small_ == -1)) {
        small_ /= o.small_;
        return *this;
    }
    set_big(to_mpq() / o.to_mpq());
    return *this;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(f_ == o.f_)) return false;
    if (!big_ && !o.big_) return small_ == o.small_;
    if (big_ && o.big_) return *big_ == *o.big_;
    return false;  // normalised: a big value never equals a small one
}

std::string Scalar::to_string() const {
    if (big_) return big_->get_str();
    return std::to_string(small_);
}

Scalar binomial(Field f, unsigned n, unsigned k) {
    if (k > n) return Scalar(f);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(f, b);
}

Scalar factorial(Field f, unsigned n) {
    mpz_class b;
    mpz_fac_ui(b.get_mpz_t(), n);
    return Scalar(f, b);
}

}  // namespace ahh
