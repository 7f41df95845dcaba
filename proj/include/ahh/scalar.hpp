#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace ahh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text that does not parse, or parses to something outside the active field.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Mathematically meaningless request: division by zero, wrong characteristic, ...
struct DomainError : Error {
    using Error::Error;
};

// Characteristic descriptor. 0 means the rationals, otherwise a prime p.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    bool operator==(const Field&) const = default;
    std::string to_string() const;

private:
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// Exact field element. Over Q a small-integer fast path is kept alongside a
// shared immutable mpq for everything else; over F_p the residue lives in small_.
class Scalar {
public:
    Scalar() = default;  // zero of Q
    explicit Scalar(Field f) : f_(f) {}
    Scalar(Field f, long long v);
    Scalar(Field f, const mpz_class& v);
    Scalar(Field f, const mpq_class& v);

    static Scalar fraction(Field f, const mpz_class& num, const mpz_class& den);
    static Scalar fraction(Field f, long long num, long long den) {
        return fraction(f, mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    }

    Field field() const { return f_; }
    bool is_zero() const { return !big_ && small_ == 0; }
    bool is_one() const { return !big_ && small_ == 1; }
    int sign() const;  // char 0 only meaningful; residues report 0/1

    mpq_class to_mpq() const;  // char 0
    std::uint64_t residue() const;  // char p

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "3/2", "-1", residues as integers in [0, p)
    std::string to_string() const;

private:
    void check(const Scalar& o) const;
    void set_big(mpq_class q);

    Field f_;
    std::int64_t small_ = 0;
    std::shared_ptr<const mpq_class> big_;
};

Scalar binomial(Field f, unsigned n, unsigned k);
Scalar factorial(Field f, unsigned n);

}  // namespace ahh
