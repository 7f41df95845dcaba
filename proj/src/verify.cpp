#include "ahh/verify.hpp"

#include <sstream>

namespace ahh {

std::uint64_t Rng::next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long long Rng::range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (stream * 0xD1B54A32D192ED03ULL));
    return r.next();
}

namespace {

Mono random_mono(Rng& r, const Bounds& b) {
    return {static_cast<unsigned>(r.range(0, b.max_x)), static_cast<unsigned>(r.range(0, b.max_y))};
}

Scalar random_coeff(Rng& r, Field f) {
    long long v = r.range(1, 5);
    return Scalar(f, r.range(0, 1) ? v : -v);
}

}  // namespace

Poly random_poly(Rng& r, Field f, unsigned max_degree) {
    Poly p(f);
    long long d = r.range(0, max_degree);
    for (long long k = 0; k <= d; ++k)
        if (r.range(0, 2)) p += Poly::monomial(random_coeff(r, f), static_cast<unsigned>(k));
    return p.is_zero() ? Poly::constant(f, 1) : p;
}

OreElement random_ore(Rng& r, const AlgebraPtr& A, const Bounds& b) {
    std::vector<MonoTerm> t;
    long long n = r.range(1, b.max_terms);
    for (long long k = 0; k < n; ++k) t.push_back({random_mono(r, b), random_coeff(r, A->field())});
    return OreElement::from_terms(A, t);
}

TensorAA random_aa(Rng& r, const AlgebraPtr& A, const Bounds& b) {
    TensorAA t(A);
    long long n = r.range(1, b.max_terms);
    for (long long k = 0; k < n; ++k) {
        Mono l = random_mono(r, b);
        t.add(l, NoMid{}, random_mono(r, b), random_coeff(r, A->field()));
    }
    return t;
}

TensorV random_v(Rng& r, const AlgebraPtr& A, const Bounds& b) {
    TensorV t(A);
    long long n = r.range(1, b.max_terms);
    for (long long k = 0; k < n; ++k) {
        Mono l = random_mono(r, b);
        Gen g = r.range(0, 1) ? Gen::X : Gen::YHat;
        t.add(l, g, random_mono(r, b), random_coeff(r, A->field()));
    }
    return t;
}

TensorR random_r(Rng& r, const AlgebraPtr& A, const Bounds& b) {
    TensorR t(A);
    long long n = r.range(1, b.max_terms);
    for (long long k = 0; k < n; ++k) {
        Mono l = random_mono(r, b);
        t.add(l, RelMid{}, random_mono(r, b), random_coeff(r, A->field()));
    }
    return t;
}

bool VerificationReport::passed() const {
    for (const auto& i : identities)
        if (i.failures != 0 || i.checked == 0) return false;
    return true;
}

std::string VerificationReport::to_string() const {
    std::ostringstream os;
    os << suite << ": " << (passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& i : identities) {
        os << "  " << i.name << ": " << i.checked << " checked, " << i.failures << " failed";
        if (!i.first_failure.empty()) os << " (first: " << i.first_failure << ")";
        os << "\n";
    }
    return os.str();
}

IdentityResult run_trials(const std::string& name, unsigned trials, std::uint64_t seed, Exec exec, const TrialFn& fn) {
    std::vector<std::optional<std::string>> out(trials);
    auto one = [&](unsigned i) {
        Rng r(Rng::mix(seed, i));
        try {
            out[i] = fn(r);
        } catch (const std::exception& e) {
            out[i] = std::string("exception: ") + e.what();
        }
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(trials); ++i) one(static_cast<unsigned>(i));
    } else {
        for (unsigned i = 0; i < trials; ++i) one(i);
    }
    IdentityResult res{name, trials, 0, ""};
    for (const auto& o : out)
        if (o) {
            if (res.failures++ == 0) res.first_failure = *o;
        }
    return res;
}

namespace {

template <class T>
std::optional<std::string> expect_equal(const T& lhs, const T& rhs, const std::string& input) {
    if (lhs == rhs) return std::nullopt;
    return "input " + input + ": got " + lhs.to_string() + ", want " + rhs.to_string();
}

}  // namespace

VerificationReport verify_homotopy(const AlgebraPtr& A, const Bounds& b, unsigned trials, std::uint64_t seed,
                                   Exec exec) {
    Resolution R(A);
    VerificationReport rep{"homotopy", {}};
    rep.identities.push_back(run_trials("mu s_-1 = 1", trials, seed, exec, [&](Rng& r) {
        auto a = random_ore(r, A, b);
        return expect_equal(R.mu(R.s_minus1(a)), a, a.to_string());
    }));
    rep.identities.push_back(run_trials("s_-1 mu + d0 s0 = 1", trials, seed + 1, exec, [&](Rng& r) {
        auto t = random_aa(r, A, b);
        return expect_equal(R.s_minus1(R.mu(t)) + R.d0(R.s0(t)), t, t.to_string());
    }));
    rep.identities.push_back(run_trials("s0 d0 + d1 s1 = 1", trials, seed + 2, exec, [&](Rng& r) {
        auto t = random_v(r, A, b);
        return expect_equal(R.s0(R.d0(t)) + R.d1(R.s1(t)), t, t.to_string());
    }));
    rep.identities.push_back(run_trials("s1 d1 = 1", trials, seed + 3, exec, [&](Rng& r) {
        auto t = random_r(r, A, b);
        return expect_equal(R.s1(R.d1(t)), t, t.to_string());
    }));
    return rep;
}

VerificationReport verify_chain(const AlgebraPtr& A, const Bounds& b, unsigned trials, std::uint64_t seed, Exec exec) {
    Resolution R(A);
    VerificationReport rep{"chain", {}};
    rep.identities.push_back(run_trials("mu d0 = 0", trials, seed, exec, [&](Rng& r) {
        auto t = random_v(r, A, b);
        return expect_equal(R.mu(R.d0(t)), OreElement(A), t.to_string());
    }));
    rep.identities.push_back(run_trials("d0 d1 = 0", trials, seed + 1, exec, [&](Rng& r) {
        auto t = random_r(r, A, b);
        return expect_equal(R.d0(R.d1(t)), TensorAA(A), t.to_string());
    }));
    return rep;
}

VerificationReport verify_s1_closed_form(const AlgebraPtr& A, unsigned max_l) {
    Resolution R(A);
    VerificationReport rep{"s1 closed form", {}};
    IdentityResult res{"s1 recursion = closed form", 0, 0, ""};
    for (unsigned l = 0; l <= max_l; ++l) {
        ++res.checked;
        auto rec = R.s1_generator(l, S1Mode::Recursive);
        auto closed = R.s1_generator(l, S1Mode::ClosedForm);
        if (!(*rec == *closed) && res.failures++ == 0)
            res.first_failure = "l = " + std::to_string(l) + ": " + rec->to_string() + " vs " + closed->to_string();
    }
    rep.identities.push_back(res);
    return rep;
}

}  // namespace ahh
