#pragma once

#include "ahh/resolution.hpp"

#include <functional>
#include <optional>

namespace ahh {

// Small deterministic generator (splitmix64) so that runs are reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next();
    long long range(long long lo, long long hi);  // inclusive
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

private:
    std::uint64_t s_;
};

struct Bounds {
    unsigned max_x = 6;
    unsigned max_y = 4;
    unsigned max_terms = 3;
};

// nonzero, degree <= max_degree
Poly random_poly(Rng& r, Field f, unsigned max_degree);
OreElement random_ore(Rng& r, const AlgebraPtr& A, const Bounds& b);
TensorAA random_aa(Rng& r, const AlgebraPtr& A, const Bounds& b);
TensorV random_v(Rng& r, const AlgebraPtr& A, const Bounds& b);
TensorR random_r(Rng& r, const AlgebraPtr& A, const Bounds& b);

enum class Exec { Serial, Parallel };

struct IdentityResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;
    bool operator==(const IdentityResult&) const = default;
};

struct VerificationReport {
    std::string suite;
    std::vector<IdentityResult> identities;
    bool passed() const;
    std::string to_string() const;
};

// One check per trial; returns a description on failure. Trial i draws from Rng(mix(seed, i)),
// so serial and parallel runs see identical inputs.
using TrialFn = std::function<std::optional<std::string>(Rng&)>;
IdentityResult run_trials(const std::string& name, unsigned trials, std::uint64_t seed, Exec exec, const TrialFn& fn);

// mu s_-1 = 1, s_-1 mu + d0 s0 = 1, s0 d0 + d1 s1 = 1, s1 d1 = 1 on random inputs.
VerificationReport verify_homotopy(const AlgebraPtr& A, const Bounds& b, unsigned trials, std::uint64_t seed,
                                   Exec exec = Exec::Parallel);
// mu d0 = 0 and d0 d1 = 0 on random inputs.
VerificationReport verify_chain(const AlgebraPtr& A, const Bounds& b, unsigned trials, std::uint64_t seed,
                                Exec exec = Exec::Parallel);
// s1(yh^l (x) x (x) 1) by recursion and by the closed double sum, l <= max_l.
VerificationReport verify_s1_closed_form(const AlgebraPtr& A, unsigned max_l);

}  // namespace ahh
