// Serial vs OpenMP trial loops of the verification suites. Both runs must
// produce identical reports; the table shows wall time for each.
#include "ahh/gerstenhaber.hpp"
#include "ahh/parse.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace ahh;

namespace {

double seconds(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool same(const VerificationReport& a, const VerificationReport& b) { return a.identities == b.identities; }

}  // namespace

int main(int argc, char** argv) {
    unsigned trials = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 2000;
    std::uint64_t seed = 7;
    std::printf("threads %d, trials %u\n", omp_get_max_threads(), trials);
    std::printf("%-14s %-14s %10s %10s %8s  %s\n", "suite", "h", "serial", "parallel", "speedup", "same");
    int bad = 0;
    auto row = [&](const char* suite, const char* h, const std::function<VerificationReport(Exec)>& run) {
        VerificationReport s, p;
        double ts = seconds([&] { s = run(Exec::Serial); });
        double tp = seconds([&] { p = run(Exec::Parallel); });
        bool ok = same(s, p) && s.passed();
        bad += !ok;
        std::printf("%-14s %-14s %9.3fs %9.3fs %7.2fx  %s\n", suite, h, ts, tp, ts / tp, ok ? "yes" : "NO");
    };
    Field Q = Field::rationals();
    for (const char* h : {"x^2", "x^3*(x-1)^2"}) {
        auto A = OreAlgebra::create(parse_poly(h, Q));
        Bounds b;
        row("homotopy", h, [&](Exec e) { return verify_homotopy(A, b, trials, seed, e); });
        row("chain", h, [&](Exec e) { return verify_chain(A, b, trials, seed, e); });
        BracketSuiteOptions o;
        o.trials = trials / 20;
        row("bracket", h, [&](Exec e) { return verify_bracket_agreement(A, o, seed, e); });
        row("lie-module", h, [&](Exec e) { return verify_lie_module(A, trials / 10, seed, e); });
    }
    return bad == 0 ? 0 : 1;
}
