#include "ahh/gerstenhaber.hpp"
#include "ahh/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace ahh;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct VerificationFailed : Error {
    using Error::Error;
};

struct Config {
    unsigned long long characteristic = 0;
    std::string h_text, h_factored_text;
    std::string command, suite;
    std::uint64_t seed = 1;
    unsigned max_x = 6, max_y = 4;
    unsigned trials = 0;  // 0: the suite's default
    std::string format = "text";
    std::string derivation, cls;
};

const char* kDerivationHelp =
    "derivation for `bracket`:\n"
    "  dg:g=<poly>                      D_g : x -> 0, yh -> g\n"
    "  ad:g=<poly>,n=<int>              ad of g pi_h h^{n-1} y^n\n"
    "  general:dx=<elt>,dyhat=<elt>     any derivation, checked against rD2\n"
    "elements use x and yh, e.g. \"(x+1)*yh^2 - 3*x\"";

// Rationals always as "p/q".
std::string rat(const Scalar& s) {
    if (!s.field().is_rational()) return std::to_string(s.residue()) + "/1";
    mpq_class q = s.to_mpq();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json strings(const std::vector<Poly>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(p.to_string());
    return a;
}

std::string factor_text(const Factor& f) {
    std::string u = f.u.to_string();
    if (f.u.degree() > 1 || u.find(' ') != std::string::npos) u = "(" + u + ")";
    return f.alpha == 1 ? u : u + "^" + std::to_string(f.alpha);
}

class Emitter {
public:
    explicit Emitter(bool machine) : machine_(machine) {}
    void emit(const std::string& record, json body) {
        json r;
        r["schema_version"] = kSchemaVersion;
        r["record"] = record;
        for (auto& [k, v] : body.items()) r[k] = v;
        if (machine_) {
            std::cout << r.dump() << "\n";
            return;
        }
        std::cout << "[" << record << "]\n";
        for (auto& [k, v] : body.items()) std::cout << "  " << k << ": " << text(v) << "\n";
    }

private:
    static std::string text(const json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_null()) return "none";
        if (v.is_array()) {
            std::string out;
            for (const auto& e : v) out += (out.empty() ? "" : "; ") + text(e);
            return out.empty() ? "(empty)" : out;
        }
        if (v.is_object()) {
            std::string out;
            for (auto& [k, e] : v.items()) out += (out.empty() ? "" : ", ") + k + "=" + text(e);
            return "{" + out + "}";
        }
        return v.dump();
    }
    bool machine_;
};

struct Input {
    Field field;
    AlgebraPtr A;
    std::optional<FactoredPoly> factored;
};

Input load(const Config& c) {
    Field f = c.characteristic == 0 ? Field::rationals() : Field::prime(c.characteristic);
    if (!c.h_factored_text.empty()) {
        auto fp = parse_factored(c.h_factored_text, f);
        return {f, OreAlgebra::create(fp.expand()), fp};
    }
    return {f, OreAlgebra::create(parse_poly(c.h_text, f)), std::nullopt};
}

void cmd_report(const Input& in, Emitter& out) {
    auto z = hh0(in.A);
    out.emit("hh0", {{"h", in.A->h().to_string()},
                     {"trivial", z.trivial},
                     {"center", z.trivial ? json("F") : json(z.generators)}});
    if (in.field.is_rational()) {
        auto r = in.factored ? hh1_char0(in.A, *in.factored) : hh1_char0(in.A);
        json ss = json::array();
        for (const auto& fc : r.semisimple_factors) ss.push_back(factor_text(fc));
        out.emit("hh1", {{"gcd", r.gcd_part.to_string()},
                         {"pi", r.pi.to_string()},
                         {"center_basis", strings(r.center_basis)},
                         {"center_dimension", r.center_basis.size()},
                         {"witt_copies", r.witt_copies},
                         {"nilradical_modulus", r.nilradical_modulus.to_string()},
                         {"semisimple_factors", ss},
                         {"factorisation_certified", r.factorisation_certified}});
        auto h2 = hh2_char0(in.A);
        out.emit("hh2", {{"modulus", h2.modulus.to_string()},
                         {"zero", h2.zero},
                         {"description", h2.zero ? "0" : "D[yh], D = F[x]/(" + h2.modulus.to_string() + ")"}});
    } else {
        auto fr = hh2_freeness(in.A);
        out.emit("hh2", {{"free", fr.free}, {"rank", fr.rank}, {"xi", fr.xi ? json(fr.xi->to_string()) : json()}});
    }
    out.emit("higher", {{"statement", "HH^i(A) = 0 for all i >= 3"}});
}

void cmd_series(const Input& in, Emitter& out) {
    if (!in.field.is_rational()) throw DomainError("the composition series is computed in characteristic 0");
    auto r = in.factored ? composition_series(*in.factored) : composition_series(in.A->h());
    json fs = json::array();
    for (const auto& f : r.factors)
        fs.push_back({{"i", f.i}, {"j", f.j}, {"u", f.u.to_string()}, {"alpha", f.alpha}, {"mu", rat(f.mu)}});
    out.emit("series", {{"h", in.A->h().to_string()},
                        {"hh2_zero", r.length == 0},
                        {"m_h", r.m_h},
                        {"length", r.length},
                        {"semisimple", r.semisimple},
                        {"thetas", strings(r.thetas)},
                        {"factors", fs},
                        {"factorisation_certified", r.factorisation_certified}});
}

std::map<std::string, std::string> key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')') --depth;
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            std::string part = text.substr(start, i - start);
            auto eq = part.find('=');
            if (eq == std::string::npos) throw ParseError("expected key=value in derivation", start);
            kv[part.substr(0, eq)] = part.substr(eq + 1);
            start = i + 1;
        }
    }
    return kv;
}

std::string need(const std::map<std::string, std::string>& kv, const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw ParseError("derivation is missing " + k, 0);
    return it->second;
}

void cmd_bracket(const Config& c, const Input& in, Emitter& out) {
    if (c.derivation.empty() || c.cls.empty()) throw ParseError("bracket needs --derivation and --class", 0);
    if (!in.field.is_rational()) throw DomainError("brackets are computed in characteristic 0");
    auto colon = c.derivation.find(':');
    if (colon == std::string::npos) throw ParseError("derivation must look like kind:key=value", 0);
    std::string kind = c.derivation.substr(0, colon);
    auto kv = key_values(c.derivation.substr(colon + 1));
    const auto& A = in.A;
    OreElement a = parse_ore(c.cls, A);
    std::optional<Derivation> D;
    std::optional<HH2Class> closed;
    HH2Class cls = project_hh2(a);
    if (kind == "dg") {
        Poly g = parse_poly(need(kv, "g"), in.field);
        D = D_g(A, g);
        closed = bracket_Dg(g, cls);
    } else if (kind == "ad") {
        Poly g = parse_poly(need(kv, "g"), in.field);
        long long n = std::stoll(need(kv, "n"));
        if (n < 0) throw ParseError("n must be non-negative", 0);
        D = ad_gan(A, g, static_cast<unsigned>(n));
        closed = bracket_adgan(A->h(), g, static_cast<unsigned>(n), cls);
    } else if (kind == "general") {
        D = Derivation::make(parse_ore(need(kv, "dx"), A), parse_ore(need(kv, "dyhat"), A));
    } else {
        throw ParseError("unknown derivation kind " + kind, 0);
    }
    HH2Class general = bracket_general(*D, a);
    bool agree = !closed || *closed == general;
    out.emit("bracket", {{"h", A->h().to_string()},
                         {"derivation", c.derivation},
                         {"class", cls.to_string()},
                         {"general", general.to_string()},
                         {"closed", closed ? json(closed->to_string()) : json()},
                         {"agree", agree}});
    if (!agree) throw VerificationFailed("bracket routes disagree");
}

void cmd_verify(const Config& c, const Input& in, Emitter& out) {
    Bounds b{c.max_x, c.max_y, 3};
    auto trials = [&](unsigned d) { return c.trials ? c.trials : d; };
    VerificationReport rep;
    if (c.suite == "homotopy") {
        rep = verify_homotopy(in.A, b, trials(200), c.seed);
    } else if (c.suite == "chain") {
        rep = verify_chain(in.A, b, trials(200), c.seed);
    } else if (c.suite == "s1") {
        rep = verify_s1_closed_form(in.A, 8);
    } else if (c.suite == "bracket-agreement") {
        BracketSuiteOptions o;
        o.trials = trials(o.trials);
        rep = verify_bracket_agreement(in.A, o, c.seed);
    } else if (c.suite == "lie-module") {
        rep = verify_lie_module(in.A, trials(100), c.seed);
    } else if (c.suite == "witt-rep") {
        Field Q = Field::rationals();
        rep = verify_witt_rep({Scalar(Q, 2), Scalar::fraction(Q, 3, 2), Scalar(Q, 1), Scalar(Q, 0)});
    } else {
        throw ParseError("unknown suite '" + c.suite + "'", 0);
    }
    for (const auto& id : rep.identities)
        out.emit("identity", {{"suite", rep.suite},
                              {"name", id.name},
                              {"checked", id.checked},
                              {"failures", id.failures},
                              {"first_failure", id.failures ? json(id.first_failure) : json()}});
    out.emit("verify", {{"suite", rep.suite}, {"seed", c.seed}, {"passed", rep.passed()}});
    if (!rep.passed()) throw VerificationFailed("suite " + rep.suite + " failed");
}

void cmd_charp(const Input& in, Emitter& out) {
    if (in.field.is_rational()) throw DomainError("charp needs --char p");
    auto r = hh2_charp(in.A, in.factored);
    const Poly& h = in.A->h();
    json tors = json::array();
    for (const auto& t : r.torsion_generators) tors.push_back(t.to_string());
    json tops = json::array();
    for (const auto& [slot, order] : r.top_summands)
        tops.push_back({{"slot", slot},
                        {"order", order.is_zero() ? json() : json(order.to_string() + " (t = x^" + std::to_string(r.p) + ")")},
                        {"generator", r.top_monomial(slot, h).to_string()}});
    json gen;
    if (r.free) {
        std::vector<Poly> c(r.p, Poly(in.field));
        c[r.p - 1] = *r.xi * pow(h, r.p - 1);
        gen = WeylElement(in.field, c).to_string();
    }
    out.emit("charp", {{"h", h.to_string()},
                       {"p", r.p},
                       {"gcd", r.gcd_part.to_string()},
                       {"torsion_generators", tors},
                       {"K_basis", strings(r.K_basis)},
                       {"K_rank", r.K_rank},
                       {"K_summand", r.K_summand},
                       {"xi", r.xi ? json(r.xi->to_string()) : json()},
                       {"diagonal", r.diagonal},
                       {"top_summands", tops},
                       {"rho", r.rho ? json(r.rho->to_string()) : json()},
                       {"free", r.free},
                       {"rank", r.rank},
                       {"generator", gen}});
}

int run(const Config& c) {
    Emitter out(c.format == "machine");
    Input in = load(c);
    if (c.command == "report") cmd_report(in, out);
    else if (c.command == "series") cmd_series(in, out);
    else if (c.command == "bracket") cmd_bracket(c, in, out);
    else if (c.command == "verify") cmd_verify(c, in, out);
    else if (c.command == "charp") cmd_charp(in, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild cohomology of A_h = F<x, yh>/(yh x - x yh - h)"};
    app.footer(kDerivationHelp);
    app.set_help_flag("--help", "print this help");
    Config c;
    app.add_option("--char", c.characteristic, "0 or a prime")->default_val(0);
    auto* h = app.add_option("--h", c.h_text, "h(x), e.g. \"x^3*(x-1)^2\"");
    auto* hf = app.add_option("--h-factored", c.h_factored_text, "factored h, e.g. \"x^3,(x-1)^2\"");
    h->excludes(hf);
    hf->excludes(h);
    app.add_option("--seed", c.seed, "seed for random trials")->default_val(1);
    app.add_option("--max-x-deg", c.max_x, "x-degree bound for random elements")->default_val(6)->check(CLI::PositiveNumber);
    app.add_option("--max-yh-deg", c.max_y, "yh-degree bound for random elements")->default_val(4)->check(CLI::PositiveNumber);
    app.add_option("--trials", c.trials, "trials per identity (0: suite default)")->default_val(0);
    app.add_option("--format", c.format, "text or machine")->default_val("text")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--derivation", c.derivation, "derivation for bracket (see below)");
    app.add_option("--class", c.cls, "HH^2 class for bracket, an element in x and yh");
    app.add_option("command", c.command, "report | series | bracket | verify | charp")
        ->required()
        ->check(CLI::IsMember({"report", "series", "bracket", "verify", "charp"}));
    app.add_option("suite", c.suite, "for verify: homotopy | chain | s1 | bracket-agreement | lie-module | witt-rep");

    try {
        app.parse(argc, argv);
        if (c.h_text.empty() && c.h_factored_text.empty()) throw CLI::ValidationError("exactly one of --h and --h-factored is required");
        if (c.characteristic != 0 && !is_prime(c.characteristic))
            throw CLI::ValidationError("--char must be 0 or a prime");
        if (c.command == "verify" && c.suite.empty()) throw CLI::ValidationError("verify needs a suite name");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run(c);
    } catch (const VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
