#include "ahh/parse.hpp"

#include "ahh/expr_parser.hpp"

#include <cctype>

namespace ahh {

Poly parse_poly(std::string_view text, Field f) {
    detail::ExprParser<Poly> p(
        text, f,
        [f](const std::string& id, std::size_t at) -> Poly {
            if (id == "x") return Poly::x(f);
            throw ParseError("unknown variable '" + id + "'", at);
        },
        [](const Scalar& c) { return Poly::constant(c); });
    return p.parse();
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// "base^k" where base is a single atom: x, a number, or one parenthesised group.
bool split_power(const std::string& t, std::string& base, unsigned& mult) {
    std::size_t caret = t.rfind('^');
    if (caret == std::string::npos) return false;
    std::string exp = trim(std::string_view(t).substr(caret + 1));
    if (exp.empty()) return false;
    for (char c : exp)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    std::string b = trim(std::string_view(t).substr(0, caret));
    if (b.empty()) return false;
    bool atom = false;
    if (b.front() == '(' && b.back() == ')') {
        int depth = 0;
        atom = true;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] == '(') ++depth;
            if (b[i] == ')') --depth;
            if (depth == 0 && i + 1 < b.size()) {
                atom = false;
                break;
            }
        }
    } else {
        atom = b.find_first_of("+-*^/() \t") == std::string::npos;
    }
    if (!atom) return false;
    base = b;
    mult = static_cast<unsigned>(std::stoul(exp));
    return true;
}

}  // namespace

FactoredPoly parse_factored(std::string_view text, Field f) {
    std::vector<std::pair<std::string, std::size_t>> terms;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')') --depth;
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            terms.emplace_back(std::string(text.substr(start, i - start)), start);
            start = i + 1;
        }
    }
    Scalar unit(f, 1);
    std::vector<Factor> factors;
    for (auto& [raw, offset] : terms) {
        std::string t = trim(raw);
        if (t.empty()) throw ParseError("empty factor", offset);
        std::string base = t;
        unsigned mult = 1;
        split_power(t, base, mult);
        if (mult == 0) throw ParseError("factor multiplicity must be positive", offset);
        Poly u;
        try {
            u = parse_poly(base, f);
        } catch (const ParseError& e) {
            throw ParseError(std::string("in factor '") + t + "': " + e.what(), offset + e.position);
        }
        if (u.is_zero()) throw ParseError("zero factor", offset);
        Scalar lc = u.lead();
        for (unsigned k = 0; k < mult; ++k) unit *= lc;
        if (u.degree() == 0) continue;
        factors.push_back({u.monic(), mult});
    }
    return FactoredPoly::make(unit, std::move(factors), true);
}

}  // namespace ahh
