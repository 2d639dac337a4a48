#include "milnor/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

#include "milnor/error.hpp"

namespace milnor {

namespace {

struct ParsedTerm {
    Rational coeff;
    std::vector<std::pair<int, int>> factors;  // (variable, exponent)
};

class Parser {
public:
    explicit Parser(std::string_view text) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
        }
    }

    std::vector<ParsedTerm> parse() {
        if (text_.empty()) fail("empty polynomial");
        std::vector<ParsedTerm> terms;
        bool negative = false;
        if (peek() == '+' || peek() == '-') negative = get() == '-';
        terms.push_back(term(negative));
        while (!done()) {
            const char c = get();
            if (c != '+' && c != '-') fail(std::string("expected '+' or '-', got '") + c + "'");
            terms.push_back(term(c == '-'));
        }
        return terms;
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    char get() {
        if (done()) fail("unexpected end of input");
        return text_[pos_++];
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string digits() {
        std::string out;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(text_[pos_++]);
        if (out.empty()) fail("expected digits");
        return out;
    }

    int small_int() {
        const std::string s = digits();
        if (s.size() > 6) fail("integer too large: " + s);
        return std::stoi(s);
    }

    ParsedTerm term(bool negative) {
        ParsedTerm t{Rational(1), {}};
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string literal = digits();
            if (peek() == '/') {
                ++pos_;
                literal += "/" + digits();
            }
            t.coeff = parse_rational(literal);
            if (peek() != '*') return finish(std::move(t), negative);
            ++pos_;
        }
        factors(t);
        return finish(std::move(t), negative);
    }

    static ParsedTerm finish(ParsedTerm t, bool negative) {
        if (negative) t.coeff = -t.coeff;
        return t;
    }

    void factors(ParsedTerm& t) {
        t.factors.push_back(factor());
        while (peek() == '*') {
            ++pos_;
            t.factors.push_back(factor());
        }
    }

    std::pair<int, int> factor() {
        if (get() != 'x') fail("expected variable 'x<index>'");
        const int var = small_int();
        int exponent = 1;
        if (peek() == '^') {
            ++pos_;
            exponent = small_int();
        }
        return {var, exponent};
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace

HomogeneousPolynomial parse_polynomial(std::string_view text, std::optional<int> n,
                                       std::optional<int> degree) {
    const auto terms = Parser(text).parse();

    int max_var = 0;
    for (const auto& t : terms) {
        for (const auto& [var, exponent] : t.factors) max_var = std::max(max_var, var);
    }
    const int ring_n = n.value_or(max_var);
    if (ring_n < 0) throw InputError("negative variable count");
    if (max_var > ring_n) {
        throw InputError("variable x" + std::to_string(max_var) + " outside ring x0..x" +
                         std::to_string(ring_n));
    }

    std::optional<int> term_degree;
    HomogeneousPolynomial::TermMap map;
    for (const auto& t : terms) {
        std::vector<int> exps(static_cast<std::size_t>(ring_n + 1), 0);
        for (const auto& [var, exponent] : t.factors) exps[static_cast<std::size_t>(var)] += exponent;
        ExponentVector e(std::move(exps));
        if (term_degree && *term_degree != e.degree()) {
            throw InputError("inhomogeneous polynomial: terms of degree " + std::to_string(*term_degree) +
                             " and " + std::to_string(e.degree()));
        }
        term_degree = e.degree();
        auto [it, inserted] = map.try_emplace(e, t.coeff);
        if (!inserted) it->second += t.coeff;
    }
    std::erase_if(map, [](const auto& kv) { return is_zero(kv.second); });

    if (map.empty()) return HomogeneousPolynomial(ring_n, degree.value_or(*term_degree));
    if (degree && *degree != *term_degree) {
        throw InputError("expected a form of degree " + std::to_string(*degree) + ", got degree " +
                         std::to_string(*term_degree));
    }
    return HomogeneousPolynomial(ring_n, *term_degree, std::move(map));
}

std::string format_polynomial(const HomogeneousPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const Rational magnitude = abs(c);
        const bool constant = e.degree() == 0;
        bool need_star = false;
        if (magnitude != 1 || constant) {
            out << to_string(magnitude);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.exponents().size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << '*';
            out << 'x' << i;
            if (e[i] > 1) out << '^' << e[i];
            need_star = true;
        }
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& out, const HomogeneousPolynomial& f) { return out << format_polynomial(f); }

}  // namespace milnor
