#include "milnor/rational.hpp"

#include <cctype>

#include "milnor/error.hpp"

namespace milnor {

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    std::string num_str(num);
    if (num_str.front() == '+') num_str.erase(0, 1);
    Integer p(num_str, 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational out(p, q);
    out.canonicalize();
    return out;
}

}  // namespace milnor
