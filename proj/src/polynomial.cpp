#include "milnor/polynomial.hpp"

#include <string>
#include <utility>

#include "milnor/error.hpp"

namespace milnor {

namespace {

void require_same_ring(const HomogeneousPolynomial& f, const HomogeneousPolynomial& g) {
    if (f.n() != g.n()) {
        throw InputError("variable count mismatch: n=" + std::to_string(f.n()) + " vs n=" +
                         std::to_string(g.n()));
    }
}

void accumulate(HomogeneousPolynomial::TermMap& terms, const ExponentVector& e, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) terms.erase(it);
    }
}

// β!/(β-α)! for α ≤ β.
Integer falling_factorial(const ExponentVector& beta, const ExponentVector& alpha) {
    Integer out = 1;
    for (std::size_t i = 0; i < beta.exponents().size(); ++i) {
        for (int j = 0; j < alpha[i]; ++j) out *= beta[i] - j;
    }
    return out;
}

}  // namespace

HomogeneousPolynomial::HomogeneousPolynomial(int n, int degree) : n_(n), degree_(degree) {
    if (n < 0) throw InputError("need at least one variable");
    if (degree < 0) throw InputError("negative degree");
}

HomogeneousPolynomial::HomogeneousPolynomial(int n, int degree, TermMap terms)
    : HomogeneousPolynomial(n, degree) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.n() != n) throw InputError("term has wrong variable count");
        if (it->first.degree() != degree) {
            throw InputError("inhomogeneous term of degree " + std::to_string(it->first.degree()) +
                             " in a form of degree " + std::to_string(degree));
        }
        if (milnor::is_zero(it->second)) {
            it = terms.erase(it);
        } else {
            ++it;
        }
    }
    terms_ = std::move(terms);
}

HomogeneousPolynomial HomogeneousPolynomial::monomial(const ExponentVector& e, const Rational& coeff) {
    TermMap terms;
    terms.emplace(e, coeff);
    return HomogeneousPolynomial(e.n(), e.degree(), std::move(terms));
}

HomogeneousPolynomial HomogeneousPolynomial::variable(int n, int i) {
    return monomial(ExponentVector::unit(n, i));
}

HomogeneousPolynomial HomogeneousPolynomial::from_coords(int n, int degree,
                                                         std::span<const Rational> coords) {
    const auto& basis = mono_basis(n, degree);
    if (coords.size() != basis.size()) throw InputError("coordinate vector has wrong length");
    HomogeneousPolynomial out(n, degree);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!milnor::is_zero(coords[i])) out.terms_.emplace_hint(out.terms_.end(), basis[i], coords[i]);
    }
    return out;
}

Rational HomogeneousPolynomial::coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> HomogeneousPolynomial::coords() const {
    std::vector<Rational> out(graded_dim(n_, degree_));
    for (const auto& [e, c] : terms_) out[monomial_rank(e)] = c;
    return out;
}

const ExponentVector& HomogeneousPolynomial::leading_monomial() const {
    if (terms_.empty()) throw InputError("zero form has no leading monomial");
    return terms_.begin()->first;
}

const Rational& HomogeneousPolynomial::leading_coeff() const {
    if (terms_.empty()) throw InputError("zero form has no leading coefficient");
    return terms_.begin()->second;
}

HomogeneousPolynomial HomogeneousPolynomial::normalized() const {
    Rational inv = 1 / leading_coeff();
    return *this * inv;
}

HomogeneousPolynomial HomogeneousPolynomial::operator+(const HomogeneousPolynomial& other) const {
    require_same_ring(*this, other);
    if (degree_ != other.degree_) {
        // the zero form is allowed to stand in for zero of any degree
        if (is_zero()) return other;
        if (other.is_zero()) return *this;
        throw InputError("cannot add forms of different degrees");
    }
    HomogeneousPolynomial out = *this;
    for (const auto& [e, c] : other.terms_) accumulate(out.terms_, e, c);
    return out;
}

HomogeneousPolynomial HomogeneousPolynomial::operator-() const { return *this * Rational(-1); }

HomogeneousPolynomial HomogeneousPolynomial::operator-(const HomogeneousPolynomial& other) const {
    return *this + (-other);
}

HomogeneousPolynomial HomogeneousPolynomial::operator*(const Rational& scalar) const {
    HomogeneousPolynomial out(n_, degree_);
    if (milnor::is_zero(scalar)) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * scalar);
    return out;
}

HomogeneousPolynomial operator*(const Rational& scalar, const HomogeneousPolynomial& f) {
    return f * scalar;
}

HomogeneousPolynomial multiply(const HomogeneousPolynomial& f, const HomogeneousPolynomial& g) {
    require_same_ring(f, g);
    HomogeneousPolynomial::TermMap terms;
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) accumulate(terms, ef + eg, cf * cg);
    }
    return HomogeneousPolynomial(f.n(), f.degree() + g.degree(), std::move(terms));
}

HomogeneousPolynomial power(const HomogeneousPolynomial& f, int exponent) {
    if (exponent < 0) throw InputError("negative exponent");
    HomogeneousPolynomial out = HomogeneousPolynomial::monomial(ExponentVector::unit(f.n(), 0, 0));
    for (int i = 0; i < exponent; ++i) out = multiply(out, f);
    return out;
}

HomogeneousPolynomial partial(const HomogeneousPolynomial& f, int i) {
    if (i < 0 || i > f.n()) throw InputError("variable index " + std::to_string(i) + " out of range");
    if (f.degree() == 0) throw InputError("cannot differentiate a constant form");
    HomogeneousPolynomial::TermMap terms;
    const auto xi = ExponentVector::unit(f.n(), i);
    for (const auto& [e, c] : f.terms()) {
        const int ei = e[static_cast<std::size_t>(i)];
        if (ei == 0) continue;
        terms.emplace(e - xi, c * ei);
    }
    return HomogeneousPolynomial(f.n(), f.degree() - 1, std::move(terms));
}

HomogeneousPolynomial polar_apply(const HomogeneousPolynomial& f, const HomogeneousPolynomial& q) {
    require_same_ring(f, q);
    if (f.degree() > q.degree()) {
        throw InputError("polar action needs deg f <= deg Q, got " + std::to_string(f.degree()) +
                         " > " + std::to_string(q.degree()));
    }
    HomogeneousPolynomial::TermMap terms;
    for (const auto& [alpha, a] : f.terms()) {
        for (const auto& [beta, b] : q.terms()) {
            if (!alpha.divides(beta)) continue;
            accumulate(terms, beta - alpha, a * b * Rational(falling_factorial(beta, alpha)));
        }
    }
    return HomogeneousPolynomial(f.n(), q.degree() - f.degree(), std::move(terms));
}

Rational apolar_inner(const HomogeneousPolynomial& f, const HomogeneousPolynomial& q) {
    require_same_ring(f, q);
    if (f.degree() != q.degree()) throw InputError("apolar inner product needs equal degrees");
    Rational out = 0;
    for (const auto& [alpha, a] : f.terms()) {
        auto it = q.terms().find(alpha);
        if (it == q.terms().end()) continue;
        out += a * it->second * Rational(Integer(std::to_string(alpha.factorial())));
    }
    return out;
}

HomogeneousPolynomial euler_recover(const HomogeneousPolynomial& f) {
    HomogeneousPolynomial out(f.n(), f.degree());
    if (f.degree() == 0) return out;
    for (int i = 0; i <= f.n(); ++i) {
        out = out + multiply(HomogeneousPolynomial::variable(f.n(), i), partial(f, i));
    }
    return out;
}

bool euler_check(const HomogeneousPolynomial& f) {
    return euler_recover(f) == f * Rational(f.degree());
}

Rational evaluate(const HomogeneousPolynomial& f, std::span<const Rational> point) {
    if (point.size() != static_cast<std::size_t>(f.n() + 1)) throw InputError("point has wrong length");
    Rational out = 0;
    for (const auto& [e, c] : f.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (int j = 0; j < e[i]; ++j) term *= point[i];
        }
        out += term;
    }
    return out;
}

HomogeneousPolynomial substitute_linear(const HomogeneousPolynomial& f,
                                        const std::vector<std::vector<Rational>>& a) {
    const int n = f.n();
    const auto size = static_cast<std::size_t>(n + 1);
    if (a.size() != size) throw InputError("substitution matrix has wrong size");
    std::vector<HomogeneousPolynomial> images;
    images.reserve(size);
    for (const auto& row : a) {
        if (row.size() != size) throw InputError("substitution matrix has wrong size");
        images.push_back(HomogeneousPolynomial::from_coords(n, 1, row));
    }
    HomogeneousPolynomial out(n, f.degree());
    for (const auto& [e, c] : f.terms()) {
        HomogeneousPolynomial term = HomogeneousPolynomial::monomial(ExponentVector::unit(n, 0, 0), c);
        for (std::size_t i = 0; i < size; ++i) term = multiply(term, power(images[i], e[i]));
        out = out + term;
    }
    return out;
}

HomogeneousPolynomial embed(const HomogeneousPolynomial& f, int new_n, int offset) {
    if (offset < 0 || offset + f.n() > new_n) throw InputError("embedding does not fit");
    HomogeneousPolynomial::TermMap terms;
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> shifted(static_cast<std::size_t>(new_n + 1), 0);
        for (int i = 0; i <= f.n(); ++i) {
            shifted[static_cast<std::size_t>(i + offset)] = e[static_cast<std::size_t>(i)];
        }
        terms.emplace(ExponentVector(std::move(shifted)), c);
    }
    return HomogeneousPolynomial(new_n, f.degree(), std::move(terms));
}

}  // namespace milnor
