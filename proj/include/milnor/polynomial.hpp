#pragma once

#include <map>
#include <span>
#include <vector>

#include "milnor/monomial.hpp"
#include "milnor/rational.hpp"

namespace milnor {

/// A form of fixed degree in x0..xn with exact rational coefficients.
///
/// The same type stands for dual forms Q(z0..zn) when used as the right
/// argument of polar_apply; the role is positional. Values are immutable.
class HomogeneousPolynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, GrlexBefore>;

    /// The zero form of the given degree.
    HomogeneousPolynomial(int n, int degree);
    /// Zero coefficients are dropped; every exponent must have the given degree.
    HomogeneousPolynomial(int n, int degree, TermMap terms);

    static HomogeneousPolynomial monomial(const ExponentVector& e, const Rational& coeff = 1);
    static HomogeneousPolynomial variable(int n, int i);
    /// Inverse of coords(): entries indexed by mono_basis(n, degree).
    static HomogeneousPolynomial from_coords(int n, int degree, std::span<const Rational> coords);

    int n() const { return n_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const ExponentVector& e) const;

    /// Dense coordinates in mono_basis(n, degree) order.
    std::vector<Rational> coords() const;

    /// First term in graded lex order; throws on the zero form.
    const ExponentVector& leading_monomial() const;
    const Rational& leading_coeff() const;
    /// Scaled so the leading coefficient is 1 (projective representative).
    HomogeneousPolynomial normalized() const;

    HomogeneousPolynomial operator+(const HomogeneousPolynomial& other) const;
    HomogeneousPolynomial operator-(const HomogeneousPolynomial& other) const;
    HomogeneousPolynomial operator-() const;
    HomogeneousPolynomial operator*(const Rational& scalar) const;

    bool operator==(const HomogeneousPolynomial& other) const = default;

private:
    int n_;
    int degree_;
    TermMap terms_;
};

HomogeneousPolynomial operator*(const Rational& scalar, const HomogeneousPolynomial& f);

HomogeneousPolynomial multiply(const HomogeneousPolynomial& f, const HomogeneousPolynomial& g);
inline HomogeneousPolynomial operator*(const HomogeneousPolynomial& f, const HomogeneousPolynomial& g) {
    return multiply(f, g);
}

HomogeneousPolynomial power(const HomogeneousPolynomial& f, int exponent);

/// ∂f/∂x_i.
HomogeneousPolynomial partial(const HomogeneousPolynomial& f, int i);

/// f(∂/∂z0, ..., ∂/∂zn) applied to Q. Degree of the result is deg Q - deg f.
HomogeneousPolynomial polar_apply(const HomogeneousPolynomial& f, const HomogeneousPolynomial& q);

/// ⟨f, q⟩ = Σ α! a_α b_α for forms of equal degree.
Rational apolar_inner(const HomogeneousPolynomial& f, const HomogeneousPolynomial& q);

/// Σ x_i ∂f/∂x_i.
HomogeneousPolynomial euler_recover(const HomogeneousPolynomial& f);
/// Euler identity Σ x_i ∂f/∂x_i = d·f.
bool euler_check(const HomogeneousPolynomial& f);

Rational evaluate(const HomogeneousPolynomial& f, std::span<const Rational> point);

/// f(A x): x_i is replaced by Σ_j A[i][j] x_j. A is (n+1)×(n+1).
HomogeneousPolynomial substitute_linear(const HomogeneousPolynomial& f,
                                        const std::vector<std::vector<Rational>>& a);

/// Renames x_i to x_{i+offset} inside a ring with new_n+1 variables.
HomogeneousPolynomial embed(const HomogeneousPolynomial& f, int new_n, int offset);

}  // namespace milnor
