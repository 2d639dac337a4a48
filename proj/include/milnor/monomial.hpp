#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace milnor {

/// Binomial coefficient C(top, bottom); zero when bottom is out of range.
std::size_t binomial(int top, int bottom);

/// dim S_k for n+1 variables, i.e. C(n+k, n). Zero for negative k.
std::size_t graded_dim(int n, int k);

/// Multidegree of a monomial in the variables x0..xn.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> exponents);

    /// x_i^power in n+1 variables.
    static ExponentVector unit(int n, int i, int power = 1);

    int n() const { return static_cast<int>(exps_.size()) - 1; }
    int degree() const { return degree_; }
    int operator[](std::size_t i) const { return exps_[i]; }
    std::span<const int> exponents() const { return exps_; }

    ExponentVector operator+(const ExponentVector& other) const;
    /// Componentwise difference; caller guarantees divisibility.
    ExponentVector operator-(const ExponentVector& other) const;
    bool divides(const ExponentVector& other) const;

    /// α! = Π α_i!
    std::uint64_t factorial() const;

    bool operator==(const ExponentVector& other) const = default;

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Graded lex: lower degree first; within a degree, lexicographically larger
/// exponent vectors first (x0^2 before x0*x1 before x1^2).
struct GrlexBefore {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// All monomials of degree k in n+1 variables, in graded lex order.
/// The returned reference stays valid for the lifetime of the process.
const std::vector<ExponentVector>& mono_basis(int n, int k);

/// Position of e inside mono_basis(e.n(), e.degree()).
std::size_t monomial_rank(const ExponentVector& e);

}  // namespace milnor
