#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "milnor/matrix.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

/// Identifies S_k in n+1 variables, coordinatized by mono_basis(n, k).
struct Ambient {
    int n = 0;
    int degree = 0;

    std::size_t dim() const { return graded_dim(n, degree); }
    bool operator==(const Ambient&) const = default;
};

/// A linear subspace of S_k stored by its reduced row-echelon basis.
///
/// The representation is canonical, so two subspaces are equal exactly when
/// their basis matrices agree entry by entry.
class Subspace {
public:
    /// The zero subspace.
    explicit Subspace(Ambient ambient);

    static Subspace full(Ambient ambient);
    /// Span of the rows of `vectors`.
    static Subspace span(Ambient ambient, const RationalMatrix& vectors);
    static Subspace span(Ambient ambient, const std::vector<std::vector<Rational>>& vectors);
    static Subspace span(std::span<const HomogeneousPolynomial> polys);
    /// Wraps a matrix already known to be in reduced echelon form; validated.
    static Subspace from_rref(Ambient ambient, RationalMatrix basis);

    const Ambient& ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t codim() const { return ambient_.dim() - dim(); }
    const RationalMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// Complement of pivots(); these index the quotient coordinates.
    std::vector<std::size_t> free_columns() const;

    std::vector<HomogeneousPolynomial> basis_polynomials() const;

    /// v minus its projection along the basis; supported on free_columns().
    std::vector<Rational> reduce(std::span<const Rational> v) const;
    /// Coordinates of v in S_k / this, indexed like free_columns().
    std::vector<Rational> quotient_coords(std::span<const Rational> v) const;
    bool contains_vector(std::span<const Rational> v) const;
    bool contains_polynomial(const HomogeneousPolynomial& f) const;

    bool operator==(const Subspace& other) const = default;

private:
    Subspace(Ambient ambient, RationalMatrix basis, std::vector<std::size_t> pivots);

    Ambient ambient_;
    RationalMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Kernel of v ↦ m v. Columns of m are indexed by the domain ambient.
Subspace kernel(const RationalMatrix& m, Ambient domain);
/// Column space of m inside the codomain ambient.
Subspace image(const RationalMatrix& m, Ambient codomain);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// True iff b ⊆ a.
bool contains(const Subspace& a, const Subspace& b);
bool equal(const Subspace& a, const Subspace& b);

/// E^⊥ for the apolar pairing ⟨x^α, x^β⟩ = α! δ_{αβ} on S_k.
Subspace orthogonal_complement(const Subspace& e);

}  // namespace milnor
