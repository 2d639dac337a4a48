#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the row-reduction or ideal code they are used to check.

#include <cstddef>
#include <vector>

#include "milnor/polynomial.hpp"

namespace milnor::oracle {

/// Every exponent vector in [0,k]^{n+1} with sum k, found by odometer scan.
std::vector<std::vector<int>> monomials_by_scan(int n, int k);

/// Number of vectors in [0, d-2]^{n+1} with sum k (coefficient of t^k in
/// (1 + ... + t^{d-2})^{n+1}).
std::size_t hilbert_by_scan(int n, int d, int k);

/// Rank by fraction-free (Bareiss) elimination on a copy scaled to integers.
std::size_t bareiss_rank(const std::vector<std::vector<Rational>>& rows);

/// Determinant by cofactor expansion.
Rational laplace_det(const std::vector<std::vector<Rational>>& m);

/// Rank of the span of the given forms (all of one degree).
std::size_t forms_rank(const std::vector<HomogeneousPolynomial>& forms);

/// dim span{ u·g : g in gens, u monomial of degree k - deg g }, via Bareiss.
std::size_t ideal_dim_by_products(const std::vector<HomogeneousPolynomial>& gens, int n, int k);

/// Whether v lies in span(forms): rank does not grow when v is appended.
bool in_span(const std::vector<HomogeneousPolynomial>& forms, const HomogeneousPolynomial& v);

/// All products u·g (u monomial of degree k - deg g) for the given forms.
std::vector<HomogeneousPolynomial> products(const std::vector<HomogeneousPolynomial>& gens, int n, int k);

}  // namespace milnor::oracle
