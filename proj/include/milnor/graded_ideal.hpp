#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "milnor/polynomial.hpp"
#include "milnor/subspace.hpp"

namespace milnor {

/// T = (n+1)(d-2), the socle degree of S/I_W for a complete intersection W.
int socle_degree(int n, int d);

/// n+1 linearly independent forms of degree d-1; a point W of the
/// Grassmannian of (n+1)-planes in S_{d-1}, and the generators of I_W.
class GeneratorTuple {
public:
    GeneratorTuple(int n, int d, std::vector<HomogeneousPolynomial> gens);

    int n() const { return n_; }
    int d() const { return d_; }
    int socle() const { return socle_degree(n_, d_); }
    const std::vector<HomogeneousPolynomial>& gens() const { return gens_; }
    /// span(W) inside S_{d-1}.
    const Subspace& span() const { return span_; }

private:
    int n_;
    int d_;
    std::vector<HomogeneousPolynomial> gens_;
    Subspace span_;
};

/// Hilbert function of S/I for a complete intersection of n+1 forms of
/// degree d-1: coefficients of ((1 - t^{d-1}) / (1 - t))^{n+1}.
struct HilbertProfile {
    int n = 0;
    int d = 0;
    int socle = 0;
    std::vector<std::size_t> values;  ///< a(0), ..., a(T+1)

    std::size_t a(int k) const;
    /// dim S_k - a(k), the dimension of the ideal in degree k.
    std::size_t b(int k) const;
};

/// Cached per (n, d); safe to call concurrently. Requires n >= 1, d >= 2.
const HilbertProfile& hilbert_profile(int n, int d);

/// Degree-k piece of the ideal generated by forms of one common degree e:
/// span{ u g : u monomial of degree k - e }. Zero below degree e.
Subspace ideal_piece(std::span<const HomogeneousPolynomial> gens, int n, int k);
Subspace ideal_piece(const GeneratorTuple& w, int k);

/// The partials ∂f/∂x_0..∂f/∂x_n. Throws PreconditionError if they are
/// linearly dependent (f is a cone over a lower-dimensional form).
GeneratorTuple jacobian_gens(const HomogeneousPolynomial& f);
/// E_k(f) = J(f) ∩ S_k. Same precondition as jacobian_gens.
Subspace jacobian_piece(const HomogeneousPolynomial& f, int k);

/// Artinian test: the ideal fills S_{T+1}.
bool is_complete_intersection(const GeneratorTuple& w);
bool is_smooth(const HomogeneousPolynomial& f);

}  // namespace milnor
