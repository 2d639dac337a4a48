#pragma once

#include <cstddef>
#include <vector>

#include "milnor/graded_ideal.hpp"

namespace milnor {

/// The linear space {g ∈ S_d : ∂g/∂x_i ∈ span(W) for all i}, in canonical
/// (reduced echelon) form. For W spanned by the partials of a smooth f this
/// is the span of the summands of the finest direct-sum splitting of f.
struct FiberResult {
    int n = 0;
    int d = 0;
    std::vector<HomogeneousPolynomial> basis;

    std::size_t s() const { return basis.size(); }
    Subspace subspace() const;
};

/// span(S_{m-k} · E), computed one degree at a time.
Subspace lift_piece(const Subspace& e, int m);

/// Recovers W from E = (I_W)_k, d-1 <= k <= T: lift to degree T, take the
/// apolar dual line B, and read W off as the degree-(d-1) part of B^⊥.
///
/// Throws InputError for out-of-range k or a mismatched ambient, and
/// PreconditionError when E is not the degree-k piece of a complete
/// intersection generated in degree d-1.
GeneratorTuple recover_generators(const Subspace& e, int k, int n, int d);

FiberResult fiber(const GeneratorTuple& w);

/// fiber(recover_generators(E, k, n, d)). With s == 1 the single basis
/// element is the normalized polynomial whose Jacobian piece E is.
FiberResult reconstruct_poly(const Subspace& e, int k, int n, int d);

struct ContainmentCheck {
    bool hypothesis = false;  ///< E_k(h) ⊆ E_k(f)
    bool conclusion = false;  ///< h is a scalar multiple of f
};

/// Evaluates both sides of "E_k(h) ⊆ E_k(f) implies h = f projectively".
/// f must be smooth and not a direct sum; h must be nonzero.
ContainmentCheck containment_implies_equal(const HomogeneousPolynomial& h, const HomogeneousPolynomial& f,
                                           int k);

/// E_k(h) for any h, including h with dependent partials.
Subspace jacobian_span_piece(const HomogeneousPolynomial& h, int k);

}  // namespace milnor
