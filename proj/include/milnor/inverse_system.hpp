#pragma once

#include "milnor/graded_ideal.hpp"

namespace milnor {

/// Normalized generator of the line (I_W)_T^⊥ in S_T. Read as a form in the
/// dual variables it is the Macaulay inverse system of S/I_W.
struct AssociatedForm {
    int n = 0;
    int d = 0;
    int socle = 0;
    HomogeneousPolynomial form{0, 0};
};

/// Requires W to be a complete intersection (PreconditionError otherwise).
AssociatedForm associated_form(const GeneratorTuple& w);

/// Normalized spanning form of the orthogonal complement of a degree-T piece;
/// PreconditionError unless that complement is a line.
HomogeneousPolynomial socle_generator(const Subspace& top_piece);

/// {g ∈ S_k : g · B = 0}, the kernel of the catalecticant S_k → S_{m-k}.
Subspace apolar_piece(const HomogeneousPolynomial& b, int k);

/// Compares apolar_piece(B_W, k) with ideal_piece(W, k) for 0 <= k <= T+1.
bool verify_inverse_system(const GeneratorTuple& w);

}  // namespace milnor
