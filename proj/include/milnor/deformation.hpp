#pragma once

#include <cstddef>
#include <vector>

#include "milnor/graded_ideal.hpp"

namespace milnor {

/// (I_W)_k together with, for each canonical basis vector b_j, one tuple
/// (u_0..u_n) of degree k-(d-1) forms with b_j = Σ u_i g_i, and a basis of
/// the syzygies Σ u_i g_i = 0 in that degree.
struct PieceRepresentation {
    int k = 0;
    Subspace piece{Ambient{}};
    std::vector<std::vector<HomogeneousPolynomial>> coefficients;
    std::vector<std::vector<HomogeneousPolynomial>> syzygies;
};

PieceRepresentation represent_piece(const GeneratorTuple& w, int k);

/// Σ u_i h_i.
HomogeneousPolynomial apply_representation(const std::vector<HomogeneousPolynomial>& u,
                                           const std::vector<HomogeneousPolynomial>& h);

/// Tangent vector to the Grassmannian at W: h ∈ Hom(W, S_{d-1}/W), stored
/// as h_i = h(g_i) reduced against span(W).
class TangentVectorW {
public:
    TangentVectorW(const GeneratorTuple& w, std::vector<HomogeneousPolynomial> h);
    const std::vector<HomogeneousPolynomial>& components() const { return h_; }
    bool is_zero() const;

private:
    std::vector<HomogeneousPolynomial> h_;
};

/// Tangent vector to P(S_d) at f: h modulo ℂf, with the coefficient of the
/// leading monomial of f reduced to zero.
class TangentVectorF {
public:
    TangentVectorF(const HomogeneousPolynomial& f, const HomogeneousPolynomial& h);
    const HomogeneousPolynomial& representative() const { return h_; }

private:
    HomogeneousPolynomial h_;
};

/// Matrix of b ↦ Σ u_i h_i mod (I_W)_k from (I_W)_k to S_k/(I_W)_k: column j
/// is the image of the j-th canonical basis vector in quotient coordinates.
RationalMatrix tangent_image_W(const GeneratorTuple& w, const TangentVectorW& h, int k);
RationalMatrix tangent_image_W(const PieceRepresentation& rep, const TangentVectorW& h);

struct TangentKernel {
    int k = 0;
    std::size_t tangent_dim = 0;
    std::size_t kernel_dim = 0;
    /// For the W map each entry holds n+1 components; for the f map, one.
    std::vector<std::vector<HomogeneousPolynomial>> basis;
};

/// Kernel of the differential of W ↦ (I_W)_k. Requires W complete
/// intersection and d-1 <= k <= T.
TangentKernel dpsi_W_kernel(const GeneratorTuple& w, int k);

/// Kernel of the differential of f ↦ E_k(f) on S_d/ℂf. Requires f smooth
/// and d-1 <= k <= T.
TangentKernel dpsi_f_kernel(const HomogeneousPolynomial& f, int k);

/// span⟨g_0 + t h_0, ..., g_n + t h_n⟩ as a generator tuple.
GeneratorTuple perturb(const GeneratorTuple& w, const std::vector<HomogeneousPolynomial>& h,
                       const Rational& t);

}  // namespace milnor
