#pragma once

#include <cstdint>
#include <vector>

#include "milnor/reconstruction.hpp"

namespace milnor {

/// Direct-sum (Sebastiani–Thom) summary of a smooth form. The summand count
/// s of the finest splitting equals the fiber dimension.
struct STReport {
    bool is_st = false;
    std::size_t s = 0;
    FiberResult fiber;
};

/// Requires f smooth (PreconditionError otherwise).
STReport st_report(const HomogeneousPolynomial& f);

/// Finest partition of {0..n} such that each monomial of f uses variables
/// from one part only. Splits visible in the given coordinates only.
std::vector<std::vector<int>> coordinate_split(const HomogeneousPolynomial& f);

/// Fermat form plus a random integer perturbation with entries in
/// [-coeff_bound, coeff_bound], rejected until smooth (and, if requested,
/// not a direct sum). Deterministic in seed. PreconditionError when
/// max_attempts candidates all fail.
HomogeneousPolynomial random_smooth(int n, int d, std::uint64_t seed, bool require_non_st,
                                    int coeff_bound = 3, int max_attempts = 200);

/// x_i^{d-1} plus random perturbations, rejected until the tuple is a
/// complete intersection.
GeneratorTuple random_ci_tuple(int n, int d, std::uint64_t seed, int coeff_bound = 3,
                               int max_attempts = 200);

/// Nonzero form with independent uniform coefficients in [-coeff_bound, coeff_bound].
HomogeneousPolynomial random_form(int n, int degree, std::uint64_t seed, int coeff_bound = 3);

/// Integer matrix of determinant ±1 built from random elementary operations.
std::vector<std::vector<Rational>> random_unimodular(int n, std::uint64_t seed, int steps = 6);

}  // namespace milnor
