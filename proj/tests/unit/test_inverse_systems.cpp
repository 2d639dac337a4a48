#include <gtest/gtest.h>

#include "milnor/error.hpp"
#include "milnor/inverse_system.hpp"
#include "milnor/poly_io.hpp"
#include "milnor/st_analysis.hpp"

using namespace milnor;

namespace {

HomogeneousPolynomial P(const char* text, int n) { return parse_polynomial(text, n); }

}  // namespace

TEST(AssociatedForm, MonomialSquaresInThreeVariables) {
    const GeneratorTuple w(2, 3, {P("x0^2", 2), P("x1^2", 2), P("x2^2", 2)});
    const auto b = associated_form(w);
    EXPECT_EQ(b.socle, 3);
    EXPECT_EQ(b.form, P("x0*x1*x2", 2));
}

TEST(AssociatedForm, MonomialSquaresInTwoVariables) {
    const GeneratorTuple w(1, 3, {P("x0^2", 1), P("x1^2", 1)});
    EXPECT_EQ(associated_form(w).form, P("x0*x1", 1));
}

TEST(AssociatedForm, RejectsNonCompleteIntersection) {
    const GeneratorTuple cone(2, 3, {P("x0^2", 2), P("x0*x1", 2), P("x0*x2", 2)});
    EXPECT_THROW(associated_form(cone), PreconditionError);
}

TEST(AssociatedForm, IsNormalizedAndOrthogonalToTopPiece) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto w = random_ci_tuple(2, 4, seed);
        const auto b = associated_form(w);
        EXPECT_EQ(b.form.degree(), 6);
        EXPECT_EQ(b.form.leading_coeff(), 1);
        for (const auto& g : ideal_piece(w, 6).basis_polynomials()) EXPECT_EQ(apolar_inner(g, b.form), 0);
    }
}

TEST(ApolarPiece, Examples) {
    const auto b = P("x0*x1*x2", 2);
    const std::vector<HomogeneousPolynomial> squares{P("x0^2", 2), P("x1^2", 2), P("x2^2", 2)};
    EXPECT_EQ(apolar_piece(b, 2), Subspace::span(squares));
    EXPECT_EQ(apolar_piece(b, 4), Subspace::full(Ambient{2, 4}));

    const std::vector<HomogeneousPolynomial> x1{P("x1", 1)};
    EXPECT_EQ(apolar_piece(P("x0^2", 1), 1), Subspace::span(x1));
}

TEST(ApolarPiece, ElementsAnnihilateTheForm) {
    const auto b = random_form(2, 5, 3, 2);
    for (int k = 0; k <= 6; ++k) {
        const auto piece = apolar_piece(b, k);
        for (const auto& g : piece.basis_polynomials()) {
            if (k <= 5) EXPECT_TRUE(polar_apply(g, b).is_zero());
        }
    }
}

TEST(ApolarPiece, FormsAnIdeal) {
    const auto b = associated_form(random_ci_tuple(2, 4, 7)).form;
    for (int k = 0; k < 7; ++k) {
        const auto lower = apolar_piece(b, k);
        const auto upper = apolar_piece(b, k + 1);
        for (const auto& g : lower.basis_polynomials()) {
            for (int i = 0; i <= 2; ++i) {
                EXPECT_TRUE(upper.contains_polynomial(multiply(HomogeneousPolynomial::variable(2, i), g)));
            }
        }
    }
}

TEST(VerifyInverseSystem, MonomialAndRandomQuartic) {
    EXPECT_TRUE(verify_inverse_system(GeneratorTuple(2, 3, {P("x0^2", 2), P("x1^2", 2), P("x2^2", 2)})));
    const auto f = random_smooth(2, 4, 1, false);
    EXPECT_TRUE(verify_inverse_system(jacobian_gens(f)));
}

TEST(VerifyInverseSystem, DimensionsAndSocleLine) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto w = random_ci_tuple(3, 3, seed);
        const auto& profile = hilbert_profile(3, 3);
        EXPECT_EQ(orthogonal_complement(ideal_piece(w, profile.socle)).dim(), 1u);
        const auto b = associated_form(w);
        for (int k = 2; k <= profile.socle; ++k) EXPECT_EQ(apolar_piece(b.form, k).dim(), profile.b(k));
        // Above the socle both sides are everything.
        EXPECT_EQ(apolar_piece(b.form, profile.socle + 1), ideal_piece(w, profile.socle + 1));
    }
}

TEST(VerifyInverseSystem, RequiresCompleteIntersection) {
    const GeneratorTuple cone(2, 3, {P("x0^2", 2), P("x0*x1", 2), P("x0*x2", 2)});
    EXPECT_THROW(verify_inverse_system(cone), PreconditionError);
}
