#include <gtest/gtest.h>

#include <random>

#include "milnor/deformation.hpp"
#include "milnor/error.hpp"
#include "milnor/poly_io.hpp"
#include "milnor/st_analysis.hpp"
#include "oracles.hpp"

using namespace milnor;

namespace {

HomogeneousPolynomial P(const char* text, int n) { return parse_polynomial(text, n); }

GeneratorTuple squares() { return GeneratorTuple(2, 3, {P("x0^2", 2), P("x1^2", 2), P("x2^2", 2)}); }

// Kernel of the f-differential by a second route: h is in the kernel iff
// m·∂_i h ∈ E_k(f) for every monomial m of degree k-d+1 and every i, i.e.
// E_k(h) ⊆ E_k(f). Solved over all of S_d, then f's line is removed.
std::size_t f_kernel_by_products(const HomogeneousPolynomial& f, int k) {
    const int n = f.n();
    const int d = f.degree();
    const auto piece = jacobian_piece(f, k);
    const auto& shifts = mono_basis(n, k - d + 1);
    const auto& sources = mono_basis(n, d);
    const std::size_t codim = piece.codim();
    RationalMatrix system((static_cast<std::size_t>(n) + 1) * shifts.size() * codim, sources.size());
    for (std::size_t j = 0; j < sources.size(); ++j) {
        const auto h = HomogeneousPolynomial::monomial(sources[j]);
        std::size_t row = 0;
        for (int i = 0; i <= n; ++i) {
            const auto dh = partial(h, i);
            for (const auto& u : shifts) {
                const auto image = multiply(HomogeneousPolynomial::monomial(u), dh);
                const auto coords = image.is_zero() ? std::vector<Rational>(codim)
                                                    : piece.quotient_coords(image.coords());
                for (std::size_t c = 0; c < codim; ++c) system(row + c, j) = coords[c];
                row += codim;
            }
        }
    }
    return nullspace(system).rows() - 1;
}

// Same idea for W: h in the kernel iff m·h_i ∈ (I_W)_k for all m, i.
std::size_t w_kernel_by_products(const GeneratorTuple& w, int k) {
    const int n = w.n();
    const auto piece = ideal_piece(w, k);
    const auto& shifts = mono_basis(n, k - w.d() + 1);
    const auto free = w.span().free_columns();
    const auto& lows = mono_basis(n, w.d() - 1);
    const std::size_t codim = piece.codim();
    const std::size_t tangent = (static_cast<std::size_t>(n) + 1) * free.size();
    // Columns (i, c); the condition on slot i only involves h_i.
    RationalMatrix system((static_cast<std::size_t>(n) + 1) * shifts.size() * codim, tangent);
    for (int i = 0; i <= n; ++i) {
        for (std::size_t c = 0; c < free.size(); ++c) {
            const std::size_t col = static_cast<std::size_t>(i) * free.size() + c;
            for (std::size_t s = 0; s < shifts.size(); ++s) {
                const auto image = multiply(HomogeneousPolynomial::monomial(shifts[s]),
                                            HomogeneousPolynomial::monomial(lows[free[c]]));
                const auto coords = piece.quotient_coords(image.coords());
                const std::size_t base = (static_cast<std::size_t>(i) * shifts.size() + s) * codim;
                for (std::size_t r = 0; r < codim; ++r) system(base + r, col) = coords[r];
            }
        }
    }
    return nullspace(system).rows();
}

}  // namespace

TEST(RepresentPiece, CoefficientsReproduceBasisAndSyzygiesVanish) {
    for (const auto& [n, d, k] : std::vector<std::tuple<int, int, int>>{{2, 4, 6}, {3, 3, 4}, {2, 3, 3}}) {
        const auto w = random_ci_tuple(n, d, 5);
        const auto rep = represent_piece(w, k);
        EXPECT_EQ(rep.piece, ideal_piece(w, k));
        ASSERT_EQ(rep.coefficients.size(), rep.piece.dim());
        const auto basis = rep.piece.basis_polynomials();
        for (std::size_t j = 0; j < basis.size(); ++j) {
            EXPECT_EQ(apply_representation(rep.coefficients[j], w.gens()), basis[j]);
        }
        for (const auto& syz : rep.syzygies) EXPECT_TRUE(apply_representation(syz, w.gens()).is_zero());
        // Koszul count: syzygies in degree k exist only from 2(d-1) on.
        const std::size_t products = static_cast<std::size_t>(n + 1) * graded_dim(n, k - d + 1);
        EXPECT_EQ(rep.syzygies.size(), products - rep.piece.dim());
        if (k < 2 * (d - 1)) EXPECT_TRUE(rep.syzygies.empty());
    }
}

TEST(TangentVectorW, CanonicalRepresentative) {
    const auto w = squares();
    const TangentVectorW inside(w, {P("x0^2 + x1^2", 2), P("3*x2^2", 2), HomogeneousPolynomial(2, 2)});
    EXPECT_TRUE(inside.is_zero());
    const TangentVectorW mixed(w, {P("x0^2 + x1*x2", 2), HomogeneousPolynomial(2, 2), HomogeneousPolynomial(2, 2)});
    EXPECT_EQ(mixed.components()[0], P("x1*x2", 2));
}

TEST(TangentVectorF, CanonicalRepresentative) {
    const auto f = P("x0^3 + x1^3 + x2^3", 2);
    const TangentVectorF h(f, P("2*x0^3 + x0*x1*x2", 2));
    EXPECT_EQ(h.representative(), P("x0*x1*x2 - 2*x1^3 - 2*x2^3", 2));
    EXPECT_TRUE(h.representative().coeff(f.leading_monomial()) == 0);
    EXPECT_TRUE(TangentVectorF(f, f * Rational(5)).representative().is_zero());
}

TEST(TangentImageW, Examples) {
    const auto w = squares();
    const HomogeneousPolynomial zero(2, 2);
    EXPECT_TRUE(tangent_image_W(w, TangentVectorW(w, {zero, zero, zero}), 3).is_zero());
    EXPECT_TRUE(tangent_image_W(w, TangentVectorW(w, {P("x1^2", 2), P("x0^2", 2), zero}), 3).is_zero());
    const auto m = tangent_image_W(w, TangentVectorW(w, {P("x1*x2", 2), zero, zero}), 3);
    EXPECT_GT(rank(m), 0u);
    EXPECT_EQ(m.rows(), 1u);  // a(3) = 1
    EXPECT_EQ(m.cols(), 9u);  // b(3) = 9
}

TEST(TangentImageW, Preconditions) {
    const GeneratorTuple cone(2, 3, {P("x0^2", 2), P("x0*x1", 2), P("x0*x2", 2)});
    const HomogeneousPolynomial zero(2, 2);
    EXPECT_THROW(tangent_image_W(cone, TangentVectorW(cone, {zero, zero, zero}), 3), PreconditionError);
    EXPECT_THROW(tangent_image_W(squares(), TangentVectorW(squares(), {zero, zero, zero}), 4), InputError);
}

TEST(TangentImageW, WellDefinedAcrossRepresentations) {
    std::mt19937_64 rng(77);
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 12; ++seed) {
        const auto w = random_ci_tuple(2, 4, seed);
        const auto rep = represent_piece(w, 6);
        ASSERT_FALSE(rep.syzygies.empty());
        std::vector<HomogeneousPolynomial> h;
        for (int i = 0; i <= 2; ++i) h.push_back(random_form(2, 3, seed * 10 + static_cast<std::uint64_t>(i), 3));
        const auto j = rng() % rep.coefficients.size();
        auto alt = rep.coefficients[j];
        for (const auto& syz : rep.syzygies) {
            const Rational c(static_cast<long>(rng() % 5) - 2);
            for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = alt[i] + syz[i] * c;
        }
        ASSERT_EQ(apply_representation(alt, w.gens()), apply_representation(rep.coefficients[j], w.gens()));
        const auto diff = apply_representation(alt, h) - apply_representation(rep.coefficients[j], h);
        EXPECT_TRUE(rep.piece.contains_polynomial(diff));
        ++checked;
    }
}

TEST(DpsiWKernel, MonomialSquares) {
    const auto w = squares();
    for (int k = 2; k <= 3; ++k) {
        const auto ker = dpsi_W_kernel(w, k);
        EXPECT_EQ(ker.tangent_dim, 3u * (6u - 3u));
        EXPECT_EQ(ker.kernel_dim, 0u) << k;
        EXPECT_EQ(ker.kernel_dim, w_kernel_by_products(w, k));
    }
}

TEST(DpsiWKernel, RandomQuarticTuplesAgreeWithProductRoute) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto w = random_ci_tuple(2, 4, seed);
        for (int k = 3; k <= 6; ++k) {
            const auto ker = dpsi_W_kernel(w, k);
            EXPECT_EQ(ker.kernel_dim, 0u);
            EXPECT_EQ(ker.kernel_dim, w_kernel_by_products(w, k));
        }
    }
}

TEST(DpsiWKernel, RejectsNonCompleteIntersection) {
    const GeneratorTuple cone(2, 3, {P("x0^2", 2), P("x0*x1", 2), P("x0*x2", 2)});
    EXPECT_THROW(dpsi_W_kernel(cone, 3), PreconditionError);
}

TEST(DpsiFKernel, FermatCubicContainsFiberDirections) {
    const auto f = P("x0^3 + x1^3 + x2^3", 2);
    const auto ker = dpsi_f_kernel(f, 2);
    EXPECT_EQ(ker.tangent_dim, 9u);
    EXPECT_GE(ker.kernel_dim, 2u);
    EXPECT_EQ(ker.kernel_dim, f_kernel_by_products(f, 2));
    // x0^3 mod f lies in the kernel.
    const auto piece = jacobian_piece(f, 2);
    EXPECT_TRUE(contains(piece, jacobian_span_piece(P("x0^3", 2), 2)));
    for (const auto& v : ker.basis) EXPECT_TRUE(contains(piece, jacobian_span_piece(v.front(), 2)));
}

TEST(DpsiFKernel, RandomNonSTQuarticsAreInjective) {
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
        const auto f = random_smooth(2, 4, seed, true);
        for (int k = 3; k <= 6; ++k) {
            const auto ker = dpsi_f_kernel(f, k);
            EXPECT_EQ(ker.kernel_dim, 0u) << k;
            EXPECT_EQ(ker.kernel_dim, f_kernel_by_products(f, k));
        }
    }
}

TEST(DpsiFKernel, AtLeastFiberMinusOne) {
    const auto g = random_smooth(1, 4, 2, true);
    const std::vector<HomogeneousPolynomial> forms{embed(g, 2, 0) + P("x2^4", 2), P("x0^4 + x1^4 + x2^4", 2),
                                                   random_smooth(2, 4, 4, true)};
    for (const auto& f : forms) {
        const auto s = st_report(f).s;
        for (int k = 3; k <= 6; ++k) {
            const auto ker = dpsi_f_kernel(f, k);
            EXPECT_GE(ker.kernel_dim + 1, s);
            EXPECT_EQ(ker.kernel_dim, f_kernel_by_products(f, k));
        }
    }
}

TEST(DpsiFKernel, Preconditions) {
    EXPECT_THROW(dpsi_f_kernel(P("x0^3 + x1^3 + x2^3 - 3*x0*x1*x2", 2), 2), PreconditionError);
    EXPECT_THROW(dpsi_f_kernel(P("x0^3 + x1^3 + x2^3", 2), 1), InputError);
}

TEST(Perturb, MovingOffTheKernelChangesThePiece) {
    const auto w = random_ci_tuple(2, 4, 1);
    const std::vector<HomogeneousPolynomial> h{P("x0*x1*x2", 2), HomogeneousPolynomial(2, 3), P("x1^3", 2)};
    ASSERT_FALSE(TangentVectorW(w, h).is_zero());
    for (const Rational t : {Rational(1, 10), Rational(1, 1000)}) {
        const auto wt = perturb(w, h, t);
        ASSERT_TRUE(is_complete_intersection(wt));
        for (int k = 3; k <= 6; ++k) EXPECT_NE(ideal_piece(wt, k), ideal_piece(w, k));
    }
}
