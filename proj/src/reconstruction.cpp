#include "milnor/reconstruction.hpp"

#include <string>

#include "milnor/error.hpp"
#include "milnor/inverse_system.hpp"

namespace milnor {

Subspace FiberResult::subspace() const {
    if (basis.empty()) return Subspace(Ambient{n, d});
    return Subspace::span(basis);
}

Subspace lift_piece(const Subspace& e, int m) {
    const int k = e.ambient().degree;
    if (m < k) throw InputError("cannot lift a piece to a lower degree");
    const int n = e.ambient().n;
    Subspace current = e;
    for (int degree = k; degree < m; ++degree) {
        const Ambient next{n, degree + 1};
        RationalMatrix rows(0, next.dim());
        std::vector<Rational> row(next.dim());
        const auto& sources = mono_basis(n, degree);
        for (std::size_t r = 0; r < current.dim(); ++r) {
            auto vec = current.basis().row(r);
            for (int i = 0; i <= n; ++i) {
                const auto xi = ExponentVector::unit(n, i);
                std::fill(row.begin(), row.end(), Rational(0));
                for (std::size_t c = 0; c < vec.size(); ++c) {
                    if (!is_zero(vec[c])) row[monomial_rank(sources[c] + xi)] = vec[c];
                }
                rows.append_row(row);
            }
        }
        current = Subspace::span(next, rows);
    }
    return current;
}

GeneratorTuple recover_generators(const Subspace& e, int k, int n, int d) {
    const HilbertProfile& profile = hilbert_profile(n, d);
    const int top = profile.socle;
    if (k < d - 1 || k > top) {
        throw InputError("degree k=" + std::to_string(k) + " outside [" + std::to_string(d - 1) + ", " +
                         std::to_string(top) + "]");
    }
    if (!(e.ambient() == Ambient{n, k})) throw InputError("subspace does not live in S_k for the given n, k");
    if (e.dim() != profile.b(k)) {
        throw PreconditionError("piece has dimension " + std::to_string(e.dim()) + ", expected b(k) = " +
                                std::to_string(profile.b(k)));
    }
    const Subspace top_piece = lift_piece(e, top);
    if (lift_piece(top_piece, top + 1).codim() != 0) {
        throw PreconditionError("lifted piece does not fill degree T+1 (not a complete intersection)");
    }
    const HomogeneousPolynomial dual = socle_generator(top_piece);
    const Subspace w_span = apolar_piece(dual, d - 1);
    if (w_span.dim() != static_cast<std::size_t>(n + 1)) {
        throw PreconditionError("apolar piece in degree d-1 has dimension " + std::to_string(w_span.dim()));
    }
    GeneratorTuple w(n, d, w_span.basis_polynomials());
    if (!(ideal_piece(w, k) == e)) {
        throw PreconditionError("subspace is not generated in degree d-1 by a complete intersection");
    }
    return w;
}

FiberResult fiber(const GeneratorTuple& w) {
    const int n = w.n();
    const int d = w.d();
    const Subspace& span = w.span();
    const std::size_t codim = span.codim();
    const auto& monomials = mono_basis(n, d);
    RationalMatrix system((static_cast<std::size_t>(n) + 1) * codim, monomials.size());
    std::vector<Rational> unit(span.ambient().dim());
    for (std::size_t j = 0; j < monomials.size(); ++j) {
        for (int i = 0; i <= n; ++i) {
            const int power = monomials[j][static_cast<std::size_t>(i)];
            if (power == 0) continue;
            const auto lowered = monomials[j] - ExponentVector::unit(n, i);
            std::fill(unit.begin(), unit.end(), Rational(0));
            unit[monomial_rank(lowered)] = power;
            const auto residue = span.quotient_coords(unit);
            for (std::size_t c = 0; c < codim; ++c) {
                system(static_cast<std::size_t>(i) * codim + c, j) = residue[c];
            }
        }
    }
    const Subspace solutions = kernel(system, Ambient{n, d});
    FiberResult out;
    out.n = n;
    out.d = d;
    out.basis = solutions.basis_polynomials();
    return out;
}

FiberResult reconstruct_poly(const Subspace& e, int k, int n, int d) {
    return fiber(recover_generators(e, k, n, d));
}

Subspace jacobian_span_piece(const HomogeneousPolynomial& h, int k) {
    std::vector<HomogeneousPolynomial> parts;
    for (int i = 0; i <= h.n(); ++i) parts.push_back(partial(h, i));
    return ideal_piece(parts, h.n(), k);
}

ContainmentCheck containment_implies_equal(const HomogeneousPolynomial& h, const HomogeneousPolynomial& f,
                                           int k) {
    if (h.is_zero()) throw InputError("h must be nonzero");
    if (h.n() != f.n() || h.degree() != f.degree()) throw InputError("h and f must live in the same S_d");
    const int d = f.degree();
    if (!is_smooth(f)) throw PreconditionError("f is not smooth");
    const int top = socle_degree(f.n(), d);
    if (k < d - 1 || k > top) throw InputError("degree k outside [d-1, T]");
    const GeneratorTuple w = jacobian_gens(f);
    if (fiber(w).s() != 1) throw PreconditionError("f is a direct sum");

    ContainmentCheck out;
    out.hypothesis = contains(ideal_piece(w, k), jacobian_span_piece(h, k));
    out.conclusion = h.normalized() == f.normalized();
    return out;
}

}  // namespace milnor
