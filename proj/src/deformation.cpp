#include "milnor/deformation.hpp"

#include <string>
#include <utility>

#include "milnor/error.hpp"

namespace milnor {

namespace {

void require_range(int n, int d, int k) {
    const int top = socle_degree(n, d);
    if (k < d - 1 || k > top) {
        throw InputError("degree k=" + std::to_string(k) + " outside [" + std::to_string(d - 1) + ", " +
                         std::to_string(top) + "]");
    }
}

// Splits a row of length (n+1)·dim S_m into n+1 forms of degree m.
std::vector<HomogeneousPolynomial> split_tuple(std::span<const Rational> row, int n, int m) {
    const std::size_t block = graded_dim(n, m);
    std::vector<HomogeneousPolynomial> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        out.push_back(HomogeneousPolynomial::from_coords(n, m, row.subspan(static_cast<std::size_t>(i) * block, block)));
    }
    return out;
}

}  // namespace

PieceRepresentation represent_piece(const GeneratorTuple& w, int k) {
    const int n = w.n();
    const int shift = k - (w.d() - 1);
    if (shift < 0) throw InputError("degree below the generator degree");
    const Ambient ambient{n, k};
    const auto& multipliers = mono_basis(n, shift);

    // Row (i, u) holds u·g_i; the row order matches split_tuple.
    RationalMatrix products(0, ambient.dim());
    std::vector<Rational> row(ambient.dim());
    for (const auto& g : w.gens()) {
        for (const auto& u : multipliers) {
            std::fill(row.begin(), row.end(), Rational(0));
            for (const auto& [e, c] : g.terms()) row[monomial_rank(e + u)] = c;
            products.append_row(row);
        }
    }
    TrackedEchelon echelon = rref_with_transform(products);

    PieceRepresentation out;
    out.k = k;
    out.piece = Subspace::from_rref(ambient, std::move(echelon.reduced));
    for (std::size_t r = 0; r < echelon.transform.rows(); ++r) {
        out.coefficients.push_back(split_tuple(echelon.transform.row(r), n, shift));
    }
    for (std::size_t r = 0; r < echelon.left_kernel.rows(); ++r) {
        out.syzygies.push_back(split_tuple(echelon.left_kernel.row(r), n, shift));
    }
    return out;
}

HomogeneousPolynomial apply_representation(const std::vector<HomogeneousPolynomial>& u,
                                           const std::vector<HomogeneousPolynomial>& h) {
    if (u.size() != h.size() || u.empty()) throw InputError("tuple length mismatch");
    HomogeneousPolynomial out(u.front().n(), u.front().degree() + h.front().degree());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero() || h[i].is_zero()) continue;
        out = out + multiply(u[i], h[i]);
    }
    return out;
}

TangentVectorW::TangentVectorW(const GeneratorTuple& w, std::vector<HomogeneousPolynomial> h) {
    if (h.size() != w.gens().size()) throw InputError("tangent vector needs one component per generator");
    const Subspace& span = w.span();
    for (auto& component : h) {
        if (component.is_zero()) {
            h_.emplace_back(w.n(), w.d() - 1);
            continue;
        }
        if (component.n() != w.n() || component.degree() != w.d() - 1) {
            throw InputError("tangent component must be a form of degree d-1");
        }
        const auto reduced = span.reduce(component.coords());
        h_.push_back(HomogeneousPolynomial::from_coords(w.n(), w.d() - 1, reduced));
    }
}

bool TangentVectorW::is_zero() const {
    for (const auto& c : h_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

TangentVectorF::TangentVectorF(const HomogeneousPolynomial& f, const HomogeneousPolynomial& h) : h_(h) {
    if (h.is_zero()) {
        h_ = HomogeneousPolynomial(f.n(), f.degree());
        return;
    }
    if (h.n() != f.n() || h.degree() != f.degree()) throw InputError("tangent vector must live in S_d");
    const auto& lead = f.leading_monomial();
    const Rational ratio = h.coeff(lead) / f.leading_coeff();
    if (!milnor::is_zero(ratio)) h_ = h - f * ratio;
}

RationalMatrix tangent_image_W(const PieceRepresentation& rep, const TangentVectorW& h) {
    const Subspace& piece = rep.piece;
    RationalMatrix out(piece.codim(), piece.dim());
    for (std::size_t j = 0; j < rep.coefficients.size(); ++j) {
        const auto image = apply_representation(rep.coefficients[j], h.components());
        if (image.is_zero()) continue;
        const auto coords = piece.quotient_coords(image.coords());
        for (std::size_t r = 0; r < coords.size(); ++r) out(r, j) = coords[r];
    }
    return out;
}

RationalMatrix tangent_image_W(const GeneratorTuple& w, const TangentVectorW& h, int k) {
    require_range(w.n(), w.d(), k);
    if (!is_complete_intersection(w)) throw PreconditionError("generators are not a complete intersection");
    return tangent_image_W(represent_piece(w, k), h);
}

namespace {

// Stacks, for each tangent basis vector, the quotient images of all basis
// vectors of the piece into one column of the global matrix.
RationalMatrix assemble(const PieceRepresentation& rep,
                        const std::vector<std::vector<HomogeneousPolynomial>>& tangent_basis) {
    const Subspace& piece = rep.piece;
    const std::size_t codim = piece.codim();
    RationalMatrix global(piece.dim() * codim, tangent_basis.size());
    for (std::size_t t = 0; t < tangent_basis.size(); ++t) {
        for (std::size_t j = 0; j < rep.coefficients.size(); ++j) {
            const auto image = apply_representation(rep.coefficients[j], tangent_basis[t]);
            if (image.is_zero()) continue;
            const auto coords = piece.quotient_coords(image.coords());
            for (std::size_t r = 0; r < codim; ++r) global(j * codim + r, t) = coords[r];
        }
    }
    return global;
}

std::vector<std::vector<HomogeneousPolynomial>> combine(
    const RationalMatrix& kernel_rows, const std::vector<std::vector<HomogeneousPolynomial>>& tangent_basis) {
    std::vector<std::vector<HomogeneousPolynomial>> out;
    for (std::size_t r = 0; r < kernel_rows.rows(); ++r) {
        std::vector<HomogeneousPolynomial> v;
        for (const auto& proto : tangent_basis.front()) v.emplace_back(proto.n(), proto.degree());
        for (std::size_t t = 0; t < tangent_basis.size(); ++t) {
            const Rational& c = kernel_rows(r, t);
            if (is_zero(c)) continue;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] + tangent_basis[t][i] * c;
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

TangentKernel dpsi_W_kernel(const GeneratorTuple& w, int k) {
    require_range(w.n(), w.d(), k);
    if (!is_complete_intersection(w)) throw PreconditionError("generators are not a complete intersection");
    const int n = w.n();
    const int m = w.d() - 1;
    const auto& monomials = mono_basis(n, m);

    // Hom(W, S_{d-1}/W): g_i ↦ a monomial outside the pivots of span(W).
    std::vector<std::vector<HomogeneousPolynomial>> tangent_basis;
    for (int i = 0; i <= n; ++i) {
        for (std::size_t c : w.span().free_columns()) {
            std::vector<HomogeneousPolynomial> h(static_cast<std::size_t>(n + 1), HomogeneousPolynomial(n, m));
            h[static_cast<std::size_t>(i)] = HomogeneousPolynomial::monomial(monomials[c]);
            tangent_basis.push_back(std::move(h));
        }
    }

    TangentKernel out;
    out.k = k;
    out.tangent_dim = tangent_basis.size();
    if (tangent_basis.empty()) return out;
    const RationalMatrix kernel_rows = nullspace(assemble(represent_piece(w, k), tangent_basis));
    out.kernel_dim = kernel_rows.rows();
    if (out.kernel_dim > 0) out.basis = combine(kernel_rows, tangent_basis);
    return out;
}

TangentKernel dpsi_f_kernel(const HomogeneousPolynomial& f, int k) {
    if (f.degree() < 2) throw InputError("need degree >= 2");
    require_range(f.n(), f.degree(), k);
    if (!is_smooth(f)) throw PreconditionError("f is not smooth");
    const int n = f.n();
    const GeneratorTuple w = jacobian_gens(f);
    const auto& lead = f.leading_monomial();

    // S_d/ℂf: every monomial except the leading one of f. The tangent
    // vector h acts through its partials.
    std::vector<std::vector<HomogeneousPolynomial>> tangent_basis;
    std::vector<std::vector<HomogeneousPolynomial>> tangent_partials;
    for (const auto& e : mono_basis(n, f.degree())) {
        if (e == lead) continue;
        const auto h = HomogeneousPolynomial::monomial(e);
        tangent_basis.push_back({h});
        std::vector<HomogeneousPolynomial> parts;
        for (int i = 0; i <= n; ++i) parts.push_back(partial(h, i));
        tangent_partials.push_back(std::move(parts));
    }

    TangentKernel out;
    out.k = k;
    out.tangent_dim = tangent_basis.size();
    const RationalMatrix kernel_rows = nullspace(assemble(represent_piece(w, k), tangent_partials));
    out.kernel_dim = kernel_rows.rows();
    if (out.kernel_dim > 0) out.basis = combine(kernel_rows, tangent_basis);
    return out;
}

GeneratorTuple perturb(const GeneratorTuple& w, const std::vector<HomogeneousPolynomial>& h, const Rational& t) {
    if (h.size() != w.gens().size()) throw InputError("perturbation needs one component per generator");
    std::vector<HomogeneousPolynomial> gens;
    for (std::size_t i = 0; i < h.size(); ++i) gens.push_back(w.gens()[i] + h[i] * t);
    return GeneratorTuple(w.n(), w.d(), std::move(gens));
}

}  // namespace milnor
