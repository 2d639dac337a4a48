#include "milnor/inverse_system.hpp"

#include <string>

#include "milnor/error.hpp"

namespace milnor {

HomogeneousPolynomial socle_generator(const Subspace& top_piece) {
    const Subspace line = orthogonal_complement(top_piece);
    if (line.dim() != 1) {
        throw PreconditionError("orthogonal complement of the top piece has dimension " +
                                std::to_string(line.dim()) + ", expected 1");
    }
    return line.basis_polynomials().front().normalized();
}

AssociatedForm associated_form(const GeneratorTuple& w) {
    if (!is_complete_intersection(w)) throw PreconditionError("generators are not a complete intersection");
    AssociatedForm out;
    out.n = w.n();
    out.d = w.d();
    out.socle = w.socle();
    out.form = socle_generator(ideal_piece(w, w.socle()));
    return out;
}

Subspace apolar_piece(const HomogeneousPolynomial& b, int k) {
    if (k < 0) throw InputError("negative degree");
    const Ambient domain{b.n(), k};
    if (k > b.degree()) return Subspace::full(domain);
    const int target_degree = b.degree() - k;
    const auto& sources = mono_basis(b.n(), k);
    // Column j holds the coefficients of ∂^{α_j} B in S_{m-k}.
    RationalMatrix catalecticant(graded_dim(b.n(), target_degree), sources.size());
    for (std::size_t j = 0; j < sources.size(); ++j) {
        const auto image = polar_apply(HomogeneousPolynomial::monomial(sources[j]), b);
        for (const auto& [e, c] : image.terms()) catalecticant(monomial_rank(e), j) = c;
    }
    return kernel(catalecticant, domain);
}

bool verify_inverse_system(const GeneratorTuple& w) {
    const AssociatedForm b = associated_form(w);
    for (int k = 0; k <= b.socle + 1; ++k) {
        if (!(apolar_piece(b.form, k) == ideal_piece(w, k))) return false;
    }
    return true;
}

}  // namespace milnor
