#include "milnor/subspace.hpp"

#include <utility>

#include "milnor/error.hpp"

namespace milnor {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (!(a.ambient() == b.ambient())) throw InputError("subspaces live in different ambient spaces");
}

}  // namespace

Subspace::Subspace(Ambient ambient) : ambient_(ambient), basis_(0, ambient.dim()) {}

Subspace::Subspace(Ambient ambient, RationalMatrix basis, std::vector<std::size_t> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::full(Ambient ambient) {
    return Subspace(ambient, RationalMatrix::identity(ambient.dim()), [&] {
        std::vector<std::size_t> p(ambient.dim());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
        return p;
    }());
}

Subspace Subspace::span(Ambient ambient, const RationalMatrix& vectors) {
    if (vectors.cols() != ambient.dim()) {
        throw InputError("vectors have length " + std::to_string(vectors.cols()) + ", ambient has dim " +
                         std::to_string(ambient.dim()));
    }
    RationalMatrix reduced = rref(vectors);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (; r < reduced.rows(); ++r) {
        auto row = reduced.row(r);
        std::size_t c = 0;
        while (c < row.size() && is_zero(row[c])) ++c;
        if (c == row.size()) break;
        pivots.push_back(c);
    }
    reduced.truncate_rows(r);
    return Subspace(ambient, std::move(reduced), std::move(pivots));
}

Subspace Subspace::span(Ambient ambient, const std::vector<std::vector<Rational>>& vectors) {
    return span(ambient, RationalMatrix::from_rows(vectors, ambient.dim()));
}

Subspace Subspace::span(std::span<const HomogeneousPolynomial> polys) {
    if (polys.empty()) throw InputError("cannot infer the ambient of an empty spanning set");
    const Ambient ambient{polys.front().n(), polys.front().degree()};
    RationalMatrix m(0, ambient.dim());
    for (const auto& p : polys) {
        if (p.n() != ambient.n) throw InputError("variable count mismatch in spanning set");
        if (p.is_zero()) continue;
        if (p.degree() != ambient.degree) throw InputError("degree mismatch in spanning set");
        m.append_row(p.coords());
    }
    return span(ambient, m);
}

Subspace Subspace::from_rref(Ambient ambient, RationalMatrix basis) {
    Subspace out = span(ambient, basis);
    if (!(out.basis_ == basis)) throw InputError("basis is not in reduced row-echelon form");
    return out;
}

std::vector<std::size_t> Subspace::free_columns() const {
    std::vector<std::size_t> out;
    out.reserve(codim());
    std::size_t p = 0;
    for (std::size_t c = 0; c < ambient_.dim(); ++c) {
        if (p < pivots_.size() && pivots_[p] == c) {
            ++p;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<HomogeneousPolynomial> Subspace::basis_polynomials() const {
    std::vector<HomogeneousPolynomial> out;
    out.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r) {
        out.push_back(HomogeneousPolynomial::from_coords(ambient_.n, ambient_.degree, basis_.row(r)));
    }
    return out;
}

std::vector<Rational> Subspace::reduce(std::span<const Rational> v) const {
    if (v.size() != ambient_.dim()) throw InputError("vector does not live in this ambient");
    std::vector<Rational> out(v.begin(), v.end());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const Rational factor = out[pivots_[r]];
        if (is_zero(factor)) continue;
        auto row = basis_.row(r);
        for (std::size_t c = pivots_[r]; c < row.size(); ++c) {
            if (!is_zero(row[c])) out[c] -= factor * row[c];
        }
    }
    return out;
}

std::vector<Rational> Subspace::quotient_coords(std::span<const Rational> v) const {
    const auto reduced = reduce(v);
    std::vector<Rational> out;
    out.reserve(codim());
    for (std::size_t c : free_columns()) out.push_back(reduced[c]);
    return out;
}

bool Subspace::contains_vector(std::span<const Rational> v) const {
    const auto reduced = reduce(v);
    for (const auto& q : reduced) {
        if (!is_zero(q)) return false;
    }
    return true;
}

bool Subspace::contains_polynomial(const HomogeneousPolynomial& f) const {
    if (f.is_zero()) return true;
    if (f.n() != ambient_.n || f.degree() != ambient_.degree) {
        throw InputError("polynomial does not live in this ambient");
    }
    return contains_vector(f.coords());
}

Subspace kernel(const RationalMatrix& m, Ambient domain) {
    if (m.cols() != domain.dim()) throw InputError("map domain does not match ambient");
    const RationalMatrix vectors = nullspace(m);
    return Subspace::span(domain, vectors);
}

Subspace image(const RationalMatrix& m, Ambient codomain) {
    if (m.rows() != codomain.dim()) throw InputError("map codomain does not match ambient");
    return Subspace::span(codomain, m.transpose());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    RationalMatrix stacked = a.basis();
    for (std::size_t r = 0; r < b.dim(); ++r) stacked.append_row(b.basis().row(r));
    return Subspace::span(a.ambient(), stacked);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    // Zassenhaus: reduce [a | a ; b | 0]; rows whose left half vanishes carry
    // a basis of the intersection in their right half.
    const std::size_t dim = a.ambient().dim();
    RationalMatrix block(0, 2 * dim);
    std::vector<Rational> row(2 * dim);
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < dim; ++c) row[c] = row[dim + c] = a.basis()(r, c);
        block.append_row(row);
    }
    for (std::size_t r = 0; r < b.dim(); ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            row[c] = b.basis()(r, c);
            row[dim + c] = 0;
        }
        block.append_row(row);
    }
    const RationalMatrix reduced = rref(block);
    RationalMatrix meet(0, dim);
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        auto full = reduced.row(r);
        bool left_zero = true;
        for (std::size_t c = 0; c < dim && left_zero; ++c) left_zero = is_zero(full[c]);
        if (!left_zero) continue;
        meet.append_row(full.subspan(dim));
    }
    return Subspace::span(a.ambient(), meet);
}

bool contains(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    if (b.dim() > a.dim()) return false;
    for (std::size_t r = 0; r < b.dim(); ++r) {
        if (!a.contains_vector(b.basis().row(r))) return false;
    }
    return true;
}

bool equal(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    return a == b;
}

Subspace orthogonal_complement(const Subspace& e) {
    const auto& monomials = mono_basis(e.ambient().n, e.ambient().degree);
    RationalMatrix weighted = e.basis();
    for (std::size_t c = 0; c < weighted.cols(); ++c) {
        const Rational weight(Integer(std::to_string(monomials[c].factorial())));
        if (weight == 1) continue;
        for (std::size_t r = 0; r < weighted.rows(); ++r) weighted(r, c) *= weight;
    }
    return kernel(weighted, e.ambient());
}

}  // namespace milnor
