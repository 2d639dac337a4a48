#include "milnor/graded_ideal.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "milnor/error.hpp"

namespace milnor {

int socle_degree(int n, int d) { return (n + 1) * (d - 2); }

GeneratorTuple::GeneratorTuple(int n, int d, std::vector<HomogeneousPolynomial> gens)
    : n_(n), d_(d), gens_(std::move(gens)), span_(Ambient{n, d < 1 ? 0 : d - 1}) {
    if (n < 0) throw InputError("need at least one variable");
    if (d < 2) throw InputError("generator tuples need d >= 2");
    if (gens_.size() != static_cast<std::size_t>(n + 1)) {
        throw InputError("expected " + std::to_string(n + 1) + " generators, got " +
                         std::to_string(gens_.size()));
    }
    for (const auto& g : gens_) {
        if (g.n() != n) throw InputError("generator has wrong variable count");
        if (!g.is_zero() && g.degree() != d - 1) {
            throw InputError("generator of degree " + std::to_string(g.degree()) + ", expected " +
                             std::to_string(d - 1));
        }
    }
    RationalMatrix rows(0, graded_dim(n, d - 1));
    for (const auto& g : gens_) {
        if (g.is_zero()) throw InputError("generators must be linearly independent");
        rows.append_row(g.coords());
    }
    span_ = Subspace::span(Ambient{n, d - 1}, rows);
    if (span_.dim() != gens_.size()) throw InputError("generators must be linearly independent");
}

std::size_t HilbertProfile::a(int k) const {
    if (k < 0 || k >= static_cast<int>(values.size())) return 0;
    return values[static_cast<std::size_t>(k)];
}

std::size_t HilbertProfile::b(int k) const { return graded_dim(n, k) - a(k); }

const HilbertProfile& hilbert_profile(int n, int d) {
    if (n < 1) throw InputError("hilbert profile needs n >= 1");
    if (d < 2) throw InputError("hilbert profile needs d >= 2");
    static std::shared_mutex mutex;
    static std::map<std::pair<int, int>, HilbertProfile> cache;
    const auto key = std::make_pair(n, d);
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    HilbertProfile profile;
    profile.n = n;
    profile.d = d;
    profile.socle = socle_degree(n, d);
    // Multiply out (1 + t + ... + t^{d-2})^{n+1} one factor at a time.
    std::vector<std::size_t> series{1};
    for (int factor = 0; factor <= n; ++factor) {
        std::vector<std::size_t> next(series.size() + static_cast<std::size_t>(d - 2), 0);
        for (std::size_t i = 0; i < series.size(); ++i) {
            for (int j = 0; j <= d - 2; ++j) next[i + static_cast<std::size_t>(j)] += series[i];
        }
        series = std::move(next);
    }
    series.push_back(0);  // a(T+1)
    profile.values = std::move(series);

    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.try_emplace(key, std::move(profile));
    return it->second;
}

Subspace ideal_piece(std::span<const HomogeneousPolynomial> gens, int n, int k) {
    if (k < 0) throw InputError("negative degree");
    const Ambient ambient{n, k};
    RationalMatrix rows(0, ambient.dim());
    std::vector<Rational> row(ambient.dim());
    for (const auto& g : gens) {
        if (g.n() != n) throw InputError("generator has wrong variable count");
        if (g.is_zero() || g.degree() > k) continue;
        for (const auto& u : mono_basis(n, k - g.degree())) {
            std::fill(row.begin(), row.end(), Rational(0));
            for (const auto& [e, c] : g.terms()) row[monomial_rank(e + u)] = c;
            rows.append_row(row);
        }
    }
    return Subspace::span(ambient, rows);
}

Subspace ideal_piece(const GeneratorTuple& w, int k) { return ideal_piece(w.gens(), w.n(), k); }

namespace {

std::vector<HomogeneousPolynomial> partials(const HomogeneousPolynomial& f) {
    std::vector<HomogeneousPolynomial> out;
    out.reserve(static_cast<std::size_t>(f.n() + 1));
    for (int i = 0; i <= f.n(); ++i) out.push_back(partial(f, i));
    return out;
}

}  // namespace

GeneratorTuple jacobian_gens(const HomogeneousPolynomial& f) {
    if (f.degree() < 2) throw InputError("jacobian ideal needs degree >= 2");
    auto parts = partials(f);
    const Subspace spanned = Subspace::span(parts);
    if (spanned.dim() != parts.size()) {
        throw PreconditionError("partial derivatives are linearly dependent (not smooth)");
    }
    return GeneratorTuple(f.n(), f.degree(), std::move(parts));
}

Subspace jacobian_piece(const HomogeneousPolynomial& f, int k) { return ideal_piece(jacobian_gens(f), k); }

bool is_complete_intersection(const GeneratorTuple& w) {
    const Subspace top = ideal_piece(w, w.socle() + 1);
    return top.codim() == 0;
}

bool is_smooth(const HomogeneousPolynomial& f) {
    if (f.degree() < 2) throw InputError("smoothness test needs degree >= 2");
    const auto parts = partials(f);
    if (Subspace::span(parts).dim() != parts.size()) return false;
    return is_complete_intersection(GeneratorTuple(f.n(), f.degree(), parts));
}

}  // namespace milnor
