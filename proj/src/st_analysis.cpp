#include "milnor/st_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "milnor/error.hpp"

namespace milnor {

namespace {

// Uniform enough for fixture generation and identical across standard libraries.
int draw(std::mt19937_64& rng, int bound) {
    if (bound <= 0) return 0;
    const auto width = static_cast<std::uint64_t>(2 * bound + 1);
    return static_cast<int>(rng() % width) - bound;
}

HomogeneousPolynomial perturbation(int n, int degree, std::mt19937_64& rng, int bound) {
    HomogeneousPolynomial::TermMap terms;
    for (const auto& e : mono_basis(n, degree)) {
        const int c = draw(rng, bound);
        if (c != 0) terms.emplace(e, c);
    }
    return HomogeneousPolynomial(n, degree, std::move(terms));
}

HomogeneousPolynomial fermat(int n, int degree) {
    HomogeneousPolynomial out(n, degree);
    for (int i = 0; i <= n; ++i) out = out + HomogeneousPolynomial::monomial(ExponentVector::unit(n, i, degree));
    return out;
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

}  // namespace

STReport st_report(const HomogeneousPolynomial& f) {
    if (!is_smooth(f)) throw PreconditionError("f is not smooth");
    STReport out;
    out.fiber = fiber(jacobian_gens(f));
    out.s = out.fiber.s();
    out.is_st = out.s >= 2;
    return out;
}

std::vector<std::vector<int>> coordinate_split(const HomogeneousPolynomial& f) {
    const int n = f.n();
    std::vector<int> parent(static_cast<std::size_t>(n + 1));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [e, c] : f.terms()) {
        int first = -1;
        for (int i = 0; i <= n; ++i) {
            if (e[static_cast<std::size_t>(i)] == 0) continue;
            if (first < 0) {
                first = i;
            } else {
                parent[static_cast<std::size_t>(find_root(parent, i))] = find_root(parent, first);
            }
        }
    }
    std::vector<std::vector<int>> parts;
    std::vector<int> part_of_root(static_cast<std::size_t>(n + 1), -1);
    for (int i = 0; i <= n; ++i) {
        const int root = find_root(parent, i);
        auto& slot = part_of_root[static_cast<std::size_t>(root)];
        if (slot < 0) {
            slot = static_cast<int>(parts.size());
            parts.emplace_back();
        }
        parts[static_cast<std::size_t>(slot)].push_back(i);
    }
    return parts;
}

HomogeneousPolynomial random_smooth(int n, int d, std::uint64_t seed, bool require_non_st, int coeff_bound,
                                    int max_attempts) {
    if (n < 1) throw InputError("random_smooth needs n >= 1");
    if (d < 2) throw InputError("random_smooth needs d >= 2");
    std::mt19937_64 rng(seed);
    const HomogeneousPolynomial base = fermat(n, d);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const HomogeneousPolynomial f = base + perturbation(n, d, rng, coeff_bound);
        if (f.is_zero() || !is_smooth(f)) continue;
        if (require_non_st && fiber(jacobian_gens(f)).s() != 1) continue;
        return f;
    }
    throw PreconditionError("no suitable polynomial found in " + std::to_string(max_attempts) + " attempts");
}

GeneratorTuple random_ci_tuple(int n, int d, std::uint64_t seed, int coeff_bound, int max_attempts) {
    if (n < 1) throw InputError("random_ci_tuple needs n >= 1");
    if (d < 2) throw InputError("random_ci_tuple needs d >= 2");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<HomogeneousPolynomial> gens;
        for (int i = 0; i <= n; ++i) {
            gens.push_back(HomogeneousPolynomial::monomial(ExponentVector::unit(n, i, d - 1)) +
                           perturbation(n, d - 1, rng, coeff_bound));
        }
        const bool independent =
            std::none_of(gens.begin(), gens.end(), [](const auto& g) { return g.is_zero(); }) &&
            Subspace::span(gens).dim() == gens.size();
        if (!independent) continue;
        GeneratorTuple w(n, d, std::move(gens));
        if (is_complete_intersection(w)) return w;
    }
    throw PreconditionError("no complete intersection found in " + std::to_string(max_attempts) + " attempts");
}

HomogeneousPolynomial random_form(int n, int degree, std::uint64_t seed, int coeff_bound) {
    if (coeff_bound <= 0) throw InputError("random_form needs a positive coefficient bound");
    std::mt19937_64 rng(seed);
    for (;;) {
        auto f = perturbation(n, degree, rng, coeff_bound);
        if (!f.is_zero()) return f;
    }
}

std::vector<std::vector<Rational>> random_unimodular(int n, std::uint64_t seed, int steps) {
    const auto size = static_cast<std::size_t>(n + 1);
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i) a[i][i] = 1;
    if (n == 0) return a;
    std::mt19937_64 rng(seed);
    for (int step = 0; step < steps; ++step) {
        const auto target = static_cast<std::size_t>(rng() % size);
        auto source = static_cast<std::size_t>(rng() % (size - 1));
        if (source >= target) ++source;
        int factor = draw(rng, 2);
        if (factor == 0) factor = 1;
        // row_target += factor * row_source keeps the determinant
        for (std::size_t c = 0; c < size; ++c) a[target][c] += factor * a[source][c];
    }
    return a;
}

}  // namespace milnor
